//! Test-only helpers: random graph strategies and a bitmask brute force that
//! shares no code with the solvers it checks.

use proptest::prelude::*;

use crate::graph::WeightedGraph;
use crate::vertex_set::VertexSet;
use crate::weight::Weight;

/// Graphs on up to `max_n` vertices with small integer weights (ties and
/// zero weights are common on purpose).
pub(crate) fn arb_graph(max_n: usize) -> impl Strategy<Value = WeightedGraph> {
    arb_graph_weighted(max_n, 5)
}

/// As [`arb_graph`], with integer weights in `0..=max_w`.
pub(crate) fn arb_graph_weighted(max_n: usize, max_w: u64) -> impl Strategy<Value = WeightedGraph> {
    (0..=max_n).prop_flat_map(move |n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let m = pairs.len();
        (
            proptest::collection::vec(0u64..=max_w, n),
            proptest::collection::vec(any::<bool>(), m),
        )
            .prop_map(move |(ws, mask)| {
                let edges: Vec<_> = pairs
                    .iter()
                    .zip(mask)
                    .filter(|(_, keep)| *keep)
                    .map(|(&e, _)| e)
                    .collect();
                WeightedGraph::new(ws.into_iter().map(Weight::from).collect(), &edges).unwrap()
            })
    })
}

/// Checks every one of the `2^n` bitmasks directly against the edge list.
pub(crate) fn brute_force_alpha_sets(g: &WeightedGraph) -> (Weight, Vec<VertexSet>) {
    let n = g.n();
    assert!(n <= 20);
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut best = Weight::zero();
    let mut sets: Vec<VertexSet> = Vec::new();
    for mask in 0u32..(1 << n) {
        if edges
            .iter()
            .any(|&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
        {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let w: Weight = members.iter().map(|&v| g.weight(v)).sum();
        if sets.is_empty() || w > best {
            best = w;
            sets = vec![VertexSet::from_vertices(n, members).unwrap()];
        } else if w == best {
            sets.push(VertexSet::from_vertices(n, members).unwrap());
        }
    }
    sets.sort();
    (best, sets)
}

/// All independent sets with their weights, by bitmask.
pub(crate) fn brute_force_independent_sets(g: &WeightedGraph) -> Vec<(VertexSet, Weight)> {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (0u32..(1 << n))
        .filter(|mask| {
            !edges
                .iter()
                .any(|&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
        })
        .map(|mask| {
            let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let w: Weight = members.iter().map(|&v| g.weight(v)).sum();
            (VertexSet::from_vertices(n, members).unwrap(), w)
        })
        .collect()
}
