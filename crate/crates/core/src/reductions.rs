//! Gadget constructions reducing WEIGHTED INDEPENDENT SET ("does G have an
//! independent set of weight at least k?") to the two uniqueness problems:
//!
//! * `UI1`: is a given set the unique α-set? Built by [`reduce_ui1`].
//! * `UI2`: does the graph have a unique α-set? Built by [`reduce_ui2`].
//!
//! `k` is encoded in unary as gadget size, so instances grow linearly in `k`.
//! Gadget vertices are appended after the original ones.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::solver::{enumerate_alpha_sets, solve_oracle, Limits};
use crate::vertex_set::VertexSet;
use crate::weight::Weight;

/// Where a vertex of the constructed graph came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    Original(usize),
    /// Member of the added independent set.
    GadgetI,
    /// One of the two adjacent unit vertices.
    GadgetR,
}

#[derive(Clone, Debug)]
pub struct Ui1Instance {
    pub graph: WeightedGraph,
    /// The `k` added vertices.
    pub candidate: VertexSet,
    pub origin: Vec<Origin>,
}

#[derive(Clone, Debug)]
pub struct Ui2Instance {
    pub graph: WeightedGraph,
    /// The `k + 1` added vertices joined to everything else.
    pub gadget_i: VertexSet,
    /// The two added vertices joined to each other.
    pub gadget_r: VertexSet,
    pub origin: Vec<Origin>,
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::input("k must be at least 1"));
    }
    Ok(())
}

/// Fresh labels `stem1, stem2, ...`, primed until they avoid `taken`.
fn gadget_labels(taken: &mut HashSet<String>, stem: &str, count: usize) -> Vec<String> {
    (1..=count)
        .map(|j| {
            let mut label = format!("{stem}{j}");
            while taken.contains(&label) {
                label.push('\'');
            }
            taken.insert(label.clone());
            label
        })
        .collect()
}

fn original_labels(g: &WeightedGraph) -> Vec<String> {
    (0..g.n()).map(|v| g.label(v)).collect()
}

/// `H = G` joined to `k` pairwise non-adjacent unit-weight vertices; the
/// candidate is the added set. The candidate is the unique α-set of `H` iff
/// `G` has no independent set of weight at least `k`.
pub fn reduce_ui1(g: &WeightedGraph, k: usize) -> Result<Ui1Instance> {
    check_k(k)?;
    let n = g.n();
    let mut weights = g.weights().to_vec();
    weights.extend(std::iter::repeat_n(Weight::one(), k));
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for added in n..n + k {
        edges.extend((0..n).map(|v| (v, added)));
    }
    let mut labels = original_labels(g);
    let mut taken: HashSet<String> = labels.iter().cloned().collect();
    labels.extend(gadget_labels(&mut taken, "i", k));

    let graph = WeightedGraph::new(weights, &edges)?.with_labels(labels)?;
    let candidate = VertexSet::from_vertices(n + k, n..n + k)?;
    let mut origin: Vec<Origin> = (0..n).map(Origin::Original).collect();
    origin.extend(std::iter::repeat_n(Origin::GadgetI, k));
    Ok(Ui1Instance {
        graph,
        candidate,
        origin,
    })
}

/// `H` adds a set `I` of `k + 1` unit vertices and a set `R` of two unit
/// vertices: `I` is joined to every vertex of `V(G) ∪ R`, and the two `R`
/// vertices are adjacent. The largest independent set of `H` weighs
/// `max(k, α(G)) + 1`, and `H` has a unique α-set iff `α(G) < k`.
pub fn reduce_ui2(g: &WeightedGraph, k: usize) -> Result<Ui2Instance> {
    check_k(k)?;
    let n = g.n();
    let i_range = n..n + k + 1;
    let r = (n + k + 1, n + k + 2);
    let total = n + k + 3;

    let mut weights = g.weights().to_vec();
    weights.extend(std::iter::repeat_n(Weight::one(), k + 3));
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for i in i_range.clone() {
        edges.extend((0..n).map(|v| (v, i)));
        edges.push((i, r.0));
        edges.push((i, r.1));
    }
    edges.push(r);

    let mut labels = original_labels(g);
    let mut taken: HashSet<String> = labels.iter().cloned().collect();
    labels.extend(gadget_labels(&mut taken, "i", k + 1));
    labels.extend(gadget_labels(&mut taken, "r", 2));

    let graph = WeightedGraph::new(weights, &edges)?.with_labels(labels)?;
    let mut origin: Vec<Origin> = (0..n).map(Origin::Original).collect();
    origin.extend(std::iter::repeat_n(Origin::GadgetI, k + 1));
    origin.extend([Origin::GadgetR, Origin::GadgetR]);
    Ok(Ui2Instance {
        graph,
        gadget_i: VertexSet::from_vertices(total, i_range)?,
        gadget_r: VertexSet::from_vertices(total, [r.0, r.1])?,
        origin,
    })
}

/// Decides "G has an independent set of weight at least k" with the oracle.
pub fn has_independent_set_of_weight(g: &WeightedGraph, k: usize, limits: &Limits) -> Result<bool> {
    Ok(solve_oracle(g, limits)?.alpha >= Weight::from(k as u64))
}

/// Both sides of the `UI1` equivalence, each decided by the oracle:
/// `(G has weight ≥ k, candidate is not the unique α-set of H)`.
pub fn ui1_sides(g: &WeightedGraph, k: usize, limits: &Limits) -> Result<(bool, bool)> {
    let inst = reduce_ui1(g, k)?;
    let family = enumerate_alpha_sets(&inst.graph, limits)?;
    let not_unique_candidate = family.sets != [inst.candidate];
    Ok((
        has_independent_set_of_weight(g, k, limits)?,
        not_unique_candidate,
    ))
}

/// Both sides of the `UI2` equivalence: `(G has weight ≥ k, H has several
/// α-sets)`.
pub fn ui2_sides(g: &WeightedGraph, k: usize, limits: &Limits) -> Result<(bool, bool)> {
    let inst = reduce_ui2(g, k)?;
    let family = enumerate_alpha_sets(&inst.graph, limits)?;
    Ok((
        has_independent_set_of_weight(g, k, limits)?,
        !family.is_unique(),
    ))
}

/// True iff the `UI1` equivalence holds for `(g, k)`.
pub fn verify_reduction_ui1(g: &WeightedGraph, k: usize, limits: &Limits) -> Result<bool> {
    let (lhs, rhs) = ui1_sides(g, k, limits)?;
    Ok(lhs == rhs)
}

/// True iff the `UI2` equivalence holds for `(g, k)`.
pub fn verify_reduction_ui2(g: &WeightedGraph, k: usize, limits: &Limits) -> Result<bool> {
    let (lhs, rhs) = ui2_sides(g, k, limits)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::solve_bnb;
    use crate::testutil::{arb_graph_weighted, brute_force_alpha_sets};
    use proptest::prelude::*;

    fn k2_threes() -> WeightedGraph {
        WeightedGraph::new(vec![Weight::from(3), Weight::from(3)], &[(0, 1)]).unwrap()
    }

    #[test]
    fn ui1_examples() {
        let limits = Limits::default();
        let g = k2_threes();

        let h = reduce_ui1(&g, 3).unwrap();
        assert_eq!((h.graph.n(), h.graph.edge_count()), (5, 1 + 2 * 3));
        assert_eq!(h.graph.set_weight(&h.candidate), Weight::from(3));
        let (_, sets) = brute_force_alpha_sets(&h.graph);
        let expected = vec![
            VertexSet::singleton(5, 0),
            VertexSet::singleton(5, 1),
            h.candidate.clone(),
        ];
        assert_eq!(sets, expected);
        assert_eq!(ui1_sides(&g, 3, &limits).unwrap(), (true, true));

        let h = reduce_ui1(&g, 4).unwrap();
        let (_, sets) = brute_force_alpha_sets(&h.graph);
        assert_eq!(sets, vec![h.candidate.clone()]);
        assert_eq!(ui1_sides(&g, 4, &limits).unwrap(), (false, false));

        let zero = WeightedGraph::edgeless(vec![Weight::zero()]);
        let h = reduce_ui1(&zero, 1).unwrap();
        assert_eq!(h.graph.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(h.graph.weights(), &[Weight::zero(), Weight::one()]);
        assert!(verify_reduction_ui1(&zero, 1, &limits).unwrap());
        assert_eq!(h.origin, vec![Origin::Original(0), Origin::GadgetI]);
    }

    #[test]
    fn ui2_examples() {
        let limits = Limits::default();
        let g = k2_threes();

        let h = reduce_ui2(&g, 3).unwrap();
        let (alpha, sets) = brute_force_alpha_sets(&h.graph);
        assert_eq!(alpha, Weight::from(4));
        assert!(sets.len() >= 2);
        assert_eq!(h.graph.set_weight(&h.gadget_i), Weight::from(4));
        assert!(verify_reduction_ui2(&g, 3, &limits).unwrap());

        let h = reduce_ui2(&g, 4).unwrap();
        let (alpha, sets) = brute_force_alpha_sets(&h.graph);
        assert_eq!(alpha, Weight::from(5));
        assert_eq!(sets, vec![h.gadget_i.clone()]);
        assert!(verify_reduction_ui2(&g, 4, &limits).unwrap());

        let zero = WeightedGraph::edgeless(vec![Weight::zero()]);
        let h = reduce_ui2(&zero, 1).unwrap();
        let (alpha, sets) = brute_force_alpha_sets(&h.graph);
        assert_eq!((alpha, sets), (Weight::from(2), vec![h.gadget_i.clone()]));

        let empty = WeightedGraph::edgeless(vec![]);
        assert!(verify_reduction_ui2(&empty, 1, &limits).unwrap());
        assert_eq!(ui2_sides(&empty, 1, &limits).unwrap(), (false, false));
    }

    #[test]
    fn zero_k_is_rejected() {
        assert!(reduce_ui1(&k2_threes(), 0).is_err());
        assert!(reduce_ui2(&k2_threes(), 0).is_err());
    }

    #[test]
    fn gadget_labels_avoid_collisions() {
        let g = WeightedGraph::edgeless(vec![Weight::one(); 2])
            .with_labels(vec!["i1", "r1"])
            .unwrap();
        let h = reduce_ui2(&g, 1).unwrap();
        assert_eq!(
            h.graph.labels().unwrap(),
            ["i1", "r1", "i1'", "i2", "r1'", "r2"]
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(120))]

        #[test]
        fn gadget_sizes_and_equivalences(g in arb_graph_weighted(6, 2), k_offset in 0usize..4) {
            let limits = Limits::default();
            let (n, m) = (g.n(), g.edge_count());
            let (alpha, _) = brute_force_alpha_sets(&g);
            let k = (alpha.to_f64().floor() as usize + k_offset).max(1);

            let h1 = reduce_ui1(&g, k).unwrap();
            prop_assert_eq!(h1.graph.n(), n + k);
            prop_assert_eq!(h1.graph.edge_count(), m + n * k);
            prop_assert!(verify_reduction_ui1(&g, k, &limits).unwrap());

            let h2 = reduce_ui2(&g, k).unwrap();
            prop_assert_eq!(h2.graph.n(), n + k + 3);
            prop_assert_eq!(h2.graph.edge_count(), m + (k + 1) * (n + 2) + 1);
            prop_assert_eq!(solve_bnb(&h2.graph).alpha, alpha.max(Weight::from(k as u64)) + Weight::one());
            prop_assert!(verify_reduction_ui2(&g, k, &limits).unwrap());
        }
    }
}
