//! Exact maximum-weight independent set solvers.
//!
//! Two independent routes: an exhaustive enumerator over independent sets
//! (the ground-truth oracle, capped) and a branch-and-bound solver used by
//! the characterization checks. Cross-validation compares the two.

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::line_graph::EdgeWeightedGraph;
use crate::vertex_set::VertexSet;
use crate::weight::Weight;

/// Size caps for exhaustive procedures. Exceeding one is an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Vertex cap for the exhaustive oracle.
    pub oracle_vertices: usize,
    /// Cap on the ground set of subset-quantified checks.
    pub subset_size: usize,
    /// Edge cap for the exhaustive matching oracle.
    pub matching_edges: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            oracle_vertices: 30,
            subset_size: 25,
            matching_edges: 30,
        }
    }
}

impl Limits {
    pub(crate) fn check_oracle(&self, n: usize) -> Result<()> {
        if n > self.oracle_vertices {
            return Err(Error::Capacity {
                what: "oracle input graph",
                size: n,
                cap: self.oracle_vertices,
            });
        }
        Ok(())
    }

    pub(crate) fn check_subset(&self, what: &'static str, size: usize) -> Result<()> {
        if size > self.subset_size {
            return Err(Error::Capacity {
                what,
                size,
                cap: self.subset_size,
            });
        }
        Ok(())
    }
}

/// `alpha` is the maximum weight; `witness` one set attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MwisResult {
    pub alpha: Weight,
    pub witness: VertexSet,
}

/// Every maximum-weight independent set, in ascending lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaSetFamily {
    pub alpha: Weight,
    pub sets: Vec<VertexSet>,
}

impl AlphaSetFamily {
    pub fn is_unique(&self) -> bool {
        self.sets.len() == 1
    }
}

/// Calls `visit` once per independent subset of `within` (including the
/// empty set) with its weight. Sets arrive in ascending lexicographic order.
pub fn for_each_independent_subset<F>(g: &WeightedGraph, within: &VertexSet, mut visit: F)
where
    F: FnMut(&VertexSet, &Weight),
{
    let order = within.to_vec();
    let mut current = g.empty_set();
    let blocked = g.empty_set();
    independent_dfs(
        g,
        &order,
        0,
        &mut current,
        &Weight::zero(),
        &blocked,
        &mut visit,
    );
}

fn independent_dfs<F>(
    g: &WeightedGraph,
    order: &[usize],
    from: usize,
    current: &mut VertexSet,
    weight: &Weight,
    blocked: &VertexSet,
    visit: &mut F,
) where
    F: FnMut(&VertexSet, &Weight),
{
    visit(current, weight);
    for (offset, &v) in order[from..].iter().enumerate() {
        if blocked.contains(v) {
            continue;
        }
        current.insert(v);
        let next_weight = weight + g.weight(v);
        let next_blocked = blocked | g.neighbors(v);
        independent_dfs(
            g,
            order,
            from + offset + 1,
            current,
            &next_weight,
            &next_blocked,
            visit,
        );
        current.remove(v);
    }
}

/// Exhaustive oracle. The witness is the lexicographically smallest α-set.
pub fn solve_oracle(g: &WeightedGraph, limits: &Limits) -> Result<MwisResult> {
    limits.check_oracle(g.n())?;
    let mut best: Option<(Weight, VertexSet)> = None;
    for_each_independent_subset(g, &g.full_set(), |set, weight| {
        // Strict improvement only, so the first (smallest) maximizer wins.
        if best.as_ref().is_none_or(|(w, _)| weight > w) {
            best = Some((weight.clone(), set.clone()));
        }
    });
    let (alpha, witness) = best.expect("the empty set is always visited");
    Ok(MwisResult { alpha, witness })
}

/// Complete family of α-sets, by exhaustive enumeration.
pub fn enumerate_alpha_sets(g: &WeightedGraph, limits: &Limits) -> Result<AlphaSetFamily> {
    limits.check_oracle(g.n())?;
    let mut alpha = Weight::zero();
    let mut sets: Vec<VertexSet> = Vec::new();
    for_each_independent_subset(g, &g.full_set(), |set, weight| {
        if sets.is_empty() || *weight > alpha {
            alpha = weight.clone();
            sets.clear();
            sets.push(set.clone());
        } else if *weight == alpha {
            sets.push(set.clone());
        }
    });
    Ok(AlphaSetFamily { alpha, sets })
}

/// Branch and bound: branch on a maximum-degree candidate (include first),
/// prune when the chosen weight plus all remaining candidate weight cannot
/// beat the incumbent.
pub fn solve_bnb(g: &WeightedGraph) -> MwisResult {
    let mut best = MwisResult {
        alpha: Weight::zero(),
        witness: g.empty_set(),
    };
    let mut chosen = g.empty_set();
    bnb(g, g.full_set(), &mut chosen, Weight::zero(), &mut best);
    best
}

fn bnb(
    g: &WeightedGraph,
    mut candidates: VertexSet,
    chosen: &mut VertexSet,
    mut weight: Weight,
    best: &mut MwisResult,
) {
    // Candidates with no candidate neighbours are always safe to take.
    let mut taken = Vec::new();
    let mut branch: Option<(usize, usize)> = None;
    for v in candidates.to_vec() {
        let degree = g.neighbors(v).intersection(&candidates).len();
        if degree == 0 {
            taken.push(v);
        } else if branch.is_none_or(|(_, d)| degree > d) {
            branch = Some((v, degree));
        }
    }
    for &v in &taken {
        candidates.remove(v);
        chosen.insert(v);
        weight += g.weight(v);
    }

    match branch {
        None => {
            if weight > best.alpha {
                best.alpha = weight;
                best.witness = chosen.clone();
            }
        }
        Some((v, _)) => {
            let residual = g.set_weight(&candidates);
            if &weight + &residual > best.alpha {
                let mut with_v = &candidates - g.neighbors(v);
                with_v.remove(v);
                chosen.insert(v);
                bnb(g, with_v, chosen, &weight + g.weight(v), best);
                chosen.remove(v);

                let mut without_v = candidates;
                without_v.remove(v);
                bnb(g, without_v, chosen, weight, best);
            }
        }
    }

    for &v in &taken {
        chosen.remove(v);
    }
}

/// Maximum matching weight and every matching attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingFamily {
    pub weight: Weight,
    /// Sorted edge-index lists, in ascending lexicographic order.
    pub matchings: Vec<Vec<usize>>,
}

/// Exhaustive enumeration of matchings.
pub fn weighted_matching_oracle(g: &EdgeWeightedGraph, limits: &Limits) -> Result<MatchingFamily> {
    if g.edge_count() > limits.matching_edges {
        return Err(Error::Capacity {
            what: "matching oracle edge set",
            size: g.edge_count(),
            cap: limits.matching_edges,
        });
    }
    let mut family = MatchingFamily {
        weight: Weight::zero(),
        matchings: Vec::new(),
    };
    let mut used = vec![false; g.n()];
    let mut current = Vec::new();
    matching_dfs(g, 0, &mut used, &mut current, &Weight::zero(), &mut family);
    Ok(family)
}

fn matching_dfs(
    g: &EdgeWeightedGraph,
    from: usize,
    used: &mut [bool],
    current: &mut Vec<usize>,
    weight: &Weight,
    family: &mut MatchingFamily,
) {
    if family.matchings.is_empty() || *weight > family.weight {
        family.weight = weight.clone();
        family.matchings = vec![current.clone()];
    } else if *weight == family.weight {
        family.matchings.push(current.clone());
    }
    for e in from..g.edge_count() {
        let (u, v) = g.edges()[e];
        if used[u] || used[v] {
            continue;
        }
        used[u] = true;
        used[v] = true;
        current.push(e);
        matching_dfs(
            g,
            e + 1,
            used,
            current,
            &(weight + g.edge_weight(e)),
            family,
        );
        current.pop();
        used[u] = false;
        used[v] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::counterexample;
    use crate::testutil::{arb_graph, brute_force_alpha_sets};
    use proptest::prelude::*;

    fn ints(ws: &[u64]) -> Vec<Weight> {
        ws.iter().map(|&w| Weight::from(w)).collect()
    }

    fn star(center: u64, leaves: &[u64]) -> WeightedGraph {
        let mut ws = vec![center];
        ws.extend_from_slice(leaves);
        let edges: Vec<_> = (1..=leaves.len()).map(|l| (0, l)).collect();
        WeightedGraph::new(ints(&ws), &edges).unwrap()
    }

    #[test]
    fn oracle_on_counterexample() {
        let g = counterexample();
        let r = solve_oracle(&g, &Limits::default()).unwrap();
        assert_eq!(r.alpha, Weight::from(7));
        assert_eq!(r.witness, g.set_from_labels(&["A", "C"]).unwrap());
        assert_eq!(solve_bnb(&g).alpha, Weight::from(7));
        let family = enumerate_alpha_sets(&g, &Limits::default()).unwrap();
        assert_eq!(family.sets, vec![r.witness]);
    }

    #[test]
    fn oracle_trivial_cases() {
        let empty = WeightedGraph::edgeless(vec![]);
        let r = solve_oracle(&empty, &Limits::default()).unwrap();
        assert_eq!((r.alpha, r.witness.len()), (Weight::zero(), 0));

        let k2 = WeightedGraph::new(ints(&[3, 5]), &[(0, 1)]).unwrap();
        let r = solve_oracle(&k2, &Limits::default()).unwrap();
        assert_eq!(r.alpha, Weight::from(5));
        assert_eq!(r.witness.to_vec(), vec![1]);

        let zeros = WeightedGraph::new(ints(&[0, 0, 0]), &[(0, 1)]).unwrap();
        assert_eq!(solve_bnb(&zeros).alpha, Weight::zero());
    }

    #[test]
    fn twins_and_star_families() {
        let twins = WeightedGraph::new(ints(&[1, 1]), &[(0, 1)]).unwrap();
        let f = enumerate_alpha_sets(&twins, &Limits::default()).unwrap();
        assert_eq!(
            f.sets,
            vec![VertexSet::singleton(2, 0), VertexSet::singleton(2, 1)]
        );

        let g = star(3, &[1, 1, 1]);
        let f = enumerate_alpha_sets(&g, &Limits::default()).unwrap();
        assert_eq!(f.sets, brute_force_alpha_sets(&g).1);
        let leaves = VertexSet::from_vertices(4, [1, 2, 3]).unwrap();
        assert_eq!(f.sets, vec![VertexSet::singleton(4, 0), leaves]);
        assert!(!f.is_unique());
    }

    #[test]
    fn zero_weight_isolated_vertex_is_not_unique() {
        let g = WeightedGraph::edgeless(ints(&[2, 0]));
        let f = enumerate_alpha_sets(&g, &Limits::default()).unwrap();
        assert_eq!(f.sets.len(), 2);
    }

    #[test]
    fn oracle_cap_is_enforced() {
        let g = WeightedGraph::edgeless(ints(&[1; 5]));
        let limits = Limits {
            oracle_vertices: 4,
            ..Limits::default()
        };
        let err = solve_oracle(&g, &limits).unwrap_err();
        assert!(err.is_capacity());
        assert!(err.to_string().contains("cap of 4"));
        assert!(enumerate_alpha_sets(&g, &limits).unwrap_err().is_capacity());
    }

    fn ewg(n: usize, edges: &[(usize, usize, u64)]) -> EdgeWeightedGraph {
        EdgeWeightedGraph::new(
            n,
            edges
                .iter()
                .map(|&(u, v, w)| (u, v, Weight::from(w)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn matching_oracle_examples() {
        let limits = Limits::default();
        let path = ewg(3, &[(0, 1, 2), (1, 2, 1)]);
        let f = weighted_matching_oracle(&path, &limits).unwrap();
        assert_eq!((f.weight, f.matchings), (Weight::from(2), vec![vec![0]]));

        let single = ewg(2, &[(0, 1, 5)]);
        let f = weighted_matching_oracle(&single, &limits).unwrap();
        assert_eq!((f.weight, f.matchings), (Weight::from(5), vec![vec![0]]));

        let c4 = ewg(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]);
        let f = weighted_matching_oracle(&c4, &limits).unwrap();
        assert_eq!(
            (f.weight, f.matchings),
            (Weight::from(2), vec![vec![0, 2], vec![1, 3]])
        );

        let tight = Limits {
            matching_edges: 3,
            ..limits
        };
        assert!(weighted_matching_oracle(&c4, &tight)
            .unwrap_err()
            .is_capacity());
    }

    proptest! {
        #[test]
        fn enumeration_matches_brute_force(g in arb_graph(10)) {
            let (alpha, sets) = brute_force_alpha_sets(&g);
            let family = enumerate_alpha_sets(&g, &Limits::default()).unwrap();
            let oracle = solve_oracle(&g, &Limits::default()).unwrap();
            prop_assert_eq!(&family.alpha, &alpha);
            prop_assert_eq!(&family.sets, &sets);
            prop_assert_eq!(&oracle.alpha, &alpha);
            prop_assert_eq!(&oracle.witness, &sets[0]);
        }

        #[test]
        fn bnb_agrees_with_oracle(g in arb_graph(16)) {
            let oracle = solve_oracle(&g, &Limits::default()).unwrap();
            let bnb = solve_bnb(&g);
            prop_assert_eq!(&bnb.alpha, &oracle.alpha);
            prop_assert!(g.is_independent(&bnb.witness));
            prop_assert_eq!(g.set_weight(&bnb.witness), bnb.alpha);
        }

        #[test]
        fn deleting_a_vertex_never_increases_alpha(g in arb_graph(10), pick in any::<prop::sample::Index>()) {
            prop_assume!(g.n() > 0);
            let x = pick.index(g.n());
            let full = solve_bnb(&g).alpha;
            let reduced = solve_bnb(&g.without_vertex(x).graph).alpha;
            prop_assert!(reduced <= full);
        }

        #[test]
        fn matchings_are_line_graph_alpha_sets(
            n in 2usize..7,
            mask in proptest::collection::vec(0u64..4, 21),
        ) {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask[k] > 0 && edges.len() < 8 {
                        edges.push((u, v, Weight::from(mask[k])));
                    }
                    k += 1;
                }
            }
            let g = EdgeWeightedGraph::new(n, edges).unwrap();
            let matchings = weighted_matching_oracle(&g, &Limits::default()).unwrap();
            let line = g.line_graph();
            let family = enumerate_alpha_sets(&line, &Limits::default()).unwrap();
            prop_assert_eq!(&matchings.weight, &family.alpha);
            let as_vecs: Vec<Vec<usize>> = family.sets.iter().map(|s| s.to_vec()).collect();
            prop_assert_eq!(matchings.matchings, as_vecs);
        }
    }
}
