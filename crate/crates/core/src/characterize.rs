//! Uniqueness tests for a maximum-weight independent set.
//!
//! Given a graph and one of its α-sets `I`, each check decides whether `I` is
//! the only α-set:
//!
//! | method       | condition                                                    |
//! |--------------|--------------------------------------------------------------|
//! | `Deletion`   | `α(G ∖ {x}) < α(G)` for every `x ∈ I`                        |
//! | `PocketSum`  | `w(p(I₀)) < w(I₀)` for every nonempty `I₀ ⊆ I` (sufficient)  |
//! | `Tree`       | the `PocketSum` condition, which is exact on trees           |
//! | `PocketMwis` | `w(m(I₀)) < w(I₀)`, `m(I₀)` an MWIS of the pocket `p(I₀)`    |
//! | `Boundary`   | `w(N(J) ∩ I) > w(J)` for every nonempty independent `J ⊆ V∖I`|
//!
//! Here `p(I₀) = N(I₀) ∖ N(I ∖ I₀)`. Every negative verdict carries a
//! [`Witness`] that [`verify_witness`] re-checks with exact arithmetic.
//!
//! With zero weights two degenerate ties escape the conditions. A zero-weight
//! vertex with no neighbour in `I` extends `I` to a second α-set; the
//! deletion and pocket conditions never look at it. A zero-weight member of
//! `I` can be dropped to give a second α-set; the boundary condition never
//! looks at it. Each check therefore tests for its blind tie first and
//! reports it as an alternate α-set.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::line_graph::EdgeWeightedGraph;
use crate::solver::{
    enumerate_alpha_sets, for_each_independent_subset, solve_bnb, solve_oracle,
    weighted_matching_oracle, Limits, MwisResult,
};
use crate::vertex_set::VertexSet;
use crate::weight::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Exhaustive α-set enumeration.
    Oracle,
    /// Vertex deletion: every member of `I` is essential.
    Deletion,
    /// Pocket weight below subset weight; sound but not complete.
    PocketSum,
    /// Pocket weight condition on trees, where it is exact.
    Tree,
    /// Pocket MWIS weight below subset weight.
    PocketMwis,
    /// Boundary weight of outside independent sets.
    Boundary,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Oracle,
        Method::Deletion,
        Method::PocketSum,
        Method::Tree,
        Method::PocketMwis,
        Method::Boundary,
    ];

    /// Command-line name.
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Deletion => "thm1",
            Method::PocketSum => "lemma1",
            Method::Tree => "tree",
            Method::PocketMwis => "thm3",
            Method::Boundary => "thm4",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::input(format!("unknown method {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Unique,
    NotUnique,
    /// The sufficient condition holds, so the α-set is unique.
    ConditionHolds,
    /// The sufficient condition fails; uniqueness is undecided.
    ConditionFails,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Unique => "unique",
            Verdict::NotUnique => "not-unique",
            Verdict::ConditionHolds => "condition-holds",
            Verdict::ConditionFails => "condition-fails",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `α(G ∖ {vertex}) = reduced_alpha ≥ α(G)`.
    DeletionSurvivor {
        vertex: usize,
        reduced_alpha: Weight,
    },
    /// A nonempty `subset ⊆ I` whose bounding set weighs at least as much.
    /// `bound_set` is the pocket itself (`PocketSum`, `Tree`) or an MWIS of
    /// the pocket (`PocketMwis`).
    ViolatingSubset {
        subset: VertexSet,
        bound_set: VertexSet,
        subset_weight: Weight,
        bound_weight: Weight,
    },
    /// A nonempty independent `set ⊆ V ∖ I` with
    /// `w(boundary) ≤ w(set)`, where `boundary = N(set) ∩ I`.
    BoundaryViolation {
        set: VertexSet,
        boundary: VertexSet,
        set_weight: Weight,
        boundary_weight: Weight,
    },
    /// A second α-set.
    AlternateAlphaSet { set: VertexSet },
}

impl Witness {
    pub fn kind(&self) -> &'static str {
        match self {
            Witness::DeletionSurvivor { .. } => "deletion-survivor",
            Witness::ViolatingSubset { .. } => "violating-subset",
            Witness::BoundaryViolation { .. } => "boundary-violation",
            Witness::AlternateAlphaSet { .. } => "alternate-alpha-set",
        }
    }

    /// One-line description using the graph's labels.
    pub fn describe(&self, g: &WeightedGraph) -> String {
        match self {
            Witness::DeletionSurvivor {
                vertex,
                reduced_alpha,
            } => format!(
                "deleting {} leaves alpha {}",
                g.label(*vertex),
                reduced_alpha
            ),
            Witness::ViolatingSubset {
                subset,
                bound_set,
                subset_weight,
                bound_weight,
            } => format!(
                "I0 = {} (weight {}) is matched by {} (weight {})",
                g.format_set(subset),
                subset_weight,
                g.format_set(bound_set),
                bound_weight
            ),
            Witness::BoundaryViolation {
                set,
                boundary,
                set_weight,
                boundary_weight,
            } => format!(
                "J = {} (weight {}) has boundary {} (weight {})",
                g.format_set(set),
                set_weight,
                g.format_set(boundary),
                boundary_weight
            ),
            Witness::AlternateAlphaSet { set } => {
                format!(
                    "{} is another maximum-weight independent set",
                    g.format_set(set)
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniquenessReport {
    pub method: Method,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub alpha_set: VertexSet,
    pub alpha: Weight,
}

impl UniquenessReport {
    /// `Some(true)` when uniqueness is established, `Some(false)` when it is
    /// refuted, `None` when a sufficient condition merely failed.
    pub fn is_unique(&self) -> Option<bool> {
        match self.verdict {
            Verdict::Unique | Verdict::ConditionHolds => Some(true),
            Verdict::NotUnique => Some(false),
            Verdict::ConditionFails => match self.witness {
                Some(Witness::AlternateAlphaSet { .. }) => Some(false),
                _ => None,
            },
        }
    }

    fn positive(method: Method, verdict: Verdict, alpha_set: &VertexSet, alpha: Weight) -> Self {
        UniquenessReport {
            method,
            verdict,
            witness: None,
            alpha_set: alpha_set.clone(),
            alpha,
        }
    }

    fn negative(
        method: Method,
        verdict: Verdict,
        witness: Witness,
        alpha_set: &VertexSet,
        alpha: Weight,
    ) -> Self {
        UniquenessReport {
            method,
            verdict,
            witness: Some(witness),
            alpha_set: alpha_set.clone(),
            alpha,
        }
    }
}

/// Confirms `i` is an α-set of `g` (via branch and bound) and returns α.
pub fn verify_alpha_set(g: &WeightedGraph, i: &VertexSet) -> Result<Weight> {
    g.check_set(i)?;
    if !g.is_independent(i) {
        return Err(Error::input(format!(
            "{} is not independent",
            g.format_set(i)
        )));
    }
    let alpha = solve_bnb(g).alpha;
    let weight = g.set_weight(i);
    if weight != alpha {
        return Err(Error::input(format!(
            "{} has weight {weight}, below the maximum {alpha}",
            g.format_set(i)
        )));
    }
    Ok(alpha)
}

/// Nonempty subsets by ascending size, lexicographic within a size.
fn nonempty_subsets(set: &VertexSet) -> impl Iterator<Item = VertexSet> + '_ {
    let members = set.to_vec();
    let universe = set.universe();
    (1..=members.len()).flat_map(move |k| {
        members
            .clone()
            .into_iter()
            .combinations(k)
            .map(move |c| VertexSet::from_vertices(universe, c).expect("members in range"))
    })
}

/// `I ∪ {v}` for the smallest `v ∉ I` with no neighbour in `I`, if any.
fn extension(g: &WeightedGraph, i: &VertexSet) -> Option<VertexSet> {
    (0..g.n())
        .find(|&v| !i.contains(v) && g.neighbors(v).is_disjoint(i))
        .map(|v| {
            let mut bigger = i.clone();
            bigger.insert(v);
            bigger
        })
}

/// Ground truth: enumerate all α-sets. Reports the smallest α-set, plus
/// the second one as witness when there are several.
pub fn check_oracle(g: &WeightedGraph, limits: &Limits) -> Result<UniquenessReport> {
    let family = enumerate_alpha_sets(g, limits)?;
    let first = &family.sets[0];
    Ok(match family.sets.get(1) {
        None => UniquenessReport::positive(Method::Oracle, Verdict::Unique, first, family.alpha),
        Some(second) => UniquenessReport::negative(
            Method::Oracle,
            Verdict::NotUnique,
            Witness::AlternateAlphaSet {
                set: second.clone(),
            },
            first,
            family.alpha,
        ),
    })
}

/// Oracle verdict relative to a given α-set: the witness is the first other
/// α-set.
pub fn check_oracle_against(
    g: &WeightedGraph,
    i: &VertexSet,
    limits: &Limits,
) -> Result<UniquenessReport> {
    g.check_set(i)?;
    let family = enumerate_alpha_sets(g, limits)?;
    if !family.sets.contains(i) {
        return Err(Error::input(format!(
            "{} is not a maximum-weight independent set",
            g.format_set(i)
        )));
    }
    Ok(match family.sets.iter().find(|s| *s != i) {
        None => UniquenessReport::positive(Method::Oracle, Verdict::Unique, i, family.alpha),
        Some(other) => UniquenessReport::negative(
            Method::Oracle,
            Verdict::NotUnique,
            Witness::AlternateAlphaSet { set: other.clone() },
            i,
            family.alpha,
        ),
    })
}

/// Unique iff deleting any member of `i` strictly lowers α.
pub fn check_deletion(g: &WeightedGraph, i: &VertexSet) -> Result<UniquenessReport> {
    let alpha = verify_alpha_set(g, i)?;
    if let Some(set) = extension(g, i) {
        let w = Witness::AlternateAlphaSet { set };
        return Ok(UniquenessReport::negative(
            Method::Deletion,
            Verdict::NotUnique,
            w,
            i,
            alpha,
        ));
    }
    for x in i {
        let reduced_alpha = solve_bnb(&g.without_vertex(x).graph).alpha;
        if reduced_alpha >= alpha {
            return Ok(UniquenessReport::negative(
                Method::Deletion,
                Verdict::NotUnique,
                Witness::DeletionSurvivor {
                    vertex: x,
                    reduced_alpha,
                },
                i,
                alpha,
            ));
        }
    }
    Ok(UniquenessReport::positive(
        Method::Deletion,
        Verdict::Unique,
        i,
        alpha,
    ))
}

/// First nonempty `I₀ ⊆ i` with `w(p(I₀)) ≥ w(I₀)`.
fn pocket_sum_violation(g: &WeightedGraph, i: &VertexSet) -> Option<Witness> {
    nonempty_subsets(i).find_map(|subset| {
        let pocket = g.pocket_unchecked(&subset, i);
        let subset_weight = g.set_weight(&subset);
        let bound_weight = g.set_weight(&pocket);
        (bound_weight >= subset_weight).then_some(Witness::ViolatingSubset {
            subset,
            bound_set: pocket,
            subset_weight,
            bound_weight,
        })
    })
}

/// Sufficient condition: `w(p(I₀)) < w(I₀)` for all nonempty `I₀ ⊆ i`.
/// `ConditionFails` does not imply non-uniqueness, except when the witness
/// is an alternate α-set.
pub fn check_pocket_sum(
    g: &WeightedGraph,
    i: &VertexSet,
    limits: &Limits,
) -> Result<UniquenessReport> {
    let alpha = verify_alpha_set(g, i)?;
    limits.check_subset("alpha set", i.len())?;
    let method = Method::PocketSum;
    if let Some(set) = extension(g, i) {
        let w = Witness::AlternateAlphaSet { set };
        return Ok(UniquenessReport::negative(
            method,
            Verdict::ConditionFails,
            w,
            i,
            alpha,
        ));
    }
    Ok(match pocket_sum_violation(g, i) {
        Some(w) => UniquenessReport::negative(method, Verdict::ConditionFails, w, i, alpha),
        None => UniquenessReport::positive(method, Verdict::ConditionHolds, i, alpha),
    })
}

/// The pocket-sum condition on a tree, where it decides uniqueness.
pub fn check_tree(t: &WeightedGraph, i: &VertexSet, limits: &Limits) -> Result<UniquenessReport> {
    if !t.is_tree() {
        return Err(Error::input(
            "graph is not a tree; use the thm3 or thm4 check for general graphs",
        ));
    }
    let alpha = verify_alpha_set(t, i)?;
    limits.check_subset("alpha set", i.len())?;
    let method = Method::Tree;
    if let Some(set) = extension(t, i) {
        let w = Witness::AlternateAlphaSet { set };
        return Ok(UniquenessReport::negative(
            method,
            Verdict::NotUnique,
            w,
            i,
            alpha,
        ));
    }
    Ok(match pocket_sum_violation(t, i) {
        Some(w) => UniquenessReport::negative(method, Verdict::NotUnique, w, i, alpha),
        None => UniquenessReport::positive(method, Verdict::Unique, i, alpha),
    })
}

/// `m(I₀)`: a maximum-weight independent set of the pocket of `i0`
/// relative to `ambient`, in `g`'s indices.
pub fn max_pocket_set(
    g: &WeightedGraph,
    i0: &VertexSet,
    ambient: &VertexSet,
) -> Result<MwisResult> {
    let pocket = g.pocket(i0, ambient)?;
    Ok(pocket_mwis(g, &pocket))
}

pub(crate) fn pocket_mwis(g: &WeightedGraph, pocket: &VertexSet) -> MwisResult {
    let sub = g.induced_subgraph(pocket);
    let best = solve_bnb(&sub.graph);
    MwisResult {
        alpha: best.alpha,
        witness: sub.lift(&best.witness),
    }
}

/// Unique iff `w(m(I₀)) < w(I₀)` for every nonempty `I₀ ⊆ i`.
pub fn check_pocket_mwis(
    g: &WeightedGraph,
    i: &VertexSet,
    limits: &Limits,
) -> Result<UniquenessReport> {
    let alpha = verify_alpha_set(g, i)?;
    limits.check_subset("alpha set", i.len())?;
    let method = Method::PocketMwis;
    if let Some(set) = extension(g, i) {
        let w = Witness::AlternateAlphaSet { set };
        return Ok(UniquenessReport::negative(
            method,
            Verdict::NotUnique,
            w,
            i,
            alpha,
        ));
    }
    for subset in nonempty_subsets(i) {
        let pocket = g.pocket_unchecked(&subset, i);
        let m = pocket_mwis(g, &pocket);
        let subset_weight = g.set_weight(&subset);
        if m.alpha >= subset_weight {
            // Swapping I₀ for m(I₀) yields another independent set at least as heavy.
            let swapped = &(i - &subset) | &m.witness;
            assert!(
                g.is_independent(&swapped) && g.set_weight(&swapped) >= alpha,
                "pocket exchange must give an alternative maximum set"
            );
            let w = Witness::ViolatingSubset {
                subset,
                bound_set: m.witness,
                subset_weight,
                bound_weight: m.alpha,
            };
            return Ok(UniquenessReport::negative(
                method,
                Verdict::NotUnique,
                w,
                i,
                alpha,
            ));
        }
    }
    Ok(UniquenessReport::positive(
        method,
        Verdict::Unique,
        i,
        alpha,
    ))
}

/// Unique iff every nonempty independent `J ⊆ V ∖ i` satisfies
/// `w(N(J) ∩ i) > w(J)`. The reported violation is the smallest by size,
/// then lexicographically.
pub fn check_boundary(
    g: &WeightedGraph,
    i: &VertexSet,
    limits: &Limits,
) -> Result<UniquenessReport> {
    let alpha = verify_alpha_set(g, i)?;
    let outside = i.complement();
    limits.check_subset("alpha set complement", outside.len())?;
    if let Some(x) = i.iter().find(|&x| g.weight(x).is_zero()) {
        let mut smaller = i.clone();
        smaller.remove(x);
        let w = Witness::AlternateAlphaSet { set: smaller };
        return Ok(UniquenessReport::negative(
            Method::Boundary,
            Verdict::NotUnique,
            w,
            i,
            alpha,
        ));
    }

    let mut worst: Option<Witness> = None;
    for_each_independent_subset(g, &outside, |set, set_weight| {
        if set.is_empty() {
            return;
        }
        if let Some(Witness::BoundaryViolation { set: best, .. }) = &worst {
            if (best.len(), best) <= (set.len(), set) {
                return;
            }
        }
        let boundary = &g.set_neighborhood(set) & i;
        let boundary_weight = g.set_weight(&boundary);
        if boundary_weight <= *set_weight {
            worst = Some(Witness::BoundaryViolation {
                set: set.clone(),
                boundary,
                set_weight: set_weight.clone(),
                boundary_weight,
            });
        }
    });
    let method = Method::Boundary;
    Ok(match worst {
        Some(w) => UniquenessReport::negative(method, Verdict::NotUnique, w, i, alpha),
        None => UniquenessReport::positive(method, Verdict::Unique, i, alpha),
    })
}

/// Runs `method` against `i`.
pub fn check(
    method: Method,
    g: &WeightedGraph,
    i: &VertexSet,
    limits: &Limits,
) -> Result<UniquenessReport> {
    match method {
        Method::Oracle => check_oracle_against(g, i, limits),
        Method::Deletion => check_deletion(g, i),
        Method::PocketSum => check_pocket_sum(g, i, limits),
        Method::Tree => check_tree(g, i, limits),
        Method::PocketMwis => check_pocket_mwis(g, i, limits),
        Method::Boundary => check_boundary(g, i, limits),
    }
}

/// Matching uniqueness through the line graph: `m` (edge indices) must be a
/// maximum-weight matching; the deletion check then runs on the line graph.
/// The report's sets are over edge indices.
pub fn check_unique_matching(
    g: &EdgeWeightedGraph,
    m: &[usize],
    limits: &Limits,
) -> Result<UniquenessReport> {
    for &e in m {
        if e >= g.edge_count() {
            return Err(Error::EdgeOutOfRange {
                edge: e,
                m: g.edge_count(),
            });
        }
    }
    if !g.is_matching(m) {
        return Err(Error::input("edge set is not a matching"));
    }
    let best = weighted_matching_oracle(g, limits)?;
    let weight = g.matching_weight(m);
    if weight != best.weight {
        return Err(Error::input(format!(
            "matching has weight {weight}, below the maximum {}",
            best.weight
        )));
    }
    let line = g.line_graph();
    let set = VertexSet::from_vertices(line.n(), m.iter().copied())?;
    check_deletion(&line, &set)
}

fn alpha_of(g: &WeightedGraph, limits: &Limits) -> Weight {
    match solve_oracle(g, limits) {
        Ok(r) => r.alpha,
        Err(_) => solve_bnb(g).alpha,
    }
}

/// Independently re-checks a report: the α-set and α against the oracle
/// (branch and bound above the oracle cap), and the witness inequality
/// with exact arithmetic. Reports without a witness verify trivially.
pub fn verify_witness(g: &WeightedGraph, report: &UniquenessReport, limits: &Limits) -> bool {
    let i = &report.alpha_set;
    if i.universe() != g.n() || !g.is_independent(i) || g.set_weight(i) != report.alpha {
        return false;
    }
    let alpha = alpha_of(g, limits);
    if alpha != report.alpha {
        return false;
    }
    let Some(witness) = &report.witness else {
        return true;
    };
    match witness {
        Witness::DeletionSurvivor {
            vertex,
            reduced_alpha,
        } => {
            i.contains(*vertex)
                && alpha_of(&g.without_vertex(*vertex).graph, limits) == *reduced_alpha
                && *reduced_alpha >= alpha
        }
        Witness::ViolatingSubset {
            subset,
            bound_set,
            subset_weight,
            bound_weight,
        } => {
            if subset.is_empty()
                || !subset.is_subset(i)
                || g.set_weight(subset) != *subset_weight
                || g.set_weight(bound_set) != *bound_weight
                || bound_weight < subset_weight
            {
                return false;
            }
            let pocket = g.pocket_unchecked(subset, i);
            match report.method {
                Method::PocketMwis => {
                    let swapped = &(i - subset) | bound_set;
                    bound_set.is_subset(&pocket)
                        && g.is_independent(bound_set)
                        && g.is_independent(&swapped)
                        && g.set_weight(&swapped) >= alpha
                }
                _ => *bound_set == pocket,
            }
        }
        Witness::BoundaryViolation {
            set,
            boundary,
            set_weight,
            boundary_weight,
        } => {
            let swapped = &(i - &g.set_neighborhood(set)) | set;
            !set.is_empty()
                && set.is_disjoint(i)
                && g.is_independent(set)
                && *boundary == &g.set_neighborhood(set) & i
                && g.set_weight(set) == *set_weight
                && g.set_weight(boundary) == *boundary_weight
                && boundary_weight <= set_weight
                && g.is_independent(&swapped)
                && g.set_weight(&swapped) >= alpha
        }
        Witness::AlternateAlphaSet { set } => {
            set != i && g.is_independent(set) && g.set_weight(set) == alpha
        }
    }
}
