//! Stability radius of a unique maximum-weight independent set.
//!
//! For a graph whose α-set `I` is unique, the radius components are
//!
//! * `sigma = min { w(I₀) - w(m(I₀)) : ∅ ≠ I₀ ⊆ I }`
//! * `eta   = min { w(I) - w(S) : S independent, S ≠ I }`
//! * `nu    = min { w(m(I₀)) - w(J) : ∅ ≠ I₀ ⊆ I, J ⊆ p(I₀) independent, w(J) < w(m(I₀)) }`
//!
//! with `delta` the minimum of the defined components and
//! `epsilon = delta / (n + 1)`. Moving every weight by less than `epsilon`
//! keeps `I` the unique α-set.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::characterize::pocket_mwis;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::solver::{enumerate_alpha_sets, for_each_independent_subset, Limits};
use crate::vertex_set::VertexSet;
use crate::weight::Weight;

/// Offsets are multiples of `epsilon / DEFAULT_GRID`.
pub const DEFAULT_GRID: u32 = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerturbationRadius {
    pub sigma: Weight,
    pub eta: Weight,
    /// Undefined when no pocket holds an independent set lighter than its
    /// maximum, e.g. when every pocket is empty.
    pub nu: Option<Weight>,
    pub delta: Weight,
    pub epsilon: Weight,
    pub n: usize,
}

fn keep_min(slot: &mut Option<Weight>, candidate: Weight) {
    if slot.as_ref().is_none_or(|m| candidate < *m) {
        *slot = Some(candidate);
    }
}

/// Computes the radius for the unique α-set `i`. Uniqueness is confirmed by
/// exhaustive enumeration, so the oracle cap applies.
pub fn compute_radius(
    g: &WeightedGraph,
    i: &VertexSet,
    limits: &Limits,
) -> Result<PerturbationRadius> {
    g.check_set(i)?;
    if g.n() == 0 {
        return Err(Error::input("the empty graph has no perturbation radius"));
    }
    let family = enumerate_alpha_sets(g, limits)?;
    if family.sets != [i.clone()] {
        return Err(Error::input(format!(
            "{} is not the unique maximum-weight independent set ({} α-sets)",
            g.format_set(i),
            family.sets.len()
        )));
    }
    limits.check_subset("alpha set", i.len())?;
    let alpha = family.alpha;

    let mut sigma = None;
    let mut nu = None;
    for k in 1..=i.len() {
        for members in itertools::Itertools::combinations(i.iter(), k) {
            let subset = VertexSet::from_vertices(g.n(), members)?;
            let pocket = g.pocket_unchecked(&subset, i);
            let m = pocket_mwis(g, &pocket);
            let gap = g
                .set_weight(&subset)
                .checked_sub(&m.alpha)
                .expect("unique α-set has positive pocket margins");
            keep_min(&mut sigma, gap);
            for_each_independent_subset(g, &pocket, |_, weight| {
                if let Some(gap) = m.alpha.checked_sub(weight).filter(|d| !d.is_zero()) {
                    keep_min(&mut nu, gap);
                }
            });
        }
    }

    let mut eta = None;
    for_each_independent_subset(g, &g.full_set(), |set, weight| {
        if set != i {
            keep_min(&mut eta, alpha.checked_sub(weight).expect("α is maximal"));
        }
    });

    let sigma = sigma.expect("nonempty graph has a nonempty unique α-set");
    let eta = eta.expect("the empty set differs from a nonempty α-set");
    let mut delta = sigma.clone().min(eta.clone());
    if let Some(nu) = &nu {
        delta = delta.min(nu.clone());
    }
    let epsilon = delta.div_count(g.n() + 1);
    Ok(PerturbationRadius {
        sigma,
        eta,
        nu,
        delta,
        epsilon,
        n: g.n(),
    })
}

/// Moves each weight by `k / grid * epsilon` with `k` uniform in
/// `-(grid-1)..=grid-1`, clamping at zero. Deterministic per seed.
pub fn sample_perturbation_on_grid(
    g: &WeightedGraph,
    epsilon: &Weight,
    seed: u64,
    grid: u32,
) -> Result<WeightedGraph> {
    if epsilon.is_zero() {
        return Err(Error::input("perturbation radius must be positive"));
    }
    if grid == 0 {
        return Err(Error::input("perturbation grid must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = i64::from(grid) - 1;
    let step = epsilon.as_rational() / BigRational::from_integer(BigInt::from(grid));
    let weights = g
        .weights()
        .iter()
        .map(|w| {
            let k = rng.random_range(-span..=span);
            let offset = &step * BigRational::from_integer(BigInt::from(k));
            Weight::clamped(w.as_rational() + offset)
        })
        .collect();
    g.with_weights(weights)
}

pub fn sample_perturbation(
    g: &WeightedGraph,
    epsilon: &Weight,
    seed: u64,
) -> Result<WeightedGraph> {
    sample_perturbation_on_grid(g, epsilon, seed, DEFAULT_GRID)
}

#[derive(Clone, Debug)]
pub struct StabilityFailure {
    pub trial: usize,
    pub seed: u64,
    pub graph: WeightedGraph,
    pub alpha_sets: Vec<VertexSet>,
}

#[derive(Clone, Debug)]
pub struct StabilityReport {
    pub radius: PerturbationRadius,
    pub trials: usize,
    pub passed: usize,
    /// Perturbations whose α-set family was not exactly `{I}`. Any entry
    /// contradicts the stability guarantee and points at a bug.
    pub failures: Vec<StabilityFailure>,
}

impl StabilityReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Samples `trials` perturbations within the radius and re-enumerates the
/// α-sets of each. Trial `t` uses the `t`-th seed drawn from `seed`.
pub fn verify_stability(
    g: &WeightedGraph,
    i: &VertexSet,
    trials: usize,
    seed: u64,
    limits: &Limits,
) -> Result<StabilityReport> {
    let radius = compute_radius(g, i, limits)?;
    let mut seeds = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for trial in 0..trials {
        let trial_seed: u64 = seeds.random();
        let perturbed = sample_perturbation(g, &radius.epsilon, trial_seed)?;
        let family = enumerate_alpha_sets(&perturbed, limits)?;
        if family.sets != [i.clone()] {
            failures.push(StabilityFailure {
                trial,
                seed: trial_seed,
                graph: perturbed,
                alpha_sets: family.sets,
            });
        }
    }
    Ok(StabilityReport {
        radius,
        trials,
        passed: trials - failures.len(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::counterexample;
    use crate::testutil::{arb_graph, brute_force_alpha_sets, brute_force_independent_sets};
    use proptest::prelude::*;

    fn w(n: u64) -> Weight {
        Weight::from(n)
    }

    /// Radius components straight from the definitions, by bitmask
    /// enumeration of independent sets of the graph and of each pocket.
    fn brute_force_radius(g: &WeightedGraph, i: &VertexSet) -> (Weight, Weight, Option<Weight>) {
        let all = brute_force_independent_sets(g);
        let alpha = g.set_weight(i);
        let eta = all
            .iter()
            .filter(|(s, _)| s != i)
            .map(|(_, sw)| alpha.checked_sub(sw).unwrap())
            .min()
            .unwrap();
        let members = i.to_vec();
        let (mut sigma, mut nu) = (None::<Weight>, None::<Weight>);
        for mask in 1u32..(1 << members.len()) {
            let i0 = VertexSet::from_vertices(
                g.n(),
                (0..members.len())
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| members[b]),
            )
            .unwrap();
            let outside = i - &i0;
            let pocket: Vec<usize> = (0..g.n())
                .filter(|&v| {
                    i0.iter().any(|x| g.has_edge(x, v)) && !outside.iter().any(|x| g.has_edge(x, v))
                })
                .collect();
            let pocket_sets: Vec<Weight> = all
                .iter()
                .filter(|(s, _)| s.iter().all(|v| pocket.contains(&v)))
                .map(|(_, sw)| sw.clone())
                .collect();
            let m = pocket_sets.iter().max().unwrap().clone();
            let gap = g.set_weight(&i0).checked_sub(&m).unwrap();
            sigma = Some(sigma.map_or(gap.clone(), |s| s.min(gap)));
            for jw in pocket_sets.iter().filter(|jw| **jw < m) {
                let gap = m.checked_sub(jw).unwrap();
                nu = Some(nu.map_or(gap.clone(), |s| s.min(gap)));
            }
        }
        (sigma.unwrap(), eta, nu)
    }

    #[test]
    fn counterexample_radius() {
        let g = counterexample();
        let ac = g.set_from_labels(&["A", "C"]).unwrap();
        let r = compute_radius(&g, &ac, &Limits::default()).unwrap();
        assert_eq!(brute_force_radius(&g, &ac), (w(1), w(1), Some(w(1))));
        assert_eq!((r.sigma, r.eta, r.nu), (w(1), w(1), Some(w(1))));
        assert_eq!(r.delta, w(1));
        assert_eq!(r.epsilon, Weight::from_ratio(1, 6).unwrap());
    }

    #[test]
    fn single_vertex_radius() {
        let g = WeightedGraph::edgeless(vec![w(4)]);
        let r = compute_radius(&g, &g.full_set(), &Limits::default()).unwrap();
        assert_eq!((r.sigma, r.eta, r.nu), (w(4), w(4), None));
        assert_eq!(r.epsilon, w(2));
    }

    #[test]
    fn edgeless_radius() {
        let g = WeightedGraph::edgeless(vec![w(1); 3]);
        let r = compute_radius(&g, &g.full_set(), &Limits::default()).unwrap();
        assert_eq!(brute_force_radius(&g, &g.full_set()), (w(1), w(1), None));
        assert_eq!((r.sigma, r.eta, r.nu), (w(1), w(1), None));
        assert_eq!(r.epsilon, Weight::from_ratio(1, 4).unwrap());
    }

    #[test]
    fn radius_requires_unique_alpha_set() {
        let twins = WeightedGraph::new(vec![w(1), w(1)], &[(0, 1)]).unwrap();
        assert!(compute_radius(&twins, &VertexSet::singleton(2, 0), &Limits::default()).is_err());
        let empty = WeightedGraph::edgeless(vec![]);
        assert!(compute_radius(&empty, &empty.empty_set(), &Limits::default()).is_err());
    }

    #[test]
    fn sampling_is_deterministic_and_inside_the_interval() {
        let g = counterexample();
        let eps = Weight::from_ratio(1, 6).unwrap();
        let a = sample_perturbation(&g, &eps, 7).unwrap();
        assert_eq!(a, sample_perturbation(&g, &eps, 7).unwrap());
        assert_ne!(a, sample_perturbation(&g, &eps, 8).unwrap());
        for seed in 0..50 {
            let p = sample_perturbation(&g, &eps, seed).unwrap();
            for v in 0..g.n() {
                let lo = g.weight(v).as_rational() - eps.as_rational();
                let hi = g.weight(v).as_rational() + eps.as_rational();
                let x = p.weight(v).as_rational();
                assert!(lo < *x && *x < hi);
            }
        }
        assert!(sample_perturbation(&g, &Weight::zero(), 1).is_err());
    }

    #[test]
    fn single_step_grid_is_identity() {
        // grid = 1 only allows k = 0.
        let g = counterexample();
        let p = sample_perturbation_on_grid(&g, &Weight::one(), 3, 1).unwrap();
        assert_eq!(p, g);
    }

    #[test]
    fn negative_offsets_clamp_to_zero() {
        let g = WeightedGraph::edgeless(vec![Weight::zero(); 8]);
        let p = sample_perturbation(&g, &Weight::one(), 11).unwrap();
        assert!(p.weights().iter().all(|x| *x >= Weight::zero()));
    }

    #[test]
    fn stability_on_counterexample() {
        let g = counterexample();
        let ac = g.set_from_labels(&["A", "C"]).unwrap();
        let report = verify_stability(&g, &ac, 100, 42, &Limits::default()).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.passed, 100);

        let single = WeightedGraph::edgeless(vec![w(3)]);
        let report =
            verify_stability(&single, &single.full_set(), 10, 1, &Limits::default()).unwrap();
        assert!(report.all_passed());

        let report = verify_stability(&g, &ac, 0, 1, &Limits::default()).unwrap();
        assert!(report.all_passed() && report.trials == 0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn radius_matches_definitions_and_scales(g in arb_graph(8)) {
            let (_, sets) = brute_force_alpha_sets(&g);
            prop_assume!(sets.len() == 1 && g.n() > 0);
            let i = &sets[0];
            let r = compute_radius(&g, i, &Limits::default()).unwrap();
            let (sigma, eta, nu) = brute_force_radius(&g, i);
            prop_assert_eq!(&r.sigma, &sigma);
            prop_assert_eq!(&r.eta, &eta);
            prop_assert_eq!(&r.nu, &nu);
            prop_assert_eq!(r.epsilon.mul_count(g.n() + 1), r.delta.clone());

            let doubled = g.with_weights(g.weights().iter().map(|x| x.mul_count(2)).collect()).unwrap();
            let r2 = compute_radius(&doubled, i, &Limits::default()).unwrap();
            prop_assert_eq!(r2.sigma, r.sigma.mul_count(2));
            prop_assert_eq!(r2.eta, r.eta.mul_count(2));
            prop_assert_eq!(r2.nu, r.nu.map(|x| x.mul_count(2)));
            prop_assert_eq!(r2.delta, r.delta.mul_count(2));
            prop_assert_eq!(r2.epsilon, r.epsilon.mul_count(2));
        }
    }
}
