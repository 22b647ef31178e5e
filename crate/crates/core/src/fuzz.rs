//! Cross-validation of every uniqueness test against the exhaustive oracle.
//!
//! [`cross_validate`] walks the instance stream of a [`FuzzConfig`] in
//! parallel and aggregates by instance index, so a report depends only on the
//! config. What is checked depends on the mode:
//!
//! * `general` and `trees`: on every α-set `I`, the deletion, pocket-MWIS and
//!   boundary checks (plus the tree check on trees) must agree with the
//!   oracle, every witness must re-verify, and the pocket-sum condition may
//!   only hold when the oracle says unique.
//! * `reductions`: both gadget equivalences for every `k` in `1..=⌊α⌋+2`,
//!   plus the closed-form gadget sizes.
//! * `perturbation`: seeded stability trials on every unique instance.
//!
//! Each disagreement carries its graph; [`write_reproducers`] dumps them as
//! `gwis` files.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::characterize::{check, check_unique_matching, verify_witness, Method, Verdict};
use crate::error::{Error, Result};
use crate::format::write_graph;
use crate::generate::{FuzzConfig, FuzzMode};
use crate::graph::WeightedGraph;
use crate::line_graph::EdgeWeightedGraph;
use crate::perturbation::verify_stability;
use crate::reductions::{reduce_ui1, reduce_ui2, ui1_sides, ui2_sides};
use crate::solver::{enumerate_alpha_sets, solve_bnb, weighted_matching_oracle, Limits};
use crate::weight::Weight;

#[derive(Clone, Debug)]
pub struct FuzzOptions {
    pub limits: Limits,
    /// Worker threads; `None` uses rayon's default.
    pub jobs: Option<usize>,
    /// Stability trials per unique instance in perturbation mode.
    pub stability_trials: usize,
}

impl Default for FuzzOptions {
    fn default() -> Self {
        FuzzOptions {
            limits: Limits::default(),
            jobs: None,
            stability_trials: 20,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Disagreement {
    pub index: usize,
    pub detail: String,
    pub graph: WeightedGraph,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub instances: usize,
    pub unique: usize,
    pub not_unique: usize,
    /// Individual method runs compared against the oracle.
    pub checks: usize,
    pub pocket_sum_holds: usize,
    /// Unique instances on which the pocket-sum condition fails.
    pub pocket_sum_fails_on_unique: usize,
    pub reduction_pairs: usize,
    /// Reduction pairs with `k` equal to α.
    pub reduction_ties: usize,
    pub stability_trials: usize,
}

impl Tally {
    fn absorb(&mut self, other: &Tally) {
        self.instances += other.instances;
        self.unique += other.unique;
        self.not_unique += other.not_unique;
        self.checks += other.checks;
        self.pocket_sum_holds += other.pocket_sum_holds;
        self.pocket_sum_fails_on_unique += other.pocket_sum_fails_on_unique;
        self.reduction_pairs += other.reduction_pairs;
        self.reduction_ties += other.reduction_ties;
        self.stability_trials += other.stability_trials;
    }
}

#[derive(Clone, Debug)]
pub struct FuzzReport {
    pub mode: FuzzMode,
    pub seed: u64,
    pub tally: Tally,
    /// Ordered by instance index.
    pub disagreements: Vec<Disagreement>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }
}

struct Instance<'a> {
    index: usize,
    graph: &'a WeightedGraph,
    tally: Tally,
    issues: Vec<String>,
}

impl Instance<'_> {
    fn flag(&mut self, detail: String) {
        self.issues.push(detail);
    }
}

fn characterizations(inst: &mut Instance, limits: &Limits) -> Result<()> {
    let g = inst.graph;
    let family = enumerate_alpha_sets(g, limits)?;
    let unique = family.is_unique();
    if unique {
        inst.tally.unique += 1;
    } else {
        inst.tally.not_unique += 1;
    }
    if solve_bnb(g).alpha != family.alpha {
        inst.flag(format!(
            "branch and bound α differs from oracle α {}",
            family.alpha
        ));
    }

    let mut methods = vec![Method::Deletion, Method::PocketMwis, Method::Boundary];
    if g.is_tree() {
        methods.push(Method::Tree);
    }
    for i in &family.sets {
        for &method in &methods {
            let report = check(method, g, i, limits)?;
            inst.tally.checks += 1;
            if report.is_unique() != Some(unique) {
                inst.flag(format!(
                    "{method} says {} on {} but the oracle finds {} α-set(s)",
                    report.verdict,
                    g.format_set(i),
                    family.sets.len()
                ));
            }
            if !verify_witness(g, &report, limits) {
                inst.flag(format!(
                    "{method} witness on {} does not verify",
                    g.format_set(i)
                ));
            }
        }

        let report = check(Method::PocketSum, g, i, limits)?;
        if report.verdict == Verdict::ConditionHolds {
            inst.tally.pocket_sum_holds += 1;
            if !unique {
                inst.flag(format!(
                    "lemma1 condition holds on {} but the graph is not unique",
                    g.format_set(i)
                ));
            }
        } else if unique {
            inst.tally.pocket_sum_fails_on_unique += 1;
        }
        if !verify_witness(g, &report, limits) {
            inst.flag(format!(
                "lemma1 witness on {} does not verify",
                g.format_set(i)
            ));
        }
    }
    Ok(())
}

fn reductions(inst: &mut Instance, limits: &Limits) -> Result<()> {
    let g = inst.graph;
    let (n, m) = (g.n(), g.edge_count());
    let alpha = solve_bnb(g).alpha;
    let floor = alpha.as_rational().floor().to_integer();
    let top: usize = usize::try_from(floor)
        .map_err(|_| Error::input("α too large for the reduction sweep"))?
        + 2;
    for k in 1..=top {
        inst.tally.reduction_pairs += 1;
        if alpha == Weight::from(k as u64) {
            inst.tally.reduction_ties += 1;
        }
        let h1 = reduce_ui1(g, k)?;
        if (h1.graph.n(), h1.graph.edge_count()) != (n + k, m + n * k) {
            inst.flag(format!("ui1 gadget for k={k} has the wrong size"));
        }
        let h2 = reduce_ui2(g, k)?;
        if (h2.graph.n(), h2.graph.edge_count()) != (n + k + 3, m + (k + 1) * (n + 2) + 1) {
            inst.flag(format!("ui2 gadget for k={k} has the wrong size"));
        }
        let (lhs, rhs) = ui1_sides(g, k, limits)?;
        if lhs != rhs {
            inst.flag(format!(
                "ui1 with k={k}: weight≥k is {lhs}, candidate not unique is {rhs}"
            ));
        }
        let (lhs, rhs) = ui2_sides(g, k, limits)?;
        if lhs != rhs {
            inst.flag(format!(
                "ui2 with k={k}: weight≥k is {lhs}, gadget not unique is {rhs}"
            ));
        }
    }
    Ok(())
}

fn stability(inst: &mut Instance, seed: u64, trials: usize, limits: &Limits) -> Result<()> {
    let g = inst.graph;
    if g.n() == 0 {
        return Ok(());
    }
    let family = enumerate_alpha_sets(g, limits)?;
    if !family.is_unique() {
        inst.tally.not_unique += 1;
        return Ok(());
    }
    inst.tally.unique += 1;
    let trial_seed = seed ^ (inst.index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    let report = verify_stability(g, &family.sets[0], trials, trial_seed, limits)?;
    inst.tally.stability_trials += report.trials;
    for failure in &report.failures {
        inst.flag(format!(
            "perturbation trial {} (seed {}) within ε={} has {} α-set(s)",
            failure.trial,
            failure.seed,
            report.radius.epsilon,
            failure.alpha_sets.len()
        ));
    }
    Ok(())
}

fn run_instance(
    cfg: &FuzzConfig,
    opts: &FuzzOptions,
    index: usize,
) -> Result<(Tally, Vec<Disagreement>)> {
    let graph = cfg.instance(index);
    let mut inst = Instance {
        index,
        graph: &graph,
        tally: Tally {
            instances: 1,
            ..Tally::default()
        },
        issues: Vec::new(),
    };
    match cfg.mode {
        FuzzMode::General | FuzzMode::Trees => characterizations(&mut inst, &opts.limits)?,
        FuzzMode::Reductions => reductions(&mut inst, &opts.limits)?,
        FuzzMode::Perturbation => {
            stability(&mut inst, cfg.seed, opts.stability_trials, &opts.limits)?
        }
    }
    let disagreements = inst
        .issues
        .into_iter()
        .map(|detail| Disagreement {
            index,
            detail,
            graph: graph.clone(),
        })
        .collect();
    Ok((inst.tally, disagreements))
}

/// Runs the configured stream. Errors (e.g. capacity) abort the run; the
/// error reported is the one from the lowest instance index.
pub fn cross_validate(cfg: &FuzzConfig, opts: &FuzzOptions) -> Result<FuzzReport> {
    cfg.validate()?;
    let work = || -> Vec<Result<(Tally, Vec<Disagreement>)>> {
        (0..cfg.instance_count)
            .into_par_iter()
            .map(|t| run_instance(cfg, opts, t))
            .collect()
    };
    let results = match opts.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::input(format!("cannot start {jobs} workers: {e}")))?
            .install(work),
        None => work(),
    };

    let mut tally = Tally::default();
    let mut disagreements = Vec::new();
    for result in results {
        let (t, d) = result?;
        tally.absorb(&t);
        disagreements.extend(d);
    }
    Ok(FuzzReport {
        mode: cfg.mode,
        seed: cfg.seed,
        tally,
        disagreements,
    })
}

/// Writes one `gwis` file per disagreeing instance into `dir` (created if
/// missing) and returns the paths. The details go in leading comments.
pub fn write_reproducers(report: &FuzzReport, dir: impl AsRef<Path>) -> Result<Vec<PathBuf>> {
    let dir = dir.as_ref();
    std::fs::create_dir_all(dir)?;
    let mut paths = Vec::new();
    for chunk in report.disagreements.chunk_by(|a, b| a.index == b.index) {
        let first = &chunk[0];
        let path = dir.join(format!(
            "repro-{}-seed{}-{}.gwis",
            report.mode.as_str(),
            report.seed,
            first.index
        ));
        let mut text = String::new();
        writeln!(
            text,
            "# mode {} seed {} instance {}",
            report.mode.as_str(),
            report.seed,
            first.index
        )
        .unwrap();
        for d in chunk {
            writeln!(text, "# {}", d.detail).unwrap();
        }
        text.push_str(&write_graph(&first.graph));
        std::fs::write(&path, text)?;
        paths.push(path);
    }
    Ok(paths)
}

/// Matching uniqueness decided twice: through the line graph and the
/// deletion check, and by the exhaustive matching oracle. Returns both
/// answers.
pub fn matching_agreement(g: &EdgeWeightedGraph, limits: &Limits) -> Result<(bool, bool)> {
    let family = weighted_matching_oracle(g, limits)?;
    let report = check_unique_matching(g, &family.matchings[0], limits)?;
    let via_line_graph = report
        .is_unique()
        .ok_or_else(|| Error::input("deletion check returned no verdict"))?;
    Ok((via_line_graph, family.matchings.len() == 1))
}
