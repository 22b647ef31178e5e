use std::path::Path;

use uwis_core::auction::{read_auction_file, resolve_auction};
use uwis_core::characterize::{check, check_deletion, check_unique_matching, Verdict, Witness};
use uwis_core::format::{parse_edge_graph, read_graph_file, write_graph};
use uwis_core::fuzz::{cross_validate, write_reproducers, FuzzOptions};
use uwis_core::generate::{FuzzConfig, WeightGrid};
use uwis_core::perturbation::{compute_radius, verify_stability, PerturbationRadius};
use uwis_core::reductions::{reduce_ui1, reduce_ui2, ui1_sides, ui2_sides};
use uwis_core::solver::{enumerate_alpha_sets, solve_bnb, weighted_matching_oracle};
use uwis_core::{Error, Limits, Result, VertexSet, WeightedGraph};

use crate::output::{compact_set, Out, Record};
use crate::{Command, Problem, StreamArgs};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    NotUnique = 3,
    Disagreement = 4,
}

impl Status {
    fn unique(unique: bool) -> Self {
        if unique {
            Status::Pass
        } else {
            Status::NotUnique
        }
    }
}

pub fn run(command: Command, limits: &Limits, out: Out) -> Result<Status> {
    match command {
        Command::Solve { file, all } => solve(&file, all, limits, out),
        Command::Check { file, method, set } => {
            let g = load(&file)?;
            let i = chosen_set(&g, set.as_deref())?;
            let report = check(method, &g, &i, limits)?;
            out.text(format!("method: {method}"));
            out.text(format!("set: {}", g.format_set(&i)));
            out.text(format!("alpha: {}", report.alpha));
            out.text(format!("verdict: {}", report.verdict));
            let mut record = Record::new("check")
                .field("method", method)
                .field("set", compact_set(&g, &i))
                .field("alpha", &report.alpha)
                .field("verdict", report.verdict);
            if let Some(w) = &report.witness {
                out.text(format!("witness: {}", w.describe(&g)));
                record = witness_fields(record, &g, w);
            }
            out.record(record);
            Ok(match report.verdict {
                Verdict::Unique | Verdict::ConditionHolds => Status::Pass,
                Verdict::NotUnique | Verdict::ConditionFails => Status::NotUnique,
            })
        }
        Command::Epsilon { file, set } => {
            let g = load(&file)?;
            let Some(i) = unique_set(&g, set.as_deref(), limits, out)? else {
                return Ok(Status::NotUnique);
            };
            let radius = compute_radius(&g, &i, limits)?;
            print_radius(&g, &i, &radius, out);
            Ok(Status::Pass)
        }
        Command::Stability {
            file,
            trials,
            seed,
            set,
        } => {
            let g = load(&file)?;
            let Some(i) = unique_set(&g, set.as_deref(), limits, out)? else {
                return Ok(Status::NotUnique);
            };
            let report = verify_stability(&g, &i, trials, seed, limits)?;
            out.text(format!("set: {}", g.format_set(&i)));
            out.text(format!("epsilon: {}", report.radius.epsilon));
            out.text(format!(
                "trials passed: {}/{}",
                report.passed, report.trials
            ));
            for f in &report.failures {
                out.text(format!(
                    "trial {} (seed {}) found {} maximum-weight sets",
                    f.trial,
                    f.seed,
                    f.alpha_sets.len()
                ));
            }
            out.record(
                Record::new("stability")
                    .field("set", compact_set(&g, &i))
                    .field("epsilon", &report.radius.epsilon)
                    .field("seed", seed)
                    .field("trials", report.trials)
                    .field("passed", report.passed),
            );
            Ok(if report.all_passed() {
                Status::Pass
            } else {
                Status::Disagreement
            })
        }
        Command::Reduce {
            problem,
            file,
            k,
            verify,
            output,
        } => reduce(problem, &file, k, verify, output.as_deref(), limits, out),
        Command::MatchingCheck { file, matching } => {
            matching_check(&file, matching.as_deref(), limits, out)
        }
        Command::Auction { file } => auction(&file, limits, out),
        Command::Gen { stream, out_dir } => generate(&stream, out_dir.as_deref(), out),
        Command::Fuzz {
            stream,
            jobs,
            trials,
            reproducers,
        } => {
            let cfg = fuzz_config(&stream);
            let opts = FuzzOptions {
                limits: *limits,
                jobs,
                stability_trials: trials,
            };
            let report = cross_validate(&cfg, &opts)?;
            let t = &report.tally;
            out.text(format!("mode: {} seed: {}", cfg.mode.as_str(), cfg.seed));
            out.text(format!(
                "instances: {} unique: {} not unique: {}",
                t.instances, t.unique, t.not_unique
            ));
            out.text(format!(
                "checks: {} lemma1 held: {} lemma1 failed on unique: {}",
                t.checks, t.pocket_sum_holds, t.pocket_sum_fails_on_unique
            ));
            out.text(format!(
                "reduction pairs: {} ties: {} stability trials: {}",
                t.reduction_pairs, t.reduction_ties, t.stability_trials
            ));
            out.text(format!("disagreements: {}", report.disagreements.len()));
            out.record(
                Record::new("fuzz")
                    .field("mode", cfg.mode.as_str())
                    .field("seed", cfg.seed)
                    .field("instances", t.instances)
                    .field("unique", t.unique)
                    .field("not_unique", t.not_unique)
                    .field("checks", t.checks)
                    .field("lemma1_holds", t.pocket_sum_holds)
                    .field("lemma1_fails_on_unique", t.pocket_sum_fails_on_unique)
                    .field("reduction_pairs", t.reduction_pairs)
                    .field("reduction_ties", t.reduction_ties)
                    .field("stability_trials", t.stability_trials)
                    .field("disagreements", report.disagreements.len()),
            );
            if report.passed() {
                return Ok(Status::Pass);
            }
            for d in &report.disagreements {
                out.text(format!("instance {}: {}", d.index, d.detail));
            }
            for path in write_reproducers(&report, &reproducers)? {
                eprintln!("reproducer: {}", path.display());
                out.record(Record::new("reproducer").field("path", path.display()));
            }
            Ok(Status::Disagreement)
        }
    }
}

fn load(path: &Path) -> Result<WeightedGraph> {
    let doc = read_graph_file(path)?;
    for warning in &doc.warnings {
        eprintln!("warning: {warning}");
    }
    Ok(doc.graph)
}

fn parse_set(g: &WeightedGraph, labels: &str) -> Result<VertexSet> {
    let names: Vec<&str> = labels
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    g.set_from_labels(&names)
}

/// The `--set` argument, or an α-set from branch and bound.
fn chosen_set(g: &WeightedGraph, labels: Option<&str>) -> Result<VertexSet> {
    match labels {
        Some(labels) => parse_set(g, labels),
        None => Ok(solve_bnb(g).witness),
    }
}

/// The unique α-set, or `None` (after reporting) when there are several.
fn unique_set(
    g: &WeightedGraph,
    labels: Option<&str>,
    limits: &Limits,
    out: Out,
) -> Result<Option<VertexSet>> {
    let family = enumerate_alpha_sets(g, limits)?;
    if let Some(labels) = labels {
        let i = parse_set(g, labels)?;
        if !family.sets.contains(&i) {
            return Err(Error::Input(format!(
                "{} is not a maximum-weight independent set",
                g.format_set(&i)
            )));
        }
    }
    if family.is_unique() {
        return Ok(Some(family.sets[0].clone()));
    }
    out.text(format!(
        "not unique: {} maximum-weight independent sets",
        family.sets.len()
    ));
    for s in &family.sets {
        out.text(format!("  {}", g.format_set(s)));
    }
    out.record(
        Record::new("not_unique")
            .field("alpha", &family.alpha)
            .field("count", family.sets.len()),
    );
    Ok(None)
}

fn witness_fields(record: Record, g: &WeightedGraph, w: &Witness) -> Record {
    let record = record.field("witness", w.kind());
    match w {
        Witness::DeletionSurvivor {
            vertex,
            reduced_alpha,
        } => record
            .field("vertex", g.label(*vertex))
            .field("reduced_alpha", reduced_alpha),
        Witness::ViolatingSubset {
            subset,
            bound_set,
            subset_weight,
            bound_weight,
        } => record
            .field("subset", compact_set(g, subset))
            .field("subset_weight", subset_weight)
            .field("bound_set", compact_set(g, bound_set))
            .field("bound_weight", bound_weight),
        Witness::BoundaryViolation {
            set,
            boundary,
            set_weight,
            boundary_weight,
        } => record
            .field("outside_set", compact_set(g, set))
            .field("outside_weight", set_weight)
            .field("boundary", compact_set(g, boundary))
            .field("boundary_weight", boundary_weight),
        Witness::AlternateAlphaSet { set } => record.field("alternate", compact_set(g, set)),
    }
}

fn solve(file: &Path, all: bool, limits: &Limits, out: Out) -> Result<Status> {
    let g = load(file)?;
    let (alpha, sets, unique, decided_by) = if all || g.n() <= limits.oracle_vertices {
        let family = enumerate_alpha_sets(&g, limits)?;
        let unique = family.is_unique();
        (family.alpha, family.sets, unique, "oracle")
    } else {
        let best = solve_bnb(&g);
        let report = check_deletion(&g, &best.witness)?;
        (
            best.alpha,
            vec![best.witness],
            report.verdict == Verdict::Unique,
            "thm1",
        )
    };
    out.text(format!("alpha: {alpha}"));
    if all {
        for s in &sets {
            out.text(format!("alpha-set: {}", g.format_set(s)));
        }
    } else {
        out.text(format!("alpha-set: {}", g.format_set(&sets[0])));
    }
    out.text(format!("unique: {unique} (by {decided_by})"));
    out.record(
        Record::new("solve")
            .field("n", g.n())
            .field("m", g.edge_count())
            .field("alpha", &alpha)
            .field("set", compact_set(&g, &sets[0]))
            .field("unique", unique)
            .field("decided_by", decided_by),
    );
    if all {
        for s in &sets {
            out.record(Record::new("alpha_set").field("set", compact_set(&g, s)));
        }
    }
    Ok(Status::unique(unique))
}

fn print_radius(g: &WeightedGraph, i: &VertexSet, r: &PerturbationRadius, out: Out) {
    let nu =
        r.nu.as_ref()
            .map_or("undefined".to_string(), ToString::to_string);
    out.text(format!("set: {}", g.format_set(i)));
    out.text(format!("sigma: {}", r.sigma));
    out.text(format!("eta: {}", r.eta));
    out.text(format!("nu: {nu}"));
    out.text(format!("delta: {}", r.delta));
    out.text(format!("epsilon: {}", r.epsilon));
    out.record(
        Record::new("epsilon")
            .field("set", compact_set(g, i))
            .field("sigma", &r.sigma)
            .field("eta", &r.eta)
            .field("nu", nu)
            .field("delta", &r.delta)
            .field("epsilon", &r.epsilon),
    );
}

fn reduce(
    problem: Problem,
    file: &Path,
    k: usize,
    verify: bool,
    output: Option<&Path>,
    limits: &Limits,
    out: Out,
) -> Result<Status> {
    let g = load(file)?;
    let (name, h, marked) = match problem {
        Problem::Ui1 => {
            let inst = reduce_ui1(&g, k)?;
            let candidate = inst.graph.format_set(&inst.candidate);
            ("ui1", inst.graph, format!("candidate {candidate}"))
        }
        Problem::Ui2 => {
            let inst = reduce_ui2(&g, k)?;
            let gadget = format!(
                "gadget I {} R {}",
                inst.graph.format_set(&inst.gadget_i),
                inst.graph.format_set(&inst.gadget_r)
            );
            ("ui2", inst.graph, gadget)
        }
    };
    let text = format!(
        "# {name} reduction with k={k}: {marked}\n{}",
        write_graph(&h)
    );
    match output {
        Some(path) => std::fs::write(path, &text)?,
        None => out.text(text.trim_end()),
    }
    let mut record = Record::new("reduce")
        .field("problem", name)
        .field("k", k)
        .field("n", h.n())
        .field("m", h.edge_count());
    if let Some(path) = output {
        record = record.field("output", path.display());
    }
    let mut status = Status::Pass;
    if verify {
        let (has_weight, not_unique) = match problem {
            Problem::Ui1 => ui1_sides(&g, k, limits)?,
            Problem::Ui2 => ui2_sides(&g, k, limits)?,
        };
        let holds = has_weight == not_unique;
        eprintln!(
            "verify: weight>={k} in G is {has_weight}; H not unique is {not_unique}; equivalence {}",
            if holds { "holds" } else { "FAILS" }
        );
        record = record
            .field("has_weight_k", has_weight)
            .field("not_unique", not_unique)
            .field("equivalence", holds);
        if !holds {
            status = Status::Disagreement;
        }
    }
    out.record(record);
    Ok(status)
}

fn matching_check(
    file: &Path,
    matching: Option<&str>,
    limits: &Limits,
    out: Out,
) -> Result<Status> {
    let g = parse_edge_graph(&std::fs::read_to_string(file)?)?;
    let edges = match matching {
        Some(list) => list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|pair| {
                let (a, b) = pair
                    .split_once('-')
                    .ok_or_else(|| Error::Input(format!("expected `u-v`, found {pair:?}")))?;
                let lookup = |l: &str| {
                    g.vertex_by_label(l)
                        .ok_or_else(|| Error::Input(format!("unknown vertex {l:?}")))
                };
                let (u, v) = (lookup(a)?, lookup(b)?);
                g.find_edge(u, v)
                    .ok_or_else(|| Error::Input(format!("{pair} is not an edge")))
            })
            .collect::<Result<Vec<_>>>()?,
        None => weighted_matching_oracle(&g, limits)?
            .matchings
            .swap_remove(0),
    };
    let report = check_unique_matching(&g, &edges, limits)?;
    let line = g.line_graph();
    let labels: Vec<String> = edges.iter().map(|&e| g.edge_label(e)).collect();
    out.text(format!("matching: {{{}}}", labels.join(", ")));
    out.text(format!("weight: {}", report.alpha));
    out.text(format!("verdict: {}", report.verdict));
    let mut record = Record::new("matching")
        .field("matching", format!("{{{}}}", labels.join(",")))
        .field("weight", &report.alpha)
        .field("verdict", report.verdict);
    if let Some(w) = &report.witness {
        out.text(format!("witness: {}", w.describe(&line)));
        record = witness_fields(record, &line, w);
    }
    out.record(record);
    Ok(Status::unique(report.verdict == Verdict::Unique))
}

fn auction(file: &Path, limits: &Limits, out: Out) -> Result<Status> {
    let a = read_auction_file(file)?;
    let outcome = resolve_auction(&a, limits)?;
    let fmt = |ids: &[String], sep: &str| format!("{{{}}}", ids.join(sep));
    out.text(format!("winners: {}", fmt(&outcome.winners, ", ")));
    out.text(format!("revenue: {}", outcome.revenue));
    out.text(format!("unique: {}", outcome.unique));
    let mut record = Record::new("auction")
        .field("winners", fmt(&outcome.winners, ","))
        .field("revenue", &outcome.revenue)
        .field("unique", outcome.unique);
    if let Some(margin) = &outcome.margin {
        out.text(format!("margin epsilon: {}", margin.epsilon));
        record = record.field("epsilon", &margin.epsilon);
    } else if !outcome.unique {
        for set in &outcome.winner_sets {
            out.text(format!("tied winners: {}", fmt(set, ", ")));
        }
        record = record.field("tied_sets", outcome.winner_sets.len());
    }
    out.record(record);
    Ok(Status::unique(outcome.unique))
}

fn fuzz_config(stream: &StreamArgs) -> FuzzConfig {
    FuzzConfig {
        instance_count: stream.count,
        vertex_range: stream.min_n..=stream.max_n,
        edge_probability: stream.edge_prob,
        weight_grid: WeightGrid {
            denominators: stream.denominators.clone(),
            max: stream.max_weight,
        },
        seed: stream.seed,
        mode: stream.mode,
    }
}

fn generate(stream: &StreamArgs, out_dir: Option<&Path>, out: Out) -> Result<Status> {
    let cfg = fuzz_config(stream);
    cfg.validate()?;
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir)?;
    }
    for (index, g) in cfg.instances().enumerate() {
        let text = write_graph(&g);
        match out_dir {
            Some(dir) => {
                let path = dir.join(format!("gen-{index}.gwis"));
                std::fs::write(&path, &text)?;
                out.text(path.display());
                out.record(
                    Record::new("gen")
                        .field("index", index)
                        .field("n", g.n())
                        .field("m", g.edge_count())
                        .field("path", path.display()),
                );
            }
            None => {
                out.text(format!("# instance {index}"));
                out.text(text.trim_end());
                out.record(
                    Record::new("gen")
                        .field("index", index)
                        .field("n", g.n())
                        .field("m", g.edge_count()),
                );
            }
        }
    }
    Ok(Status::Pass)
}
