//! Seeded random instance streams.
//!
//! A [`FuzzConfig`] fully determines its stream: instance `t` is drawn from a
//! ChaCha8 generator seeded with `seed` and `t`, so instances can be produced
//! in any order (or in parallel) and still match.

use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::line_graph::EdgeWeightedGraph;
use crate::weight::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FuzzMode {
    General,
    Trees,
    Reductions,
    Perturbation,
}

impl FuzzMode {
    pub fn as_str(self) -> &'static str {
        match self {
            FuzzMode::General => "general",
            FuzzMode::Trees => "trees",
            FuzzMode::Reductions => "reductions",
            FuzzMode::Perturbation => "perturbation",
        }
    }
}

impl std::str::FromStr for FuzzMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(FuzzMode::General),
            "trees" => Ok(FuzzMode::Trees),
            "reductions" => Ok(FuzzMode::Reductions),
            "perturbation" => Ok(FuzzMode::Perturbation),
            _ => Err(Error::input(format!(
                "unknown mode {s:?} (expected general, trees, reductions or perturbation)"
            ))),
        }
    }
}

/// Weights are `p/q` with `q` drawn from `denominators` and `p/q` in
/// `[0, max]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightGrid {
    pub denominators: Vec<u64>,
    pub max: u64,
}

impl WeightGrid {
    pub fn integers(max: u64) -> Self {
        WeightGrid {
            denominators: vec![1],
            max,
        }
    }

    pub fn sample(&self, rng: &mut impl Rng) -> Weight {
        let q = self.denominators[rng.random_range(0..self.denominators.len())];
        let p = rng.random_range(0..=self.max * q);
        Weight::from_ratio(p, q).expect("grid denominators are validated nonzero")
    }
}

impl Default for WeightGrid {
    fn default() -> Self {
        WeightGrid {
            denominators: vec![1, 2, 3, 4],
            max: 6,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FuzzConfig {
    pub instance_count: usize,
    pub vertex_range: RangeInclusive<usize>,
    /// Fixed edge probability, or a fresh uniform one per instance when
    /// `None`.
    pub edge_probability: Option<f64>,
    pub weight_grid: WeightGrid,
    pub seed: u64,
    pub mode: FuzzMode,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            instance_count: 100,
            vertex_range: 1..=10,
            edge_probability: None,
            weight_grid: WeightGrid::default(),
            seed: 0,
            mode: FuzzMode::General,
        }
    }
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<()> {
        if self.vertex_range.is_empty() {
            return Err(Error::input("empty vertex range"));
        }
        if self.weight_grid.denominators.is_empty() || self.weight_grid.denominators.contains(&0) {
            return Err(Error::input("weight grid needs nonzero denominators"));
        }
        if let Some(p) = self.edge_probability {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::input(format!("edge probability {p} outside [0, 1]")));
            }
        }
        Ok(())
    }

    /// The generator for instance `index`.
    pub fn rng_for(&self, index: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index as u64);
        rng
    }

    /// Instance `index` of the stream: a uniform random tree in tree mode,
    /// otherwise an Erdős–Rényi graph.
    pub fn instance(&self, index: usize) -> WeightedGraph {
        let mut rng = self.rng_for(index);
        let n = rng.random_range(self.vertex_range.clone());
        match self.mode {
            FuzzMode::Trees => random_tree(n, &self.weight_grid, &mut rng),
            _ => {
                let p = self.edge_probability.unwrap_or_else(|| rng.random());
                erdos_renyi(n, p, &self.weight_grid, &mut rng)
            }
        }
    }

    pub fn instances(&self) -> impl Iterator<Item = WeightedGraph> + '_ {
        (0..self.instance_count).map(|t| self.instance(t))
    }
}

/// Each of the `n(n-1)/2` pairs is an edge with probability `p`.
pub fn erdos_renyi(n: usize, p: f64, grid: &WeightGrid, rng: &mut impl Rng) -> WeightedGraph {
    let weights = (0..n).map(|_| grid.sample(rng)).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    WeightedGraph::new(weights, &edges).expect("generated edges are in range")
}

/// Uniform over labelled trees on `n ≥ 1` vertices, via a random Prüfer
/// sequence.
pub fn random_tree(n: usize, grid: &WeightGrid, rng: &mut impl Rng) -> WeightedGraph {
    let weights = (0..n).map(|_| grid.sample(rng)).collect();
    let edges = if n < 2 {
        Vec::new()
    } else {
        let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
        prufer_edges(n, &code)
    };
    WeightedGraph::new(weights, &edges).expect("decoded edges are in range")
}

fn prufer_edges(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = leaves
            .pop_first()
            .expect("a Prüfer code always leaves a leaf");
        edges.push((leaf.min(c), leaf.max(c)));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// A random simple edge-weighted graph with exactly `m` edges (capped at
/// the number of vertex pairs).
pub fn random_edge_graph(
    n: usize,
    m: usize,
    grid: &WeightGrid,
    rng: &mut impl Rng,
) -> EdgeWeightedGraph {
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let m = m.min(pairs.len());
    for j in 0..m {
        let pick = rng.random_range(j..pairs.len());
        pairs.swap(j, pick);
    }
    let edges = pairs[..m]
        .iter()
        .map(|&(u, v)| (u, v, grid.sample(rng)))
        .collect();
    EdgeWeightedGraph::new(n, edges).expect("distinct in-range pairs")
}
