//! Shared instance builders for the benchmarks.

use uwis_core::generate::{FuzzConfig, FuzzMode, WeightGrid};
use uwis_core::solver::enumerate_alpha_sets;
use uwis_core::{Limits, VertexSet, WeightedGraph};

/// A fixed-size seeded random graph with edge probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> WeightedGraph {
    let cfg = FuzzConfig {
        instance_count: 1,
        vertex_range: n..=n,
        edge_probability: Some(p),
        weight_grid: WeightGrid::default(),
        seed,
        mode: FuzzMode::General,
    };
    cfg.instance(0)
}

/// The first seeded graph on `n` vertices with a unique α-set, and that set.
pub fn unique_instance(n: usize, p: f64) -> (WeightedGraph, VertexSet) {
    let limits = Limits::default();
    (0..)
        .map(|seed| random_graph(n, p, seed))
        .find_map(|g| {
            let family = enumerate_alpha_sets(&g, &limits).ok()?;
            family.is_unique().then(|| {
                let i = family.sets[0].clone();
                (g, i)
            })
        })
        .expect("unique graphs are common")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builders_are_deterministic() {
        assert_eq!(random_graph(8, 0.3, 1), random_graph(8, 0.3, 1));
        let (g, i) = unique_instance(10, 0.3);
        assert_eq!(g.n(), 10);
        assert!(g.is_independent(&i));
    }
}
