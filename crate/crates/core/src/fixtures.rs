//! Bundled graph fixtures.

use crate::format::parse_graph;
use crate::graph::WeightedGraph;

/// Text of the five-cycle counterexample: weights A=5, B=4, C=2, D=1, E=2 on
/// the cycle A-B-C-D-E-A. Its unique α-set {A, C} violates the pocket-sum
/// sufficient condition.
pub const COUNTEREXAMPLE: &str = include_str!("../fixtures/counterexample.gwis");

pub fn counterexample() -> WeightedGraph {
    parse_graph(COUNTEREXAMPLE)
        .expect("bundled fixture parses")
        .graph
}
