//! Detection and characterization of unique maximum-weight independent sets
//! in vertex-weighted graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`], [`vertex_set`], [`weight`], [`line_graph`]: exact weighted
//!   graphs with their neighborhoods and pocket sets.
//! * [`solver`]: the exhaustive oracle and a branch-and-bound solver.
//! * [`characterize`]: uniqueness tests with checkable witnesses.
//! * [`perturbation`]: stability radius of a unique α-set and sampling
//!   within it.
//! * [`reductions`]: the hardness gadgets, verified against the oracle.
//! * [`auction`]: combinatorial auctions as conflict graphs.
//! * [`format`], [`generate`], [`fuzz`]: file formats, seeded instance
//!   generators and the cross-validation harness.

pub mod auction;
pub mod characterize;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod fuzz;
pub mod generate;
pub mod graph;
pub mod line_graph;
pub mod perturbation;
pub mod reductions;
pub mod solver;
pub mod vertex_set;
pub mod weight;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
pub use graph::{InducedSubgraph, WeightedGraph};
pub use line_graph::EdgeWeightedGraph;
pub use solver::{AlphaSetFamily, Limits, MatchingFamily, MwisResult};
pub use vertex_set::VertexSet;
pub use weight::Weight;
