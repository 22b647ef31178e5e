//! Vertex-weighted simple graphs, neighborhoods and pocket sets.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use crate::weight::Weight;

/// An immutable simple undirected graph with exact nonnegative vertex weights.
///
/// Vertices are dense indices `0..n`. Optional labels are carried for I/O and
/// witness printing; they play no part in any algorithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    adjacency: Vec<VertexSet>,
    weights: Vec<Weight>,
    labels: Option<Vec<String>>,
    edge_count: usize,
}

impl WeightedGraph {
    /// Builds a graph from weights and an edge list. Duplicate edges
    /// (in either orientation) collapse to one.
    pub fn new(weights: Vec<Weight>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = weights.len();
        let mut adjacency = vec![VertexSet::empty(n); n];
        let mut edge_count = 0;
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adjacency[u].insert(v) {
                adjacency[v].insert(u);
                edge_count += 1;
            }
        }
        Ok(WeightedGraph {
            adjacency,
            weights,
            labels: None,
            edge_count,
        })
    }

    pub fn edgeless(weights: Vec<Weight>) -> Self {
        Self::new(weights, &[]).expect("edgeless graph is always valid")
    }

    /// Attaches vertex labels; they must be unique, nonempty and free of
    /// whitespace and `#`.
    pub fn with_labels<S: Into<String>>(mut self, labels: Vec<S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.n() {
            return Err(Error::input(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        let mut seen = HashSet::new();
        for label in &labels {
            if label.is_empty() || label.contains(char::is_whitespace) || label.contains('#') {
                return Err(Error::input(format!("invalid vertex label {label:?}")));
            }
            if !seen.insert(label.as_str()) {
                return Err(Error::input(format!("duplicate vertex label {label:?}")));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Same structure and labels, new weights.
    pub fn with_weights(&self, weights: Vec<Weight>) -> Result<Self> {
        if weights.len() != self.n() {
            return Err(Error::input(format!(
                "{} weights for {} vertices",
                weights.len(),
                self.n()
            )));
        }
        Ok(WeightedGraph {
            weights,
            ..self.clone()
        })
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn weight(&self, v: usize) -> &Weight {
        &self.weights[v]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The label of `v`, or its index when the graph is unlabeled.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(labels) => labels.iter().position(|l| l == label),
            None => label.parse().ok().filter(|&v| v < self.n()),
        }
    }

    /// Resolves labels to a vertex set.
    pub fn set_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        let mut set = self.empty_set();
        for label in labels {
            let label = label.as_ref();
            let v = self
                .vertex_by_label(label)
                .ok_or_else(|| Error::input(format!("unknown vertex {label:?}")))?;
            set.insert(v);
        }
        Ok(set)
    }

    /// `{A, C}`-style rendering using labels.
    pub fn format_set(&self, set: &VertexSet) -> String {
        let names: Vec<String> = set.iter().map(|v| self.label(v)).collect();
        format!("{{{}}}", names.join(", "))
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.n())
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Adjacency row of `v`. Panics when `v` is out of range; see
    /// [`WeightedGraph::neighborhood`] for the checked form.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn set_weight(&self, set: &VertexSet) -> Weight {
        set.iter().map(|v| &self.weights[v]).sum()
    }

    pub fn total_weight(&self) -> Weight {
        self.weights.iter().sum()
    }

    pub(crate) fn check_set(&self, set: &VertexSet) -> Result<()> {
        if set.universe() != self.n() {
            return Err(Error::input(format!(
                "vertex set over {} vertices used with a graph on {}",
                set.universe(),
                self.n()
            )));
        }
        Ok(())
    }

    /// Open neighborhood `N(x)`.
    pub fn neighborhood(&self, x: usize) -> Result<VertexSet> {
        if x >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                n: self.n(),
            });
        }
        Ok(self.adjacency[x].clone())
    }

    /// `N(S)`, the union of the members' neighborhoods. May intersect `S`.
    pub fn set_neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in set {
            out.union_with(&self.adjacency[v]);
        }
        out
    }

    /// Private-neighbor union with the subset itself as the ambient set:
    /// `⋃_{x ∈ I₀} N(x) ∖ N(I₀ ∖ {x})`.
    ///
    /// Kept for comparison only; the uniqueness checks use [`Self::pocket`],
    /// which measures privacy against the whole ambient independent set.
    pub fn pocket_literal(&self, i0: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for x in i0 {
            let mut rest = i0.clone();
            rest.remove(x);
            out.union_with(&(&self.adjacency[x] - &self.set_neighborhood(&rest)));
        }
        out
    }

    /// Pocket of `i0` relative to `ambient`: `N(I₀) ∖ N(ambient ∖ I₀)`, the
    /// vertices adjacent to `i0` and to nothing else in `ambient`.
    pub fn pocket(&self, i0: &VertexSet, ambient: &VertexSet) -> Result<VertexSet> {
        self.check_set(i0)?;
        self.check_set(ambient)?;
        if !i0.is_subset(ambient) {
            return Err(Error::input(
                "pocket subset is not contained in the ambient set",
            ));
        }
        if !self.is_independent(ambient) {
            return Err(Error::input("pocket ambient set is not independent"));
        }
        Ok(self.pocket_unchecked(i0, ambient))
    }

    pub(crate) fn pocket_unchecked(&self, i0: &VertexSet, ambient: &VertexSet) -> VertexSet {
        let outside = ambient - i0;
        &self.set_neighborhood(i0) - &self.set_neighborhood(&outside)
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.adjacency[v].is_disjoint(set))
    }

    /// Graph induced on `set`, with the map back to this graph's indices.
    pub fn induced_subgraph(&self, set: &VertexSet) -> InducedSubgraph {
        let original: Vec<usize> = set.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (new, &old) in original.iter().enumerate() {
            index[old] = new;
        }
        let k = original.len();
        let mut adjacency = vec![VertexSet::empty(k); k];
        let mut edge_count = 0;
        for (new, &old) in original.iter().enumerate() {
            for nb in self.adjacency[old].iter().filter(|&nb| set.contains(nb)) {
                adjacency[new].insert(index[nb]);
                if nb > old {
                    edge_count += 1;
                }
            }
        }
        let graph = WeightedGraph {
            adjacency,
            weights: original.iter().map(|&v| self.weights[v].clone()).collect(),
            labels: self
                .labels
                .as_ref()
                .map(|l| original.iter().map(|&v| l[v].clone()).collect()),
            edge_count,
        };
        InducedSubgraph {
            graph,
            original,
            parent_n: self.n(),
        }
    }

    /// `G ∖ {x}`.
    pub fn without_vertex(&self, x: usize) -> InducedSubgraph {
        let mut keep = self.full_set();
        keep.remove(x);
        self.induced_subgraph(&keep)
    }

    /// Connected with exactly `n - 1` edges. The empty graph is not a tree.
    pub fn is_tree(&self) -> bool {
        let n = self.n();
        if n == 0 || self.edge_count != n - 1 {
            return false;
        }
        let mut seen = VertexSet::singleton(n, 0);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for nb in &self.adjacency[v] {
                if seen.insert(nb) {
                    stack.push(nb);
                }
            }
        }
        seen.len() == n
    }
}

/// An induced subgraph plus the translation back to its parent.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: WeightedGraph,
    /// `original[i]` is the parent index of subgraph vertex `i`.
    pub original: Vec<usize>,
    parent_n: usize,
}

impl InducedSubgraph {
    /// Maps a subgraph vertex set back into the parent graph.
    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.parent_n);
        for v in set {
            out.insert(self.original[v]);
        }
        out
    }
}
