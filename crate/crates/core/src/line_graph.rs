//! Edge-weighted graphs and their line graphs.
//!
//! Matchings of an edge-weighted graph are exactly the independent sets of
//! its line graph, so matching uniqueness reduces to vertex-weighted
//! independent-set uniqueness.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::weight::Weight;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeWeightedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    weights: Vec<Weight>,
    labels: Option<Vec<String>>,
}

impl EdgeWeightedGraph {
    /// Edges keep their input order; that order indexes the line graph.
    /// Endpoints are normalised to `(min, max)`.
    pub fn new(n: usize, edges: Vec<(usize, usize, Weight)>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut ends = Vec::with_capacity(edges.len());
        let mut weights = Vec::with_capacity(edges.len());
        for (u, v, w) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::input(format!("parallel edge {}-{}", e.0, e.1)));
            }
            ends.push(e);
            weights.push(w);
        }
        Ok(EdgeWeightedGraph {
            n,
            edges: ends,
            weights,
            labels: None,
        })
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: Vec<S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        // Reuse the vertex-label validation.
        WeightedGraph::edgeless(vec![Weight::zero(); self.n]).with_labels(labels.clone())?;
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_weight(&self, e: usize) -> &Weight {
        &self.weights[e]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertex_label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Index of the vertex with this label (or this index, when unlabelled).
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(l) => l.iter().position(|x| x == label),
            None => label.parse().ok().filter(|&v| v < self.n),
        }
    }

    /// `u-v` rendering of edge `e`.
    pub fn edge_label(&self, e: usize) -> String {
        let (u, v) = self.edges[e];
        format!("{}-{}", self.vertex_label(u), self.vertex_label(v))
    }

    pub fn find_edge(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.iter().position(|&e| e == key)
    }

    /// Total weight of a set of edge indices.
    pub fn matching_weight(&self, edges: &[usize]) -> Weight {
        edges.iter().map(|&e| &self.weights[e]).sum()
    }

    /// True when no two of the given edges share an endpoint.
    pub fn is_matching(&self, edges: &[usize]) -> bool {
        let mut used = vec![false; self.n];
        for &e in edges {
            let (u, v) = self.edges[e];
            if used[u] || used[v] {
                return false;
            }
            used[u] = true;
            used[v] = true;
        }
        true
    }

    /// One vertex per edge (same index, same weight); two vertices adjacent
    /// iff their edges share an endpoint.
    pub fn line_graph(&self) -> WeightedGraph {
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            incident[u].push(e);
            incident[v].push(e);
        }
        let mut adjacent = Vec::new();
        for edges_at in &incident {
            for (i, &a) in edges_at.iter().enumerate() {
                for &b in &edges_at[i + 1..] {
                    adjacent.push((a, b));
                }
            }
        }
        let graph = WeightedGraph::new(self.weights.clone(), &adjacent)
            .expect("line graph of a simple graph is simple");
        let labels: Vec<String> = (0..self.edge_count()).map(|e| self.edge_label(e)).collect();
        graph.clone().with_labels(labels).unwrap_or(graph)
    }
}
