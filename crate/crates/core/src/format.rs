//! Line-oriented text formats for vertex- and edge-weighted graphs.
//!
//! Vertex-weighted (`gwis`):
//!
//! ```text
//! p gwis <n> <m>
//! v <label> <weight>      # n lines, declaration order = vertex index
//! e <label> <label>       # m lines
//! ```
//!
//! Edge-weighted (`gwem`), used for matchings:
//!
//! ```text
//! p gwem <n> <m>
//! v <label>
//! e <label> <label> <weight>
//! ```
//!
//! Weights are decimals (`2.5`) or rationals (`5/2`). Everything after `#` is
//! a comment; blank lines are ignored. Labels must be declared before use.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::line_graph::EdgeWeightedGraph;
use crate::weight::Weight;

/// A parsed graph plus where each piece came from.
#[derive(Clone, Debug)]
pub struct GraphDocument {
    pub graph: WeightedGraph,
    pub source: Option<String>,
    /// 1-based line of each vertex declaration, by vertex index.
    pub vertex_lines: Vec<usize>,
    /// 1-based lines of the edge declarations that were kept.
    pub edge_lines: Vec<usize>,
    /// Non-fatal findings, e.g. collapsed duplicate edges.
    pub warnings: Vec<String>,
}

pub(crate) struct Line<'a> {
    pub(crate) number: usize,
    pub(crate) fields: Vec<&'a str>,
}

pub(crate) fn significant_lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = content.split_whitespace().collect();
        (!fields.is_empty()).then_some(Line {
            number: i + 1,
            fields,
        })
    })
}

fn parse_count(line: usize, field: &str, what: &str) -> Result<usize> {
    field
        .parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} {field:?}")))
}

pub(crate) fn parse_weight(line: usize, field: &str) -> Result<Weight> {
    field.parse().map_err(|e| match e {
        Error::NegativeWeight(w) => Error::parse(line, format!("negative weight {w}")),
        _ => Error::parse(line, format!("invalid weight {field:?}")),
    })
}

/// Header and label bookkeeping shared by both formats.
struct Reader {
    kind: &'static str,
    declared: Option<(usize, usize)>,
    labels: Vec<String>,
    index: HashMap<String, usize>,
    vertex_lines: Vec<usize>,
    edge_lines_seen: usize,
    last_line: usize,
}

impl Reader {
    fn new(kind: &'static str) -> Self {
        Reader {
            kind,
            declared: None,
            labels: Vec::new(),
            index: HashMap::new(),
            vertex_lines: Vec::new(),
            edge_lines_seen: 0,
            last_line: 0,
        }
    }

    fn header(&mut self, line: &Line) -> Result<()> {
        if self.declared.is_some() {
            return Err(Error::parse(line.number, "duplicate problem line"));
        }
        if line.fields.len() != 4 || line.fields[1] != self.kind {
            return Err(Error::parse(
                line.number,
                format!("expected `p {} <n> <m>`", self.kind),
            ));
        }
        let n = parse_count(line.number, line.fields[2], "vertex count")?;
        let m = parse_count(line.number, line.fields[3], "edge count")?;
        self.declared = Some((n, m));
        Ok(())
    }

    fn require_header(&self, line: &Line) -> Result<()> {
        if self.declared.is_none() {
            return Err(Error::parse(line.number, "problem line must come first"));
        }
        Ok(())
    }

    fn vertex(&mut self, line: &Line, label: &str) -> Result<()> {
        self.require_header(line)?;
        if self.index.contains_key(label) {
            return Err(Error::parse(
                line.number,
                format!("duplicate vertex {label:?}"),
            ));
        }
        self.index.insert(label.to_string(), self.labels.len());
        self.labels.push(label.to_string());
        self.vertex_lines.push(line.number);
        Ok(())
    }

    fn endpoint(&self, line: &Line, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::parse(line.number, format!("unknown vertex {label:?}")))
    }

    fn edge(&mut self, line: &Line) -> Result<(usize, usize)> {
        self.require_header(line)?;
        let u = self.endpoint(line, line.fields[1])?;
        let v = self.endpoint(line, line.fields[2])?;
        if u == v {
            return Err(Error::parse(
                line.number,
                format!("self-loop on {:?}", line.fields[1]),
            ));
        }
        self.edge_lines_seen += 1;
        Ok((u.min(v), u.max(v)))
    }

    fn finish(&self) -> Result<()> {
        let (n, m) = self
            .declared
            .ok_or_else(|| Error::parse(self.last_line.max(1), "missing problem line"))?;
        if self.labels.len() != n {
            return Err(Error::parse(
                self.last_line,
                format!("header declares {n} vertices, found {}", self.labels.len()),
            ));
        }
        if self.edge_lines_seen != m {
            return Err(Error::parse(
                self.last_line,
                format!("header declares {m} edges, found {}", self.edge_lines_seen),
            ));
        }
        Ok(())
    }
}

fn expect_fields(line: &Line, count: usize, shape: &str) -> Result<()> {
    if line.fields.len() != count {
        return Err(Error::parse(line.number, format!("expected `{shape}`")));
    }
    Ok(())
}

/// Parses a `gwis` document.
pub fn parse_graph(text: &str) -> Result<GraphDocument> {
    let mut reader = Reader::new("gwis");
    let mut weights = Vec::new();
    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();
    let mut seen = HashSet::new();
    let mut warnings = Vec::new();

    for line in significant_lines(text) {
        reader.last_line = line.number;
        match line.fields[0] {
            "p" => reader.header(&line)?,
            "v" => {
                expect_fields(&line, 3, "v <label> <weight>")?;
                let weight = parse_weight(line.number, line.fields[2])?;
                reader.vertex(&line, line.fields[1])?;
                weights.push(weight);
            }
            "e" => {
                expect_fields(&line, 3, "e <label> <label>")?;
                let e = reader.edge(&line)?;
                if seen.insert(e) {
                    edges.push(e);
                    edge_lines.push(line.number);
                } else {
                    warnings.push(format!(
                        "line {}: duplicate edge {}-{} collapsed",
                        line.number, line.fields[1], line.fields[2]
                    ));
                }
            }
            other => {
                return Err(Error::parse(
                    line.number,
                    format!("unknown line type {other:?}"),
                ))
            }
        }
    }
    reader.finish()?;

    let graph = WeightedGraph::new(weights, &edges)?.with_labels(reader.labels)?;
    Ok(GraphDocument {
        graph,
        source: None,
        vertex_lines: reader.vertex_lines,
        edge_lines,
        warnings,
    })
}

pub fn read_graph_file(path: impl AsRef<Path>) -> Result<GraphDocument> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    let mut doc = parse_graph(&text)?;
    doc.source = Some(path.display().to_string());
    Ok(doc)
}

/// Writes a `gwis` document; `parse_graph` inverts it exactly.
pub fn write_graph(g: &WeightedGraph) -> String {
    let mut out = String::new();
    writeln!(out, "p gwis {} {}", g.n(), g.edge_count()).unwrap();
    for v in 0..g.n() {
        writeln!(out, "v {} {}", g.label(v), g.weight(v)).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", g.label(u), g.label(v)).unwrap();
    }
    out
}

/// Parses a `gwem` document. Parallel edges are an error here: each edge
/// carries its own weight, so collapsing would be ambiguous.
pub fn parse_edge_graph(text: &str) -> Result<EdgeWeightedGraph> {
    let mut reader = Reader::new("gwem");
    let mut edges = Vec::new();
    let mut seen = HashSet::new();

    for line in significant_lines(text) {
        reader.last_line = line.number;
        match line.fields[0] {
            "p" => reader.header(&line)?,
            "v" => {
                expect_fields(&line, 2, "v <label>")?;
                reader.vertex(&line, line.fields[1])?;
            }
            "e" => {
                expect_fields(&line, 4, "e <label> <label> <weight>")?;
                let weight = parse_weight(line.number, line.fields[3])?;
                let (u, v) = reader.edge(&line)?;
                if !seen.insert((u, v)) {
                    return Err(Error::parse(
                        line.number,
                        format!("parallel edge {}-{}", line.fields[1], line.fields[2]),
                    ));
                }
                edges.push((u, v, weight));
            }
            other => {
                return Err(Error::parse(
                    line.number,
                    format!("unknown line type {other:?}"),
                ))
            }
        }
    }
    reader.finish()?;
    EdgeWeightedGraph::new(reader.labels.len(), edges)?.with_labels(reader.labels)
}

pub fn write_edge_graph(g: &EdgeWeightedGraph) -> String {
    let mut out = String::new();
    writeln!(out, "p gwem {} {}", g.n(), g.edge_count()).unwrap();
    for v in 0..g.n() {
        writeln!(out, "v {}", g.vertex_label(v)).unwrap();
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        writeln!(
            out,
            "e {} {} {}",
            g.vertex_label(u),
            g.vertex_label(v),
            g.edge_weight(e)
        )
        .unwrap();
    }
    out
}
