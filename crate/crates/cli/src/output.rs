//! Human-readable text or `key=value` records on stdout.
//!
//! In record mode every line is `record=<kind>` followed by space-separated
//! `key=value` fields. Values never contain whitespace: sets print as
//! `{A,C}` and free text has its spaces replaced by `_`.

use std::fmt::Display;

use uwis_core::{VertexSet, WeightedGraph};

pub struct Record {
    line: String,
}

impl Record {
    pub fn new(kind: &str) -> Self {
        Record {
            line: format!("record={kind}"),
        }
    }

    pub fn field(mut self, key: &str, value: impl Display) -> Self {
        let value = value.to_string();
        let value: String = value
            .chars()
            .map(|c| if c.is_whitespace() { '_' } else { c })
            .collect();
        self.line.push(' ');
        self.line.push_str(key);
        self.line.push('=');
        self.line
            .push_str(if value.is_empty() { "-" } else { &value });
        self
    }
}

#[derive(Clone, Copy)]
pub struct Out {
    pub records: bool,
}

impl Out {
    pub fn text(&self, line: impl Display) {
        if !self.records {
            println!("{line}");
        }
    }

    pub fn record(&self, record: Record) {
        if self.records {
            println!("{}", record.line);
        }
    }
}

/// `{A,C}`: the record-mode rendering of a vertex set.
pub fn compact_set(g: &WeightedGraph, set: &VertexSet) -> String {
    let names: Vec<String> = set.iter().map(|v| g.label(v)).collect();
    format!("{{{}}}", names.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_values_never_contain_whitespace() {
        let r = Record::new("x")
            .field("a", "two words")
            .field("b", "")
            .field("c", 3);
        assert_eq!(r.line, "record=x a=two_words b=- c=3");
    }
}
