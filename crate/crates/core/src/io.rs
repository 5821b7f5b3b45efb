//! Plain-text edge lists: one edge per line as two whitespace-separated
//! non-negative integer labels. Equal labels make a loop, repeated lines make
//! parallel edges, `#` starts a comment, blank lines are skipped.

use std::fmt::Write;

use crate::error::{GenusError, Result};
use crate::graph::{Multigraph, SimpleGraph};

/// A parsed graph with dense vertex ids. `labels[v]` is the file label of
/// vertex `v`; labels are densified in ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Multigraph,
    pub labels: Vec<u64>,
}

pub fn parse_edge_list(text: &str) -> Result<LabeledGraph> {
    let mut raw = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("");
        let mut tokens = content.split_whitespace();
        let Some(a) = tokens.next() else { continue };
        let parse = |tok: Option<&str>| -> Result<u64> {
            let tok = tok.ok_or_else(|| GenusError::Parse { line: i + 1, message: "expected two vertex labels".into() })?;
            tok.parse().map_err(|_| GenusError::Parse {
                line: i + 1,
                message: format!("invalid vertex label {tok:?}"),
            })
        };
        let u = parse(Some(a))?;
        let v = parse(tokens.next())?;
        if let Some(extra) = tokens.next() {
            return Err(GenusError::Parse { line: i + 1, message: format!("unexpected token {extra:?}") });
        }
        raw.push((u, v));
    }
    let mut labels: Vec<u64> = raw.iter().flat_map(|&(u, v)| [u, v]).collect();
    labels.sort_unstable();
    labels.dedup();
    let id = |l: u64| labels.binary_search(&l).expect("label was collected");
    let edges = raw.iter().map(|&(u, v)| (id(u), id(v))).collect();
    let graph = Multigraph::new(labels.len(), edges)?;
    Ok(LabeledGraph { graph, labels })
}

/// One `u v` line per edge in edge id order.
pub fn emit_edge_list(g: &Multigraph) -> String {
    let mut out = String::with_capacity(g.n_edges() * 8);
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Emits a simple graph's edges, `u < v`, in lexicographic order.
pub fn emit_simple_edge_list(h: &SimpleGraph) -> String {
    let mut out = String::new();
    for (u, v) in h.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
