use std::fmt::Write as _;

use maxgenus::{GenusReport, LabeledGraph};
use serde::Serialize;

#[derive(Serialize)]
pub struct CertificateJson {
    pub cycle_a: usize,
    pub cycle_b: usize,
    pub witness_vertex: usize,
    pub cotree_edge_a: usize,
    pub cotree_edge_b: usize,
}

#[derive(Serialize)]
pub struct ComputeJson {
    pub file: String,
    pub n_vertices: usize,
    pub n_edges: usize,
    pub beta: usize,
    pub gamma_max: usize,
    pub xi: usize,
    pub upper_embeddable: bool,
    pub tree: &'static str,
    pub tree_edges: Vec<usize>,
    pub tree_xi: usize,
    pub certificate: Vec<CertificateJson>,
    /// Input label of each dense vertex id.
    pub vertex_labels: Vec<u64>,
}

impl ComputeJson {
    pub fn new(file: String, lg: &LabeledGraph, r: &GenusReport, tree: &'static str) -> Self {
        ComputeJson {
            file,
            n_vertices: lg.graph.n_vertices(),
            n_edges: lg.graph.n_edges(),
            beta: r.beta,
            gamma_max: r.gamma_max,
            xi: r.xi,
            upper_embeddable: r.upper_embeddable,
            tree,
            tree_edges: r.tree.tree_edges().to_vec(),
            tree_xi: r.tree_xi,
            certificate: r
                .certificate
                .iter()
                .map(|c| CertificateJson {
                    cycle_a: c.cycle_a,
                    cycle_b: c.cycle_b,
                    witness_vertex: c.witness_vertex,
                    cotree_edge_a: c.cotree_edge_a,
                    cotree_edge_b: c.cotree_edge_b,
                })
                .collect(),
            vertex_labels: lg.labels.clone(),
        }
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}: {} vertices, {} edges, beta {}", self.file, self.n_vertices, self.n_edges, self.beta);
        let _ = writeln!(
            s,
            "  gamma_max {}  xi {}  upper_embeddable {}",
            self.gamma_max, self.xi, self.upper_embeddable
        );
        let _ = writeln!(s, "  {} tree (co-tree odd components {}): {}", self.tree, self.tree_xi, join(&self.tree_edges));
        for c in &self.certificate {
            let _ = writeln!(
                s,
                "  pair: cycles of edges {} and {} meet at vertex {}",
                c.cotree_edge_a, c.cotree_edge_b, self.vertex_labels[c.witness_vertex]
            );
        }
        s
    }
}

#[derive(Serialize)]
pub struct CheckJson {
    pub file: String,
    pub beta: usize,
    pub pipeline_gamma_max: usize,
    pub oracle_gamma_max: usize,
    pub oracle_xi: usize,
    pub equal: bool,
    pub bundle: Option<String>,
}

impl CheckJson {
    pub fn text(&self) -> String {
        let verdict = if self.equal { "agree" } else { "DISAGREE" };
        let mut s = format!(
            "{}: beta {}, pipeline gamma_max {}, oracle gamma_max {} (xi {}): {verdict}\n",
            self.file, self.beta, self.pipeline_gamma_max, self.oracle_gamma_max, self.oracle_xi
        );
        if let Some(b) = &self.bundle {
            let _ = writeln!(s, "  counterexample bundle: {b}");
        }
        s
    }
}

#[derive(Serialize)]
pub struct ErrorJson {
    pub file: String,
    pub error: String,
    pub exit_code: i32,
}

#[derive(Serialize)]
#[serde(untagged)]
pub enum Entry {
    Compute(ComputeJson),
    Check(CheckJson),
    Error(ErrorJson),
}

impl Entry {
    pub fn text(&self) -> String {
        match self {
            Entry::Compute(c) => c.text(),
            Entry::Check(c) => c.text(),
            // errors go to stderr
            Entry::Error(_) => String::new(),
        }
    }
}

fn join(ids: &[usize]) -> String {
    ids.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}
