//! Everything needed to inspect a disagreement between the pipeline and the
//! brute-force oracle, in a serializable form.

use serde::Serialize;

use crate::error::Result;
use crate::genus::analyze_with_tree;
use crate::graph::Multigraph;
use crate::oracle::{xi_table, OracleBudget};
use crate::tree::SpanningTree;

#[derive(Clone, Debug, Serialize)]
pub struct TreeXiRow {
    pub tree_edges: Vec<usize>,
    pub xi: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleBundle {
    pub graph: Multigraph,
    pub beta: usize,
    pub tree_edges: Vec<usize>,
    /// Co-tree edge of each intersecting-graph vertex.
    pub cycle_cotree_edges: Vec<usize>,
    pub intersection_edges: Vec<(usize, usize)>,
    pub matching: Vec<(usize, usize)>,
    pub pipeline_gamma_max: usize,
    pub oracle_xi: usize,
    pub oracle_gamma_max: usize,
    pub all_trees: Vec<TreeXiRow>,
}

impl CounterexampleBundle {
    /// Runs the pipeline with `tree` and enumerates every spanning tree of `g`.
    pub fn collect(g: &Multigraph, tree: &SpanningTree, budget: &OracleBudget) -> Result<Self> {
        let analysis = analyze_with_tree(g, tree.clone())?;
        let beta = analysis.report.beta;
        let all_trees: Vec<TreeXiRow> = xi_table(g, budget)?
            .into_iter()
            .map(|(t, xi)| TreeXiRow { tree_edges: t.to_vec(), xi })
            .collect();
        let oracle_xi = all_trees.iter().map(|r| r.xi).min().unwrap_or(0);
        Ok(CounterexampleBundle {
            graph: g.clone(),
            beta,
            tree_edges: analysis.report.tree.tree_edges().to_vec(),
            cycle_cotree_edges: analysis.intersection.cycles().iter().map(|c| c.cotree_edge).collect(),
            intersection_edges: analysis.intersection.graph().edges().collect(),
            matching: analysis.matching.pairs().to_vec(),
            pipeline_gamma_max: analysis.report.gamma_max,
            oracle_xi,
            oracle_gamma_max: (beta - oracle_xi) / 2,
            all_trees,
        })
    }

    pub fn is_mismatch(&self) -> bool {
        self.pipeline_gamma_max != self.oracle_gamma_max
    }
}
