//! Maximum orientable genus, Betti deficiency and upper-embeddability of
//! connected multigraphs, computed from a maximum matching on the graph whose
//! vertices are the fundamental cycles of a spanning tree.
//!
//! ```
//! use maxgenus::{generators, maximum_genus, TreeStrategy};
//!
//! let k4 = generators::complete(4);
//! let report = maximum_genus(&k4, TreeStrategy::Dfs).unwrap();
//! assert_eq!((report.beta, report.gamma_max, report.xi), (3, 1, 1));
//! assert!(report.upper_embeddable);
//! ```

pub mod bundle;
pub mod error;
pub mod generators;
pub mod genus;
pub mod graph;
pub mod intersect;
pub mod io;
pub mod matching;
pub mod oracle;
pub mod tree;

pub use bundle::CounterexampleBundle;
pub use error::{GenusError, Result};
pub use genus::{
    analyze, analyze_with_tree, edge_cut_check, maximum_genus, maximum_genus_with_tree,
    pairwise_intersection_check, two_edge_increment, CertificatePair, EdgeCutReport, GenusAnalysis,
    GenusReport, TwoEdgeIncrement,
};
pub use graph::{EdgeSubset, Multigraph, SimpleGraph};
pub use intersect::{build_intersection_graph, pairwise_intersecting, IntersectionGraph};
pub use io::{emit_edge_list, emit_simple_edge_list, parse_edge_list, LabeledGraph};
pub use matching::{max_matching, Matching};
pub use oracle::{genus_oracle, matching_oracle, xi_oracle, OracleBudget};
pub use tree::{fundamental_cycles, spanning_tree, xi_of_tree, FundamentalCycle, SpanningTree, TreeStrategy};
