//! Fixture graphs shared by the benchmarks.

use maxgenus::generators::{random_connected, random_simple_connected};
use maxgenus::{Multigraph, SimpleGraph};

/// Random connected simple-ish multigraph on `beta / 2` vertices with Betti
/// number `beta`.
pub fn graph_with_betti(beta: usize, seed: u64) -> Multigraph {
    let n = (beta / 2).max(2);
    random_connected(n, n + beta - 1, false, seed).expect("valid fixture parameters")
}

/// Random connected simple graph as a matcher input.
pub fn matcher_input(n: usize, m: usize, seed: u64) -> SimpleGraph {
    let g = random_simple_connected(n, m, seed).expect("valid fixture parameters");
    SimpleGraph::new(n, g.edges()).expect("generator output is simple")
}

/// Sparse graph whose greedy matching leaves many augmentations to the search.
pub fn sparse_matcher_input(n: usize, seed: u64) -> SimpleGraph {
    matcher_input(n, n + n / 2, seed)
}
