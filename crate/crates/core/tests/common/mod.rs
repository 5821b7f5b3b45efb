//! Seeded corpora shared by the integration tests.
#![allow(dead_code)]

use maxgenus::generators::random_connected;
use maxgenus::{GenusError, Multigraph, SimpleGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every connected simple graph on `1..=max_n` labelled vertices.
pub fn all_connected_simple(max_n: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let g = Multigraph::new(n, edges).unwrap();
            if g.is_connected() {
                out.push(g);
            }
        }
    }
    out
}

/// A seeded random connected multigraph (loops and parallel edges allowed)
/// with `n` drawn from `n_range` and `n - 1 <= m <= max_m`.
pub fn random_multigraph(seed: u64, n_range: std::ops::RangeInclusive<usize>, max_m: usize) -> Multigraph {
    let mut r = rng(seed);
    let n = r.gen_range(n_range);
    let m = r.gen_range(n - 1..=max_m.max(n - 1));
    random_connected(n, m, true, r.gen()).unwrap()
}

/// A seeded random simple graph on at most `max_n` vertices, edge density
/// drawn per graph.
pub fn random_simple(seed: u64, max_n: usize) -> SimpleGraph {
    let mut r = rng(seed);
    let n = r.gen_range(1..=max_n);
    let p: f64 = r.gen_range(0.1..0.9);
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|_| r.gen_bool(p))
        .collect();
    SimpleGraph::new(n, &edges).unwrap()
}

pub fn within_budget(e: &GenusError) -> bool {
    !matches!(e, GenusError::BudgetExceeded(_))
}
