//! The fundamental intersecting graph: one vertex per fundamental cycle, two
//! cycles adjacent when they share a graph vertex.

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::graph::SimpleGraph;
use crate::tree::FundamentalCycle;

#[derive(Clone, Debug)]
pub struct IntersectionGraph {
    graph: SimpleGraph,
    cycles: Vec<FundamentalCycle>,
}

impl IntersectionGraph {
    /// Number of cycles, i.e. the Betti number of the source graph.
    pub fn n_cycles(&self) -> usize {
        self.cycles.len()
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    /// `cycles()[i]` is the cycle behind vertex `i`.
    pub fn cycles(&self) -> &[FundamentalCycle] {
        &self.cycles
    }

    /// Smallest graph vertex on both cycle `a` and cycle `b`.
    pub fn common_vertex(&self, a: usize, b: usize) -> Option<usize> {
        smallest_common(&self.cycles[a].vertices, &self.cycles[b].vertices)
    }
}

fn smallest_common(a: &[usize], b: &[usize]) -> Option<usize> {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return Some(a[i]),
        }
    }
    None
}

/// Builds the intersecting graph of `cycles`; vertex `i` is `cycles[i]`.
pub fn build_intersection_graph(cycles: Vec<FundamentalCycle>) -> IntersectionGraph {
    let universe = cycles
        .iter()
        .flat_map(|c| c.vertices.last().copied())
        .max()
        .map_or(0, |v| v + 1);
    let sets: Vec<FixedBitSet> = cycles
        .iter()
        .map(|c| {
            let mut s = FixedBitSet::with_capacity(universe);
            s.extend(c.vertices.iter().copied());
            s
        })
        .collect();
    let adj: Vec<Vec<usize>> = (0..sets.len())
        .into_par_iter()
        .map(|i| {
            (0..sets.len())
                .filter(|&j| j != i && !sets[i].is_disjoint(&sets[j]))
                .collect()
        })
        .collect();
    IntersectionGraph { graph: SimpleGraph::from_sorted_adjacency(adj), cycles }
}

/// True iff every two fundamental cycles share a vertex (vacuous for fewer
/// than two cycles).
pub fn pairwise_intersecting(ig: &IntersectionGraph) -> bool {
    ig.graph.is_complete()
}
