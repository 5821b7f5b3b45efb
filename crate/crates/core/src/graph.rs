//! Multigraph value type, edge subsets and the simple graphs used for matching.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{GenusError, Result};

/// An undirected multigraph on vertices `0..n`. Loops and parallel edges are
/// allowed. Edge ids are the dense indices `0..m` into [`Multigraph::edges`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawMultigraph", into = "RawMultigraph")]
pub struct Multigraph {
    n_vertices: usize,
    edges: Vec<(usize, usize)>,
    // (edge id, other endpoint), ascending edge id. A loop is listed once.
    incidence: Vec<Vec<(usize, usize)>>,
}

#[derive(Serialize, Deserialize)]
struct RawMultigraph {
    n_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawMultigraph> for Multigraph {
    type Error = GenusError;

    fn try_from(raw: RawMultigraph) -> Result<Self> {
        Multigraph::new(raw.n_vertices, raw.edges)
    }
}

impl From<Multigraph> for RawMultigraph {
    fn from(g: Multigraph) -> Self {
        RawMultigraph { n_vertices: g.n_vertices, edges: g.edges }
    }
}

impl Multigraph {
    /// Builds a multigraph, checking that every endpoint is below `n_vertices`.
    pub fn new(n_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut incidence = vec![Vec::new(); n_vertices];
        for (id, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= n_vertices {
                    return Err(GenusError::VertexOutOfRange { vertex: w, n_vertices });
                }
            }
            incidence[u].push((id, v));
            if u != v {
                incidence[v].push((id, u));
            }
        }
        Ok(Multigraph { n_vertices, edges, incidence })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.edges[edge]
    }

    /// `(edge id, neighbour)` pairs at `v` in ascending edge id order. Loops
    /// appear once, with the neighbour equal to `v`.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.incidence[v]
    }

    /// Degree of `v`; a loop counts twice.
    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v]
            .iter()
            .map(|&(_, w)| if w == v { 2 } else { 1 })
            .sum()
    }

    pub fn is_loop(&self, edge: usize) -> bool {
        let (u, v) = self.edges[edge];
        u == v
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|&(u, v)| u != v && seen.insert((u.min(v), u.max(v))))
    }

    /// True iff the graph has exactly one component. The vertexless graph is
    /// reported as disconnected.
    pub fn is_connected(&self) -> bool {
        self.n_vertices > 0 && self.vertex_components(None).1 == 1
    }

    /// Fails with [`GenusError::DisconnectedGraph`] or [`GenusError::EmptyGraph`].
    pub fn require_connected(&self) -> Result<()> {
        if self.n_vertices == 0 {
            Err(GenusError::EmptyGraph)
        } else if !self.is_connected() {
            Err(GenusError::DisconnectedGraph)
        } else {
            Ok(())
        }
    }

    /// Cycle rank `m - n + 1` of a connected graph.
    pub fn betti(&self) -> Result<usize> {
        self.require_connected()?;
        Ok(self.n_edges() + 1 - self.n_vertices)
    }

    /// Component label of every vertex in the spanning subgraph that omits
    /// the edges in `removed`, together with the number of components.
    /// Labels are assigned in order of the smallest vertex of each component.
    pub fn vertex_components(&self, removed: Option<&EdgeSubset>) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.n_vertices];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..self.n_vertices {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for &(e, w) in &self.incidence[u] {
                    if removed.is_some_and(|r| r.contains(e)) || label[w] != usize::MAX {
                        continue;
                    }
                    label[w] = count;
                    stack.push(w);
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Splits the edge set `subset` into the edge sets of the connected
    /// components of the subgraph formed by those edges. Vertices not touched
    /// by `subset` produce no component. Components are ordered by their
    /// smallest edge id.
    pub fn components_of_subset(&self, subset: &EdgeSubset) -> Vec<EdgeSubset> {
        let mut comp_of_vertex = vec![usize::MAX; self.n_vertices];
        let mut comps: Vec<EdgeSubset> = Vec::new();
        let mut stack = Vec::new();
        for e in subset.iter() {
            let (start, _) = self.edges[e];
            if comp_of_vertex[start] != usize::MAX {
                continue;
            }
            let idx = comps.len();
            let mut comp = EdgeSubset::new(self.n_edges());
            comp_of_vertex[start] = idx;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for &(f, w) in &self.incidence[u] {
                    if !subset.contains(f) {
                        continue;
                    }
                    comp.insert(f);
                    if comp_of_vertex[w] == usize::MAX {
                        comp_of_vertex[w] = idx;
                        stack.push(w);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    /// Returns a copy with `new_edges` appended; existing edge ids are kept.
    pub fn add_edges(&self, new_edges: &[(usize, usize)]) -> Result<Multigraph> {
        let mut edges = self.edges.clone();
        edges.extend_from_slice(new_edges);
        Multigraph::new(self.n_vertices, edges)
    }

    /// Subgraph induced by `vertices` (which must be distinct). Vertex `i` of
    /// the result is `vertices[i]`; edges keep their relative order. The
    /// second value maps each new edge id to its id in `self`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Multigraph, Vec<usize>)> {
        let mut new_id = vec![usize::MAX; self.n_vertices];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n_vertices {
                return Err(GenusError::VertexOutOfRange { vertex: v, n_vertices: self.n_vertices });
            }
            new_id[v] = i;
        }
        let mut edges = Vec::new();
        let mut edge_map = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if new_id[u] != usize::MAX && new_id[v] != usize::MAX {
                edges.push((new_id[u], new_id[v]));
                edge_map.push(e);
            }
        }
        Ok((Multigraph::new(vertices.len(), edges)?, edge_map))
    }
}

/// A set of edge ids of one parent graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeSubset(FixedBitSet);

impl EdgeSubset {
    /// Empty subset of a graph with `n_edges` edges.
    pub fn new(n_edges: usize) -> Self {
        EdgeSubset(FixedBitSet::with_capacity(n_edges))
    }

    pub fn from_ids(n_edges: usize, ids: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::new(n_edges);
        for id in ids {
            s.insert(id);
        }
        s
    }

    /// Every edge of a graph with `n_edges` edges.
    pub fn full(n_edges: usize) -> Self {
        let mut s = Self::new(n_edges);
        s.0.insert_range(..);
        s
    }

    /// Number of edge ids the set can hold (the parent's edge count).
    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn insert(&mut self, edge: usize) {
        if edge >= self.0.len() {
            self.0.grow(edge + 1);
        }
        self.0.insert(edge);
    }

    pub fn remove(&mut self, edge: usize) {
        if edge < self.0.len() {
            self.0.set(edge, false);
        }
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.0.contains(edge)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    /// Ascending edge ids.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Edges of the parent graph not in this set.
    pub fn complement(&self) -> EdgeSubset {
        let mut c = self.0.clone();
        c.toggle_range(..);
        EdgeSubset(c)
    }

    pub fn is_subset(&self, other: &EdgeSubset) -> bool {
        self.0.is_subset(&other.0)
    }
}

/// An undirected graph without loops or parallel edges, stored as sorted
/// adjacency lists. Used for the cycle intersection graph and the matcher.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Fails with [`GenusError::NotSimple`] on a loop or a repeated pair.
    pub fn new(n_vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n_vertices];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n_vertices {
                    return Err(GenusError::VertexOutOfRange { vertex: w, n_vertices });
                }
            }
            if u == v {
                return Err(GenusError::NotSimple);
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            let before = list.len();
            list.dedup();
            if list.len() != before {
                return Err(GenusError::NotSimple);
            }
        }
        Ok(SimpleGraph { adj })
    }

    /// Adjacency lists must be symmetric, sorted, loop-free and duplicate-free.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(u, l)| l.windows(2).all(|w| w[0] < w[1]) && !l.contains(&u)));
        SimpleGraph { adj }
    }

    pub fn n_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn n_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// True iff every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        let n = self.adj.len();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }
}
