//! Spanning trees, fundamental cycles and the tree-dependent odd-component
//! count of the co-tree.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{GenusError, Result};
use crate::graph::{EdgeSubset, Multigraph};

/// How [`spanning_tree`] picks its tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TreeStrategy {
    /// DFS from vertex 0, incident edges explored in ascending edge id order.
    #[default]
    Dfs,
    /// DFS from a random root with each vertex's incident edges shuffled.
    Random { seed: u64 },
}

/// A spanning tree of a connected multigraph, rooted for path queries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    tree_edges: EdgeSubset,
    root: usize,
    /// `(parent vertex, connecting edge)`; `None` at the root.
    parent: Vec<Option<(usize, usize)>>,
    depth: Vec<usize>,
}

impl SpanningTree {
    /// Validates that `edges` is a spanning tree of `g` and roots it at `root`.
    pub fn from_edges(g: &Multigraph, edges: &EdgeSubset, root: usize) -> Result<Self> {
        let n = g.n_vertices();
        if root >= n {
            return Err(GenusError::VertexOutOfRange { vertex: root, n_vertices: n });
        }
        if edges.iter().any(|e| e >= g.n_edges()) {
            return Err(GenusError::NotASpanningTree("edge id out of range".into()));
        }
        if edges.len() + 1 != n {
            return Err(GenusError::NotASpanningTree(format!(
                "{} edges for {} vertices",
                edges.len(),
                n
            )));
        }
        let mut parent = vec![None; n];
        let mut depth = vec![usize::MAX; n];
        depth[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &(e, w) in g.incident(u) {
                if !edges.contains(e) || w == u {
                    continue;
                }
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = Some((u, e));
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        if reached != n {
            return Err(GenusError::NotASpanningTree("edges do not span the graph".into()));
        }
        let mut tree_edges = edges.clone();
        if tree_edges.universe() < g.n_edges() {
            // normalise the universe so equality compares sets only
            tree_edges = EdgeSubset::from_ids(g.n_edges(), edges.iter());
        }
        Ok(SpanningTree { tree_edges, root, parent, depth })
    }

    pub fn tree_edges(&self) -> &EdgeSubset {
        &self.tree_edges
    }

    /// Edges of the parent graph outside the tree.
    pub fn cotree_edges(&self) -> EdgeSubset {
        self.tree_edges.complement()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn n_vertices(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> Option<(usize, usize)> {
        self.parent[v]
    }

    /// The same tree viewed inside a supergraph with `n_edges` edges whose
    /// first edges coincide with those of the original graph.
    pub fn extend_universe(&self, n_edges: usize) -> SpanningTree {
        SpanningTree {
            tree_edges: EdgeSubset::from_ids(n_edges, self.tree_edges.iter()),
            ..self.clone()
        }
    }

    /// Tree edges and vertices on the path between `u` and `v`, found by
    /// climbing to the lowest common ancestor. Vertices are returned sorted.
    pub fn path(&self, u: usize, v: usize) -> (Vec<usize>, Vec<usize>) {
        let (mut a, mut b) = (u, v);
        let mut edges = Vec::new();
        let mut vertices = vec![a];
        if a != b {
            vertices.push(b);
        }
        while a != b {
            let climb_a = self.depth[a] >= self.depth[b];
            let x = if climb_a { &mut a } else { &mut b };
            let (p, e) = self.parent[*x].expect("non-root vertex has a parent");
            edges.push(e);
            *x = p;
            vertices.push(p);
        }
        vertices.sort_unstable();
        vertices.dedup();
        (edges, vertices)
    }
}

/// The unique cycle of `T + e` for a co-tree edge `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalCycle {
    pub cotree_edge: usize,
    pub edges: EdgeSubset,
    /// Sorted, distinct.
    pub vertices: Vec<usize>,
}

/// Builds a spanning tree of `g` with the given strategy.
pub fn spanning_tree(g: &Multigraph, strategy: TreeStrategy) -> Result<SpanningTree> {
    g.require_connected()?;
    let n = g.n_vertices();
    let (root, order): (usize, Vec<Vec<(usize, usize)>>) = match strategy {
        TreeStrategy::Dfs => (0, (0..n).map(|v| g.incident(v).to_vec()).collect()),
        TreeStrategy::Random { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let root = rng.gen_range(0..n);
            let order = (0..n)
                .map(|v| {
                    let mut inc = g.incident(v).to_vec();
                    inc.shuffle(&mut rng);
                    inc
                })
                .collect();
            (root, order)
        }
    };

    let mut visited = vec![false; n];
    let mut parent = vec![None; n];
    let mut depth = vec![0; n];
    let mut tree_edges = EdgeSubset::new(g.n_edges());
    visited[root] = true;
    let mut stack = vec![(root, 0usize)];
    while let Some(top) = stack.last_mut() {
        let (u, next) = *top;
        if next == order[u].len() {
            stack.pop();
            continue;
        }
        top.1 += 1;
        let (e, w) = order[u][next];
        if !visited[w] {
            visited[w] = true;
            parent[w] = Some((u, e));
            depth[w] = depth[u] + 1;
            tree_edges.insert(e);
            stack.push((w, 0));
        }
    }
    Ok(SpanningTree { tree_edges, root, parent, depth })
}

/// One fundamental cycle per co-tree edge, in ascending co-tree edge order.
pub fn fundamental_cycles(g: &Multigraph, t: &SpanningTree) -> Vec<FundamentalCycle> {
    (0..g.n_edges())
        .filter(|&e| !t.tree_edges.contains(e))
        .map(|e| {
            let (u, v) = g.endpoints(e);
            let (path_edges, vertices) = t.path(u, v);
            let mut edges = EdgeSubset::from_ids(g.n_edges(), path_edges);
            edges.insert(e);
            FundamentalCycle { cotree_edge: e, edges, vertices }
        })
        .collect()
}

/// Number of components of the co-tree with an odd number of edges.
pub fn xi_of_tree(g: &Multigraph, t: &SpanningTree) -> usize {
    g.components_of_subset(&t.cotree_edges())
        .iter()
        .filter(|c| c.len() % 2 == 1)
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Multigraph {
        Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn dumbbell() -> Multigraph {
        Multigraph::new(6, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]).unwrap()
    }

    /// Each vertex of the cycle has even degree inside the cycle's edge set,
    /// and the edges form one connected piece.
    fn assert_closed(g: &Multigraph, c: &FundamentalCycle) {
        let mut deg = vec![0usize; g.n_vertices()];
        for e in c.edges.iter() {
            let (u, v) = g.endpoints(e);
            deg[u] += 1;
            deg[v] += 1;
        }
        for (v, &d) in deg.iter().enumerate() {
            if c.vertices.binary_search(&v).is_ok() {
                assert_eq!(d, 2, "vertex {v} in cycle {c:?}");
            } else {
                assert_eq!(d, 0);
            }
        }
        assert_eq!(g.components_of_subset(&c.edges).len(), 1);
    }

    #[test]
    fn tree_input_is_its_own_spanning_tree() {
        let star = Multigraph::new(5, (1..5).map(|i| (0, i)).collect()).unwrap();
        let t = spanning_tree(&star, TreeStrategy::Dfs).unwrap();
        assert_eq!(t.tree_edges().len(), 4);
        assert!(fundamental_cycles(&star, &t).is_empty());
        assert_eq!(xi_of_tree(&star, &t), 0);
    }

    #[test]
    fn dfs_on_c4_takes_lowest_feasible_edges() {
        let c4 = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let t = spanning_tree(&c4, TreeStrategy::Dfs).unwrap();
        assert_eq!(t.tree_edges().to_vec(), vec![0, 1, 2]);
        let cycles = fundamental_cycles(&c4, &t);
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].edges.len(), 4);
        assert_eq!(cycles[0].vertices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn k4_counts() {
        let g = k4();
        let t = spanning_tree(&g, TreeStrategy::Dfs).unwrap();
        assert_eq!(t.tree_edges().len(), 3);
        assert_eq!(t.cotree_edges().len(), 3);
        for c in fundamental_cycles(&g, &t) {
            assert_closed(&g, &c);
        }
    }

    #[test]
    fn k4_star_tree_gives_three_triangles_through_hub() {
        let g = k4();
        let t = SpanningTree::from_edges(&g, &EdgeSubset::from_ids(6, [0, 1, 2]), 0).unwrap();
        let cycles = fundamental_cycles(&g, &t);
        let vs: Vec<_> = cycles.iter().map(|c| c.vertices.clone()).collect();
        assert_eq!(vs, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3]]);
        assert!(cycles.iter().all(|c| c.edges.len() == 3));
    }

    #[test]
    fn loop_cycle_is_the_loop_alone() {
        let g = Multigraph::new(2, vec![(0, 1), (1, 1)]).unwrap();
        let t = spanning_tree(&g, TreeStrategy::Dfs).unwrap();
        let cycles = fundamental_cycles(&g, &t);
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].edges.to_vec(), vec![1]);
        assert_eq!(cycles[0].vertices, vec![1]);
    }

    #[test]
    fn xi_of_tree_examples() {
        let c5 = Multigraph::new(5, (0..5).map(|i| (i, (i + 1) % 5)).collect()).unwrap();
        let t = spanning_tree(&c5, TreeStrategy::Dfs).unwrap();
        assert_eq!(xi_of_tree(&c5, &t), 1);

        let g = dumbbell();
        for seed in 0..20 {
            let t = spanning_tree(&g, TreeStrategy::Random { seed }).unwrap();
            assert!(t.tree_edges().contains(6), "bridge is in every spanning tree");
            assert_eq!(xi_of_tree(&g, &t), 2);
        }
    }

    #[test]
    fn dfs_is_reproducible_and_random_is_seeded() {
        let g = k4().add_edges(&[(0, 1), (2, 2), (1, 3)]).unwrap();
        assert_eq!(
            spanning_tree(&g, TreeStrategy::Dfs).unwrap(),
            spanning_tree(&g, TreeStrategy::Dfs).unwrap()
        );
        let a = spanning_tree(&g, TreeStrategy::Random { seed: 7 }).unwrap();
        let b = spanning_tree(&g, TreeStrategy::Random { seed: 7 }).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn from_edges_rejects_non_trees() {
        let g = k4();
        assert!(SpanningTree::from_edges(&g, &EdgeSubset::from_ids(6, [0, 1]), 0).is_err());
        assert!(SpanningTree::from_edges(&g, &EdgeSubset::from_ids(6, [0, 1, 3]), 0).is_err());
        let with_loop = g.add_edges(&[(0, 0)]).unwrap();
        assert!(SpanningTree::from_edges(&with_loop, &EdgeSubset::from_ids(7, [0, 1, 6]), 0).is_err());
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let g = Multigraph::new(3, vec![(0, 1)]).unwrap();
        assert_eq!(spanning_tree(&g, TreeStrategy::Dfs), Err(GenusError::DisconnectedGraph));
    }

    #[test]
    fn path_between_vertices() {
        let path = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let t = spanning_tree(&path, TreeStrategy::Dfs).unwrap();
        let (mut edges, vertices) = t.path(3, 1);
        edges.sort_unstable();
        assert_eq!(edges, vec![1, 2]);
        assert_eq!(vertices, vec![1, 2, 3]);
        assert_eq!(t.path(2, 2), (vec![], vec![2]));
    }
}
