//! Maximum-cardinality matching in general graphs by Edmonds' blossom
//! contraction.
//!
//! The search is seeded with a greedy matching (vertices and neighbours in
//! ascending order); then every still-unmatched vertex, in ascending order,
//! roots one breadth-first alternating-tree search, and the first augmenting
//! path found is applied. A root whose search fails can never become
//! augmentable later, so each vertex is tried at most once.

use std::collections::VecDeque;

use crate::graph::SimpleGraph;

const NONE: usize = usize::MAX;

/// A set of vertex-disjoint edges of a host graph.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Matching {
    /// `(a, b)` with `a < b`, sorted.
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    fn from_mates(mate: &[usize]) -> Self {
        let pairs = mate
            .iter()
            .enumerate()
            .filter(|&(u, &v)| v != NONE && u < v)
            .map(|(u, &v)| (u, v))
            .collect();
        Matching { pairs }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    /// Partner of every vertex of a host with `n` vertices.
    pub fn mates(&self, n: usize) -> Vec<Option<usize>> {
        let mut mate = vec![None; n];
        for &(a, b) in &self.pairs {
            mate[a] = Some(b);
            mate[b] = Some(a);
        }
        mate
    }

    /// Every pair is an edge of `h` and no vertex is used twice.
    pub fn is_valid_in(&self, h: &SimpleGraph) -> bool {
        let mut used = vec![false; h.n_vertices()];
        self.pairs.iter().all(|&(a, b)| {
            a < h.n_vertices()
                && b < h.n_vertices()
                && h.has_edge(a, b)
                && !std::mem::replace(&mut used[a], true)
                && !std::mem::replace(&mut used[b], true)
        })
    }
}

/// A maximum matching of `h`. Deterministic for a given input.
pub fn max_matching(h: &SimpleGraph) -> Matching {
    let mut search = BlossomSearch::new(h);
    search.greedy();
    for root in 0..h.n_vertices() {
        if search.mate[root] == NONE {
            if let Some(end) = search.find_augmenting_path(root) {
                search.augment(end);
            }
        }
    }
    Matching::from_mates(&search.mate)
}

struct BlossomSearch<'a> {
    h: &'a SimpleGraph,
    mate: Vec<usize>,
    // alternating-tree parent of outer-to-inner steps
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    lca_mark: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> BlossomSearch<'a> {
    fn new(h: &'a SimpleGraph) -> Self {
        let n = h.n_vertices();
        BlossomSearch {
            h,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            lca_mark: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn greedy(&mut self) {
        for u in 0..self.h.n_vertices() {
            if self.mate[u] != NONE {
                continue;
            }
            if let Some(&v) = self.h.neighbors(u).iter().find(|&&v| self.mate[v] == NONE) {
                self.mate[u] = v;
                self.mate[v] = u;
            }
        }
    }

    fn lowest_common_ancestor(&mut self, mut a: usize, mut b: usize) -> usize {
        self.lca_mark.fill(false);
        loop {
            a = self.base[a];
            self.lca_mark[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.lca_mark[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_blossom_path(&mut self, mut v: usize, blossom_base: usize, mut child: usize) {
        while self.base[v] != blossom_base {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the free vertex that
    /// ends an augmenting path, if any.
    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.h.n_vertices();
        self.in_tree.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.in_tree[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            let h = self.h;
            for &to in h.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                let to_is_outer = to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE);
                if to_is_outer {
                    let blossom_base = self.lowest_common_ancestor(v, to);
                    self.in_blossom.fill(false);
                    self.mark_blossom_path(v, blossom_base, to);
                    self.mark_blossom_path(to, blossom_base, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = blossom_base;
                            if !self.in_tree[i] {
                                self.in_tree[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.in_tree[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        SimpleGraph::new(n, edges).unwrap()
    }

    fn cycle(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        graph(n, &edges)
    }

    #[test]
    fn empty_graph() {
        assert_eq!(max_matching(&SimpleGraph::default()).size(), 0);
        assert_eq!(max_matching(&graph(4, &[])).size(), 0);
    }

    #[test]
    fn triangle() {
        let m = max_matching(&cycle(3));
        assert_eq!(m.size(), 1);
        assert_eq!(m.pairs(), &[(0, 1)]);
    }

    #[test]
    fn petersen_has_perfect_matching() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        let h = graph(10, &edges);
        let m = max_matching(&h);
        assert_eq!(m.size(), 5);
        assert!(m.is_valid_in(&h));
    }

    #[test]
    fn greedy_trap_needs_augmentation() {
        // in the last two, greedy grabs the middle edge of a 4-path first
        let h = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(max_matching(&h).size(), 2);
        let h = graph(4, &[(1, 2), (0, 1), (2, 3)]);
        assert_eq!(max_matching(&h).size(), 2);
        let h = graph(4, &[(0, 3), (1, 3), (1, 2)]);
        assert_eq!(max_matching(&h).size(), 2);
    }

    #[test]
    fn augmenting_through_a_blossom() {
        // pentagon with pendants at 0 and 2
        let h = graph(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (2, 6)],
        );
        assert_eq!(max_matching(&h).size(), 3);
        let odd = cycle(7);
        assert_eq!(max_matching(&odd).size(), 3);
    }

    #[test]
    fn deterministic() {
        let h = graph(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]);
        assert_eq!(max_matching(&h), max_matching(&h));
        assert_eq!(max_matching(&h).size(), 3);
    }

    #[test]
    fn validity_check_catches_bad_matchings() {
        let h = cycle(4);
        assert!(!Matching { pairs: vec![(0, 2)] }.is_valid_in(&h));
        assert!(!Matching { pairs: vec![(0, 1), (1, 2)] }.is_valid_in(&h));
        assert!(Matching { pairs: vec![(0, 1), (2, 3)] }.is_valid_in(&h));
    }
}
