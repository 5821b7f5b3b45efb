//! Brute-force ground truth, kept independent of the pipeline: the Betti
//! deficiency by enumerating every spanning tree, and maximum matching by
//! exhaustive search.

use std::ops::ControlFlow;

use crate::error::{GenusError, Result};
use crate::graph::{EdgeSubset, Multigraph, SimpleGraph};
use crate::matching::Matching;

/// Size limits for the exhaustive searches. Exceeding one is an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_trees: u64,
    /// Vertex limit for [`matching_oracle`].
    pub max_matching_vertices: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_vertices: 8, max_edges: 14, max_trees: 1_000_000, max_matching_vertices: 14 }
    }
}

impl OracleBudget {
    fn admit(&self, g: &Multigraph) -> Result<()> {
        if g.n_vertices() > self.max_vertices {
            return Err(GenusError::BudgetExceeded(format!(
                "{} vertices exceeds the limit of {}",
                g.n_vertices(),
                self.max_vertices
            )));
        }
        if g.n_edges() > self.max_edges {
            return Err(GenusError::BudgetExceeded(format!(
                "{} edges exceeds the limit of {}",
                g.n_edges(),
                self.max_edges
            )));
        }
        match spanning_tree_count(g) {
            Some(count) if count <= u128::from(self.max_trees) => Ok(()),
            count => Err(GenusError::BudgetExceeded(format!(
                "{} spanning trees exceeds the limit of {}",
                count.map_or_else(|| "too many".to_string(), |c| c.to_string()),
                self.max_trees
            ))),
        }
    }
}

/// Number of spanning trees by the matrix-tree theorem (loops ignored,
/// parallel edges counted). `None` if the exact determinant overflows.
pub fn spanning_tree_count(g: &Multigraph) -> Option<u128> {
    let n = g.n_vertices();
    if n == 0 {
        return Some(0);
    }
    let k = n - 1;
    let mut lap = vec![vec![0i128; k]; k];
    for &(u, v) in g.edges() {
        if u == v {
            continue;
        }
        for (a, b) in [(u, v), (v, u)] {
            if a < k {
                lap[a][a] += 1;
                if b < k {
                    lap[a][b] -= 1;
                }
            }
        }
    }
    // Bareiss fraction-free elimination
    let mut sign = 1i128;
    let mut prev = 1i128;
    for i in 0..k {
        if lap[i][i] == 0 {
            let Some(swap) = (i + 1..k).find(|&r| lap[r][i] != 0) else {
                return Some(0);
            };
            lap.swap(i, swap);
            sign = -sign;
        }
        for r in i + 1..k {
            for c in i + 1..k {
                let num = lap[r][c]
                    .checked_mul(lap[i][i])?
                    .checked_sub(lap[r][i].checked_mul(lap[i][c])?)?;
                lap[r][c] = num / prev;
            }
        }
        prev = lap[i][i];
    }
    let det = if k == 0 { 1 } else { sign * lap[k - 1][k - 1] };
    u128::try_from(det).ok()
}

/// Calls `visit` with the edge set of every spanning tree of `g`, enumerated
/// by deletion and contraction. Stops early if `visit` breaks.
pub fn for_each_spanning_tree<F>(g: &Multigraph, budget: &OracleBudget, mut visit: F) -> Result<()>
where
    F: FnMut(&EdgeSubset) -> ControlFlow<()>,
{
    g.require_connected()?;
    budget.admit(g)?;
    let edges: Vec<(usize, usize, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, &(u, v))| u != v)
        .map(|(id, &(u, v))| (u, v, id))
        .collect();
    let alive: Vec<usize> = (0..g.n_vertices()).collect();
    let mut chosen = EdgeSubset::new(g.n_edges());
    let mut emitted = 0u64;
    let _ = enumerate(&alive, &edges, &mut chosen, &mut |t| {
        emitted += 1;
        if emitted > budget.max_trees {
            return ControlFlow::Break(());
        }
        visit(t)
    });
    if emitted > budget.max_trees {
        return Err(GenusError::BudgetExceeded(format!("more than {} spanning trees", budget.max_trees)));
    }
    Ok(())
}

fn enumerate<F>(
    alive: &[usize],
    edges: &[(usize, usize, usize)],
    chosen: &mut EdgeSubset,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&EdgeSubset) -> ControlFlow<()>,
{
    if alive.len() == 1 {
        return visit(chosen);
    }
    let Some(&(a, b, id)) = edges.first() else {
        return ControlFlow::Continue(());
    };

    // contract: merge b into a, dropping the loops this creates
    let merged: Vec<usize> = alive.iter().copied().filter(|&v| v != b).collect();
    let contracted: Vec<_> = edges[1..]
        .iter()
        .map(|&(u, v, e)| (if u == b { a } else { u }, if v == b { a } else { v }, e))
        .filter(|&(u, v, _)| u != v)
        .collect();
    chosen.insert(id);
    let flow = enumerate(&merged, &contracted, chosen, visit);
    chosen.remove(id);
    flow?;

    // delete, unless that disconnects the graph
    let rest = &edges[1..];
    if connected(alive, rest) {
        enumerate(alive, rest, chosen, visit)?;
    }
    ControlFlow::Continue(())
}

fn connected(alive: &[usize], edges: &[(usize, usize, usize)]) -> bool {
    let max = alive.iter().copied().max().unwrap_or(0);
    let mut parent: Vec<usize> = (0..=max).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut components = alive.len();
    for &(u, v, _) in edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
            components -= 1;
        }
    }
    components == 1
}

fn odd_cotree_components(g: &Multigraph, tree: &EdgeSubset) -> usize {
    let mut cotree = EdgeSubset::full(g.n_edges());
    for e in tree.iter() {
        cotree.remove(e);
    }
    g.components_of_subset(&cotree).iter().filter(|c| c.len() % 2 == 1).count()
}

/// The Betti deficiency and one spanning tree attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiOracle {
    pub xi: usize,
    pub optimal_tree: EdgeSubset,
}

/// Minimum over all spanning trees of the number of odd co-tree components.
pub fn xi_oracle(g: &Multigraph, budget: &OracleBudget) -> Result<XiOracle> {
    let floor = g.betti()? % 2;
    let mut best: Option<XiOracle> = None;
    for_each_spanning_tree(g, budget, |t| {
        let xi = odd_cotree_components(g, t);
        if best.as_ref().is_none_or(|b| xi < b.xi) {
            best = Some(XiOracle { xi, optimal_tree: t.clone() });
        }
        // the deficiency has the parity of beta, so this is optimal
        if xi == floor {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(best.expect("a connected graph has a spanning tree"))
}

/// Maximum genus as `(beta - xi) / 2` with the enumerated deficiency.
pub fn genus_oracle(g: &Multigraph, budget: &OracleBudget) -> Result<usize> {
    let beta = g.betti()?;
    Ok((beta - xi_oracle(g, budget)?.xi) / 2)
}

/// Every spanning tree with its odd co-tree component count.
pub fn xi_table(g: &Multigraph, budget: &OracleBudget) -> Result<Vec<(EdgeSubset, usize)>> {
    let mut rows = Vec::new();
    for_each_spanning_tree(g, budget, |t| {
        rows.push((t.clone(), odd_cotree_components(g, t)));
        ControlFlow::Continue(())
    })?;
    Ok(rows)
}

/// Maximum matching size by exhaustive branch and bound.
pub fn matching_oracle(h: &SimpleGraph, budget: &OracleBudget) -> Result<usize> {
    let n = h.n_vertices();
    if n > budget.max_matching_vertices || n > 64 {
        return Err(GenusError::BudgetExceeded(format!(
            "{n} vertices exceeds the matching limit of {}",
            budget.max_matching_vertices
        )));
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| h.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    branch(&adj, all, 0, &mut best);
    Ok(best)
}

fn branch(adj: &[u64], free: u64, size: usize, best: &mut usize) {
    *best = (*best).max(size);
    if free == 0 || size + free.count_ones() as usize / 2 <= *best {
        return;
    }
    let v = free.trailing_zeros() as usize;
    let rest = free & !(1 << v);
    let mut partners = adj[v] & rest;
    while partners != 0 {
        let w = partners.trailing_zeros() as usize;
        partners &= partners - 1;
        branch(adj, rest & !(1 << w), size + 1, best);
    }
    branch(adj, rest, size, best);
}

/// Exhaustively searches for an augmenting path with respect to `m`;
/// returns its vertex sequence if one exists.
pub fn find_augmenting_path(h: &SimpleGraph, m: &Matching) -> Option<Vec<usize>> {
    let mate = m.mates(h.n_vertices());
    let mut path = Vec::new();
    let mut on_path = vec![false; h.n_vertices()];
    for start in (0..h.n_vertices()).filter(|&v| mate[v].is_none()) {
        path.push(start);
        on_path[start] = true;
        if extend(h, &mate, &mut path, &mut on_path) {
            return Some(path);
        }
        path.pop();
        on_path[start] = false;
    }
    None
}

// The last vertex of `path` was reached by a matched edge (or is the free
// start), so the next step uses an unmatched edge.
fn extend(h: &SimpleGraph, mate: &[Option<usize>], path: &mut Vec<usize>, on_path: &mut [bool]) -> bool {
    let v = *path.last().unwrap();
    for &w in h.neighbors(v) {
        if on_path[w] || mate[v] == Some(w) {
            continue;
        }
        match mate[w] {
            None => {
                path.push(w);
                return true;
            }
            Some(x) if !on_path[x] => {
                path.extend([w, x]);
                on_path[w] = true;
                on_path[x] = true;
                if extend(h, mate, path, on_path) {
                    return true;
                }
                path.truncate(path.len() - 2);
                on_path[w] = false;
                on_path[x] = false;
            }
            Some(_) => {}
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::max_matching;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Multigraph {
        Multigraph::new(n, edges.to_vec()).unwrap()
    }

    fn complete(n: usize) -> Multigraph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        graph(n, &e)
    }

    fn dumbbell() -> Multigraph {
        graph(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])
    }

    fn count_trees(g: &Multigraph) -> u128 {
        let mut n = 0;
        for_each_spanning_tree(g, &OracleBudget::default(), |_| {
            n += 1;
            ControlFlow::Continue(())
        })
        .unwrap();
        n
    }

    #[test]
    fn enumeration_matches_kirchhoff() {
        assert_eq!(spanning_tree_count(&complete(4)), Some(16));
        assert_eq!(count_trees(&complete(4)), 16);
        assert_eq!(spanning_tree_count(&complete(5)), Some(125));
        assert_eq!(count_trees(&complete(5)), 125);
        assert_eq!(count_trees(&dumbbell()), 9);
        // parallel edges give distinct trees, loops none
        let g = graph(2, &[(0, 1), (0, 1), (0, 1), (1, 1)]);
        assert_eq!((count_trees(&g), spanning_tree_count(&g)), (3, Some(3)));
        let b3 = graph(1, &[(0, 0); 3]);
        assert_eq!((count_trees(&b3), spanning_tree_count(&b3)), (1, Some(1)));
    }

    #[test]
    fn enumerated_trees_are_distinct_spanning_trees() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (0, 2), (1, 1)]);
        let mut seen = std::collections::HashSet::new();
        for_each_spanning_tree(&g, &OracleBudget::default(), |t| {
            assert!(crate::tree::SpanningTree::from_edges(&g, t, 0).is_ok());
            assert!(seen.insert(t.to_vec()));
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(seen.len() as u128, spanning_tree_count(&g).unwrap());
    }

    #[test]
    fn xi_examples() {
        let c6 = graph(6, &(0..6).map(|i| (i, (i + 1) % 6)).collect::<Vec<_>>());
        let b = OracleBudget::default();
        assert_eq!(xi_oracle(&c6, &b).unwrap().xi, 1);
        assert_eq!(xi_oracle(&dumbbell(), &b).unwrap().xi, 2);
        assert_eq!(xi_table(&dumbbell(), &b).unwrap().iter().map(|r| r.1).collect::<Vec<_>>(), vec![2; 9]);
        let k4 = xi_oracle(&complete(4), &b).unwrap();
        assert_eq!(k4.xi, 1);
        assert_eq!(k4.optimal_tree.len(), 3);
    }

    #[test]
    fn genus_examples() {
        let b = OracleBudget::default();
        assert_eq!(genus_oracle(&graph(3, &[(0, 1), (1, 2)]), &b), Ok(0));
        assert_eq!(genus_oracle(&complete(4), &b), Ok(1));
        let k33: Vec<_> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
        let k33 = graph(6, &k33);
        assert_eq!(xi_oracle(&k33, &b).unwrap().xi, 0);
        assert_eq!(genus_oracle(&k33, &b), Ok(2));
    }

    #[test]
    fn budget_is_enforced() {
        let tight = OracleBudget { max_trees: 100, ..OracleBudget::default() };
        assert!(matches!(xi_oracle(&complete(5), &tight), Err(GenusError::BudgetExceeded(_))));
        assert!(matches!(
            xi_oracle(&complete(9), &OracleBudget::default()),
            Err(GenusError::BudgetExceeded(_))
        ));
    }

    #[test]
    fn matching_oracle_examples() {
        let b = OracleBudget::default();
        let k4 = SimpleGraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(matching_oracle(&k4, &b), Ok(2));
        let star = SimpleGraph::new(6, &(1..6).map(|i| (0, i)).collect::<Vec<_>>()).unwrap();
        assert_eq!(matching_oracle(&star, &b), Ok(1));
        let c7 = SimpleGraph::new(7, &(0..7).map(|i| (i, (i + 1) % 7)).collect::<Vec<_>>()).unwrap();
        assert_eq!(matching_oracle(&c7, &b), Ok(3));
        assert!(matching_oracle(&SimpleGraph::new(15, &[]).unwrap(), &b).is_err());
    }

    #[test]
    fn augmenting_path_search() {
        let p4 = SimpleGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let middle_only = SimpleGraph::new(4, &[(1, 2)]).unwrap();
        let m = max_matching(&middle_only);
        assert_eq!(find_augmenting_path(&p4, &m), Some(vec![0, 1, 2, 3]));
        assert_eq!(find_augmenting_path(&p4, &max_matching(&p4)), None);
    }
}
