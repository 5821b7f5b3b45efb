//! Maximum genus through fundamental cycles.
//!
//! Pick a spanning tree, build the intersecting graph of its fundamental
//! cycles, and take a maximum matching there: every matched pair of cycles
//! that share a vertex is counted as one handle. The Betti deficiency is then
//! reported as `beta - 2 * gamma_max`, which may be smaller than the odd
//! co-tree component count of the particular tree used.

use crate::error::{GenusError, Result};
use crate::graph::{EdgeSubset, Multigraph};
use crate::intersect::{build_intersection_graph, pairwise_intersecting, IntersectionGraph};
use crate::matching::{max_matching, Matching};
use crate::tree::{fundamental_cycles, spanning_tree, xi_of_tree, SpanningTree, TreeStrategy};

/// One matched pair of fundamental cycles and a vertex they share.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertificatePair {
    pub cycle_a: usize,
    pub cycle_b: usize,
    /// Smallest common vertex id.
    pub witness_vertex: usize,
    pub cotree_edge_a: usize,
    pub cotree_edge_b: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusReport {
    pub beta: usize,
    pub gamma_max: usize,
    /// `beta - 2 * gamma_max`.
    pub xi: usize,
    pub upper_embeddable: bool,
    pub tree: SpanningTree,
    /// Odd co-tree components of `tree` itself.
    pub tree_xi: usize,
    pub certificate: Vec<CertificatePair>,
}

impl GenusReport {
    /// Checks the report's internal consistency against `g`.
    pub fn check_invariants(&self, g: &Multigraph) -> Result<(), String> {
        let fail = |msg: String| Err(msg);
        if self.gamma_max != self.certificate.len() {
            return fail(format!("gamma_max {} but {} certificate pairs", self.gamma_max, self.certificate.len()));
        }
        if 2 * self.gamma_max > self.beta || self.xi != self.beta - 2 * self.gamma_max {
            return fail(format!("beta {} gamma_max {} xi {}", self.beta, self.gamma_max, self.xi));
        }
        if self.upper_embeddable != (self.xi <= 1) {
            return fail("upper_embeddable disagrees with xi".into());
        }
        if self.tree_xi % 2 != self.beta % 2 {
            return fail(format!("tree xi {} has the wrong parity", self.tree_xi));
        }
        let cycles = fundamental_cycles(g, &self.tree);
        let mut used = vec![false; cycles.len()];
        for p in &self.certificate {
            let (a, b) = (&cycles[p.cycle_a], &cycles[p.cycle_b]);
            if a.cotree_edge != p.cotree_edge_a || b.cotree_edge != p.cotree_edge_b {
                return fail(format!("pair {p:?} names the wrong co-tree edges"));
            }
            if a.vertices.binary_search(&p.witness_vertex).is_err()
                || b.vertices.binary_search(&p.witness_vertex).is_err()
            {
                return fail(format!("witness of pair {p:?} is not on both cycles"));
            }
            for c in [p.cycle_a, p.cycle_b] {
                if std::mem::replace(&mut used[c], true) {
                    return fail(format!("cycle {c} appears in two pairs"));
                }
            }
        }
        Ok(())
    }
}

/// Every intermediate object of one pipeline run.
#[derive(Clone, Debug)]
pub struct GenusAnalysis {
    pub intersection: IntersectionGraph,
    pub matching: Matching,
    pub report: GenusReport,
}

/// Runs the pipeline on `g` with a tree chosen by `strategy`.
pub fn maximum_genus(g: &Multigraph, strategy: TreeStrategy) -> Result<GenusReport> {
    let tree = spanning_tree(g, strategy)?;
    Ok(analyze_with_tree(g, tree)?.report)
}

/// Runs the pipeline on `g` with a caller-supplied spanning tree.
pub fn maximum_genus_with_tree(g: &Multigraph, tree: &SpanningTree) -> Result<GenusReport> {
    Ok(analyze_with_tree(g, tree.clone())?.report)
}

pub fn analyze(g: &Multigraph, strategy: TreeStrategy) -> Result<GenusAnalysis> {
    analyze_with_tree(g, spanning_tree(g, strategy)?)
}

pub fn analyze_with_tree(g: &Multigraph, tree: SpanningTree) -> Result<GenusAnalysis> {
    let beta = g.betti()?;
    if tree.n_vertices() != g.n_vertices() || tree.tree_edges().iter().any(|e| e >= g.n_edges()) {
        return Err(GenusError::NotASpanningTree("tree belongs to another graph".into()));
    }
    let tree = tree.extend_universe(g.n_edges());
    let tree_xi = xi_of_tree(g, &tree);
    let intersection = build_intersection_graph(fundamental_cycles(g, &tree));
    let matching = max_matching(intersection.graph());
    let certificate = matching
        .pairs()
        .iter()
        .map(|&(a, b)| CertificatePair {
            cycle_a: a,
            cycle_b: b,
            witness_vertex: intersection
                .common_vertex(a, b)
                .expect("matched cycles are adjacent"),
            cotree_edge_a: intersection.cycles()[a].cotree_edge,
            cotree_edge_b: intersection.cycles()[b].cotree_edge,
        })
        .collect::<Vec<_>>();
    let gamma_max = certificate.len();
    let xi = beta - 2 * gamma_max;
    let report = GenusReport {
        beta,
        gamma_max,
        xi,
        upper_embeddable: xi <= 1,
        tree,
        tree_xi,
        certificate,
    };
    Ok(GenusAnalysis { intersection, matching, report })
}

/// Reports for a graph before and after adding two edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoEdgeIncrement {
    pub before: GenusReport,
    pub after: GenusReport,
}

impl TwoEdgeIncrement {
    /// `after.gamma_max - before.gamma_max`, signed.
    pub fn genus_change(&self) -> i64 {
        self.after.gamma_max as i64 - self.before.gamma_max as i64
    }
}

/// Adds edges `e1` and `e2` to `g`, requiring that the cycles they would
/// close through `tree` share a vertex, and reports the maximum genus of both
/// graphs using `tree` (which still spans the enlarged graph).
pub fn two_edge_increment(
    g: &Multigraph,
    tree: &SpanningTree,
    e1: (usize, usize),
    e2: (usize, usize),
) -> Result<TwoEdgeIncrement> {
    for &w in &[e1.0, e1.1, e2.0, e2.1] {
        if w >= g.n_vertices() {
            return Err(GenusError::VertexOutOfRange { vertex: w, n_vertices: g.n_vertices() });
        }
    }
    let (_, c1) = tree.path(e1.0, e1.1);
    let (_, c2) = tree.path(e2.0, e2.1);
    if !c1.iter().any(|v| c2.binary_search(v).is_ok()) {
        return Err(GenusError::PreconditionFailed(format!(
            "cycles closed by {e1:?} and {e2:?} are vertex-disjoint"
        )));
    }
    let before = maximum_genus_with_tree(g, tree)?;
    let bigger = g.add_edges(&[e1, e2])?;
    let after = maximum_genus_with_tree(&bigger, &tree.extend_universe(bigger.n_edges()))?;
    Ok(TwoEdgeIncrement { before, after })
}

/// Outcome of evaluating the two-component edge-cut criteria.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCutReport {
    pub beta: usize,
    pub side_betti: [usize; 2],
    pub cut_size: usize,
    /// Both sides report as upper-embeddable; the criteria only apply then.
    pub sides_upper_embeddable: bool,
    pub gamma_max: usize,
    pub upper_embeddable: bool,
    /// `gamma_max >= floor(beta / 2) - 1`.
    pub bound_holds: bool,
    /// Both sides have even Betti number.
    pub condition1: bool,
    /// Odd cut size and odd total side Betti number.
    pub condition2: bool,
    pub upper_claim_applicable: bool,
}

/// Evaluates the edge-cut criteria for `cut`, which must split `g` into
/// exactly two components with every cut edge running between them. The
/// upper-embeddability of each side is computed, not assumed.
pub fn edge_cut_check(g: &Multigraph, cut: &EdgeSubset) -> Result<EdgeCutReport> {
    g.require_connected()?;
    if cut.iter().any(|e| e >= g.n_edges()) {
        return Err(GenusError::NotATwoComponentCut("edge id out of range".into()));
    }
    let (label, count) = g.vertex_components(Some(cut));
    if count != 2 {
        return Err(GenusError::NotATwoComponentCut(format!("removal leaves {count} components")));
    }
    if let Some(e) = cut.iter().find(|&e| {
        let (u, v) = g.endpoints(e);
        label[u] == label[v]
    }) {
        return Err(GenusError::NotATwoComponentCut(format!("edge {e} lies inside one side")));
    }
    let mut sides = [Vec::new(), Vec::new()];
    for (v, &l) in label.iter().enumerate() {
        sides[l].push(v);
    }
    let mut side_betti = [0; 2];
    let mut sides_upper_embeddable = true;
    for (i, side) in sides.iter().enumerate() {
        let (sub, _) = g.induced_subgraph(side)?;
        let r = maximum_genus(&sub, TreeStrategy::Dfs)?;
        side_betti[i] = r.beta;
        sides_upper_embeddable &= r.upper_embeddable;
    }
    let whole = maximum_genus(g, TreeStrategy::Dfs)?;
    let cut_size = cut.len();
    let condition1 = side_betti.iter().all(|b| b % 2 == 0);
    let condition2 = cut_size % 2 == 1 && (side_betti[0] + side_betti[1]) % 2 == 1;
    Ok(EdgeCutReport {
        beta: whole.beta,
        side_betti,
        cut_size,
        sides_upper_embeddable,
        gamma_max: whole.gamma_max,
        upper_embeddable: whole.upper_embeddable,
        bound_holds: whole.gamma_max + 1 >= whole.beta / 2,
        condition1,
        condition2,
        upper_claim_applicable: condition1 || condition2,
    })
}

/// Checks the pairwise-intersection criterion for `tree`: when every two
/// fundamental cycles share a vertex, the pipeline must report `g` as
/// upper-embeddable. Returns whether the premise held.
pub fn pairwise_intersection_check(g: &Multigraph, tree: &SpanningTree) -> Result<bool> {
    let analysis = analyze_with_tree(g, tree.clone())?;
    let premise = pairwise_intersecting(&analysis.intersection);
    if premise && !analysis.report.upper_embeddable {
        return Err(GenusError::InvariantViolation(
            "all fundamental cycles intersect but the graph is not reported upper-embeddable".into(),
        ));
    }
    Ok(premise)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Multigraph {
        Multigraph::new(n, edges.to_vec()).unwrap()
    }

    fn k4() -> Multigraph {
        graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    fn dumbbell() -> Multigraph {
        graph(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])
    }

    fn summary(r: &GenusReport) -> (usize, usize, usize, bool) {
        (r.beta, r.gamma_max, r.xi, r.upper_embeddable)
    }

    #[test]
    fn tree_has_genus_zero() {
        let g = graph(4, &[(0, 1), (1, 2), (1, 3)]);
        let r = maximum_genus(&g, TreeStrategy::Dfs).unwrap();
        assert_eq!(summary(&r), (0, 0, 0, true));
        assert!(r.certificate.is_empty());
    }

    #[test]
    fn known_small_values() {
        let r = maximum_genus(&dumbbell(), TreeStrategy::Dfs).unwrap();
        assert_eq!(summary(&r), (2, 0, 2, false));
        assert_eq!(r.tree_xi, 2);

        let r = maximum_genus(&k4(), TreeStrategy::Dfs).unwrap();
        assert_eq!(summary(&r), (3, 1, 1, true));

        let b4 = graph(1, &[(0, 0); 4]);
        let r = maximum_genus(&b4, TreeStrategy::Dfs).unwrap();
        assert_eq!(summary(&r), (4, 2, 0, true));

        let mut k5 = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                k5.push((i, j));
            }
        }
        let r = maximum_genus(&graph(5, &k5), TreeStrategy::Dfs).unwrap();
        assert_eq!(summary(&r), (6, 3, 0, true));
    }

    #[test]
    fn reports_are_internally_consistent() {
        for g in [k4(), dumbbell(), graph(1, &[(0, 0); 3])] {
            for seed in 0..5 {
                let r = maximum_genus(&g, TreeStrategy::Random { seed }).unwrap();
                r.check_invariants(&g).unwrap();
            }
        }
    }

    #[test]
    fn certificate_witness_is_smallest_common_vertex() {
        let g = k4();
        let t = SpanningTree::from_edges(&g, &EdgeSubset::from_ids(6, [0, 1, 2]), 0).unwrap();
        let r = maximum_genus_with_tree(&g, &t).unwrap();
        assert_eq!(
            r.certificate,
            vec![CertificatePair { cycle_a: 0, cycle_b: 1, witness_vertex: 0, cotree_edge_a: 3, cotree_edge_b: 4 }]
        );
    }

    #[test]
    fn check_invariants_flags_tampering() {
        let g = k4();
        let mut r = maximum_genus(&g, TreeStrategy::Dfs).unwrap();
        r.certificate[0].witness_vertex = 99;
        assert!(r.check_invariants(&g).is_err());
        let mut r = maximum_genus(&g, TreeStrategy::Dfs).unwrap();
        r.upper_embeddable = false;
        assert!(r.check_invariants(&g).is_err());
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = graph(4, &[(0, 1), (2, 3)]);
        assert_eq!(maximum_genus(&g, TreeStrategy::Dfs), Err(GenusError::DisconnectedGraph));
    }

    #[test]
    fn increment_on_c4_with_crossing_chords() {
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let t = SpanningTree::from_edges(&c4, &EdgeSubset::from_ids(4, [0, 1, 2]), 0).unwrap();
        let inc = two_edge_increment(&c4, &t, (0, 2), (1, 3)).unwrap();
        assert_eq!((inc.before.gamma_max, inc.after.gamma_max), (0, 1));
        assert_eq!(inc.before.upper_embeddable, inc.after.upper_embeddable);
    }

    #[test]
    fn increment_on_star_through_hub() {
        let star = graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let t = spanning_tree(&star, TreeStrategy::Dfs).unwrap();
        let inc = two_edge_increment(&star, &t, (1, 2), (2, 3)).unwrap();
        assert_eq!(inc.genus_change(), 1);
    }

    #[test]
    fn increment_rejects_disjoint_cycles() {
        let path = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]);
        let t = spanning_tree(&path, TreeStrategy::Dfs).unwrap();
        assert!(matches!(
            two_edge_increment(&path, &t, (0, 1), (4, 5)),
            Err(GenusError::PreconditionFailed(_))
        ));
    }

    /// Two edges parallel to the dumbbell's bridge close cycles through both
    /// bridge ends, and the genus jumps by two.
    #[test]
    fn increment_on_dumbbell_bridge_is_two() {
        let g = dumbbell();
        let t = spanning_tree(&g, TreeStrategy::Dfs).unwrap();
        let inc = two_edge_increment(&g, &t, (2, 3), (2, 3)).unwrap();
        assert_eq!((inc.before.gamma_max, inc.after.gamma_max), (0, 2));
        assert!(!inc.before.upper_embeddable && inc.after.upper_embeddable);
    }

    #[test]
    fn edge_cut_between_two_k4() {
        let mut edges = k4().edges().to_vec();
        edges.extend(k4().edges().iter().map(|&(u, v)| (u + 4, v + 4)));
        edges.push((0, 4));
        edges.push((1, 5));
        let g = graph(8, &edges);
        let cut = EdgeSubset::from_ids(14, [12, 13]);
        let r = edge_cut_check(&g, &cut).unwrap();
        assert_eq!(r.side_betti, [3, 3]);
        assert!(r.sides_upper_embeddable);
        assert!(!r.condition1 && !r.condition2 && !r.upper_claim_applicable);
        assert!(r.bound_holds);
        assert_eq!(r.beta, 7);
    }

    #[test]
    fn edge_cut_between_two_c4_with_three_edges() {
        let mut edges: Vec<_> = (0..4).map(|i| (i, (i + 1) % 4)).collect();
        edges.extend((0..4).map(|i| (i + 4, (i + 1) % 4 + 4)));
        edges.extend([(0, 4), (1, 5), (2, 6)]);
        let g = graph(8, &edges);
        let r = edge_cut_check(&g, &EdgeSubset::from_ids(11, [8, 9, 10])).unwrap();
        assert_eq!((r.cut_size, r.side_betti), (3, [1, 1]));
        assert!(!r.condition2 && !r.condition1);
    }

    #[test]
    fn edge_cut_between_two_thetas() {
        let theta = [(0, 1), (0, 1), (0, 1)];
        let mut edges = theta.to_vec();
        edges.extend(theta.iter().map(|&(u, v)| (u + 2, v + 2)));
        edges.push((1, 2));
        let g = graph(4, &edges);
        let r = edge_cut_check(&g, &EdgeSubset::from_ids(7, [6])).unwrap();
        assert!(r.condition1 && r.upper_claim_applicable);
        assert!(r.sides_upper_embeddable && r.upper_embeddable);
    }

    #[test]
    fn edge_cut_errors() {
        let g = k4();
        assert!(matches!(
            edge_cut_check(&g, &EdgeSubset::from_ids(6, [0])),
            Err(GenusError::NotATwoComponentCut(_))
        ));
        // isolates vertex 0 but also removes an edge inside the other side
        assert!(matches!(
            edge_cut_check(&g, &EdgeSubset::from_ids(6, [0, 1, 2, 3])),
            Err(GenusError::NotATwoComponentCut(_))
        ));
        assert!(edge_cut_check(&g, &EdgeSubset::from_ids(6, [0, 1, 2])).is_ok());
    }

    #[test]
    fn pairwise_intersection_examples() {
        let b3 = graph(1, &[(0, 0); 3]);
        let t = spanning_tree(&b3, TreeStrategy::Dfs).unwrap();
        assert_eq!(pairwise_intersection_check(&b3, &t), Ok(true));
        let r = maximum_genus(&b3, TreeStrategy::Dfs).unwrap();
        assert_eq!((r.gamma_max, r.xi, r.upper_embeddable), (1, 1, true));

        // wheel with five spokes, star tree at the hub
        let mut w5: Vec<_> = (1..=5).map(|i| (0, i)).collect();
        w5.extend((1..=5).map(|i| (i, i % 5 + 1)));
        let w5 = graph(6, &w5);
        let t = SpanningTree::from_edges(&w5, &EdgeSubset::from_ids(10, 0..5), 0).unwrap();
        assert_eq!(pairwise_intersection_check(&w5, &t), Ok(true));

        let d = dumbbell();
        let t = spanning_tree(&d, TreeStrategy::Dfs).unwrap();
        assert_eq!(pairwise_intersection_check(&d, &t), Ok(false));
    }
}
