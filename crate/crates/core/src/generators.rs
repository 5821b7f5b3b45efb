//! Graph families used as test corpora: cartesian products with paths,
//! hypercubes, generalized Petersen graphs, joined Halin graphs, and a few
//! small classics.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{GenusError, Result};
use crate::graph::Multigraph;

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(GenusError::InvalidParameter(msg.into()))
}

fn build(n: usize, edges: Vec<(usize, usize)>) -> Multigraph {
    Multigraph::new(n, edges).expect("generator endpoints are in range")
}

/// `g x P_len`: `len + 1` layered copies of `g`, consecutive copies joined
/// vertex-to-vertex. Vertex `(v, layer)` gets id `layer * n + v`.
pub fn cartesian_path_product(g: &Multigraph, len: usize) -> Result<Multigraph> {
    if !g.is_simple() {
        return Err(GenusError::NotSimple);
    }
    g.require_connected()?;
    if len == 0 {
        return invalid("path length must be at least 1");
    }
    let n = g.n_vertices();
    let mut edges = Vec::with_capacity((len + 1) * g.n_edges() + len * n);
    for layer in 0..=len {
        edges.extend(g.edges().iter().map(|&(u, v)| (layer * n + u, layer * n + v)));
    }
    for layer in 0..len {
        edges.extend((0..n).map(|v| (layer * n + v, (layer + 1) * n + v)));
    }
    Ok(build((len + 1) * n, edges))
}

/// The `dim`-cube, built as two copies of the `(dim-1)`-cube with matching
/// vertices joined. Supported for `1 <= dim <= 10`.
pub fn hypercube(dim: usize) -> Result<Multigraph> {
    if !(1..=10).contains(&dim) {
        return invalid(format!("hypercube dimension {dim} outside 1..=10"));
    }
    let mut n = 1;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for _ in 0..dim {
        let copy: Vec<_> = edges.iter().map(|&(u, v)| (u + n, v + n)).collect();
        edges.extend(copy);
        edges.extend((0..n).map(|v| (v, v + n)));
        n *= 2;
    }
    Ok(build(n, edges))
}

/// `P(n, k)`: outer cycle `u_0..u_{n-1}` (ids `0..n`), spokes `u_i v_i`, and
/// inner edges `v_i v_{i+k}` (ids `n..2n`). Requires `n >= 3`, `1 <= k < n`
/// and `2k != n`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Multigraph> {
    if n < 3 || k == 0 || k >= n || 2 * k == n {
        return invalid(format!("P({n},{k}) needs n >= 3, 1 <= k < n, 2k != n"));
    }
    let mut edges = Vec::with_capacity(3 * n);
    edges.extend((0..n).map(|i| (i, (i + 1) % n)));
    edges.extend((0..n).map(|i| (i, n + i)));
    edges.extend((0..n).map(|i| (n + i, n + (i + k) % n)));
    Ok(build(2 * n, edges))
}

/// How one side of a Halin composition is built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HalinSpec {
    /// Hub joined to a rim cycle of this many vertices (at least 3).
    Wheel(usize),
    /// Random plane tree grown on this many vertices (at least 4) before
    /// degree-2 vertices are suppressed.
    RandomTree(usize),
}

/// A wheel: hub 0 with rim `1..=spokes`.
pub fn wheel(spokes: usize) -> Result<Multigraph> {
    if spokes < 3 {
        return invalid("a wheel needs at least 3 spokes");
    }
    let mut edges: Vec<_> = (1..=spokes).map(|i| (0, i)).collect();
    edges.extend((1..=spokes).map(|i| (i, i % spokes + 1)));
    Ok(build(spokes + 1, edges))
}

/// A Halin graph from a random plane tree: grow a random recursive tree,
/// suppress degree-2 vertices, then join the leaves in depth-first order
/// (which is their order around the plane tree).
pub fn random_halin(tree_vertices: usize, rng: &mut impl Rng) -> Result<Multigraph> {
    if tree_vertices < 4 {
        return invalid("a random Halin tree needs at least 4 vertices");
    }
    loop {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); tree_vertices];
        for v in 1..tree_vertices {
            let p = rng.gen_range(0..v);
            adj[p].push(v);
            adj[v].push(p);
        }
        suppress_degree_two(&mut adj);
        let alive: Vec<usize> = (0..tree_vertices).filter(|&v| !adj[v].is_empty()).collect();
        let leaves = alive.iter().filter(|&&v| adj[v].len() == 1).count();
        if leaves < 3 {
            continue;
        }
        let mut id = vec![usize::MAX; tree_vertices];
        for (i, &v) in alive.iter().enumerate() {
            id[v] = i;
        }
        // depth-first from an internal vertex, children in adjacency order
        let root = *alive.iter().find(|&&v| adj[v].len() > 1).expect("tree has an internal vertex");
        let mut order = Vec::new();
        let mut stack = vec![(root, usize::MAX)];
        while let Some((v, from)) = stack.pop() {
            if adj[v].len() == 1 {
                order.push(v);
            }
            stack.extend(adj[v].iter().rev().filter(|&&w| w != from).map(|&w| (w, v)));
        }
        let mut edges = Vec::new();
        for &v in &alive {
            edges.extend(adj[v].iter().filter(|&&w| v < w).map(|&w| (id[v], id[w])));
        }
        edges.extend((0..order.len()).map(|i| (id[order[i]], id[order[(i + 1) % order.len()]])));
        return Ok(build(alive.len(), edges));
    }
}

fn suppress_degree_two(adj: &mut [Vec<usize>]) {
    let mut changed = true;
    while changed {
        changed = false;
        for v in 0..adj.len() {
            if adj[v].len() != 2 {
                continue;
            }
            let (a, b) = (adj[v][0], adj[v][1]);
            adj[v].clear();
            for (x, y) in [(a, b), (b, a)] {
                let slot = adj[x].iter().position(|&w| w == v).unwrap();
                adj[x][slot] = y;
            }
            changed = true;
        }
    }
}

fn halin_side(spec: HalinSpec, rng: &mut impl Rng) -> Result<Multigraph> {
    match spec {
        HalinSpec::Wheel(spokes) => wheel(spokes),
        HalinSpec::RandomTree(n) => random_halin(n, rng),
    }
}

/// Two disjoint Halin graphs joined by `k >= 2` distinct edges with endpoints
/// drawn uniformly from each side. The first side keeps ids `0..n1`.
pub fn halin_composition(first: HalinSpec, second: HalinSpec, k: usize, seed: u64) -> Result<Multigraph> {
    if k < 2 {
        return invalid("a Halin composition needs at least 2 connecting edges");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = halin_side(first, &mut rng)?;
    let b = halin_side(second, &mut rng)?;
    let (n1, n2) = (a.n_vertices(), b.n_vertices());
    if k > n1 * n2 {
        return invalid(format!("{k} distinct connecting edges do not fit"));
    }
    let mut pairs: Vec<(usize, usize)> = (0..n1).flat_map(|u| (0..n2).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut rng);
    let mut edges = a.edges().to_vec();
    edges.extend(b.edges().iter().map(|&(u, v)| (u + n1, v + n1)));
    edges.extend(pairs[..k].iter().map(|&(u, v)| (u, v + n1)));
    Ok(build(n1 + n2, edges))
}

/// A random tree on `n` vertices plus `m - n + 1` random extra edges, which
/// may be loops (if allowed) or parallel to existing edges.
pub fn random_connected(n: usize, m: usize, loops_allowed: bool, seed: u64) -> Result<Multigraph> {
    if n == 0 || m + 1 < n {
        return invalid(format!("cannot build a connected graph with {n} vertices and {m} edges"));
    }
    if n == 1 && m > 0 && !loops_allowed {
        return invalid("a single vertex needs loops for extra edges");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = random_tree_edges(n, &mut rng);
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v || loops_allowed {
            edges.push((u, v));
        }
    }
    Ok(build(n, edges))
}

/// A random simple connected graph with `n` vertices and `m` edges.
pub fn random_simple_connected(n: usize, m: usize, seed: u64) -> Result<Multigraph> {
    if n == 0 || m + 1 < n || m > n * (n - 1) / 2 {
        return invalid(format!("no simple connected graph with {n} vertices and {m} edges"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = random_tree_edges(n, &mut rng);
    let mut present: std::collections::HashSet<_> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let mut missing: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|p| !present.contains(p))
        .collect();
    missing.shuffle(&mut rng);
    for p in missing.into_iter().take(m - edges.len()) {
        present.insert(p);
        edges.push(p);
    }
    Ok(build(n, edges))
}

fn random_tree_edges(n: usize, rng: &mut impl Rng) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    (1..n).map(|i| (order[rng.gen_range(0..i)], order[i])).collect()
}

pub fn bouquet(loops: usize) -> Multigraph {
    build(1, vec![(0, 0); loops])
}

/// Two triangles `0,1,2` and `3,4,5` joined by the bridge `2-3` (edge 6).
pub fn dumbbell() -> Multigraph {
    build(6, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])
}

pub fn complete(n: usize) -> Multigraph {
    build(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect())
}

pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
    build(a + b, (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))).collect())
}

pub fn cycle(n: usize) -> Result<Multigraph> {
    if n < 3 {
        return invalid("a simple cycle needs at least 3 vertices");
    }
    Ok(build(n, (0..n).map(|i| (i, (i + 1) % n)).collect()))
}

pub fn path(n: usize) -> Result<Multigraph> {
    if n == 0 {
        return invalid("a path needs at least one vertex");
    }
    Ok(build(n, (1..n).map(|i| (i - 1, i)).collect()))
}

/// A named family with its parameters, as accepted by [`generate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    CartesianPath { base_vertices: usize, base_edges: usize, len: usize, seed: u64 },
    Hypercube { dim: usize },
    GenPetersen { n: usize, k: usize },
    HalinComposition { first: HalinSpec, second: HalinSpec, k: usize, seed: u64 },
    Bouquet { loops: usize },
    Dumbbell,
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Cycle { n: usize },
    Path { n: usize },
    Wheel { spokes: usize },
    RandomConnected { n: usize, m: usize, loops: bool, seed: u64 },
}

pub fn generate(spec: &FamilySpec) -> Result<Multigraph> {
    match *spec {
        FamilySpec::CartesianPath { base_vertices, base_edges, len, seed } => {
            cartesian_path_product(&random_simple_connected(base_vertices, base_edges, seed)?, len)
        }
        FamilySpec::Hypercube { dim } => hypercube(dim),
        FamilySpec::GenPetersen { n, k } => generalized_petersen(n, k),
        FamilySpec::HalinComposition { first, second, k, seed } => halin_composition(first, second, k, seed),
        FamilySpec::Bouquet { loops } => Ok(bouquet(loops)),
        FamilySpec::Dumbbell => Ok(dumbbell()),
        FamilySpec::Complete { n: 0 } => invalid("complete graph needs a vertex"),
        FamilySpec::Complete { n } => Ok(complete(n)),
        FamilySpec::CompleteBipartite { a, b } if a == 0 || b == 0 => invalid("both sides need a vertex"),
        FamilySpec::CompleteBipartite { a, b } => Ok(complete_bipartite(a, b)),
        FamilySpec::Cycle { n } => cycle(n),
        FamilySpec::Path { n } => path(n),
        FamilySpec::Wheel { spokes } => wheel(spokes),
        FamilySpec::RandomConnected { n, m, loops, seed } => random_connected(n, m, loops, seed),
    }
}
