//! Graph families used by the solvers, strategies and test corpora.
//!
//! Every generator is deterministic: the same parameters (and seed, where one
//! exists) produce the same vertex numbering. The seeded generator draws from
//! a ChaCha8 stream so corpora are bit-identical across platforms.

use std::sync::OnceLock;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::decomposition::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::interval::IntervalRepresentation;

/// Path on `n` vertices, 0-1-…-(n−1).
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::input("path needs at least one vertex"));
    }
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

/// Cycle on `n ≥ 3` vertices.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::input("cycle needs at least three vertices"));
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::input("complete graph needs a vertex"));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Complete bipartite graph K_{a,b}; side A is 0..a.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::input("both sides must be nonempty"));
    }
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Triangle {0,1,2} with ears 3~{0,1}, 4~{1,2}, 5~{2,0}: the smallest
/// chordal graph needing two pursuers.
pub fn three_sun() -> Graph {
    Graph::from_edges(
        6,
        [(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)],
    )
    .expect("fixed edge list")
}

/// r×r grid, row-major ids.
pub fn grid(r: usize) -> Result<Graph> {
    if r == 0 {
        return Err(Error::input("grid needs r ≥ 1"));
    }
    let id = |row: usize, col: usize| row * r + col;
    let mut edges = Vec::new();
    for row in 0..r {
        for col in 0..r {
            if col + 1 < r {
                edges.push((id(row, col), id(row, col + 1)));
            }
            if row + 1 < r {
                edges.push((id(row, col), id(row + 1, col)));
            }
        }
    }
    Graph::from_edges(r * r, edges)
}

/// m-dimensional hypercube: vertex ids are bit strings, edges flip one bit.
pub fn hypercube(m: usize) -> Result<Graph> {
    if m == 0 || m > 20 {
        return Err(Error::input("hypercube dimension must be in 1..=20"));
    }
    let n = 1usize << m;
    let mut edges = Vec::new();
    for v in 0..n {
        for bit in 0..m {
            let w = v ^ (1 << bit);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Dominating set of the m-hypercube: the Hamming code when m = 2^k − 1
/// (perfect, size 2^m/(m+1)), otherwise the largest Hamming code doubled up
/// to dimension m (size 2^{m−k}, below 2^{m+1}/(m+1)).
pub fn hypercube_dominating_set(m: usize) -> Result<VertexSet> {
    if m == 0 || m > 20 {
        return Err(Error::input("hypercube dimension must be in 1..=20"));
    }
    let k = (1..=m).take_while(|&k| (1usize << k) - 1 <= m).last().unwrap_or(1);
    let m0 = (1usize << k) - 1;
    // Hamming code of length m0: words whose syndrome (xor of the 1-based
    // positions of set bits) vanishes.
    let mut words: Vec<usize> = (0..1usize << m0)
        .filter(|&x| {
            let mut syndrome = 0usize;
            let mut bits = x;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                syndrome ^= i + 1;
            }
            syndrome == 0
        })
        .collect();
    for extra in m0..m {
        let mut doubled = Vec::with_capacity(words.len() * 2);
        for &w in &words {
            doubled.push(w);
            doubled.push(w | 1 << extra);
        }
        words = doubled;
    }
    let set = VertexSet::from_vertices(1 << m, words);
    if !hypercube(m)?.is_dominating(&set) {
        return Err(Error::internal(format!(
            "hypercube dominating construction failed for m={m}"
        )));
    }
    Ok(set)
}

/// How product vertices combine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductKind {
    /// Adjacent iff equal in all coordinates but one, adjacent there.
    Cartesian,
    /// Adjacent iff every coordinate is equal or adjacent, and not all equal.
    Strong,
}

/// A list of factor graphs plus the product to take over them.
#[derive(Clone, Debug)]
pub struct ProductSpec {
    pub factors: Vec<Graph>,
    pub kind: ProductKind,
}

impl ProductSpec {
    pub fn cartesian(factors: Vec<Graph>) -> Self {
        ProductSpec {
            factors,
            kind: ProductKind::Cartesian,
        }
    }

    /// Total vertex count of the product.
    pub fn product_size(&self) -> usize {
        self.factors.iter().map(|g| g.vertex_count()).product()
    }

    /// Row-major id of a coordinate tuple (first factor most significant).
    pub fn tuple_to_id(&self, tuple: &[usize]) -> usize {
        tuple
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&c, g)| acc * g.vertex_count() + c)
    }

    /// Inverse of [`ProductSpec::tuple_to_id`].
    pub fn id_to_tuple(&self, mut id: usize) -> Vec<usize> {
        let mut tuple = vec![0; self.factors.len()];
        for (slot, g) in tuple.iter_mut().zip(&self.factors).rev() {
            *slot = id % g.vertex_count();
            id /= g.vertex_count();
        }
        tuple
    }
}

/// Product graph over tuple vertices in row-major id order.
pub fn product(spec: &ProductSpec) -> Result<Graph> {
    if spec.factors.is_empty() {
        return Err(Error::input("product needs at least one factor"));
    }
    if spec.factors.iter().any(|g| g.vertex_count() == 0) {
        return Err(Error::input("product factors must be nonempty"));
    }
    let n = spec.product_size();
    let mut edges = Vec::new();
    for u in 0..n {
        let tu = spec.id_to_tuple(u);
        for v in u + 1..n {
            let tv = spec.id_to_tuple(v);
            let adjacent = match spec.kind {
                ProductKind::Cartesian => {
                    let mut diff = None;
                    let mut ok = true;
                    for (i, (&a, &b)) in tu.iter().zip(&tv).enumerate() {
                        if a != b {
                            if diff.is_some() {
                                ok = false;
                                break;
                            }
                            diff = Some(i);
                        }
                    }
                    match (ok, diff) {
                        (true, Some(i)) => spec.factors[i].has_edge(tu[i], tv[i]),
                        _ => false,
                    }
                }
                ProductKind::Strong => tu.iter().zip(&tv).enumerate().all(|(i, (&a, &b))| {
                    a == b || spec.factors[i].has_edge(a, b)
                }),
            };
            if adjacent {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Cartesian product of the given factors.
pub fn cartesian_product(factors: Vec<Graph>) -> Result<Graph> {
    product(&ProductSpec::cartesian(factors))
}

/// Hub set {0..m−1} pairwise joined by m internally-disjoint paths of length
/// 3. Every hub pair is at distance exactly 3, which is what lets a robber
/// keep a hub of her own against m−1 pursuers.
pub fn theta_family(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::input(
            "theta family needs m ≥ 3 (distance-3 separation plus enough disjoint paths)",
        ));
    }
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect();
    let n = m + 2 * m * pairs.len();
    let mut edges = Vec::new();
    for (p, &(i, j)) in pairs.iter().enumerate() {
        for q in 0..m {
            let a = m + 2 * (p * m + q);
            let b = a + 1;
            edges.push((i, a));
            edges.push((a, b));
            edges.push((b, j));
        }
    }
    Graph::from_edges(n, edges)
}

/// Star-shaped decomposition of [`theta_family`]: hub bag in the middle, one
/// bag per internal path. Width max{m−1, 3}.
pub fn theta_star_decomposition(m: usize) -> Result<TreeDecomposition> {
    let g = theta_family(m)?;
    let n = g.vertex_count();
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect();
    let mut bags = vec![VertexSet::from_vertices(n, 0..m)];
    let mut tree_edges = Vec::new();
    for (p, &(i, j)) in pairs.iter().enumerate() {
        for q in 0..m {
            let a = m + 2 * (p * m + q);
            bags.push(VertexSet::from_vertices(n, [i, a, a + 1, j]));
            tree_edges.push((0, bags.len() - 1));
        }
    }
    let tree = Graph::from_edges(bags.len(), tree_edges)?;
    TreeDecomposition::new(tree, bags)
}

/// Strong product of P_{3m} with K_m plus its canonical interval
/// representation: vertex (i,j) gets id i·m+j and the interval
/// [iK+j, (i+1)K+2m−1−j] with K = 2m, so all 6m² endpoints are distinct.
pub fn strong_product_path_clique(m: usize) -> Result<(Graph, IntervalRepresentation)> {
    if m == 0 {
        return Err(Error::input("strong product needs m ≥ 1"));
    }
    let rows = 3 * m;
    let n = rows * m;
    let k = 2 * m as i64;
    let mut intervals = Vec::with_capacity(n);
    for i in 0..rows as i64 {
        for j in 0..m as i64 {
            intervals.push((i * k + j, (i + 1) * k + 2 * m as i64 - 1 - j));
        }
    }
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..m {
            let u = i * m + j;
            for j2 in j + 1..m {
                edges.push((u, i * m + j2));
            }
            if i + 1 < rows {
                for j2 in 0..m {
                    edges.push((u, (i + 1) * m + j2));
                }
            }
        }
    }
    let g = Graph::from_edges(n, edges)?;
    let rep = IntervalRepresentation::new(&g, intervals)?;
    Ok((g, rep))
}

/// Accessible pair: a graph G with a vertex set X and a vertex v where
/// N(v) = X and, with |X|−1 pursuers in play, the robber can forever keep a
/// free path to X while never standing on X ∪ {v}.
#[derive(Clone, Debug)]
pub struct AccessiblePairData {
    pub graph: Graph,
    pub x: VertexSet,
    pub v: usize,
    /// Present for composite (doubled) instances.
    pub recursion: Option<Box<AccessibleRecursion>>,
}

/// The two-sided join structure of a composite accessible pair.
#[derive(Clone, Debug)]
pub struct AccessibleRecursion {
    pub left: AccessiblePairData,
    pub right: AccessiblePairData,
    /// Composite ids of the join layers.
    pub u1: VertexSet,
    pub u2: VertexSet,
    /// left_map[i] = composite id of left vertex i (usize::MAX for the
    /// dropped apex v₁); likewise right_map.
    pub left_map: Vec<usize>,
    pub right_map: Vec<usize>,
}

impl AccessiblePairData {
    /// Side sets A₁ = V₁ ∪ U₁ and A₂ = V₂ ∪ U₂ of a composite instance.
    pub fn side_sets(&self) -> Option<(VertexSet, VertexSet)> {
        let rec = self.recursion.as_deref()?;
        let n = self.graph.vertex_count();
        let mut a1 = rec.u1.clone();
        for &c in rec.left_map.iter().filter(|&&c| c != usize::MAX) {
            a1.insert(c);
        }
        let mut a2 = rec.u2.clone();
        for &c in rec.right_map.iter().filter(|&&c| c != usize::MAX) {
            a2.insert(c);
        }
        debug_assert!(a1.universe() == n && a2.universe() == n);
        Some((a1, a2))
    }
}

/// The fixed 7-vertex base pair: a 3-sun (triangle 0,1,2; ears 3,4,5) plus
/// an apex 6 adjacent to exactly X = {0,1}. Verified by machine on first
/// use: chordal, N(v) = X, one pursuer loses, and the restricted-game fixed
/// point confirms the robber keeps access to X with v treated as blocked.
pub fn base_accessible_pair() -> Result<AccessiblePairData> {
    static BASE: OnceLock<std::result::Result<AccessiblePairData, String>> = OnceLock::new();
    let cached = BASE.get_or_init(|| {
        let mut edges = three_sun().edges().to_vec();
        edges.push((0, 6));
        edges.push((1, 6));
        let graph = Graph::from_edges(7, edges).expect("3-sun plus apex");
        let candidate = AccessiblePairData {
            graph,
            x: VertexSet::from_vertices(7, [0, 1]),
            v: 6,
            recursion: None,
        };
        if verify_accessible_base(&candidate) {
            return Ok(candidate);
        }
        // The hand-built candidate failed: fall back to an exhaustive hunt
        // over 7-vertex chordal graphs with an apex of degree 2.
        search_base_pair().ok_or_else(|| "no 7-vertex accessible pair exists".to_string())
    });
    cached
        .clone()
        .map_err(Error::Internal)
}

/// All three accessibility conditions, by brute force.
fn verify_accessible_base(data: &AccessiblePairData) -> bool {
    let g = &data.graph;
    let (chordal, _) = g.is_chordal();
    if !chordal || !g.is_connected() {
        return false;
    }
    if g.neighbors(data.v) != &data.x {
        return false;
    }
    // One pursuer must lose on the whole graph.
    match crate::solver::solve_fixed_k(g, 1, &crate::config::Limits::default()) {
        Ok(res) => {
            if res.cops_win {
                return false;
            }
        }
        Err(_) => return false,
    }
    restricted_escape_table(g, &data.x, data.v).is_some()
}

/// Safety table for the restricted game: one pursuer anywhere (position v
/// doubles as "parked outside"), v permanently blocked for the robber, and
/// the robber must keep a blocked-free path to X while never standing on
/// X ∪ {v}. Returns safe[cop * n + robber] if the robber survives from every
/// initial cop placement; None otherwise.
pub(crate) fn restricted_escape_table(g: &Graph, x: &VertexSet, v: usize) -> Option<Vec<bool>> {
    let n = g.vertex_count();
    let mut forbidden = x.clone();
    forbidden.insert(v);
    let has_access = |cop: usize, r: usize| -> bool {
        let mut blocked = VertexSet::singleton(n, v);
        blocked.insert(cop);
        if blocked.contains(r) {
            return false;
        }
        g.reachable_avoiding(r, &blocked).intersects(x)
    };
    let mut safe = vec![false; n * n];
    for cop in 0..n {
        for r in 0..n {
            safe[cop * n + r] = r != cop
                && !forbidden.contains(r)
                && !g.neighbors(cop).contains(r)
                && has_access(cop, r);
        }
    }
    // Shrink to the greatest fixed point: a state survives if every cop move
    // leaves some safe reply.
    loop {
        let mut changed = false;
        for cop in 0..n {
            for r in 0..n {
                if !safe[cop * n + r] {
                    continue;
                }
                let ok = g.closed_neighbors(cop).iter().all(|cop2| {
                    let mut blocked = VertexSet::singleton(n, v);
                    blocked.insert(cop2);
                    g.reachable_avoiding(r, &blocked)
                        .iter()
                        .any(|r2| safe[cop2 * n + r2])
                });
                if !ok {
                    safe[cop * n + r] = false;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    // Robber must have a safe start against every cop placement.
    let survives = (0..n).all(|cop| (0..n).any(|r| safe[cop * n + r]));
    survives.then_some(safe)
}

/// Exhaustive fallback: scan 7-vertex graphs for a valid accessible pair.
fn search_base_pair() -> Option<AccessiblePairData> {
    const N: usize = 7;
    let pair_list: Vec<(usize, usize)> = (0..N)
        .flat_map(|u| (u + 1..N).map(move |v| (u, v)))
        .collect();
    for mask in 0u32..1 << pair_list.len() {
        let edges: Vec<(usize, usize)> = pair_list
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let Ok(graph) = Graph::from_edges(N, edges) else {
            continue;
        };
        if !graph.is_connected() || !graph.is_chordal().0 {
            continue;
        }
        for v in 0..N {
            if graph.degree(v) != 2 {
                continue;
            }
            let candidate = AccessiblePairData {
                x: graph.neighbors(v).clone(),
                graph: graph.clone(),
                v,
                recursion: None,
            };
            if verify_accessible_base(&candidate) {
                return Some(candidate);
            }
        }
    }
    None
}

/// Chordal graph with an accessible pair of size m (m a power of two ≥ 2).
/// m = 2 is the base pair; larger m glues two half-size instances through
/// clique layers U₁, X, U₂ with complete-bipartite joins
/// X₁—U₁—X—U₂—X₂ and a fresh apex v adjacent to exactly X.
pub fn chordal_accessible(m: usize) -> Result<AccessiblePairData> {
    if m < 2 || !m.is_power_of_two() {
        return Err(Error::input(format!(
            "accessible construction needs m a power of two ≥ 2, got {m}"
        )));
    }
    if m == 2 {
        return base_accessible_pair();
    }
    let half = m / 2;
    let left = chordal_accessible(half)?;
    let right = chordal_accessible(half)?;
    let ln = left.graph.vertex_count();
    let rn = right.graph.vertex_count();

    // Composite ids: V₁ block, V₂ block, then U₁, X, U₂, then v.
    let mut left_map = vec![usize::MAX; ln];
    let mut next = 0;
    for i in 0..ln {
        if i != left.v {
            left_map[i] = next;
            next += 1;
        }
    }
    let mut right_map = vec![usize::MAX; rn];
    for i in 0..rn {
        if i != right.v {
            right_map[i] = next;
            next += 1;
        }
    }
    let u1_start = next;
    let x_start = u1_start + m;
    let u2_start = x_start + m;
    let v = u2_start + m;
    let n = v + 1;

    let mut edges: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in left.graph.edges() {
        if a != left.v && b != left.v {
            edges.push((left_map[a], left_map[b]));
        }
    }
    for &(a, b) in right.graph.edges() {
        if a != right.v && b != right.v {
            edges.push((right_map[a], right_map[b]));
        }
    }
    for layer_start in [u1_start, x_start, u2_start] {
        for i in 0..m {
            for j in i + 1..m {
                edges.push((layer_start + i, layer_start + j));
            }
        }
    }
    for x1 in left.x.iter() {
        for u in 0..m {
            edges.push((left_map[x1], u1_start + u));
        }
    }
    for x2 in right.x.iter() {
        for u in 0..m {
            edges.push((right_map[x2], u2_start + u));
        }
    }
    for a in 0..m {
        for b in 0..m {
            edges.push((u1_start + a, x_start + b));
            edges.push((x_start + a, u2_start + b));
        }
    }
    for b in 0..m {
        edges.push((x_start + b, v));
    }
    let graph = Graph::from_edges(n, edges)?;
    let x = VertexSet::from_vertices(n, x_start..x_start + m);
    if graph.neighbors(v) != &x {
        return Err(Error::internal("apex neighborhood is not X"));
    }
    if !graph.is_chordal().0 {
        return Err(Error::internal(
            "composite accessible graph lost chordality",
        ));
    }
    Ok(AccessiblePairData {
        graph,
        x,
        v,
        recursion: Some(Box::new(AccessibleRecursion {
            left,
            right,
            u1: VertexSet::from_vertices(n, u1_start..u1_start + m),
            u2: VertexSet::from_vertices(n, u2_start..u2_start + m),
            left_map,
            right_map,
        })),
    })
}

/// Uniform draw from 0..bound via rejection, so the stream is reproducible
/// and unbiased.
pub(crate) fn uniform_below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    let zone = bound * (u64::MAX / bound);
    loop {
        let x = rng.next_u64();
        if x < zone {
            return x % bound;
        }
    }
}

/// Random graph with n vertices and exactly 2n distinct edges (uniform over
/// edge sets), then every vertex of degree > degree_cap is deleted and the
/// rest relabeled compactly. Identical (n, seed, cap) inputs give identical
/// graphs on every platform: edges come from a partial Fisher-Yates shuffle
/// of the lexicographic pair list driven by ChaCha8(seed).
pub fn random_sparse_stripped(n: usize, seed: u64, degree_cap: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::input("need n ≥ 1"));
    }
    let m = 2 * n;
    let total_pairs = n * (n - 1) / 2;
    if m > total_pairs {
        return Err(Error::input(format!(
            "{m} edges requested but only {total_pairs} pairs exist"
        )));
    }
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..m {
        let j = i + uniform_below(&mut rng, (total_pairs - i) as u64) as usize;
        pairs.swap(i, j);
    }
    let g = Graph::from_edges(n, pairs[..m].iter().copied())?;
    let keep = VertexSet::from_vertices(n, (0..n).filter(|&v| g.degree(v) <= degree_cap));
    let (stripped, _) = g.induced_subgraph(&keep);
    Ok(stripped)
}
