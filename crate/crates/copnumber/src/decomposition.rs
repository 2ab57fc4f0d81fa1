//! Tree decompositions: validation, clique trees of chordal graphs, and
//! exact treewidth by dynamic programming over vertex subsets.

use crate::error::{Error, Result};
use crate::graph::{EliminationOrder, Graph, VertexSet};

/// A tree whose nodes carry bags of graph vertices.
#[derive(Clone, Debug)]
pub struct TreeDecomposition {
    tree: Graph,
    bags: Vec<VertexSet>,
}

impl TreeDecomposition {
    /// Wraps a tree and its bags; rejects non-trees and mismatched lengths.
    pub fn new(tree: Graph, bags: Vec<VertexSet>) -> Result<Self> {
        if tree.vertex_count() != bags.len() {
            return Err(Error::input(format!(
                "{} tree nodes but {} bags",
                tree.vertex_count(),
                bags.len()
            )));
        }
        if tree.vertex_count() == 0 {
            return Err(Error::input("decomposition needs at least one bag"));
        }
        if tree.edge_count() + 1 != tree.vertex_count() || !tree.is_connected() {
            return Err(Error::input("decomposition carrier is not a tree"));
        }
        Ok(TreeDecomposition { tree, bags })
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    /// max |bag| − 1.
    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(1) - 1
    }

    /// The three decomposition conditions: bags cover all vertices, every
    /// edge lies inside some bag, and each vertex's bags induce a subtree.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        let mut covered = VertexSet::empty(n);
        for b in &self.bags {
            if b.universe() != n {
                return false;
            }
            covered.union_with(b);
        }
        if covered != VertexSet::full(n) {
            return false;
        }
        for &(u, v) in g.edges() {
            if !self.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
                return false;
            }
        }
        // Connected-subtree condition: the bags containing v must form one
        // component of the tree.
        let t = self.tree.vertex_count();
        for v in 0..n {
            let holding = VertexSet::from_vertices(t, (0..t).filter(|&i| self.bags[i].contains(v)));
            if holding.is_empty() {
                return false;
            }
            let not_holding = holding.complement();
            let start = holding.first().unwrap();
            let reach = self.tree.reachable_avoiding(start, &not_holding);
            if reach != holding {
                return false;
            }
        }
        true
    }

    /// For every tree edge, the two bag intersections separate the two sides:
    /// with X = W_{t₁} ∩ W_{t₂} and Uᵢ the union of bags on side i, g has no
    /// edge between U₁∖X and U₂∖X.
    pub fn separators_hold(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        let t = self.tree.vertex_count();
        for &(t1, t2) in self.tree.edges() {
            let x = self.bags[t1].intersection(&self.bags[t2]);
            let mut blocked = VertexSet::empty(t);
            blocked.insert(t2);
            let side1 = self.tree.reachable_avoiding(t1, &blocked);
            let mut u1 = VertexSet::empty(n);
            let mut u2 = VertexSet::empty(n);
            for i in 0..t {
                if side1.contains(i) {
                    u1.union_with(&self.bags[i]);
                } else {
                    u2.union_with(&self.bags[i]);
                }
            }
            u1.subtract(&x);
            u2.subtract(&x);
            for &(a, b) in g.edges() {
                if (u1.contains(a) && u2.contains(b)) || (u1.contains(b) && u2.contains(a)) {
                    return false;
                }
            }
        }
        true
    }

    /// Serializes as: line 1 `t b`, then `t` lines `id k v₁ … v_k`, then `b`
    /// tree-edge lines.
    pub fn to_text(&self) -> String {
        let t = self.tree.vertex_count();
        let mut out = format!("{} {}\n", t, self.tree.edge_count());
        for (i, bag) in self.bags.iter().enumerate() {
            out.push_str(&format!("{i} {}", bag.len()));
            for v in bag.iter() {
                out.push_str(&format!(" {v}"));
            }
            out.push('\n');
        }
        for &(a, b) in self.tree.edges() {
            out.push_str(&format!("{a} {b}\n"));
        }
        out
    }

    /// Parses the format written by [`TreeDecomposition::to_text`]. The bag
    /// universe is `graph_n`, the vertex count of the decomposed graph.
    pub fn from_text(text: &str, graph_n: usize) -> Result<Self> {
        let mut payload = text.lines().enumerate().filter_map(|(i, line)| {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                None
            } else {
                Some((i + 1, line))
            }
        });
        let parse = |tok: Option<&str>, line: usize, what: &str| -> Result<usize> {
            tok.ok_or_else(|| Error::Parse {
                line,
                msg: format!("missing {what}"),
            })?
            .parse()
            .map_err(|_| Error::Parse {
                line,
                msg: format!("bad {what}"),
            })
        };
        let (line_no, header) = payload
            .next()
            .ok_or_else(|| Error::input("empty decomposition file"))?;
        let mut it = header.split_whitespace();
        let t = parse(it.next(), line_no, "node count")?;
        let b = parse(it.next(), line_no, "edge count")?;
        let mut bags = vec![VertexSet::empty(graph_n); t];
        let mut seen = vec![false; t];
        for _ in 0..t {
            let (line_no, line) = payload
                .next()
                .ok_or_else(|| Error::input("missing bag line"))?;
            let mut it = line.split_whitespace();
            let id = parse(it.next(), line_no, "bag id")?;
            if id >= t || seen[id] {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("bad bag id {id}"),
                });
            }
            seen[id] = true;
            let k = parse(it.next(), line_no, "bag size")?;
            for _ in 0..k {
                let v = parse(it.next(), line_no, "bag member")?;
                if v >= graph_n {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("bag member {v} outside graph"),
                    });
                }
                bags[id].insert(v);
            }
            if it.next().is_some() {
                return Err(Error::Parse {
                    line: line_no,
                    msg: "trailing tokens in bag line".into(),
                });
            }
        }
        let mut edges = Vec::with_capacity(b);
        for _ in 0..b {
            let (line_no, line) = payload
                .next()
                .ok_or_else(|| Error::input("missing tree edge line"))?;
            let mut it = line.split_whitespace();
            let a = parse(it.next(), line_no, "tree edge endpoint")?;
            let c = parse(it.next(), line_no, "tree edge endpoint")?;
            edges.push((a, c));
        }
        if let Some((line_no, _)) = payload.next() {
            return Err(Error::Parse {
                line: line_no,
                msg: "unexpected content after tree edges".into(),
            });
        }
        TreeDecomposition::new(Graph::from_edges(t, edges)?, bags)
    }
}

/// Clique tree of a chordal graph: bags are exactly the maximal cliques,
/// connected by a maximum-intersection spanning tree.
pub fn clique_tree_decomposition(g: &Graph, peo: &EliminationOrder) -> Result<TreeDecomposition> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::input("empty graph has no clique tree"));
    }
    if !g.is_perfect_elimination_order(peo) {
        return Err(Error::input(
            "order is not a perfect elimination order",
        ));
    }
    let pos = peo.positions();
    let candidates: Vec<VertexSet> = peo
        .as_slice()
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let mut bag = VertexSet::from_vertices(n, g.neighbors(v).iter().filter(|&w| pos[w] > i));
            bag.insert(v);
            bag
        })
        .collect();
    let cliques: Vec<VertexSet> = candidates
        .iter()
        .filter(|b| {
            !candidates
                .iter()
                .any(|other| *b != other && b.is_subset_of(other))
        })
        .cloned()
        .collect();
    // Maximum-weight spanning tree over pairwise intersection sizes gives a
    // junction tree; Prim from clique 0, deterministic tie-breaks.
    let q = cliques.len();
    let mut in_tree = vec![false; q];
    in_tree[0] = true;
    let mut edges = Vec::with_capacity(q.saturating_sub(1));
    for _ in 1..q {
        let mut best: Option<(usize, usize, usize)> = None; // (weight, new, anchor)
        for cand in 0..q {
            if in_tree[cand] {
                continue;
            }
            for anchor in 0..q {
                if !in_tree[anchor] {
                    continue;
                }
                let w = cliques[cand].intersection(&cliques[anchor]).len();
                let better = match best {
                    None => true,
                    Some((bw, bc, ba)) => {
                        w > bw || (w == bw && (cand, anchor) < (bc, ba))
                    }
                };
                if better {
                    best = Some((w, cand, anchor));
                }
            }
        }
        let (_, cand, anchor) = best.expect("spanning tree step");
        in_tree[cand] = true;
        edges.push((anchor, cand));
    }
    TreeDecomposition::new(Graph::from_edges(q, edges)?, cliques)
}

/// Number of vertices outside T ∪ {v} seen from v through T: the degree v
/// would have if eliminated right after the set T.
fn eliminated_degree(nbr: &[u32], n: usize, t: u32, v: usize) -> u32 {
    let mut reach = nbr[v] & t;
    loop {
        let mut grown = reach;
        let mut bits = reach;
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            grown |= nbr[w] & t;
        }
        if grown == reach {
            break;
        }
        reach = grown;
    }
    let mut boundary = nbr[v];
    let mut bits = reach;
    while bits != 0 {
        let w = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        boundary |= nbr[w];
    }
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    (boundary & all & !t & !(1 << v)).count_ones()
}

/// Exact treewidth with a witness decomposition of that width.
///
/// Dynamic program over subsets: `opt[S]` is the best width achievable when
/// `S` is the set of vertices eliminated first. Requires n ≤ limit (and a
/// hard n ≤ 24 for the 2^n table).
pub fn treewidth_exact(g: &Graph, limit: usize) -> Result<(usize, TreeDecomposition)> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::input("empty graph has no treewidth"));
    }
    if n > limit || n > 24 {
        return Err(Error::capability(format!(
            "exact treewidth needs n ≤ {}, got {n}",
            limit.min(24)
        )));
    }
    let nbr: Vec<u32> = (0..n)
        .map(|v| {
            let mut m = 0u32;
            for w in g.neighbors(v).iter() {
                m |= 1 << w;
            }
            m
        })
        .collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut opt = vec![u8::MAX; 1usize << n];
    opt[0] = 0;
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let prev = s & !(1 << v);
            let width = opt[prev as usize].max(eliminated_degree(&nbr, n, prev, v) as u8);
            best = best.min(width);
        }
        opt[s as usize] = best;
    }
    let tw = opt[full as usize] as usize;

    // Retrace one optimal order: the pick at S is the vertex eliminated last
    // within S, so the reversed picks form the elimination order.
    let mut order_rev = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let mut pick = None;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let prev = s & !(1 << v);
            let width = opt[prev as usize].max(eliminated_degree(&nbr, n, prev, v) as u8);
            if width == opt[s as usize] {
                pick = Some(v);
                break; // smallest such v: bits iterate in increasing order
            }
        }
        let v = pick.expect("DP retrace found no witness vertex");
        order_rev.push(v);
        s &= !(1 << v);
    }
    order_rev.reverse();
    let order = EliminationOrder::new(order_rev, n)?;
    let td = decomposition_from_elimination(g, &order);
    debug_assert_eq!(td.width(), tw);
    Ok((tw, td))
}

/// Tree decomposition induced by an elimination order (with fill-in); width
/// equals the order's elimination width.
pub fn decomposition_from_elimination(g: &Graph, order: &EliminationOrder) -> TreeDecomposition {
    let n = g.vertex_count();
    let pos = order.positions();
    let mut work: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut bags = Vec::with_capacity(n);
    let mut tree_edges = Vec::new();
    let mut roots = Vec::new();
    for (i, &v) in order.as_slice().iter().enumerate() {
        let later: Vec<usize> = work[v].iter().filter(|&w| pos[w] > i).collect();
        let mut bag = VertexSet::from_vertices(n, later.iter().copied());
        bag.insert(v);
        bags.push(bag);
        // fill: later neighbors become a clique
        for (ai, &a) in later.iter().enumerate() {
            for &b in &later[ai + 1..] {
                work[a].insert(b);
                work[b].insert(a);
            }
        }
        match later.iter().min_by_key(|&&w| pos[w]) {
            Some(&parent) => tree_edges.push((i, pos[parent])),
            None => roots.push(i),
        }
    }
    for pair in roots.windows(2) {
        tree_edges.push((pair[0], pair[1]));
    }
    let tree = Graph::from_edges(n, tree_edges).expect("elimination tree edges");
    TreeDecomposition::new(tree, bags).expect("elimination decomposition is well-formed")
}
