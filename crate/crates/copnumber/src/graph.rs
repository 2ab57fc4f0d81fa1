//! Simple undirected graphs over vertex ids `0..n`, with bitset vertex sets.
//!
//! Graphs are immutable once built (construction goes through [`Graph::from_edges`]
//! or the generators); every structural operation returns fresh values, so all
//! types here are safe to share across threads.

use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

/// Subset of the vertices of a graph with a fixed universe size.
///
/// Bits above the universe size are always zero, so equality and hashing work
/// on the raw words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; n.div_ceil(WORD_BITS)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = VertexSet::empty(n);
        for w in &mut s.words {
            *w = u64::MAX;
        }
        s.clear_tail();
        s
    }

    pub fn singleton(n: usize, v: usize) -> Self {
        let mut s = VertexSet::empty(n);
        s.insert(v);
        s
    }

    /// Removes every vertex, keeping the universe size.
    pub fn clear(&mut self) {
        for w in &mut self.words {
            *w = 0;
        }
    }

    pub fn from_vertices(n: usize, vs: impl IntoIterator<Item = usize>) -> Self {
        let mut s = VertexSet::empty(n);
        for v in vs {
            s.insert(v);
        }
        s
    }

    /// Size of the universe this set lives in (not the cardinality).
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.n);
        self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} outside universe {}", self.n);
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.n);
        self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.subtract(other);
        s
    }

    pub fn complement(&self) -> VertexSet {
        let mut s = self.clone();
        for w in &mut s.words {
            *w = !*w;
        }
        s.clear_tail();
        s
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.is_disjoint(other)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * WORD_BITS + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn clear_tail(&mut self) {
        let tail = self.n % WORD_BITS;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        if self.n == 0 {
            self.words.clear();
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Permutation of the vertices, used as an elimination order: `order[0]` is
/// eliminated first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrder {
    order: Vec<usize>,
}

impl EliminationOrder {
    pub fn new(order: Vec<usize>, n: usize) -> Result<Self> {
        if order.len() != n {
            return Err(Error::input(format!(
                "elimination order has {} entries for {} vertices",
                order.len(),
                n
            )));
        }
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || seen[v] {
                return Err(Error::input(format!(
                    "elimination order is not a permutation (vertex {v})"
                )));
            }
            seen[v] = true;
        }
        Ok(EliminationOrder { order })
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    /// position[v] = index of v in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// Finite simple undirected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: (0..n).map(|_| VertexSet::empty(n)).collect(),
            edges: Vec::new(),
        }
    }

    /// Builds a graph, rejecting self-loops and out-of-range endpoints.
    /// Duplicate edges collapse to one.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        g.edges.sort_unstable();
        Ok(g)
    }

    fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(Error::input(format!(
                "edge ({u},{v}) has endpoint outside 0..{n}"
            )));
        }
        if u == v {
            return Err(Error::input(format!("self-loop at vertex {u}")));
        }
        if !self.adj[u].contains(v) {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
            self.edges.push((u.min(v), u.max(v)));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges normalized as (min, max), sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].contains(v)
    }

    /// Open neighborhood N(v).
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count() == n * (n.saturating_sub(1)) / 2
    }

    /// N̄(v) = {v} ∪ N(v).
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// N̄(A) = A ∪ N(A).
    pub fn closed_neighborhood(&self, a: &VertexSet) -> VertexSet {
        let mut out = a.clone();
        for v in a.iter() {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// True iff N̄(a) = V(g).
    pub fn is_dominating(&self, a: &VertexSet) -> bool {
        self.closed_neighborhood(a) == VertexSet::full(self.vertex_count())
    }

    /// Vertices reachable from `start` in g − blocked. Empty if `start` is blocked.
    pub fn reachable_avoiding(&self, start: usize, blocked: &VertexSet) -> VertexSet {
        let n = self.vertex_count();
        let mut seen = VertexSet::empty(n);
        if blocked.contains(start) {
            return seen;
        }
        seen.insert(start);
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            let mut next = self.adj[v].clone();
            next.subtract(blocked);
            next.subtract(&seen);
            for w in next.iter() {
                frontier.push(w);
            }
            seen.union_with(&next);
        }
        seen
    }

    /// Connected components of g − removed, each as a vertex set, ordered by
    /// smallest member.
    pub fn connected_components(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        let mut assigned = removed.clone();
        for v in 0..n {
            if !assigned.contains(v) {
                let comp = self.reachable_avoiding(v, removed);
                assigned.union_with(&comp);
                out.push(comp);
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components(&VertexSet::empty(self.vertex_count())).len() <= 1
    }

    /// Minimum number of vertices whose removal disconnects the graph or
    /// leaves a single vertex; n−1 for complete graphs, 0 for disconnected
    /// input. Max-flow with unit vertex capacities between non-adjacent pairs.
    pub fn vertex_connectivity(&self) -> usize {
        let n = self.vertex_count();
        if n <= 1 {
            return 0;
        }
        if self.is_complete() {
            return n - 1;
        }
        // Some minimum cut omits one of the first best+1 vertices, so scanning
        // sources 0..=best covers every cut.
        let mut best = n - 1;
        let mut s = 0;
        while s < n && s <= best {
            for t in 0..n {
                if t != s && !self.has_edge(s, t) {
                    best = best.min(self.vertex_cut_size(s, t));
                }
            }
            s += 1;
        }
        best
    }

    /// Minimum number of vertices separating non-adjacent s and t; by
    /// Menger also the number of internally-disjoint s–t paths.
    pub fn local_vertex_connectivity(&self, s: usize, t: usize) -> usize {
        self.vertex_cut_size(s, t)
    }

    /// Size of a minimum vertex cut between non-adjacent s and t
    /// (unit-capacity max-flow on the split graph).
    fn vertex_cut_size(&self, s: usize, t: usize) -> usize {
        debug_assert!(!self.has_edge(s, t));
        let n = self.vertex_count();
        // Node 2v = "in", 2v+1 = "out"; cap[in][out] = 1, edges get cap 2n (∞).
        let nn = 2 * n;
        let inf = (2 * n) as u32;
        let mut cap = vec![0u32; nn * nn];
        for v in 0..n {
            cap[(2 * v) * nn + 2 * v + 1] = 1;
        }
        for &(u, v) in &self.edges {
            cap[(2 * u + 1) * nn + 2 * v] = inf;
            cap[(2 * v + 1) * nn + 2 * u] = inf;
        }
        let (src, dst) = (2 * s + 1, 2 * t);
        let mut flow = 0usize;
        loop {
            // BFS for an augmenting path.
            let mut parent = vec![usize::MAX; nn];
            parent[src] = src;
            let mut queue = std::collections::VecDeque::from([src]);
            while let Some(x) = queue.pop_front() {
                if x == dst {
                    break;
                }
                for y in 0..nn {
                    if parent[y] == usize::MAX && cap[x * nn + y] > 0 {
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if parent[dst] == usize::MAX {
                return flow;
            }
            let mut y = dst;
            while y != src {
                let x = parent[y];
                cap[x * nn + y] -= 1;
                cap[y * nn + x] += 1;
                y = x;
            }
            flow += 1;
        }
    }

    /// Exact minimum dominating set by increasing-size subset search.
    /// Requires n ≤ limit (and n ≤ 32 for the bitmask enumeration).
    pub fn domination_number_exact(&self, limit: usize) -> Result<(usize, VertexSet)> {
        let n = self.vertex_count();
        if n > limit || n > 32 {
            return Err(Error::capability(format!(
                "exhaustive domination needs n ≤ {}, got {n}",
                limit.min(32)
            )));
        }
        if n == 0 {
            return Ok((0, VertexSet::empty(0)));
        }
        let closed: Vec<u32> = (0..n)
            .map(|v| {
                let mut m = 1u32 << v;
                for w in self.adj[v].iter() {
                    m |= 1 << w;
                }
                m
            })
            .collect();
        let all: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        // No vertex covers more than Δ+1 vertices, so sizes below
        // ⌈n/(Δ+1)⌉ cannot dominate.
        let start = n.div_ceil(self.max_degree() + 1);
        for size in start..=n {
            if let Some(mask) = Self::find_dominating_of_size(&closed, all, n, size) {
                let set = VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
                return Ok((size, set));
            }
        }
        Err(Error::internal("full vertex set failed to dominate"))
    }

    fn find_dominating_of_size(closed: &[u32], all: u32, n: usize, size: usize) -> Option<u32> {
        // Enumerate size-subsets in lexicographic order (Gosper's hack),
        // in u64 so the step never overflows for n ≤ 32.
        if size == 0 {
            return if all == 0 { Some(0) } else { None };
        }
        if size > n {
            return None;
        }
        let end = 1u64 << n;
        let mut mask: u64 = (1u64 << size) - 1;
        while mask < end {
            let mut cover = 0u32;
            let mut bits = mask;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                cover |= closed[v];
                bits &= bits - 1;
            }
            if cover == all {
                return Some(mask as u32);
            }
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
        None
    }

    /// All minimum dominating sets (exhaustive; intended for small test graphs).
    pub fn all_minimum_dominating_sets(&self, limit: usize) -> Result<Vec<VertexSet>> {
        let (gamma, _) = self.domination_number_exact(limit)?;
        let mut out = Vec::new();
        let mut pick = vec![0usize; gamma];
        self.collect_dominating(0, 0, gamma, &mut pick, &mut out);
        Ok(out)
    }

    fn collect_dominating(
        &self,
        from: usize,
        chosen: usize,
        size: usize,
        pick: &mut [usize],
        out: &mut Vec<VertexSet>,
    ) {
        if chosen == size {
            let s = VertexSet::from_vertices(self.vertex_count(), pick.iter().copied());
            if self.is_dominating(&s) {
                out.push(s);
            }
            return;
        }
        for v in from..self.vertex_count() {
            pick[chosen] = v;
            self.collect_dominating(v + 1, chosen + 1, size, pick, out);
        }
    }

    /// Maximum-cardinality search order, ties broken by smallest vertex id.
    /// Returned as an elimination order (reverse of the visit order).
    pub fn mcs_order(&self) -> EliminationOrder {
        let n = self.vertex_count();
        let mut weight = vec![0usize; n];
        let mut visited = vec![false; n];
        let mut visit = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !visited[v])
                .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
                .unwrap();
            visited[v] = true;
            visit.push(v);
            for w in self.adj[v].iter() {
                if !visited[w] {
                    weight[w] += 1;
                }
            }
        }
        visit.reverse();
        EliminationOrder::new(visit, n).unwrap()
    }

    /// True iff each vertex's later neighbors (under `order`) form a clique.
    pub fn is_perfect_elimination_order(&self, order: &EliminationOrder) -> bool {
        let pos = order.positions();
        for (i, &v) in order.as_slice().iter().enumerate() {
            // later = neighbors of v eliminated after v
            let later: Vec<usize> = self.adj[v].iter().filter(|&w| pos[w] > i).collect();
            let Some(&u) = later.iter().min_by_key(|&&w| pos[w]) else {
                continue;
            };
            for &w in &later {
                if w != u && !self.has_edge(u, w) {
                    return false;
                }
            }
        }
        true
    }

    /// Chordality test: maximum-cardinality search plus perfect-elimination
    /// verification. Returns the certifying order when chordal.
    pub fn is_chordal(&self) -> (bool, Option<EliminationOrder>) {
        let order = self.mcs_order();
        if self.is_perfect_elimination_order(&order) {
            (true, Some(order))
        } else {
            (false, None)
        }
    }

    /// Identify the endpoints of an existing edge. The merged vertex keeps
    /// id min(u,v); ids above max(u,v) shift down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(Error::input(format!("vertex out of range in ({u},{v})")));
        }
        if !self.has_edge(u, v) {
            return Err(Error::input(format!("({u},{v}) is not an edge")));
        }
        let (a, b) = (u.min(v), u.max(v));
        let relabel = |x: usize| -> usize {
            let x = if x == b { a } else { x };
            if x > b {
                x - 1
            } else {
                x
            }
        };
        let mut edges = Vec::with_capacity(self.edge_count());
        for &(x, y) in &self.edges {
            let (nx, ny) = (relabel(x), relabel(y));
            if nx != ny {
                edges.push((nx, ny));
            }
        }
        Graph::from_edges(n - 1, edges)
    }

    /// Induced subgraph on `keep`, plus the new-id → old-id map.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old_ids: Vec<usize> = keep.iter().collect();
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| keep.contains(u) && keep.contains(v))
            .map(|&(u, v)| (new_id[u], new_id[v]));
        let g = Graph::from_edges(old_ids.len(), edges).expect("induced edges are valid");
        (g, old_ids)
    }

    /// Parses the graph text format: first payload line `n m`, then `m` lines
    /// `u v`. Anything after `#` on a line is a comment.
    pub fn from_text(text: &str) -> Result<Graph> {
        let mut payload = text.lines().enumerate().filter_map(|(i, line)| {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                None
            } else {
                Some((i + 1, line))
            }
        });
        let (line_no, header) = payload
            .next()
            .ok_or_else(|| Error::input("empty graph file"))?;
        let mut it = header.split_whitespace();
        let parse_usize = |tok: Option<&str>, line: usize, what: &str| -> Result<usize> {
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
        let n = parse_usize(it.next(), line_no, "vertex count")?;
        let m = parse_usize(it.next(), line_no, "edge count")?;
        if it.next().is_some() {
            return Err(Error::Parse {
                line: line_no,
                msg: "trailing tokens after \"n m\"".into(),
            });
        }
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (line_no, line) = payload.next().ok_or_else(|| {
                Error::input(format!("expected {m} edge lines, file ended early"))
            })?;
            let mut it = line.split_whitespace();
            let u = parse_usize(it.next(), line_no, "edge endpoint")?;
            let v = parse_usize(it.next(), line_no, "edge endpoint")?;
            if it.next().is_some() {
                return Err(Error::Parse {
                    line: line_no,
                    msg: "trailing tokens after edge".into(),
                });
            }
            edges.push((u, v));
        }
        if let Some((line_no, _)) = payload.next() {
            return Err(Error::Parse {
                line: line_no,
                msg: "unexpected content after last edge".into(),
            });
        }
        Graph::from_edges(n, edges)
    }

    /// Serializes to the text format parsed by [`Graph::from_text`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.vertex_count(),
            self.edge_count(),
            self.edges
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn cycle(n: usize) -> Graph {
        generators::cycle(n).unwrap()
    }

    fn path(n: usize) -> Graph {
        generators::path(n).unwrap()
    }

    fn complete(n: usize) -> Graph {
        generators::complete(n).unwrap()
    }

    fn three_sun() -> Graph {
        generators::three_sun()
    }

    #[test]
    fn closed_neighborhood_basics() {
        let k3 = complete(3);
        assert_eq!(
            k3.closed_neighborhood(&VertexSet::singleton(3, 0)),
            VertexSet::full(3)
        );
        let p3 = path(3);
        assert_eq!(
            p3.closed_neighborhood(&VertexSet::singleton(3, 0)),
            VertexSet::from_vertices(3, [0, 1])
        );
        assert_eq!(
            p3.closed_neighborhood(&VertexSet::empty(3)),
            VertexSet::empty(3)
        );
    }

    #[test]
    fn closed_neighborhood_growth_bound() {
        for g in [cycle(7), path(6), three_sun(), complete(5)] {
            let n = g.vertex_count();
            for v in 0..n {
                let a = VertexSet::from_vertices(n, [v, (v + 1) % n]);
                let nb = g.closed_neighborhood(&a);
                assert!(a.is_subset_of(&nb));
                assert!(nb.len() <= a.len() * (g.max_degree() + 1));
            }
        }
    }

    #[test]
    fn dominating_examples() {
        let k4 = complete(4);
        assert!(k4.is_dominating(&VertexSet::singleton(4, 0)));
        let c5 = cycle(5);
        assert!(!c5.is_dominating(&VertexSet::singleton(5, 0)));
        assert!(c5.is_dominating(&VertexSet::from_vertices(5, [0, 2])));
        assert!(c5.is_dominating(&VertexSet::from_vertices(5, [0, 2, 4])));
    }

    /// Independent reference: try every subset mask of every size.
    fn domination_number_brute(g: &Graph) -> usize {
        let n = g.vertex_count();
        (0u32..1 << n)
            .filter(|&mask| {
                let s = VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
                g.is_dominating(&s)
            })
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn domination_number_examples() {
        for n in 1..=6 {
            assert_eq!(complete(n).domination_number_exact(24).unwrap().0, 1);
        }
        assert_eq!(cycle(6).domination_number_exact(24).unwrap().0, 2);
        assert_eq!(
            generators::hypercube(3).unwrap().domination_number_exact(24).unwrap().0,
            2
        );
    }

    #[test]
    fn domination_number_matches_brute_force() {
        for g in [cycle(5), cycle(6), cycle(7), path(7), three_sun(), complete(4)] {
            let (k, witness) = g.domination_number_exact(24).unwrap();
            assert_eq!(k, domination_number_brute(&g), "{g:?}");
            assert!(g.is_dominating(&witness));
            assert_eq!(witness.len(), k);
        }
    }

    #[test]
    fn domination_limit_is_enforced() {
        let g = path(10);
        assert!(matches!(
            g.domination_number_exact(9),
            Err(Error::Capability(_))
        ));
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(complete(4).vertex_connectivity(), 3);
        assert_eq!(cycle(5).vertex_connectivity(), 2);
        assert_eq!(path(4).vertex_connectivity(), 1);
        assert_eq!(complete(1).vertex_connectivity(), 0);
        assert_eq!(complete(2).vertex_connectivity(), 1);
        // disconnected
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.vertex_connectivity(), 0);
        // two triangles sharing one vertex
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert_eq!(g.vertex_connectivity(), 1);
        // K5 minus a perfect-ish matching: still 2-connected
        let q3 = generators::hypercube(3).unwrap();
        assert_eq!(q3.vertex_connectivity(), 3);
    }

    #[test]
    fn connectivity_at_most_min_degree() {
        for g in [cycle(6), path(5), three_sun(), generators::hypercube(3).unwrap()] {
            let min_deg = (0..g.vertex_count()).map(|v| g.degree(v)).min().unwrap();
            assert!(g.vertex_connectivity() <= min_deg);
        }
    }

    #[test]
    fn components_examples() {
        let c4 = cycle(4);
        let comps = c4.connected_components(&VertexSet::from_vertices(4, [0, 2]));
        assert_eq!(
            comps,
            vec![VertexSet::singleton(4, 1), VertexSet::singleton(4, 3)]
        );
        let p5 = path(5);
        let comps = p5.connected_components(&VertexSet::singleton(5, 2));
        assert_eq!(
            comps,
            vec![
                VertexSet::from_vertices(5, [0, 1]),
                VertexSet::from_vertices(5, [3, 4])
            ]
        );
        assert_eq!(p5.connected_components(&VertexSet::empty(5)).len(), 1);
    }

    /// Reference chordality check: some induced subgraph on ≥4 vertices is a cycle.
    pub(crate) fn has_induced_long_cycle(g: &Graph) -> bool {
        let n = g.vertex_count();
        for mask in 0u32..1 << n {
            if mask.count_ones() < 4 {
                continue;
            }
            let verts = VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
            let (h, _) = g.induced_subgraph(&verts);
            let k = h.vertex_count();
            if (0..k).all(|v| h.degree(v) == 2) && h.is_connected() {
                return true;
            }
        }
        false
    }

    #[test]
    fn chordal_examples() {
        assert!(complete(4).is_chordal().0);
        assert!(!cycle(4).is_chordal().0);
        assert!(three_sun().is_chordal().0);
        let (ok, order) = three_sun().is_chordal();
        assert!(ok);
        assert!(three_sun().is_perfect_elimination_order(&order.unwrap()));
    }

    #[test]
    fn chordal_matches_induced_cycle_search() {
        let graphs = [
            cycle(4),
            cycle(5),
            cycle(6),
            path(6),
            complete(5),
            three_sun(),
            generators::hypercube(3).unwrap(),
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 2), (1, 5), (5, 3)])
                .unwrap(),
        ];
        for g in graphs {
            assert_eq!(g.is_chordal().0, !has_induced_long_cycle(&g), "{g:?}");
        }
    }

    #[test]
    fn contraction_examples() {
        let k3 = complete(3);
        assert_eq!(k3.contract_edge(0, 1).unwrap(), complete(2));
        let c5 = cycle(5);
        let contracted = c5.contract_edge(0, 1).unwrap();
        assert_eq!(contracted.vertex_count(), 4);
        assert_eq!(contracted.edge_count(), 4);
        assert!((0..4).all(|v| contracted.degree(v) == 2));
        let p3 = path(3);
        assert_eq!(p3.contract_edge(0, 1).unwrap(), path(2));
        assert!(p3.contract_edge(0, 2).is_err());
    }

    #[test]
    fn text_format_round_trip() {
        let g = three_sun();
        let text = g.to_text();
        let back = Graph::from_text(&text).unwrap();
        assert_eq!(g, back);

        let commented = "# a graph\n3 2 # header\n0 1\n\n1 2 # last\n";
        let g = Graph::from_text(commented).unwrap();
        assert_eq!(g, path(3));

        assert!(Graph::from_text("2 1\n0 0\n").is_err());
        assert!(Graph::from_text("2 2\n0 1\n").is_err());
        assert!(Graph::from_text("1 0\n0 1\n").is_err());
        assert!(Graph::from_text("2 1\n0 3\n").is_err());
    }

    #[test]
    fn vertex_set_operations() {
        let mut a = VertexSet::from_vertices(130, [0, 64, 129]);
        assert_eq!(a.len(), 3);
        assert!(a.contains(64));
        a.remove(64);
        assert!(!a.contains(64));
        let b = VertexSet::from_vertices(130, [0, 1]);
        assert_eq!(a.intersection(&b), VertexSet::singleton(130, 0));
        assert_eq!(a.union(&b).len(), 3);
        assert!(VertexSet::empty(130).is_subset_of(&a));
        assert_eq!(VertexSet::full(130).len(), 130);
        assert_eq!(a.complement().len(), 128);
        assert_eq!(a.first(), Some(0));
        assert_eq!(VertexSet::empty(5).first(), None);
    }

    proptest::proptest! {
        #[test]
        fn text_roundtrip_is_lossless(
            edges in proptest::collection::btree_set((0usize..9, 0usize..9), 0..20),
        ) {
            let cleaned: Vec<(usize, usize)> =
                edges.into_iter().filter(|&(u, v)| u != v).collect();
            let g = Graph::from_edges(9, cleaned).unwrap();
            proptest::prop_assert_eq!(&Graph::from_text(&g.to_text()).unwrap(), &g);
        }

        #[test]
        fn set_algebra_matches_a_naive_model(
            a in proptest::collection::btree_set(0usize..90, 0..40),
            b in proptest::collection::btree_set(0usize..90, 0..40),
        ) {
            use std::collections::BTreeSet;
            let sa = VertexSet::from_vertices(90, a.iter().copied());
            let sb = VertexSet::from_vertices(90, b.iter().copied());
            let inter: BTreeSet<usize> = a.intersection(&b).copied().collect();
            let uni: BTreeSet<usize> = a.union(&b).copied().collect();
            proptest::prop_assert_eq!(sa.intersection(&sb).iter().collect::<BTreeSet<_>>(), inter);
            proptest::prop_assert_eq!(sa.union(&sb).iter().collect::<BTreeSet<_>>(), uni);
            proptest::prop_assert_eq!(sa.len(), a.len());
            proptest::prop_assert!(sa.intersection(&sb).is_subset_of(&sa));
        }
    }
}
