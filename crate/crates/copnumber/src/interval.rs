//! Interval representations, clique slices, cut-set structure, wideness and
//! the 3-approximation they power.
//!
//! Endpoints are stored as integer ticks: decimal input is scaled by a power
//! of ten at parse time, so all comparisons are exact. Slice `i` sits in the
//! open gap between consecutive sorted endpoints x_i and x_{i+1}; a vertex
//! belongs to it iff its interval covers the whole gap. Slice indices are
//! 0-based everywhere in this crate.

use rand_core::SeedableRng;

use crate::error::{Error, Result};
use crate::generators::uniform_below;
use crate::graph::{Graph, VertexSet};

/// Closed interval per vertex, endpoints in integer ticks over a common
/// decimal scale. All 2n endpoint values are pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalRepresentation {
    ticks: Vec<(i64, i64)>,
    /// Ticks per unit: endpoint value = tick / scale.
    scale: i64,
}

impl IntervalRepresentation {
    /// Build from raw ticks (scale 1). Rejects zero- or negative-length
    /// intervals and coincident endpoints.
    pub fn from_ticks(ticks: Vec<(i64, i64)>) -> Result<Self> {
        Self::with_scale(ticks, 1)
    }

    fn with_scale(ticks: Vec<(i64, i64)>, scale: i64) -> Result<Self> {
        for (v, &(l, r)) in ticks.iter().enumerate() {
            if l >= r {
                return Err(Error::input(format!(
                    "interval of vertex {v} is [{l}, {r}] in ticks; zero-length \
                     and reversed intervals are not allowed"
                )));
            }
        }
        let mut endpoints: Vec<(i64, usize)> = ticks
            .iter()
            .enumerate()
            .flat_map(|(v, &(l, r))| [(l, v), (r, v)])
            .collect();
        endpoints.sort_unstable();
        for pair in endpoints.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(Error::input(format!(
                    "endpoint value {} is shared by vertices {} and {}; make all \
                     2n endpoints distinct, e.g. perturb each duplicate by its \
                     rank (add rank·ε for an ε below the smallest endpoint gap)",
                    pair[0].0, pair[0].1, pair[1].1
                )));
            }
        }
        Ok(IntervalRepresentation { ticks, scale })
    }

    /// Build and check against the companion graph in one step.
    pub fn new(g: &Graph, ticks: Vec<(i64, i64)>) -> Result<Self> {
        let rep = Self::from_ticks(ticks)?;
        if rep.len() != g.vertex_count() {
            return Err(Error::input(format!(
                "{} intervals for a graph on {} vertices",
                rep.len(),
                g.vertex_count()
            )));
        }
        if !rep.matches(g) {
            return Err(Error::input(
                "intersection graph of the intervals differs from the graph",
            ));
        }
        Ok(rep)
    }

    pub fn len(&self) -> usize {
        self.ticks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ticks.is_empty()
    }

    pub fn interval(&self, v: usize) -> (i64, i64) {
        self.ticks[v]
    }

    /// True iff the intersection graph of the intervals is exactly `g`.
    pub fn matches(&self, g: &Graph) -> bool {
        if g.vertex_count() != self.len() {
            return false;
        }
        for u in 0..self.len() {
            let (lu, ru) = self.ticks[u];
            for v in u + 1..self.len() {
                let (lv, rv) = self.ticks[v];
                let intersect = lu <= rv && lv <= ru;
                if intersect != g.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Representation of the subgraph induced by `keep`, vertices renumbered
    /// in ascending old-id order (matching [`Graph::induced_subgraph`]).
    pub fn restricted_to(&self, keep: &VertexSet) -> IntervalRepresentation {
        IntervalRepresentation {
            ticks: keep.iter().map(|v| self.ticks[v]).collect(),
            scale: self.scale,
        }
    }

    /// Parse "n" then n lines "l r" of decimal rationals ('#' comments and
    /// blank lines allowed).
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter_map(|(i, line)| {
            let body = line.split('#').next().unwrap_or("").trim();
            (!body.is_empty()).then_some((i + 1, body))
        });
        let (first_no, first) = lines
            .next()
            .ok_or_else(|| Error::input("empty interval file"))?;
        let n: usize = first.parse().map_err(|_| Error::Parse {
            line: first_no,
            msg: format!("expected a vertex count, got {first:?}"),
        })?;
        let mut raw = Vec::with_capacity(n);
        for _ in 0..n {
            let (no, body) = lines.next().ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("expected {n} intervals, file ended early"),
            })?;
            let mut tokens = body.split_whitespace();
            let (l, r) = match (tokens.next(), tokens.next(), tokens.next()) {
                (Some(l), Some(r), None) => (l, r),
                _ => {
                    return Err(Error::Parse {
                        line: no,
                        msg: format!("expected \"l r\", got {body:?}"),
                    })
                }
            };
            raw.push((no, parse_decimal(l, no)?, parse_decimal(r, no)?));
        }
        if let Some((no, body)) = lines.next() {
            return Err(Error::Parse {
                line: no,
                msg: format!("unexpected trailing content {body:?}"),
            });
        }
        let places = raw
            .iter()
            .flat_map(|&(_, (_, pl), (_, pr))| [pl, pr])
            .max()
            .unwrap_or(0);
        if places > 12 {
            return Err(Error::input(format!(
                "endpoints use {places} decimal places; at most 12 are supported"
            )));
        }
        let scale = 10i64.pow(places);
        let mut ticks = Vec::with_capacity(n);
        for (no, l, r) in raw {
            ticks.push((rescale(l, places, no)?, rescale(r, places, no)?));
        }
        Self::with_scale(ticks, scale)
    }

    /// Scale in ticks per unit (a power of ten).
    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.len());
        for &(l, r) in &self.ticks {
            out.push_str(&format!(
                "{} {}\n",
                format_decimal(l, self.scale),
                format_decimal(r, self.scale)
            ));
        }
        out
    }
}

/// Signed digits plus the number of decimal places they carry.
type RawDecimal = (i64, u32);

fn parse_decimal(token: &str, line: usize) -> Result<RawDecimal> {
    let err = |msg: String| Error::Parse { line, msg };
    let (sign, digits) = match token.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1, token.strip_prefix('+').unwrap_or(token)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err(format!("{token:?} is not a number")));
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(err(format!("{token:?} is not a decimal number")));
    }
    let mut value: i64 = 0;
    for c in int_part.chars().chain(frac_part.chars()) {
        value = value
            .checked_mul(10)
            .and_then(|v| v.checked_add((c as u8 - b'0') as i64))
            .ok_or_else(|| err(format!("{token:?} is out of range")))?;
    }
    Ok((sign * value, frac_part.len() as u32))
}

fn rescale((value, places): RawDecimal, target: u32, line: usize) -> Result<i64> {
    value
        .checked_mul(10i64.pow(target - places))
        .ok_or_else(|| Error::Parse {
            line,
            msg: "endpoint is out of range after scaling".into(),
        })
}

fn format_decimal(tick: i64, scale: i64) -> String {
    if scale == 1 {
        return tick.to_string();
    }
    let sign = if tick < 0 { "-" } else { "" };
    let a = (tick as i128).unsigned_abs();
    let s = scale as u128;
    let frac = format!("{:0width$}", a % s, width = (scale.ilog10()) as usize);
    let frac = frac.trim_end_matches('0');
    if frac.is_empty() {
        format!("{sign}{}", a / s)
    } else {
        format!("{sign}{}.{frac}", a / s)
    }
}

/// The clique slices of a representation: slice i is the set of vertices
/// whose intervals cover the open gap (x_i, x_{i+1}) between consecutive
/// sorted endpoints — equivalently, the vertices containing a sample point
/// inside that gap.
#[derive(Clone, Debug)]
pub struct SliceSequence {
    /// Sorted distinct endpoint ticks, length l+1.
    pub endpoints: Vec<i64>,
    /// Sample points in doubled ticks: samples_doubled[i]/2 lies strictly
    /// between endpoints[i] and endpoints[i+1].
    pub samples_doubled: Vec<i64>,
    pub slices: Vec<VertexSet>,
    /// First and last slice index per vertex; vertices ordered by right
    /// endpoint iff ordered by last slice index.
    pub first_slice: Vec<usize>,
    pub last_slice: Vec<usize>,
}

impl SliceSequence {
    pub fn len(&self) -> usize {
        self.slices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slices.is_empty()
    }

    /// Union of slices a..=b as a vertex set.
    pub fn range_union(&self, a: usize, b: usize) -> VertexSet {
        let mut out = self.slices[a].clone();
        for i in a + 1..=b {
            out.union_with(&self.slices[i]);
        }
        out
    }
}

/// Slices of a representation, in gap order. l = 2n−1 since endpoints are
/// pairwise distinct; every vertex shows up in at least one slice.
pub fn slice_sequence(rep: &IntervalRepresentation) -> SliceSequence {
    let n = rep.len();
    let mut endpoints: Vec<i64> = (0..n)
        .flat_map(|v| {
            let (l, r) = rep.interval(v);
            [l, r]
        })
        .collect();
    endpoints.sort_unstable();
    let l = endpoints.len().saturating_sub(1);
    let mut slices = Vec::with_capacity(l);
    let mut samples = Vec::with_capacity(l);
    let mut first = vec![usize::MAX; n];
    let mut last = vec![usize::MAX; n];
    for i in 0..l {
        let (xa, xb) = (endpoints[i], endpoints[i + 1]);
        samples.push(xa + xb);
        let mut slice = VertexSet::empty(n);
        for v in 0..n {
            let (lv, rv) = rep.interval(v);
            if lv <= xa && rv >= xb {
                slice.insert(v);
                if first[v] == usize::MAX {
                    first[v] = i;
                }
                last[v] = i;
            }
        }
        slices.push(slice);
    }
    SliceSequence {
        endpoints,
        samples_doubled: samples,
        slices,
        first_slice: first,
        last_slice: last,
    }
}

/// True iff the intersection graph of the representation is exactly `g`.
pub fn validate_representation(g: &Graph, rep: &IntervalRepresentation) -> bool {
    rep.matches(g)
}

fn component_count(g: &Graph, removed: &VertexSet) -> usize {
    g.connected_components(removed).len()
}

/// Indices i such that slice V_i is a minimal cut-set: removing it increases
/// the component count, and no proper subset does. Since slices are cliques,
/// minimality reduces to checking each single-vertex omission.
pub fn minimal_cutset_slices(g: &Graph, sl: &SliceSequence) -> Vec<usize> {
    let baseline = component_count(g, &VertexSet::empty(g.vertex_count()));
    let is_cutset = |s: &VertexSet| component_count(g, s) > baseline;
    (0..sl.len())
        .filter(|&i| {
            let s = &sl.slices[i];
            if s.is_empty() || !is_cutset(s) {
                return false;
            }
            s.iter().all(|v| {
                let mut reduced = s.clone();
                reduced.remove(v);
                !is_cutset(&reduced)
            })
        })
        .collect()
}

/// Minimum dominating set of the interval subgraph over slices a..=b, chosen
/// inside that subgraph: repeatedly take the undominated vertex whose
/// interval ends first and add its closed neighbor (within the subgraph)
/// whose interval ends last.
pub fn domination_greedy_interval(g: &Graph, sub: (usize, usize), sl: &SliceSequence) -> VertexSet {
    let (a, b) = sub;
    assert!(a <= b && b < sl.len(), "slice range out of bounds");
    let n = g.vertex_count();
    let members = sl.range_union(a, b);
    let mut order: Vec<usize> = members.iter().collect();
    order.sort_by_key(|&v| sl.last_slice[v]);
    let mut dominated = VertexSet::empty(n);
    let mut chosen = VertexSet::empty(n);
    for &v in &order {
        if dominated.contains(v) {
            continue;
        }
        let mut candidates = g.closed_neighbors(v);
        candidates.intersect_with(&members);
        let w = candidates
            .iter()
            .max_by_key(|&w| sl.last_slice[w])
            .expect("v itself is a candidate");
        chosen.insert(w);
        dominated.union_with(&g.closed_neighbors(w));
    }
    chosen
}

/// Why an interval subgraph realizes the wideness value: either side of the
/// min(connectivity, domination) witness.
#[derive(Clone, Debug)]
pub struct WideCertificate {
    /// Inclusive slice range of the maximizing subgraph.
    pub range: (usize, usize),
    /// Wideness of that subgraph.
    pub m: usize,
    /// Vertices of the subgraph, in original ids.
    pub vertices: VertexSet,
    /// Vertex connectivity of the subgraph (n−1 convention for cliques).
    pub connectivity: usize,
    /// A smallest minimal-cutset slice of the subgraph, when one exists.
    pub min_cutset: Option<VertexSet>,
    /// Minimum dominating set of the subgraph, from the greedy.
    pub dominating_set: VertexSet,
}

/// Wideness of the subgraph on slices a..=b of `sl`, with witnesses mapped
/// back to g's vertex ids.
pub(crate) fn subgraph_wideness(
    g: &Graph,
    rep: &IntervalRepresentation,
    sl: &SliceSequence,
    a: usize,
    b: usize,
) -> WideCertificate {
    let members = sl.range_union(a, b);
    let (h, old_ids) = g.induced_subgraph(&members);
    debug_assert!(h.is_connected());
    let lift = |s: &VertexSet| VertexSet::from_vertices(g.vertex_count(), s.iter().map(|v| old_ids[v]));
    let sub_rep = rep.restricted_to(&members);
    let sub_sl = slice_sequence(&sub_rep);
    let dom = domination_greedy_interval(&h, (0, sub_sl.len() - 1), &sub_sl);
    let cut_indices = minimal_cutset_slices(&h, &sub_sl);
    let min_cut = cut_indices
        .iter()
        .map(|&i| &sub_sl.slices[i])
        .min_by_key(|s| s.len());
    let connectivity = match min_cut {
        Some(s) => s.len(),
        // No minimal cut-set means no cut-set at all: the subgraph is
        // complete and its wideness is 1.
        None => h.vertex_count() - 1,
    };
    WideCertificate {
        range: (a, b),
        m: connectivity.max(1).min(dom.len()),
        vertices: members,
        connectivity,
        min_cutset: min_cut.map(&lift),
        dominating_set: lift(&dom),
    }
}

/// w(g): the largest M over all interval subgraphs G[a,b] such that G[a,b]
/// is M-wide, where M = min(vertex connectivity, domination number) with
/// complete subgraphs pinned to 1. Ties broken toward the lexicographically
/// largest (M, a, b).
pub fn compute_w(g: &Graph, rep: &IntervalRepresentation) -> Result<(usize, WideCertificate)> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err(Error::input("wideness needs a connected nonempty graph"));
    }
    if !rep.matches(g) {
        return Err(Error::input(
            "representation does not match the graph",
        ));
    }
    let sl = slice_sequence(rep);
    let l = sl.len();
    let mut best: Option<WideCertificate> = None;
    for a in 0..l {
        for b in a..l {
            let cert = subgraph_wideness(g, rep, &sl, a, b);
            let key = (cert.m, a, b);
            if best.as_ref().map_or(true, |c| key > (c.m, c.range.0, c.range.1)) {
                best = Some(cert);
            }
        }
    }
    let cert = best.expect("at least one slice exists");
    Ok((cert.m, cert))
}

/// The sandwich (w, 3w): w(g) ≤ c∞(g) ≤ 3·w(g) for connected interval graphs.
pub fn three_approx_cop_number(g: &Graph, rep: &IntervalRepresentation) -> Result<(usize, usize)> {
    let (w, _) = compute_w(g, rep)?;
    Ok((w, 3 * w))
}

/// Checks w(g) ≤ √(5n)+3, which holds for every connected interval graph.
/// Exposed as a falsifiable check; exact integer arithmetic.
pub fn sqrt_bound_check(g: &Graph, rep: &IntervalRepresentation) -> Result<bool> {
    let (w, _) = compute_w(g, rep)?;
    let n = g.vertex_count();
    Ok(w <= 3 || (w - 3) * (w - 3) <= 5 * n)
}

/// Seeded random interval graph with distinct integer endpoints 0..2n−1,
/// resampled (deterministically) until connected.
pub fn random_connected_interval(n: usize, seed: u64) -> Result<(Graph, IntervalRepresentation)> {
    if n == 0 {
        return Err(Error::input("need n ≥ 1"));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..10_000 {
        let mut values: Vec<i64> = (0..2 * n as i64).collect();
        for i in 0..values.len() - 1 {
            let j = i + uniform_below(&mut rng, (values.len() - i) as u64) as usize;
            values.swap(i, j);
        }
        let ticks: Vec<(i64, i64)> = values
            .chunks_exact(2)
            .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
            .collect();
        let rep = IntervalRepresentation::from_ticks(ticks)?;
        let g = intersection_graph(&rep);
        if g.is_connected() {
            return Ok((g, rep));
        }
    }
    Err(Error::internal(format!(
        "no connected interval graph on {n} vertices found for seed {seed}"
    )))
}

/// The graph whose edges are exactly the intersecting interval pairs.
pub fn intersection_graph(rep: &IntervalRepresentation) -> Graph {
    let n = rep.len();
    let mut edges = Vec::new();
    for u in 0..n {
        let (lu, ru) = rep.interval(u);
        for v in u + 1..n {
            let (lv, rv) = rep.interval(v);
            if lu <= rv && lv <= ru {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("intersection edges are simple")
}
