//! Exact solver for the pursuit game against an unbounded-speed robber.
//!
//! Cops move first each round (each may stay or cross one edge; several may
//! share a vertex), then the robber runs along any path of her component of
//! G − cops — only occupied vertices block her. Capture happens exactly when
//! a cop move lands on her vertex, so she is never taken during her own move.
//!
//! States are (cop multiset, robber vertex, side to move). Cop multisets are
//! ranked combinatorially, the win region grows by backward breadth-first
//! search from the capture states, and the BFS layer of a state is the exact
//! number of plies optimal play needs from there. Strategies read those
//! distances instead of storing move tables.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Turn {
    Cops,
    Robber,
}

/// A full game position. `cops` is kept sorted (cops are interchangeable).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameState {
    pub cops: Vec<usize>,
    pub robber: usize,
    pub turn: Turn,
}

impl GameState {
    pub fn new(mut cops: Vec<usize>, robber: usize, turn: Turn) -> Self {
        cops.sort_unstable();
        GameState { cops, robber, turn }
    }
}

/// Vertices the robber can end her move on: her whole component of
/// G − cops, including staying put.
pub fn robber_moves(g: &Graph, s: &GameState) -> Vec<usize> {
    let blocked = VertexSet::from_vertices(g.vertex_count(), s.cops.iter().copied());
    debug_assert!(!blocked.contains(s.robber), "robber standing on a cop");
    g.reachable_avoiding(s.robber, &blocked).to_vec()
}

/// All cop multisets reachable in one round: each cop independently stays or
/// moves to a neighbor. Sorted and deduplicated; k = 0 yields the empty
/// multiset only.
pub fn cop_moves(g: &Graph, s: &GameState) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; s.cops.len()];
    fn rec(
        g: &Graph,
        cops: &[usize],
        i: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == cops.len() {
            let mut m = current.clone();
            m.sort_unstable();
            out.push(m);
            return;
        }
        current[i] = cops[i];
        rec(g, cops, i + 1, current, out);
        for w in g.neighbors(cops[i]).iter() {
            current[i] = w;
            rec(g, cops, i + 1, current, out);
        }
    }
    rec(g, &s.cops, 0, &mut current, &mut out);
    out.sort_unstable();
    out.dedup();
    out
}

/// Ranks sorted k-multisets over 0..n as combinations with repetition:
/// (c₀ ≤ … ≤ c_{k−1}) maps to the strictly increasing (c_i + i), which is
/// lex-ranked among k-subsets of {0, …, n+k−2}.
pub(crate) struct MultisetCodec {
    n: usize,
    k: usize,
    /// binom[i][j] = C(i, j) for i ≤ n+k−1, j ≤ k.
    binom: Vec<Vec<u64>>,
}

impl MultisetCodec {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        let rows = n + k;
        let mut binom = vec![vec![0u64; k + 1]; rows];
        for row in binom.iter_mut() {
            row[0] = 1;
        }
        // Pascal, saturating: counts near u64 would fail the state budget
        // long before precision matters.
        for i in 1..rows {
            for j in 1..=k {
                binom[i][j] = binom[i - 1][j].saturating_add(binom[i - 1][j - 1]);
            }
        }
        MultisetCodec { n, k, binom }
    }

    pub(crate) fn count(&self) -> u64 {
        self.binom[self.n + self.k - 1][self.k]
    }

    pub(crate) fn rank(&self, cops: &[u16]) -> u64 {
        debug_assert_eq!(cops.len(), self.k);
        let nn = self.n + self.k - 1;
        let mut rank = 0u64;
        let mut next = 0usize;
        for i in 0..self.k {
            let d = cops[i] as usize + i;
            for x in next..d {
                rank += self.binom[nn - 1 - x][self.k - 1 - i];
            }
            next = d + 1;
        }
        rank
    }

    pub(crate) fn unrank(&self, mut rank: u64, out: &mut Vec<u16>) {
        out.clear();
        let nn = self.n + self.k - 1;
        let mut x = 0usize;
        for i in 0..self.k {
            loop {
                let below = self.binom[nn - 1 - x][self.k - 1 - i];
                if rank < below {
                    out.push((x - i) as u16);
                    x += 1;
                    break;
                }
                rank -= below;
                x += 1;
            }
        }
    }
}

/// State count C(n+k−1, k)·n·2 without overflow.
pub fn states_estimate(n: usize, k: usize) -> u128 {
    let mut multisets: u128 = 1;
    for i in 0..k {
        multisets = multisets.saturating_mul((n + i) as u128) / (i as u128 + 1);
    }
    multisets.saturating_mul(2 * n as u128)
}

/// Win-region data for one (graph, k) instance. Positional strategies are
/// derived on demand from the capture distances.
pub struct SolveData {
    pub n: usize,
    pub k: usize,
    codec: MultisetCodec,
    /// Optimal plies-to-capture per state; u32::MAX outside the cop-win
    /// region. Indexed by ((multiset_rank·n)+robber)·2+turn.
    dist: Vec<u32>,
}

const UNREACHED: u32 = u32::MAX;

impl SolveData {
    fn sid(&self, mrank: u64, robber: usize, turn: Turn) -> usize {
        let t = match turn {
            Turn::Cops => 0,
            Turn::Robber => 1,
        };
        ((mrank as usize * self.n) + robber) * 2 + t
    }

    fn rank_of(&self, cops: &[usize]) -> u64 {
        let mut sorted: Vec<u16> = cops.iter().map(|&c| c as u16).collect();
        sorted.sort_unstable();
        self.codec.rank(&sorted)
    }

    /// Plies to capture under optimal play, if the cops win from here.
    pub fn capture_plies(&self, cops: &[usize], robber: usize, turn: Turn) -> Option<u32> {
        let d = self.dist[self.sid(self.rank_of(cops), robber, turn)];
        (d != UNREACHED).then_some(d)
    }

    pub fn cops_win_from(&self, cops: &[usize], robber: usize, turn: Turn) -> bool {
        self.capture_plies(cops, robber, turn).is_some()
    }

    /// Cop move minimizing plies-to-capture; capture now when possible. In
    /// the losing region, the move keeping the most robber replies losing,
    /// then lowest rank — deterministic either way.
    pub fn best_cop_move(&self, g: &Graph, cops: &[usize], robber: usize) -> Vec<usize> {
        let state = GameState::new(cops.to_vec(), robber, Turn::Cops);
        let moves = cop_moves(g, &state);
        let mut best: Option<(u32, u64, &Vec<usize>)> = None;
        for m in &moves {
            let key = if m.binary_search(&robber).is_ok() {
                (0u32, self.rank_of(m))
            } else {
                let d = self.dist[self.sid(self.rank_of(m), robber, Turn::Robber)];
                (d.saturating_add(1), self.rank_of(m))
            };
            if best.map_or(true, |(bd, br, _)| (key.0, key.1) < (bd, br)) {
                best = Some((key.0, key.1, m));
            }
        }
        best.expect("cop always has the stay move").2.clone()
    }

    /// Robber move: stay outside the win region when possible (ties: farthest
    /// from the nearest cop, then smallest id); otherwise maximize
    /// plies-to-capture (ties: smallest id).
    pub fn best_robber_move(&self, g: &Graph, cops: &[usize], robber: usize) -> usize {
        let state = GameState::new(cops.to_vec(), robber, Turn::Robber);
        let options = robber_moves(g, &state);
        let mrank = self.rank_of(cops);
        let cop_dist = multi_source_distances(g, cops);
        let mut safe: Option<(u32, usize)> = None;
        let mut doomed: Option<(u32, usize)> = None;
        for &r in &options {
            let d = self.dist[self.sid(mrank, r, Turn::Cops)];
            if d == UNREACHED {
                let key = (cop_dist[r], r);
                if safe.map_or(true, |(bd, br)| key.0 > bd || (key.0 == bd && r < br)) {
                    safe = Some(key);
                }
            } else if doomed.map_or(true, |(bd, br)| d > bd || (d == bd && r < br)) {
                doomed = Some((d, r));
            }
        }
        safe.or(doomed).expect("staying is always available").1
    }

    /// Best initial multiset for the cops: minimize the worst-case capture
    /// plies over robber replies (losing placements: maximize the number of
    /// losing replies), ties by rank. Returns (cops, cops_win).
    pub fn best_initial_cops(&self) -> (Vec<usize>, bool) {
        let mut buf: Vec<u16> = Vec::with_capacity(self.k);
        // (wins, worst-dist or #escapes, rank)
        let mut best_win: Option<(u32, u64)> = None;
        let mut best_lose: Option<(u64, u64)> = None;
        for mrank in 0..self.codec.count() {
            self.codec.unrank(mrank, &mut buf);
            let mut worst = 0u32;
            let mut escapes = 0u64;
            let mut free = false;
            for r in 0..self.n {
                if buf.contains(&(r as u16)) {
                    continue;
                }
                free = true;
                let d = self.dist[self.sid(mrank, r, Turn::Cops)];
                if d == UNREACHED {
                    escapes += 1;
                } else {
                    worst = worst.max(d);
                }
            }
            if !free || escapes == 0 {
                let key = if free { worst } else { 0 };
                if best_win.map_or(true, |(bw, _)| key < bw) {
                    best_win = Some((key, mrank));
                }
            } else if best_lose.map_or(true, |(be, _)| escapes < be) {
                best_lose = Some((escapes, mrank));
            }
        }
        let (mrank, win) = match (best_win, best_lose) {
            (Some((_, m)), _) => (m, true),
            (None, Some((_, m))) => (m, false),
            (None, None) => unreachable!("at least one multiset exists"),
        };
        self.codec.unrank(mrank, &mut buf);
        (buf.iter().map(|&c| c as usize).collect(), win)
    }

    /// Robber's placement against the given cops: a vertex outside the win
    /// region if one exists (ties: farthest from cops, then smallest id),
    /// else the slowest-capture vertex; None when every vertex is occupied.
    pub fn best_initial_robber(&self, g: &Graph, cops: &[usize]) -> Option<usize> {
        let mrank = self.rank_of(cops);
        let occupied = VertexSet::from_vertices(self.n, cops.iter().copied());
        let cop_dist = multi_source_distances(g, cops);
        let mut safe: Option<(u32, usize)> = None;
        let mut doomed: Option<(u32, usize)> = None;
        for r in 0..self.n {
            if occupied.contains(r) {
                continue;
            }
            let d = self.dist[self.sid(mrank, r, Turn::Cops)];
            if d == UNREACHED {
                if safe.map_or(true, |(bd, _)| cop_dist[r] > bd) {
                    safe = Some((cop_dist[r], r));
                }
            } else if doomed.map_or(true, |(bd, _)| d > bd) {
                doomed = Some((d, r));
            }
        }
        safe.or(doomed).map(|(_, r)| r)
    }
}

/// BFS distance from the nearest of `sources` to every vertex (u32::MAX on
/// unreachable vertices; all-MAX when there are no sources).
pub(crate) fn multi_source_distances(g: &Graph, sources: &[usize]) -> Vec<u32> {
    let n = g.vertex_count();
    let mut dist = vec![u32::MAX; n];
    let mut queue = VecDeque::new();
    for &s in sources {
        if dist[s] == u32::MAX {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v).iter() {
            if dist[w] == u32::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Verdict and strategy data for one cop count.
pub struct SolveOutcome {
    pub k: usize,
    pub cops_win: bool,
    /// Optimal rounds to capture from the best opening, when the cops win
    /// (0 means the placement already covers every vertex).
    pub capture_rounds: Option<u32>,
    pub initial_cops: Vec<usize>,
    pub initial_robber: Option<usize>,
    pub data: Arc<SolveData>,
}

impl std::fmt::Debug for SolveOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SolveOutcome")
            .field("k", &self.k)
            .field("cops_win", &self.cops_win)
            .field("capture_rounds", &self.capture_rounds)
            .field("initial_cops", &self.initial_cops)
            .field("initial_robber", &self.initial_robber)
            .finish_non_exhaustive()
    }
}

/// Decides the game with exactly k cops by backward BFS over all states.
pub fn solve_fixed_k(g: &Graph, k: usize, limits: &Limits) -> Result<SolveOutcome> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::input("cannot solve the empty graph"));
    }
    if !g.is_connected() {
        return Err(Error::input("solver requires a connected graph"));
    }
    let estimate = states_estimate(n, k);
    if estimate > limits.solver_states as u128 {
        return Err(Error::budget(format!(
            "k={k} on n={n} needs {estimate} states, over the budget of {} \
             (raise --budget to override)",
            limits.solver_states
        )));
    }
    let codec = MultisetCodec::new(n, k);
    let m_count = codec.count();
    let total = m_count as usize * n * 2;

    let mut dist = vec![UNREACHED; total];
    // Robber-to-move states: countdown of replies not yet known cop-won.
    let mut cnt = vec![0u16; m_count as usize * n];
    let mut queue: VecDeque<u32> = VecDeque::new();

    let data_stub = SolveData {
        n,
        k,
        codec,
        dist: Vec::new(),
    };
    let codec = &data_stub.codec;
    let sid = |mrank: u64, r: usize, turn: usize| -> usize {
        ((mrank as usize * n) + r) * 2 + turn
    };

    // Seed pass: immediate captures win in one ply; robber states learn
    // their component size (= number of replies, staying included).
    let mut cops_buf: Vec<u16> = Vec::with_capacity(k);
    let mut occupied = VertexSet::empty(n);
    for mrank in 0..m_count {
        codec.unrank(mrank, &mut cops_buf);
        occupied.clear();
        let mut controlled = VertexSet::empty(n);
        for &c in &cops_buf {
            occupied.insert(c as usize);
            controlled.union_with(g.neighbors(c as usize));
            controlled.insert(c as usize);
        }
        let mut seen = occupied.clone();
        for r in 0..n {
            if occupied.contains(r) {
                continue;
            }
            if !seen.contains(r) {
                let comp = g.reachable_avoiding(r, &occupied);
                let size = comp.len() as u16;
                for v in comp.iter() {
                    cnt[mrank as usize * n + v] = size;
                }
                seen.union_with(&comp);
            }
            if controlled.contains(r) {
                let s = sid(mrank, r, 0);
                dist[s] = 1;
                queue.push_back(s as u32);
            }
        }
    }

    // Backward BFS. Both one-step relations are symmetric, so predecessor
    // enumeration reuses the forward move generators.
    let mut succ_buf: Vec<u16> = vec![0; k];
    while let Some(s) = queue.pop_front() {
        let s = s as usize;
        let d = dist[s];
        let turn = s & 1;
        let r = (s >> 1) % n;
        let mrank = ((s >> 1) / n) as u64;
        codec.unrank(mrank, &mut cops_buf);
        if turn == 1 {
            // Robber-to-move state won: every cop multiset one move away
            // gains a winning option.
            enumerate_cop_multisets(g, &cops_buf, &mut succ_buf, &mut |codec_arg, multiset| {
                let pr = codec_arg.rank(multiset);
                let ps = sid(pr, r, 0);
                if dist[ps] == UNREACHED {
                    dist[ps] = d + 1;
                    queue.push_back(ps as u32);
                }
            }, codec);
        } else {
            // Cop-to-move state won: robber states in the same component
            // lose one escape option.
            occupied.clear();
            for &c in &cops_buf {
                occupied.insert(c as usize);
            }
            let comp = g.reachable_avoiding(r, &occupied);
            for r2 in comp.iter() {
                let ps = sid(mrank, r2, 1);
                if dist[ps] != UNREACHED {
                    continue;
                }
                let slot = &mut cnt[mrank as usize * n + r2];
                *slot -= 1;
                if *slot == 0 {
                    dist[ps] = d + 1;
                    queue.push_back(ps as u32);
                }
            }
        }
    }

    let mut data = data_stub;
    data.dist = dist;
    let data = Arc::new(data);
    let (initial_cops, cops_win) = data.best_initial_cops();
    let initial_robber = data.best_initial_robber(g, &initial_cops);
    let capture_rounds = if cops_win {
        match initial_robber {
            Some(r) => data
                .capture_plies(&initial_cops, r, Turn::Cops)
                .map(|p| (p + 1) / 2),
            None => Some(0),
        }
    } else {
        None
    };
    Ok(SolveOutcome {
        k,
        cops_win,
        capture_rounds,
        initial_cops,
        initial_robber,
        data,
    })
}

/// Calls `f` for every multiset reachable from `cops` in one cop move
/// (duplicates possible; callers dedupe by state).
fn enumerate_cop_multisets(
    g: &Graph,
    cops: &[u16],
    scratch: &mut [u16],
    f: &mut dyn FnMut(&MultisetCodec, &[u16]),
    codec: &MultisetCodec,
) {
    fn rec(
        g: &Graph,
        cops: &[u16],
        i: usize,
        scratch: &mut [u16],
        f: &mut dyn FnMut(&MultisetCodec, &[u16]),
        codec: &MultisetCodec,
    ) {
        if i == cops.len() {
            let mut sorted: Vec<u16> = scratch.to_vec();
            sorted.sort_unstable();
            f(codec, &sorted);
            return;
        }
        scratch[i] = cops[i];
        rec(g, cops, i + 1, scratch, f, codec);
        for w in g.neighbors(cops[i] as usize).iter() {
            scratch[i] = w as u16;
            rec(g, cops, i + 1, scratch, f, codec);
        }
    }
    rec(g, cops, 0, scratch, f, codec);
}

/// Verdicts for k = 1, 2, … until the cops first win.
pub struct SolveResult {
    pub cop_number: usize,
    /// (k, cops_win) for every k tried, ascending.
    pub verdicts: Vec<(usize, bool)>,
    /// Outcome at k = cop_number.
    pub witness: SolveOutcome,
}

/// c∞(g) by ascending k. Always terminates: cops on a dominating set
/// capture immediately, so k = n suffices long before the cap.
pub fn cop_number_exact(g: &Graph, limits: &Limits) -> Result<SolveResult> {
    let n = g.vertex_count();
    let mut verdicts = Vec::new();
    for k in 1..=n.max(1) {
        match solve_fixed_k(g, k, limits) {
            Ok(outcome) => {
                verdicts.push((k, outcome.cops_win));
                if outcome.cops_win {
                    return Ok(SolveResult {
                        cop_number: k,
                        verdicts,
                        witness: outcome,
                    });
                }
            }
            Err(Error::Budget(msg)) => {
                return Err(Error::budget(format!(
                    "established c∞ ≥ {k} but ran out of state budget: {msg}"
                )));
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::internal(
        "no cop count up to n wins; dominating-set placement should have won",
    ))
}

/// Who moves in a transcript line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mover {
    Cops,
    Robber,
}

#[derive(Clone, Debug)]
pub struct Ply {
    pub round: u32,
    pub mover: Mover,
    pub cops: Vec<usize>,
    pub robber: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Capture { round: u32 },
    Survived { rounds: u32 },
}

/// Full game record: placement plies (round 0) then alternating move plies.
#[derive(Clone, Debug)]
pub struct Transcript {
    pub plies: Vec<Ply>,
    pub outcome: Outcome,
}

impl Transcript {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in &self.plies {
            let mover = match p.mover {
                Mover::Cops => "cops",
                Mover::Robber => "robber",
            };
            let cops = p
                .cops
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let robber = match p.robber {
                Some(r) => r.to_string(),
                None => "-".into(),
            };
            out.push_str(&format!(
                "{}; {}; cops=[{}]; robber={}\n",
                p.round, mover, cops, robber
            ));
        }
        match self.outcome {
            Outcome::Capture { round } => out.push_str(&format!("outcome: capture round={round}\n")),
            Outcome::Survived { rounds } => {
                out.push_str(&format!("outcome: survived rounds={rounds}\n"))
            }
        }
        out
    }
}

/// A cop controller: initial placement, then one multiset per round.
pub trait CopPolicy {
    fn name(&self) -> &str;
    fn place(&mut self, g: &Graph, k: usize) -> Result<Vec<usize>>;
    fn step(&mut self, g: &Graph, cops: &[usize], robber: usize) -> Result<Vec<usize>>;
}

/// A robber controller: placement with the cops visible, then one vertex per
/// round. `place` returns None only when every vertex is occupied.
pub trait RobberPolicy {
    fn name(&self) -> &str;
    fn place(&mut self, g: &Graph, cops: &[usize]) -> Result<Option<usize>>;
    fn step(&mut self, g: &Graph, cops: &[usize], robber: usize) -> Result<usize>;
}

/// True iff `to` is reachable from `from` in one cop round: a perfect
/// matching pairing each cop with a stay-or-step destination.
pub fn is_legal_cop_move(g: &Graph, from: &[usize], to: &[usize]) -> bool {
    if from.len() != to.len() {
        return false;
    }
    let k = from.len();
    let ok = |i: usize, j: usize| from[i] == to[j] || g.has_edge(from[i], to[j]);
    let mut matched_to: Vec<usize> = vec![usize::MAX; k];
    fn augment(
        i: usize,
        k: usize,
        ok: &dyn Fn(usize, usize) -> bool,
        matched_to: &mut [usize],
        visited: &mut [bool],
    ) -> bool {
        for j in 0..k {
            if ok(i, j) && !visited[j] {
                visited[j] = true;
                if matched_to[j] == usize::MAX
                    || augment(matched_to[j], k, ok, matched_to, visited)
                {
                    matched_to[j] = i;
                    return true;
                }
            }
        }
        false
    }
    (0..k).all(|i| {
        let mut visited = vec![false; k];
        augment(i, k, &ok, &mut matched_to, &mut visited)
    })
}

/// Runs one game. Every policy output is validated; an illegal move aborts
/// with a policy error naming the offender.
pub fn play(
    g: &Graph,
    k: usize,
    cop_policy: &mut dyn CopPolicy,
    robber_policy: &mut dyn RobberPolicy,
    max_rounds: u32,
) -> Result<Transcript> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::input("cannot play on the empty graph"));
    }
    let mut plies = Vec::new();
    let mut cops = cop_policy.place(g, k)?;
    cops.sort_unstable();
    if cops.len() != k || cops.iter().any(|&c| c >= n) {
        return Err(Error::policy(format!(
            "cop policy '{}' placed {:?}, expected {k} vertices below {n}",
            cop_policy.name(),
            cops
        )));
    }
    plies.push(Ply {
        round: 0,
        mover: Mover::Cops,
        cops: cops.clone(),
        robber: None,
    });

    let occupied = VertexSet::from_vertices(n, cops.iter().copied());
    let robber0 = robber_policy.place(g, &cops)?;
    let mut robber = match robber0 {
        None => {
            if occupied.len() < n {
                return Err(Error::policy(format!(
                    "robber policy '{}' conceded although free vertices exist",
                    robber_policy.name()
                )));
            }
            plies.push(Ply {
                round: 0,
                mover: Mover::Robber,
                cops: cops.clone(),
                robber: None,
            });
            return Ok(Transcript {
                plies,
                outcome: Outcome::Capture { round: 0 },
            });
        }
        Some(r) => {
            if r >= n || occupied.contains(r) {
                return Err(Error::policy(format!(
                    "robber policy '{}' placed on {r}, which is occupied or out of range",
                    robber_policy.name()
                )));
            }
            r
        }
    };
    plies.push(Ply {
        round: 0,
        mover: Mover::Robber,
        cops: cops.clone(),
        robber: Some(robber),
    });

    for round in 1..=max_rounds {
        let mut next = cop_policy.step(g, &cops, robber)?;
        next.sort_unstable();
        if next.iter().any(|&c| c >= n) || !is_legal_cop_move(g, &cops, &next) {
            return Err(Error::policy(format!(
                "cop policy '{}' moved {:?} -> {:?}, which is not a legal round",
                cop_policy.name(),
                cops,
                next
            )));
        }
        cops = next;
        plies.push(Ply {
            round,
            mover: Mover::Cops,
            cops: cops.clone(),
            robber: Some(robber),
        });
        if cops.binary_search(&robber).is_ok() {
            return Ok(Transcript {
                plies,
                outcome: Outcome::Capture { round },
            });
        }

        let reply = robber_policy.step(g, &cops, robber)?;
        let state = GameState::new(cops.clone(), robber, Turn::Robber);
        if !robber_moves(g, &state).contains(&reply) {
            return Err(Error::policy(format!(
                "robber policy '{}' moved {robber} -> {reply}, which is not reachable",
                robber_policy.name()
            )));
        }
        robber = reply;
        plies.push(Ply {
            round,
            mover: Mover::Robber,
            cops: cops.clone(),
            robber: Some(robber),
        });
    }
    Ok(Transcript {
        plies,
        outcome: Outcome::Survived { rounds: max_rounds },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn codec_round_trip() {
        for (n, k) in [(5usize, 3usize), (4, 1), (6, 2), (3, 4), (1, 1), (7, 0)] {
            let codec = MultisetCodec::new(n, k);
            let mut expected: Vec<Vec<u16>> = Vec::new();
            fn gen(n: usize, k: usize, start: u16, acc: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
                if acc.len() == k {
                    out.push(acc.clone());
                    return;
                }
                for v in start..n as u16 {
                    acc.push(v);
                    gen(n, k, v, acc, out);
                    acc.pop();
                }
            }
            gen(n, k, 0, &mut Vec::new(), &mut expected);
            assert_eq!(codec.count() as usize, expected.len(), "n={n} k={k}");
            let mut buf = Vec::new();
            for (rank, multiset) in expected.iter().enumerate() {
                assert_eq!(codec.rank(multiset), rank as u64, "rank of {multiset:?}");
                codec.unrank(rank as u64, &mut buf);
                assert_eq!(&buf, multiset, "unrank {rank}");
            }
        }
    }

    #[test]
    fn robber_move_examples() {
        let c5 = generators::cycle(5).unwrap();
        let s = GameState::new(vec![0], 2, Turn::Robber);
        assert_eq!(robber_moves(&c5, &s), vec![1, 2, 3, 4]);

        let p5 = generators::path(5).unwrap();
        let s2 = GameState::new(vec![2], 0, Turn::Robber);
        assert_eq!(robber_moves(&p5, &s2), vec![0, 1]);

        let s3 = GameState::new(vec![], 3, Turn::Robber);
        assert_eq!(robber_moves(&p5, &s3), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn cop_move_examples() {
        let k2 = generators::complete(2).unwrap();
        let s = GameState::new(vec![0], 1, Turn::Cops);
        assert_eq!(cop_moves(&k2, &s), vec![vec![0], vec![1]]);

        let p3 = generators::path(3).unwrap();
        let s2 = GameState::new(vec![0, 2], 1, Turn::Cops);
        assert_eq!(
            cop_moves(&p3, &s2),
            vec![vec![0, 1], vec![0, 2], vec![1, 1], vec![1, 2]]
        );

        let s0 = GameState::new(vec![], 0, Turn::Cops);
        assert_eq!(cop_moves(&p3, &s0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn solve_examples() {
        let k5 = generators::complete(5).unwrap();
        assert!(solve_fixed_k(&k5, 1, &limits()).unwrap().cops_win);

        let c5 = generators::cycle(5).unwrap();
        assert!(!solve_fixed_k(&c5, 1, &limits()).unwrap().cops_win);
        assert!(solve_fixed_k(&c5, 2, &limits()).unwrap().cops_win);
    }

    #[test]
    fn cop_numbers_of_small_families() {
        let lim = limits();
        for n in 1..=8 {
            let p = generators::path(n).unwrap();
            assert_eq!(cop_number_exact(&p, &lim).unwrap().cop_number, 1, "P{n}");
        }
        // a few non-path trees
        let star = generators::complete_bipartite(1, 5).unwrap();
        assert_eq!(cop_number_exact(&star, &lim).unwrap().cop_number, 1);
        let spider = Graph::from_edges(
            8,
            [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (6, 7)],
        )
        .unwrap();
        assert_eq!(cop_number_exact(&spider, &lim).unwrap().cop_number, 1);

        for n in 3..=7 {
            let c = generators::cycle(n).unwrap();
            let expect = if n == 3 { 1 } else { 2 };
            assert_eq!(cop_number_exact(&c, &lim).unwrap().cop_number, expect, "C{n}");
        }

        let q3 = generators::hypercube(3).unwrap();
        assert_eq!(cop_number_exact(&q3, &lim).unwrap().cop_number, 2);

        let sun = generators::three_sun();
        assert_eq!(cop_number_exact(&sun, &lim).unwrap().cop_number, 2);

        assert_eq!(
            cop_number_exact(&generators::complete(1).unwrap(), &lim)
                .unwrap()
                .cop_number,
            1
        );
    }

    #[test]
    fn theta_three_needs_three_cops() {
        let g = generators::theta_family(3).unwrap();
        let res = cop_number_exact(&g, &limits()).unwrap();
        assert_eq!(res.cop_number, 3);
        assert_eq!(res.verdicts, vec![(1, false), (2, false), (3, true)]);
    }

    #[test]
    fn verdicts_monotone_and_bounded_by_domination() {
        let lim = limits();
        for g in [
            generators::cycle(6).unwrap(),
            generators::three_sun(),
            generators::grid(3).unwrap(),
            generators::hypercube(3).unwrap(),
        ] {
            let res = cop_number_exact(&g, &lim).unwrap();
            let mut seen_win = false;
            for &(_, win) in &res.verdicts {
                assert!(!seen_win || win, "verdict not monotone");
                seen_win |= win;
            }
            let (gamma, _) = g.domination_number_exact(24).unwrap();
            assert!(res.cop_number <= gamma);
            // and a dominating-set placement wins in one round
            let outcome = solve_fixed_k(&g, gamma, &lim).unwrap();
            assert!(outcome.cops_win);
            assert!(outcome.capture_rounds.unwrap() <= g.vertex_count() as u32);
        }
    }

    #[test]
    fn budget_refusal_is_deterministic() {
        let g = generators::grid(3).unwrap();
        let tight = Limits::default().with_solver_states(10);
        match solve_fixed_k(&g, 2, &tight) {
            Err(Error::Budget(msg)) => assert!(msg.contains("budget")),
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    struct ScriptedCop(Vec<Vec<usize>>);
    impl CopPolicy for ScriptedCop {
        fn name(&self) -> &str {
            "scripted"
        }
        fn place(&mut self, _: &Graph, _: usize) -> Result<Vec<usize>> {
            Ok(self.0.remove(0))
        }
        fn step(&mut self, _: &Graph, cops: &[usize], _: usize) -> Result<Vec<usize>> {
            if self.0.is_empty() {
                Ok(cops.to_vec())
            } else {
                Ok(self.0.remove(0))
            }
        }
    }

    struct SitRobber(usize);
    impl RobberPolicy for SitRobber {
        fn name(&self) -> &str {
            "sit"
        }
        fn place(&mut self, _: &Graph, _: &[usize]) -> Result<Option<usize>> {
            Ok(Some(self.0))
        }
        fn step(&mut self, _: &Graph, _: &[usize], robber: usize) -> Result<usize> {
            Ok(robber)
        }
    }

    #[test]
    fn play_validates_moves() {
        let p5 = generators::path(5).unwrap();
        // teleporting cop is rejected
        let mut cop = ScriptedCop(vec![vec![0], vec![4]]);
        let mut robber = SitRobber(2);
        match play(&p5, 1, &mut cop, &mut robber, 10) {
            Err(Error::Policy(msg)) => assert!(msg.contains("scripted")),
            other => panic!("expected policy error, got {other:?}"),
        }

        // legal walk captures the sitting robber
        let mut cop2 = ScriptedCop(vec![vec![0], vec![1], vec![2]]);
        let mut robber2 = SitRobber(2);
        let t = play(&p5, 1, &mut cop2, &mut robber2, 10).unwrap();
        assert_eq!(t.outcome, Outcome::Capture { round: 2 });
        let text = t.to_text();
        assert!(text.contains("0; cops; cops=[0]; robber=-"));
        assert!(text.contains("outcome: capture round=2"));
    }

    #[test]
    fn legal_move_matching() {
        let p4 = generators::path(4).unwrap();
        assert!(is_legal_cop_move(&p4, &[0, 2], &[1, 2]));
        assert!(is_legal_cop_move(&p4, &[0, 2], &[1, 1]));
        assert!(!is_legal_cop_move(&p4, &[0, 2], &[2, 3])); // nobody can cover 2 and 3 at once from 0
        assert!(is_legal_cop_move(&p4, &[1, 2], &[2, 1])); // swap along the shared edge
        assert!(!is_legal_cop_move(&p4, &[0], &[0, 1]));
        // two cops on one vertex can split
        assert!(is_legal_cop_move(&p4, &[1, 1], &[0, 2]));
    }

    #[test]
    fn optimal_play_reproduces_verdict() {
        let lim = limits();
        for (g, k) in [
            (generators::cycle(5).unwrap(), 2),
            (generators::path(5).unwrap(), 1),
            (generators::three_sun(), 2),
            (generators::cycle(6).unwrap(), 1),
        ] {
            let outcome = solve_fixed_k(&g, k, &lim).unwrap();
            let data = outcome.data.clone();
            struct OptCop(Arc<SolveData>);
            impl CopPolicy for OptCop {
                fn name(&self) -> &str {
                    "optimal"
                }
                fn place(&mut self, _: &Graph, _: usize) -> Result<Vec<usize>> {
                    Ok(self.0.best_initial_cops().0)
                }
                fn step(&mut self, g: &Graph, cops: &[usize], robber: usize) -> Result<Vec<usize>> {
                    Ok(self.0.best_cop_move(g, cops, robber))
                }
            }
            struct OptRobber(Arc<SolveData>);
            impl RobberPolicy for OptRobber {
                fn name(&self) -> &str {
                    "optimal"
                }
                fn place(&mut self, g: &Graph, cops: &[usize]) -> Result<Option<usize>> {
                    Ok(self.0.best_initial_robber(g, cops))
                }
                fn step(&mut self, g: &Graph, cops: &[usize], robber: usize) -> Result<usize> {
                    Ok(self.0.best_robber_move(g, cops, robber))
                }
            }
            let mut cop = OptCop(data.clone());
            let mut robber = OptRobber(data);
            let max = 4 * g.vertex_count() as u32 * g.vertex_count() as u32;
            let t = play(&g, k, &mut cop, &mut robber, max).unwrap();
            match (outcome.cops_win, t.outcome) {
                (true, Outcome::Capture { round }) => {
                    assert_eq!(round, outcome.capture_rounds.unwrap());
                }
                (false, Outcome::Survived { .. }) => {}
                (w, o) => panic!("verdict {w} but play ended {o:?}"),
            }
        }
    }

    #[test]
    fn transcripts_are_deterministic() {
        let g = generators::cycle(5).unwrap();
        let lim = limits();
        let run = || {
            let outcome = solve_fixed_k(&g, 2, &lim).unwrap();
            let data = outcome.data.clone();
            let cops = data.best_initial_cops().0;
            let r = data.best_initial_robber(&g, &cops).unwrap();
            let mut text = format!("{cops:?} {r}");
            let mut c = cops;
            let mut rv = r;
            for _ in 0..6 {
                c = data.best_cop_move(&g, &c, rv);
                if c.contains(&rv) {
                    text.push_str(" capture");
                    break;
                }
                rv = data.best_robber_move(&g, &c, rv);
                text.push_str(&format!(" {c:?}/{rv}"));
            }
            text
        };
        assert_eq!(run(), run());
    }
}
