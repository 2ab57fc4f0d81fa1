//! Playable policies extracted from the constructive bound proofs, plus
//! solver-optimal wrappers and scripted baselines for the arena.
//!
//! Every policy here is deterministic (the random baselines are seeded):
//! internal choices resolve by smallest vertex id, and relocations follow
//! shortest paths with smallest-id tie-breaks, so transcripts reproduce
//! byte-for-byte.

use std::collections::VecDeque;
use std::sync::Arc;

use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use crate::config::Limits;
use crate::decomposition::TreeDecomposition;
use crate::error::{Error, Result};
use crate::generators::{self, AccessiblePairData};
use crate::graph::{Graph, VertexSet};
use crate::interval::{self, IntervalRepresentation, SliceSequence};
use crate::solver::{
    is_legal_cop_move, multi_source_distances, robber_moves, CopPolicy, GameState, RobberPolicy,
    SolveData, Turn,
};

fn occupied_set(n: usize, cops: &[usize]) -> VertexSet {
    VertexSet::from_vertices(n, cops.iter().copied())
}

/// Vertices occupied or adjacent to a cop.
fn controlled_set(g: &Graph, cops: &[usize]) -> VertexSet {
    let mut out = VertexSet::empty(g.vertex_count());
    for &c in cops {
        out.insert(c);
        out.union_with(g.neighbors(c));
    }
    out
}

fn same_graph(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && (0..a.vertex_count()).all(|v| a.neighbors(v) == b.neighbors(v))
}

/// One step from `from` along a shortest path to the target whose distance
/// map is given; stays put at the target or off the target's component.
fn step_toward(g: &Graph, from: usize, dist_to_target: &[u32]) -> usize {
    let d = dist_to_target[from];
    if d == 0 || d == u32::MAX {
        return from;
    }
    g.neighbors(from)
        .iter()
        .find(|&w| dist_to_target[w] == d - 1)
        .unwrap_or(from)
}

/// Exhaustive wideness test: the induced subgraph on `h` must be
/// k-connected, and no vertex set of size < k drawn from all of g may
/// closed-dominate h. For k = 1 the first condition degenerates to
/// "connected and nonempty".
pub fn is_k_wide(g: &Graph, h: &VertexSet, k: usize, limits: &Limits) -> Result<bool> {
    let n = g.vertex_count();
    if k == 0 {
        return Err(Error::input("wideness is defined for k ≥ 1"));
    }
    if h.universe() != n {
        return Err(Error::input(format!(
            "subgraph set is over {} vertices but the graph has {n}",
            h.universe()
        )));
    }
    if n > limits.wide_check_n || n > 64 {
        return Err(Error::capability(format!(
            "wideness check is exhaustive and capped at {} vertices, got {n}",
            limits.wide_check_n.min(64)
        )));
    }
    if h.is_empty() {
        return Ok(false);
    }
    let (sub, _) = g.induced_subgraph(h);
    let connected_enough = if k == 1 {
        sub.is_connected()
    } else {
        sub.vertex_count() > k && sub.vertex_connectivity() >= k
    };
    if !connected_enough {
        return Ok(false);
    }
    let mut subsets: u128 = 0;
    let mut choose: u128 = 1;
    for s in 1..k {
        choose = choose * (n + 1 - s) as u128 / s as u128;
        subsets += choose;
    }
    if subsets > 50_000_000 {
        return Err(Error::capability(format!(
            "wideness condition needs {subsets} candidate sets for k = {k}"
        )));
    }
    let masks: Vec<u64> = (0..n)
        .map(|v| {
            g.closed_neighbors(v)
                .iter()
                .fold(0u64, |m, w| m | 1 << w)
        })
        .collect();
    let h_mask = h.iter().fold(0u64, |m, v| m | 1 << v);
    fn dominated(masks: &[u64], h_mask: u64, start: usize, left: usize, acc: u64) -> bool {
        if acc & h_mask == h_mask {
            return true;
        }
        if left == 0 {
            return false;
        }
        (start..masks.len()).any(|v| dominated(masks, h_mask, v + 1, left - 1, acc | masks[v]))
    }
    Ok(!dominated(&masks, h_mask, 0, k - 1, 0))
}

/// Plays the exact solver's cop strategy for the (graph, k) it was built on.
pub struct OptimalCopPolicy {
    data: Arc<SolveData>,
}

impl OptimalCopPolicy {
    pub fn new(data: Arc<SolveData>) -> Self {
        OptimalCopPolicy { data }
    }
}

impl CopPolicy for OptimalCopPolicy {
    fn name(&self) -> &str {
        "optimal-cops"
    }

    fn place(&mut self, g: &Graph, k: usize) -> Result<Vec<usize>> {
        if g.vertex_count() != self.data.n || k != self.data.k {
            return Err(Error::policy(format!(
                "optimal cop policy was solved for n={}, k={}, asked to play n={}, k={k}",
                self.data.n,
                self.data.k,
                g.vertex_count()
            )));
        }
        Ok(self.data.best_initial_cops().0)
    }

    fn step(&mut self, g: &Graph, cops: &[usize], robber: usize) -> Result<Vec<usize>> {
        Ok(self.data.best_cop_move(g, cops, robber))
    }
}

/// Plays the exact solver's robber strategy.
pub struct OptimalRobberPolicy {
    data: Arc<SolveData>,
}

impl OptimalRobberPolicy {
    pub fn new(data: Arc<SolveData>) -> Self {
        OptimalRobberPolicy { data }
    }
}

impl RobberPolicy for OptimalRobberPolicy {
    fn name(&self) -> &str {
        "optimal-robber"
    }

    fn place(&mut self, g: &Graph, cops: &[usize]) -> Result<Option<usize>> {
        if g.vertex_count() != self.data.n || cops.len() != self.data.k {
            return Err(Error::policy(format!(
                "optimal robber policy was solved for n={}, k={}, asked to play n={}, k={}",
                self.data.n,
                self.data.k,
                g.vertex_count(),
                cops.len()
            )));
        }
        Ok(self.data.best_initial_robber(g, cops))
    }

    fn step(&mut self, g: &Graph, cops: &[usize], robber: usize) -> Result<usize> {
        Ok(self.data.best_robber_move(g, cops, robber))
    }
}

/// Baseline: every cop walks a shortest path toward the robber each round.
pub struct GreedyClosestCop;

impl CopPolicy for GreedyClosestCop {
    fn name(&self) -> &str {
        "greedy-cops"
    }

    fn place(&mut self, g: &Graph, k: usize) -> Result<Vec<usize>> {
        let n = g.vertex_count();
        if n == 0 {
            return Err(Error::input("cannot place cops on the empty graph"));
        }
        Ok((0..k).map(|i| i.min(n - 1)).collect())
    }

    fn step(&mut self, g: &Graph, cops: &[usize], robber: usize) -> Result<Vec<usize>> {
        let dist = multi_source_distances(g, &[robber]);
        Ok(cops.iter().map(|&c| step_toward(g, c, &dist)).collect())
    }
}

/// Parks one cop on each vertex of a minimum dominating set, after which
/// every robber position has an adjacent cop ready to walk over.
pub struct DominationCop {
    limits: Limits,
}

pub fn cop_domination(limits: Limits) -> DominationCop {
    DominationCop { limits }
}

impl CopPolicy for DominationCop {
    fn name(&self) -> &str {
        "domination-cops"
    }

    fn place(&mut self, g: &Graph, k: usize) -> Result<Vec<usize>> {
        let (gamma, set) = g.domination_number_exact(self.limits.domination_n)?;
        if k < gamma {
            return Err(Error::policy(format!(
                "domination placement needs {gamma} cops on this graph, got {k}"
            )));
        }
        let mut cops: Vec<usize> = set.iter().collect();
        let anchor = cops[0];
        cops.resize(k, anchor);
        Ok(cops)
    }

    fn step(&mut self, g: &Graph, cops: &[usize], robber: usize) -> Result<Vec<usize>> {
        let mut next = cops.to_vec();
        match cops
            .iter()
            .position(|&c| c == robber || g.has_edge(c, robber))
        {
            Some(i) => next[i] = robber,
            None => {
                return Err(Error::internal(
                    "domination placement left the robber undominated",
                ))
            }
        }
        Ok(next)
    }
}

/// Baseline: seeded uniformly-random legal moves.
pub struct RandomCopPolicy {
    rng: ChaCha8Rng,
}

impl RandomCopPolicy {
    pub fn new(seed: u64) -> Self {
        RandomCopPolicy {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl CopPolicy for RandomCopPolicy {
    fn name(&self) -> &str {
        "random-cops"
    }

    fn place(&mut self, g: &Graph, k: usize) -> Result<Vec<usize>> {
        let n = g.vertex_count();
        if n == 0 {
            return Err(Error::input("cannot place cops on the empty graph"));
        }
        Ok((0..k)
            .map(|_| generators::uniform_below(&mut self.rng, n as u64) as usize)
            .collect())
    }

    fn step(&mut self, g: &Graph, cops: &[usize], _robber: usize) -> Result<Vec<usize>> {
        Ok(cops
            .iter()
            .map(|&c| {
                let options: Vec<usize> = g.closed_neighbors(c).iter().collect();
                options[generators::uniform_below(&mut self.rng, options.len() as u64) as usize]
            })
            .collect())
    }
}

/// Baseline: seeded uniformly-random legal robber.
pub struct RandomRobberPolicy {
    rng: ChaCha8Rng,
}

impl RandomRobberPolicy {
    pub fn new(seed: u64) -> Self {
        RandomRobberPolicy {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl RobberPolicy for RandomRobberPolicy {
    fn name(&self) -> &str {
        "random-robber"
    }

    fn place(&mut self, g: &Graph, cops: &[usize]) -> Result<Option<usize>> {
        let n = g.vertex_count();
        let occupied = occupied_set(n, cops);
        let free: Vec<usize> = (0..n).filter(|&v| !occupied.contains(v)).collect();
        if free.is_empty() {
            return Ok(None);
        }
        Ok(Some(
            free[generators::uniform_below(&mut self.rng, free.len() as u64) as usize],
        ))
    }

    fn step(&mut self, g: &Graph, cops: &[usize], robber: usize) -> Result<usize> {
        let options = robber_moves(g, &GameState::new(cops.to_vec(), robber, Turn::Robber));
        Ok(options[generators::uniform_below(&mut self.rng, options.len() as u64) as usize])
    }
}

#[derive(Clone, Debug)]
enum SweepRole {
    Hold,
    MoveTo(usize),
    Park,
}

#[derive(Clone, Debug)]
enum SweepPhase {
    Holding { bag: usize },
    Moving { target_bag: usize, roles: Vec<SweepRole> },
}

/// Bag-to-bag sweep along a tree decomposition: occupy a bag, find the
/// robber's side of the tree, advance to the neighboring bag while the cops
/// on the shared separator stay still. The robber is confined to a strictly
/// shrinking part of the tree, so width+1 cops capture.
pub struct SweepCopPolicy {
    td: TreeDecomposition,
    cops: Vec<usize>,
    phase: SweepPhase,
}

pub fn cop_sweep_decomposition(td: TreeDecomposition) -> SweepCopPolicy {
    SweepCopPolicy {
        td,
        cops: Vec::new(),
        phase: SweepPhase::Holding { bag: 0 },
    }
}

/// Neighbor of `from` on the tree path toward the nearest bag containing
/// `robber`. All bags containing a vertex form a subtree, so the hop is
/// independent of which of them BFS meets first.
fn first_hop_toward(tree: &Graph, bags: &[VertexSet], from: usize, robber: usize) -> Result<usize> {
    let mut parent = vec![usize::MAX; tree.vertex_count()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(t) = queue.pop_front() {
        if t != from && bags[t].contains(robber) {
            let mut node = t;
            while parent[node] != from {
                node = parent[node];
            }
            return Ok(node);
        }
        for nb in tree.neighbors(t).iter() {
            if parent[nb] == usize::MAX {
                parent[nb] = t;
                queue.push_back(nb);
            }
        }
    }
    Err(Error::internal(
        "robber vertex is missing from every bag of the decomposition",
    ))
}

impl SweepCopPolicy {
    fn check_bookkeeping(&self, cops: &[usize]) -> Result<()> {
        let mut mine = self.cops.clone();
        mine.sort_unstable();
        if mine != cops {
            return Err(Error::internal(
                "sweep policy: cop positions diverged from internal bookkeeping",
            ));
        }
        Ok(())
    }
}

impl CopPolicy for SweepCopPolicy {
    fn name(&self) -> &str {
        "sweep"
    }

    fn place(&mut self, g: &Graph, k: usize) -> Result<Vec<usize>> {
        if !self.td.is_valid_for(g) {
            return Err(Error::input(
                "tree decomposition does not cover this graph",
            ));
        }
        let width = self.td.width();
        if k < width + 1 {
            return Err(Error::policy(format!(
                "sweep needs width+1 = {} cops, got {k}",
                width + 1
            )));
        }
        let start = (0..self.td.bags().len())
            .find(|&t| !self.td.bags()[t].is_empty())
            .ok_or_else(|| Error::input("decomposition has only empty bags"))?;
        let verts: Vec<usize> = self.td.bags()[start].iter().collect();
        let mut cops = verts.clone();
        while cops.len() < k {
            cops.push(verts[0]);
        }
        self.cops = cops.clone();
        self.phase = SweepPhase::Holding { bag: start };
        Ok(cops)
    }

    fn step(&mut self, g: &Graph, cops: &[usize], robber: usize) -> Result<Vec<usize>> {
        self.check_bookkeeping(cops)?;
        // Capture whenever a cop can end the game this round.
        if let Some(i) = self
            .cops
            .iter()
            .position(|&c| c == robber || g.has_edge(c, robber))
        {
            self.cops[i] = robber;
            return Ok(self.cops.clone());
        }
        loop {
            match &self.phase {
                SweepPhase::Holding { bag } => {
                    let bag = *bag;
                    let bags = self.td.bags();
                    if bags[bag].contains(robber) {
                        return Err(Error::internal(
                            "sweep invariant broke: robber inside the occupied bag",
                        ));
                    }
                    let next_bag = first_hop_toward(self.td.tree(), bags, bag, robber)?;
                    let mut hold = bags[bag].clone();
                    hold.intersect_with(&bags[next_bag]);
                    let mut targets: Vec<usize> = bags[next_bag]
                        .iter()
                        .filter(|&v| !hold.contains(v))
                        .collect();
                    targets.reverse(); // pop() takes them in ascending order
                    let mut kept = VertexSet::empty(g.vertex_count());
                    let mut roles = Vec::with_capacity(self.cops.len());
                    for &c in &self.cops {
                        if hold.contains(c) && !kept.contains(c) {
                            kept.insert(c);
                            roles.push(SweepRole::Hold);
                        } else {
                            roles.push(match targets.pop() {
                                Some(t) => SweepRole::MoveTo(t),
                                None => SweepRole::Park,
                            });
                        }
                    }
                    if kept != hold {
                        return Err(Error::internal(
                            "sweep invariant broke: separator not fully occupied",
                        ));
                    }
                    self.phase = SweepPhase::Moving {
                        target_bag: next_bag,
                        roles,
                    };
                }
                SweepPhase::Moving { target_bag, roles } => {
                    let target_bag = *target_bag;
                    let roles = roles.clone();
                    let mut arrived = true;
                    for (i, role) in roles.iter().enumerate() {
                        if let SweepRole::MoveTo(t) = role {
                            if self.cops[i] != *t {
                                let dist = multi_source_distances(g, &[*t]);
                                self.cops[i] = step_toward(g, self.cops[i], &dist);
                            }
                            if self.cops[i] != *t {
                                arrived = false;
                            }
                        }
                    }
                    if arrived {
                        self.phase = SweepPhase::Holding { bag: target_bag };
                    }
                    return Ok(self.cops.clone());
                }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum SettleKind {
    Dominating,
    Cut { slice: usize },
}

#[derive(Clone, Debug)]
enum TeamPhase {
    Idle,
    Settling {
        kind: SettleKind,
        /// (internal cop index, destination vertex) for the working team.
        pending: Vec<(usize, usize)>,
    },
    Rebracket { slice: usize },
}

/// Three teams of w cops on an interval graph: two hold the bracket slices
/// V_{i1}, V_{i2}, the third settles on either a ≤w dominating set of the
/// interior (capture next round) or a ≤w cut slice, which becomes the new
/// bracket end on whichever side the robber chose. At most l phases.
pub struct ThreeTeamCopPolicy {
    rep: IntervalRepresentation,
    w: usize,
    sl: Option<SliceSequence>,
    cops: Vec<usize>,
    /// Internal cop indices by role: [hold-left, hold-right, workers].
    teams: [Vec<usize>; 3],
    i1: usize,
    i2: usize,
    phase: TeamPhase,
}

pub fn cop_interval_three_team(rep: IntervalRepresentation, w: usize) -> ThreeTeamCopPolicy {
    ThreeTeamCopPolicy {
        rep,
        w,
        sl: None,
        cops: Vec::new(),
        teams: [Vec::new(), Vec::new(), Vec::new()],
        i1: 0,
        i2: 0,
        phase: TeamPhase::Idle,
    }
}

impl ThreeTeamCopPolicy {
    fn check_bookkeeping(&self, cops: &[usize]) -> Result<()> {
        let mut mine = self.cops.clone();
        mine.sort_unstable();
        if mine != cops {
            return Err(Error::internal(
                "three-team policy: cop positions diverged from internal bookkeeping",
            ));
        }
        Ok(())
    }
}

impl CopPolicy for ThreeTeamCopPolicy {
    fn name(&self) -> &str {
        "three-team"
    }

    fn place(&mut self, g: &Graph, k: usize) -> Result<Vec<usize>> {
        if !self.rep.matches(g) {
            return Err(Error::input(
                "interval representation does not match this graph",
            ));
        }
        let (computed, _) = interval::compute_w(g, &self.rep)?;
        if computed != self.w {
            return Err(Error::input(format!(
                "stated wideness {} but the representation gives w = {computed}",
                self.w
            )));
        }
        if k < 3 * self.w {
            return Err(Error::policy(format!(
                "three-team strategy needs 3w = {} cops, got {k}",
                3 * self.w
            )));
        }
        let sl = interval::slice_sequence(&self.rep);
        let l = sl.len();
        let left_anchor = sl.slices[0].iter().next().expect("first slice nonempty");
        let right_anchor = sl.slices[l - 1]
            .iter()
            .next()
            .expect("last slice nonempty");
        let w = self.w;
        let mut cops = vec![left_anchor; w];
        cops.extend(std::iter::repeat(right_anchor).take(w));
        cops.extend(std::iter::repeat(0).take(k - 2 * w));
        self.teams = [
            (0..w).collect(),
            (w..2 * w).collect(),
            (2 * w..k).collect(),
        ];
        self.cops = cops.clone();
        self.i1 = 0;
        self.i2 = l - 1;
        self.phase = TeamPhase::Idle;
        self.sl = Some(sl);
        Ok(cops)
    }

    fn step(&mut self, g: &Graph, cops: &[usize], robber: usize) -> Result<Vec<usize>> {
        self.check_bookkeeping(cops)?;
        let sl = self
            .sl
            .take()
            .ok_or_else(|| Error::internal("three-team policy stepped before placement"))?;
        let result = self.step_inner(g, robber, &sl);
        self.sl = Some(sl);
        result
    }
}

impl ThreeTeamCopPolicy {
    fn step_inner(&mut self, g: &Graph, robber: usize, sl: &SliceSequence) -> Result<Vec<usize>> {
        // Capture first: inside a bracket slice the robber shares a clique
        // with a hold team, so this also implements the "captured
        // immediately" moves.
        if let Some(i) = self
            .cops
            .iter()
            .position(|&c| c == robber || g.has_edge(c, robber))
        {
            self.cops[i] = robber;
            return Ok(self.cops.clone());
        }
        loop {
            match &self.phase {
                TeamPhase::Rebracket { slice } => {
                    let i3 = *slice;
                    if sl.last_slice[robber] < i3 {
                        // Robber went left; the right hold team is recycled.
                        self.i2 = i3;
                        self.teams.swap(1, 2);
                    } else if sl.first_slice[robber] > i3 {
                        self.i1 = i3;
                        self.teams.swap(0, 2);
                    } else {
                        return Err(Error::internal(
                            "three-team invariant broke: robber on the settled cut slice",
                        ));
                    }
                    self.phase = TeamPhase::Idle;
                }
                TeamPhase::Idle => {
                    if self.i2 <= self.i1 + 1 {
                        // Bracket collapsed: every free vertex lies in a held
                        // clique, capture happens via the rule above.
                        return Ok(self.cops.clone());
                    }
                    let cert =
                        interval::subgraph_wideness(g, &self.rep, sl, self.i1 + 1, self.i2 - 1);
                    let kind;
                    let mut destinations: Vec<usize>;
                    if cert.dominating_set.len() <= self.w {
                        kind = SettleKind::Dominating;
                        destinations = cert.dominating_set.iter().collect();
                    } else {
                        let cut = cert.min_cutset.ok_or_else(|| {
                            Error::internal(
                                "interior neither dominated nor cut within team size",
                            )
                        })?;
                        if cut.len() > self.w {
                            return Err(Error::internal(
                                "minimum cut slice exceeds the team size",
                            ));
                        }
                        let i3 = (self.i1 + 1..self.i2)
                            .find(|&i| sl.slices[i] == cut)
                            .ok_or_else(|| {
                                Error::internal("cut set is not a slice of the graph")
                            })?;
                        kind = SettleKind::Cut { slice: i3 };
                        destinations = cut.iter().collect();
                    }
                    destinations.sort_unstable();
                    let pending: Vec<(usize, usize)> = self.teams[2]
                        .iter()
                        .zip(destinations)
                        .map(|(&idx, t)| (idx, t))
                        .collect();
                    self.phase = TeamPhase::Settling { kind, pending };
                }
                TeamPhase::Settling { kind, pending } => {
                    let kind = *kind;
                    let pending = pending.clone();
                    let mut arrived = true;
                    for &(idx, t) in &pending {
                        if self.cops[idx] != t {
                            let dist = multi_source_distances(g, &[t]);
                            self.cops[idx] = step_toward(g, self.cops[idx], &dist);
                        }
                        if self.cops[idx] != t {
                            arrived = false;
                        }
                    }
                    if arrived {
                        if let SettleKind::Cut { slice } = kind {
                            // Robber answers this move; re-bracket next round.
                            self.phase = TeamPhase::Rebracket { slice };
                        }
                        // A settled dominating team just waits: every free
                        // vertex is now adjacent to a cop.
                    }
                    return Ok(self.cops.clone());
                }
            }
        }
    }
}

/// Lifts a winning strategy from the first factor of a Cartesian product:
/// each virtual cop at u becomes a full fiber {u} x V(G2) x ... of real
/// cops, and the virtual robber is the real robber's first coordinate.
pub struct ProductLiftCopPolicy {
    inner: Box<dyn CopPolicy>,
    factors: Vec<Graph>,
    virtual_cops: Vec<usize>,
    fibers: usize,
    name: String,
}

pub fn cop_product_lift(
    factor_strategy: Box<dyn CopPolicy>,
    factors: Vec<Graph>,
) -> ProductLiftCopPolicy {
    let name = format!("product-lift({})", factor_strategy.name());
    ProductLiftCopPolicy {
        inner: factor_strategy,
        factors,
        virtual_cops: Vec::new(),
        fibers: 0,
        name,
    }
}

impl ProductLiftCopPolicy {
    fn expand(&self) -> Vec<usize> {
        let mut real = Vec::with_capacity(self.virtual_cops.len() * self.fibers);
        for &u in &self.virtual_cops {
            real.extend(u * self.fibers..(u + 1) * self.fibers);
        }
        real
    }
}

impl CopPolicy for ProductLiftCopPolicy {
    fn name(&self) -> &str {
        &self.name
    }

    fn place(&mut self, g: &Graph, k: usize) -> Result<Vec<usize>> {
        if self.factors.is_empty() {
            return Err(Error::input("product lift needs at least one factor"));
        }
        let expected = generators::cartesian_product(self.factors.clone())?;
        if !same_graph(g, &expected) {
            return Err(Error::input(
                "graph is not the Cartesian product of the given factors",
            ));
        }
        let n1 = self.factors[0].vertex_count();
        let fibers = g.vertex_count() / n1;
        if k == 0 || k % fibers != 0 {
            return Err(Error::policy(format!(
                "product lift needs a positive multiple of n/n1 = {fibers} cops, got {k}"
            )));
        }
        let kv = k / fibers;
        let mut virt = self.inner.place(&self.factors[0], kv)?;
        virt.sort_unstable();
        if virt.len() != kv || virt.iter().any(|&u| u >= n1) {
            return Err(Error::policy(format!(
                "factor policy '{}' placed {virt:?}, expected {kv} vertices below {n1}",
                self.inner.name()
            )));
        }
        self.fibers = fibers;
        self.virtual_cops = virt;
        Ok(self.expand())
    }

    fn step(&mut self, _g: &Graph, cops: &[usize], robber: usize) -> Result<Vec<usize>> {
        let mut mine = self.expand();
        mine.sort_unstable();
        if mine != cops {
            return Err(Error::internal(
                "product lift: cop positions diverged from the virtual game",
            ));
        }
        let r1 = robber / self.fibers;
        let mut virt = self
            .inner
            .step(&self.factors[0], &self.virtual_cops, r1)?;
        virt.sort_unstable();
        if virt.iter().any(|&u| u >= self.factors[0].vertex_count())
            || !is_legal_cop_move(&self.factors[0], &self.virtual_cops, &virt)
        {
            return Err(Error::policy(format!(
                "factor policy '{}' made an illegal move {:?} -> {virt:?}",
                self.inner.name(),
                self.virtual_cops
            )));
        }
        self.virtual_cops = virt;
        Ok(self.expand())
    }
}

/// Robber policy for a k-wide subgraph H against at most k−1 cops: after
/// every cop move some vertex of H is uncontrolled, and k-connectivity
/// leaves a cop-free path to it. Picks the uncontrolled vertex farthest from
/// the nearest cop, ties by smallest id.
pub struct WideEvader {
    h: VertexSet,
    k: usize,
    limits: Limits,
}

pub fn robber_wide_evader(h: VertexSet, k: usize) -> WideEvader {
    WideEvader {
        h,
        k,
        limits: Limits::default(),
    }
}

impl WideEvader {
    fn pick(&self, g: &Graph, cops: &[usize], allowed: &VertexSet) -> Option<usize> {
        let controlled = controlled_set(g, cops);
        let cop_dist = multi_source_distances(g, cops);
        let mut best: Option<(u32, usize)> = None;
        for v in self.h.iter() {
            if controlled.contains(v) || !allowed.contains(v) {
                continue;
            }
            if best.map_or(true, |(d, _)| cop_dist[v] > d) {
                best = Some((cop_dist[v], v));
            }
        }
        best.map(|(_, v)| v)
    }
}

impl RobberPolicy for WideEvader {
    fn name(&self) -> &str {
        "wide-evader"
    }

    fn place(&mut self, g: &Graph, cops: &[usize]) -> Result<Option<usize>> {
        if !is_k_wide(g, &self.h, self.k, &self.limits)? {
            return Err(Error::policy(format!(
                "wide evader requires a {}-wide subgraph",
                self.k
            )));
        }
        if cops.len() >= self.k {
            return Err(Error::policy(format!(
                "wide evader tolerates at most k-1 = {} cops, got {}",
                self.k - 1,
                cops.len()
            )));
        }
        let all = VertexSet::from_vertices(g.vertex_count(), 0..g.vertex_count());
        match self.pick(g, cops, &all) {
            Some(v) => Ok(Some(v)),
            None => Err(Error::internal(
                "wideness guarantees an uncontrolled start vertex",
            )),
        }
    }

    fn step(&mut self, g: &Graph, cops: &[usize], robber: usize) -> Result<usize> {
        let reachable = VertexSet::from_vertices(
            g.vertex_count(),
            robber_moves(g, &GameState::new(cops.to_vec(), robber, Turn::Robber)),
        );
        self.pick(g, cops, &reachable).ok_or_else(|| {
            Error::internal("wide-evader invariant broke: no reachable uncontrolled vertex")
        })
    }
}

/// Internal path vertices (a, a+1) of the q-th length-3 path between hubs
/// i < j of the theta graph.
fn theta_path_internals(m: usize, i: usize, j: usize, q: usize) -> (usize, usize) {
    let before: usize = (0..i).map(|t| m - 1 - t).sum();
    let p = before + (j - i - 1);
    let a = m + 2 * (p * m + q);
    (a, a + 1)
}

/// Robber policy on theta_family(m) against at most m−1 cops: hold an
/// uncontrolled hub; when controlled, reroute to the smallest free hub
/// through the first cop-free parallel path.
pub struct ThetaEvader {
    m: usize,
}

pub fn robber_theta_evader(m: usize) -> ThetaEvader {
    ThetaEvader { m }
}

impl RobberPolicy for ThetaEvader {
    fn name(&self) -> &str {
        "theta-evader"
    }

    fn place(&mut self, g: &Graph, cops: &[usize]) -> Result<Option<usize>> {
        let expected = generators::theta_family(self.m)?;
        if !same_graph(g, &expected) {
            return Err(Error::input(format!(
                "graph is not the theta instance with m = {}",
                self.m
            )));
        }
        if cops.len() > self.m - 1 {
            return Err(Error::policy(format!(
                "theta evader tolerates at most m-1 = {} cops, got {}",
                self.m - 1,
                cops.len()
            )));
        }
        let controlled = controlled_set(g, cops);
        match (0..self.m).find(|&h| !controlled.contains(h)) {
            Some(h) => Ok(Some(h)),
            // Hubs are pairwise at distance 3, so each cop controls at most
            // one of them.
            None => Err(Error::internal(
                "every hub controlled by fewer cops than hubs",
            )),
        }
    }

    fn step(&mut self, g: &Graph, cops: &[usize], robber: usize) -> Result<usize> {
        if robber >= self.m {
            return Err(Error::internal(
                "theta evader invariant broke: robber left the hub set",
            ));
        }
        let controlled = controlled_set(g, cops);
        if !controlled.contains(robber) {
            return Ok(robber);
        }
        let occupied = occupied_set(g.vertex_count(), cops);
        for hub in 0..self.m {
            if hub == robber || controlled.contains(hub) {
                continue;
            }
            let (i, j) = (robber.min(hub), robber.max(hub));
            for q in 0..self.m {
                let (a, b) = theta_path_internals(self.m, i, j, q);
                if !occupied.contains(a) && !occupied.contains(b) {
                    return Ok(hub);
                }
            }
        }
        Err(Error::internal(
            "theta evader invariant broke: no free hub with a cop-free path",
        ))
    }
}

/// Recursive escape automaton for an accessible pair. Composite levels track
/// which side the robber lives on and translate the real cop multiset into
/// the side's sub-game (outside cops are parked at the side's apex); base
/// levels follow the verified fixed-point table.
enum EvaderNode {
    Base {
        g: Graph,
        v: usize,
        table: Vec<bool>,
    },
    Composite {
        /// Pair size of each side; the side sub-game tolerates k−1 cops.
        k: usize,
        a: [VertexSet; 2],
        vsets: [VertexSet; 2],
        /// local id -> side id (usize::MAX outside the side).
        down: [Vec<usize>; 2],
        /// side id -> local id (usize::MAX for the side's apex).
        up: [Vec<usize>; 2],
        sub_v: [usize; 2],
        children: [Box<EvaderNode>; 2],
        side: usize,
    },
}

fn build_evader(data: &AccessiblePairData) -> Result<EvaderNode> {
    match data.recursion.as_deref() {
        None => {
            let table = generators::restricted_escape_table(&data.graph, &data.x, data.v)
                .ok_or_else(|| {
                    Error::input("construction is not an accessible pair (no escape table)")
                })?;
            Ok(EvaderNode::Base {
                g: data.graph.clone(),
                v: data.v,
                table,
            })
        }
        Some(rec) => {
            let n = data.graph.vertex_count();
            let k = rec.left.x.len();
            if rec.right.x.len() != k || data.x.len() != 2 * k {
                return Err(Error::input(
                    "composite accessible pair has mismatched side sizes",
                ));
            }
            let (a1, a2) = data
                .side_sets()
                .ok_or_else(|| Error::internal("composite without side sets"))?;
            let up = [rec.left_map.clone(), rec.right_map.clone()];
            let mut down = [vec![usize::MAX; n], vec![usize::MAX; n]];
            let mut vsets = [VertexSet::empty(n), VertexSet::empty(n)];
            for s in 0..2 {
                for (sub, &loc) in up[s].iter().enumerate() {
                    if loc != usize::MAX {
                        down[s][loc] = sub;
                        vsets[s].insert(loc);
                    }
                }
            }
            Ok(EvaderNode::Composite {
                k,
                a: [a1, a2],
                vsets,
                down,
                up,
                sub_v: [rec.left.v, rec.right.v],
                children: [
                    Box::new(build_evader(&rec.left)?),
                    Box::new(build_evader(&rec.right)?),
                ],
                side: 0,
            })
        }
    }
}

/// Collapses the sub-game cop multiset to its single in-graph token: at most
/// one distinct position besides the apex is tolerable at a base level.
fn base_token(cops: &[usize], v: usize) -> Result<usize> {
    let mut inside = None;
    for &c in cops {
        if c != v {
            match inside {
                None => inside = Some(c),
                Some(p) if p == c => {}
                Some(_) => {
                    return Err(Error::internal(
                        "accessible invariant broke: two pursuers inside a base side",
                    ))
                }
            }
        }
    }
    Ok(inside.unwrap_or(v))
}

impl EvaderNode {
    fn map_down(
        vsets: &[VertexSet; 2],
        down: &[Vec<usize>; 2],
        sub_v: &[usize; 2],
        side: usize,
        cops: &[usize],
    ) -> Vec<usize> {
        cops.iter()
            .map(|&c| {
                if vsets[side].contains(c) {
                    down[side][c]
                } else {
                    sub_v[side]
                }
            })
            .collect()
    }

    /// Initial vertex given the cop multiset (local ids; the apex position
    /// doubles as "cop parked outside").
    fn place(&mut self, cops: &[usize]) -> Result<usize> {
        match self {
            EvaderNode::Base { g, v, table } => {
                let c = base_token(cops, *v)?;
                let n = g.vertex_count();
                (0..n)
                    .find(|&r| table[c * n + r])
                    .ok_or_else(|| Error::internal("escape table has no safe start"))
            }
            EvaderNode::Composite {
                k,
                a,
                vsets,
                down,
                sub_v,
                up,
                children,
                side,
            } => {
                let counts = [
                    cops.iter().filter(|&&c| a[0].contains(c)).count(),
                    cops.iter().filter(|&&c| a[1].contains(c)).count(),
                ];
                let pick = if counts[1] < counts[0] { 1 } else { 0 };
                if counts[pick] >= *k {
                    return Err(Error::internal(
                        "accessible invariant broke: both sides crowded at placement",
                    ));
                }
                *side = pick;
                let sub_cops = Self::map_down(vsets, down, sub_v, pick, cops);
                let r = children[pick].place(&sub_cops)?;
                Ok(up[pick][r])
            }
        }
    }

    /// Reply after a cop move (cops in local ids, robber a local id).
    fn step(&mut self, cops: &[usize], robber: usize) -> Result<usize> {
        match self {
            EvaderNode::Base { g, v, table } => {
                let c = base_token(cops, *v)?;
                let n = g.vertex_count();
                if table[c * n + robber] {
                    return Ok(robber);
                }
                let mut blocked = VertexSet::singleton(n, *v);
                blocked.insert(c);
                g.reachable_avoiding(robber, &blocked)
                    .iter()
                    .find(|&r| table[c * n + r])
                    .ok_or_else(|| {
                        Error::internal("escape table has no safe reply")
                    })
            }
            EvaderNode::Composite {
                k,
                a,
                vsets,
                down,
                sub_v,
                up,
                children,
                side,
            } => {
                let here = *side;
                let crowd = cops.iter().filter(|&&c| a[here].contains(c)).count();
                if crowd < *k {
                    let sub_cops = Self::map_down(vsets, down, sub_v, here, cops);
                    let sub_r = down[here][robber];
                    if sub_r == usize::MAX {
                        return Err(Error::internal(
                            "accessible invariant broke: robber off her side",
                        ));
                    }
                    let r = children[here].step(&sub_cops, sub_r)?;
                    return Ok(up[here][r]);
                }
                // At least k cops crowded into this side, so the other side
                // holds fewer than k and the join layers have free vertices:
                // cross over and restart there.
                let other = 1 - here;
                if cops.iter().filter(|&&c| a[other].contains(c)).count() >= *k {
                    return Err(Error::internal(
                        "accessible invariant broke: both sides crowded",
                    ));
                }
                let sub_cops = Self::map_down(vsets, down, sub_v, other, cops);
                let r = children[other].place(&sub_cops)?;
                *side = other;
                Ok(up[other][r])
            }
        }
    }
}

/// Robber policy realizing the accessible-pair escape: with at most |X|−1
/// cops she survives forever, keeps a cop-free path to X, and never stands
/// on X or the apex.
pub struct AccessibleEvader {
    data: AccessiblePairData,
    root: EvaderNode,
}

pub fn robber_accessible_evader(data: AccessiblePairData) -> Result<AccessibleEvader> {
    let root = build_evader(&data)?;
    Ok(AccessibleEvader { data, root })
}

impl RobberPolicy for AccessibleEvader {
    fn name(&self) -> &str {
        "accessible-evader"
    }

    fn place(&mut self, g: &Graph, cops: &[usize]) -> Result<Option<usize>> {
        if !same_graph(g, &self.data.graph) {
            return Err(Error::input(
                "graph does not match the accessible construction",
            ));
        }
        if cops.len() > self.data.x.len() - 1 {
            return Err(Error::policy(format!(
                "accessible evader tolerates at most |X|-1 = {} cops, got {}",
                self.data.x.len() - 1,
                cops.len()
            )));
        }
        Ok(Some(self.root.place(cops)?))
    }

    fn step(&mut self, g: &Graph, cops: &[usize], robber: usize) -> Result<usize> {
        let target = self.root.step(cops, robber)?;
        let legal = robber_moves(g, &GameState::new(cops.to_vec(), robber, Turn::Robber));
        if !legal.contains(&target) {
            return Err(Error::internal(
                "accessible-evader invariant broke: crossover target unreachable",
            ));
        }
        Ok(target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::solver::{cop_number_exact, play, solve_fixed_k, Outcome};

    fn limits() -> Limits {
        Limits::default()
    }

    fn optimal_cops(g: &Graph, k: usize) -> OptimalCopPolicy {
        OptimalCopPolicy::new(solve_fixed_k(g, k, &limits()).unwrap().data)
    }

    fn optimal_robber(g: &Graph, k: usize) -> OptimalRobberPolicy {
        OptimalRobberPolicy::new(solve_fixed_k(g, k, &limits()).unwrap().data)
    }

    fn full_set(g: &Graph) -> VertexSet {
        VertexSet::from_vertices(g.vertex_count(), 0..g.vertex_count())
    }

    #[test]
    fn wideness_examples() {
        let p3 = generators::path(3).unwrap();
        assert!(is_k_wide(&p3, &full_set(&p3), 1, &limits()).unwrap());
        assert!(is_k_wide(&p3, &VertexSet::singleton(3, 1), 1, &limits()).unwrap());
        assert!(!is_k_wide(&p3, &VertexSet::empty(3), 1, &limits()).unwrap());

        let k4 = generators::complete(4).unwrap();
        assert!(!is_k_wide(&k4, &full_set(&k4), 2, &limits()).unwrap());

        let sun = generators::three_sun();
        assert!(is_k_wide(&sun, &full_set(&sun), 2, &limits()).unwrap());

        let c6 = generators::cycle(6).unwrap();
        assert!(is_k_wide(&c6, &full_set(&c6), 2, &limits()).unwrap());
        assert!(!is_k_wide(&c6, &full_set(&c6), 3, &limits()).unwrap());

        let tiny = Limits {
            wide_check_n: 4,
            ..Limits::default()
        };
        assert!(matches!(
            is_k_wide(&c6, &full_set(&c6), 2, &tiny),
            Err(Error::Capability(_))
        ));
    }

    #[test]
    fn wide_evader_survives_optimal_cop() {
        for g in [generators::cycle(6).unwrap(), generators::three_sun()] {
            let mut cop = optimal_cops(&g, 1);
            let mut robber = robber_wide_evader(full_set(&g), 2);
            let t = play(&g, 1, &mut cop, &mut robber, 1000).unwrap();
            assert_eq!(t.outcome, Outcome::Survived { rounds: 1000 });
        }
        let (g, _) = generators::strong_product_path_clique(2).unwrap();
        let mut cop = optimal_cops(&g, 1);
        let mut robber = robber_wide_evader(full_set(&g), 2);
        let t = play(&g, 1, &mut cop, &mut robber, 300).unwrap();
        assert_eq!(t.outcome, Outcome::Survived { rounds: 300 });
    }

    #[test]
    fn wide_evader_guards() {
        let c6 = generators::cycle(6).unwrap();
        let mut too_many = robber_wide_evader(full_set(&c6), 2);
        assert!(matches!(
            too_many.place(&c6, &[0, 3]),
            Err(Error::Policy(_))
        ));

        let p3 = generators::path(3).unwrap();
        let mut not_wide = robber_wide_evader(full_set(&p3), 2);
        assert!(matches!(not_wide.place(&p3, &[0]), Err(Error::Policy(_))));
    }

    #[test]
    fn theta_evader_survives_optimal_cops() {
        let g = generators::theta_family(3).unwrap();
        let mut cop = optimal_cops(&g, 2);
        let mut robber = robber_theta_evader(3);
        let t = play(&g, 2, &mut cop, &mut robber, 1000).unwrap();
        assert_eq!(t.outcome, Outcome::Survived { rounds: 1000 });
    }

    #[test]
    fn theta_evader_survives_scripted_cops() {
        let g = generators::theta_family(4).unwrap();
        let mut robber = robber_theta_evader(4);
        let t = play(&g, 3, &mut GreedyClosestCop, &mut robber, 500).unwrap();
        assert_eq!(t.outcome, Outcome::Survived { rounds: 500 });

        let mut robber = robber_theta_evader(4);
        let mut cop = RandomCopPolicy::new(11);
        let t = play(&g, 3, &mut cop, &mut robber, 500).unwrap();
        assert_eq!(t.outcome, Outcome::Survived { rounds: 500 });
    }

    #[test]
    fn theta_evader_guards() {
        let g = generators::theta_family(3).unwrap();
        let mut e = robber_theta_evader(3);
        assert!(matches!(e.place(&g, &[0, 1, 2]), Err(Error::Policy(_))));

        let c5 = generators::cycle(5).unwrap();
        let mut e = robber_theta_evader(3);
        assert!(matches!(e.place(&c5, &[0]), Err(Error::Input(_))));
    }

    #[test]
    fn accessible_evader_base_pair() {
        let data = generators::chordal_accessible(2).unwrap();
        let g = data.graph.clone();
        let mut cop = optimal_cops(&g, 1);
        let mut robber = robber_accessible_evader(data).unwrap();
        let t = play(&g, 1, &mut cop, &mut robber, 1000).unwrap();
        assert_eq!(t.outcome, Outcome::Survived { rounds: 1000 });
    }

    #[test]
    fn accessible_evader_composite() {
        let data = generators::chordal_accessible(4).unwrap();
        let g = data.graph.clone();
        let mut cop = optimal_cops(&g, 3);
        let mut robber = robber_accessible_evader(data).unwrap();
        let t = play(&g, 3, &mut cop, &mut robber, 10_000).unwrap();
        assert_eq!(t.outcome, Outcome::Survived { rounds: 10_000 });
    }

    #[test]
    fn accessible_evader_guards() {
        let data = generators::chordal_accessible(4).unwrap();
        let g = data.graph.clone();
        let mut e = robber_accessible_evader(data).unwrap();
        assert!(matches!(
            e.place(&g, &[0, 1, 2, 3]),
            Err(Error::Policy(_))
        ));

        let data = generators::chordal_accessible(2).unwrap();
        let p4 = generators::path(4).unwrap();
        let mut e = robber_accessible_evader(data).unwrap();
        assert!(matches!(e.place(&p4, &[0]), Err(Error::Input(_))));
    }

    fn path_decomposition(n: usize) -> TreeDecomposition {
        let bags: Vec<VertexSet> = (0..n - 1)
            .map(|i| VertexSet::from_vertices(n, [i, i + 1]))
            .collect();
        let tree = Graph::from_edges(n - 1, (0..n - 2).map(|i| (i, i + 1))).unwrap();
        TreeDecomposition::new(tree, bags).unwrap()
    }

    #[test]
    fn sweep_captures_on_path() {
        let g = generators::path(5).unwrap();
        let mut cop = cop_sweep_decomposition(path_decomposition(5));
        let mut robber = optimal_robber(&g, 2);
        let t = play(&g, 2, &mut cop, &mut robber, 20).unwrap();
        assert!(matches!(t.outcome, Outcome::Capture { .. }), "{t:?}");
    }

    #[test]
    fn sweep_captures_single_bag() {
        let g = generators::complete(4).unwrap();
        let td = TreeDecomposition::new(
            Graph::from_edges(1, []).unwrap(),
            vec![VertexSet::from_vertices(4, 0..4)],
        )
        .unwrap();
        let mut cop = cop_sweep_decomposition(td);
        let mut robber = optimal_robber(&g, 4);
        let t = play(&g, 4, &mut cop, &mut robber, 10).unwrap();
        match t.outcome {
            Outcome::Capture { round } => assert!(round <= 1),
            other => panic!("expected capture, got {other:?}"),
        }
    }

    #[test]
    fn sweep_captures_on_theta_star() {
        let g = generators::theta_family(3).unwrap();
        let td = generators::theta_star_decomposition(3).unwrap();
        assert_eq!(td.width(), 3);
        let mut cop = cop_sweep_decomposition(td);
        let mut robber = optimal_robber(&g, 4);
        let t = play(&g, 4, &mut cop, &mut robber, 2000).unwrap();
        assert!(matches!(t.outcome, Outcome::Capture { .. }));
    }

    #[test]
    fn sweep_guards() {
        let g = generators::path(5).unwrap();
        let mut cop = cop_sweep_decomposition(path_decomposition(5));
        assert!(matches!(cop.place(&g, 1), Err(Error::Policy(_))));

        let c5 = generators::cycle(5).unwrap();
        let mut cop = cop_sweep_decomposition(path_decomposition(5));
        assert!(matches!(cop.place(&c5, 2), Err(Error::Input(_))));
    }

    fn k3_rep() -> (Graph, IntervalRepresentation) {
        let g = generators::complete(3).unwrap();
        let rep = IntervalRepresentation::new(&g, vec![(0, 3), (1, 4), (2, 5)]).unwrap();
        (g, rep)
    }

    fn p5_rep() -> (Graph, IntervalRepresentation) {
        let g = generators::path(5).unwrap();
        let ticks: Vec<(i64, i64)> = (0..5).map(|i| (8 * i, 8 * i + 10)).collect();
        (g.clone(), IntervalRepresentation::new(&g, ticks).unwrap())
    }

    #[test]
    fn three_team_captures_quickly_on_k3() {
        let (g, rep) = k3_rep();
        let mut cop = cop_interval_three_team(rep, 1);
        let mut robber = optimal_robber(&g, 3);
        let t = play(&g, 3, &mut cop, &mut robber, 10).unwrap();
        match t.outcome {
            Outcome::Capture { round } => assert!(round <= 2, "took {round} rounds"),
            other => panic!("expected capture, got {other:?}"),
        }
    }

    #[test]
    fn three_team_captures_on_path() {
        let (g, rep) = p5_rep();
        let mut cop = cop_interval_three_team(rep, 1);
        let mut robber = optimal_robber(&g, 3);
        let t = play(&g, 3, &mut cop, &mut robber, 200).unwrap();
        assert!(matches!(t.outcome, Outcome::Capture { .. }), "{t:?}");
    }

    #[test]
    fn three_team_captures_on_strong_product() {
        let (g, rep) = generators::strong_product_path_clique(2).unwrap();
        let mut cop = cop_interval_three_team(rep, 2);
        let mut robber = optimal_robber(&g, 6);
        let t = play(&g, 6, &mut cop, &mut robber, 1000).unwrap();
        assert!(matches!(t.outcome, Outcome::Capture { .. }));
    }

    #[test]
    fn three_team_guards() {
        let (g, rep) = p5_rep();
        let mut cop = cop_interval_three_team(rep.clone(), 1);
        assert!(matches!(cop.place(&g, 2), Err(Error::Policy(_))));

        let mut cop = cop_interval_three_team(rep, 2);
        assert!(matches!(cop.place(&g, 6), Err(Error::Input(_))));
    }

    #[test]
    fn product_lift_captures() {
        let k2 = generators::complete(2).unwrap();
        let k3 = generators::complete(3).unwrap();
        let cases: Vec<(Vec<Graph>, usize)> = vec![
            (vec![k2.clone(), k2.clone()], 2),
            (vec![k3.clone(), k3.clone()], 3),
            (vec![k2.clone(), k2.clone(), k2.clone()], 4),
        ];
        for (factors, k) in cases {
            let g = generators::cartesian_product(factors.clone()).unwrap();
            let mut cop = cop_product_lift(Box::new(GreedyClosestCop), factors);
            let mut robber = optimal_robber(&g, k);
            let t = play(&g, k, &mut cop, &mut robber, 100).unwrap();
            assert!(
                matches!(t.outcome, Outcome::Capture { .. }),
                "no capture with {k} lifted cops"
            );
            // The observed capture certifies the product upper bound.
            let exact = cop_number_exact(&g, &limits()).unwrap().cop_number;
            assert!(exact <= k);
        }
    }

    #[test]
    fn product_lift_guards() {
        let k2 = generators::complete(2).unwrap();
        let p4 = generators::path(4).unwrap();
        let mut cop = cop_product_lift(Box::new(GreedyClosestCop), vec![k2.clone(), k2.clone()]);
        assert!(matches!(cop.place(&p4, 2), Err(Error::Input(_))));

        let g = generators::cartesian_product(vec![k2.clone(), k2.clone()]).unwrap();
        let mut cop = cop_product_lift(Box::new(GreedyClosestCop), vec![k2.clone(), k2]);
        assert!(matches!(cop.place(&g, 3), Err(Error::Policy(_))));
    }

    #[test]
    fn greedy_cop_captures_on_trees() {
        let g = generators::path(6).unwrap();
        let mut robber = optimal_robber(&g, 1);
        let t = play(&g, 1, &mut GreedyClosestCop, &mut robber, 50).unwrap();
        assert!(matches!(t.outcome, Outcome::Capture { .. }));
    }

    #[test]
    fn domination_cop_captures_in_one_round() {
        let g = generators::complete(3).unwrap();
        let mut robber = optimal_robber(&g, 1);
        let t = play(&g, 1, &mut cop_domination(Limits::default()), &mut robber, 10).unwrap();
        assert_eq!(t.outcome, Outcome::Capture { round: 1 });

        let q3 = generators::hypercube(3).unwrap();
        let mut robber = optimal_robber(&q3, 2);
        let t = play(&q3, 2, &mut cop_domination(Limits::default()), &mut robber, 10).unwrap();
        assert!(matches!(t.outcome, Outcome::Capture { round } if round <= 1));

        // One cop cannot sit on a dominating set of the 4-cycle.
        let c4 = generators::cycle(4).unwrap();
        let mut robber = optimal_robber(&c4, 1);
        let err = play(&c4, 1, &mut cop_domination(Limits::default()), &mut robber, 10);
        assert!(matches!(err, Err(Error::Policy(_))));
    }

    #[test]
    fn random_policies_play_legally() {
        let g = generators::cycle(5).unwrap();
        let mut cop = RandomCopPolicy::new(3);
        let mut robber = RandomRobberPolicy::new(4);
        // The arena validates every move, so Ok(_) means all were legal.
        play(&g, 1, &mut cop, &mut robber, 200).unwrap();
    }

    #[test]
    fn transcripts_are_deterministic() {
        let run = || {
            let (g, rep) = generators::strong_product_path_clique(2).unwrap();
            let mut cop = cop_interval_three_team(rep, 2);
            let mut robber = RandomRobberPolicy::new(7);
            play(&g, 6, &mut cop, &mut robber, 500).unwrap().to_text()
        };
        assert_eq!(run(), run());
    }
}
