//! Acceptance suites. Every claim the library rests on is re-derived here
//! end to end — solver oracles against closed-form values, structure lemmas
//! against exhaustive enumeration, strategies against the arena — and each
//! check reports one pass/fail line with the measured numbers.

use std::collections::{BTreeSet, HashSet};
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;

use crate::bounds;
use crate::config::Limits;
use crate::decomposition::treewidth_exact;
use crate::error::{Error, Result};
use crate::generators::{
    self, chordal_accessible, complete, complete_bipartite, cycle, grid, hypercube,
    hypercube_dominating_set, path, strong_product_path_clique, theta_family,
    theta_star_decomposition, ProductSpec,
};
use crate::graph::Graph;
use crate::helicopter::helicopter_min_cops;
use crate::interval::{
    self, compute_w, domination_greedy_interval, minimal_cutset_slices,
    random_connected_interval, slice_sequence, sqrt_bound_check,
};
use crate::solver::{cop_number_exact, play, solve_fixed_k, Outcome};
use crate::strategies::{
    cop_product_lift, robber_theta_evader, GreedyClosestCop, OptimalCopPolicy,
    OptimalRobberPolicy, RandomCopPolicy,
};

/// Result of one acceptance check.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    /// Deterministic for a fixed build: counts and values, never timings.
    pub detail: String,
    pub elapsed: std::time::Duration,
}

impl CheckReport {
    pub fn line(&self) -> String {
        format!(
            "{} {}: {} [{:.1?}]",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.detail,
            self.elapsed
        )
    }
}

fn report(
    name: &'static str,
    violations: &[String],
    detail: String,
    elapsed: std::time::Duration,
) -> CheckReport {
    if violations.is_empty() {
        CheckReport {
            name,
            passed: true,
            detail,
            elapsed,
        }
    } else {
        CheckReport {
            name,
            passed: false,
            detail: format!("{detail}; first failure: {}", violations[0]),
            elapsed,
        }
    }
}

// ---------------------------------------------------------------------------
// Corpus: every connected graph up to 7 vertices, one per isomorphism class,
// plus a handful of named instances on 8 and 9 vertices.

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    out
}

// Edge (i, j), i < j, lives at bit i*n + j of the mask.
fn canonical_mask(mask: u64, n: usize, perms: &[Vec<usize>]) -> u64 {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| mask >> (i * n + j) & 1 == 1)
        .collect();
    let mut best = u64::MAX;
    for p in perms {
        let mut m = 0u64;
        for &(i, j) in &edges {
            let (a, b) = (p[i].min(p[j]), p[i].max(p[j]));
            m |= 1 << (a * n + b);
        }
        best = best.min(m);
    }
    best
}

/// One canonical mask per isomorphism class of graphs (connected or not)
/// on exactly `n` vertices, grown by vertex augmentation from level n−1.
fn graph_classes() -> &'static Vec<Vec<u64>> {
    static CLASSES: OnceLock<Vec<Vec<u64>>> = OnceLock::new();
    CLASSES.get_or_init(|| {
        let mut levels: Vec<Vec<u64>> = vec![vec![], vec![0]];
        for n in 2..=7usize {
            let perms = permutations(n);
            let mut seen: BTreeSet<u64> = BTreeSet::new();
            for &prev in &levels[n - 1] {
                // Re-index the (n−1)-vertex mask into the n-vertex layout.
                let mut base = 0u64;
                for i in 0..n - 1 {
                    for j in i + 1..n - 1 {
                        if prev >> (i * (n - 1) + j) & 1 == 1 {
                            base |= 1 << (i * n + j);
                        }
                    }
                }
                for s in 0u64..1 << (n - 1) {
                    let mut mask = base;
                    for i in 0..n - 1 {
                        if s >> i & 1 == 1 {
                            mask |= 1 << (i * n + (n - 1));
                        }
                    }
                    seen.insert(canonical_mask(mask, n, &perms));
                }
            }
            levels.push(seen.into_iter().collect());
        }
        levels
    })
}

fn mask_to_graph(mask: u64, n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| mask >> (i * n + j) & 1 == 1)
        .collect();
    Graph::from_edges(n, edges).expect("corpus masks are simple graphs")
}

/// All connected graphs with 1..=max_n vertices, one per isomorphism class,
/// in a fixed deterministic order. Supported up to max_n = 7.
pub fn connected_corpus(max_n: usize) -> Vec<Graph> {
    assert!(max_n <= 7, "corpus enumeration is sized for n <= 7");
    let levels = graph_classes();
    let mut out = Vec::new();
    for n in 1..=max_n {
        for &mask in &levels[n] {
            let g = mask_to_graph(mask, n);
            if g.is_connected() {
                out.push(g);
            }
        }
    }
    out
}

/// Named instances on 8 and 9 vertices that extend the exhaustive corpus.
pub fn named_instances() -> Vec<(&'static str, Graph)> {
    vec![
        ("P8", path(8).unwrap()),
        ("P9", path(9).unwrap()),
        ("C8", cycle(8).unwrap()),
        ("C9", cycle(9).unwrap()),
        ("K8", complete(8).unwrap()),
        ("K9", complete(9).unwrap()),
        ("K4,4", complete_bipartite(4, 4).unwrap()),
        ("K4,5", complete_bipartite(4, 5).unwrap()),
        ("star9", complete_bipartite(1, 8).unwrap()),
        ("Q3", hypercube(3).unwrap()),
        ("grid3", grid(3).unwrap()),
    ]
}

// ---------------------------------------------------------------------------
// Tree enumeration for the solver sanity check: labeled trees via sequence
// decoding, deduplicated by a canonical encoding rooted at the centroid.

fn sequence_tree(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    debug_assert_eq!(seq.len(), n - 2);
    let mut deg = vec![1usize; n];
    for &x in seq {
        deg[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&i| deg[i] == 1).unwrap();
        edges.push((leaf.min(x), leaf.max(x)));
        deg[leaf] = 0;
        deg[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&i| deg[i] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn tree_encoding(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    // Peel leaves to find the one or two centers.
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &u in &adj[v] {
                if !removed[u] {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    fn encode(v: usize, parent: usize, adj: &[Vec<usize>]) -> String {
        let mut subs: Vec<String> = adj[v]
            .iter()
            .filter(|&&u| u != parent)
            .map(|&u| encode(u, v, adj))
            .collect();
        subs.sort();
        format!("({})", subs.concat())
    }
    let centers: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    centers
        .iter()
        .map(|&c| encode(c, usize::MAX, &adj))
        .min()
        .unwrap()
}

fn all_trees(n: usize) -> Vec<Graph> {
    if n == 1 {
        return vec![Graph::from_edges(1, []).unwrap()];
    }
    if n == 2 {
        return vec![path(2).unwrap()];
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let total = (n as u64).pow(n as u32 - 2);
    let mut seq = vec![0usize; n - 2];
    for code in 0..total {
        let mut c = code;
        for s in seq.iter_mut() {
            *s = (c % n as u64) as usize;
            c /= n as u64;
        }
        let edges = sequence_tree(n, &seq);
        if seen.insert(tree_encoding(n, &edges)) {
            out.push(Graph::from_edges(n, edges).unwrap());
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Individual checks, one per acceptance criterion.

/// Closed-form cop counts reproduced by the exact solver: complete graphs
/// and trees need one cop, cycles need two.
pub fn check_solver_sanity(limits: &Limits) -> Result<CheckReport> {
    let start = Instant::now();
    let mut violations = Vec::new();
    let mut cases = 0usize;
    for n in 1..=6 {
        cases += 1;
        let c = cop_number_exact(&complete(n)?, limits)?.cop_number;
        if c != 1 {
            violations.push(format!("K{n} solved to {c}, expected 1"));
        }
    }
    let mut tree_count = 0usize;
    for n in 1..=8 {
        for t in all_trees(n) {
            cases += 1;
            tree_count += 1;
            let c = cop_number_exact(&t, limits)?.cop_number;
            if c != 1 {
                violations.push(format!("a tree on {n} vertices solved to {c}, expected 1"));
            }
        }
    }
    for n in 4..=8 {
        cases += 1;
        let c = cop_number_exact(&cycle(n)?, limits)?.cop_number;
        if c != 2 {
            violations.push(format!("C{n} solved to {c}, expected 2"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 5.0 {
        violations.push(format!("took {elapsed:.1?}, budget is 5s"));
    }
    Ok(report(
        "solver-sanity",
        &violations,
        format!("{cases} oracle cases ({tree_count} trees)"),
        elapsed,
    ))
}

/// ⌈(tw+1)/(Δ+1)⌉ ≤ c ≤ tw+1 on the full corpus, both sides exact.
pub fn check_treewidth_sandwich(limits: &Limits) -> Result<CheckReport> {
    let start = Instant::now();
    let mut graphs: Vec<(String, Graph)> = connected_corpus(7)
        .into_iter()
        .enumerate()
        .map(|(i, g)| (format!("corpus[{i}]"), g))
        .collect();
    graphs.extend(
        named_instances()
            .into_iter()
            .map(|(name, g)| (name.to_string(), g)),
    );
    let results: Vec<Option<String>> = graphs
        .par_iter()
        .map(|(name, g)| {
            let run = || -> Result<Option<String>> {
                let (tw, _) = treewidth_exact(g, limits.treewidth_n)?;
                let c = cop_number_exact(g, limits)?.cop_number;
                let lo = (tw + 1).div_ceil(g.max_degree() + 1);
                Ok(if lo <= c && c <= tw + 1 {
                    None
                } else {
                    Some(format!("{name}: lo={lo}, c={c}, tw+1={}", tw + 1))
                })
            };
            run().unwrap_or_else(|e| Some(format!("{name}: {e}")))
        })
        .collect();
    let violations: Vec<String> = results.into_iter().flatten().collect();
    let elapsed = start.elapsed();
    let mut violations = violations;
    if elapsed.as_secs_f64() >= 600.0 {
        violations.push(format!("took {elapsed:.1?}, budget is 600s"));
    }
    Ok(report(
        "treewidth-sandwich",
        &violations,
        format!("{} graphs, 0 exclusions", graphs.len()),
        elapsed,
    ))
}

/// Both sides of the sandwich are attained: complete graphs sit on the
/// degree lower bound with one cop, and the theta family meets tw+1 —
/// exactly at m = 3, and at m = 4 through the solver refutation of three
/// cops plus the width-3 star decomposition.
pub fn check_tightness(limits: &Limits) -> Result<CheckReport> {
    let start = Instant::now();
    let mut violations = Vec::new();

    for n in 2..=6 {
        let g = complete(n)?;
        let c = cop_number_exact(&g, limits)?.cop_number;
        let (tw, _) = treewidth_exact(&g, limits.treewidth_n)?;
        let lo = (tw + 1).div_ceil(g.max_degree() + 1);
        if c != 1 || tw != n - 1 || lo != 1 {
            violations.push(format!("K{n}: c={c}, tw={tw}, lower={lo}"));
        }
    }

    let t3 = theta_family(3)?;
    let mut wide = limits.clone();
    wide.treewidth_n = wide.treewidth_n.max(t3.vertex_count());
    let c3 = cop_number_exact(&t3, limits)?.cop_number;
    let (tw3, _) = treewidth_exact(&t3, wide.treewidth_n)?;
    if c3 != 3 || c3 != tw3 + 1 {
        violations.push(format!("theta(3): c={c3}, tw={tw3}, expected c = tw+1 = 3"));
    }

    let t4 = theta_family(4)?;
    let refuted = solve_fixed_k(&t4, 3, limits)?;
    if refuted.cops_win {
        violations.push("theta(4): solver claims three cops win".into());
    }
    let td = theta_star_decomposition(4)?;
    if !td.is_valid_for(&t4) || td.width() != 3 {
        violations.push(format!(
            "theta(4): star decomposition width {} (valid: {})",
            td.width(),
            td.is_valid_for(&t4)
        ));
    }

    // Policy evidence at m = 4: the evader outlasts solver-scripted and
    // heuristic cop trios for 10^4 rounds.
    let rounds = 10_000u32;
    let opponents: Vec<(&str, Box<dyn crate::solver::CopPolicy>)> = vec![
        ("optimal", Box::new(OptimalCopPolicy::new(refuted.data.clone()))),
        ("greedy", Box::new(GreedyClosestCop)),
        ("random", Box::new(RandomCopPolicy::new(17))),
    ];
    for (label, mut cops) in opponents {
        let mut evader = robber_theta_evader(4);
        let t = play(&t4, 3, cops.as_mut(), &mut evader, rounds)?;
        if t.outcome != (Outcome::Survived { rounds }) {
            violations.push(format!("theta(4) evader lost to {label}: {:?}", t.outcome));
        }
    }

    Ok(report(
        "tightness-witnesses",
        &violations,
        format!(
            "K2..K6 lower-tight; theta(3) c=3=tw+1; theta(4) three cops refuted, \
             evader survived 3x{rounds} rounds"
        ),
        start.elapsed(),
    ))
}

fn interval_corpus(max_n: usize, seeds: &[u64]) -> Result<Vec<(String, Graph, interval::IntervalRepresentation)>> {
    let mut out = Vec::new();
    for m in 1..=3usize {
        let (g, rep) = strong_product_path_clique(m)?;
        if g.vertex_count() <= max_n {
            out.push((format!("P{}xK{m}", 3 * m), g, rep));
        }
    }
    for n in 4..=max_n {
        for &seed in seeds {
            let (g, rep) = random_connected_interval(n, seed)?;
            out.push((format!("rand(n={n},seed={seed})"), g, rep));
        }
    }
    Ok(out)
}

/// w ≤ c ≤ 3w on interval graphs, with the strong-product witness pinned.
pub fn check_interval_approximation(limits: &Limits) -> Result<CheckReport> {
    let start = Instant::now();
    let mut violations = Vec::new();
    let mut count = 0usize;

    let mut corpus = interval_corpus(12, &[1, 2, 3])?;
    let (g3, rep3) = strong_product_path_clique(3)?;
    corpus.push(("P9xK3".into(), g3, rep3));
    for (name, g, rep) in &corpus {
        count += 1;
        let (w, _) = compute_w(g, rep)?;
        let c = cop_number_exact(g, limits)?.cop_number;
        if !(w <= c && c <= 3 * w) {
            violations.push(format!("{name}: w={w}, c={c}"));
        }
    }

    let (g2, rep2) = strong_product_path_clique(2)?;
    let (w2, _) = compute_w(&g2, &rep2)?;
    let c2 = cop_number_exact(&g2, limits)?.cop_number;
    if w2 != 2 || c2 != 2 {
        violations.push(format!("P6xK2: w={w2}, c={c2}, expected both 2"));
    }

    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 300.0 {
        violations.push(format!("took {elapsed:.1?}, budget is 300s"));
    }
    Ok(report(
        "interval-approximation",
        &violations,
        format!("{count} interval graphs, P6xK2 pinned at w=c=2"),
        elapsed,
    ))
}

fn separates(g: &Graph, removed: u64) -> bool {
    let n = g.vertex_count();
    let alive: Vec<usize> = (0..n).filter(|&v| removed >> v & 1 == 0).collect();
    if alive.len() < 2 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![alive[0]];
    seen[alive[0]] = true;
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for u in g.neighbors(v).iter() {
            if removed >> u & 1 == 0 && !seen[u] {
                seen[u] = true;
                reached += 1;
                stack.push(u);
            }
        }
    }
    reached < alive.len()
}

fn exhaustive_minimal_cutsets(g: &Graph) -> BTreeSet<Vec<usize>> {
    let n = g.vertex_count();
    let cutsets: HashSet<u64> = (1u64..1 << n)
        .filter(|&mask| separates(g, mask))
        .collect();
    let mut out = BTreeSet::new();
    'outer: for &s in &cutsets {
        // Walk all proper nonempty subsets of s.
        let mut t = (s - 1) & s;
        while t != 0 {
            if cutsets.contains(&t) {
                continue 'outer;
            }
            t = (t - 1) & s;
        }
        out.insert((0..n).filter(|&v| s >> v & 1 == 1).collect());
    }
    out
}

/// Slice-structure lemmas against exhaustive enumeration: minimal cutsets
/// are exactly the minimal cut slices, the ends-first greedy matches the
/// exact domination number, and minimum dominating sets have bounded
/// internal adjacency (≤ 2 inside, ≤ 5 from outside).
pub fn check_interval_structure(limits: &Limits) -> Result<CheckReport> {
    let start = Instant::now();
    let mut violations = Vec::new();
    let mut cut_cases = 0usize;
    let mut dom_cases = 0usize;
    let mut structure_sets = 0usize;

    for n in 4..=12 {
        for seed in [1, 2] {
            let (g, rep) = random_connected_interval(n, seed)?;
            let sl = slice_sequence(&rep);
            cut_cases += 1;
            let got: BTreeSet<Vec<usize>> = minimal_cutset_slices(&g, &sl)
                .into_iter()
                .map(|i| sl.slices[i].iter().collect())
                .collect();
            let want = exhaustive_minimal_cutsets(&g);
            if got != want {
                violations.push(format!(
                    "cutsets n={n} seed={seed}: slices gave {got:?}, exhaustive {want:?}"
                ));
            }

            for a in g.all_minimum_dominating_sets(limits.domination_n)? {
                structure_sets += 1;
                for v in 0..g.vertex_count() {
                    let in_a = g.neighbors(v).intersection(&a).len();
                    let cap = if a.contains(v) { 2 } else { 5 };
                    if in_a > cap {
                        violations.push(format!(
                            "structure n={n} seed={seed}: vertex {v} sees {in_a} of {a:?}"
                        ));
                    }
                }
            }
        }
    }

    for n in 4..=14 {
        for seed in [1, 2] {
            let (g, rep) = random_connected_interval(n, seed)?;
            let sl = slice_sequence(&rep);
            dom_cases += 1;
            let greedy = domination_greedy_interval(&g, (0, sl.slices.len() - 1), &sl);
            let (gamma, _) = g.domination_number_exact(limits.domination_n)?;
            if !g.is_dominating(&greedy) || greedy.len() != gamma {
                violations.push(format!(
                    "greedy n={n} seed={seed}: got {} vertices, gamma={gamma}",
                    greedy.len()
                ));
            }
        }
    }

    Ok(report(
        "interval-structure",
        &violations,
        format!(
            "{cut_cases} cutset comparisons, {dom_cases} greedy matches, \
             {structure_sets} minimum dominating sets bounded"
        ),
        start.elapsed(),
    ))
}

/// The accessible-pair family: sizes from the recurrence, chordality, and
/// the solver refuting three cops at level 4.
pub fn check_chordal_lower_bound(limits: &Limits) -> Result<CheckReport> {
    let start = Instant::now();
    let mut violations = Vec::new();

    // Construction self-verifies the accessible pair (gfp on the base,
    // structural induction above), so a successful build is the certificate.
    let base = chordal_accessible(2)?;
    if base.graph.vertex_count() != 7 {
        violations.push(format!(
            "level 2 has {} vertices, expected 7",
            base.graph.vertex_count()
        ));
    }
    if !base.graph.is_chordal().0 {
        violations.push("level 2 graph is not chordal".into());
    }
    if base.graph.neighbors(base.v) != &base.x {
        violations.push("level 2 apex neighborhood differs from X".into());
    }

    let big = chordal_accessible(4)?;
    if big.graph.vertex_count() != 25 {
        violations.push(format!(
            "level 4 has {} vertices, expected 25",
            big.graph.vertex_count()
        ));
    }
    if !big.graph.is_chordal().0 {
        violations.push("level 4 graph is not chordal".into());
    }
    let refuted = solve_fixed_k(&big.graph, 3, limits)?;
    if refuted.cops_win {
        violations.push("solver claims three cops win on level 4".into());
    }

    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 120.0 {
        violations.push(format!("took {elapsed:.1?}, budget is 120s"));
    }
    Ok(report(
        "chordal-lower-bound",
        &violations,
        "levels 2 (n=7) and 4 (n=25) verified, three cops refuted".to_string(),
        elapsed,
    ))
}

/// The teleporting-cops count equals tw+1 on every small corpus graph, and
/// never exceeds (Δ+1) times the walking-cops count.
pub fn check_helicopter_identity(limits: &Limits) -> Result<CheckReport> {
    let start = Instant::now();
    let mut graphs: Vec<(String, Graph)> = connected_corpus(7)
        .into_iter()
        .enumerate()
        .map(|(i, g)| (format!("corpus[{i}]"), g))
        .collect();
    graphs.extend(
        named_instances()
            .into_iter()
            .filter(|(_, g)| g.vertex_count() <= 8)
            .map(|(name, g)| (name.to_string(), g)),
    );
    let results: Vec<Option<String>> = graphs
        .par_iter()
        .map(|(name, g)| {
            let run = || -> Result<Option<String>> {
                let heli = helicopter_min_cops(g, limits)?;
                let (tw, _) = treewidth_exact(g, limits.treewidth_n)?;
                let c = cop_number_exact(g, limits)?.cop_number;
                if heli != tw + 1 {
                    return Ok(Some(format!("{name}: heli={heli}, tw+1={}", tw + 1)));
                }
                if heli > (g.max_degree() + 1) * c {
                    return Ok(Some(format!(
                        "{name}: heli={heli} exceeds (Δ+1)c={}",
                        (g.max_degree() + 1) * c
                    )));
                }
                Ok(None)
            };
            run().unwrap_or_else(|e| Some(format!("{name}: {e}")))
        })
        .collect();
    let violations: Vec<String> = results.into_iter().flatten().collect();
    Ok(report(
        "helicopter-identity",
        &violations,
        format!("{} graphs, identity and link both hold", graphs.len()),
        start.elapsed(),
    ))
}

fn contract_edge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    // Merge v into u, then close the id gap left by v.
    let n = g.vertex_count();
    let compact = |x: usize| if x > v { x - 1 } else { x };
    let mut edges = BTreeSet::new();
    for a in 0..n {
        for b in g.neighbors(a).iter().filter(|&b| b > a) {
            let (x, y) = (if a == v { u } else { a }, if b == v { u } else { b });
            if x != y {
                edges.insert((compact(x.min(y)), compact(x.max(y))));
            }
        }
    }
    Graph::from_edges(n - 1, edges)
}

/// Contracting any edge never increases the cop count (n ≤ 7, all edges).
pub fn check_contraction_monotonicity(limits: &Limits) -> Result<CheckReport> {
    let start = Instant::now();
    let corpus = connected_corpus(7);
    let results: Vec<std::result::Result<usize, String>> = corpus
        .par_iter()
        .enumerate()
        .map(|(idx, g)| {
            let run = || -> Result<std::result::Result<usize, String>> {
                let c = cop_number_exact(g, limits)?.cop_number;
                let mut edges_checked = 0;
                for u in 0..g.vertex_count() {
                    for v in g.neighbors(u).iter().filter(|&v| v > u) {
                        edges_checked += 1;
                        let contracted = contract_edge(g, u, v)?;
                        let cc = cop_number_exact(&contracted, limits)?.cop_number;
                        if cc > c {
                            return Ok(Err(format!(
                                "corpus[{idx}] edge ({u},{v}): {cc} > {c}"
                            )));
                        }
                    }
                }
                Ok(Ok(edges_checked))
            };
            run().unwrap_or_else(|e| Err(format!("corpus[{idx}]: {e}")))
        })
        .collect();
    let mut violations = Vec::new();
    let mut contractions = 0usize;
    for r in results {
        match r {
            Ok(count) => contractions += count,
            Err(v) => violations.push(v),
        }
    }
    Ok(report(
        "contraction-monotonicity",
        &violations,
        format!("{} graphs, {contractions} contractions", corpus.len()),
        start.elapsed(),
    ))
}

/// Finite hypercube instantiation: code-based dominating sets of sizes 2,
/// 4, 16 within the 2^{m+1}/(m+1) budget, and the 3- and 4-cube cop counts.
pub fn check_hypercube_bounds(limits: &Limits) -> Result<CheckReport> {
    let start = Instant::now();
    let mut violations = Vec::new();

    for (m, expected) in [(3usize, 2usize), (4, 4), (7, 16)] {
        let q = hypercube(m)?;
        let d = hypercube_dominating_set(m)?;
        if d.len() != expected {
            violations.push(format!("m={m}: set size {}, expected {expected}", d.len()));
        }
        if !q.is_dominating(&d) {
            violations.push(format!("m={m}: set does not dominate"));
        }
        if d.len() * (m + 1) > 1 << (m + 1) {
            violations.push(format!("m={m}: size exceeds 2^(m+1)/(m+1)"));
        }
    }

    let q3 = hypercube(3)?;
    let c3 = cop_number_exact(&q3, limits)?.cop_number;
    if c3 != 2 {
        violations.push(format!("Q3 solved to {c3}, expected 2"));
    }
    let q4 = hypercube(4)?;
    let (gamma4, _) = q4.domination_number_exact(limits.domination_n)?;
    if gamma4 != 4 {
        violations.push(format!("Q4 domination number {gamma4}, expected 4"));
    }
    if solve_fixed_k(&q4, 1, limits)?.cops_win {
        violations.push("one cop claimed to win on Q4".into());
    }

    Ok(report(
        "hypercube-bounds",
        &violations,
        "sets 2/4/16 dominate at m=3/4/7; c(Q3)=2, 2 <= c(Q4) <= 4".to_string(),
        start.elapsed(),
    ))
}

/// The fiber-lifted strategy captures in the arena with n·c1/n1 cops, and
/// that count upper-bounds the solved value.
pub fn check_product_bound(limits: &Limits) -> Result<CheckReport> {
    let start = Instant::now();
    let mut violations = Vec::new();
    let mut details = Vec::new();

    let cases: Vec<(&str, Vec<Graph>)> = vec![
        ("K2xK2", vec![complete(2)?, complete(2)?]),
        ("K3xK3", vec![complete(3)?, complete(3)?]),
        ("Q3", vec![complete(2)?, complete(2)?, complete(2)?]),
    ];
    for (name, factors) in cases {
        let spec = ProductSpec::cartesian(factors.clone());
        let g = generators::product(&spec)?;
        let c1 = cop_number_exact(&spec.factors[0], limits)?.cop_number;
        let k = bounds::upper_bound_product(&spec, c1)?;

        let inner = solve_fixed_k(&spec.factors[0], c1, limits)?;
        let mut cops = cop_product_lift(
            Box::new(OptimalCopPolicy::new(inner.data.clone())),
            factors,
        );
        let product_solve = solve_fixed_k(&g, k, limits)?;
        let mut robber = OptimalRobberPolicy::new(product_solve.data.clone());
        let t = play(&g, k, &mut cops, &mut robber, 500)?;
        match t.outcome {
            Outcome::Capture { round } => details.push(format!("{name}: {k} cops, round {round}")),
            other => violations.push(format!("{name}: lifted cops failed to capture: {other:?}")),
        }

        let c = cop_number_exact(&g, limits)?.cop_number;
        if c > k {
            violations.push(format!("{name}: solved {c} exceeds lifted bound {k}"));
        }
    }

    Ok(report(
        "product-bound",
        &violations,
        details.join("; "),
        start.elapsed(),
    ))
}

/// Wideness stays below √(5n)+3 across the interval corpus up to n = 30.
pub fn check_wideness_growth(_limits: &Limits) -> Result<CheckReport> {
    let start = Instant::now();
    let mut violations = Vec::new();
    let mut count = 0usize;
    let mut max_w = 0usize;

    let mut corpus = Vec::new();
    for m in 1..=3usize {
        let (g, rep) = strong_product_path_clique(m)?;
        corpus.push((format!("P{}xK{m}", 3 * m), g, rep));
    }
    for n in [6, 12, 18, 24, 30] {
        for seed in [1, 2, 3] {
            let (g, rep) = random_connected_interval(n, seed)?;
            corpus.push((format!("rand(n={n},seed={seed})"), g, rep));
        }
    }
    for (name, g, rep) in &corpus {
        count += 1;
        let (w, _) = compute_w(g, rep)?;
        max_w = max_w.max(w);
        if !sqrt_bound_check(g, rep)? {
            violations.push(format!("{name}: w={w} breaks the sqrt bound"));
        }
    }

    Ok(report(
        "wideness-growth",
        &violations,
        format!("{count} interval graphs up to n=30, max w={max_w}"),
        start.elapsed(),
    ))
}

// ---------------------------------------------------------------------------
// Suites.

pub const SUITES: &[&str] = &[
    "interval",
    "chordal",
    "treewidth",
    "helicopter",
    "products",
    "contraction",
    "all",
];

type Check = fn(&Limits) -> Result<CheckReport>;

fn suite_checks(name: &str) -> Option<Vec<Check>> {
    Some(match name {
        "interval" => vec![
            check_interval_approximation as Check,
            check_interval_structure,
            check_wideness_growth,
        ],
        "chordal" => vec![check_chordal_lower_bound as Check],
        "treewidth" => vec![check_treewidth_sandwich as Check, check_tightness],
        "helicopter" => vec![check_helicopter_identity as Check],
        "products" => vec![check_hypercube_bounds as Check, check_product_bound],
        "contraction" => vec![check_contraction_monotonicity as Check],
        "all" => vec![
            check_solver_sanity as Check,
            check_treewidth_sandwich,
            check_tightness,
            check_interval_approximation,
            check_interval_structure,
            check_chordal_lower_bound,
            check_helicopter_identity,
            check_contraction_monotonicity,
            check_hypercube_bounds,
            check_product_bound,
            check_wideness_growth,
        ],
        _ => return None,
    })
}

/// Runs one named suite and returns its reports in order.
pub fn run_suite(name: &str, limits: &Limits) -> Result<Vec<CheckReport>> {
    let checks = suite_checks(name).ok_or_else(|| {
        Error::input(format!(
            "unknown suite '{name}', expected one of {}",
            SUITES.join(", ")
        ))
    })?;
    checks.into_iter().map(|c| c(limits)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_counts_match_isomorphism_classes() {
        let levels = graph_classes();
        let all: Vec<usize> = (1..=7).map(|n| levels[n].len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156, 1044]);
        let connected: Vec<usize> = (1..=7)
            .map(|n| {
                levels[n]
                    .iter()
                    .filter(|&&m| mask_to_graph(m, n).is_connected())
                    .count()
            })
            .collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112, 853]);
        assert_eq!(connected_corpus(7).len(), 996);
    }

    #[test]
    fn tree_enumeration_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| all_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23]);
        for t in all_trees(7) {
            assert!(t.is_connected());
            assert_eq!(t.edge_count(), 6);
        }
    }

    #[test]
    fn named_instances_fit_the_size_cap() {
        for (name, g) in named_instances() {
            assert!(g.is_connected(), "{name}");
            assert!((8..=9).contains(&g.vertex_count()), "{name}");
        }
    }

    #[test]
    fn contraction_helper_merges_endpoints() {
        let c4 = cycle(4).unwrap();
        let t = contract_edge(&c4, 0, 1).unwrap();
        assert_eq!(t.vertex_count(), 3);
        assert_eq!(t.edge_count(), 3, "C4 contracts to a triangle");
        let p3 = path(3).unwrap();
        let e = contract_edge(&p3, 0, 1).unwrap();
        assert_eq!((e.vertex_count(), e.edge_count()), (2, 1));
    }

    #[test]
    fn unknown_suite_is_an_input_error() {
        assert!(matches!(
            run_suite("nonsense", &Limits::default()),
            Err(Error::Input(_))
        ));
        for &name in SUITES {
            assert!(suite_checks(name).is_some());
        }
    }

    #[test]
    fn exhaustive_cutsets_on_a_path() {
        let p4 = path(4).unwrap();
        let cuts = exhaustive_minimal_cutsets(&p4);
        let want: BTreeSet<Vec<usize>> = [vec![1], vec![2]].into_iter().collect();
        assert_eq!(cuts, want);
    }
}
