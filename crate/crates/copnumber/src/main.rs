//! Command-line front end: generate graph families, solve instances exactly,
//! assemble bound reports, pit strategies against each other, and run the
//! verification suites.
//!
//! Exit codes: 0 success, 2 bad usage or malformed input, 3 over a budget or
//! capability limit, 4 a policy attempted an illegal action, 1 internal.

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use copnumber::bounds::{compose, lower_bound_wide, BoundHints, BoundKind};
use copnumber::decomposition::treewidth_exact;
use copnumber::generators::{self, AccessiblePairData, ProductSpec};
use copnumber::interval::{self, IntervalRepresentation};
use copnumber::solver::{self, CopPolicy, Mover, Outcome, RobberPolicy, SolveData};
use copnumber::strategies::{
    cop_domination, cop_interval_three_team, cop_sweep_decomposition, robber_accessible_evader,
    robber_theta_evader, robber_wide_evader, GreedyClosestCop, OptimalCopPolicy,
    OptimalRobberPolicy, RandomCopPolicy, RandomRobberPolicy,
};
use copnumber::{verify, Error, Graph, Limits, Result};

/// Version tag of the structured key-value output. Bump on any key change.
const SCHEMA: &str = "copnumber/1";

#[derive(Parser)]
#[command(name = "copnumber", version, about = "Pursuit-evasion on graphs against an unbounded-speed robber")]
struct Cli {
    /// Output format: human-readable text or a flat key = value document.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph family and write it (plus side files) to disk.
    Gen(GenArgs),
    /// Decide the cop number exactly, one cop count at a time.
    Solve(SolveArgs),
    /// Assemble every applicable lower and upper bound into one report.
    Bounds(BoundsArgs),
    /// Play one game between named cop and robber policies.
    Play(PlayArgs),
    /// Run a verification suite and report each check.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GenArgs {
    /// One of: path, cycle, complete, complete-bipartite, grid, hypercube,
    /// theta, chordal-accessible, strong-product, random-interval.
    family: String,
    /// Family parameters, e.g. `gen theta 3` or `gen complete-bipartite 4 5`.
    params: Vec<usize>,
    /// Graph file to write; side files land next to it (.intervals, .pair).
    #[arg(long)]
    out: PathBuf,
    /// Seed for randomized families; required there, rejected elsewhere.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct SolveArgs {
    /// Graph file ("n m" header, one "u v" edge per line).
    graph: PathBuf,
    /// Stop after this many cops; defaults to the vertex count.
    #[arg(long)]
    max_k: Option<usize>,
    /// Solver state budget (positions times robber vertices).
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct BoundsArgs {
    graph: PathBuf,
    /// Interval representation file; unlocks the interval bounds.
    #[arg(long)]
    intervals: Option<PathBuf>,
    /// Comma-separated factor graph files; unlocks the product bound.
    #[arg(long)]
    product: Option<String>,
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct PlayArgs {
    graph: PathBuf,
    /// Cop policy: optimal, greedy, random[:seed], sweep, domination,
    /// three-team.
    #[arg(long)]
    cops: String,
    /// Robber policy: optimal, random[:seed], theta-evader[:m], wide-evader,
    /// accessible-evader[:level].
    #[arg(long)]
    robber: String,
    /// Number of cops.
    #[arg(long)]
    k: usize,
    /// Round limit; reaching it scores as robber survival.
    #[arg(long, default_value_t = 100)]
    rounds: u32,
    /// Interval representation file (the three-team cops need one).
    #[arg(long)]
    intervals: Option<PathBuf>,
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: interval, chordal, treewidth, helicopter, products,
    /// contraction, all.
    #[arg(long)]
    suite: String,
    #[arg(long)]
    budget: Option<u64>,
}

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes (e.g. `copnumber bounds g | head`)
    // instead of panicking on a failed write to stdout.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code().clamp(1, 255) as u8)
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Gen(a) => cmd_gen(cli.format, a),
        Command::Solve(a) => cmd_solve(cli.format, a),
        Command::Bounds(a) => cmd_bounds(cli.format, a),
        Command::Play(a) => cmd_play(cli.format, a),
        Command::Verify(a) => cmd_verify(cli.format, a),
    }
}

fn kv(key: impl Display, value: impl Display) {
    println!("{key} = {value}");
}

fn limits_with_budget(budget: Option<u64>) -> Result<Limits> {
    match budget {
        None => Ok(Limits::default()),
        Some(0) => Err(Error::input("--budget must be positive")),
        Some(b) => Ok(Limits::default().with_solver_states(b)),
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
    Graph::from_text(&text)
}

fn read_intervals(path: &Path, g: &Graph) -> Result<IntervalRepresentation> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
    let rep = IntervalRepresentation::from_text(&text)?;
    if !rep.matches(g) {
        return Err(Error::input(format!(
            "interval representation in {} does not describe this graph",
            path.display()
        )));
    }
    Ok(rep)
}

// ---------------------------------------------------------------- gen

fn one_param(family: &str, params: &[usize]) -> Result<usize> {
    match params {
        [p] => Ok(*p),
        _ => Err(Error::input(format!(
            "family '{family}' takes exactly one parameter, got {}",
            params.len()
        ))),
    }
}

fn cmd_gen(format: Format, a: GenArgs) -> Result<()> {
    if a.family != "random-interval" && a.seed.is_some() {
        return Err(Error::input(format!(
            "--seed only applies to random-interval, not '{}'",
            a.family
        )));
    }
    let mut named: Vec<(&str, String)> = Vec::new();
    let mut intervals: Option<IntervalRepresentation> = None;
    let mut pair: Option<(Vec<usize>, usize)> = None;
    let g = match a.family.as_str() {
        "path" => {
            let n = one_param(&a.family, &a.params)?;
            named.push(("n", n.to_string()));
            generators::path(n)?
        }
        "cycle" => {
            let n = one_param(&a.family, &a.params)?;
            named.push(("n", n.to_string()));
            generators::cycle(n)?
        }
        "complete" => {
            let n = one_param(&a.family, &a.params)?;
            named.push(("n", n.to_string()));
            generators::complete(n)?
        }
        "complete-bipartite" => match a.params[..] {
            [x, y] => {
                named.push(("a", x.to_string()));
                named.push(("b", y.to_string()));
                generators::complete_bipartite(x, y)?
            }
            _ => {
                return Err(Error::input(
                    "family 'complete-bipartite' takes exactly two parameters",
                ))
            }
        },
        "grid" => {
            let r = one_param(&a.family, &a.params)?;
            named.push(("r", r.to_string()));
            generators::grid(r)?
        }
        "hypercube" => {
            let m = one_param(&a.family, &a.params)?;
            named.push(("m", m.to_string()));
            generators::hypercube(m)?
        }
        "theta" => {
            let m = one_param(&a.family, &a.params)?;
            named.push(("m", m.to_string()));
            generators::theta_family(m)?
        }
        "chordal-accessible" => {
            let m = one_param(&a.family, &a.params)?;
            named.push(("m", m.to_string()));
            let data = generators::chordal_accessible(m)?;
            pair = Some((data.x.iter().collect(), data.v));
            data.graph
        }
        "strong-product" => {
            let m = one_param(&a.family, &a.params)?;
            named.push(("m", m.to_string()));
            let (g, rep) = generators::strong_product_path_clique(m)?;
            intervals = Some(rep);
            g
        }
        "random-interval" => {
            let n = one_param(&a.family, &a.params)?;
            let seed = a
                .seed
                .ok_or_else(|| Error::input("random-interval requires --seed"))?;
            named.push(("n", n.to_string()));
            named.push(("seed", seed.to_string()));
            let (g, rep) = interval::random_connected_interval(n, seed)?;
            intervals = Some(rep);
            g
        }
        other => {
            return Err(Error::input(format!(
                "unknown family '{other}' (expected path, cycle, complete, \
                 complete-bipartite, grid, hypercube, theta, chordal-accessible, \
                 strong-product, random-interval)"
            )))
        }
    };

    let mut files: Vec<(PathBuf, String)> = vec![(a.out.clone(), g.to_text())];
    let mut sides: Vec<(&str, PathBuf)> = Vec::new();
    if let Some(rep) = &intervals {
        let p = side_path(&a.out, "intervals")?;
        files.push((p.clone(), rep.to_text()));
        sides.push(("intervals", p));
    }
    if let Some((xs, v)) = &pair {
        let p = side_path(&a.out, "pair")?;
        let x_text = xs
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        files.push((p.clone(), format!("X = {x_text}; v = {v}\n")));
        sides.push(("pair", p));
    }
    write_all(&files)?;

    match format {
        Format::Text => {
            let params = named
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(" ");
            let extras: String = sides
                .iter()
                .map(|(kind, p)| format!(" (+ {kind} {})", p.display()))
                .collect();
            println!(
                "{} {params}: n={} m={} -> {}{extras}",
                a.family,
                g.vertex_count(),
                g.edge_count(),
                a.out.display()
            );
        }
        Format::Structured => {
            kv("schema", SCHEMA);
            kv("command", "gen");
            kv("family", &a.family);
            for (k, v) in &named {
                kv(k, v);
            }
            kv("vertices", g.vertex_count());
            kv("edges", g.edge_count());
            kv("graph_file", a.out.display());
            for (kind, p) in &sides {
                kv(format!("{kind}_file"), p.display());
            }
        }
    }
    Ok(())
}

fn side_path(out: &Path, ext: &str) -> Result<PathBuf> {
    let p = out.with_extension(ext);
    if p == out {
        return Err(Error::input(format!(
            "output path {} collides with its {ext} side file",
            out.display()
        )));
    }
    Ok(p)
}

/// Stage every file as `<name>.tmp` before renaming any of them, so an
/// error never leaves a partial output behind.
fn write_all(files: &[(PathBuf, String)]) -> Result<()> {
    let mut staged: Vec<(PathBuf, &PathBuf)> = Vec::new();
    for (path, content) in files {
        let mut name = path
            .file_name()
            .map(|s| s.to_os_string())
            .ok_or_else(|| Error::input(format!("{} has no file name", path.display())))?;
        name.push(".tmp");
        let tmp = path.with_file_name(name);
        if let Err(e) = fs::write(&tmp, content) {
            let _ = fs::remove_file(&tmp);
            for (t, _) in &staged {
                let _ = fs::remove_file(t);
            }
            return Err(Error::Io(e));
        }
        staged.push((tmp, path));
    }
    for (i, (tmp, path)) in staged.iter().enumerate() {
        if let Err(e) = fs::rename(tmp, path) {
            for (t, _) in &staged[i..] {
                let _ = fs::remove_file(t);
            }
            return Err(Error::Io(e));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- solve

fn cmd_solve(format: Format, a: SolveArgs) -> Result<()> {
    let limits = limits_with_budget(a.budget)?;
    let g = read_graph(&a.graph)?;
    let n = g.vertex_count();
    let max_k = match a.max_k {
        Some(0) => return Err(Error::input("--max-k must be at least 1")),
        Some(k) => k,
        None => n.max(1),
    };
    if format == Format::Structured {
        kv("schema", SCHEMA);
        kv("command", "solve");
        kv("graph_file", a.graph.display());
        kv("vertices", n);
        kv("edges", g.edge_count());
    }
    for k in 1..=max_k {
        match solver::solve_fixed_k(&g, k, &limits) {
            Ok(outcome) => {
                let winner = if outcome.cops_win { "cops" } else { "robber" };
                match format {
                    Format::Text => println!(
                        "k={k}: {}",
                        if outcome.cops_win { "cops win" } else { "robber wins" }
                    ),
                    Format::Structured => kv(format!("verdict_{k}"), winner),
                }
                if outcome.cops_win {
                    match format {
                        Format::Text => println!("c_inf = {k}"),
                        Format::Structured => kv("c_inf", k),
                    }
                    return Ok(());
                }
            }
            Err(e @ Error::Budget(_)) => {
                emit_bracket(format, k, upper_estimate(&g, &limits).max(k));
                return Err(e);
            }
            Err(e) => return Err(e),
        }
    }
    // Every k ≤ max_k is refuted, so the answer lies strictly above the cap.
    let lo = max_k + 1;
    emit_bracket(format, lo, upper_estimate(&g, &limits).max(lo));
    Err(Error::budget(format!(
        "cops do not win with --max-k {max_k} cops; raise the cap"
    )))
}

fn emit_bracket(format: Format, lo: usize, hi: usize) {
    match format {
        Format::Text => println!("c_inf in [{lo}, {hi}]"),
        Format::Structured => {
            kv("c_inf_lower", lo);
            kv("c_inf_upper", hi);
        }
    }
}

/// Cops win outright from a dominating set, so γ caps the cop number; fall
/// back to n when the domination search itself is out of range.
fn upper_estimate(g: &Graph, limits: &Limits) -> usize {
    g.domination_number_exact(limits.domination_n)
        .map(|(gamma, _)| gamma)
        .unwrap_or_else(|_| g.vertex_count())
}

// ---------------------------------------------------------------- bounds

fn cmd_bounds(format: Format, a: BoundsArgs) -> Result<()> {
    let limits = limits_with_budget(a.budget)?;
    let g = read_graph(&a.graph)?;
    let mut hints = BoundHints::default();
    if let Some(p) = &a.intervals {
        hints.representation = Some(read_intervals(p, &g)?);
    }
    if let Some(spec) = &a.product {
        let mut factors = Vec::new();
        for part in spec.split(',') {
            let part = part.trim();
            if part.is_empty() {
                return Err(Error::input(
                    "--product expects comma-separated graph files",
                ));
            }
            factors.push(read_graph(Path::new(part))?);
        }
        hints.product = Some(ProductSpec::cartesian(factors));
    }
    let report = compose(&g, &hints, &limits)?;

    match format {
        Format::Text => {
            println!("n={} m={}", g.vertex_count(), g.edge_count());
            println!("bracket: [{}, {}]", report.bracket.0, report.bracket.1);
            match report.exact {
                Some(c) => println!("exact: c_inf = {c}"),
                None => println!("exact: unresolved within budget"),
            }
            let width = report
                .entries
                .iter()
                .map(|e| e.name.len())
                .max()
                .unwrap_or(0);
            for e in &report.entries {
                let kind = match e.kind {
                    BoundKind::Lower => "lower",
                    BoundKind::Upper => "upper",
                };
                let value = match e.value {
                    Some(v) => v.to_string(),
                    None => "-".into(),
                };
                println!("  {kind}  {:width$}  {value:>3}  {}", e.name, e.note);
            }
        }
        Format::Structured => {
            kv("schema", SCHEMA);
            kv("command", "bounds");
            kv("graph_file", a.graph.display());
            kv("vertices", g.vertex_count());
            kv("edges", g.edge_count());
            kv("bracket_lo", report.bracket.0);
            kv("bracket_hi", report.bracket.1);
            match report.exact {
                Some(c) => kv("exact", c),
                None => kv("exact", "unresolved"),
            }
            kv("entries", report.entries.len());
            for (i, e) in report.entries.iter().enumerate() {
                let i = i + 1;
                kv(format!("entry_{i}_name"), e.name);
                kv(
                    format!("entry_{i}_kind"),
                    match e.kind {
                        BoundKind::Lower => "lower",
                        BoundKind::Upper => "upper",
                    },
                );
                match e.value {
                    Some(v) => kv(format!("entry_{i}_value"), v),
                    None => kv(format!("entry_{i}_value"), "-"),
                }
                kv(format!("entry_{i}_note"), &e.note);
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- play

fn split_policy(spec: &str) -> (&str, Option<&str>) {
    match spec.split_once(':') {
        Some((name, param)) => (name, Some(param)),
        None => (spec, None),
    }
}

fn no_param(name: &str, param: Option<&str>) -> Result<()> {
    match param {
        Some(p) => Err(Error::input(format!(
            "policy '{name}' takes no parameter, got '{p}'"
        ))),
        None => Ok(()),
    }
}

fn parse_seed(name: &str, param: Option<&str>) -> Result<u64> {
    match param {
        None => Ok(0),
        Some(s) => s
            .parse()
            .map_err(|_| Error::input(format!("policy '{name}' wants a numeric seed, got '{s}'"))),
    }
}

fn solve_data(
    g: &Graph,
    k: usize,
    limits: &Limits,
    cache: &mut Option<Arc<SolveData>>,
) -> Result<Arc<SolveData>> {
    if cache.is_none() {
        *cache = Some(solver::solve_fixed_k(g, k, limits)?.data);
    }
    Ok(cache.clone().expect("just filled"))
}

fn build_cop_policy(
    spec: &str,
    g: &Graph,
    k: usize,
    limits: &Limits,
    rep: Option<&IntervalRepresentation>,
    cache: &mut Option<Arc<SolveData>>,
) -> Result<Box<dyn CopPolicy>> {
    let (name, param) = split_policy(spec);
    Ok(match name {
        "optimal" => {
            no_param(name, param)?;
            Box::new(OptimalCopPolicy::new(solve_data(g, k, limits, cache)?))
        }
        "greedy" => {
            no_param(name, param)?;
            Box::new(GreedyClosestCop)
        }
        "random" => Box::new(RandomCopPolicy::new(parse_seed(name, param)?)),
        "domination" => {
            no_param(name, param)?;
            Box::new(cop_domination(limits.clone()))
        }
        "sweep" => {
            no_param(name, param)?;
            let (_, td) = treewidth_exact(g, limits.treewidth_n)?;
            Box::new(cop_sweep_decomposition(td))
        }
        "three-team" => {
            no_param(name, param)?;
            let rep = rep
                .ok_or_else(|| Error::input("cop policy 'three-team' needs --intervals"))?;
            let (w, _) = interval::compute_w(g, rep)?;
            Box::new(cop_interval_three_team(rep.clone(), w))
        }
        other => {
            return Err(Error::input(format!(
                "unknown cop policy '{other}' (expected optimal, greedy, random[:seed], \
                 sweep, domination, three-team)"
            )))
        }
    })
}

fn build_robber_policy(
    spec: &str,
    g: &Graph,
    k: usize,
    limits: &Limits,
    cache: &mut Option<Arc<SolveData>>,
) -> Result<Box<dyn RobberPolicy>> {
    let (name, param) = split_policy(spec);
    Ok(match name {
        "optimal" => {
            no_param(name, param)?;
            Box::new(OptimalRobberPolicy::new(solve_data(g, k, limits, cache)?))
        }
        "random" => Box::new(RandomRobberPolicy::new(parse_seed(name, param)?)),
        "theta-evader" => {
            let m = match param {
                Some(s) => s.parse().map_err(|_| {
                    Error::input(format!("theta-evader wants a numeric parameter, got '{s}'"))
                })?,
                None => infer_theta_m(g)?,
            };
            Box::new(robber_theta_evader(m))
        }
        "wide-evader" => {
            no_param(name, param)?;
            let (w, witness) = lower_bound_wide(g, limits)?;
            Box::new(robber_wide_evader(witness, w))
        }
        "accessible-evader" => {
            let data = match param {
                Some(s) => {
                    let level: usize = s.parse().map_err(|_| {
                        Error::input(format!(
                            "accessible-evader wants a numeric parameter, got '{s}'"
                        ))
                    })?;
                    generators::chordal_accessible(level)?
                }
                None => infer_accessible(g)?,
            };
            Box::new(robber_accessible_evader(data)?)
        }
        other => {
            return Err(Error::input(format!(
                "unknown robber policy '{other}' (expected optimal, random[:seed], \
                 theta-evader[:m], wide-evader, accessible-evader[:level])"
            )))
        }
    })
}

/// The theta instance with hub count m has m + m²(m−1) vertices, which is
/// strictly increasing, so the vertex count pins m down.
fn infer_theta_m(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    (3..=12).find(|m| m + m * m * (m - 1) == n).ok_or_else(|| {
        Error::input(format!(
            "cannot infer the theta parameter from n = {n}; pass theta-evader:<m>"
        ))
    })
}

fn infer_accessible(g: &Graph) -> Result<AccessiblePairData> {
    let n = g.vertex_count();
    for level in [2, 4, 8, 16] {
        let data = generators::chordal_accessible(level)?;
        match data.graph.vertex_count().cmp(&n) {
            std::cmp::Ordering::Equal => return Ok(data),
            std::cmp::Ordering::Greater => break,
            std::cmp::Ordering::Less => {}
        }
    }
    Err(Error::input(format!(
        "no accessible-pair instance has {n} vertices; pass accessible-evader:<level>"
    )))
}

fn cmd_play(format: Format, a: PlayArgs) -> Result<()> {
    let limits = limits_with_budget(a.budget)?;
    let g = read_graph(&a.graph)?;
    if a.k == 0 {
        return Err(Error::input("--k must be at least 1"));
    }
    let rep = match &a.intervals {
        Some(p) => Some(read_intervals(p, &g)?),
        None => None,
    };
    let mut cache: Option<Arc<SolveData>> = None;
    let mut cops = build_cop_policy(&a.cops, &g, a.k, &limits, rep.as_ref(), &mut cache)?;
    let mut robber = build_robber_policy(&a.robber, &g, a.k, &limits, &mut cache)?;
    let cop_name = cops.name().to_string();
    let robber_name = robber.name().to_string();
    let transcript = solver::play(&g, a.k, cops.as_mut(), robber.as_mut(), a.rounds)?;

    match format {
        Format::Text => {
            println!("{} vs {}, k={}", cop_name, robber_name, a.k);
            print!("{}", transcript.to_text());
        }
        Format::Structured => {
            kv("schema", SCHEMA);
            kv("command", "play");
            kv("graph_file", a.graph.display());
            kv("k", a.k);
            kv("max_rounds", a.rounds);
            kv("cops", &cop_name);
            kv("robber", &robber_name);
            for (i, p) in transcript.plies.iter().enumerate() {
                let mover = match p.mover {
                    Mover::Cops => "cops",
                    Mover::Robber => "robber",
                };
                let positions = p
                    .cops
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",");
                let r = match p.robber {
                    Some(r) => r.to_string(),
                    None => "-".into(),
                };
                kv(
                    format!("ply_{i}"),
                    format!("{}; {mover}; cops=[{positions}]; robber={r}", p.round),
                );
            }
            match transcript.outcome {
                Outcome::Capture { round } => {
                    kv("outcome", "capture");
                    kv("capture_round", round);
                }
                Outcome::Survived { rounds } => {
                    kv("outcome", "survived");
                    kv("survived_rounds", rounds);
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- verify

fn cmd_verify(format: Format, a: VerifyArgs) -> Result<()> {
    let limits = limits_with_budget(a.budget)?;
    let reports = verify::run_suite(&a.suite, &limits)?;
    let failed = reports.iter().filter(|r| !r.passed).count();
    match format {
        Format::Text => {
            for r in &reports {
                println!("{}", r.line());
            }
            if failed == 0 {
                println!("suite {}: {1}/{1} checks passed", a.suite, reports.len());
            } else {
                println!(
                    "suite {}: {failed}/{} checks FAILED",
                    a.suite,
                    reports.len()
                );
            }
        }
        Format::Structured => {
            kv("schema", SCHEMA);
            kv("command", "verify");
            kv("suite", &a.suite);
            kv("checks", reports.len());
            for (i, r) in reports.iter().enumerate() {
                let i = i + 1;
                kv(format!("check_{i}_name"), r.name);
                kv(format!("check_{i}_passed"), r.passed);
                kv(format!("check_{i}_detail"), &r.detail);
            }
            kv("passed", failed == 0);
        }
    }
    if failed > 0 {
        return Err(Error::internal(format!(
            "{failed} of {} checks failed",
            reports.len()
        )));
    }
    Ok(())
}
