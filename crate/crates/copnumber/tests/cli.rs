//! End-to-end checks of the command-line binary: documented example
//! invocations, the exit-code contract, and output determinism.

use std::path::Path;
use std::process::{Command, Output};

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_copnumber"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("terminated by signal")
}

#[test]
fn gen_writes_the_theta_instance() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["gen", "theta", "3", "--out", "t3.graph"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("n=21"), "summary: {}", stdout(&out));
    let text = std::fs::read_to_string(dir.path().join("t3.graph")).unwrap();
    assert!(text.starts_with("21 27\n"), "header: {}", &text[..20]);
}

#[test]
fn gen_accessible_pair_writes_the_annotation() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &["gen", "chordal-accessible", "2", "--out", "ca2.graph"],
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("n=7"));
    let pair = std::fs::read_to_string(dir.path().join("ca2.pair")).unwrap();
    assert!(
        pair.contains("X = ") && pair.contains("; v = "),
        "annotation: {pair}"
    );
}

#[test]
fn gen_rejects_unknown_families_and_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["gen", "moebius", "5", "--out", "m.graph"]);
    assert_eq!(code(&out), 2);
    assert!(!dir.path().join("m.graph").exists());
}

#[test]
fn gen_randomized_family_requires_a_seed() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &["gen", "random-interval", "8", "--out", "r.graph"],
    );
    assert_eq!(code(&out), 2);
    assert!(!dir.path().join("r.graph").exists());
}

#[test]
fn solve_reports_the_cycle_and_clique_values() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["gen", "cycle", "5", "--out", "c5.graph"]);
    run_in(dir.path(), &["gen", "complete", "5", "--out", "k5.graph"]);

    let out = run_in(dir.path(), &["solve", "c5.graph"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("c_inf = 2"), "{}", stdout(&out));

    let out = run_in(dir.path(), &["solve", "k5.graph"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("c_inf = 1"), "{}", stdout(&out));
}

#[test]
fn solve_prints_a_bracket_when_the_budget_runs_out() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["gen", "theta", "4", "--out", "t4.graph"]);
    let out = run_in(dir.path(), &["solve", "t4.graph", "--budget", "1000"]);
    assert_eq!(code(&out), 3, "{}", stderr(&out));
    assert!(stdout(&out).contains("c_inf in [1,"), "{}", stdout(&out));
}

#[test]
fn solve_rejects_malformed_graph_files() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.graph"), "zero edges\n").unwrap();
    let out = run_in(dir.path(), &["solve", "bad.graph"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn bounds_pins_the_hypercube_bracket() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["gen", "hypercube", "3", "--out", "q3.graph"]);
    let out = run_in(
        dir.path(),
        &["bounds", "q3.graph", "--format", "structured"],
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("schema = copnumber/1\n"));
    assert!(text.contains("exact = 2"), "{text}");
    assert!(text.contains("entry_5_name = treewidth"), "{text}");
}

#[test]
fn bounds_uses_an_interval_representation_when_given() {
    let dir = tempfile::tempdir().unwrap();
    run_in(
        dir.path(),
        &["gen", "strong-product", "2", "--out", "sp.graph"],
    );
    let out = run_in(
        dir.path(),
        &["bounds", "sp.graph", "--intervals", "sp.intervals"],
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("w(G) = 2"), "{}", stdout(&out));
}

#[test]
fn play_domination_captures_on_the_triangle() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["gen", "complete", "3", "--out", "k3.graph"]);
    let out = run_in(
        dir.path(),
        &[
            "play",
            "k3.graph",
            "--cops",
            "domination",
            "--robber",
            "optimal",
            "--k",
            "1",
        ],
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(
        stdout(&out).contains("outcome: capture round=1"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn play_sweep_captures_on_the_path() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["gen", "path", "5", "--out", "p5.graph"]);
    let out = run_in(
        dir.path(),
        &[
            "play",
            "p5.graph",
            "--cops",
            "sweep",
            "--robber",
            "optimal",
            "--k",
            "2",
        ],
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("outcome: capture"), "{}", stdout(&out));
}

#[test]
fn play_theta_evader_survives_two_cops() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["gen", "theta", "3", "--out", "t3.graph"]);
    let out = run_in(
        dir.path(),
        &[
            "play",
            "t3.graph",
            "--cops",
            "optimal",
            "--robber",
            "theta-evader",
            "--k",
            "2",
            "--rounds",
            "60",
        ],
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(
        stdout(&out).contains("outcome: survived rounds=60"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn play_flags_an_underprovisioned_policy() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["gen", "cycle", "5", "--out", "c5.graph"]);
    let out = run_in(
        dir.path(),
        &[
            "play",
            "c5.graph",
            "--cops",
            "domination",
            "--robber",
            "optimal",
            "--k",
            "1",
        ],
    );
    assert_eq!(code(&out), 4);
    assert!(stderr(&out).contains("domination"), "{}", stderr(&out));
}

#[test]
fn verify_rejects_unknown_suites() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["verify", "--suite", "nonsense"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("unknown suite"), "{}", stderr(&out));
}

#[test]
fn verify_runs_the_chordal_suite() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["verify", "--suite", "chordal"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(
        stdout(&out).contains("PASS chordal-lower-bound"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn structured_output_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["gen", "hypercube", "3", "--out", "q3.graph"]);
    let args = ["solve", "q3.graph", "--format", "structured"];
    let first = run_in(dir.path(), &args);
    let second = run_in(dir.path(), &args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);

    let args = [
        "gen",
        "random-interval",
        "9",
        "--seed",
        "11",
        "--out",
        "r.graph",
        "--format",
        "structured",
    ];
    let first = run_in(dir.path(), &args);
    let graph_a = std::fs::read(dir.path().join("r.graph")).unwrap();
    let second = run_in(dir.path(), &args);
    let graph_b = std::fs::read(dir.path().join("r.graph")).unwrap();
    assert_eq!(code(&first), 0, "{}", stderr(&first));
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(graph_a, graph_b);
}
