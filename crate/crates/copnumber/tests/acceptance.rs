//! Release gate: every blocking property runs as its own test and prints a
//! single PASS/FAIL line (visible with `--nocapture`, or in the panic text).

use copnumber::verify::{
    check_chordal_lower_bound, check_contraction_monotonicity, check_helicopter_identity,
    check_hypercube_bounds, check_interval_approximation, check_interval_structure,
    check_product_bound, check_solver_sanity, check_tightness, check_treewidth_sandwich,
    check_wideness_growth, CheckReport,
};
use copnumber::{Limits, Result};

fn gate(run: fn(&Limits) -> Result<CheckReport>) {
    let report = run(&Limits::default()).expect("check must be able to run");
    println!("{}", report.line());
    assert!(report.passed, "{}", report.line());
}

#[test]
fn solver_sanity_oracles() {
    gate(check_solver_sanity);
}

#[test]
fn treewidth_sandwich_on_the_corpus() {
    gate(check_treewidth_sandwich);
}

#[test]
fn tightness_witnesses() {
    gate(check_tightness);
}

#[test]
fn interval_three_approximation() {
    gate(check_interval_approximation);
}

#[test]
fn interval_structure_lemmas() {
    gate(check_interval_structure);
}

#[test]
fn chordal_lower_bound_construction() {
    gate(check_chordal_lower_bound);
}

#[test]
fn helicopter_identity() {
    gate(check_helicopter_identity);
}

#[test]
fn contraction_monotonicity() {
    gate(check_contraction_monotonicity);
}

#[test]
fn hypercube_domination_bounds() {
    gate(check_hypercube_bounds);
}

#[test]
fn product_lift_bound() {
    gate(check_product_bound);
}

#[test]
fn wideness_square_root_cap() {
    gate(check_wideness_growth);
}
