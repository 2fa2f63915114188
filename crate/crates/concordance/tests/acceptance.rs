//! Acceptance grid as an integration test target: one test per criterion,
//! each printing a pass/fail line (visible with `--nocapture`).

use concordance::selftest::run_criterion;

fn check(id: u32) {
    let outcome = run_criterion(id).expect("criterion ids are 1 through 10");
    let marker = if outcome.passed { "PASS" } else { "FAIL" };
    println!(
        "acceptance {:2}: {marker}  {} ({})",
        outcome.id, outcome.name, outcome.detail
    );
    assert!(outcome.passed, "criterion {id} failed: {}", outcome.detail);
}

#[test]
fn criterion_01_mu_bar_constant_on_the_twist_family() {
    check(1);
}

#[test]
fn criterion_02_graph_presentation_independence() {
    check(2);
}

#[test]
fn criterion_03_signature_and_wu_square_constants() {
    check(3);
}

#[test]
fn criterion_04_closed_form_matches_direct_count() {
    check(4);
}

#[test]
fn criterion_05_signature_spot_values() {
    check(5);
}

#[test]
fn criterion_06_branched_cover_homology_grid() {
    check(6);
}

#[test]
fn criterion_07_kappa_values_on_the_twist_family() {
    check(7);
}

#[test]
fn criterion_08_cable_lower_bound_is_one_half() {
    check(8);
}

#[test]
fn criterion_09_property_suites() {
    check(9);
}

#[test]
fn criterion_10_small_lattice_oracle() {
    check(10);
}
