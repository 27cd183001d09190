//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! All checks are exact (tolerance zero). Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

use pentafiber::selftest;

fn run(criterion: selftest::Criterion) {
    println!(
        "[{}] criterion {}: {}",
        if criterion.pass { "PASS" } else { "FAIL" },
        criterion.name,
        criterion.detail
    );
    assert!(
        criterion.pass,
        "criterion {} failed: {}",
        criterion.name, criterion.detail
    );
}

#[test]
fn criterion_1_dichotomy() {
    run(selftest::criterion_dichotomy());
}

#[test]
fn criterion_2_sharpened_bound() {
    run(selftest::criterion_sharpened_bound());
}

#[test]
fn criterion_3_stability() {
    run(selftest::criterion_stability());
}

#[test]
fn criterion_4_case_table() {
    run(selftest::criterion_case_table());
}

#[test]
fn criterion_5_del_pezzo() {
    run(selftest::criterion_del_pezzo());
}

#[test]
fn criterion_6_property_suites() {
    run(selftest::criterion_property_suites());
}

#[test]
fn criterion_7_existence_caveat() {
    run(selftest::criterion_existence_caveat());
}
