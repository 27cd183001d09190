//! Golden-file regression tests for the JSON wire formats.
//!
//! The JSON output is schema-stable: identical inputs must produce
//! byte-identical documents across runs. Regenerate the goldens with
//! `UPDATE_GOLDEN=1 cargo test --test golden` after an intentional change.

use std::path::PathBuf;

use pentafiber::enumerator::{certify_max_genus, feasible_genus_k2, K2Family};
use pentafiber::invariants::FibrationConfig;
use pentafiber::pencils::{build_case, CaseId};

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn check_golden(name: &str, actual: &str) {
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|err| panic!("missing golden {}: {err}", path.display()));
    assert_eq!(
        expected, actual,
        "golden {} drifted; run with UPDATE_GOLDEN=1 if intentional",
        name
    );
}

#[test]
fn dichotomy_table_json_is_stable() {
    let table = feasible_genus_k2(5).unwrap();
    let json = serde_json::to_string_pretty(&table).unwrap();
    // Identical input, identical bytes.
    let again = serde_json::to_string_pretty(&feasible_genus_k2(5).unwrap()).unwrap();
    assert_eq!(json, again);
    check_golden("dichotomy_table.json", &json);
}

#[test]
fn plane_quintic_bundle_json_is_stable() {
    let bundle = build_case(CaseId::PlaneQuintic, 6, None)
        .unwrap()
        .bundle()
        .unwrap();
    let json = serde_json::to_string_pretty(&bundle).unwrap();
    check_golden("case_plane_quintic.json", &json);
}

#[test]
fn genus_twelve_refutation_json_is_stable() {
    let config = FibrationConfig::rational_five(12, -34, vec![6]).unwrap();
    let scan = config.mvt_scan(10).unwrap();
    let json = serde_json::to_string_pretty(&scan).unwrap();
    check_golden("mvt_scan_g12.json", &json);
}

#[test]
fn max_genus_report_json_is_stable() {
    let report = certify_max_genus(K2Family::TwoMinus3g);
    let json = serde_json::to_string_pretty(&report).unwrap();
    let again = serde_json::to_string_pretty(&certify_max_genus(K2Family::TwoMinus3g)).unwrap();
    assert_eq!(json, again);
    check_golden("max_genus_2_3g.json", &json);
}
