//! End-to-end checks of the `pentafiber` binary.

use std::process::{Command, Output};

fn pentafiber(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pentafiber"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn bounds_prints_the_feasibility_table() {
    let out = pentafiber(&["bounds"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("| 17 | -49 | 2-3g | feasible |"), "{text}");
    assert!(text.contains("K^2 = 2-3g: max genus 11"), "{text}");
    assert!(text.contains("K^2 = 3-3g: max genus 10"), "{text}");
}

#[test]
fn bounds_show_refutation_prints_the_exact_deficit() {
    let out = pentafiber(&["bounds", "--family", "2-3g", "--show-refutation", "12"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("Refutation of g = 12"), "{text}");
    assert!(text.contains("rf = 582/7"), "{text}");
    assert!(text.contains("slack = -4/7"), "{text}");
}

#[test]
fn bounds_json_is_deterministic() {
    let first = stdout(&pentafiber(&["bounds", "--format", "json"]));
    let second = stdout(&pentafiber(&["bounds", "--format", "json"]));
    assert_eq!(first, second);
    assert!(first.trim_start().starts_with('{'));
}

#[test]
fn bounds_self_test_exits_zero() {
    let out = pentafiber(&["bounds", "--self-test"]);
    let text = stdout(&out);
    assert!(text.contains("7 of 7 acceptance criteria hold"), "{text}");
    assert!(out.status.success());
}

#[test]
fn mvt_reports_the_genus_twelve_failure() {
    let out = pentafiber(&[
        "mvt", "--g", "12", "--k2", "-34", "--chains", "6", "--e-max", "10",
    ]);
    // A failing weight is reported through the exit code.
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("first failure at e = 5"), "{text}");
}

#[test]
fn mvt_holds_for_the_cone_profile() {
    let out = pentafiber(&["mvt", "--g", "4", "--k2", "-10", "--e-max", "50"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("all weights hold"));
}

#[test]
fn mvt_trivial_hold_off_the_rational_case() {
    let out = pentafiber(&[
        "mvt", "--g", "2", "--k2", "0", "--gb", "1", "--s", "0", "--e-max", "2",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("all weights hold"));
}

#[test]
fn mvt_rejects_oversized_chains() {
    let out = pentafiber(&["mvt", "--g", "4", "--k2", "-10", "--chains", "40"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("node budget"), "{err}");
}

#[test]
fn case_plane_quintic_passes() {
    let out = pentafiber(&["case", "--id", "plane-quintic"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.contains("| K^2 after all blowups | -16 | -16 | pass |"),
        "{text}"
    );
    assert!(text.contains("| base points | 25 | 25 | pass |"), "{text}");
    assert!(text.contains("overall: PASS"), "{text}");
}

#[test]
fn case_trigonal_11_3_passes() {
    let out = pentafiber(&["case", "--id", "trigonal", "--g", "11", "--n", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("| base points | 39 | 39 | pass |"), "{text}");
    assert!(
        text.contains("| K^2 after all blowups | -31 | -31 | pass |"),
        "{text}"
    );
}

#[test]
fn case_rejects_parity_violations() {
    let out = pentafiber(&["case", "--id", "trigonal", "--g", "11", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("even"), "{err}");
}

#[test]
fn enumerate_emits_both_families() {
    let out = pentafiber(&["enumerate", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let reports = value.as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["max_genus"], 11);
    assert_eq!(reports[1]["max_genus"], 10);
}

#[test]
fn enumerate_renders_markdown_tables() {
    let out = pentafiber(&["enumerate", "--family", "3-3g"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.contains("K^2 = 3-3g: certified max genus 10"),
        "{text}"
    );
    assert!(text.contains("neither proved nor disproved"), "{text}");
}

#[test]
fn report_runs_a_scenario_file() {
    let dir = std::env::temp_dir().join("pentafiber-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let scenario = dir.join("scenario.pf");
    std::fs::write(
        &scenario,
        "[mvt]\ng = 12\nk2 = -34\nchains = 6\ne-max = 10\n\n[case]\nid = plane-sextic\ng = 6\n\n[output]\nformat = md\n",
    )
    .unwrap();
    let out = pentafiber(&["report", "--scenario", scenario.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("first failure at e = 5"), "{text}");
    assert!(text.contains("case plane-sextic"), "{text}");
    assert!(text.contains("| double points | 4 | 4 | pass |"), "{text}");
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let dir = std::env::temp_dir().join("pentafiber-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bounds.md");
    let out = pentafiber(&["bounds", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("max genus 11"));
}
