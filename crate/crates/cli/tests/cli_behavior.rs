//! Contract tests for the binary: exit codes, determinism, and the
//! full-suite entry point.

use std::process::Command;

fn confsym(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_confsym"))
        .args(args)
        .output()
        .expect("binary launches");
    (
        String::from_utf8(out.stdout).expect("stdout is utf8"),
        String::from_utf8(out.stderr).expect("stderr is utf8"),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn full_suite_passes_under_default_budget() {
    let (stdout, _, code) = confsym(&["verify", "all", "--budget", "default"]);
    assert_eq!(code, 0, "full suite should verify:\n{stdout}");
    assert!(stdout.contains("verify all: 11/11 targets passed"));
    assert!(!stdout.contains("FAIL"));
}

#[test]
fn quick_budget_trims_but_still_passes() {
    let (stdout, _, code) = confsym(&["verify", "all", "--budget", "quick"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("verify all: 11/11 targets passed"));
    // Trimmed sweep: the full-range rows must not appear.
    assert!(!stdout.contains("row-recurrence n=9"));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["decompose", "--object", "hatw", "--rank", "3", "--size", "5", "--format", "json"];
    let (first, _, c1) = confsym(&args);
    let (second, _, c2) = confsym(&args);
    assert_eq!(c1, 0);
    assert_eq!(c2, 0);
    assert_eq!(first, second);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["decompose", "--object", "zeta", "--size", "3"][..],
        &["decompose", "--object", "lie", "--size", "5"][..],
        &["onset", "--object", "m", "--mu", "1,3"][..],
        &["onset", "--object", "conf", "--d", "3", "--i", "5"][..],
        &["verify", "nonsense"][..],
        &["verify", "euler", "--budget", "lavish"][..],
        &["beta", "--ranks", "1", "--size", "5", "--nmax", "7"][..],
        &["os", "--n", "1"][..],
        &["cache", "defrag"][..],
    ] {
        let (_, stderr, code) = confsym(args);
        assert_eq!(code, 2, "args {args:?} should be a usage error: {stderr}");
        assert!(!stderr.is_empty(), "usage errors explain themselves");
    }
}

#[test]
fn budget_limits_exit_three() {
    for args in [
        &["os", "--n", "8"][..],
        &["decompose", "--object", "ell", "--size", "20", "--max-degree", "10"][..],
        &["beta", "--ranks", "1", "--nmax", "12"][..],
        &["verify", "euler", "--nmax", "9", "--max-n", "6"][..],
    ] {
        let (_, stderr, code) = confsym(args);
        assert_eq!(code, 3, "args {args:?} should trip the budget: {stderr}");
    }
}

#[test]
fn onset_verbs_report_expected_values() {
    let (stdout, _, code) = confsym(&["onset", "--object", "m", "--mu", "2", "--nmax", "8"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "sharp onset 4\nbruteforce onset 4 over 0..=8 AGREE\n");

    let (stdout, _, code) = confsym(&["onset", "--object", "conf", "--d", "3", "--i", "4"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "sharp onset 6\n");

    let (stdout, _, code) =
        confsym(&["onset", "--object", "beta", "--ranks", "1", "--nmax", "7", "--format", "json"]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&stdout).expect("valid JSON");
    assert_eq!(report["observed_onset"], 4);
    assert_eq!(report["certified"], true);
}

#[test]
fn os_json_shape_is_stable() {
    let (stdout, _, code) = confsym(&["os", "--n", "4", "--format", "json"]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&stdout).expect("valid JSON");
    assert_eq!(report["n"], 4);
    assert_eq!(report["dims"], serde_json::json!([[3, 3]]));
    assert_eq!(
        report["top_character"]["terms"][0]["partition"],
        serde_json::json!([2, 1, 1])
    );
}

#[test]
fn cache_roundtrip_reports_counts() {
    // Touch the cache through a plethysm-heavy call, then clear it.
    let (_, _, code) = confsym(&["decompose", "--object", "ell", "--size", "6"]);
    assert_eq!(code, 0);
    let (stdout, _, code) = confsym(&["cache", "inspect"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("dir "));
    let (stdout, _, code) = confsym(&["cache", "clear"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("removed "));
}
