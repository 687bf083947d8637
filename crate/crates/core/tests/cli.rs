//! Process-level checks of the CLI contract: golden outputs, the
//! 0/1/2 exit-code discipline, JSON report shape, and byte-identical
//! reruns.

use std::process::{Command, Output};

fn schurlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schurlab"))
        .args(args)
        .env_remove("SCHURLAB_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn schur_examples() {
    let out = schurlab(&["schur", "--partition", "2,0", "--vars", "2", "--method", "both"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "u1 + u2\n");

    let out = schurlab(&["schur", "--partition", "1,0", "--vars", "2"]);
    assert_eq!(stdout(&out), "1\n");

    let out = schurlab(&["schur", "--partition", "2,2", "--vars", "2"]);
    assert_eq!(stdout(&out), "0\n");
}

#[test]
fn schur_rejects_malformed_input() {
    let out = schurlab(&["schur", "--partition", "2,0", "--vars", "3"]);
    assert_eq!(code(&out), 2);
    let out = schurlab(&["schur", "--partition", "2,x", "--vars", "2"]);
    assert_eq!(code(&out), 2);
    let out = schurlab(&["schur", "--vars", "2"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_cauchy_reference() {
    let out = schurlab(&[
        "verify", "cauchy", "--n", "2", "--u", "1,2", "--v", "1,3", "--degree", "3",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("match: yes"), "{text}");
    assert!(text.contains("0, 2, 24, 194"), "{text}");
}

#[test]
fn verify_frobenius_reference() {
    let out = schurlab(&[
        "verify", "frobenius", "--n", "2", "--c", "2", "--u", "1,2", "--v", "1,3",
        "--degree", "2",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("match: yes"), "{text}");
    assert!(text.contains("-2*t - 24*t^2"), "{text}");
}

#[test]
fn verify_tsymm_random_seeded() {
    let out = schurlab(&[
        "verify", "tsymm", "--n", "3", "--random", "--seed", "7", "--degree", "8",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("match: yes"), "{text}");
    assert!(text.contains("seed: 7 (xoshiro256**)"), "{text}");
}

#[test]
fn verify_phorn_explicit() {
    let out = schurlab(&[
        "verify", "phorn", "--u", "1,2,3", "--v", "1,3,4", "--poly", "1,2,0,4",
        "--degree", "10",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("match: yes"));
}

#[test]
fn verify_rejects_bad_input() {
    let out = schurlab(&["verify", "cauchy", "--u", "1,2", "--v", "1,2,3"]);
    assert_eq!(code(&out), 2);
    let out = schurlab(&["verify", "cauchy", "--u", "1,1", "--v", "1,2"]);
    assert_eq!(code(&out), 2);
    let out = schurlab(&["verify", "cauchy", "--n", "3"]);
    assert_eq!(code(&out), 2);
    let out = schurlab(&["verify", "tsymm", "--u", "1,2", "--v", "1,3"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn preserve_square_root_violates_at_three() {
    let out = schurlab(&[
        "preserve", "--power", "0.5", "--n", "3", "--a", "1", "--eps", "1", "--grid", "200",
    ]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("violations:"), "{text}");
    assert!(text.contains("verdict: FAIL"), "{text}");

    let out = schurlab(&[
        "preserve", "--power", "0.5", "--n", "2", "--a", "1", "--eps", "1", "--grid", "200",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("violations: none"));

    let out = schurlab(&[
        "preserve", "--power", "1.5", "--n", "3", "--a", "1", "--eps", "1", "--grid", "200",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("verdict: PASS"));
}

#[test]
fn preserve_polynomial_examples() {
    let out = schurlab(&["preserve", "--poly", "1,1,1", "--n", "3", "--a", "0", "--eps", "1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("verdict: PASS"));

    let out = schurlab(&["preserve", "--poly", "1,1,-1,1,1", "--n", "3", "--unbounded"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("sign check:"), "{text}");
    assert!(text.contains("sign-check"), "{text}");
}

#[test]
fn preserve_rejects_bad_input() {
    let out = schurlab(&["preserve", "--n", "3"]);
    assert_eq!(code(&out), 2);
    let out = schurlab(&["preserve", "--power", "0.5", "--poly", "1,1", "--n", "3"]);
    assert_eq!(code(&out), 2);
    let out = schurlab(&["preserve", "--power", "-0.5", "--n", "3", "--a", "1"]);
    assert_eq!(code(&out), 2);
    let out = schurlab(&["preserve", "--poly", "1,1", "--n", "3", "--a", "1", "--unbounded"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn admissible_examples() {
    let out = schurlab(&["admissible", "--profile", "exp", "--n", "2", "--tuple", "0,2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("not admissible"));

    let out = schurlab(&["admissible", "--profile", "monomial:2", "--n", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "ALL_ADMISSIBLE\n");

    let out = schurlab(&["admissible", "--profile", "exp", "--n", "3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("threshold (0,1,2), sum 3"));

    let out = schurlab(&["admissible", "--profile", "exp", "--n", "2", "--tuple", "0,1"]);
    assert_eq!(stdout(&out), "admissible\n");
}

#[test]
fn admissible_undecidable_is_exit_two() {
    let out = schurlab(&["admissible", "--profile", "1,0", "--n", "2", "--tuple", "0,3"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("undecidable"), "{err}");
}

#[test]
fn suite_smoke_passes() {
    let out = schurlab(&["suite", "--scale", "smoke", "--seed", "1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("all 9 criteria passed"), "{text}");
    for id in 1..=9 {
        assert!(text.contains(&format!("criterion {id} ")), "{text}");
    }
}

#[test]
fn json_reports_are_byte_identical_across_runs() {
    let args = [
        "verify", "cauchy", "--n", "3", "--random", "--seed", "11", "--degree", "6",
        "--format", "json",
    ];
    let a = schurlab(&args);
    let b = schurlab(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.contains("\"schema\": 1"), "{text}");
    assert!(text.contains("\"rng\": \"xoshiro256**\""), "{text}");

    let args = ["suite", "--scale", "smoke", "--seed", "3", "--format", "json"];
    let a = schurlab(&args);
    let b = schurlab(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_flag_writes_the_envelope() {
    let dir = std::env::temp_dir().join(format!("schurlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = schurlab(&[
        "schur", "--partition", "2,0", "--vars", "2",
        "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "u1 + u2\n");
    let raw = std::fs::read_to_string(&path).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&raw).unwrap();
    assert_eq!(parsed["schema"], 1);
    assert_eq!(parsed["report"]["polynomial"], "u1 + u2");
    assert_eq!(parsed["config"]["command"], "schur");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn series_file_round_trip() {
    let dir = std::env::temp_dir().join(format!("schurlab-series-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("f.json");
    std::fs::write(
        &path,
        r#"{"base": "0", "coeffs": ["1", "1", "1/2", "1/6"], "polynomial": true}"#,
    )
    .unwrap();
    let out = schurlab(&[
        "preserve", "--series-file", path.to_str().unwrap(), "--n", "3", "--a", "0",
        "--eps", "1", "--grid", "40",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("verdict: PASS"));

    std::fs::write(&path, r#"{"base": "0", "coeffs": []}"#).unwrap();
    let out = schurlab(&[
        "preserve", "--series-file", path.to_str().unwrap(), "--n", "3",
    ]);
    assert_eq!(code(&out), 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn dimension_bound_respects_env_override() {
    let args = [
        "verify", "cauchy", "--u", "1,2,3,4,5,6,7,8,9", "--v", "2,3,4,5,6,7,8,9,10",
        "--degree", "2",
    ];
    let out = schurlab(&args);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8(out.stderr).unwrap().contains("SCHURLAB_MAX_N"));

    let out = Command::new(env!("CARGO_BIN_EXE_schurlab"))
        .args(args)
        .env("SCHURLAB_MAX_N", "12")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    let out = Command::new(env!("CARGO_BIN_EXE_schurlab"))
        .args(["suite"])
        .env("SCHURLAB_MAX_N", "banana")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_codes_never_conflate_mismatch_and_usage() {
    // violation → 1, bad flag → 2, clean → 0, on the same subcommand
    let violation = schurlab(&["preserve", "--power", "0.5", "--n", "3", "--a", "1"]);
    assert_eq!(code(&violation), 1);
    let usage = schurlab(&["preserve", "--power", "0.5", "--n", "0", "--grid", "0"]);
    assert_eq!(code(&usage), 2);
    let clean = schurlab(&["preserve", "--power", "2", "--n", "3", "--a", "1"]);
    assert_eq!(code(&clean), 0);
}
