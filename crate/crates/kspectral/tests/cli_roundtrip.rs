//! End-to-end tests of the command-line interface: generator output,
//! CSV/JSON shapes, determinism, and exit codes.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_kspectral"))
}

fn run_ok(args: &[&str]) -> String {
    let out = bin().args(args).output().expect("spawn kspectral");
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 stdout")
}

fn run_expect_code(args: &[&str], code: i32) -> Output {
    let out = bin().args(args).output().expect("spawn kspectral");
    assert_eq!(
        out.status.code(),
        Some(code),
        "command {args:?}: expected exit {code}, got {:?}; stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

fn gen_matrix(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let path_str = path.to_str().unwrap().to_owned();
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.push("--out");
    full.push(&path_str);
    run_ok(&full);
    path_str
}

/// Data rows of a CSV output (comment and header lines stripped).
fn data_rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines()
        .filter(|l| !l.starts_with('#') && !l.is_empty())
        .skip(1)
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect()
}

#[test]
fn gen_writes_the_expected_matrices() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen_matrix(
        dir.path(),
        "pj.json",
        &["perturbed-jordan", "--n", "3", "--eps", "0.1"],
    );
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(parsed["n"], 3);
    let rows = parsed["rows"].as_array().unwrap();
    let entry = |i: usize, j: usize| {
        let pair = rows[i].as_array().unwrap()[j].as_array().unwrap();
        (pair[0].as_f64().unwrap(), pair[1].as_f64().unwrap())
    };
    assert_eq!(entry(0, 1), (1.0, 0.0));
    assert_eq!(entry(1, 2), (1.0, 0.0));
    assert_eq!(entry(2, 0), (0.1, 0.0));
    assert_eq!(entry(0, 0), (0.0, 0.0));
    assert_eq!(entry(2, 2), (0.0, 0.0));

    let jordan = gen_matrix(dir.path(), "j.json", &["jordan", "--n", "3"]);
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(jordan).unwrap()).unwrap();
    assert_eq!(parsed["rows"][2][0][0], 0.0);
    assert_eq!(parsed["rows"][0][1][0], 1.0);
}

#[test]
fn randut_generation_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = gen_matrix(
        dir.path(),
        "a.json",
        &["randut", "--n", "12", "--seed", "7"],
    );
    let b = gen_matrix(
        dir.path(),
        "b.json",
        &["randut", "--n", "12", "--seed", "7"],
    );
    assert_eq!(
        std::fs::read(a).unwrap(),
        std::fs::read(b).unwrap(),
        "same seed must give identical files"
    );
}

#[test]
fn gen_rejects_bad_dimension() {
    run_expect_code(&["gen", "jordan", "--n", "1"], 1);
}

#[test]
fn numrange_of_jordan2_is_the_half_radius_circle() {
    let dir = tempfile::tempdir().unwrap();
    let matrix = gen_matrix(dir.path(), "j2.json", &["jordan", "--n", "2"]);
    let csv = run_ok(&["numrange", "--matrix", &matrix, "--nodes", "128"]);
    let eig_lines: Vec<&str> = csv
        .lines()
        .filter(|l| l.starts_with("# eigenvalue"))
        .collect();
    assert_eq!(eig_lines.len(), 2);
    let rows = data_rows(&csv);
    assert_eq!(rows.len(), 128);
    for row in rows {
        let re: f64 = row[1].parse().unwrap();
        let im: f64 = row[2].parse().unwrap();
        assert!((re.hypot(im) - 0.5).abs() <= 1e-8);
    }
}

#[test]
fn numrange_error_exit_codes() {
    run_expect_code(&["numrange", "--matrix", "/nonexistent/m.json"], 1);

    let dir = tempfile::tempdir().unwrap();
    let normal = dir.path().join("normal.json");
    std::fs::write(
        &normal,
        r#"{"n": 2, "rows": [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [-1.0, 0.0]]]}"#,
    )
    .unwrap();
    run_expect_code(&["numrange", "--matrix", normal.to_str().unwrap()], 2);
}

#[test]
fn bounds_on_the_sharp_jordan_disk() {
    let dir = tempfile::tempdir().unwrap();
    let matrix = gen_matrix(dir.path(), "j3.json", &["jordan", "--n", "3"]);
    let json = run_ok(&[
        "bounds",
        "--matrix",
        &matrix,
        "--region",
        "circle:0,0,0.5",
        "--nodes",
        "256",
    ]);
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert!((parsed["two_plus_delta"].as_f64().unwrap() - 4.0).abs() <= 1e-8);
    assert_eq!(parsed["meta"]["region"], "circle:0,0,0.5");
}

#[test]
fn bounds_on_the_numerical_range_has_vanishing_delta() {
    let dir = tempfile::tempdir().unwrap();
    let matrix = gen_matrix(
        dir.path(),
        "pj.json",
        &["perturbed-jordan", "--n", "3", "--eps", "0.1"],
    );
    let json = run_ok(&[
        "bounds", "--matrix", &matrix, "--region", "nr", "--nodes", "256",
    ]);
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert!(parsed["delta"].as_f64().unwrap().abs() <= 1e-4);
    run_expect_code(
        &["bounds", "--matrix", &matrix, "--region", "circle:0,0,0.2"],
        1,
    );
}

#[test]
fn blaschke_reproduces_the_sharp_case_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let matrix = gen_matrix(dir.path(), "j3.json", &["jordan", "--n", "3"]);
    let args = [
        "blaschke",
        "--matrix",
        &matrix,
        "--region",
        "circle:0,0,0.8",
        "--restarts",
        "12",
        "--nodes",
        "128",
        "--seed",
        "77",
    ];
    let first = run_ok(&args);
    let parsed: serde_json::Value = serde_json::from_str(&first).unwrap();
    let norm = parsed["norm"].as_f64().unwrap();
    let upper = parsed["two_plus_delta"].as_f64().unwrap();
    assert!((norm - 1.5625).abs() <= 1e-9, "norm = {norm}");
    assert!((upper - 1.5625).abs() <= 1e-8, "2+delta = {upper}");
    assert!(norm <= upper + 1e-6, "lower bound must not exceed upper");
    for root in parsed["roots"].as_array().unwrap() {
        assert!(root[0].as_f64().unwrap().abs() <= 1e-6);
        assert!(root[1].as_f64().unwrap().abs() <= 1e-6);
    }
    assert_eq!(parsed["optimality"]["orthogonality_ok"], true);

    let second = run_ok(&args);
    assert_eq!(first, second, "same seed must give identical output");
}

#[test]
fn profile_emits_long_format_rows_per_circle() {
    let dir = tempfile::tempdir().unwrap();
    let matrix = gen_matrix(dir.path(), "j3.json", &["jordan", "--n", "3"]);
    let csv = run_ok(&[
        "profile", "--matrix", &matrix, "--radii", "0.5", "--nodes", "64",
    ]);
    let rows = data_rows(&csv);
    assert_eq!(rows.len(), 64);
    let expected = -2.0 / std::f64::consts::PI;
    for row in &rows {
        assert_eq!(row[0], "0", "single radius means circle_index 0");
        let lambda: f64 = row[3].parse().unwrap();
        assert!(
            (lambda - expected).abs() <= 1e-10,
            "profile must be constant"
        );
    }

    // Spectrum of the plain Jordan block is the single point 0, so there
    // is no default sweep to derive.
    run_expect_code(&["profile", "--matrix", &matrix], 1);
}

#[test]
fn verify_quick_passes() {
    let out = bin().args(["verify", "quick"]).output().expect("spawn");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 11);
}
