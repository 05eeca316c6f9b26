// Copyright 2026 The ybe-l1 Contributors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, SQRT_2};
use std::process::{Command, Output};

const BETA_STAR: f64 = 0.615_479_708_670_387_4;

fn ybe(args: &[&str]) -> Output {
    ybe_env(args, &[])
}

fn ybe_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ybe"));
    cmd.args(args).env_remove("YBE_THREADS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

/// Rows of a CSV body (header skipped), split on commas.
fn csv_rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines().skip(1).map(|l| l.split(',').map(str::to_string).collect()).collect()
}

fn field(row: &[String], i: usize) -> f64 {
    row[i].parse().unwrap()
}

/// Value following `key` in a `key  v1 v2 ...` report.
fn report(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(key).filter(|rest| rest.starts_with(' ')))
        .unwrap_or_else(|| panic!("no {key} in\n{text}"))
        .trim()
        .to_string()
}

#[test]
fn verify_all_passes() {
    let out = ybe(&["verify", "--suite", "all", "--tol", "1e-12"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.lines().last().unwrap().contains(" 0 above tol"));
    for suite in ["tl", "braid", "ybe", "constraint", "smatrix", "reduction"] {
        assert!(text.lines().any(|l| l.split_whitespace().nth(1) == Some(suite)), "{suite}");
    }
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--suite", "ybe", "--family", "type1", "--samples", "1000", "--seed", "7"];
    let a = ybe(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, ybe(&args).stdout);
    assert_eq!(a.stdout, ybe_env(&args, &[("YBE_THREADS", "1")]).stdout);
    assert!(!stdout(&a).contains("type2"));
    let other_seed = ybe(&["verify", "--suite", "ybe", "--family", "type1", "--samples", "1000", "--seed", "8"]);
    assert_ne!(a.stdout, other_seed.stdout);
}

#[test]
fn verify_detects_perturbation() {
    let out = ybe(&["verify", "--suite", "tl", "--perturb", "1e-3"]);
    assert_eq!(code(&out), 1);
    let failing: Vec<_> = stdout(&out).lines().filter(|l| l.starts_with("FAIL")).map(str::to_string).collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().all(|l| l.contains("type1")));
    let idem = failing.iter().find(|l| l.contains("type1 3 strands: T_i^2")).unwrap();
    let r: f64 = idem.split_whitespace().last().unwrap().parse().unwrap();
    assert!(r > 1e-3 && r < 1e-2, "{r}");
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(code(&ybe(&["verify", "--suite", "nope"])), 2);
    assert_eq!(code(&ybe(&["verify", "--tol", "-1"])), 2);
    assert_eq!(code(&ybe(&["landscape", "--fn", "l2"])), 2);
    assert_eq!(code(&ybe(&["landscape", "--fn", "l1_wigner", "--eta", "0:1:5"])), 2);
    assert_eq!(code(&ybe(&["landscape", "--fn", "l1_S3", "--theta", "0:1:5"])), 2);
    assert_eq!(code(&ybe(&["state", "--eta", "1.0"])), 2);
    assert_eq!(code(&ybe_env(&["state", "--eta", "0", "--beta", "0"], &[("YBE_THREADS", "0")])), 2);
}

// The axis bounds are the rounded values a user would type.
#[allow(clippy::approx_constant)]
#[test]
fn landscape_grid_shape() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grid.csv");
    let p = path.to_str().unwrap();
    let out = ybe(&["landscape", "--fn", "l1_S3", "--eta", "0:6.2832:200", "--beta", "-1.5708:1.5708:200", "--out", p]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().next(), Some("eta,beta,value"));
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 40_000);
    assert_eq!((field(&rows[1], 0), field(&rows[1], 1)), (0.0, -1.5708 + 3.1416 / 199.0));
    assert_eq!(field(&rows[200], 0), 6.2832 / 199.0);
    let max = rows.iter().map(|r| field(r, 2)).fold(0.0, f64::max);
    assert!((max - 2.0).abs() < 1e-3, "{max}");
    // Only the output file is left behind.
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn landscape_sections() {
    let out = ybe(&["landscape", "--fn", "l1_S3", "--section", "beta=0.61548", "--eta", "0:6.2832:1000"]);
    assert_eq!(code(&out), 0);
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows.len(), 1000);
    assert!(rows.iter().all(|r| field(r, 1) == 0.61548));
    let best = rows.iter().max_by(|a, b| field(a, 2).total_cmp(&field(b, 2))).unwrap();
    assert!((field(best, 2) - 2.0).abs() < 1e-4);
    let eta = field(best, 0);
    assert!((eta - FRAC_PI_3).abs() < 0.01 || (eta - 2.0 * FRAC_PI_3).abs() < 0.01, "{eta}");

    let out = ybe(&["landscape", "--fn", "vn_Sprime", "--section", "beta=beta_star", "--eta", "pi/6:pi/2:3"]);
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows.len(), 3);
    assert!((field(&rows[1], 0) - FRAC_PI_3).abs() < 1e-15);
    assert!((field(&rows[1], 2) - 1.0).abs() < 1e-12);
    assert!((field(&rows[2], 2) - (3f64.log2() - 2.0 / 3.0)).abs() < 1e-12);

    let out = ybe(&["landscape", "--fn", "vn_Sprime", "--section", "beta=0.61548"]);
    let rows = csv_rows(&stdout(&out));
    let peak = rows.iter().map(|r| field(r, 2)).fold(0.0, f64::max);
    assert!((peak - 1.0).abs() < 1e-3, "{peak}");
}

#[test]
fn landscape_json_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("curve.json");
    let p = path.to_str().unwrap();
    let args = ["landscape", "--fn", "l1_wigner", "--theta", "0:pi/2:5", "--out", p];
    assert_eq!(code(&ybe(&args)), 0);
    let first = std::fs::read(&path).unwrap();
    assert_eq!(code(&ybe(&args)), 0);
    assert_eq!(first, std::fs::read(&path).unwrap());

    let doc: serde_json::Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(doc["fn"], "l1_wigner");
    let axis = &doc["axes"][0];
    assert_eq!(axis["name"], "theta");
    assert_eq!(axis["n"], 5);
    assert_eq!(axis["stop"].as_f64().unwrap(), FRAC_PI_2);
    let values: Vec<f64> = doc["values"].as_array().unwrap().iter().map(|v| v.as_f64().unwrap()).collect();
    assert_eq!(values.len(), 5);
    assert!((values[2] - SQRT_2).abs() < 1e-15);
    assert!(doc["meta"]["version"].is_string());
    assert!(doc["meta"].get("seed").is_some() && doc["meta"].get("tol").is_some());
    // Every number carries 17 significant digits.
    let text = String::from_utf8(first).unwrap();
    assert!(text.contains("1.4142135623730949e0") || text.contains("1.4142135623730951e0"));
}

#[test]
fn unwritable_output_path() {
    let out = ybe(&["landscape", "--fn", "l1_S3", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("cannot write"));
}

#[test]
fn extrema_default_run() {
    let out = ybe(&["extrema"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("eta,beta,value,kind,max_axis,kink_eta,kink_beta,class"));
    let rows = csv_rows(&text);
    let near = |r: &Vec<String>, eta: f64, beta: f64| (field(r, 0) - eta).abs() < 1e-4 && (field(r, 1) - beta).abs() < 1e-4;
    let ghz = rows.iter().find(|r| near(r, FRAC_PI_3, BETA_STAR)).expect("GHZ row");
    assert!((field(ghz, 2) - 2.0).abs() < 1e-6);
    assert_eq!((ghz[3].as_str(), ghz[7].as_str()), ("local-max", "GHZ-class"));
    let w = rows.iter().find(|r| near(r, FRAC_PI_2, BETA_STAR)).expect("W row");
    assert!((field(w, 2) - 3f64.sqrt()).abs() < 1e-6);
    assert_eq!((w[3].as_str(), w[4].as_str(), w[5].as_str()), ("saddle", "beta", "true"));
    assert_eq!(w[7], "W-class");
}

#[test]
fn extrema_one_dimensional_and_json() {
    let out = ybe(&["extrema", "--fn", "l1_wigner"]);
    assert_eq!(code(&out), 0);
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows.len(), 1);
    assert!((field(&rows[0], 0) - FRAC_PI_4).abs() < 1e-4);
    assert!((field(&rows[0], 1) - SQRT_2).abs() < 1e-9);
    assert_eq!(rows[0][2], "local-max");

    let out = ybe(&["extrema", "--fn", "vn_xi", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let points = doc["points"].as_array().unwrap();
    assert_eq!(points.len(), 1);
    assert_eq!(points[0]["kind"], "local-max");
    assert!((points[0]["value"].as_f64().unwrap() - 1.0).abs() < 1e-9);
}

#[test]
fn extrema_empty_domain_is_usage_error() {
    for args in [
        &["extrema", "--eta", "0:1:2"][..],
        &["extrema", "--beta", "1:0:50"],
        &["extrema", "--fn", "l1_wigner", "--theta", "0.5:0.5:10"],
    ] {
        assert_eq!(code(&ybe(args)), 2, "{args:?}");
    }
}

#[test]
fn state_reports() {
    let text = stdout(&ybe(&["state", "--eta", "1.0472", "--beta", "0.61548"]));
    assert_eq!(report(&text, "class"), "GHZ-class");
    assert!((report(&text, "tangle").parse::<f64>().unwrap() - 1.0).abs() < 1e-6);
    assert!((report(&text, "l1").parse::<f64>().unwrap() - 2.0).abs() < 1e-6);

    let out = ybe(&["state", "--thetas", "0.3927,0.95532,1.1781"]);
    assert_eq!(code(&out), 0);
    assert_eq!(report(&stdout(&out), "class"), "W-class");

    let text = stdout(&ybe(&["state", "--eta", "0", "--beta", "0"]));
    assert_eq!(report(&text, "class"), "product");
    assert!(text.contains("|000>      1.0000000000000000e0 0.0000000000000000e0 1.0000000000000000e0"));

    let out = ybe(&["state", "--thetas", "0.1,0.2,0.3"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("constraint"));
}

#[test]
fn reduce_reports() {
    let out = ybe(&["reduce", "--thetas", "0,0.7854,0.7854"]);
    assert_eq!(code(&out), 0);
    let residual: f64 = report(&stdout(&out), "residual").parse().unwrap();
    assert!(residual < 1e-11);

    let out = ybe(&["reduce", "--thetas", "0.1,0.2,0.3"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(err.contains("constraint violated: residual"), "{err}");

    let args = ["reduce", "--random", "100", "--seed", "3"];
    let out = ybe(&args);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 102);
    let worst: f64 = text.lines().last().unwrap().split_whitespace().nth(2).unwrap().parse().unwrap();
    assert!(worst < 1e-10);
    assert_eq!(out.stdout, ybe_env(&args, &[("YBE_THREADS", "2")]).stdout);
}
