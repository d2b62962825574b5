//! End-to-end tests of the `weilrep` binary: exit codes, report schema,
//! determinism, and CSV shape.

use std::process::{Command, Output};

fn weilrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weilrep"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn passing_suite_exits_zero() {
    let out = weilrep(&["verify", "--suite", "jacobi"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("status: PASS"));
    assert!(stdout.contains("[pass] jacobi/reciprocity (3,5)"));
}

#[test]
fn failed_checks_exit_one() {
    // an impossibly tight tolerance forces floating residual failures
    let out = weilrep(&[
        "verify", "--suite", "dft", "--n", "5", "--backend", "float", "--tol", "1e-30",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("[FAIL]"));
    assert!(stdout.contains("status: FAIL"));
    assert!(stdout.contains("residual"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["verify", "--suite", "nope"],
        vec!["verify", "--suite", "dft", "--n", "4"],
        vec!["verify", "--suite", "dft", "--backend", "quantum"],
        vec!["table", "--kind", "nope"],
        vec!["verify"], // missing required --suite
    ] {
        let out = weilrep(&args);
        assert_eq!(out.status.code(), Some(2), "args: {args:?}");
    }
}

#[test]
fn json_report_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = weilrep(&[
        "verify",
        "--suite",
        "equivariance",
        "--n",
        "5",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["version"], "1");
    assert_eq!(v["suite"], "equivariance");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["params"]["backend"], "exact");
    assert_eq!(v["params"]["seed"], 1);
    assert_eq!(v["params"]["n"], 5);
    assert!(v["elapsed_ms"].is_u64());
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 4); // units of 5
    for c in checks {
        assert!(c["id"].is_string());
        assert_eq!(c["status"], "pass");
        assert!(c["lhs"].is_string() && c["rhs"].is_string());
        // exact backend carries no residuals
        assert!(c.get("residual").is_none());
    }
}

#[test]
fn float_backend_reports_residuals() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = weilrep(&[
        "verify",
        "--suite",
        "dft",
        "--n",
        "5",
        "--backend",
        "float",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["params"]["backend"], "float");
    for c in v["checks"].as_array().unwrap() {
        assert!(c["residual"].is_number(), "float checks carry residuals: {c}");
    }
}

#[test]
fn reports_are_stable_for_fixed_seed() {
    // identical flags and seed give identical reports, wall time aside
    let dir = tempfile::tempdir().unwrap();
    let mut reports = Vec::new();
    for i in 0..2 {
        let path = dir.path().join(format!("r{i}.json"));
        let out = weilrep(&[
            "verify",
            "--suite",
            "egorov",
            "--n",
            "5",
            "--seed",
            "42",
            "--json",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        let mut v: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        v["elapsed_ms"] = serde_json::Value::from(0u64);
        reports.push(serde_json::to_string(&v).unwrap());
    }
    assert_eq!(reports[0], reports[1]);
    // a different seed draws different random cases
    let path = dir.path().join("r2.json");
    let out = weilrep(&[
        "verify", "--suite", "egorov", "--n", "5", "--seed", "43", "--json",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let mut v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    v["elapsed_ms"] = serde_json::Value::from(0u64);
    assert_ne!(reports[0], serde_json::to_string(&v).unwrap());
}

#[test]
fn csv_tables_are_well_formed() {
    let out = weilrep(&["table", "--kind", "reciprocity", "--bound", "13"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains('\r'), "LF line endings only");
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "p,q,symbol_product,parity_rhs,agree");
    // primes {3,5,7,11,13}: C(5,2) = 10 pairs
    assert_eq!(lines.len(), 11);
    assert!(lines[1..].iter().all(|l| l.ends_with("true")));

    let out = weilrep(&["table", "--kind", "gauss-signs", "--bound", "7"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4); // header + p = 3, 5, 7
    assert!(lines[1].starts_with("3,"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("constants.csv");
    let out = weilrep(&[
        "table", "--kind", "constants", "--bound", "3", "--csv", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,c_exact,c_embed_re,c_embed_im,det_f_exact");
    // row for n = 3: C₃ = i√3 = 1 + 2ζ₃, det F₃ = −3 − 6ζ₃
    assert!(lines[2].starts_with("3,1 + 2*z3,"));
    assert!(lines[2].ends_with("-3 - 6*z3"));
}

#[test]
fn table_bound_one_degenerates() {
    let out = weilrep(&["table", "--kind", "constants", "--bound", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "n,c_exact,c_embed_re,c_embed_im,det_f_exact\n1,1,1.000000000,0.000000000,1\n");
}
