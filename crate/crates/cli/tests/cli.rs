use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_splineqi")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn column(csv_text: &str, name: &str) -> Vec<String> {
    let t = splineqi_cli::table::Table::from_csv(csv_text).unwrap();
    let i = t.columns.iter().position(|c| c == name).unwrap();
    t.rows.iter().map(|r| r[i].to_string()).collect()
}

#[test]
fn approximation_of_a_linear_function_is_exact() {
    let o = run(&["approximate", "--degree", "2", "--n", "64", "--fn", "poly:1,2"]);
    assert_eq!(o.status.code(), Some(0));
    let errs = column(&stdout(&o), "error");
    assert_eq!(errs.len(), 64 * 8 + 1);
    assert!(errs.iter().all(|e| e.parse::<f64>().unwrap().abs() <= 1e-12));
}

#[test]
fn approximation_of_runge_is_finite() {
    let o = run(&["approximate", "--degree", "3", "--n", "128", "--fn", "runge16", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.iter().all(|r| r["error"].as_f64().is_some_and(f64::is_finite)));
    assert_eq!(v["meta"]["degree"], "3");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["approximate", "--degree", "6", "--n", "64", "--fn", "runge16"]).status.code(), Some(2));
    let o = run(&["differentiate", "--degree", "4", "--n", "64", "--fn", "runge16"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("matrices defined for d=2,3 only"));
    assert_eq!(run(&["integrate", "--degree", "2", "--n", "64", "--fn", "runge16", "--baseline", "gauss"]).status.code(), Some(2));
    assert_eq!(run(&["roots", "--n", "16", "--fn", "nosuch"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn domain_errors_exit_3() {
    assert_eq!(run(&["approximate", "--degree", "5", "--n", "8", "--fn", "runge16"]).status.code(), Some(3));
    assert_eq!(run(&["integrate", "--degree", "4", "--n", "18", "--fn", "runge16", "--baseline", "nc4"]).status.code(), Some(3));
    assert_eq!(run(&["roots", "--n", "16", "--fn", "runge16", "--a", "1", "--b", "1"]).status.code(), Some(3));
}

#[test]
fn integration_table() {
    let o = run(&["integrate", "--degree", "2", "--n", "128,256,512,1024", "--fn", "runge16", "--baseline", "simpson", "--extrapolate"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("n,E I2,E I2 (m(e)),E simpson,E simpson (m(e)),E extrapolated-I2"));
    assert_eq!(column(&text, "E I2 (m(e))")[..3], ["-0.55(-9)", "-0.34(-10)", "-0.21(-11)"]);
    assert_eq!(column(&text, "E simpson (m(e))")[0], "0.73(-9)");
    let order: f64 = column(&text, "E extrapolated-I2")[4].parse().unwrap();
    assert!(order >= 4.8);
    let o = run(&["integrate", "--degree", "4", "--n", "128", "--fn", "expsin"]);
    assert_eq!(column(&stdout(&o), "E I4 (m(e))")[0], "0.24(-7)");
}

#[test]
fn differentiation_table() {
    let o = run(&["differentiate", "--degree", "2", "--n", "64..1024", "--fn", "runge16"]);
    assert_eq!(o.status.code(), Some(0));
    let eps: Vec<f64> = column(&stdout(&o), "eps")[..5].iter().map(|s| s.parse().unwrap()).collect();
    for (e, want) in eps.iter().zip([0.014009, 0.003138, 0.000767, 0.000190, 0.0000475]) {
        assert!((e - want).abs() / want < 0.01);
    }
    let o = run(&["differentiate", "--degree", "3", "--n", "64", "--fn", "poly:0,1"]);
    let eps: f64 = column(&stdout(&o), "eps")[0].parse().unwrap();
    assert!(eps < 1e-12);
}

#[test]
fn legendre_roots() {
    let o = run(&["roots", "--n", "64", "--fn", "legendre8", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["rows"].as_array().unwrap().len(), 8);
    let eps1 = v[1]["rows"][0]["eps"].as_f64().unwrap();
    assert!((eps1 + 0.000013).abs() < 1e-6);
    let o = run(&["roots", "--n", "16", "--fn", "poly:0,1", "--refine"]);
    let xs = column(&stdout(&o), "x");
    assert_eq!(xs.len(), 1);
    assert!(xs[0].parse::<f64>().unwrap().abs() < 1e-13);
}

#[test]
fn norms_table() {
    let o = run(&["norms", "--degree", "2", "--resolution", "64"]);
    assert_eq!(o.status.code(), Some(0));
    let norm: f64 = column(&stdout(&o), "norm")[0].parse().unwrap();
    assert!((norm - 1.4734).abs() < 1e-3);
    assert_eq!(run(&["norms", "--resolution", "0"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let args = ["integrate", "--degree", "3", "--n", "64..256", "--fn", "expsin", "--baseline", "simpson"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    assert_eq!(run(&with_out).status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), a.stdout);
}

#[test]
fn reproduce_paper_reports_every_check() {
    let o = run(&["reproduce-paper"]);
    let text = stdout(&o);
    let ids = column(&text, "id");
    assert_eq!(ids.len(), 12);
    let status = column(&text, "status");
    let failing = status.iter().filter(|s| *s == "FAIL").count();
    assert_eq!(o.status.code(), Some(if failing == 0 { 0 } else { 4 }));
    assert!(String::from_utf8_lossy(&o.stderr).contains("[PASS]  1 moment conditions"));
}
