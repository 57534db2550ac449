use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn twsurf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twsurf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = twsurf(&full);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn classify_paraboloid() {
    let r = json(&["classify", "--f", "u^2", "--g", "v^2"]);
    assert_eq!(r["result"]["classification"], "ParaboloidOfRevolution");
    assert_eq!(r["result"]["paraboloid"]["a"], "1");
    let residuals = r["result"]["paraboloid"]["relation_residuals"]
        .as_array()
        .unwrap();
    assert!(residuals.iter().all(|x| x == "0"));
}

#[test]
fn classify_cylinder_and_non_weingarten() {
    let r = json(&["classify", "--f", "u^3", "--g", "2*v"]);
    assert_eq!(r["result"]["classification"], "CylinderOrPlane");
    let r = json(&["classify", "--f", "u^3/3", "--g", "v^3/3"]);
    assert_eq!(r["result"]["classification"], "NotWeingarten");
    assert!(r["result"]["witness"]["leading_term"].is_string());
}

#[test]
fn classify_rejects_non_polynomial() {
    let out = twsurf(&["classify", "--f", "log(abs(cos(u)))", "--g", "v^2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.contains("not a polynomial") && err.contains("weingarten"),
        "{err}"
    );
}

#[test]
fn weingarten_verdicts_and_heat_map() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("heat.csv");
    let r = json(&[
        "weingarten",
        "--surface",
        "scherk",
        "--rect",
        "-1,1,-1,1",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(r["result"]["verdict"], "PassesJacobian");
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 1 + 21 * 21);
    assert!(text.starts_with("u,v,jacobian,score,status"));

    let r = json(&["weingarten", "--f", "u^3/3", "--g", "v^2/2"]);
    assert_eq!(r["result"]["verdict"], "Fails");

    let r = json(&["weingarten", "--surface", "blair"]);
    assert!(r["result"]["verdict"].is_string());
}

#[test]
fn weingarten_reports_skipped_cells() {
    let r = json(&[
        "weingarten",
        "--f",
        "u^(4/3)",
        "--g",
        "-v^(4/3)",
        "--rect",
        "0,1,0.5,1.5",
        "--n",
        "5",
    ]);
    assert_eq!(r["result"]["skipped"].as_array().unwrap().len(), 5);
}

#[test]
fn curvature_at_point() {
    let r = json(&["curvature", "--f", "u^2", "--g", "v^2", "--at", "1,1"]);
    let h = r["result"]["h"].as_f64().unwrap();
    assert!((h - 10.0 / 27.0).abs() < 1e-15);
    let oracle = r["result"]["k_ii_oracle"].as_f64().unwrap();
    assert!((oracle - 2.0 / 27.0).abs() < 1e-6);

    let r = json(&[
        "curvature",
        "--surface",
        "cylinder",
        "--f",
        "u^3",
        "--at",
        "0.5,0.5",
    ]);
    assert!(r["result"]["k_ii"].is_null());
    assert_eq!(r["result"]["k"].as_f64().unwrap(), 0.0);
}

#[test]
fn verify_targets() {
    let r = json(&["verify", "thmA"]);
    assert_eq!(r["result"]["passed"], true);
    let r = json(&["verify", "eq17"]);
    let off_axis = &r["result"]["targets"][0]["checks"][0]["measured"];
    assert!(off_axis.to_string().contains("(1, 1): a = b"));
    let out = twsurf(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_is_deterministic() {
    let a = twsurf(&["--json", "verify", "eq1", "--seed", "5"]);
    let b = twsurf(&["--json", "verify", "eq1", "--seed", "5"]);
    assert_eq!(a.stdout, b.stdout);
    let r: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(r["inputs"]["seed"], 5);
}

fn count_prefix(path: &Path, prefix: &str) -> usize {
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .filter(|l| l.starts_with(prefix))
        .count()
}

#[test]
fn mesh_export() {
    let dir = tempfile::tempdir().unwrap();
    let obj = dir.path().join("p.obj");
    let r = json(&[
        "mesh",
        "--surface",
        "paraboloid",
        "--rect",
        "-1,1,-1,1",
        "--n",
        "50",
        "--out",
        obj.to_str().unwrap(),
    ]);
    assert_eq!(r["result"]["vertices"], 2500);
    assert_eq!(r["result"]["triangles"], 2 * 49 * 49);
    assert_eq!(count_prefix(&obj, "v "), 2500);
    assert_eq!(count_prefix(&obj, "f "), 2 * 49 * 49);

    let csv = dir.path().join("s.csv");
    json(&[
        "mesh",
        "--surface",
        "scherk",
        "--rect",
        "-1.4,1.4,-1.4,1.4",
        "--n",
        "8",
        "--format",
        "csv",
        "--out",
        csv.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(&csv).unwrap();
    for line in text.lines().skip(1) {
        let xs: Vec<f64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        let z = xs[0].cos().abs().ln() - xs[1].cos().abs().ln();
        assert!((xs[2] - z).abs() < 1e-12);
    }

    let strip = dir.path().join("c.obj");
    let r = json(&[
        "mesh",
        "--f",
        "u^2",
        "--g",
        "0",
        "--n",
        "4",
        "--out",
        strip.to_str().unwrap(),
    ]);
    assert_eq!(r["result"]["omitted_vertices"], 0);
}

#[test]
fn mesh_of_empty_region_fails() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.obj");
    let o = twsurf(&[
        "mesh",
        "--f",
        "log(u)",
        "--g",
        "v",
        "--rect",
        "-2,-1,0,1",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn lwfit_scan_and_report_file() {
    let r = json(&["lwfit", "--surface", "cylinder"]);
    assert!((r["result"]["b"].as_f64().unwrap().abs() - 1.0).abs() < 1e-9);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.json");
    let out = twsurf(&[
        "scan",
        "--condition",
        "second-gaussian",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("p = 1/3, q = 1/3: a = -b"));
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["result"]["hits"].as_array().unwrap().len(), 20);
}

#[test]
fn gallery_parameters() {
    let r = json(&[
        "curvature",
        "--surface",
        "cmc",
        "--params",
        "1/2,1",
        "--at",
        "0.3,0.2",
    ]);
    assert!((r["result"]["h"].as_f64().unwrap().abs() - 0.5).abs() < 1e-12);
    let o = twsurf(&["curvature", "--surface", "enneper", "--at", "0,0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = twsurf(&[
        "curvature",
        "--surface",
        "scherk",
        "--params",
        "0",
        "--at",
        "0,0",
    ]);
    assert_eq!(o.status.code(), Some(2));
}
