use std::process::{Command, Output};

use serde_json::Value;

fn schur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schur"))
        .args(args)
        .env_remove("SCHUR_WORD_CAP")
        .output()
        .expect("spawn schur")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = schur(&all);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    (out.status.code().unwrap(), v)
}

#[test]
fn dim_two_two() {
    let out = schur(&["dim", "2", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("count=10") && text.contains("rank=10") && text.contains("pass"), "{text}");
}

#[test]
fn dim_json_quantum_has_certificate() {
    let (code, v) = json(&["dim", "2", "3", "--quantum"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "1");
    assert_eq!(v["mode"], "quantum");
    assert_eq!(v["count"], 20);
    let cert = v["certificate"].as_array().unwrap();
    assert_eq!(cert.len(), 2);
    assert!(cert.iter().all(|c| c["rank"] == 20));
}

#[test]
fn verify_quantum_relations_lists_q1_to_q7() {
    let (code, v) = json(&["verify", "3", "2", "--quantum", "--suite", "relations"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
    let ids: Vec<&str> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|r| r["relations"].as_array().unwrap().iter().map(|x| x["id"].as_str().unwrap()))
        .collect();
    assert_eq!(ids, ["Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q7"]);
}

#[test]
fn hecke_three_three() {
    let text = stdout(&schur(&["hecke", "3", "3"]));
    assert!(text.contains("dim=6") && text.contains("expected=6") && text.contains("pass"), "{text}");
    let (code, v) = json(&["hecke", "3", "3", "--quantum"]);
    assert_eq!(code, 0);
    assert_eq!(v["generation"]["EF"], true);
    assert_eq!(v["generation"]["FE"], true);
}

#[test]
fn exit_status_matches_pass_flag() {
    for args in [
        vec!["dim", "3", "2"],
        vec!["verify", "2", "2", "--suite", "all"],
        vec!["structconst", "2", "2", "--left", "4", "--right", "9"],
        vec!["hecke", "2", "2", "--quantum"],
    ] {
        let (code, v) = json(&args);
        assert_eq!(code == 0, v["pass"] == true, "{args:?}");
    }
}

#[test]
fn basis_formats() {
    let (_, v) = json(&["basis", "2", "2", "--kind", "pbw"]);
    assert_eq!(v["kind"], "pbw(k0=2)");
    assert_eq!(v["count"], 10);
    assert_eq!(v["labels"][0]["flavor"], "PBW");

    let csv = stdout(&schur(&["basis", "3", "2", "--kind", "b2", "--format", "csv"]));
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("index,label"));
    assert_eq!(lines.count(), 45);

    let out = schur(&["basis", "2", "2", "--kind", "pbw", "--k0", "1"]);
    assert!(stdout(&out).contains("PBW|k0=1|"));
}

#[test]
fn structconst_scalars_are_strings() {
    let (code, v) = json(&["structconst", "2", "2", "--left", "3", "--right", "7", "--quantum"]);
    assert_eq!(code, 0);
    let t = &v["triples"][0];
    assert_eq!(t["integral"], true);
    assert!(t["coeffs"].as_object().unwrap().values().all(Value::is_string));
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = schur(&["dim", "2", "2", "--format", "json", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["command"], "dim");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["dim"],
        vec!["dim", "1", "2"],
        vec!["basis", "2", "2", "--kind", "nonsense"],
        vec!["basis", "2", "2", "--kind", "pbw", "--k0", "5"],
        vec!["verify", "2", "2", "--suite", "everything"],
        vec!["structconst", "2", "2", "--left", "0", "--right", "10"],
        vec!["hecke", "2", "3"],
        vec!["frobnicate"],
    ] {
        assert_eq!(schur(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn size_limit_exits_three() {
    let out = Command::new(env!("CARGO_BIN_EXE_schur"))
        .args(["dim", "2", "5"])
        .env("SCHUR_WORD_CAP", "16")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    assert_eq!(schur(&["dim", "2", "5", "--word-cap", "32"]).status.code(), Some(0));
    assert_eq!(schur(&["dim", "2", "5", "--word-cap", "31"]).status.code(), Some(3));
}

#[test]
fn json_is_byte_identical_across_runs() {
    let args = ["verify", "3", "2", "--suite", "all", "--format", "json"];
    assert_eq!(schur(&args).stdout, schur(&args).stdout);
}
