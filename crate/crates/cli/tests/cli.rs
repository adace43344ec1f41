use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rootgraded::report::RUN_REPORT_SCHEMA;
use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rootgraded"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_report(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--report", "json"]);
    let out = run(&full);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is a JSON report");
    (out.status.code().unwrap(), v)
}

fn fact<'a>(report: &'a Value, check: &str, key: &str) -> &'a str {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == check)
        .unwrap_or_else(|| panic!("no check {check}"))["facts"][key]
        .as_str()
        .unwrap()
}

fn without_timing(mut v: Value) -> Value {
    v["timing"] = Value::Null;
    v
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn a2_has_twelve_pairs_in_two_classes() {
    let (code, r) = json_report(&["roots", "--type", "A", "--rank", "2", "--a2-classes"]);
    assert_eq!(code, 0);
    assert_eq!(fact(&r, "A2-pair classes", "A2-pairs"), "12");
    assert_eq!(fact(&r, "A2-pair classes", "classes"), "2");
    assert_eq!(fact(&r, "root system A2", "roots"), "6");
}

#[test]
fn d4_pairs_form_one_class() {
    let (code, r) = json_report(&["roots", "--type", "D", "--rank", "4", "--a2-classes"]);
    assert_eq!(code, 0);
    assert_eq!(fact(&r, "A2-pair classes", "classes"), "1");
}

#[test]
fn unknown_root_system_is_an_input_error() {
    let out = run(&["roots", "--type", "B", "--rank", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("B3"));
}

#[test]
fn chevalley_verify_reports_dimension() {
    let (code, r) = json_report(&["chevalley", "--type", "D", "--rank", "4", "--verify"]);
    assert_eq!(code, 0);
    assert_eq!(fact(&r, "g(D4)", "dim"), "28");
    assert_eq!(r["checks"].as_array().unwrap().len(), 3);
}

#[test]
fn bundled_dialgebras_are_associative() {
    for name in ["k.json", "k2.json", "dual.json", "diff3.json"] {
        let out = run(&["dialg", "check", "--input", path(&data(name)), "--axioms", "all"]);
        assert_eq!(out.status.code(), Some(0), "{name}");
    }
}

#[test]
fn nonassociative_table_fails_with_a_counterexample() {
    let (code, r) = json_report(&["dialg", "check", "--input", path(&data("nonassociative.json")), "--axioms", "ass"]);
    assert_eq!(code, 1);
    let failed = r["checks"][0]["reports"]
        .as_array()
        .unwrap()
        .iter()
        .find(|a| a["holds"] == false)
        .expect("a failing axiom");
    let w = &failed["counterexample"];
    assert_eq!(w["tuple"].as_array().unwrap().len(), 3);
    assert_ne!(w["lhs"], w["rhs"]);
}

#[test]
fn malformed_inputs_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("truncated.json", "{\"dim\": 2, \"basis\": [\"a\", \"b\"],"),
        ("missing.json", "{\"dim\": 1, \"basis\": [\"a\"], \"left\": []}"),
        ("range.json", "{\"dim\": 1, \"basis\": [\"a\"], \"left\": [[0, 3, 0, \"1\"]], \"right\": []}"),
        ("rational.json", "{\"dim\": 1, \"basis\": [\"a\"], \"left\": [[0, 0, 0, \"1/0\"]], \"right\": []}"),
    ];
    for (name, text) in cases {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        let out = run(&["dialg", "check", "--input", path(&p)]);
        assert_eq!(out.status.code(), Some(2), "{name}");
        assert!(String::from_utf8_lossy(&out.stderr).contains(name), "{name}");
    }
    let out = run(&["dialg", "check", "--input", path(&dir.path().join("absent.json"))]);
    assert_eq!(out.status.code(), Some(2));
    let p = dir.path().join("truncated.json");
    let out = run(&["dialg", "check", "--input", path(&p)]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
}

#[test]
fn sl4_over_k2_round_trip() {
    let out = run(&["roundtrip", "--what", "sl", "--n", "4", "--dialgebra", path(&data("k2.json")), "--roots", "A3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn steinberg_and_tensor_round_trips() {
    let k2 = data("k2.json");
    let dual = data("dual.json");
    for args in [
        vec!["roundtrip", "--what", "stl", "--n", "3", "--dialgebra", path(&k2)],
        vec!["roundtrip", "--what", "tensor", "--dialgebra", path(&dual), "--roots", "A3"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn roots_must_match_the_matrix_size() {
    let out = run(&["roundtrip", "--what", "sl", "--n", "4", "--dialgebra", path(&data("k2.json")), "--roots", "A2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn build_then_recognize() {
    let dir = tempfile::tempdir().unwrap();
    let alg = dir.path().join("sl4.json");
    let out = run(&["build", "--what", "sl", "--n", "4", "--dialgebra", path(&data("k2.json")), "--out", path(&alg)]);
    assert_eq!(out.status.code(), Some(0));
    let index: Value = serde_json::from_slice(&std::fs::read(dir.path().join("sl4.index.json")).unwrap()).unwrap();
    assert_eq!(index["basis"].as_array().unwrap().len(), 30);
    assert_eq!(index["embedding"], "sl4.embedding.json");

    let recovered = dir.path().join("R.json");
    let report = dir.path().join("report.json");
    let out = run(&[
        "recognize",
        "--algebra",
        path(&alg),
        "--embedding",
        path(&dir.path().join("sl4.embedding.json")),
        "--roots",
        "A3",
        "--out",
        path(&recovered),
        "--report",
        path(&report),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let r: Value = serde_json::from_slice(&std::fs::read(&recovered).unwrap()).unwrap();
    assert_eq!(r["dim"], 2);
    let rep: Value = serde_json::from_slice(&std::fs::read(&report).unwrap()).unwrap();
    assert_eq!(rep["passed"], true);
    assert_eq!(fact(&rep, "type A relations", "kernel dim"), "0");

    let check = run(&["dialg", "check", "--input", path(&recovered)]);
    assert_eq!(check.status.code(), Some(0));
}

#[test]
fn wrong_embedding_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let alg = dir.path().join("sl3.json");
    run(&["build", "--what", "sl", "--n", "3", "--dialgebra", path(&data("k.json")), "--out", path(&alg)]);
    let emb_path = dir.path().join("sl3.embedding.json");
    let mut emb: Value = serde_json::from_slice(&std::fs::read(&emb_path).unwrap()).unwrap();
    let e = emb["e"].as_object_mut().unwrap();
    let first = e.keys().next().unwrap().clone();
    let scaled: Vec<Value> = e[&first]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| if c == "1/1" { Value::from("2") } else { c.clone() })
        .collect();
    e.insert(first, Value::from(scaled));
    std::fs::write(&emb_path, serde_json::to_vec(&emb).unwrap()).unwrap();
    let out = run(&["recognize", "--algebra", path(&alg), "--embedding", path(&emb_path), "--roots", "A2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn leibniz_homology_and_uce_of_a_tensor_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let alg = dir.path().join("g.json");
    let out = run(&["build", "--what", "tensor", "--dialgebra", path(&data("dual.json")), "--roots", "A2", "--out", path(&alg)]);
    assert_eq!(out.status.code(), Some(0));
    let (code, r) = json_report(&["leib", "homology", "--input", path(&alg), "--degree", "2"]);
    assert_eq!(code, 0);
    assert_eq!(fact(&r, "HL2", "dim"), "1");
    let total = dir.path().join("uce.json");
    let (code, r) = json_report(&["leib", "uce", "--input", path(&alg), "--out", path(&total)]);
    assert_eq!(code, 0);
    assert_eq!(fact(&r, "universal central extension", "dim"), "17");
    assert_eq!(run(&["leib", "check", "--input", path(&total)]).status.code(), Some(0));
}

#[test]
fn non_leibniz_table_is_a_check_failure() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    // [a,a] = b, [b,a] = a breaks [a,[a,a]] = [[a,a],a] − [[a,a],a].
    std::fs::write(&p, r#"{"dim": 2, "basis": ["a", "b"], "bracket": [[0, 0, 1, "1"], [1, 0, 0, "1"]]}"#).unwrap();
    assert_eq!(run(&["leib", "check", "--input", path(&p)]).status.code(), Some(1));
    assert_eq!(run(&["leib", "uce", "--input", path(&p)]).status.code(), Some(1));
}

#[test]
fn reports_are_deterministic_and_match_the_schema() {
    let schema: Value = serde_json::from_str(RUN_REPORT_SCHEMA).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("schema compiles");
    let (dual, bad) = (data("dual.json"), data("nonassociative.json"));
    let runs: [&[&str]; 3] = [
        &["roundtrip", "--what", "tensor", "--dialgebra", path(&dual), "--roots", "A2"],
        &["dialg", "check", "--input", path(&bad)],
        &["roots", "--type", "E", "--rank", "6", "--a2-classes"],
    ];
    for args in runs {
        let (_, first) = json_report(args);
        let (_, second) = json_report(args);
        assert_eq!(without_timing(first.clone()), without_timing(second), "{args:?}");
        if let Err(errors) = compiled.validate(&first) {
            let msgs: Vec<String> = errors.map(|e| format!("{e} at {}", e.instance_path)).collect();
            panic!("{args:?}: {msgs:?}");
        };
    }
}
