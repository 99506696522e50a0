use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idealcalc"))
        .args(args)
        .env_remove("IDEALCALC_PRIME")
        .output()
        .expect("spawn idealcalc")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn schema() -> jsonschema::JSONSchema {
    let text = include_str!("../../../docs/schema.json");
    let v: Value = serde_json::from_str(text).unwrap();
    jsonschema::JSONSchema::compile(&v).expect("schema compiles")
}

fn assert_valid(s: &jsonschema::JSONSchema, v: &Value) {
    if let Err(errs) = s.validate(v) {
        let msgs: Vec<String> = errs.map(|e| format!("{e} at {}", e.instance_path)).collect();
        panic!("{msgs:?}\n{v:#}");
    }
}

#[test]
fn invariants_of_corpus_entries() {
    let v = json(&["invariants", "conic_line_p4"]);
    assert_eq!(v["invariants"]["nu"], 7);
    assert_eq!(v["invariants"]["alpha"], 2);
    assert_eq!(v["deficiencyModules"][0]["total"], 1);

    let v = json(&["invariants", "skew_lines_p3"]);
    assert_eq!((v["invariants"]["nu"].as_u64(), v["invariants"]["alpha"].as_u64()), (Some(4), Some(2)));
    assert_eq!(v["invariants"]["cohenMacaulay"], false);
    assert_eq!(v["deficiencyModules"][0]["total"], 1);

    let v = json(&["invariants", "ci_22_p3"]);
    assert_eq!(v["invariants"]["cohenMacaulay"], true);
    assert!(v["deficiencyModules"].as_array().unwrap().iter().all(|m| m["total"] == 0));
    assert_eq!(v["seed"], 1);
}

#[test]
fn invariants_from_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lines.ideal");
    std::fs::write(&path, "ring a b c d\na*c\na*d\nb*c\nb*d\n").unwrap();
    let v = json(&["invariants", path.to_str().unwrap()]);
    assert_eq!(v["invariants"]["nu"], 4);
    assert_eq!(v["ring"], serde_json::json!(["a", "b", "c", "d"]));
}

#[test]
fn compare_examples() {
    let v = json(&["compare", "line_x0x1_p3", "line_x2x3_p3"]);
    assert_eq!(v["productEqualsIntersection"], true);
    assert_eq!(v["serre"]["verdict"], "holds");

    let v = json(&["compare", "skew_lines_p3", "point_p3_generic"]);
    assert_eq!(v["productEqualsIntersection"], false);
    assert_eq!(v["serre"]["verdict"], "holds");
    assert_eq!(v["comparisonModule"]["dims"], v["tor1"]["dims"]);
    assert_valid(&schema(), &v["serre"]);

    let out = run(&["compare", "line_x0x1_p3", "line_x0x2_p3"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dimension 1"));
}

#[test]
fn resolve_formats() {
    let out = run(&["resolve", "skew_lines_p3", "--csv"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "index,degree,count\n0,0,1\n1,2,4\n2,3,4\n3,4,1\n");
    let v = json(&["resolve", "twisted_cubic_p3"]);
    assert_eq!(v["length"], 2);
    assert_eq!(v["regularity"], 1);
    let out = run(&["resolve", "twisted_cubic_p3", "--format", "text"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("total: 1 3 2"));
}

#[test]
fn cohomology_modules() {
    let v = json(&["cohomology", "skew_lines_p3", "--i", "1"]);
    assert_eq!(v["module"]["dims"], serde_json::json!({ "0": 1 }));
    assert_eq!(v["module"]["certified"], true);
    // Top cohomology of a point in P^3 is one-dimensional in every negative degree.
    let v = json(&["cohomology", "point_p3_generic", "--i", "1"]);
    assert_eq!(v["module"]["certified"], false);
    let (lo, hi) = (v["module"]["window"][0].as_i64().unwrap(), v["module"]["window"][1].as_i64().unwrap());
    let wide = json(&["cohomology", "point_p3_generic", "--i", "1", "--window-padding", "3"]);
    assert_eq!(wide["module"]["window"], serde_json::json!([lo - 3, hi + 3]));
    assert_eq!(wide["module"]["total"].as_i64().unwrap(), v["module"]["total"].as_i64().unwrap() + 3);
    assert_eq!(run(&["cohomology", "point_p3_generic", "--i", "3"]).status.code(), Some(2));
}

#[test]
fn verify_reports_validate() {
    let s = schema();
    let v = json(&["verify", "amasaki", "skew_lines_p3"]);
    assert_eq!(v["verdict"], "holds");
    assert_eq!((v["quantities"]["alpha"].as_i64(), v["quantities"]["rhs"].as_i64()), (Some(2), Some(1)));
    assert_valid(&s, &v);
    let v = json(&["verify", "serre", "ci_22_p3", "line_x0x1_p3"]);
    assert_valid(&s, &v);
    for id in ["extended_dubreil", "qb_codim2", "qb_general", "migliore", "resolution_structure", "euler_lower"] {
        let v = json(&["verify", id, "rational_quartic_p3"]);
        assert_eq!(v["verdict"], "holds", "{id}");
        assert_valid(&s, &v);
    }
    let v = json(&["verify", "qb_general", "conic_line_p4", "--seed", "9"]);
    assert_eq!(v["inputs"]["seeds"], serde_json::json!([9, 10, 11]));
    assert_valid(&s, &v);
    let v = json(&["verify", "dubreil_base", "maximal_square_p1"]);
    assert_eq!((v["quantities"]["nu"].as_i64(), v["quantities"]["rhs"].as_i64()), (Some(3), Some(3)));
}

#[test]
fn fuzz_campaign() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().to_str().unwrap();
    let v = json(&["fuzz", "dubreil_base", "--count", "500", "--seed", "7", "--witness-dir", w]);
    assert_eq!((v["holds"].as_u64(), v["violated"].as_u64()), (Some(500), Some(0)));
    // Draft-07 ignores siblings of `$ref`, so wrap the summary definition.
    let full: Value = serde_json::from_str(include_str!("../../../docs/schema.json")).unwrap();
    let wrapper = serde_json::json!({ "definitions": { "report": full }, "allOf": [{ "$ref": "#/definitions/report/definitions/fuzzSummary" }] });
    let compiled = jsonschema::JSONSchema::compile(&wrapper).unwrap();
    assert_valid(&compiled, &v);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0, "no witness without a violation");
}

#[test]
fn output_is_deterministic() {
    let a = run(&["verify", "migliore", "skew_lines_p3", "--seed", "3"]).stdout;
    let b = run(&["verify", "migliore", "skew_lines_p3", "--seed", "3"]).stdout;
    assert_eq!(a, b);
    let a = run(&["fuzz", "qb_general", "--count", "12", "--seed", "5"]).stdout;
    let b = run(&["fuzz", "qb_general", "--count", "12", "--seed", "5"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn prime_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_idealcalc"))
        .args(["invariants", "skew_lines_p3"])
        .env("IDEALCALC_PRIME", "31991")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["prime"], 31991);
    let v = json(&["invariants", "skew_lines_p3", "--prime", "101"]);
    assert_eq!(v["prime"], 101);
    assert_eq!(run(&["invariants", "skew_lines_p3", "--prime", "100"]).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "no_such_theorem", "skew_lines_p3"]).status.code(), Some(2));
    assert_eq!(run(&["fuzz", "no_such_theorem"]).status.code(), Some(2));
    assert_eq!(run(&["invariants", "/nonexistent/file.ideal"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.ideal");
    std::fs::write(&bad, "ring x y\nx^2 + y\n").unwrap();
    let out = run(&["invariants", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(run(&["invariants", "rational_quartic_p3", "--degree-guard", "3"]).status.code(), Some(3));
    assert_eq!(run(&["verify", "dubreil_base", "skew_lines_p3"]).status.code(), Some(4));
}
