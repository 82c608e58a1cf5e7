//! Runs the `legcalc` binary and validates every JSON document it prints
//! against the schemas shipped in `schemas/`.

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn schemas_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schemas")
}

fn schema(name: &str) -> jsonschema::Validator {
    let text = std::fs::read_to_string(schemas_dir().join(name)).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn legcalc(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_legcalc")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

/// Runs, checks the exit code and validates the output document.
fn run_valid(args: &[&str], code: i32, schema_name: &str) -> Value {
    let (got, out) = legcalc(args);
    assert_eq!(got, code, "{args:?}\n{out}");
    let v: Value = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}\n{out}"));
    if let Err(e) = schema(schema_name).validate(&v) {
        panic!("{args:?} violates {schema_name}: {e}\n{out}");
    }
    v
}

const FIG8_MAX2: &str = r#"[{"tb":-3,"r":0},{"tb":-3,"r":0}]"#;

#[test]
fn farey() {
    let v = run_valid(&["farey", "path", "inf", "0"], 0, "farey_output.schema.json");
    assert_eq!(v["edges"], 1);
    run_valid(&["farey", "mediant", "inf", "-2"], 0, "farey_output.schema.json");
    run_valid(&["farey", "intersect", "1/2", "-1/3"], 0, "farey_output.schema.json");
    run_valid(&["farey", "contains", "-3", "-2", "0"], 1, "farey_output.schema.json");
    run_valid(&["farey", "path", "1/3", "1/3"], 2, "error.schema.json");
}

#[test]
fn range() {
    let v = run_valid(&["range", "show", "--knot", "torus:3:-7"], 0, "range_output.schema.json");
    assert_eq!(v["peaks"].as_array().unwrap().len(), 4);
    run_valid(&["range", "check", "--knot", "fig8", "--tb", "-5", "--r", "0"], 0, "range_output.schema.json");
    run_valid(&["range", "check", "--knot", "fig8", "--tb", "-5", "--r", "1"], 1, "range_output.schema.json");
    run_valid(&["range", "points", "--knot", "unknot", "--tb0", "-3"], 0, "range_output.schema.json");
    run_valid(&["range", "show", "--knot", "trefoil"], 2, "error.schema.json");
}

#[test]
fn torus() {
    let spec = ["-n", "2", "-p", "3", "-q", "7", "--sign", "-"];
    let with = |verb: &str, extra: &[&str]| -> Vec<String> {
        let mut v = vec!["torus".to_string(), verb.to_string()];
        v.extend(spec.iter().map(|s| s.to_string()));
        v.extend(extra.iter().map(|s| s.to_string()));
        v
    };
    let call = |args: Vec<String>, code: i32| {
        let a: Vec<&str> = args.iter().map(String::as_str).collect();
        run_valid(&a, code, if code == 2 { "error.schema.json" } else { "torus_output.schema.json" })
    };
    let v = call(with("reps", &[]), 0);
    assert_eq!(v["count"], 4);
    let v = call(with("realize", &["--link", r#"[{"tb":-21,"r":4},{"tb":-21,"r":2}]"#]), 1);
    assert_eq!(v["realizable"], false);
    let v = call(with("realize", &["--link", r#"[{"tb":-22,"r":3},{"tb":-21,"r":2}]"#]), 0);
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 1);
    let max = r#"[{"tb":-21,"r":2},{"tb":-21,"r":2}]"#;
    call(with("isotopic", &["--link", max, "--other", max]), 0);
    call(with("destab", &["--link", r#"[{"tb":-23,"r":2},{"tb":-22,"r":3}]"#]), 0);
    call(with("tb", &["--link", max]), 0);
    call(with("perms", &["--link", max, "--sigma", "[1,0]"]), 0);
    let v = call(with("perms", &["--link", max]), 0);
    assert_eq!(v["count"], 2);
    call(with("transverse", &["--sls", "[-17,-19]"]), 0);
    call(with("transverse", &["--sls", "[-15,-17]"]), 1);
    call(with("transverse", &[]), 0);
    call(with("realize", &["--link", r#"[{"tb":-21,"r":4}]"#]), 2);
}

#[test]
fn cable() {
    let base = ["--knot", "fig8", "-n", "2", "-p", "2", "-q", "-7"];
    let with = |verb: &str, extra: &[&str]| {
        let mut v = vec!["cable", verb];
        v.extend(base);
        v.extend(extra);
        v.into_iter().map(String::from).collect::<Vec<_>>()
    };
    let call = |args: Vec<String>, code: i32| {
        let a: Vec<&str> = args.iter().map(String::as_str).collect();
        run_valid(&a, code, if code == 2 { "error.schema.json" } else { "cable_output.schema.json" })
    };
    let v = call(with("regime", &[]), 0);
    assert_eq!(v["regime"], "NonintegralLesser");
    call(with("reps", &[]), 0);
    let link = r#"[{"tb":-14,"r":1},{"tb":-15,"r":2}]"#;
    call(with("realize", &["--link", link]), 0);
    call(with("perms", &["--link", link]), 0);
    call(with("perms", &["--link", link, "--sigma", "[1,0]"]), 1);
    let v = call(with("transverse", &[]), 0);
    assert_eq!(v["sl_max_component"], -13);
    call(with("maxtb", &[]), 0);
    let (code, _) = legcalc(&[
        "cable",
        "perms",
        "--knot",
        "torus:2:-3",
        "-n",
        "2",
        "-p",
        "1",
        "-q",
        "-6",
        "--link",
        r#"[{"tb":-6,"r":1},{"tb":-6,"r":1}]"#,
    ]);
    assert_eq!(code, 3);
    // The unknot is not uniformly thick.
    call(
        vec![
            "cable".into(),
            "reps".into(),
            "--knot".into(),
            "unknot".into(),
            "-n".into(),
            "2".into(),
            "-p".into(),
            "1".into(),
            "-q".into(),
            "-3".into(),
        ],
        2,
    );
}

#[test]
fn knot_file() {
    let dir = std::env::temp_dir().join(format!("legcalc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("k.json");
    std::fs::write(
        &good,
        r#"{"name":"m(5_2)","peaks":[{"tb":1,"r":0}],"uniformly_thick":true,"legendrian_simple":true}"#,
    )
    .unwrap();
    let text = std::fs::read_to_string(&good).unwrap();
    schema("knot_type.schema.json").validate(&serde_json::from_str(&text).unwrap()).unwrap();
    let g = good.to_str().unwrap();
    let v = run_valid(&["cable", "regime", "--knot-file", g, "-p", "2", "-q", "3"], 0, "cable_output.schema.json");
    assert_eq!(v["regime"], "Greater");

    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"name":"x","peaks":[{"tb":1,"r":1}],"uniformly_thick":true,"legendrian_simple":true}"#)
        .unwrap();
    let v = run_valid(&["range", "show", "--knot-file", bad.to_str().unwrap()], 2, "error.schema.json");
    assert_eq!(v["error"]["kind"], "json");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn malformed_json_points_at_path() {
    let v = run_valid(
        &[
            "torus",
            "realize",
            "-n",
            "2",
            "-p",
            "2",
            "-q",
            "3",
            "--sign",
            "+",
            "--link",
            r#"[{"tb":1,"r":0},{"tb":1,"rr":0}]"#,
        ],
        2,
        "error.schema.json",
    );
    assert_eq!(v["error"]["path"], "[1]");
    let v = run_valid(&["front", "invariants", "--front", r#"{"events":[["L",0],["Q",0]]}"#], 2, "error.schema.json");
    assert_eq!(v["error"]["path"], "events[1]");
}

#[test]
fn fronts() {
    let dir = std::env::temp_dir().join(format!("legcalc-fronts-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let svg = dir.join("out.svg");
    let v = run_valid(
        &["front", "cable", "--knot", "fig8", "-n", "3", "-p", "1", "-q", "-3", "--svg", svg.to_str().unwrap()],
        0,
        "front_output.schema.json",
    );
    assert_eq!(v["components"], serde_json::json!([{"tb": -3, "r": 0}, {"tb": -3, "r": 0}, {"tb": -3, "r": 0}]));
    assert_eq!(v["linking"][0][1], -3);
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
    run_valid(
        &["front", "torus", "-n", "3", "-p", "2", "-q", "3", "--sign", "+", "--ascii"],
        0,
        "front_output.schema.json",
    );
    run_valid(
        &["front", "torus", "-n", "2", "-p", "2", "-q", "5", "--sign", "-", "--rot", "-3"],
        0,
        "front_output.schema.json",
    );
    let v = run_valid(&["front", "twisted", "--knot", "unknot", "-n", "3", "-t", "2"], 0, "front_output.schema.json");
    let mut tbs: Vec<i64> = v["components"].as_array().unwrap().iter().map(|c| c["tb"].as_i64().unwrap()).collect();
    tbs.sort();
    assert_eq!(tbs, [-5, -5, -1]);
    let word = serde_json::to_string(&v["front"]).unwrap();
    run_valid(&["front", "invariants", "--front", &word], 0, "front_output.schema.json");
    schema("front_word.schema.json").validate(&v["front"]).unwrap();

    let (code, out) = legcalc(&["front", "render", "--front", r#"{"events":[["L",0],["R",0]]}"#, "--format", "ascii"]);
    assert_eq!(code, 0);
    assert_eq!(out, " /--\\\n<    >\n \\--/\n");
    run_valid(
        &["front", "cable", "--knot", "fig8", "-n", "2", "-p", "1", "-q", "-4", "--base-r", "0"],
        2,
        "error.schema.json",
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn explain_and_determinism() {
    let args = ["--explain", "cable", "perms", "--knot", "fig8", "-n", "2", "-p", "1", "-q", "-3", "--link", FIG8_MAX2];
    let a = legcalc(&args);
    let b = legcalc(&args);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a.1).unwrap();
    assert!(!v["explain"].as_str().unwrap().is_empty());
    schema("cable_output.schema.json").validate(&v).unwrap();
}

#[test]
fn help_and_usage() {
    let (code, out) = legcalc(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("torus"));
    run_valid(&["torus"], 2, "error.schema.json");
    run_valid(&["torus", "reps", "-n", "2", "-p", "2", "-q", "4", "--sign", "-"], 2, "error.schema.json");
}
