use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use jsonschema::{Draft, JSONSchema};
use liec::graph::{are_isomorphic, gen_generalized_petersen, gen_ring_permutation, parse_graph6, GPSpec, RingPermutationSpec};
use liec::solver::{is_liec, EdgeColoring};
use serde_json::{json, Value};

fn liec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schemas")
}

fn load_schema(name: &str) -> Value {
    let text = std::fs::read_to_string(schema_dir().join(format!("{name}.schema.json"))).unwrap();
    serde_json::from_str(&text).unwrap()
}

fn check_schema(name: &str, payload: &Value) {
    let coloring = load_schema("coloring");
    let id = coloring["$id"].as_str().unwrap().to_string();
    let compiled = JSONSchema::options()
        .with_draft(Draft::Draft202012)
        .with_document(id, coloring)
        .compile(&load_schema(name))
        .expect("schema compiles");
    let msgs: Vec<String> = match compiled.validate(payload) {
        Ok(()) => return,
        Err(errors) => errors.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    panic!("{name} payload fails its schema: {msgs:?}\n{payload}");
}

/// Runs a command expected to succeed and validates its payload.
fn ok(schema: &str, args: &[&str]) -> Value {
    let out = liec(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    check_schema(schema, &v);
    v
}

fn exit_code(args: &[&str]) -> i32 {
    let out = liec(args);
    assert!(out.stdout.is_empty(), "failures print nothing on stdout");
    assert!(!out.stderr.is_empty(), "failures explain themselves on stderr");
    out.status.code().unwrap()
}

fn temp_file(tag: &str, text: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("liec-cli-{}-{tag}", std::process::id()));
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn chi_irr_examples() {
    assert_eq!(ok("chi-irr", &["chi-irr", "--builtin", "H0"]), json!({"chi_irr": 4}));
    assert_eq!(ok("chi-irr", &["chi-irr", "--gp", "7", "2"]), json!({"chi_irr": 3}));
    assert_eq!(
        ok("chi-irr", &["chi-irr", "--cycle", "5"]),
        json!({"chi_irr": null, "reason": "non-decomposable"})
    );
    assert_eq!(
        ok("chi-irr", &["chi-irr", "--gp", "7", "2", "--k-max", "2"]),
        json!({"chi_irr": null, "reason": "exceeds-k-max"})
    );
    assert_eq!(ok("chi-irr", &["chi-irr", "--cycle", "4"]), json!({"chi_irr": 2}));
}

#[test]
fn chi_irr_witness_is_a_valid_coloring() {
    let v = ok("chi-irr", &["chi-irr", "--gp", "7", "2", "--witness"]);
    let col = EdgeColoring::from_json(&v["coloring"].to_string()).unwrap();
    let g = gen_generalized_petersen(GPSpec::new(7, 2).unwrap()).unwrap();
    assert!(is_liec(&g, &col));
    assert_eq!(col.colors_used(), 3);
}

#[test]
fn chi_irr_budget_exhaustion_exits_3() {
    assert_eq!(exit_code(&["chi-irr", "--gp", "11", "2", "--budget", "5"]), 3);
    // A generous budget answers normally.
    assert_eq!(
        ok("chi-irr", &["chi-irr", "--gp", "7", "2", "--budget", "100000000"]),
        json!({"chi_irr": 3})
    );
}

#[test]
fn invalid_input_exits_2() {
    assert_eq!(exit_code(&["chi-irr", "--graph6", "!!"]), 2);
    assert_eq!(exit_code(&["chi-irr", "--builtin", "nope"]), 2);
    assert_eq!(exit_code(&["chi-irr", "--gp", "6", "3"]), 2);
    assert_eq!(exit_code(&["classify", "--graph6", "C?"]), 2);
    assert_eq!(exit_code(&["xi", "1"]), 2);
    assert_eq!(exit_code(&["table1", "9", "3"]), 2);
    assert_eq!(exit_code(&["color-ring", "--cycles", "2", "--phi", "0,1"]), 2);
    let missing = schema_dir().join("no-such-file");
    assert_eq!(exit_code(&["gen", "--file", missing.to_str().unwrap()]), 2);
    // clap rejects two graph sources at once, also with exit 2.
    assert_eq!(liec(&["gen", "--cycle", "4", "--builtin", "K4"]).status.code(), Some(2));
}

#[test]
fn verify_examples() {
    let c4 = r#"{"k":2,"edges":[{"u":0,"v":1,"c":1},{"u":1,"v":2,"c":1},{"u":2,"v":3,"c":2},{"u":0,"v":3,"c":2}]}"#;
    let f = temp_file("c4.json", c4);
    let v = ok("verify", &["verify", "--cycle", "4", "--coloring", f.to_str().unwrap()]);
    assert_eq!(v, json!({"valid": true, "violations": []}));

    let mono = r#"{"k":1,"edges":[{"u":0,"v":1,"c":1},{"u":1,"v":2,"c":1},{"u":0,"v":2,"c":1}]}"#;
    let f = temp_file("k3.json", mono);
    let v = ok("verify", &["verify", "--cycle", "3", "--coloring", f.to_str().unwrap()]);
    assert_eq!(v["valid"], json!(false));
    // Every edge of a monochromatic triangle joins two vertices of 1-degree 2.
    assert_eq!(v["violations"].as_array().unwrap().len(), 3);
    assert!(v["violations"].as_array().unwrap().iter().all(|x| x["degree"] == 2));

    let bad = r#"{"k":2,"edges":[{"u":0,"v":1,"c":1},{"u":1,"v":2,"c":1},{"u":2,"v":3,"c":2},{"u":0,"v":2,"c":2}]}"#;
    let f = temp_file("nonedge.json", bad);
    assert_eq!(exit_code(&["verify", "--cycle", "4", "--coloring", f.to_str().unwrap()]), 2);

    let f = temp_file("garbage.json", "not json");
    assert_eq!(exit_code(&["verify", "--cycle", "4", "--coloring", f.to_str().unwrap()]), 2);
}

#[test]
fn classify_examples() {
    let v = ok("classify", &["classify", "--graph6", "Bw"]);
    assert_eq!(v["verdict"], "FamilyT");
    assert_eq!(ok("classify", &["classify", "--cycle", "5"])["verdict"], "OddCycle");
    assert_eq!(ok("classify", &["classify", "--cycle", "6"])["verdict"], "Decomposable");
    assert_eq!(ok("classify", &["classify", "--builtin", "petersen"])["verdict"], "Decomposable");
    let path = temp_file("p3.txt", "4 3\n0 1\n1 2\n2 3\n");
    assert_eq!(ok("classify", &["classify", "--file", path.to_str().unwrap()])["verdict"], "OddPath");
}

#[test]
fn xi_examples() {
    assert_eq!(
        ok("xi", &["xi", "3"]),
        json!({"n": 3, "two_liec_exists": false, "chi_irr": 3})
    );
    let v = ok("xi", &["xi", "4", "--witness", "--digraph", "json"]);
    assert_eq!(v["chi_irr"], 2);
    assert_eq!(v["digraph"]["codes"].as_object().unwrap().len(), 16);
    let g = liec::graph::gen_xi(4).unwrap();
    assert!(is_liec(&g, &EdgeColoring::from_json(&v["coloring"].to_string()).unwrap()));
    let dot = ok("xi", &["xi", "5", "--digraph", "dot"]);
    assert!(dot["digraph"].as_str().unwrap().starts_with("digraph"));
}

#[test]
fn table1_and_scan_gp() {
    let v = ok("table1", &["table1", "10", "4"]);
    assert_eq!(v["count"], 1);
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 1);
    assert_eq!(ok("table1", &["table1", "10", "5"])["count"], 0);
    assert_eq!(ok("table1", &["table1", "12", "5"])["count"], 1);
    let v = ok("scan-gp", &["scan-gp", "--n-max", "11"]);
    assert_eq!(v["hits"], json!([{"n": 7, "k": 2}, {"n": 11, "k": 2}]));
}

#[test]
fn gen_round_trips() {
    let v = ok("gen", &["gen", "--gp", "5", "2"]);
    let g = parse_graph6(v["graph6"].as_str().unwrap()).unwrap();
    let p = gen_generalized_petersen(GPSpec::new(5, 2).unwrap()).unwrap();
    assert!(are_isomorphic(&g, &p));
    let v = ok("gen", &["gen", "--theta", "2", "1"]);
    assert_eq!((v["n"].as_u64(), v["m"].as_u64()), (Some(10), Some(11)));
    // A graph6 file feeds back in unchanged.
    let f = temp_file("g6.txt", &format!("{}\n", v["graph6"].as_str().unwrap()));
    assert_eq!(ok("gen", &["gen", "--file", f.to_str().unwrap()]), v);
}

#[test]
fn color_ring_outputs_verify() {
    let cases: [(&[&str], RingPermutationSpec); 3] = [
        (&["--gp", "7", "2"], GPSpec::new(7, 2).unwrap().as_ring_spec()),
        (&["--prism", "5"], RingPermutationSpec::prism(5).unwrap()),
        (
            &["--cycles", "3,4", "--phi", "0,3,1,4,2,5,6"],
            RingPermutationSpec::new(7, vec![3, 4], vec![0, 3, 1, 4, 2, 5, 6]).unwrap(),
        ),
    ];
    for (flags, spec) in cases {
        let mut args = vec!["color-ring"];
        args.extend_from_slice(flags);
        let v = ok("color-ring", &args);
        let g = gen_ring_permutation(&spec).unwrap();
        let col = EdgeColoring::from_json(&v["coloring"].to_string()).unwrap();
        assert!(is_liec(&g, &col), "{flags:?}");
        assert_eq!(v["spec"]["phi"], json!(spec.phi));
    }
}

#[test]
fn commands_are_deterministic() {
    for args in [
        &["chi-irr", "--gp", "7", "2", "--witness"][..],
        &["color-ring", "--xi", "3"],
        &["xi", "6", "--witness"],
        &["table1", "12", "4", "--jobs", "3"],
    ] {
        let a = liec(args);
        let b = liec(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    // Thread count never changes an answer.
    assert_eq!(
        liec(&["table1", "12", "3", "--jobs", "1"]).stdout,
        liec(&["table1", "12", "3", "--jobs", "4"]).stdout
    );
}

#[test]
fn pretty_flag_keeps_json_and_renders_grid() {
    let out = liec(&["table1", "10", "4", "--pretty"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["count"], 1);
    assert!(String::from_utf8_lossy(&out.stdout).contains('\n'));
    assert!(String::from_utf8_lossy(&out.stderr).contains(">= 4"));
}
