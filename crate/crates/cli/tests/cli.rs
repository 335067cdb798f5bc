use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bjsym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap().to_string())
        .collect()
}

fn schema() -> jsonschema::JSONSchema {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/report.schema.json");
    let text = std::fs::read_to_string(path).unwrap();
    jsonschema::JSONSchema::compile(&serde_json::from_str(&text).unwrap()).unwrap()
}

#[test]
fn decagon_has_property_p() {
    let v = json(&["props", "p", "--catalog", "decagon"]);
    assert_eq!(v["result"]["holds"], true);
    assert_eq!(v["command"], "props p");
}

#[test]
fn linf2_is_not_c_symmetric() {
    let v = json(&["symmetry", "global-c", "--catalog", "linf2"]);
    assert_eq!(v["result"]["symmetric"], false);
    assert_eq!(strings(&v["result"]["witness"]["x"]), ["1", "1"]);
    assert_eq!(strings(&v["result"]["witness"]["y"]), ["0", "1"]);
}

#[test]
fn hexagon_reverse_defect_is_one() {
    let v = json(&["ortho", "eps-b", "--catalog", "fig9-hexagon", "--x", "0,2", "--y", "-4/3,1"]);
    assert_eq!(v["result"]["value"], "1");
    assert_eq!(v["result"]["forward"], "0");
}

#[test]
fn reports_are_byte_stable() {
    for args in [
        &["symmetry", "global-d", "--catalog", "l2linf", "--samples", "256"][..],
        &["props", "r", "--catalog", "regular-polygon-10"][..],
        &["symmetry", "point", "--catalog", "l2-3", "--x", "0,0,1", "--samples", "128"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let t1 = run(&["symmetry", "global-d", "--catalog", "l2linf", "--samples", "256", "--threads", "1"]);
    let t4 = run(&["symmetry", "global-d", "--catalog", "l2linf", "--samples", "256", "--threads", "4"]);
    // Only the echoed arguments differ.
    let strip = |o: &Output| {
        let mut v: Value = serde_json::from_slice(&o.stdout).unwrap();
        v["arguments"] = Value::Null;
        v
    };
    assert_eq!(strip(&t1), strip(&t4));
}

#[test]
fn witnesses_round_trip_through_ortho_check() {
    let p1 = json(&["props", "p1", "--catalog", "fig9-hexagon"]);
    assert_eq!(p1["result"]["holds"], false);
    let w = &p1["result"]["witness"];
    let x = strings(&w["x"]).join(",");
    let y = strings(&w["y"]).join(",");
    let norm_x = json(&["ortho", "min", "--catalog", "fig9-hexagon", "--x", &x, "--y", &y]);
    assert_eq!(norm_x["result"]["min_value"], "1");
    let c = json(&["ortho", "check", "--catalog", "fig9-hexagon", "--x", &x, "--y", &y]);
    assert_eq!(c["result"]["orthogonal"], true);

    let g = json(&["symmetry", "global-c", "--catalog", "linf2"]);
    let gx = strings(&g["result"]["witness"]["x"]).join(",");
    let gy = strings(&g["result"]["witness"]["y"]).join(",");
    let c = json(&["ortho", "check", "--catalog", "linf2", "--x", &gx, "--y", &gy]);
    assert_eq!(c["result"]["orthogonal"], true);
    let back = json(&["ortho", "eps-b", "--catalog", "linf2", "--x", &gx, "--y", &gy]);
    assert_eq!(back["result"]["value"], g["result"]["value"]);
}

#[test]
fn space_files_match_catalog() {
    let file = json(&["props", "r", "--space", &data("decagon.json")]);
    let cat = json(&["props", "r", "--catalog", "decagon"]);
    assert_eq!(file["result"], cat["result"]);
    assert_eq!(file["result"]["value"], "8/7");
}

#[test]
fn operator_commands() {
    let t = data("linf2_diag.json");
    let a = data("linf2_proj.json");
    let n = json(&["op", "norm", "--t", &t]);
    assert_eq!(n["result"]["value"], "1");
    assert_eq!(n["result"]["method"], "vertex_enumeration");
    let o = json(&["op", "ortho", "--a", &a, "--t", &t]);
    assert_eq!(o["result"]["orthogonal"], false);
    let m = json(&["op", "make-pair", "--a", &a, "--t", &t]);
    assert_eq!(m["result"]["lambda_star"], "-2/3");
    assert_eq!(m["result"]["verified"], true);

    let tf = data("euclid_to_l2linf_t.json");
    let af = data("euclid_to_l2linf_a.json");
    let d = json(&["op", "dragomir-check", "--a", &af, "--t", &tf, "--samples", "512"]);
    assert_eq!(d["result"]["certified"], true);
}

#[test]
fn text_format_flattens() {
    let out = run(&["props", "r", "--catalog", "linf2", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("result.value: 2\n"), "{text}");
    assert!(text.contains("result.witness.x: ("), "{text}");
}

#[test]
fn precondition_errors_exit_2() {
    let cases: [&[&str]; 7] = [
        &["props", "p", "--catalog", "nope"],
        &["ortho", "check", "--catalog", "linf2", "--x", "1,1,1", "--y", "0,1"],
        &["ortho", "check", "--catalog", "linf2", "--x", "1,1/0", "--y", "0,1"],
        &["ortho", "check", "--catalog", "linf2", "--x", "1,a", "--y", "0,1"],
        &["props", "p"],
        &["props", "r", "--space", "/nonexistent/space.json"],
        &["props", "r", "--space", &data("broken.json")],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
    let out = run(&["ortho", "check", "--catalog", "linf2", "--x", "1,a", "--y", "0,1"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--x"));
}

#[test]
fn reports_validate_against_schema() {
    let schema = schema();
    let t = data("linf2_diag.json");
    let a = data("linf2_proj.json");
    let invocations: Vec<Vec<&str>> = vec![
        vec!["catalog", "list"],
        vec!["space", "info", "--catalog", "fig6-prism"],
        vec!["ortho", "check", "--catalog", "l2linf", "--x", "1,1", "--y", "0,1"],
        vec!["ortho", "min", "--catalog", "decagon", "--x", "2,2", "--y", "1,0"],
        vec!["ortho", "eps-d", "--catalog", "linf2", "--x", "1,1", "--y", "0,1"],
        vec!["ortho", "eps-b", "--catalog", "l2-2", "--x", "1,0", "--y", "3/5,4/5"],
        vec!["props", "p", "--catalog", "linf2"],
        vec!["props", "p", "--catalog", "linf3", "--x", "1,1,1"],
        vec!["props", "p1", "--catalog", "fig9-hexagon"],
        vec!["props", "r", "--catalog", "decagon"],
        vec!["props", "rx-check", "--catalog", "regular-polygon-6"],
        vec!["symmetry", "point", "--catalog", "linf3", "--x", "1,1/2,3/10"],
        vec!["symmetry", "global-c", "--catalog", "l2-2", "--samples", "128"],
        vec!["symmetry", "global-d", "--catalog", "l1-2", "--samples", "256"],
        vec!["op", "norm", "--t", &t],
        vec!["op", "ortho", "--a", &a, "--t", &t],
        vec!["op", "make-pair", "--a", &a, "--t", &t],
        vec!["op", "eps", "--a", &a, "--t", &t, "--samples", "256"],
        vec!["op", "dragomir-check", "--a", &a, "--t", &t, "--samples", "256"],
    ];
    for args in invocations {
        let v = json(&args);
        if let Err(errors) = schema.validate(&v) {
            let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
            panic!("{args:?}: {msgs:?}");
        };
    }
}
