use std::io::Write;
use std::path::PathBuf;
use std::process::Command;

use motivic_core::ring::{parse, AtomTable};
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).to_str().unwrap().to_string()
}

fn motivic(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_motivic")).args(args).output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let (out, err, code) = motivic(&all);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn ring_eval_examples() {
    assert_eq!(motivic(&["ring", "eval", "L^{1/2}*L^{1/2}"]), ("L\n".into(), String::new(), 0));
    assert_eq!(motivic(&["ring", "eval", "0"]).0, "0\n");
    assert_eq!(motivic(&["ring", "eval", "[GM]*[PT]"]).0, "-1 + L\n");
    assert_eq!(motivic(&["ring", "eval", "[MU2]*[MU3]"]).2, 3);
    assert_eq!(motivic(&["ring", "eval", "(L-1)^0"]).2, 2);
    assert_eq!(motivic(&["ring", "eval", "[NOPE]"]).2, 2);
    assert_eq!(motivic(&["ring", "eval", "1 +"]).2, 2);
}

#[test]
fn ring_eval_json() {
    let v = json(&["ring", "eval", "L^{3/2} - [MU2]"]);
    assert!(v["weight"].is_null());
    assert_eq!(v["euler"], -3);
    assert_eq!(json(&["ring", "eval", "L^{3/2} - 1"])["weight"], "q^{3/2} - 1");
    let atoms = data("atoms.json");
    let v = json(&["ring", "eval", "[F6] + U(or)", "--atoms", &atoms]);
    assert_eq!(v["euler"], -7);
    assert!(v["weight"].is_null());
    let table = AtomTable::from_json(&std::fs::read_to_string(&atoms).unwrap()).unwrap();
    let back = parse(v["class"].as_str().unwrap(), &table).unwrap();
    assert_eq!(back, parse("U(or) + [F6]", &table).unwrap());
}

#[test]
fn mu2_rewrite_flag() {
    assert_eq!(motivic(&["--enable-mu2-rewrite", "ring", "eval", "[MU2]"]).0, "1 - L^{1/2}\n");
    assert_eq!(motivic(&["ring", "eval", "[MU2]"]).0, "[MU2]\n");
}

#[test]
fn atoms_without_euler_report_undefined() {
    let mut atoms = tempfile::NamedTempFile::new().unwrap();
    write!(atoms, r#"{{"atoms":[{{"name":"X"}}]}}"#).unwrap();
    let atoms = atoms.path().to_str().unwrap();
    assert_eq!(motivic(&["ring", "eval", "[X]", "--atoms", atoms]), ("[X]\n".into(), String::new(), 0));
    assert!(json(&["ring", "eval", "[X]", "--atoms", atoms])["euler"].is_null());
    let mut strata = tempfile::NamedTempFile::new().unwrap();
    write!(strata, r#"[{{"name":"s","index":1,"motive":"[X]"}}]"#).unwrap();
    let strata = strata.path().to_str().unwrap();
    let (out, _, code) = motivic(&["localize", "--strata", strata, "--atoms", atoms]);
    assert_eq!(code, 0);
    assert!(out.starts_with("L^{-1/2}*[X]\neuler: undefined"), "{out}");
    let (_, err, code) = motivic(&["localize", "--strata", &data("strata.json")]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn x3_model() {
    let x3 = data("x3.json");
    assert_eq!(motivic(&["snc", "nearby", "--model", &x3]).0, "[MU3]\n");
    assert_eq!(motivic(&["snc", "volume", "--model", &x3]).0, "L^{-1}*[MU3]\n");
    assert_eq!(motivic(&["snc", "vanishing", "--model", &x3]).0, "L^{-1/2} - L^{-1/2}*[MU3]\n");
    let series = motivic(&["snc", "series", "--order", "6", "--model", &x3]).0;
    let lines: Vec<&str> = series.lines().collect();
    assert_eq!(lines.len(), 7);
    for (m, line) in lines.iter().enumerate().skip(1) {
        let integral = motivic(&["snc", "integrate", "--m", &m.to_string(), "--model", &x3]).0;
        assert_eq!(&format!("T^{m}: {}", integral.trim_end()), line);
    }
    assert_eq!(motivic(&["snc", "integrate", "--m", "0", "--model", &x3]).2, 2);
}

#[test]
fn cusp_model() {
    let (cusp, atoms) = (data("cusp.json"), data("atoms.json"));
    let v = json(&["snc", "vanishing", "--model", &cusp, "--atoms", &atoms]);
    let e = json(&["ring", "eval", v["class"].as_str().unwrap(), "--atoms", &atoms]);
    assert_eq!(e["euler"], 2);
    let v = json(&["snc", "nearby", "--model", &cusp, "--atoms", &atoms]);
    let e = json(&["ring", "eval", v["class"].as_str().unwrap(), "--atoms", &atoms]);
    assert_eq!(e["euler"], -1);
    let s = json(&["snc", "series", "--order", "12", "--model", &cusp, "--atoms", &atoms]);
    assert_eq!(s["coefficients"].as_array().unwrap().len(), 13);
    let direct = json(&["snc", "integrate", "--m", "12", "--model", &cusp, "--atoms", &atoms]);
    assert_eq!(s["coefficients"][12], direct["class"]);
}

#[test]
fn bad_models_exit_2() {
    for text in [
        r#"{"reldim":0,"components":[],"strata":[]}"#,
        r#"{"reldim":1,"components":[{"id":"E","N":0,"mu":0}],"strata":[]}"#,
        r#"{"reldim":1,"components":[{"id":"E","N":1,"mu":0}],"strata":[{"J":["F"],"class":"1"}]}"#,
        r#"{"reldim":1,"components":[],"strata":[],"extra":1}"#,
        "not json",
    ] {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(text.as_bytes()).unwrap();
        let (_, err, code) = motivic(&["snc", "nearby", "--model", f.path().to_str().unwrap()]);
        assert_eq!(code, 2, "{text}: {err}");
        assert!(err.starts_with("error: "));
    }
    assert_eq!(motivic(&["snc", "vanishing", "--model", "/nonexistent.json"]).2, 2);
}

#[test]
fn localize_example() {
    let (strata, atoms) = (data("strata.json"), data("atoms.json"));
    let (out, _, code) = motivic(&["localize", "--strata", &strata, "--atoms", &atoms]);
    assert_eq!(code, 0);
    assert_eq!(out, "L^{-1/2} + L^{3/2} + [C]\neuler: 0\n");
    let v = json(&["localize", "--model", &strata, "--atoms", &atoms]);
    assert_eq!(v["euler"], 0);
}

#[test]
fn dt_commands() {
    assert_eq!(motivic(&["dt", "count", "--order", "6"]).0, "1 3 6 13 24 48\n");
    assert_eq!(motivic(&["dt", "zseries", "--order", "2"]).0, "T^1: L^{3/2}\nT^2: L + L^{2} + L^{3}\n");
    assert_eq!(motivic(&["dt", "index", "--n", "1", "--weights", "1,1,1"]).0, "-3 [1]\n");
    assert_eq!(motivic(&["dt", "index", "--n", "1", "--weights", "-1,-1,-1"]).0, "3 [1]\n");
    assert_eq!(motivic(&["dt", "index", "--n", "2", "--weights", "1,1,1"]).2, 2);
    assert_eq!(motivic(&["dt", "index", "--n", "2"]).2, 2);
    let t = motivic(&["dt", "tangent", "--n", "2"]).0;
    assert_eq!(t, "[1/1] 6\n[1,1] 6\n[2] 6\n");
    let v = json(&["dt", "count", "--order", "10"]);
    assert_eq!(v["counts"][9], 500);
}

#[test]
fn size_bound_is_configurable() {
    let out = Command::new(env!("CARGO_BIN_EXE_motivic"))
        .args(["dt", "count", "--order", "5"])
        .env("MOTIVIC_MAX_PARTITION_SIZE", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(motivic(&["dt", "count", "--order", "13"]).2, 2);
}

#[test]
fn compare_exit_codes() {
    let (out, _, code) = motivic(&["dt", "compare", "--order", "3", "--weights", "1,13,169"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("order 3 weights 1,13,169 status all_equal\n"));
    assert_eq!(motivic(&["dt", "compare", "--order", "4", "--weights", "1,13,169"]).2, 10);
    let (out, _, code) = motivic(&["--json", "dt", "compare", "--order", "3", "--weights", "1,1,1"]);
    assert_eq!(code, 2);
    let report: motivic_core::hilbert::CompareReport = serde_json::from_str(&out).unwrap();
    assert_eq!(report.rows.len(), 4);
}
