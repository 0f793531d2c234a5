use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn inputs() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../inputs")
}

fn cohint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cohint")).args(args).env_remove("COHINT_WINDOW").output().expect("binary runs")
}

fn input(name: &str) -> String {
    inputs().join(name).to_string_lossy().into_owned()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn faces_of_gm_with_opposite_weights() {
    let out = cohint(&["faces", &input("gm_pm1.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["result"]["central_rank"], 0);
    let faces = v["result"]["faces"].as_array().unwrap();
    assert_eq!(faces.len(), 2);
    assert_eq!(faces[0]["chambers"], 2);
    assert_eq!(faces[0]["aut_order"], 1);
}

#[test]
fn adjoint_sl2_is_orthogonal() {
    let v = json(&cohint(&["sym", &input("sl2_adjoint.json")]));
    assert_eq!(v["result"]["symmetric"], true);
    assert_eq!(v["result"]["orthogonal"], true);
    assert_eq!(v["result"]["decomposition"][0]["highest_weight"], serde_json::json!([2]));
}

#[test]
fn bg_check_passes_for_b2() {
    let out = cohint(&["bg-check", &input("bg_b2.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["passed"], true);
}

#[test]
fn cohi_battery_is_seeded() {
    let a = cohint(&["cohi", &input("cohi_gl2.json"), "--seed", "7"]);
    let b = cohint(&["cohi", &input("cohi_gl2.json"), "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["result"]["battery"]["seed"], 7);
}

#[test]
fn bun_ih_rank_two_genus_two() {
    let v = json(&cohint(&["bun-ih", &input("bun_r2_d0_g2.json")]));
    let betti: Vec<i64> =
        v["result"]["ih_polynomial"]["betti"].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect();
    assert_eq!(betti, [1, 4, 7, 8, 8, 8, 8, 8, 7, 4, 1]);
    assert_eq!(v["result"]["census"].as_array().unwrap().len(), 2);
}

#[test]
fn bun_ih_latex_table() {
    let out = cohint(&["bun-ih", "{\"r\":1,\"d\":0,\"g\":2,\"N\":10}", "--latex"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("% cohint"));
    assert!(text.contains("\\toprule") && text.contains("2 & 6 \\\\"));
}

#[test]
fn golden_match_and_mismatch() {
    let ok = cohint(&[
        "bps",
        &input("kronecker_loops.json"),
        "--gamma-max",
        "2,2",
        "--golden",
        &input("kronecker_loops_golden.json"),
    ]);
    assert_eq!(ok.status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"omega":{"1,1":[[-1,"1"]]}}"#).unwrap();
    let out = cohint(&["bps", &input("kronecker_loops.json"), "--gamma-max", "1", "--golden", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["status"], "invariant_violation");
    assert!(v["result"].is_object());
}

#[test]
fn written_golden_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("golden.json");
    let p = path.to_str().unwrap();
    let w = cohint(&["bps", &input("three_loops.json"), "--gamma-max", "3", "--write-golden", p]);
    assert_eq!(w.status.code(), Some(0));
    let g: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(g["omega"]["1"], serde_json::json!([[-3, "1"]]));
    let c = cohint(&["bps", &input("three_loops.json"), "--gamma-max", "3", "--golden", p]);
    assert_eq!(c.status.code(), Some(0));
}

#[test]
fn window_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_cohint"))
        .args(["bps", &input("jordan.json"), "--gamma-max", "2"])
        .env("COHINT_WINDOW", "12")
        .output()
        .unwrap();
    assert_eq!(json(&out)["bounds"]["window_q_powers"], 12);
}

#[test]
fn unknown_fields_are_rejected() {
    let out = cohint(&["sym", "{\"group\":{\"gl\":2},\"weights\":[],\"extra\":true}"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["status"], "invalid");
    assert!(v["error"].as_str().unwrap().contains("extra"));
}

#[test]
fn invalid_inputs_exit_one() {
    for args in [
        vec!["sym".to_string(), "{\"group\":{\"gl\":2},\"weights\":[{\"covector\":[1,0]}]}".to_string()],
        vec!["bun-ih".to_string(), "{\"r\":2,\"d\":0,\"g\":1,\"N\":20}".to_string()],
        vec!["bps".to_string(), input("jordan.json"), "--window".to_string(), "0".to_string()],
        vec!["faces".to_string(), "/nonexistent/input.json".to_string()],
        vec!["sym".to_string(), "{\"schema\":\"other/9\",\"group\":{\"gl\":1}}".to_string()],
    ] {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(cohint(&args).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn output_is_deterministic_and_hashes_input() {
    let dir = tempfile::tempdir().unwrap();
    let paths = [dir.path().join("a.json"), dir.path().join("b.json")];
    for p in &paths {
        let out = cohint(&["faces", &input("gl2_standard.json"), "--output", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    let a = std::fs::read(&paths[0]).unwrap();
    assert_eq!(a, std::fs::read(&paths[1]).unwrap());
    let raw = std::fs::read(input("gl2_standard.json")).unwrap();
    let v: Value = serde_json::from_slice(&a).unwrap();
    let digest = {
        use std::fmt::Write;
        let mut hasher_out = String::new();
        for b in sha256(&raw) {
            write!(hasher_out, "{b:02x}").unwrap();
        }
        hasher_out
    };
    assert_eq!(v["input_sha256"], digest);
}

fn sha256(bytes: &[u8]) -> Vec<u8> {
    use sha2::Digest;
    sha2::Sha256::digest(bytes).to_vec()
}

#[test]
fn csv_has_provenance_header() {
    let out = cohint(&["bg-check", &input("bg_b2.json"), "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# cohint"));
    assert_eq!(lines.next().unwrap(), "degree,source_dim,image_dim,target_dim,invariant,pass");
}
