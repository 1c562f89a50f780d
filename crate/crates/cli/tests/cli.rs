use std::process::{Command, Output};

use serde_json::Value;

fn lefkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lefkit")).args(args).output().expect("binary runs")
}

fn json_ok(args: &[&str]) -> Value {
    let out = lefkit(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn fixture(name: &str) -> String {
    format!("{}/../core/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn octahedron_sop_is_unexpected() {
    let oct = fixture("oct");
    let v = json_ok(&["sop-verify", "--complex", &oct, "--sop", "x1+x2; x3+x4; x5+x6", "--f", "x1+x2+x3+x4+x5+x6", "--caps", "2", "--t", "3"]);
    assert_eq!(v["overall"], true);
    assert_eq!(v["u1"]["hilbert"], serde_json::json!([1, 3, 3, 1, 0]));
}

#[test]
fn ball_kernel_dimension() {
    let v = json_ok(&["kernel", "--complex", "ball10", "--caps", "4", "--degree", "9"]);
    assert_eq!(v["dimension"], 7);
    assert_eq!(v["basis"].as_array().unwrap().len(), 7);
}

#[test]
fn crosspolytope_hilbert_values() {
    let v = json_ok(&["hf", "--complex", "cross4", "--caps", "3", "--degrees", "5,6"]);
    assert_eq!(v["hilbert"], serde_json::json!([160, 128]));
}

#[test]
fn forms_quotient_matches_colored_sop() {
    let v = json_ok(&["hf", "--complex", "oct", "--forms", "x1+x2;x3+x4;x5+x6"]);
    assert_eq!(v["hilbert"], serde_json::json!([1, 3, 3, 1, 0]));
    let s = json_ok(&["colored-sop", "--complex", "oct"]);
    assert_eq!(s["theta"], serde_json::json!(["x1 + x2", "x3 + x4", "x5 + x6"]));
}

#[test]
fn screen_agrees_with_exact_ranks() {
    let v = json_ok(&["wlp", "--complex", "c4", "--caps", "3", "--screen", "101"]);
    let exact: Vec<u64> = v["per_degree"].as_array().unwrap().iter().map(|d| d["rank"].as_u64().unwrap()).collect();
    let screen: Vec<u64> = v["screen"]["ranks"].as_array().unwrap().iter().map(|r| r.as_u64().unwrap()).collect();
    assert_eq!(exact, screen);
    assert_eq!(v["holds"], false);
}

#[test]
fn hesd_output_round_trips_through_info() {
    let dir = std::env::temp_dir().join(format!("lefkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("hesd.json");
    let path = path.to_str().unwrap();
    json_ok_out(&["hesd", "--complex", "c4", "--r", "2", "--out", path]);
    let info = json_ok(&["info", "--complex", path]);
    assert_eq!(info["pure"], true);
    assert_eq!(info["dim"], 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

fn json_ok_out(args: &[&str]) {
    let out = lefkit(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
}

#[test]
fn output_is_deterministic() {
    let args = ["dual-gen", "--complex", "oct"];
    assert_eq!(lefkit(&args).stdout, lefkit(&args).stdout);
}

#[test]
fn exit_codes() {
    let cases: [(&[&str], i32, &str); 4] = [
        (&["info", "--complex", "no-such-complex"], 2, "input"),
        (&["hf", "--complex", "oct", "--caps", "1"], 3, "range"),
        (&["hesd", "--complex", "fan4", "--r", "2"], 3, "not_incidence_like"),
        (&["colored-sop", "--complex", "dunce"], 4, "hypothesis"),
    ];
    for (args, code, kind) in cases {
        let out = lefkit(args);
        assert_eq!(out.status.code(), Some(code), "{args:?}");
        let err: Value = serde_json::from_slice(&out.stderr).unwrap();
        assert_eq!(err["error"]["kind"], kind, "{args:?}");
        assert_eq!(err["exit_code"], code);
    }
}
