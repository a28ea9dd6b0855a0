use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_wschub"))
}

fn config(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("wschub-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn describe_emits_json() {
    let p = config("lg.json", r#"{"preset": "lg24", "chi": [8, -1, -1]}"#);
    let (code, stdout, _) = run(&["describe", "--config", p.to_str().unwrap(), "--out", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!(v.is_object());
}

#[test]
fn multiply_and_chevalley_succeed() {
    let p = config("gr.json", r#"{"preset": "gr24", "chi": [9, 1, 2, 3, 4]}"#);
    let p = p.to_str().unwrap();
    let (code, stdout, _) = run(&["multiply", "--config", p, "--u", "{1,2}", "--v", "{1,3}", "--out", "json"]);
    assert_eq!(code, 0, "{}", stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!(v["product"]["terms"].is_array());
    let (code, _, _) = run(&["chevalley", "--config", p, "--v", "{2,4}", "--alpha", "2"]);
    assert_eq!(code, 0);
}

#[test]
fn invalid_configurations_exit_2() {
    let malformed = config("bad.json", "{ not json");
    let unknown = config("unknown.json", r#"{"preset": "lg24", "colour": 1}"#);
    let symbolic = config("sym.json", r#"{"preset": "lg24", "chi": "symbolic"}"#);
    for args in [
        vec!["describe"],
        vec!["describe", "--config", malformed.to_str().unwrap()],
        vec!["describe", "--config", unknown.to_str().unwrap()],
        vec!["certify", "--config", symbolic.to_str().unwrap(), "--u", "w1", "--v", "w1"],
        vec!["reproduce", "no-such-fixture"],
        vec!["frobnicate"],
    ] {
        let (code, _, stderr) = run(&args);
        assert_eq!(code, 2, "{:?}: {}", args, stderr);
    }
}

#[test]
fn oversized_certificate_exits_3() {
    let p = config("wps.json", r#"{"preset": "wps(4)", "chi": [1, 1, 1, 2, 3]}"#);
    let (code, _, stderr) = run(&["certify", "--config", p.to_str().unwrap(), "--u", "v0", "--v", "v0"]);
    assert_eq!(code, 3, "{}", stderr);
}

#[test]
fn negativity_exits_4() {
    let p = config("neg.json", r#"{"preset": "wps(4)", "chi": [1, 1, 1, 2, 3]}"#);
    let (code, stdout, _) =
        run(&["certify", "--config", p.to_str().unwrap(), "--u", "v2", "--v", "v2", "--basepoint", "v1"]);
    assert_eq!(code, 4);
    assert!(stdout.contains("NEGATIVE"));
}

#[test]
fn reproduce_all_passes() {
    let (code, stdout, stderr) = run(&["reproduce", "all", "--out", "text"]);
    assert_eq!(code, 0, "{}{}", stdout, stderr);
}
