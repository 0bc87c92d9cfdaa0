use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

fn gpd(args: &[&str], stdin: &str) -> (i32, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gpd"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn exit_codes_reach_the_shell() {
    let (code, built) = gpd(&["build", "pair", "--n", "2"], "");
    assert_eq!(code, 0);
    let (_, point) = gpd(&["build", "unit", "--n", "1"], "");
    let (code, out) = gpd(&["morita", "-", point.trim_end()], &built);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!((code, &v["morita"]), (0, &Value::Bool(true)), "{out}");

    let (code, z2) = gpd(&["build", "group", "--group", "cyclic:2"], "");
    assert_eq!(code, 0);
    let (code, out) = gpd(&["morita", "-", &built], &z2);
    assert_eq!(code, 1, "{out}");

    let (code, out) = gpd(&["analyze", "-"], "{\"n_objects\":");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!((code, v["error"]["kind"].as_str()), (2, Some("json")));
}

#[test]
fn help_is_not_json() {
    let (code, out) = gpd(&["--help"], "");
    assert_eq!(code, 0);
    assert!(out.contains("Usage"));
}
