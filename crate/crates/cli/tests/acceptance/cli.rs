//! The command line on the fixture corpus: canonical files round-trip
//! byte for byte, every case produces its documented exit code, reports
//! are deterministic and every payload re-validates to the same bytes.

use std::fs;
use std::path::{Path, PathBuf};

use gpd_cli::run;
use serde_json::Value;

const SUBCOMMANDS: &[&str] = &[
    "validate",
    "build unit",
    "build pair",
    "build group",
    "build action",
    "build kernel-pair",
    "build cech",
    "build gauge",
    "build arrow",
    "build restrict",
    "analyze",
    "weq",
    "charequi",
    "morita",
    "frac eq",
    "frac compose",
    "frac invert",
    "frac refine",
    "bib tofrac",
    "bib fromfrac",
    "bib roundtrip",
    "bib gauge",
    "rep validate",
    "rep pullback",
    "rep sum",
    "rep iso",
];

const PAYLOADS: &[&str] = &["groupoid", "map", "fraction", "bibundle", "rep", "value"];

fn dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn path(name: &str) -> String {
    dir().join(name).to_string_lossy().into_owned()
}

fn gpd(args: &[String], stdin: &[u8]) -> (i32, String) {
    run(args, &mut &stdin[..])
}

fn compact(v: &Value) -> String {
    format!("{v}\n")
}

/// Runs twice, checks the bytes agree and the report is one JSON document
/// naming its command.
fn report(args: &[String], stdin: &[u8]) -> Result<(i32, String, Value), String> {
    let (code, out) = gpd(args, stdin);
    let (code2, out2) = gpd(args, stdin);
    ensure!(code == code2 && out == out2, "{args:?}: output differs between runs");
    let v: Value = serde_json::from_str(&out).map_err(|e| format!("{args:?}: report is not JSON: {e}"))?;
    ensure!(v.get("command").is_some_and(Value::is_string), "{args:?}: report has no command");
    ensure!(out == compact(&v), "{args:?}: report is not in canonical form");
    Ok((code, out, v))
}

fn validate_inline(v: &Value, extra: &[String]) -> Result<Value, String> {
    let mut args = vec!["validate".to_string(), v.to_string()];
    args.extend_from_slice(extra);
    let (code, _, r) = report(&args, b"")?;
    ensure!(code == 0, "re-validation failed: {r}");
    Ok(r["value"].clone())
}

fn canonical_files() -> Result<usize, String> {
    let mut names: Vec<String> = fs::read_dir(dir())
        .map_err(|e| e.to_string())?
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .filter(|n| n.ends_with(".json") && n != "cases.json")
        .collect();
    names.sort();
    ensure!(names.len() >= 30, "only {} fixture files", names.len());
    let mut canonical = 0;
    for name in names.iter().filter(|n| !n.starts_with("bad_") && !n.starts_with("ref_")) {
        let text = fs::read_to_string(dir().join(name)).map_err(|e| e.to_string())?;
        let parsed: Value = serde_json::from_str(&text).map_err(|e| format!("{name}: {e}"))?;
        ensure!(compact(&parsed) == text, "{name}: serialize∘parse is not the identity");
        let mut args = vec!["validate".to_string(), path(name)];
        if name.starts_with("rep_z2") {
            args.extend(["--groupoid".to_string(), path("z2.json")]);
        }
        let (code, _, r) = report(&args, b"")?;
        if name == "rep_z2_half.json" {
            ensure!(code == 2, "{name}: expected rejection");
            continue;
        }
        ensure!(code == 0, "{name}: {r}");
        ensure!(compact(&r["value"]) == text, "{name}: canonical output differs from the file");
        canonical += 1;
    }
    Ok(canonical)
}

fn cases() -> Result<(usize, Vec<String>), String> {
    let text = fs::read_to_string(dir().join("cases.json")).map_err(|e| e.to_string())?;
    let cases: Vec<Value> = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let mut covered = Vec::new();
    for case in &cases {
        let args: Vec<String> = case["args"]
            .as_array()
            .unwrap()
            .iter()
            .map(|a| {
                let a = a.as_str().unwrap();
                a.strip_prefix('@').map_or_else(|| a.to_string(), path)
            })
            .collect();
        let stdin = match case["stdin"].as_str() {
            Some(f) => fs::read(dir().join(f)).map_err(|e| e.to_string())?,
            None => Vec::new(),
        };
        let want = case["exit"].as_i64().unwrap() as i32;
        let (code, _, r) = report(&args, &stdin)?;
        ensure!(code == want, "{:?}: exit {code}, expected {want}: {r}", case["args"]);
        let command = r["command"].as_str().unwrap().to_string();
        if code == 2 {
            let kind = r["error"]["kind"].as_str().unwrap_or_default();
            ensure!(!kind.is_empty(), "{:?}: error report without a kind", case["args"]);
            if kind == "json" {
                ensure!(r["witnesses"]["line"].is_u64() && r["witnesses"]["column"].is_u64(), "json error without a position");
            }
            if kind == "scale" {
                ensure!(r["witnesses"]["bound"].is_u64(), "scale error without its bound");
            }
            continue;
        }
        if code == 0 {
            covered.push(command.clone());
        }
        if let (Some(file), Some(key)) = (case["equals"].as_str(), case["payload"].as_str()) {
            let expected = fs::read_to_string(dir().join(file)).map_err(|e| e.to_string())?;
            ensure!(compact(&r[key]) == expected, "{:?}: {key} differs from {file}", case["args"]);
        }
        for key in PAYLOADS.iter().filter(|k| r.get(**k).is_some_and(|v| !v.is_null())) {
            if *key == "groupoid" && r.get("rep").is_some() {
                continue;
            }
            let extra: Vec<String> = if *key == "rep" || r[*key].get("dims").is_some() {
                let flag = args.iter().position(|a| a == "--groupoid").map(|i| args[i + 1].clone());
                let g = r.get("groupoid").map(Value::to_string).or(flag).unwrap_or_else(|| args[2].clone());
                vec!["--groupoid".into(), g]
            } else {
                Vec::new()
            };
            let back = validate_inline(&r[*key], &extra)?;
            ensure!(back == r[*key], "{:?}: {key} does not round-trip", case["args"]);
        }
    }
    Ok((cases.len(), covered))
}

fn pipes_and_flags() -> Result<(), String> {
    let s = |v: &[&str]| v.iter().map(|a| a.to_string()).collect::<Vec<_>>();
    let (_, built, _) = report(&s(&["build", "pair", "--n", "3"]), b"")?;
    let (code, _, r) = report(&s(&["analyze", "-"]), built.as_bytes())?;
    ensure!(code == 0 && r["orbits"].as_array().map(Vec::len) == Some(1), "pair(3) should have one orbit: {r}");
    ensure!(r["isotropy_orders"] == serde_json::json!([1]), "pair(3) isotropy orders: {r}");

    let (code, out) = gpd(&s(&["--pretty", "morita", &path("pair4.json"), &path("point.json")]), b"");
    ensure!(code == 0, "pretty morita failed");
    let (summary, rest) = out.split_once('\n').unwrap_or_default();
    ensure!(summary.starts_with("morita: "), "pretty summary line missing: {summary}");
    serde_json::from_str::<Value>(rest).map_err(|e| format!("pretty output is not JSON after the summary: {e}"))?;

    let args = s(&["morita", &path("z2.json"), &path("point.json"), "--oracle"]);
    let (_, _, r) = report(&args, b"")?;
    ensure!(r["oracle_bound"] == 6, "default oracle bound is not 6: {r}");
    std::env::set_var("GPD_ORACLE_BOUND", "3");
    let (_, _, r) = report(&args, b"")?;
    std::env::remove_var("GPD_ORACLE_BOUND");
    ensure!(r["oracle_bound"] == 3, "GPD_ORACLE_BOUND is ignored: {r}");
    Ok(())
}

pub fn corpus() -> Result<String, String> {
    let canonical = canonical_files()?;
    let (n, covered) = cases()?;
    for sub in SUBCOMMANDS {
        ensure!(covered.iter().any(|c| c == sub), "no successful case for `{sub}`");
    }
    pipes_and_flags()?;
    Ok(format!("{canonical} canonical files, {n} cases, {} subcommands", SUBCOMMANDS.len()))
}
