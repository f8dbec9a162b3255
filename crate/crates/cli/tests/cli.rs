use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn isodens(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isodens")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = isodens(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn strip_crossover_report() {
    let v = json(&["--json", "strip", "crossover", "--lambda", "2"]);
    let volume = v["volume"].as_f64().unwrap();
    assert!(volume > std::f64::consts::PI);
    assert_eq!(v["pair"][0], "ii");
}

#[test]
fn gaussmod_crossover_in_bracket() {
    let y = json(&["gaussmod", "crossover"])["y_star"].as_f64().unwrap();
    assert!(y > 0.15 && y < 0.16, "{y}");
}

#[test]
fn oracle_verify_ball_c() {
    let v = json(&[
        "--json", "oracle", "verify", "--candidate", "ball:C", "--lambda", "0.5", "--beta-hat", "0.7853981634",
        "--segments", "10000",
    ]);
    assert!(v["rel_error_area"].as_f64().unwrap() < 1e-3);
    assert!(v["rel_error_perimeter"].as_f64().unwrap() < 1e-3);
}

#[test]
fn piped_output_is_json_unless_text_is_forced() {
    let v = json(&["line", "ratio", "--lambda", "2"]);
    assert!(v["margin"].as_f64().unwrap() > 0.0);
    let out = isodens(&["line", "ratio", "--lambda", "2", "--text"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("margin: ")), "{text}");
}

#[test]
fn exit_codes() {
    assert_eq!(isodens(&["strip", "nonsense"]).status.code(), Some(1));
    assert_eq!(isodens(&["strip", "crossover", "--lambda", "0.5"]).status.code(), Some(2));
    assert_eq!(isodens(&["oracle", "verify", "--candidate", "ball:Q"]).status.code(), Some(2));
    let bad_threads = Command::new(env!("CARGO_BIN_EXE_isodens"))
        .args(["density", "mass"])
        .env("ISODENS_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad_threads.status.code(), Some(1));
}

#[test]
fn curves_csv_header_and_precision() {
    let out = isodens(&["strip", "curves", "--lambda", "2", "--samples", "10"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# isodens-csv v1 strip-profiles lambda=2"));
    assert_eq!(lines.next().unwrap(), "family,parameter,area,perimeter");
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    let mantissa = row[1].split('e').next().unwrap().replace(['.', '-'], "");
    assert_eq!(mantissa.len(), 17);
}

#[test]
fn reproduce_all_is_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        let out = Command::new(env!("CARGO_BIN_EXE_isodens"))
            .args(["reproduce-all", "--out"])
            .arg(d.path())
            .env("ISODENS_THREADS", "2")
            .output()
            .unwrap();
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let summary: Value = serde_json::from_str(&fs::read_to_string(a.path().join("summary.json")).unwrap()).unwrap();
    assert_eq!(summary["criteria"].as_array().unwrap().len(), 12);
    let files = summary["files"].as_array().unwrap();
    assert_eq!(files.len(), 8);
    for f in files {
        let name = f.as_str().unwrap();
        assert_eq!(fs::read(a.path().join(name)).unwrap(), fs::read(b.path().join(name)).unwrap(), "{name}");
    }
    let strips = files.iter().filter(|f| f.as_str().unwrap().starts_with("strip_profiles")).count();
    assert_eq!(strips, 4);
}
