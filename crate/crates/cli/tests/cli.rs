use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dcmkit")).args(args).output().expect("binary runs")
}

fn workdir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("dcmkit-cli-{name}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn synth(dir: &std::path::Path, days: &str) -> String {
    let trace = dir.join("trace.csv").to_string_lossy().into_owned();
    let out = run(&["synth", "--days", days, "--seed", "2", "--out", &trace]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    trace
}

#[test]
fn help_and_usage_errors() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["solve", "--algo", "magic"]).status.code(), Some(1));
    assert_eq!(run(&[]).status.code(), Some(1));
}

#[test]
fn compare_report_has_every_field() {
    let dir = workdir("compare");
    let trace = synth(&dir, "22");
    let out = run(&["compare", "--trace", &trace, "--lookahead", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "dcmkit-report/1");
    assert_eq!(v["lookahead"], 6);
    assert_eq!(v["instance"]["horizon"], 528);
    for key in ["max_servers", "generators", "price_floor", "price_cap", "d_min_trace", "d_min_model"] {
        assert!(v["instance"][key].is_number(), "{key}");
    }
    let names: Vec<&str> = v["algorithms"].as_array().unwrap().iter().map(|a| a["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["static", "offline", "decomposed", "cpoff", "gcsr", "dcmon"]);
    for a in v["algorithms"].as_array().unwrap() {
        for m in ["grid", "onsite_fuel", "maintenance", "server_switching", "generator_startup", "total"] {
            assert!(a["cost"][m].is_number(), "{m}");
        }
        assert!(a["reduction"].is_number());
    }
    assert!(v["ratios"].as_array().unwrap().iter().all(|r| r["ratio"].as_f64().unwrap() >= 1.0 - 1e-12));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn solve_writes_one_row_per_slot() {
    let dir = workdir("solve");
    let trace = synth(&dir, "2");
    for algo in ["offline", "gcsr", "chase", "dcmon", "static", "cpoff", "ofa"] {
        let out = run(&["solve", "--trace", &trace, "--algo", algo, "--lookahead", "3", "--format", "csv"]);
        assert_eq!(out.status.code(), Some(0), "{algo}: {}", String::from_utf8_lossy(&out.stderr));
        let text = String::from_utf8(out.stdout).unwrap();
        assert_eq!(text.lines().next(), Some("t,x,y,u,v"));
        assert_eq!(text.lines().count(), 49, "{algo}");
    }
    let out = run(&["solve", "--trace", &trace, "--algo", "dcmon"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["algorithm"], "dcmon");
    assert_eq!(v["schedule"]["x"].as_array().unwrap().len(), 48);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn sweeps_follow_the_requested_axis() {
    let dir = workdir("sweep");
    let trace = synth(&dir, "3");
    let out = run(&["sweep", "--trace", &trace, "--axis", "generators", "--values", "0,1,3"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let table = &v["sweeps"][0];
    assert_eq!(table["axis"], "generators");
    let values: Vec<f64> = table["points"].as_array().unwrap().iter().map(|p| p["value"].as_f64().unwrap()).collect();
    assert_eq!(values, [0.0, 1.0, 3.0]);

    let out = run(&["sweep", "--trace", &trace, "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("sweep,lookahead,24,gcsr,total,")));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn config_can_describe_the_whole_run() {
    let dir = workdir("config");
    let cfg = dir.join("run.json");
    let report = dir.join("out.csv");
    std::fs::write(
        &cfg,
        format!(
            r#"{{"synth": {{"days": 2, "servers": 30, "preset": "sj"}}, "seed": 9, "lookahead": 2,
               "sweep": {{"lookahead": [0, 4]}},
               "output": {{"path": "{}", "format": "csv"}}}}"#,
            report.display()
        ),
    )
    .unwrap();
    let out = run(&["compare", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&report).unwrap();
    assert!(text.starts_with("section,axis,axis_value,algorithm,metric,value"));
    assert!(text.lines().any(|l| l.starts_with("sweep,lookahead,4,dcmon,")));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn missing_input_and_bad_paths_are_validation_errors() {
    let out = run(&["compare"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
    assert_eq!(run(&["compare", "--trace", "/nonexistent/trace.csv"]).status.code(), Some(1));
    let dir = workdir("paths");
    let trace = synth(&dir, "1");
    assert_eq!(run(&["solve", "--trace", &trace, "--out", "/nonexistent/dir/out.json"]).status.code(), Some(1));
    std::fs::remove_dir_all(dir).ok();
}
