use std::path::Path;
use std::process::{Command, Output};

fn qcff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcff"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("examples/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn write_tmp(name: &str, body: &str) -> String {
    let path = std::env::temp_dir().join(format!("qcff-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn report_ok() {
    let out = qcff(&["report", "--config", &data("t_t1.json")]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["schema_version"], 1);
    assert_eq!(json["presentation"]["group_order"], "8");
}

#[test]
fn report_to_file() {
    let target = std::env::temp_dir().join(format!("qcff-cli-{}-out.json", std::process::id()));
    let target = target.to_string_lossy().into_owned();
    let out = qcff(&["report", "--config", &data("t_t1.json"), "--out", &target]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let stdout = qcff(&["report", "--config", &data("t_t1.json")]).stdout;
    assert_eq!(std::fs::read(&target).unwrap(), stdout);
}

#[test]
fn wrong_orientation_exit_2() {
    let out = qcff(&["report", "--config", &data("wrong_orientation.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("wrong orientation"));
}

#[test]
fn empty_pairs_and_cyclotomic_only() {
    let cfg = write_tmp(
        "cyc.json",
        r#"{"schema_version": 1, "p": 3, "conductor": [["T", 1]]}"#,
    );
    assert_eq!(qcff(&["report", "--config", &cfg]).status.code(), Some(2));
    let out = qcff(&["report", "--config", &cfg, "--cyclotomic-only"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["genus_k"]["closed_form"], "0");
    assert!(json.get("presentation").is_none());
}

#[test]
fn validation_exit_3() {
    let cfg = write_tmp(
        "reducible.json",
        r#"{"p": 3, "conductor": [["T^2+2", 1], ["T", 1]], "pairs": [["T", "T^2+2"]]}"#,
    );
    assert_eq!(qcff(&["report", "--config", &cfg]).status.code(), Some(3));
}

#[test]
fn config_errors_exit_2() {
    let cfg = write_tmp("broken.json", "{ not json");
    assert_eq!(qcff(&["report", "--config", &cfg]).status.code(), Some(2));
    assert_eq!(
        qcff(&["report", "--config", "/nonexistent/qcff.json"])
            .status
            .code(),
        Some(2)
    );
    let cfg = write_tmp("even.json", r#"{"p": 2, "conductor": "T"}"#);
    assert_eq!(
        qcff(&["report", "--config", &cfg, "--cyclotomic-only"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn factor_verb() {
    let out = qcff(&["factor", "--q", "3", "--poly", "T^3+2*T"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let primes: Vec<&str> = json["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["prime"].as_str().unwrap())
        .collect();
    assert_eq!(primes, ["T", "T+1", "T+2"]);
    assert_eq!(
        qcff(&["factor", "--q", "6", "--poly", "T"]).status.code(),
        Some(2)
    );
    assert_eq!(
        qcff(&["factor", "--q", "3", "--poly", "T^^2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn selfcheck_small() {
    let out = qcff(&["selfcheck", "--scope", "small", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("cases checked"));
    assert!(!text.contains("FAIL"));
}
