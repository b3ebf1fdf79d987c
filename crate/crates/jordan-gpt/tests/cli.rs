use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_jordan-gpt"));
    cmd.env_remove("JORDAN_GPT_SEED");
    cmd
}

fn docs(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../docs")
        .join(name)
}

fn run(cmd: &mut Command) -> (Option<i32>, Value, String) {
    let Output {
        status,
        stdout,
        stderr,
    } = cmd.output().expect("run binary");
    let json = serde_json::from_slice(&stdout).unwrap_or(Value::Null);
    (
        status.code(),
        json,
        String::from_utf8_lossy(&stderr).into_owned(),
    )
}

#[test]
fn docs_examples_validate() {
    for name in [
        "qubit.json",
        "rebit.json",
        "quabit.json",
        "spin4.json",
        "gbit.json",
        "trit.json",
    ] {
        let (code, json, err) = run(bin().args(["model", "validate"]).arg(docs(name)));
        assert_eq!(code, Some(0), "{name}: {err}");
        assert_eq!(json["pass"], true);
    }
}

#[test]
fn gbit_sharpness_fails_naming_outcomes() {
    let (code, json, err) = run(bin().args(["check", "sharpness"]).arg(docs("gbit.json")));
    assert_eq!(code, Some(1));
    assert_eq!(json["pass"], false);
    assert!(err.contains("FAIL sharpness"), "{err}");
    let checks = json["checks"].as_array().unwrap();
    let failing: Vec<&str> = checks
        .iter()
        .filter(|c| c["pass"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(failing.iter().any(|n| n.starts_with("sharpness.outcome.")));
}

#[test]
fn jordan_checks_need_a_jordan_backend() {
    let (code, _, err) = run(bin().args(["check", "conjugate"]).arg(docs("gbit.json")));
    assert_eq!(code, Some(2));
    assert!(err.contains("Jordan"), "{err}");
}

#[test]
fn qubit_passes_every_check() {
    for suite in [
        "sharpness",
        "spectrality",
        "conjugate",
        "selfdual",
        "filters",
    ] {
        let (code, _, err) = run(bin().args(["check", suite]).arg(docs("qubit.json")));
        assert_eq!(code, Some(0), "{suite}: {err}");
    }
}

#[test]
fn malformed_json_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\n  \"schema_version\": 1,\n  \"backend\": }").unwrap();
    let (code, _, err) = run(bin().args(["model", "validate"]).arg(&path));
    assert_eq!(code, Some(2));
    assert!(err.contains("line 3, column 14"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(bin().arg("frobnicate")).0, Some(2));
    assert_eq!(
        run(bin().args(["theorem", "thm1", "--kind", "octonion"])).0,
        Some(2)
    );
    assert_eq!(
        run(bin().args(["theorem", "thm3", "--kind", "real"])).0,
        Some(2)
    );
    assert_eq!(run(bin().args(["--tol", "-1", "demo", "gbit"])).0, Some(2));
    assert_eq!(run(bin().arg("--help")).0, Some(0));
}

#[test]
fn theorems_pass_on_default_model() {
    for name in ["lemma1", "lemma2", "thm1", "thm2", "thm3"] {
        let (code, json, err) = run(bin().args(["theorem", name]));
        assert_eq!(code, Some(0), "{name}: {err}");
        assert_eq!(json["seed"], 0);
    }
}

#[test]
fn environment_seed_overrides_flag() {
    let (_, flagged, _) = run(bin().args(["--seed", "5", "theorem", "lemma2"]));
    let (_, env, _) = run(bin()
        .env("JORDAN_GPT_SEED", "5")
        .args(["--seed", "9", "theorem", "lemma2"]));
    assert_eq!(env["seed"], 5);
    assert_eq!(flagged, env);

    let (code, _, _) = run(bin().env("JORDAN_GPT_SEED", "abc").args(["demo", "gbit"]));
    assert_eq!(code, Some(2));
}

#[test]
fn gbit_demo_fails() {
    let (code, json, _) = run(bin().args(["demo", "gbit"]));
    assert_eq!(code, Some(1));
    assert_eq!(json["suite"], "demo gbit");
}

#[test]
fn report_is_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, _, err) = run(bin().args(["--seed", "3", "report", "--out"]).arg(&path));
    assert_eq!(code, Some(0), "{err}");
    let report: Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    let checks = report["checks"].as_array().unwrap();
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert!(names.contains(&"gbit.counterexample"));
    assert!(checks
        .iter()
        .any(|c| c["anchor"] == "Lemma 1: self-dualizing inner product"));
}
