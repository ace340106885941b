//! End-to-end checks of the `parabolica` binary: exit codes, output
//! formats, the zoo override, and byte-identical report output.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_parabolica"))
}

#[test]
fn zoo_lists_thirteen_models() {
    let out = bin().arg("zoo").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("13 models"));
    assert!(text.contains("o(5,5)spin"));
    // json variant is machine readable
    let out = bin().args(["zoo", "--json"]).output().unwrap();
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 13);
}

#[test]
fn report_formats_and_determinism() {
    let md1 = bin().args(["report", "sl", "4", "R", "p2"]).output().unwrap();
    assert!(md1.status.success());
    let md2 = bin().args(["report", "sl", "4", "R", "p2"]).output().unwrap();
    // byte-identical across runs
    assert_eq!(md1.stdout, md2.stdout);
    let text = String::from_utf8(md1.stdout).unwrap();
    assert!(text.contains("rank 1") && text.contains("COR_4_8"));

    let csv = bin()
        .args(["report", "o", "3", "4", "--csv"])
        .output()
        .unwrap();
    let text = String::from_utf8(csv.stdout).unwrap();
    assert!(text.starts_with("model,type,"));
    assert!(text.contains("null"));

    let json = bin()
        .args(["report", "sl", "3", "H", "p1", "--json"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["rows"][0]["applicable_results"][1], "THM_QUAT");
}

#[test]
fn verify_exit_codes() {
    let ok = bin()
        .args(["verify", "sl", "3", "R", "p1", "grading"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));

    let usage = bin().args(["verify", "nonsense"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));

    let usage2 = bin().args(["report", "sl", "9"]).output().unwrap();
    assert_eq!(usage2.status.code(), Some(2));
}

#[test]
fn verify_json_report_schema() {
    let out = bin()
        .args(["verify", "o", "2", "3", "--suite", "kostant", "--json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["model"], "o(2,3)");
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| {
        c["passed"] == true && c["millis"].is_number()
    }));
}

#[test]
fn zoo_env_override() {
    let dir = std::env::temp_dir().join("parabolica_zoo_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tiny_zoo.json");
    std::fs::write(
        &path,
        r#"{ "version": 7, "models": [
            { "family": "proj_like", "field": "R", "params": [1, 2], "partner": "block_transpose" }
        ] }"#,
    )
    .unwrap();
    let out = bin()
        .arg("zoo")
        .env("PARABOLICA_ZOO", &path)
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("zoo v7 (1 models)"));
}

#[test]
fn zoo_flags_models_without_golden_entries() {
    let dir = std::env::temp_dir().join("parabolica_zoo_nogolden");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("zoo.json");
    // sl(5,R)/p(1) is buildable but carries no frozen profile
    std::fs::write(
        &path,
        r#"{ "version": 1, "models": [
            { "family": "proj_like", "field": "R", "params": [1, 4], "partner": "block_transpose" }
        ] }"#,
    )
    .unwrap();
    let out = bin()
        .arg("zoo")
        .env("PARABOLICA_ZOO", &path)
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("sl(5,R)/p(1)"));
    assert!(text.contains("MISSING"));
}
