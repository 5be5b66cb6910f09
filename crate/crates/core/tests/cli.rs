//! End-to-end runs of the `aqclass` binary.

mod common;

use std::path::PathBuf;
use std::process::{Command, Output};

use aqclass::cohomology::Polynomial;
use aqclass::rootsys::Root;
use serde_json::Value;

fn aqclass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aqclass")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("aqclass-{}-{name}", std::process::id()))
}

const F4: [&str; 4] = ["--algebra", "F4", "--noncompact", "1"];

fn f4(extra: &[&str]) -> Output {
    let mut args = F4.to_vec();
    args.extend_from_slice(extra);
    aqclass(&args)
}

#[test]
fn positive_systems_table() {
    let out = f4(&["positive-systems"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows = text.lines().filter(|l| l.starts_with("| ") && !l.starts_with("| #")).count();
    assert_eq!(rows, 12);
    assert!(text.contains("| φ4, φ3, φ2, φ1 |"));

    let a1 = aqclass(&["--algebra", "A1", "--noncompact", "1", "positive-systems", "--format", "csv"]);
    assert_eq!(stdout(&a1).lines().count(), 3);
}

#[test]
fn classify_footer_and_rows() {
    let text = stdout(&f4(&["classify"]));
    assert!(text.contains("classes / discrete series / Borel-de Siebenthal: 46 / 12 / 1"));
    assert!(text.contains("| 0 | ∅ |"));
    assert!(text.contains("| 1+t^4+2t^8+2t^12+2t^16+2t^20+t^24+t^28 |"));
    assert!(text.contains("| t^14 | t^14 | yes | yes |"));
}

#[test]
fn json_is_deterministic_and_follows_schema() {
    let a = f4(&["classify", "--format", "json"]);
    let b = f4(&["--format", "json", "classify"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["algebra"], "F4");
    assert_eq!(v["counts"]["total"], 46);
    assert_eq!(v["counts"]["discrete_series"], 12);
    assert_eq!(v["counts"]["bds"], 1);
    assert_eq!(v["positive_systems"].as_array().unwrap().len(), 12);
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 46);
    for c in classes {
        for field in ["key", "R", "levi_type", "poincare", "discrete_series", "bds", "representatives"] {
            assert!(c.get(field).is_some(), "missing {field}");
        }
        let rep = &c["representatives"][0];
        assert!(rep["system"].is_u64() && rep["gamma"].is_array());
    }
}

#[test]
fn markdown_and_json_agree() {
    let md = stdout(&f4(&["classify"]));
    let json: Value = serde_json::from_slice(&f4(&["classify", "--format", "json"]).stdout).unwrap();
    let rows: Vec<Vec<String>> = md
        .lines()
        .filter(|l| l.starts_with("| ") && !l.starts_with("| #"))
        .map(|l| l.trim_matches('|').split(" | ").map(|c| c.trim().to_string()).collect())
        .collect();
    let classes = json["classes"].as_array().unwrap();
    assert_eq!(rows.len(), classes.len());
    for (cells, class) in rows.iter().zip(classes) {
        let r: u64 = cells[2].parse().unwrap();
        assert_eq!(class["R"].as_u64(), Some(r));
        let key: Vec<Vec<i32>> = if cells[3] == "∅" {
            Vec::new()
        } else {
            cells[3].split(", ").map(|s| Root::parse(s, 4).unwrap().coeffs().to_vec()).collect()
        };
        assert_eq!(serde_json::to_value(&key).unwrap(), class["key"]);
        let p: Polynomial = cells[8].parse().unwrap();
        assert_eq!(serde_json::to_value(p.coeffs()).unwrap(), class["poincare"]);
        assert_eq!(cells[6], class["levi_type"].as_str().unwrap());
        assert_eq!(cells[9] == "yes", class["discrete_series"].as_bool().unwrap());
        assert_eq!(cells[10] == "yes", class["bds"].as_bool().unwrap());
    }
}

#[test]
fn csv_parses() {
    let out = f4(&["classify", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let records: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), 46);
    assert_eq!(records.iter().filter(|r| &r[9] == "true").count(), 12);
}

#[test]
fn check_passes_and_golden_round_trip() {
    let out = f4(&["check"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("all 16 checks passed"));

    let golden = temp("golden.json");
    assert!(f4(&["classify", "--format", "json", "--out", golden.to_str().unwrap()]).status.success());
    let ok = f4(&["check", "--golden", golden.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));

    let text = std::fs::read_to_string(&golden).unwrap();
    let mut v: Value = serde_json::from_str(&text).unwrap();
    v["classes"][0]["poincare"][0] = Value::from(2);
    let corrupted = temp("corrupted.json");
    std::fs::write(&corrupted, serde_json::to_string(&v).unwrap()).unwrap();
    let bad = f4(&["check", "--golden", corrupted.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("[FAIL] golden"));

    std::fs::write(&corrupted, &text[..text.len() / 2]).unwrap();
    assert_eq!(f4(&["check", "--golden", corrupted.to_str().unwrap()]).status.code(), Some(1));

    let _ = std::fs::remove_file(golden);
    let _ = std::fs::remove_file(corrupted);
}

#[test]
fn small_algebra_checks() {
    let out = aqclass(&["--algebra", "A2", "--noncompact", "1", "check"]);
    assert_eq!(out.status.code(), Some(0));
    let out = aqclass(&["--algebra", "C3", "--noncompact", "3", "check", "--format", "json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn cartan_file_specs() {
    let spec = temp("spec.json");
    std::fs::write(&spec, r#"{"type": "F4", "noncompact": [1]}"#).unwrap();
    let out = aqclass(&["--cartan", spec.to_str().unwrap(), "classify", "--format", "json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["counts"]["total"], 46);

    std::fs::write(&spec, r#"{"cartan": [[2,-1],[-1,2]]}"#).unwrap();
    let out =
        aqclass(&["--cartan", spec.to_str().unwrap(), "--noncompact", "1", "positive-systems", "--format", "json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["positive_systems"].as_array().unwrap().len(), 3);

    std::fs::write(&spec, "{\"cartan\": [[2,-1],").unwrap();
    let out = aqclass(&["--cartan", spec.to_str().unwrap(), "--noncompact", "1", "classify"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("malformed JSON"));
    let _ = std::fs::remove_file(spec);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(aqclass(&["classify"]).status.code(), Some(2));
    assert_eq!(aqclass(&["--algebra", "F4", "classify"]).status.code(), Some(2));
    assert_eq!(aqclass(&["--algebra", "F4", "--noncompact", "9", "classify"]).status.code(), Some(2));
    assert_eq!(aqclass(&["--algebra", "E6", "--noncompact", "1", "classify"]).status.code(), Some(2));
    assert_eq!(aqclass(&["--algebra", "F4", "--noncompact", "1", "frobnicate"]).status.code(), Some(2));
    assert_eq!(
        aqclass(&["--algebra", "F4", "--noncompact", "1", "classify", "--format", "xml"]).status.code(),
        Some(2)
    );
    assert_eq!(
        aqclass(&["--algebra", "F4", "--noncompact", "1", "check", "--golden", "/nonexistent"]).status.code(),
        Some(2)
    );
    assert_eq!(aqclass(&["--version"]).status.code(), Some(0));
}
