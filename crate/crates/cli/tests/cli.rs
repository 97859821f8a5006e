use std::process::{Command, Output};

use serde_json::Value;

fn liecert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liecert")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut a = args.to_vec();
    a.push("--json");
    let o = liecert(&a);
    (serde_json::from_slice(&o.stdout).unwrap(), o.status.code().unwrap())
}

fn statuses(v: &Value) -> Vec<String> {
    v["rows"].as_array().unwrap().iter().map(|r| r["status"].as_str().unwrap().to_string()).collect()
}

/// Top-level and row keys required by the shipped schema file.
fn check_against_schema(v: &Value, schema_file: &str) {
    let path = format!("{}/schemas/{schema_file}", env!("CARGO_MANIFEST_DIR"));
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["schema"], schema["$id"]);
    for k in schema["required"].as_array().unwrap() {
        assert!(v.get(k.as_str().unwrap()).is_some(), "missing {k}");
    }
    if let Some(row_keys) = schema["properties"]["rows"]["items"]["required"].as_array() {
        for row in v["rows"].as_array().unwrap() {
            for k in row_keys {
                assert!(row.get(k.as_str().unwrap()).is_some(), "row missing {k}");
            }
        }
    }
}

#[test]
fn elashvili_b3_sweep() {
    let (v, code) = json(&["verify", "elashvili", "--type", "B3"]);
    assert_eq!(code, 0);
    check_against_schema(&v, "report-1.schema.json");
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 7);
    for r in rows {
        assert_eq!(r["status"], "CERTIFIED");
        assert_eq!(r["certificate"]["claimed_index"], 3);
        assert!(!r["certificate"]["witness_functional"].as_array().unwrap().is_empty());
    }
    assert_eq!(v["totals"]["certified"], 7);
    assert_eq!(v["seed"], 0);
}

#[test]
fn elashvili_a1_has_two_orbits() {
    let o = liecert(&["verify", "elashvili", "--type", "A1"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("# schema=liecert.report/1 command=verify elashvili type=A1 seed=0"));
    assert_eq!(out.lines().filter(|l| l.contains("\tCERTIFIED\t")).count(), 2);
    assert!(out.contains("# totals rows=2 certified=2 unresolved=0 failed=0"));
}

#[test]
fn bolsinov_small_sweeps() {
    for (t, n) in [("A2", 3), ("C2", 4)] {
        let (v, code) = json(&["verify", "bolsinov", "--type", t]);
        assert_eq!(code, 0);
        assert_eq!(statuses(&v), vec!["CERTIFIED"; n], "{t}");
    }
    // The zero orbit gives V = 𝔤ˣ of dimension ℓ.
    let (v, _) = json(&["verify", "bolsinov", "--type", "A2"]);
    let zero = v["rows"].as_array().unwrap().iter().find(|r| r["id"] == "[1,1,1]").unwrap();
    assert_eq!(zero["bolsinov"]["dim_v"], 2);
}

#[test]
fn exceptional_sweep_uses_parabolics() {
    let (v, code) = json(&["verify", "elashvili", "--type", "G2", "--seed", "3"]);
    assert_eq!(code, 0);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r["kind"] == "richardson" && r["certificate"]["claimed_index"] == 2));
    assert_eq!(v["seed"], 3);
}

#[test]
fn appendix_e7_case_row() {
    let (v, code) = json(&["verify", "appendix", "--case", "e7-41"]);
    assert_eq!(code, 0);
    let r = &v["rows"][0];
    assert_eq!(r["status"], "CERTIFIED");
    assert_eq!((r["dim_ge"].as_u64(), r["dim_z"].as_u64()), (Some(41), Some(2)));
    assert_eq!(r["certificate"]["claimed_index"], 7);
    assert_eq!(r["case"]["condition"], 1);
}

#[test]
fn elashvili_with_case_checks_type() {
    let o = liecert(&["verify", "elashvili", "--type", "E6", "--case", "e7-41"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("E7"));
}

#[test]
fn missing_case_is_usage_error() {
    let o = liecert(&["verify", "appendix", "--case", "/nonexistent/x.case"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not found"));
}

#[test]
fn wrong_expectation_is_named_failure() {
    let dir = tempfile::tempdir().unwrap();
    let text = liecert::appendix::builtin_case_text("e7-41").unwrap().replace("dim_ge = 41", "dim_ge = 40");
    let path = dir.path().join("bad.case");
    std::fs::write(&path, text.replace("name: e7-41", "name: bad")).unwrap();
    let o = liecert(&["verify", "appendix", "--case", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let row = out.lines().find(|l| l.starts_with("bad\t")).unwrap();
    assert!(row.contains("\tFAILED\t"));
    assert!(row.contains("dim_ge: expected 40 got 41"));
}

#[test]
fn malformed_case_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.case");
    std::fs::write(&path, "type: E7\nbogus: 1\n").unwrap();
    let o = liecert(&["verify", "appendix", "--case", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let a = liecert(&["verify", "elashvili", "--type", "C3", "--seed", "11", "--json"]);
    let b = liecert(&["verify", "elashvili", "--type", "C3", "--seed", "11", "--json", "--parallelism", "3"]);
    let c = liecert(&["verify", "elashvili", "--type", "C3", "--seed", "11", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    assert!(!stdout(&a).contains("timing_ms"));
}

#[test]
fn timings_are_opt_in() {
    let o = liecert(&["verify", "elashvili", "--type", "A2", "--timings"]);
    let out = stdout(&o);
    assert!(out.lines().nth(1).unwrap().ends_with("\tms"));
}

#[test]
fn algebra_info_e8() {
    let (v, code) = json(&["algebra", "info", "--type", "E8"]);
    assert_eq!(code, 0);
    check_against_schema(&v, "algebra-1.schema.json");
    assert_eq!((v["dim"].as_u64(), v["rank"].as_u64(), v["borel_dim"].as_u64()), (Some(248), Some(8), Some(128)));
    let deg: Vec<u64> = v["degrees"].as_array().unwrap().iter().map(|d| d.as_u64().unwrap()).collect();
    assert_eq!(deg, vec![2, 8, 12, 14, 18, 20, 24, 30]);
    assert_eq!(v["highest_root"], serde_json::json!([2, 3, 4, 6, 5, 4, 3, 2]));
}

#[test]
fn orbits_list_counts() {
    let (v, _) = json(&["orbits", "list", "--type", "B3"]);
    check_against_schema(&v, "orbits-1.schema.json");
    let orbits = v["orbits"].as_array().unwrap();
    assert_eq!(orbits.len(), 7);
    let rigid: Vec<&str> = orbits.iter().filter(|o| o["rigid"] == true).map(|o| o["id"].as_str().unwrap()).collect();
    assert_eq!(rigid, vec!["[2,2,1,1,1]", "[1,1,1,1,1,1,1]"]);
    let (v, _) = json(&["orbits", "list", "--type", "E6"]);
    assert_eq!(v["orbits"].as_array().unwrap().len(), 63);
}

#[test]
fn bad_type_is_usage_error() {
    let o = liecert(&["algebra", "info", "--type", "Q5"]);
    assert_eq!(o.status.code(), Some(2));
}
