use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use shintani_cli::report::RunReport;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn shintani(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shintani"))
        .args(args)
        .env_remove("SHINTANI_PRECISION_CAP")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("shintani-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_accepts_example_fields() {
    for f in ["example1.field.json", "example2.field.json", "rationals.field.json"] {
        let o = shintani(&["validate", "--field", path(&data(f))]);
        assert_eq!(code(&o), 0, "{f}: {}", String::from_utf8_lossy(&o.stderr));
        assert_eq!(stdout_json(&o)["valid"], true);
    }
}

#[test]
fn validate_rejects_wrong_discriminant() {
    let text = std::fs::read_to_string(data("example1.field.json")).unwrap().replace("49", "7");
    let o = shintani(&["validate", "--field", path(&scratch("wrong_disc.json", &text))]);
    assert_eq!(code(&o), 2);
    let doc = stdout_json(&o);
    assert_eq!(doc["valid"], false);
    let failed: Vec<&str> = doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["ok"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["discriminant"]);
}

#[test]
fn malformed_json_reports_position() {
    let o = shintani(&["validate", "--field", path(&scratch("malformed.json", "{\n  \"name\": \"x\",\n  \"min_poly\": [1,\n"))]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 4"), "{err}");
}

#[test]
fn classnumber_example_one() {
    let o = shintani(&["classnumber", "--field", path(&data("example1.field.json")), "--prime", "3", "--wk", "6"]);
    assert_eq!(code(&o), 0);
    let rep: RunReport = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rep.schema, "shintani-report/1");
    assert_eq!(rep.h_k, "1");
    assert!(rep.assumptions.narrow_class_number_one);
    assert_eq!(rep.frames.iter().map(|f| f.s.len() * f.s[0].len()).collect::<Vec<_>>(), [78, 26]);
    assert_eq!(rep.frames[1].column_totals, ["5/6"]);
    // lossless and deterministic
    let again = shintani(&["classnumber", "--field", path(&data("example1.field.json")), "--prime", "3", "--wk", "6"]);
    assert_eq!(o.stdout, again.stdout);
    assert_eq!(shintani_cli::report::to_json(&rep).as_bytes(), &o.stdout[..]);
}

#[test]
fn classnumber_example_two_and_rationals() {
    let o = shintani(&["classnumber", "--field", path(&data("example2.field.json")), "--prime", "3", "--wk", "6"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["h_k"], "3");
    let o = shintani(&["classnumber", "--field", path(&data("rationals.field.json")), "--prime", "23", "--wk", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["h_k"], "3");
}

#[test]
fn classnumber_exit_codes() {
    let f = data("example1.field.json");
    let o = shintani(&["classnumber", "--field", path(&f), "--prime", "7", "--wk", "6"]);
    assert_eq!(code(&o), 3);
    // phi(10) = 4 does not divide 2n = 6
    let o = shintani(&["classnumber", "--field", path(&f), "--prime", "3", "--wk", "10"]);
    assert_eq!(code(&o), 3);
    let out = std::env::temp_dir().join(format!("shintani-nonintegral-{}.json", std::process::id()));
    let o = shintani(&["classnumber", "--field", path(&f), "--prime", "3", "--wk", "2", "--out", path(&out)]);
    assert_eq!(code(&o), 5);
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["h_k"], "1/3");
    assert_eq!(doc["integral"], false);
}

#[test]
fn precision_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_shintani"))
        .args(["classnumber", "--field", path(&data("example1.field.json")), "--prime", "3", "--wk", "6"])
        .env("SHINTANI_PRECISION_CAP", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
    let o = Command::new(env!("CARGO_BIN_EXE_shintani"))
        .args(["classnumber", "--field", path(&data("example1.field.json")), "--prime", "3", "--wk", "6"])
        .args(["--precision-cap", "256"])
        .env("SHINTANI_PRECISION_CAP", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0, "the flag overrides the environment");
    assert_eq!(stdout_json(&o)["inputs"]["precision_cap"], 256);
}

#[test]
fn decompose_term_counts() {
    let f = data("example1.field.json");
    let o = shintani(&["decompose", "--field", path(&f), "--prime", "3", "--char-k", "1", "--char-d", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["terms"].as_array().unwrap().len(), 52);
    let o = shintani(&["decompose", "--field", path(&f), "--prime", "3", "--char-k", "1", "--char-d", "26"]);
    let doc = stdout_json(&o);
    assert_eq!((doc["terms"].as_array().unwrap().len(), doc["distinct_tokens"].as_u64()), (52, Some(26)));
    let o = shintani(&["decompose", "--field", path(&f), "--prime", "3", "--char-k", "1", "--char-d", "4"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn table_rows_notes_and_determinism() {
    let f = data("example1.field.json");
    let map = scratch("wk.json", r#"{"3": 6, "11": 2, "19": {"w_k": 2, "q2": 1}}"#);
    let run = |jobs: &str| shintani(&["table", "--field", path(&f), "--pmin", "3", "--pmax", "50", "--wk-map", path(&map), "--jobs", jobs]);
    let one = run("1");
    assert_eq!(code(&one), 0);
    let text = String::from_utf8(one.stdout.clone()).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "p,w_k,q1,q2,set_sizes,h_k,error");
    assert_eq!(lines[1], "3,6,8,1,81;27,1,");
    assert_eq!(lines.len(), 4);
    let notes = String::from_utf8_lossy(&one.stderr);
    // inert p = 3 mod 4 below 50 not in the map
    for p in [23, 31, 47] {
        assert!(notes.contains(&format!("p = {p}:")), "{notes}");
    }
    // 7 ramifies and 43 = 1 (mod 7) splits
    assert!(!notes.contains("p = 7:") && !notes.contains("p = 43:"), "{notes}");
    assert_eq!(run("4").stdout, one.stdout);

    let o = shintani(&["table", "--field", path(&f), "--pmin", "3", "--pmax", "3", "--wk-map", path(&map), "--format", "json"]);
    let doc = stdout_json(&o);
    assert_eq!(doc["rows"].as_array().unwrap().len(), 1);
    assert_eq!(doc["rows"][0]["h_k"], "1");

    let o = shintani(&["table", "--field", path(&f), "--pmin", "4", "--pmax", "6", "--wk-map", path(&map)]);
    assert_eq!(code(&o), 0);
    assert_eq!(String::from_utf8_lossy(&o.stdout).lines().count(), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("no rows"));
}

#[test]
fn table_records_row_errors() {
    let map = scratch("wk_bad.json", r#"{"3": 5}"#);
    let o = shintani(&["table", "--field", path(&data("example1.field.json")), "--pmin", "3", "--pmax", "3", "--wk-map", path(&map)]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    let row = text.lines().nth(1).unwrap();
    assert!(row.starts_with("3,5,,,,,"), "{row}");
    assert!(row.contains("w_K = 5"), "{row}");
}

#[test]
fn selftest_passes() {
    let o = shintani(&["selftest"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stdout).contains("selftest passed"));
}
