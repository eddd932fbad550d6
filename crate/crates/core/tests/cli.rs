use std::path::Path;
use std::process::{Command, Output};

fn lqb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lqb")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn emit(dir: &Path, name: &str) -> String {
    let o = lqb(&["example", name, "--emit"]);
    assert_eq!(code(&o), 0);
    let path = dir.join(format!("{name}.json"));
    std::fs::write(&path, &o.stdout).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn example_lists_and_emits_catalog() {
    let o = lqb(&["example"]);
    assert_eq!(code(&o), 0);
    let listing = String::from_utf8(o.stdout).unwrap();
    assert_eq!(listing.lines().count(), 6);
    assert!(listing.contains("sl2-exact-r"));
    let o = lqb(&["example", "sl2-exact-r", "--emit"]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("{\n  \"dim\": 3,"));
    assert!(text.contains("\"r\": [\n    [2, 3, \"1\"]\n  ]"));
    let o = lqb(&["example", "sl3"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8(o.stderr).unwrap().starts_with("error: unknown example"));
}

#[test]
fn check_passes_on_catalog_and_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["abelian2", "heisenberg3", "sl2-bialgebra", "sl2-exact-r", "sl2-quasitriangular", "aff1r-exact"] {
        let file = emit(dir.path(), name);
        let report = dir.path().join("r.json");
        let o = lqb(&["check", &file, "--report", report.to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{name}: {}", String::from_utf8_lossy(&o.stdout));
        assert!(String::from_utf8(o.stdout).unwrap().ends_with("result: pass\n"));
        let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
        assert_eq!(json["exit_code"], 0);
        assert_eq!(json["command"], "check");
    }
}

#[test]
fn check_exits_one_on_math_failure_and_two_on_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, r#"{"dim": 3, "basis": ["x", "y", "z"], "mu": [[1, 2, 2, "1"]], "gamma": [[1, 2, 2, "1"], [1, 3, 3, "1"]]}"#).unwrap();
    let o = lqb(&["--quiet", "check", broken.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(o.stdout.is_empty());

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"dim\": 2,\n \"mu\": [[1, 2, 2, \"1/0\"]]}").unwrap();
    let report = dir.path().join("err.json");
    let o = lqb(&["check", bad.to_str().unwrap(), "--report", report.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8(o.stderr).unwrap().contains("malformed rational"));
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["exit_code"], 2);

    let o = lqb(&["check", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(code(&o), 2);
}

#[test]
fn double_round_trips_through_check() {
    let dir = tempfile::tempdir().unwrap();
    let file = emit(dir.path(), "sl2-exact-r");
    let out1 = dir.path().join("d1.json");
    let out2 = dir.path().join("d2.json");
    let r1 = dir.path().join("r1.json");
    let r2 = dir.path().join("r2.json");
    for (out, rep) in [(&out1, &r1), (&out2, &r2)] {
        let o = lqb(&["--quiet", "double", &file, "--out", out.to_str().unwrap(), "--report", rep.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
    }
    assert_eq!(std::fs::read(&out1).unwrap(), std::fs::read(&out2).unwrap());
    assert_eq!(std::fs::read(&r1).unwrap(), std::fs::read(&r2).unwrap());
    let o = lqb(&["--quiet", "check", out1.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
}

#[test]
fn rep_verify_reports_rank_and_enforces_cap() {
    let dir = tempfile::tempdir().unwrap();
    let file = emit(dir.path(), "sl2-exact-r");
    let o = lqb(&["rep-verify", &file]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8(o.stdout).unwrap().contains("rank Q = 64"));
    let o = lqb(&["rep-verify", &file, "--max-dim", "2"]);
    assert_eq!(code(&o), 2);
    assert_eq!(String::from_utf8(o.stderr).unwrap(), "error: dimension 3 exceeds --max-dim 2\n");
    let big = dir.path().join("big.json");
    std::fs::write(&big, r#"{"dim": 8, "mu": []}"#).unwrap();
    let o = lqb(&["rep-verify", big.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
}
