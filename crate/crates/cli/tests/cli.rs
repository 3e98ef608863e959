use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn setheq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_setheq"))
        .args(args)
        .env_remove("SETHEQ_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, body: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_owned()
}

// (x1 or not x2) and (x2 or x3): 4 models.
const CNF: &str = "p cnf 3 2\n1 -2 0\n2 3 0\n";

#[test]
fn count_parity_decide() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "f.cnf", CNF);
    let o = setheq(&["solve", "cnf", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("count: 4"));
    assert_eq!(setheq(&["solve", "cnf", &f, "--parity"]).status.code(), Some(1));
    assert_eq!(setheq(&["solve", "cnf", &f, "--decide"]).status.code(), Some(0));
    let unsat = write(&dir, "u.cnf", "p cnf 1 2\n1 0\n-1 0\n");
    assert_eq!(setheq(&["solve", "cnf", &unsat, "--decide"]).status.code(), Some(1));
}

#[test]
fn json_format() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "f.cnf", CNF);
    let o = setheq(&["--format", "json", "solve", "cnf", &f]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], "4");
}

#[test]
fn reduction_preserves_count_at_target() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "f.cnf", CNF);
    let hs = dir.path().join("hs.setsys");
    let hs = hs.to_str().unwrap();
    let o = setheq(&["--format", "json", "reduce", "cnf-to-hittingset", &f, hs, "--p", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let t = v["target"].as_u64().unwrap().to_string();
    let o = setheq(&["solve", "hittingset", hs, "--size", &t]);
    assert!(stdout(&o).contains("count: 4"), "{}", stdout(&o));
}

#[test]
fn many_outputs_get_a_manifest() {
    let dir = TempDir::new().unwrap();
    let sys = write(&dir, "s.setsys", "p setsys 3 2\n0 1\n1 2\n");
    let out = dir.path().join("split");
    let o = setheq(&["reduce", "hs-to-splitting", &sys, out.to_str().unwrap(), "--p", "1", "--t", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(Path::new(&out).join("manifest.json").exists());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(setheq(&[]).status.code(), Some(2));
    assert_eq!(setheq(&["solve", "cnf", "/nonexistent/file"]).status.code(), Some(2));
    let dir = TempDir::new().unwrap();
    let sys = write(&dir, "s.setsys", "p setsys 3 2\n0 1\n1 2\n");
    let out = dir.path().join("o");
    // missing --t
    let o = setheq(&["reduce", "hs-to-splitting", &sys, out.to_str().unwrap(), "--p", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(setheq(&["verify", "nosuchsuite"]).status.code(), Some(2));
}

#[test]
fn cap_flag_and_env() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "f.cnf", CNF);
    assert_eq!(setheq(&["--cap", "2", "solve", "cnf", &f]).status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_setheq"))
        .args(["--cap", "20", "solve", "cnf", &f])
        .env("SETHEQ_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let o = Command::new(env!("CARGO_BIN_EXE_setheq"))
        .args(["solve", "cnf", &f])
        .env("SETHEQ_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_is_seeded() {
    let a = setheq(&["--seed", "9", "--format", "json", "verify", "steiner", "--seeds", "4"]);
    let b = setheq(&["--seed", "9", "--format", "json", "verify", "steiner", "--seeds", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bench_reports_slope() {
    let o = setheq(&["bench", "cnf-brute", "--n", "4,6,8", "--budget-ms", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("slope:"));
}

#[test]
fn subset_sum_modes_agree() {
    let dir = TempDir::new().unwrap();
    // 5 + 9 = 14; no subset of {3, 5, 9} sums to 13.
    let yes = write(&dir, "y.ss", "3\n5\n9\nt 14\n");
    let no = write(&dir, "n.ss", "3\n5\n9\nt 13\n");
    for mode in ["dp", "brute"] {
        let o = setheq(&["solve", "subsetsum", &yes, "--mode", mode]);
        assert_eq!(o.status.code(), Some(0), "{mode}: {}", stdout(&o));
        let o = setheq(&["solve", "subsetsum", &no, "--mode", mode]);
        assert_eq!(o.status.code(), Some(1), "{mode}: {}", stdout(&o));
    }
}
