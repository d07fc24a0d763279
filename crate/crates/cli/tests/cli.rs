use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_omegacat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn write(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.path().join(name);
    let mut full: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap().to_string();
    full.extend(["--out", &p]);
    let o = run(&full);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn counts(path: &Path) -> String {
    let o = run(&["counts", "--in", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    stdout(&o).trim().to_string()
}

#[test]
fn oriental_counts() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "o2.json", &["oriental", "--n", "2"]);
    assert_eq!(counts(&f), "dim0: 3, dim1: 4, dim2: 1");
    assert_eq!(stdout(&run(&["oriental", "--n", "2"])), fs::read_to_string(&f).unwrap());
}

#[test]
fn cube_counts() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "q2.json", &["cube", "--n", "2"]);
    assert_eq!(counts(&f), "dim0: 4, dim1: 6, dim2: 1");
    let f = write(&dir, "q3.json", &["cube", "--n", "3", "--max-dim", "1"]);
    assert_eq!(counts(&f), "dim0: 8, dim1: 30");
}

#[test]
fn cones_and_cylinders_from_files_and_iterates() {
    let dir = TempDir::new().unwrap();
    let o1 = write(&dir, "o1.json", &["oriental", "--n", "1"]);
    let s = write(&dir, "s.json", &["cone", "--in", o1.to_str().unwrap()]);
    assert_eq!(counts(&s), "dim0: 3, dim1: 4, dim2: 1");
    let s3 = write(&dir, "s3.json", &["cone", "--iterate", "3"]);
    assert_eq!(counts(&s3), "dim0: 4, dim1: 11, dim2: 8, dim3: 1");
    let q1 = write(&dir, "q1.json", &["cube", "--n", "1"]);
    let c = write(&dir, "c.json", &["cylinder", "--in", q1.to_str().unwrap()]);
    assert_eq!(counts(&c), "dim0: 4, dim1: 6, dim2: 1");
    let c2 = write(&dir, "c2.json", &["cylinder", "--iterate", "2"]);
    assert_eq!(counts(&c2), "dim0: 4, dim1: 6, dim2: 1");
    let doc: Value = serde_json::from_str(&fs::read_to_string(&c2).unwrap()).unwrap();
    assert_eq!(doc["manifest"]["kind"], "cylinder");
    assert_eq!(doc["manifest"]["parameters"][0]["name"], "iterate");
}

#[test]
fn verify_axioms_passes_on_a_clean_file() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "q2.json", &["cube", "--n", "2"]);
    let o = run(&["verify-axioms", "--in", f.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "pass");
    assert!(v["problems"].as_array().unwrap().is_empty());
}

#[test]
fn verify_axioms_lists_witnesses_for_a_corrupted_file() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "o2.json", &["oriental", "--n", "2"]);
    let mut doc: Value = serde_json::from_str(&fs::read_to_string(&f).unwrap()).unwrap();
    // send some non-trivial 1-cell composite to a different parallel 1-cell
    let cells = doc["cells"][1].as_array().unwrap().clone();
    let table = doc["compositions"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|t| t["dim"] == 1 && t["level"] == 0)
        .unwrap();
    let row = table["table"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|r| {
            let z = r[2].as_u64().unwrap() as usize;
            let nontrivial = |i: u64| cells[i as usize]["identity_of"].is_null();
            nontrivial(r[0].as_u64().unwrap()) && nontrivial(r[1].as_u64().unwrap()) && cells[z]["identity_of"].is_null()
        })
        .unwrap();
    let z = row[2].as_u64().unwrap() as usize;
    let other = (0..cells.len())
        .find(|&i| i != z && cells[i]["src"] == cells[z]["src"] && cells[i]["tgt"] == cells[z]["tgt"])
        .unwrap();
    row[2] = other.into();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, doc.to_string()).unwrap();

    let o = run(&["verify-axioms", "--in", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "fail");
    assert!(!v["report"]["violations"].as_array().unwrap().is_empty());
    assert!(v["problems"][0].as_str().unwrap().contains("checksum"));
}

#[test]
fn verify_axioms_rejects_a_dangling_reference() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "o2.json", &["oriental", "--n", "2"]);
    let text = fs::read_to_string(&f).unwrap();
    let mut doc: Value = serde_json::from_str(&text).unwrap();
    doc["cells"][2][0]["tgt"] = 500.into();
    fs::write(&f, doc.to_string()).unwrap();
    let o = run(&["verify-axioms", "--in", f.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("/cells/2/0/tgt"));
    assert_eq!(code(&run(&["counts", "--in", f.to_str().unwrap()])), 2);
}

#[test]
fn verify_iso_certifies_small_cases() {
    for (kind, n) in [("oriental", "2"), ("cube", "2"), ("oriental", "0")] {
        let o = run(&["verify-iso", "--kind", kind, "--n", n]);
        assert_eq!(code(&o), 0, "{kind} {n}");
        let reports: Value = serde_json::from_str(&stdout(&o)).unwrap();
        for r in reports.as_array().unwrap() {
            assert_eq!(r["status"], "pass");
        }
    }
}

#[test]
fn export_dot_draws_the_skeleton() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "o1.json", &["oriental", "--n", "1"]);
    let o = run(&["export-dot", "--in", f.to_str().unwrap(), "--dim", "1"]);
    assert_eq!(code(&o), 0);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("label=\"(01)\""));
    let q = write(&dir, "q2.json", &["cube", "--n", "2"]);
    let dot = stdout(&run(&["export-dot", "--in", q.to_str().unwrap(), "--dim", "2"]));
    assert_eq!(dot.matches(" -> ").count(), 6);
    assert_eq!(dot.matches("shape=note").count(), 1);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(code(&run(&[])), 2);
    assert_eq!(code(&run(&["oriental"])), 2);
    assert_eq!(code(&run(&["export-dot", "--in", "x.json", "--dim", "3"])), 2);
    assert_eq!(code(&run(&["cone", "--in", "x.json", "--iterate", "2"])), 2);
    assert_eq!(code(&run(&["counts", "--in", "/nonexistent/file.json"])), 2);
    assert_eq!(code(&run(&["verify-iso", "--kind", "sphere", "--n", "1"])), 2);
}
