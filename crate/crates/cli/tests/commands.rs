use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn genusforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genusforge"))
        .args(args)
        .env_remove("GENUSFORGE_JOBS")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write_construction(dir: &Path, n: usize) -> String {
    let path = dir.join(format!("k{n}.rot"));
    let o = genusforge(&["construct", &n.to_string(), "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    path.to_str().unwrap().to_string()
}

#[test]
fn construct_summaries() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k8.rot");
    let o = genusforge(&["construct", "8", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "genus 11, faces 28, H present\n");
    assert!(fs::read_to_string(&path).unwrap().starts_with("rot 1 16\n"));

    let o = genusforge(&["construct", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stderr(&o).contains("genus 0, faces 2, H present"));
    assert_eq!(stdout(&o), "rot 1 4\n0: 1 3\n1: 0 2\n2: 1 3\n3: 0 2\n");

    let o = genusforge(&["construct", "7"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("conjectured"));
    assert_eq!(code(&genusforge(&["construct", "0"])), 2);
}

#[test]
fn construct_json() {
    let o = genusforge(&["construct", "8", "--format", "json"]);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["genus"], 11);
    assert_eq!(doc["f"], 28);
    assert_eq!(doc["faces"].as_array().unwrap().len(), 28);
    assert_eq!(doc["named_faces"]["C8"], serde_json::json!([0, 7, 10, 1, 8, 15, 2, 9]));
}

#[test]
fn verify_expectations() {
    let dir = tempfile::tempdir().unwrap();
    let k10 = write_construction(dir.path(), 10);
    let o = genusforge(&["verify", &k10, "--expect-genus", "18", "--expect-ham"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((doc["v"].as_u64(), doc["e"].as_u64(), doc["genus"].as_u64()), (Some(20), Some(100), Some(18)));
    assert_eq!(doc["hamiltonian_face"], true);

    let k8 = write_construction(dir.path(), 8);
    let o = genusforge(&["verify", &k8, "--expect-genus", "10"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("expected genus 10, found 11"));

    let bad = dir.path().join("asym.rot");
    fs::write(&bad, "rot 1 3\n0: 1 2\n1: 0\n2: 1\n").unwrap();
    let o = genusforge(&["verify", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line "), "{}", stderr(&o));

    let garbage = dir.path().join("garbage.rot");
    fs::write(&garbage, "rot 1 2\n0: 1\n1: zero\n").unwrap();
    let o = genusforge(&["verify", garbage.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 3"));

    // the plain 6-cycle bounds (0, 1, …, 5)
    let hex = dir.path().join("hex.rot");
    fs::write(&hex, "rot 1 6\n0: 5 1\n1: 0 2\n2: 1 3\n3: 2 4\n4: 3 5\n5: 4 0\n").unwrap();
    assert_eq!(code(&genusforge(&["verify", hex.to_str().unwrap(), "--expect-ham"])), 0);
}

#[test]
fn search_reports() {
    let o = genusforge(&["search", "4", "--mode", "exhaustive"]);
    assert_eq!(code(&o), 0);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["min_genus"], 2);
    assert_eq!(doc["iso_class_count"], 2);
    assert_eq!(doc["representatives"].as_array().unwrap().len(), 2);

    let o = genusforge(&["search", "3", "--mode", "exhaustive"]);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((doc["candidates_examined"].as_u64(), doc["min_genus"].as_u64()), (Some(1), Some(1)));

    let o = genusforge(&["search", "6", "--mode", "exhaustive"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("over the configured limit"));

    let o = genusforge(&["search", "4", "--mode", "random", "--seed", "9", "--budget", "10000"]);
    assert_eq!(code(&o), 0);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((doc["min_genus"].as_u64(), doc["seed"].as_u64()), (Some(2), Some(9)));
    assert_eq!(code(&genusforge(&["search", "4", "--mode", "random", "--budget", "0"])), 2);
}

#[test]
fn search_writes_representatives() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("reps");
    let o = genusforge(&["search", "4", "--out-dir", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    for i in 0..2 {
        let f = out.join(format!("rep_{i:03}.rot"));
        let v = genusforge(&["verify", f.to_str().unwrap(), "--expect-ham", "--expect-genus", "2"]);
        assert_eq!(code(&v), 0, "{}", stderr(&v));
    }
}

#[test]
fn jobs_from_environment() {
    let run = |jobs: &str| {
        Command::new(env!("CARGO_BIN_EXE_genusforge"))
            .args(["search", "5", "--mode", "random", "--seed", "2", "--budget", "3000"])
            .env("GENUSFORGE_JOBS", jobs)
            .output()
            .unwrap()
            .stdout
    };
    let doc: Value = serde_json::from_slice(&run("3")).unwrap();
    assert_eq!(doc["workers"], 3);
    assert_eq!(run("3"), run("3"));
}

#[test]
fn exports() {
    let dir = tempfile::tempdir().unwrap();
    let k8 = write_construction(dir.path(), 8);
    let svg = stdout(&genusforge(&["export", &k8, "--format", "svg-chord"]));
    assert_eq!(svg.matches(r#"class="h-edge""#).count(), 16);
    assert_eq!(svg.matches(r#"class="chord""#).count(), 8);

    let k10 = write_construction(dir.path(), 10);
    let svg = stdout(&genusforge(&["export", &k10, "--format", "svg-chord"]));
    assert!(svg.contains(r#"data-part="3" data-arcs="19-0 9-10""#));

    let dot = stdout(&genusforge(&["export", &k8, "--format", "dot"]));
    assert!(dot.starts_with("graph embedding {\n") && dot.ends_with("}\n"));
    let edges: Vec<&str> = dot.lines().filter(|l| l.contains(" -- ")).collect();
    assert_eq!(edges.len(), 64);
    assert!(edges.iter().all(|l| l.trim_end().ends_with(';')));

    // a search representative is not a construction
    let reps = dir.path().join("reps");
    genusforge(&["search", "4", "--out-dir", reps.to_str().unwrap()]);
    let other = reps.join("rep_000.rot");
    let other = if fs::read_to_string(&other).unwrap() == fs::read_to_string(write_construction(dir.path(), 4)).unwrap()
    {
        reps.join("rep_001.rot")
    } else {
        other
    };
    assert_eq!(code(&genusforge(&["export", other.to_str().unwrap(), "--format", "svg-chord"])), 2);
    assert_eq!(code(&genusforge(&["export", other.to_str().unwrap(), "--format", "dot"])), 0);
}

#[test]
fn interchange_command() {
    let dir = tempfile::tempdir().unwrap();
    let k6 = write_construction(dir.path(), 6);
    let o = genusforge(&["interchange", &k6, "--add-lane", "0,1", "--add-lane", "2,5", "--simplify"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["bridges"], 5);
    assert_eq!(doc["simple"], true);
    assert_eq!(doc["verdict"]["status"], "optimal");

    let o = genusforge(&["interchange", &k6, "--add-lane", "0,2"]);
    assert_eq!(code(&o), 2);

    // rotations (v−1, v+1, v+3, v+5) keep H as a face but need 3 bridges
    let sub = dir.path().join("sub.rot");
    let text: String = std::iter::once("rot 1 8\n".to_string())
        .chain((0..8).map(|v| format!("{v}: {} {} {} {}\n", (v + 7) % 8, (v + 1) % 8, (v + 3) % 8, (v + 5) % 8)))
        .collect();
    fs::write(&sub, text).unwrap();
    let o = genusforge(&["interchange", sub.to_str().unwrap()]);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["bridges"], 3);
    assert_eq!(doc["verdict"]["status"], "suboptimal");
    assert_eq!(code(&o), 1);
}
