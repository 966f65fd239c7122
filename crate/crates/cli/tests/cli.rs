use std::path::Path;
use std::process::{Command, Output};

fn isopair(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isopair")).args(args).current_dir(dir).env_remove("ISOPAIR_JOBS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn make_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = isopair(&["make", "gl:1,1", "-o", "g.json"], d);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(d.join("g.json")).unwrap()).unwrap();
    assert_eq!(v["v1"]["labels"].as_array().unwrap().len(), 4);
    let o = isopair(&["verify", "g.json", "--jobs", "2"], d);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("jacobi-analog:printed"));
    assert!(stdout(&o).contains("antisymmetry:corrected"));

    let o = isopair(&["make", "gl:1,0"], d);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["v1"]["labels"].as_array().unwrap().len(), 1);
    assert!(v["m1"].as_array().unwrap().is_empty());

    let o = isopair(&["make", "osq:2"], d);
    assert!(o.status.success());
    assert!(stderr(&o).contains("1|3"));
}

#[test]
fn corrupted_and_malformed_input() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    isopair(&["make", "gl:2,1", "-o", "g.json"], d);
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(d.join("g.json")).unwrap()).unwrap();
    // Double one even structure constant of the first tensor.
    let entry = v["m1"].as_array_mut().unwrap().iter_mut().find(|e| e["out"][0]["c"] == "1").unwrap();
    entry["out"][0]["c"] = "2".into();
    std::fs::write(d.join("bad.json"), serde_json::to_string_pretty(&v).unwrap()).unwrap();
    let o = isopair(&["verify", "bad.json", "--json"], d);
    assert_eq!(o.status.code(), Some(1));
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r["failure_count"].as_u64().unwrap() > 0);
    assert!(stdout(&o).contains("\"tuple\""));

    std::fs::write(d.join("broken.json"), "{\n  \"v1\": [1,\n").unwrap();
    let o = isopair(&["verify", "broken.json"], d);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line"), "{}", stderr(&o));
    assert_eq!(isopair(&["verify", "missing.json"], d).status.code(), Some(2));
    assert_eq!(isopair(&["make", "nope:1"], d).status.code(), Some(2));
    assert_eq!(isopair(&["make", "gl:1"], d).status.code(), Some(2));
}

#[test]
fn jobs_do_not_change_reports() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    isopair(&["make", "gl:2,1", "-o", "g.json"], d);
    let one = isopair(&["verify", "g.json", "--json", "--jobs", "1"], d);
    let many = Command::new(env!("CARGO_BIN_EXE_isopair"))
        .args(["verify", "g.json", "--json"])
        .current_dir(d)
        .env("ISOPAIR_JOBS", "3")
        .output()
        .unwrap();
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn catalog_entries() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert!(isopair(&["make", "magnetic:sl2", "--catalog", "msl2", "-o", "c.json"], d).status.success());
    assert_eq!(isopair(&["verify", "c.json"], d).status.code(), Some(0));
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(d.join("c.json")).unwrap()).unwrap();
    v["pair_sha256"] = "00".into();
    std::fs::write(d.join("c2.json"), v.to_string()).unwrap();
    assert_eq!(isopair(&["verify", "c2.json"], d).status.code(), Some(1));
}

#[test]
fn superalgebra_and_triple_system() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    isopair(&["make", "gl:1,1", "-o", "g.json"], d);
    let o = isopair(&["tkk", "g.json", "-o", "a.json"], d);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(d.join("a.json").exists());
    assert_eq!(isopair(&["lts", "g.json", "--flip"], d).status.code(), Some(0));
    // An isotopic pair is not a super-Jordan pair.
    assert_eq!(isopair(&["lts", "g.json"], d).status.code(), Some(2));
}

#[test]
fn representations() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = isopair(&["rep", "hw", "--pair", "gl:2,0", "--weights", "1/2,1/2", "--cap", "6", "-o", "m.json"], d);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("total dimension 4, stabilized: true"));
    assert_eq!(isopair(&["rep", "check", "m.json"], d).status.code(), Some(0));
    let o = isopair(&["rep", "hw", "--pair", "gl:2,0", "--chi1", "0,0,0,0", "--chi2", "0,0,0,0"], d);
    assert!(stdout(&o).contains("total dimension 2"));
    let o = isopair(&["rep", "induce", "--pair", "gl:2,0", "--sub1", "0,3", "--sub2", "0,3"], d);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(isopair(&["rep", "induce", "--pair", "gl:2,0", "--sub1", "1,2", "--sub2", "0"], d).status.code(), Some(2));
    assert_eq!(isopair(&["rep", "hw", "--pair", "magnetic:sl2"], d).status.code(), Some(2));
}

#[test]
fn graph_check_and_poly_check() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    isopair(&["rep", "hw", "--pair", "gl:2,0", "-o", "m.json"], d);
    let m: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(d.join("m.json")).unwrap()).unwrap();
    let r = &m["rep"];
    let one = serde_json::json!({"rows": 1, "cols": 1, "nz": [[0, 0, "1"]]});
    let g = serde_json::json!({
        "pair": r["pair"], "h": r["h"], "t1": [r["t1"]], "t2": [r["t2"]], "p": one, "q": one,
    });
    std::fs::write(d.join("g.json"), g.to_string()).unwrap();
    let o = isopair(&["rep", "graph-check", "g.json"], d);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
    let o = isopair(&["poly-check", "--trials", "10", "--seed", "5"], d);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn suite_passes() {
    let dir = tempfile::tempdir().unwrap();
    let o = isopair(&["suite"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("13/13 criteria passed"));
}
