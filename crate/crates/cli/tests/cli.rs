use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn polyad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyad"))
        .args(args)
        .env_remove("POLYAD_FIELD")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn fixture(dir: &TempDir, name: &str) -> PathBuf {
    let path = dir.path().join(format!("{}.toml", name.replace(['(', ')', ','], "_")));
    let o = polyad(&["examples", "generate", name, "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn run_on(args: &[&str], file: &Path) -> Output {
    let mut v = args.to_vec();
    v.push(file.to_str().unwrap());
    polyad(&v)
}

#[test]
fn sweedler_is_hopf() {
    let dir = TempDir::new().unwrap();
    let f = fixture(&dir, "sweedler");
    let o = run_on(&["check", "--property", "hopf"], &f);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("antipode"));
}

#[test]
fn idempotent_monoid_is_not_hopf() {
    let dir = TempDir::new().unwrap();
    let f = fixture(&dir, "idempotent");
    let o = run_on(&["check", "--property", "hopf"], &f);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("rank 3"));
}

#[test]
fn wrapped_fusion_counterexample() {
    let dir = TempDir::new().unwrap();
    let f = fixture(&dir, "const(delta1)");
    let o = run_on(&["wrapped-fusion", "--dims", "1,1", "--json"], &f);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let failed: Vec<_> = v["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == false).collect();
    assert_eq!(failed.len(), 1);
    assert!(failed[0]["detail"].as_str().unwrap().starts_with("3 -> 4"));
    let w = &failed[0]["witnesses"][0];
    assert_eq!((w["rows"].as_u64(), w["cols"].as_u64()), (Some(4), Some(3)));
}

#[test]
fn module_decomposition_needs_a_groupoid() {
    let dir = TempDir::new().unwrap();
    let f = fixture(&dir, "const(delta1)");
    let o = run_on(&["decompose", "mod"], &f);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("NotGroupoid"));
    let g = fixture(&dir, "grp(Z2)");
    assert_eq!(run_on(&["decompose", "mod"], &g).status.code(), Some(0));
}

#[test]
fn malformed_input_exits_2() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.toml");
    std::fs::write(&bad, "").unwrap();
    let o = run_on(&["validate"], &bad);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
    assert_eq!(run_on(&["validate"], &dir.path().join("missing.toml")).status.code(), Some(2));
    assert_eq!(polyad(&["examples", "generate", "nope"]).status.code(), Some(2));
}

#[test]
fn field_flag_and_env() {
    let dir = TempDir::new().unwrap();
    let f = fixture(&dir, "kZ2");
    assert_eq!(run_on(&["validate", "--field", "F5"], &f).status.code(), Some(2));
    let text = std::fs::read_to_string(&f).unwrap().replacen("field = \"Q\"\n", "", 1);
    std::fs::write(&f, text).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_polyad"))
        .args(["check", "--property", "hopf", f.to_str().unwrap()])
        .env("POLYAD_FIELD", "F2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(run_on(&["check", "--property", "hopf", "--field", "F3"], &f).status.code(), Some(0));
}

#[test]
fn braiding_and_restriction() {
    let dir = TempDir::new().unwrap();
    let f = fixture(&dir, "rmat(func(Z2))");
    assert_eq!(run_on(&["braiding"], &f).status.code(), Some(0));
    for functor in ["identity", "arrow", "point:*"] {
        assert_eq!(run_on(&["restrict", "--functor", functor], &f).status.code(), Some(0), "{functor}");
    }
    let k = fixture(&dir, "kZ2");
    assert_eq!(run_on(&["braiding"], &k).status.code(), Some(2));
    let r = dir.path().join("r.toml");
    std::fs::write(&r, "[[rmatrix]]\nobject = \"*\"\nentries = [[\"e*e\", \"1\"], [\"e*g\", \"1\"], [\"g*e\", \"1\"], [\"g*g\", \"-1\"]]\n").unwrap();
    assert_eq!(run_on(&["braiding", "--rmatrix", r.to_str().unwrap()], &k).status.code(), Some(1));
}

#[test]
fn wrapup_export_reparses() {
    let dir = TempDir::new().unwrap();
    let f = fixture(&dir, "hopfcat(kZ2,2)");
    let out = dir.path().join("total.toml");
    let o = run_on(&["wrapup", "--out", out.to_str().unwrap()], &f);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("# grading")).count(), 4);
    // with two objects the unit of the total algebra is a sum of idempotents,
    // so only the algebra and coalgebra axioms survive
    let o = run_on(&["validate", "--json"], &out);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(failed.iter().all(|n| n.contains("counit is multiplicative") || n.contains("units are grouplike")));
    assert!(failed.iter().any(|n| n.contains("units are grouplike")));

    let g = fixture(&dir, "grp(Z3)");
    let out = dir.path().join("total1.toml");
    assert_eq!(run_on(&["wrapup", "--out", out.to_str().unwrap()], &g).status.code(), Some(0));
    assert_eq!(run_on(&["validate"], &out).status.code(), Some(0));
    assert_eq!(run_on(&["check", "--property", "hopf"], &out).status.code(), Some(0));
}

#[test]
fn lift_and_coinvariants() {
    let dir = TempDir::new().unwrap();
    let f = fixture(&dir, "hopfcat(kZ2,2)");
    assert_eq!(run_on(&["lift-check", "--max-dim", "1"], &f).status.code(), Some(0));
    assert_eq!(run_on(&["coinv", "--dims", "2,1"], &f).status.code(), Some(0));
    assert_eq!(run_on(&["decompose", "rep", "--seed", "5"], &f).status.code(), Some(0));
    assert_eq!(run_on(&["coinv", "--dims", "2"], &f).status.code(), Some(2));
    let z = fixture(&dir, "delta1-zero-u");
    let o = run_on(&["decompose", "rep"], &z);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("M_u = 0"));
}
