use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn mfib(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mfib"))
        .args(args)
        .env_remove("MF_DEPTH")
        .output()
        .expect("spawn mfib")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn golden(name: &str) -> String {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    fs::read_to_string(p).unwrap()
}

/// Runs `mfib build` into a file inside `dir`.
fn built(dir: &TempDir, name: &str, g: Option<usize>) -> PathBuf {
    let file = dir.path().join(match g {
        Some(g) => format!("{name}_{g}.json"),
        None => format!("{name}.json"),
    });
    let gs = g.map(|g| g.to_string());
    let mut args = vec!["build", name, "--out", file.to_str().unwrap()];
    if let Some(gs) = &gs {
        args.extend(["--g", gs]);
    }
    let o = mfib(&args);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    file
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn build_golden() {
    let o = mfib(&["build", "u_11"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), golden("build_u_11.json"));
}

#[test]
fn invariants_golden() {
    let dir = TempDir::new().unwrap();
    let f = built(&dir, "u_10", None);
    let o = mfib(&["invariants", p(&f)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), golden("invariants_u_10.json"));
    let v = json(&o);
    assert_eq!((v["euler"].as_i64(), v["h2_rank"].as_i64()), (Some(2), Some(1)));
}

#[test]
fn census_golden() {
    let o = mfib(&["census", "2", "3", "--enumerate"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), golden("census_2_3.json"));
    let v = json(&o);
    assert_eq!(v["count"], v["enumerated"]);
    assert_eq!(v["classes"].as_array().unwrap().len(), 4);
}

#[test]
fn census_without_enumeration() {
    let v = json(&mfib(&["census", "0", "4"]));
    assert_eq!(v["count"].as_u64(), Some(2));
    assert!(v.get("classes").is_none());
}

#[test]
fn universality_exit_codes() {
    let dir = TempDir::new().unwrap();
    let u = built(&dir, "u_11", None);
    let pg = built(&dir, "p_g", Some(2));
    assert_eq!(code(&mfib(&["check-universal", p(&u), "--strong"])), 0);
    assert_eq!(code(&mfib(&["check-universal", p(&pg)])), 0);
    let o = mfib(&["check-universal", p(&pg), "--strong"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["strongly_universal"], "no");
}

#[test]
fn input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{").unwrap();
    let o = mfib(&["invariants", p(&bad)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("mfib: "));
    assert_eq!(code(&mfib(&["invariants", p(&dir.path().join("missing.json"))])), 2);
    assert_eq!(code(&mfib(&["build", "nonsense"])), 2);

    let u = built(&dir, "u_11", None);
    assert_eq!(code(&mfib(&["hurwitz", p(&u), "--move", "5:L"])), 2);
    assert_eq!(code(&mfib(&["hurwitz", p(&u), "--move", "1:X"])), 2);
}

#[test]
fn witness_fiber_mismatch() {
    let dir = TempDir::new().unwrap();
    let u = built(&dir, "u_11", None);
    let f = built(&dir, "u_g1", Some(2));
    assert_eq!(code(&mfib(&["witness", "-u", p(&u), "-f", p(&f)])), 2);
}

#[test]
fn witness_depth_from_environment() {
    let dir = TempDir::new().unwrap();
    let u = built(&dir, "u_11", None);
    let moved = dir.path().join("moved.json");
    assert_eq!(code(&mfib(&["hurwitz", p(&u), "--move", "1:R", "--out", p(&moved)])), 0);

    let o = mfib(&["witness", "-u", p(&u), "-f", p(&moved)]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!((v["result"].as_str(), v["depth"].as_u64()), (Some("immersion"), Some(4)));

    let o = Command::new(env!("CARGO_BIN_EXE_mfib"))
        .args(["witness", "-u", p(&u), "-f", p(&moved)])
        .env("MF_DEPTH", "0")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
    let v = json(&o);
    assert_eq!(v["result"], "unknown");
    assert_eq!(v["unmatched"], serde_json::json!([2]));
}

#[test]
fn hurwitz_moves_cancel_byte_for_byte() {
    let dir = TempDir::new().unwrap();
    let u = built(&dir, "u_g1", Some(3));
    let original = fs::read_to_string(&u).unwrap();
    for pair in [["2:L", "2:R"], ["4:R", "4:L"]] {
        let o = mfib(&["hurwitz", p(&u), "--move", pair[0], "--move", pair[1]]);
        assert_eq!(code(&o), 0);
        assert_eq!(stdout(&o), original);
    }
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let u = built(&dir, "u_g1", Some(3));
    for args in [
        vec!["reduce", p(&u), "--report"],
        vec!["check-universal", p(&u)],
        vec!["catalog", "--max-genus", "3"],
    ] {
        assert_eq!(stdout(&mfib(&args)), stdout(&mfib(&args)));
    }
}

#[test]
fn reduce_ends_at_the_pants() {
    let dir = TempDir::new().unwrap();
    let u = built(&dir, "u_g1", Some(2));
    let v = json(&mfib(&["reduce", p(&u)]));
    assert_eq!(v["fiber"], serde_json::json!({"genus": 0, "boundary": 3}));
    assert_eq!(v["cycles"].as_array().unwrap().len(), 3);

    let r = json(&mfib(&["reduce", p(&u), "--report"]));
    assert_eq!(r["exhausted"], false);
    assert!(!r["steps"].as_array().unwrap().is_empty());
}

#[test]
fn stabilization_round_trip() {
    let dir = TempDir::new().unwrap();
    let u = built(&dir, "u_11", None);
    let up = dir.path().join("up.json");
    assert_eq!(code(&mfib(&["stabilize", p(&u), "--mode", "boundary", "--sign", "-1", "--out", p(&up)])), 0);
    let o = mfib(&["destabilize", p(&up), "--generator", "d1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), fs::read_to_string(&u).unwrap());
    // F_{1,1} has no second handle
    assert_eq!(code(&mfib(&["destabilize", p(&u), "--generator", "b2"])), 2);
}

#[test]
fn catalog_matches_shipped_data() {
    let o = mfib(&["catalog"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), mfib::io::CATALOG_DATA);
}
