use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn absub(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_absub")).args(args).output().expect("run absub")
}

fn run(args: &[&str]) -> (i32, String) {
    let out = absub(args);
    (out.status.code().expect("exit code"), String::from_utf8(out.stdout).expect("utf-8"))
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", &path("mo2.oml")]).0, 0);
    assert_eq!(run(&["verify", &path("boolean4.grc")]).0, 0);
    assert_eq!(run(&["verify", &path("permutation_m3_source.alg")]).0, 0);
    let (code, out) = run(&["verify", &path("pentagon.oml")]);
    assert_eq!(code, 1);
    assert!(out.contains("complement"), "{out}");
    assert_eq!(run(&["verify", &path("malformed.oml")]).0, 2);
    assert_eq!(run(&["verify", &path("does-not-exist.oml")]).0, 2);
}

#[test]
fn bsub_counts_and_dot_output() {
    let (code, out) = run(&["bsub", &path("boolean3.oml")]);
    assert_eq!(code, 0);
    assert!(out.lines().next().unwrap().contains('5'), "{out}");
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("mo3.dot");
    let (code, _) = run(&["bsub", &path("mo3.oml"), "--dot", dot.to_str().unwrap()]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph"), "{text}");
    assert_eq!(text.matches("->").count(), 3);
}

#[test]
fn machine_format_is_json() {
    let (code, out) = run(&["--format", "machine", "bsub", &path("boolean4.grc")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["count"], 15);
    assert_eq!(v["exit_code"], 0);
    let (code, out) = run(&["--format", "machine", "verify", &path("malformed.oml")]);
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["error"].is_string());
}

#[test]
fn iso_compares_lattices() {
    assert_eq!(run(&["iso", &path("mo2.oml"), &path("mo2.oml")]).0, 0);
    assert_eq!(run(&["iso", &path("mo2.oml"), &path("mo3.oml")]).0, 1);
}

#[test]
fn reconstruct_counts_solutions() {
    let (code, out) = run(&["reconstruct", &path("mo2_identity.bsubiso")]);
    assert_eq!(code, 1);
    assert!(out.contains('4'), "{out}");
    assert_eq!(run(&["reconstruct", &path("hsum_b8_2_identity.bsubiso")]).0, 0);
}

#[test]
fn pipeline_round_trips_from_data() {
    for name in ["permutation_m3.inst", "transpose_m3.inst", "permutation_m3_files.inst"] {
        let (code, out) = run(&["pipeline", &path(name)]);
        assert_eq!(code, 0, "{name}: {out}");
        assert!(out.contains("PASS"), "{name}: {out}");
        assert!(!out.contains("FAIL"), "{name}: {out}");
    }
    assert_eq!(run(&["pipeline", &path("missing_algebra.inst")]).0, 2);
}

#[test]
fn counterexample_writes_an_instance() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("m2.inst");
    let (code, out) = run(&["counterexample", "--out", file.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert!(file.exists());
    let (code, out) = run(&["pipeline", file.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(out.lines().filter(|l| l.starts_with("candidate ")).count(), 4);
    let (code, out) = run(&["pipeline", "--diagnostic", file.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn bell_check_and_size_cap() {
    let (code, out) = run(&["bell-check", "--max", "4"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("15"), "{out}");
    let (code, _) = run(&["--max-size", "8", "pipeline", &path("permutation_m3.inst")]);
    assert_eq!(code, 1);
}
