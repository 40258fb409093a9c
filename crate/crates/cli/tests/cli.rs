//! End-to-end tests of the binary: subcommands, file formats, exit
//! codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_guardcover"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn construct_writes_canonical_edge_lists() {
    let dir = tempdir();
    let out = bin()
        .args(["construct", "tower", "2", "4", "--out"])
        .arg(dir.join("g.graph"))
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), "11 20\n");
    let text = std::fs::read_to_string(dir.join("g.graph")).unwrap();
    assert!(text.starts_with("11 20\n"));
    assert_eq!(text.lines().count(), 21);

    let out = bin()
        .args(["construct", "counterexample", "2", "--out"])
        .arg(dir.join("g15.graph"))
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), "15 69\n");
    let built = std::fs::read_to_string(dir.join("g15.graph")).unwrap();
    let golden = std::fs::read_to_string(data("g15.graph")).unwrap();
    assert_eq!(built, golden);
}

#[test]
fn construct_prism_of_k1_is_k2() {
    let dir = tempdir();
    let k1 = dir.join("k1.graph");
    std::fs::write(&k1, "1 0\n").unwrap();
    let out = bin().args(["construct", "prism"]).arg(&k1).output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2 1\n0 1\n");
}

#[test]
fn params_on_c5() {
    let dir = tempdir();
    let c5 = dir.join("c5.graph");
    std::fs::write(&c5, "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n").unwrap();
    let out = bin().arg("params").arg(&c5).arg("--gamma").output().unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    for needle in ["alpha 2", "omega 2", "chi 3", "theta 3", "gamma 3", "consistency ok"] {
        assert!(text.contains(needle), "missing {needle:?} in:\n{text}");
    }
    assert!(dir.join("c5.graph.gamma.cert").exists());
}

#[test]
fn params_on_k4() {
    let dir = tempdir();
    let k4 = dir.join("k4.graph");
    std::fs::write(&k4, "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    let out = bin().arg("params").arg(&k4).output().unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    for needle in ["alpha 1", "omega 4", "chi 4", "theta 1"] {
        assert!(text.contains(needle), "missing {needle:?} in:\n{text}");
    }
}

#[test]
fn refute_two_verifies_and_refutes() {
    let out = bin().args(["refute", "2"]).output().unwrap();
    assert!(out.status.success(), "refute 2 should exit 0");
    let text = stdout(&out);
    assert!(text.contains("claim theta-prism expected 8 computed 8 status ok"));
    assert!(text.contains("claim gamma-prism-upper expected <=7 computed <=7 status ok"));
    assert!(text.contains("value gamma-prism 7"));
    assert!(text.contains("verdict conjecture refuted"));
}

#[test]
fn refute_three_is_inconclusive_under_tiny_budget() {
    let out = bin()
        .args(["refute", "3", "--budget-nodes", "1000", "--rank-cap", "1000"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let text = stdout(&out);
    assert!(text.contains("verdict inconclusive"));
    assert!(text.contains("status inconclusive"));
}

#[test]
fn verify_cert_accepts_golden_files() {
    for (graph, cert) in [("k3.graph", "k3-k1.cert"), ("g15.graph", "g15-k4.cert")] {
        let out = bin()
            .arg("verify-cert")
            .arg(data(graph))
            .arg(data(cert))
            .output()
            .unwrap();
        assert!(out.status.success(), "{cert} should verify");
        assert!(stdout(&out).contains("certificate accepted"));
    }
}

#[test]
fn verify_cert_rejects_forged_p3() {
    let out = bin()
        .arg("verify-cert")
        .arg(data("p3.graph"))
        .arg(data("p3-forged.cert"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("closure violated at attack vertex 0"));
}

#[test]
fn verify_cert_rejects_fingerprint_mismatch() {
    let out = bin()
        .arg("verify-cert")
        .arg(data("p3.graph"))
        .arg(data("k3-k1.cert"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("fingerprint mismatch"));
}

#[test]
fn suite_subcommand_passes() {
    let out = bin()
        .args(["suite", "mycielski-chi", "--samples", "10", "--seed", "5"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("result pass"));
    assert!(text.contains("seed 5"));
}

#[test]
fn exit_codes_for_usage_and_data_errors() {
    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(64));

    let out = bin().args(["construct", "complete", "0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(64));

    let out = bin().args(["params", "/nonexistent/x.graph"]).output().unwrap();
    assert_eq!(out.status.code(), Some(65));

    let dir = tempdir();
    let bad = dir.join("bad.graph");
    std::fs::write(&bad, "3 1\n0 0\n").unwrap();
    let out = bin().arg("params").arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(65));
    assert!(String::from_utf8_lossy(&out.stderr).contains("self-loop"));

    let out = bin().args(["suite", "unknown-suite"]).output().unwrap();
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn reports_are_reproducible_across_runs_and_threads() {
    let run = |threads: &str| {
        let out = bin()
            .args(["refute", "2", "--threads", threads])
            .output()
            .unwrap();
        assert!(out.status.success());
        stdout(&out)
    };
    let a = run("1");
    let b = run("8");
    assert_eq!(a, b, "report bytes must not depend on the thread count");
}

fn tempdir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!(
        "guardcover-cli-test-{}-{:?}",
        std::process::id(),
        std::thread::current().id()
    ));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
