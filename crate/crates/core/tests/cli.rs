// Exit-code and output contract of the msgraph binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use msgraph::classify::{classify_hamiltonian, HamiltonianVerdict};
use msgraph::cli::{exhaust_report, verify_report, EXIT_FAIL};
use msgraph::{parse_graph, MultisignedCompleteGraph};
use tempfile::TempDir;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn msgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_msgraph"))
        .args(args)
        .output()
        .expect("run msgraph")
}

fn msgraph_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_msgraph"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("run msgraph")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn result_line(o: &Output) -> String {
    stdout(o)
        .lines()
        .last()
        .expect("non-empty stdout")
        .to_string()
}

fn run_file(cmd: &str, name: &str) -> Output {
    msgraph(&[cmd, fixture(name).to_str().unwrap()])
}

#[test]
fn classify_outcomes() {
    let o = run_file("classify", "k5_negative.msgraph");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(result_line(&o), "RESULT: ALL_SAME -");
    assert!(stdout(&o).contains("triangles: ALL_EQUAL -"));
    assert!(stdout(&o).contains("balanced: no (triangle 0 1 2 = -)"));

    let o = run_file("classify", "k6_negative.msgraph");
    assert_eq!(result_line(&o), "RESULT: ALL_SAME +");

    let o = run_file("classify", "k4_one_negative.msgraph");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(result_line(&o), "RESULT: MIXED");
    assert!(stdout(&o).contains("triangles: MIXED (0 1 2)=- (0 2 3)=+"));

    let o = run_file("classify", "k5_positive.msgraph");
    assert!(stdout(&o).contains("balanced: yes"));
}

#[test]
fn parse_errors_exit_2_on_stderr_only() {
    let o = run_file("classify", "k3_missing_edge.msgraph");
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 5: missing edge 1 2"), "{err}");

    let o = msgraph(&["classify", "/nonexistent/file.msgraph"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn oracle_outcomes() {
    let o = run_file("oracle", "k4_one_negative.msgraph");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("hamiltonian cycles: 3"));
    assert!(out.contains("  + 1\n"));
    assert!(out.contains("  - 2\n"));
    assert_eq!(result_line(&o), "RESULT: 2 distinct");

    let o = run_file("oracle", "k5_positive.msgraph");
    assert_eq!(result_line(&o), "RESULT: 1 distinct");

    let o = run_file("oracle", "k14_random.msgraph");
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn verify_outcomes() {
    let o = run_file("verify", "planted_n7_m3.msgraph");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("classifier: MIXED (theorem)"));
    assert!(out.contains("oracle: MIXED (360 cycles"));
    assert_eq!(result_line(&o), "RESULT: PASS");

    for name in [
        "k5_negative.msgraph",
        "k6_negative.msgraph",
        "k5_constant_m2.msgraph",
        "k4_one_negative.msgraph",
        "random_n4_m1_seed7.msgraph",
    ] {
        let o = run_file("verify", name);
        assert_eq!(o.status.code(), Some(0), "{name}");
        assert_eq!(result_line(&o), "RESULT: PASS", "{name}");
    }

    let o = run_file("verify", "k14_random.msgraph");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_catches_corrupted_classifier() {
    let text = fs::read_to_string(fixture("k6_negative.msgraph")).unwrap();
    let graph = parse_graph(&text).unwrap();
    // ignores the parity of n - 2
    let corrupted = |g: &MultisignedCompleteGraph| {
        let mut c = classify_hamiltonian(g)?;
        if let HamiltonianVerdict::AllSame(_) = c.verdict {
            c.verdict = HamiltonianVerdict::AllSame(g.triangle_multisign(0, 1, 2)?);
        }
        Ok(c)
    };
    let mut out = Vec::new();
    let code = verify_report(&graph, corrupted, &mut out)
        .map_err(|f| f.message)
        .unwrap();
    assert_eq!(code, EXIT_FAIL);
    assert!(String::from_utf8(out).unwrap().ends_with("RESULT: FAIL\n"));
}

#[test]
fn gen_outputs() {
    let o = msgraph(&[
        "gen", "--n", "5", "--m", "1", "--model", "constant", "--sign", "-",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        fs::read_to_string(fixture("k5_negative.msgraph")).unwrap()
    );

    let args = [
        "gen", "--n", "6", "--m", "2", "--model", "random", "--seed", "9", "--p", "0.3",
    ];
    let a = msgraph(&args);
    let b = msgraph(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let g = parse_graph(&stdout(&a)).unwrap();
    assert_eq!((g.n(), g.width()), (6, 2));

    let dir = TempDir::new().unwrap();
    let o = msgraph_in(
        dir.path(),
        &[
            "gen",
            "--n",
            "7",
            "--m",
            "3",
            "--model",
            "planted-mixed",
            "--seed",
            "4",
            "--out",
            "g.msgraph",
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(result_line(&o), "RESULT: PASS");
    let written = fs::read_to_string(dir.path().join("g.msgraph")).unwrap();
    assert_eq!(parse_graph(&written).unwrap().n(), 7);
}

#[test]
fn gen_rejects_inconsistent_flags() {
    let cases: &[&[&str]] = &[
        &["gen", "--n", "3", "--model", "planted-mixed"],
        &["gen", "--n", "5", "--model", "constant"],
        &["gen", "--n", "5", "--model", "random", "--sign", "-"],
        &[
            "gen", "--n", "5", "--model", "constant", "--sign", "-", "--seed", "1",
        ],
        &[
            "gen", "--n", "5", "--model", "constant", "--sign", "-", "--m", "2",
        ],
        &["gen", "--n", "5", "--model", "planted-mixed", "--p", "0.2"],
        &["gen", "--n", "5", "--model", "random", "--p", "1.5"],
        &["gen", "--n", "5", "--model", "nonsense"],
        &["gen", "--model", "random"],
        &["frobnicate"],
    ];
    for args in cases {
        let o = msgraph(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn exhaust_outcomes() {
    let dir = TempDir::new().unwrap();
    let o = msgraph_in(dir.path(), &["exhaust", "--n", "4", "--m", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("instances: 64\n"));
    assert_eq!(result_line(&o), "RESULT: PASS");
    assert!(String::from_utf8_lossy(&o.stderr).contains("elapsed:"));

    let o = msgraph_in(dir.path(), &["exhaust", "--n", "5", "--m", "1"]);
    assert!(stdout(&o).contains("instances: 1024\n"));
    assert_eq!(result_line(&o), "RESULT: PASS");

    let o = msgraph_in(dir.path(), &["exhaust", "--n", "6", "--m", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("2^30"));
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn exhaust_failure_writes_counterexamples() {
    let dir = TempDir::new().unwrap();
    // calls every unbalanced graph mixed
    let broken = |g: &MultisignedCompleteGraph| {
        let mut c = classify_hamiltonian(g)?;
        if !msgraph::is_balanced(g).is_balanced() {
            c.verdict = HamiltonianVerdict::Mixed;
        }
        Ok(c)
    };
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = exhaust_report(4, 1, broken, dir.path(), &mut out, &mut err)
        .map_err(|f| f.message)
        .unwrap();
    assert_eq!(code, EXIT_FAIL);
    let out = String::from_utf8(out).unwrap();
    assert!(out.ends_with("RESULT: FAIL\n"));
    // switched all-negative K_4 graphs: 2^3 of them
    let files: Vec<_> = fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    assert_eq!(files.len(), 8);
    for f in files {
        let g = parse_graph(&fs::read_to_string(&f).unwrap()).unwrap();
        assert_eq!(
            classify_hamiltonian(&g).unwrap().verdict,
            HamiltonianVerdict::AllSame("+".parse().unwrap())
        );
    }
}

#[test]
fn props_outcomes() {
    let o = msgraph(&["props", "--trials", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(result_line(&o), "RESULT: PASS");

    let o = msgraph(&[
        "props", "--trials", "300", "--seed", "3", "--nmax", "7", "--mmax", "3",
    ]);
    let out = stdout(&o);
    for suite in [
        "hourglass",
        "fan-decomposition",
        "switching",
        "rotation-reflection",
    ] {
        assert!(
            out.contains(&format!("{suite}: PASS (300 instances, 0 failures)")),
            "{out}"
        );
    }
    assert_eq!(result_line(&o), "RESULT: PASS");

    let o = msgraph(&["props", "--trials", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = msgraph(&["props", "--nmax", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn identical_invocations_give_identical_stdout() {
    let dir = TempDir::new().unwrap();
    for args in [
        vec!["exhaust", "--n", "4", "--m", "2"],
        vec!["props", "--trials", "50", "--seed", "8"],
    ] {
        let a = msgraph_in(dir.path(), &args);
        let b = msgraph_in(dir.path(), &args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let a = run_file("classify", "planted_n7_m3.msgraph");
    let b = run_file("classify", "planted_n7_m3.msgraph");
    assert_eq!(a.stdout, b.stdout);
}
