use std::process::Command;

use kostant_core::pte::PteSolution;

fn kostant(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_kostant"))
        .args(args)
        .env_remove("KOSTANT_WORKERS")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run_in_process(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("kostant").chain(args.iter().copied());
    let code = kostant_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn pte_verify_example() {
    let (code, out, _) = kostant(&["pte", "verify", "--x", "1,2,6", "--y", "0,4,5", "--degree", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "verified, max_degree=2");
    let (code, out, _) = kostant(&["pte", "verify", "--x", "1,2,6", "--y", "0,4,5", "--degree", "3"]);
    assert_eq!(code, 1);
    assert_eq!(out.trim(), "not verified, max_degree=2");
    let (code, out, _) = kostant(&["pte", "verify", "--x", "1,2,3", "--y", "3,2,1", "--degree", "10"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "verified, max_degree=trivial");
}

#[test]
fn negative_entries_parse() {
    let (code, out, _) = kostant(&["pte", "verify", "--x", "2,-4", "--y", "-2,0", "--degree", "1"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn t0_example() {
    let (code, out, _) = kostant(&["separation", "t0", "--n", "4", "--k", "2", "--nu", "1,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "t0=3");
}

#[test]
fn grassmann_verify_example() {
    let (code, out, _) = kostant(&["grassmann", "verify", "--k", "2", "--n", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("sign convention"));
    assert!(out.trim_end().ends_with("PASS"));
}

#[test]
fn unsigned_relations_report_failure() {
    let (code, _, _) = kostant(&["grassmann", "relations", "--k", "2", "--n", "4"]);
    assert_eq!(code, 1);
    let (code, out, _) = kostant(&["grassmann", "relations", "--k", "2", "--n", "4", "--signed"]);
    assert_eq!(code, 0);
    assert!(out.contains("f_1 = -w1^3 + 2*w1*w2  ->  0"));
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, err) = kostant(&["bogus"]);
    assert_eq!(code, 2);
    assert!(err.contains("Usage"));
    let (code, _, _) = kostant(&["pte", "verify", "--x", "1,2", "--y", "1", "--degree", "1"]);
    assert_eq!(code, 2);
    let (code, _, _) = kostant(&["pte", "ideal", "--k", "2", "--bound", "0"]);
    assert_eq!(code, 2);
    let (code, _, _) = kostant(&["pte", "brute", "--size", "2", "--degree", "1", "--bound", "3", "--max-candidates", "0"]);
    assert_eq!(code, 2);
}

#[test]
fn budget_exceeded_exits_one() {
    let (code, _, err) = kostant(&["pte", "brute", "--size", "3", "--degree", "2", "--bound", "6", "--max-candidates", "5"]);
    assert_eq!(code, 1);
    assert!(err.contains("budget exceeded"));
    let (code, _, _) = kostant(&["matrix", "casimir", "--n", "3", "--k", "1", "--p", "4", "--max-p", "3"]);
    assert_eq!(code, 1);
}

#[test]
fn json_records_round_trip() {
    let (code, out, _) = kostant(&["pte", "ideal", "--k", "2", "--bound", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let sols: Vec<PteSolution> = out
        .lines()
        .map(|l| serde_json::from_str(l).expect("record parses"))
        .collect();
    assert!(!sols.is_empty());
    assert!(sols.iter().all(|s| s.ideal && s.size == 2));

    let (_, out, _) = kostant(&["pte", "brute", "--size", "3", "--degree", "2", "--bound", "6", "--format", "json"]);
    let sols: Vec<PteSolution> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(sols.iter().any(|s| s.x == vec![6, 2, 1] && s.y == vec![5, 4, 0]));

    let (_, out, _) = kostant(&["separation", "collisions", "--n", "4", "--k", "2", "--nu", "1,1,1", "--depth", "2", "--format", "json"]);
    let first: serde_json::Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
    for field in ["n", "k", "nu", "depth", "I", "J", "shared_vector"] {
        assert!(first.get(field).is_some(), "missing {field}");
    }
}

#[test]
fn output_is_deterministic_with_one_worker() {
    let args = ["pte", "ideal", "--k", "3", "--bound", "2", "--workers", "1"];
    let a = kostant(&args);
    let b = kostant(&args);
    assert_eq!(a, b);
    let args = ["separation", "collisions", "--n", "6", "--k", "3", "--nu", "1,1,1,1,1", "--depth", "2"];
    assert_eq!(run_in_process(&args), run_in_process(&args));
}

#[test]
fn checkpoint_flag_resumes() {
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("ideal.json");
    let cp = cp.to_str().unwrap();
    let first = kostant(&["pte", "ideal", "--k", "2", "--bound", "3", "--checkpoint", cp]);
    assert!(std::path::Path::new(cp).exists());
    let second = kostant(&["pte", "ideal", "--k", "2", "--bound", "3", "--checkpoint", cp]);
    assert_eq!(first, second);
}

#[test]
fn other_subcommands_run() {
    let cases: &[(&[&str], &str)] = &[
        (&["char", "equal", "--f", "3,2,1", "--g", "4,3,2"], "equal"),
        (&["weights", "sfun", "--nu", "1,1,1", "--p", "2"], "S2="),
        (&["schur", "--lambda", "1,1", "--n", "2"], "x1*x2"),
        (&["schur", "--lambda", "2,1", "--n", "3", "--method", "alternant"], "x1^2*x2"),
        (&["lr", "--mu", "1", "--nu", "1"], "1 [1,1]"),
        (&["grassmann", "mul", "--k", "2", "--n", "4", "--a", "1", "--b", "1"], "s[1,1] + s[2]"),
        (&["grassmann", "assoc", "--k", "2", "--n", "5", "--seed", "7"], "PASS"),
        (&["cartan", "verify", "--k", "1", "--n", "3", "--bound", "4"], "PASS"),
        (&["separation", "decompose", "--n", "2", "--k", "1", "--nu", "1"], "dim=3"),
        (&["matrix", "casimir", "--n", "2", "--k", "1"], "scalar 3/2"),
        (&["matrix", "kostant", "--n", "2", "--k", "1", "--j", "1"], "-1"),
        (&["matrix", "spectrum", "--n", "4", "--k", "2", "--j", "2"], "PASS"),
        (&["pte", "from-weights", "--n", "4", "--k", "2", "--nu", "1,1,1", "--i", "1,4", "--j", "2,3"], "X=[2, -4] Y=[0, -2] r=0 degree=1"),
    ];
    for (args, needle) in cases {
        let (code, out, err) = kostant(args);
        assert_eq!(code, 0, "{args:?}: {err}");
        assert!(out.contains(needle), "{args:?}: {out}");
    }
    let (code, _, _) = kostant(&["char", "equal", "--f", "3,2,1", "--g", "3,1,1"]);
    assert_eq!(code, 1);
}
