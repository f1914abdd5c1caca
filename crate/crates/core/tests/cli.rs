use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use specgraph::cli_io::{read_edge_list, read_eigenvalues};

fn specgraph(args: &[&str]) -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_specgraph"));
    cmd.args(args).env_remove("SPECGRAPH_SEED");
    cmd
}

fn run(args: &[&str]) -> Output {
    specgraph(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("terminated by a signal")
}

fn report(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn sample_then_spectrum() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.txt");
    let out = run(&["sample", "--model", "gnp", "--n", "10", "--p", "0.5", "--seed", "1", "--out", graph.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let g = read_edge_list(&graph).unwrap();
    assert_eq!(g.n(), 10);

    let csv = dir.path().join("eig.csv");
    let out = run(&["spectrum", "--in", graph.to_str().unwrap(), "--out", csv.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let values = read_eigenvalues(&csv).unwrap();
    assert_eq!(values.len(), 10);
    let trace: f64 = values.iter().sum();
    assert!(trace.abs() < 1e-10);
}

#[test]
fn sample_of_a_regular_graph() {
    let out = run(&["sample", "--model", "gnd", "--n", "12", "--d", "3", "--seed", "4"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("12 18\n"), "{text}");
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["convergence", "--n", "10", "--p", "0.5", "--no-such-flag"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
    assert_eq!(code(&run(&["no-such-command"])), 2);
    assert_eq!(code(&run(&[])), 2);
    // arguments that parse but make no sense
    assert_eq!(code(&run(&["convergence", "--n", "10", "--p", "1.5"])), 2);
    assert_eq!(code(&run(&["convergence", "--model", "gnd", "--n", "9", "--d", "3"])), 2);
    assert_eq!(code(&run(&["spectrum", "--in", "/nonexistent/graph.txt"])), 2);
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
    assert_eq!(code(&run(&["identities", "--help"])), 0);
}

#[test]
fn interlacing_passes_with_zero_residual() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = run(&["identities", "--which", "interlacing", "--trials", "1000", "--master-seed", "7", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let r = report(&path);
    assert_eq!(r["aggregate"]["max_abs_residual"], 0.0);
    assert_eq!(r["pass"], true);
    assert_eq!(r["trials"].as_array().unwrap().len(), 1000);
}

#[test]
fn failed_check_exits_one() {
    let out = run(&["convergence", "--n", "200", "--p", "0.2", "--ks-max", "1e-6", "--no-timestamp"]);
    assert_eq!(code(&out), 1);
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["pass"], false);
}

#[test]
fn report_envelope() {
    let out = run(&["moments", "--n", "200", "--p", "0.1", "--trials", "3", "--master-seed", "11"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["command"], "moments");
    assert_eq!(r["config"]["master_seed"], 11);
    assert!(r["timestamp"].as_u64().is_some());
    let trials = r["trials"].as_array().unwrap();
    assert_eq!(trials.len(), 3);
    for (i, t) in trials.iter().enumerate() {
        assert_eq!(t["index"], i);
    }
    assert!(r["aggregate"].is_object());
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    std::fs::write(&cfg, "# moments run\nn = 300\np = 0.3\nk-max = 4\ntrials = 2\nmaster-seed = 5\nno-timestamp = true\n").unwrap();
    let out = run(&["moments", "--config", cfg.to_str().unwrap(), "--master-seed", "9"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["config"]["master_seed"], 9);
    assert_eq!(r["config"]["n"], 300);
    assert_eq!(r["trials"].as_array().unwrap().len(), 2);
    assert!(r.get("timestamp").is_none());

    std::fs::write(&cfg, "n = 150\nbogus line\n").unwrap();
    assert_eq!(code(&run(&["moments", "--config", cfg.to_str().unwrap(), "--p", "0.3"])), 2);
}

#[test]
fn seed_comes_from_the_environment_unless_given() {
    let args = ["moments", "--n", "300", "--p", "0.3", "--k-max", "4", "--trials", "1", "--no-timestamp"];
    let from_env = specgraph(&args).env("SPECGRAPH_SEED", "42").output().unwrap();
    let explicit = run(&[&args[..], &["--master-seed", "42"]].concat());
    assert_eq!(code(&from_env), 0);
    assert_eq!(from_env.stdout, explicit.stdout);

    let overridden = specgraph(&[&args[..], &["--master-seed", "3"]].concat())
        .env("SPECGRAPH_SEED", "42")
        .output()
        .unwrap();
    let r: Value = serde_json::from_slice(&overridden.stdout).unwrap();
    assert_eq!(r["config"]["master_seed"], 3);

    let bad = specgraph(&args).env("SPECGRAPH_SEED", "not-a-number").output().unwrap();
    assert_eq!(code(&bad), 2);
}

/// Small instances of every ensemble subcommand.
const RUNS: &[&[&str]] = &[
    &["convergence", "--n", "120", "--p", "0.3", "--trials", "4"],
    &["convergence", "--model", "gnd", "--n", "100", "--d", "3", "--law", "kesten-mckay", "--trials", "3"],
    &["concentration", "--model", "gnd", "--n", "100", "--d", "10", "--trials", "5", "--interval", "-0.5,0.5"],
    &["delocalize", "--n", "80", "--p", "0.3", "--trials", "3"],
    &["moments", "--n", "100", "--p", "0.2", "--trials", "4"],
    &["stieltjes", "--re-points", "7", "--n", "100", "--p", "0.3"],
    &["identities", "--which", "eigvec-entry", "--trials", "4"],
    &["identities", "--which", "minor-stieltjes", "--trials", "3", "--n", "12"],
    &["projection", "--n", "100", "--p", "0.3", "--dim", "10", "--t", "6", "--trials", "6"],
    &["isotropy", "--n", "60", "--p", "0.3", "--trials", "5"],
    &["top-eigen", "--n", "100", "--p", "0.3", "--trials", "3"],
];

#[test]
fn reports_do_not_depend_on_thread_count_or_rerun() {
    for args in RUNS {
        let base = [&args[..], &["--master-seed", "1234", "--no-timestamp"]].concat();
        let one = run(&[&base[..], &["--threads", "1"]].concat());
        let eight = run(&[&base[..], &["--threads", "8"]].concat());
        let again = run(&[&base[..], &["--threads", "8"]].concat());
        assert!(matches!(code(&one), 0 | 1), "{args:?}: {}", String::from_utf8_lossy(&one.stderr));
        assert!(!one.stdout.is_empty(), "{args:?}");
        assert_eq!(one.stdout, eight.stdout, "{args:?}");
        assert_eq!(eight.stdout, again.stdout, "{args:?}");
        assert_eq!(code(&one), code(&eight));
    }
}
