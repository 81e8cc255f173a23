use std::collections::BTreeSet;
use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;
use trace_recon::reconstruct::sample_pool;
use trace_recon::vt::vt_enumerate;
use trace_recon::{edit_distance, insertion_ball, Budget, VtCode, Word};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trace-recon"))
        .args(args)
        .env_remove("TRACE_RECON_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("bad json ({e}): {}", stdout(o)))
}

fn write_words(dir: &Path, name: &str, words: impl IntoIterator<Item = Word>) -> String {
    let path = dir.join(name);
    let body: String = words.into_iter().map(|w| format!("{w}\n")).collect();
    fs::write(&path, format!("# generated\n{body}")).unwrap();
    path.to_str().unwrap().to_string()
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

#[test]
fn nplus_examples() {
    for (l, want) in [("2", "6"), ("1", "12"), ("0", "22")] {
        let o = run(&["--format", "plain", "nplus", "-n", "4", "-t", "2", "-l", l, "-q", "2"]);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
        assert_eq!(stdout(&o).trim(), want);
    }
}

#[test]
fn nplus_json_uses_decimal_strings() {
    let o = run(&["nplus", "-n", "4", "-t", "2", "-l", "2", "--required"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["n_plus"], "6");
    assert_eq!(v["required"], "7");
    assert_eq!(v["k"], "2");
}

#[test]
fn nplus_unequal_insertions() {
    let o = run(&["--format", "csv", "nplus", "-n", "3", "-t", "2", "-k", "1", "-l", "1"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,t,k,l,q,n_plus");
    assert!(lines[1].starts_with("3,2,1,1,2,"));
}

#[test]
fn nplus_rejects_broken_hypotheses() {
    let o = run(&["nplus", "-n", "4", "-t", "1", "-l", "3"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("k >= l"), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
}

#[test]
fn usage_errors_exit_one_and_help_exits_zero() {
    assert_eq!(code(&run(&["frobnicate"])), 1);
    assert_eq!(code(&run(&["nplus", "-n", "4"])), 1);
    assert_eq!(code(&run(&["nplus", "-n", "x", "-t", "1", "-l", "1"])), 1);
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
}

#[test]
fn verify_identities_pass() {
    let o = run(&["verify", "identities"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let v = json(&o);
    assert_eq!(v["failed"], "0");
    assert!(v["cases"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
    assert!(!stderr(&o).is_empty(), "progress goes to stderr");
}

#[test]
fn verify_channel_example_passes() {
    let o = run(&["--format", "plain", "verify", "channel-example"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.lines().filter(|l| l.starts_with("PASS E")).count() >= 3, "{out}");
    assert!(!out.contains("[channel-example"), "progress leaked into data stream");
}

#[test]
fn verify_vt_pairs_for_one_length() {
    let o = run(&["verify", "vt-pairs", "-n", "8"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let v = json(&o);
    assert!(v["cases"].as_array().unwrap().len() >= 9);
}

#[test]
fn verify_reports_budget_separately() {
    let o = run(&["verify", "oracle-nplus", "--budget", "1"]);
    assert_eq!(code(&o), 5, "{}", stdout(&o));
    let v = json(&o);
    assert_eq!(v["failed"], "0");
    assert_ne!(v["budget_exceeded"], "0");
}

#[test]
fn verify_budget_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_trace-recon"))
        .args(["verify", "deletion"])
        .env("TRACE_RECON_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(code(&o), 5, "{}", stdout(&o));
}

#[test]
fn verify_unknown_suite() {
    let o = run(&["verify", "everything"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("oracle-nplus"));
}

fn tradeoff_rows(args: &[&str]) -> Vec<(u64, u128, f64)> {
    let mut full = vec!["--format", "csv", "tradeoff"];
    full.extend_from_slice(args);
    let o = run(&full);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    stdout(&o)
        .lines()
        .skip(1)
        .map(|line| {
            let f: Vec<&str> = line.split(',').collect();
            (f[0].parse().unwrap(), f[1].parse().unwrap(), f[2].parse().unwrap())
        })
        .collect()
}

#[test]
fn tradeoff_baseline_and_monotonicity() {
    let rows = tradeoff_rows(&["-n", "30", "-t", "15", "-l", "15"]);
    assert_eq!(rows.len(), 16);
    assert_eq!(rows[1].2, 0.0);
    assert!(rows[0].2 < 0.0);
    for pair in rows.windows(2) {
        assert!(pair[1].2 >= pair[0].2, "{pair:?}");
        assert!(pair[1].1 <= pair[0].1);
    }
}

#[test]
fn tradeoff_far_row_is_positive() {
    let rows = tradeoff_rows(&["-n", "50", "-t", "15", "-l", "9"]);
    let (l, _, reduction) = rows[9];
    assert_eq!(l, 9);
    assert!(reduction > 0.0 && reduction < 100.0);
}

#[test]
fn tradeoff_requires_l_at_most_t() {
    assert_eq!(code(&run(&["tradeoff", "-n", "10", "-t", "2", "-l", "3"])), 1);
}

#[test]
fn reconstruct_sampled_vt_codeword() {
    let dir = TempDir::new().unwrap();
    let code_words = vt_enumerate(VtCode::new(8, 7).unwrap(), Budget::DEFAULT).unwrap();
    for (i, x) in code_words.iter().enumerate().step_by(5) {
        let pool = sample_pool(x, 2, 2, 7, i as u64).unwrap();
        let traces = write_words(dir.path(), "traces.txt", pool.traces().cloned());
        let o = run(&["--format", "plain", "reconstruct", &traces, "-n", "8", "-a", "7"]);
        assert_eq!(code(&o), 0, "{x}: {}", stdout(&o));
        assert_eq!(stdout(&o).trim(), x.to_string());
    }
}

#[test]
fn reconstruct_ambiguous_pair() {
    let dir = TempDir::new().unwrap();
    let (x, y) = (w("1011"), w("0011"));
    let shared: BTreeSet<Word> = insertion_ball(&x, 2, 2).intersection(&insertion_ball(&y, 2, 2)).cloned().collect();
    assert_eq!(shared.len(), 12);
    let traces = write_words(dir.path(), "traces.txt", shared);
    let cands = write_words(dir.path(), "cands.txt", [x, y]);
    let o = run(&["reconstruct", &traces, "--candidates", &cands]);
    assert_eq!(code(&o), 2);
    let v = json(&o);
    assert_eq!(v["status"], "ambiguous");
    assert_eq!(v["consistent"], serde_json::json!(["0011", "1011"]));
}

#[test]
fn reconstruct_without_consistent_candidate() {
    let dir = TempDir::new().unwrap();
    let traces = write_words(dir.path(), "traces.txt", [w("00000")]);
    let cands = write_words(dir.path(), "cands.txt", [w("111"), w("101")]);
    let o = run(&["reconstruct", &traces, "--candidates", &cands]);
    assert_eq!(code(&o), 3);
    assert_eq!(json(&o)["status"], "none");
}

#[test]
fn reconstruct_rejects_bad_input() {
    let dir = TempDir::new().unwrap();
    let empty = dir.path().join("empty.txt");
    fs::write(&empty, "# nothing here\n\n").unwrap();
    let empty = empty.to_str().unwrap();
    assert_eq!(code(&run(&["reconstruct", empty, "-n", "8", "-a", "7"])), 1);

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "0101\n01a1\n").unwrap();
    let o = run(&["reconstruct", bad.to_str().unwrap(), "-n", "4", "-a", "0"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("line 2"));

    let mixed = write_words(dir.path(), "mixed.txt", [w("0101"), w("01011")]);
    assert_eq!(code(&run(&["reconstruct", &mixed, "-n", "4", "-a", "0"])), 1);
    assert_eq!(code(&run(&["reconstruct", &mixed])), 1);
    assert_eq!(code(&run(&["reconstruct", "/nonexistent/traces.txt", "-n", "4", "-a", "0"])), 1);
}

#[test]
fn channel_argmin_at_two() {
    let o = run(&["channel", "-n", "500", "-p", "0.3", "-l", "2", "-q", "2", "--i-max", "10"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["argmin"], "2");
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 11);
    let marked: Vec<&Value> = rows.iter().filter(|r| r["argmin"] == true).collect();
    assert_eq!(marked.len(), 1);
    assert_eq!(marked[0]["i"], "2");
    assert_eq!(marked[0]["T_i"], "7");
    assert_eq!(rows[3]["T_i"], "3009");
}

#[test]
fn channel_clean_channel_argmin_zero() {
    let o = run(&["--format", "csv", "channel", "-n", "40", "-p", "0", "-l", "2", "--i-max", "5"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("i,p_i,T_i,E_i,argmin"));
    assert!(lines.next().unwrap().ends_with(",1"));
    assert!(lines.all(|l| l.ends_with(",0")));
}

#[test]
fn channel_rejects_bad_probability() {
    assert_eq!(code(&run(&["channel", "-n", "10", "-p", "1.5"])), 1);
}

#[test]
fn channel_simulation_is_seeded() {
    let args =
        ["channel", "-n", "8", "-p", "0.3", "-l", "2", "-a", "7", "--i-max", "4", "--simulate", "6", "--seed", "11"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0, "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    assert!(stderr(&a).contains("seed: 11"));
    let v = json(&a);
    let sim = &v["simulation"];
    assert_eq!(sim["seed"], "11");
    assert_eq!(sim["runs"].as_array().unwrap().len(), 6);
    let source = w(sim["source"].as_str().unwrap());
    assert!(VtCode::new(8, 7).unwrap().contains(&source));
    for run in sim["runs"].as_array().unwrap() {
        if run["event"] == "decode" {
            assert_eq!(run["decoded"], sim["source"]);
        }
    }
}

#[test]
fn channel_simulation_prints_generated_seed() {
    let o = run(&["channel", "-n", "8", "-p", "0.2", "--i-max", "3", "--simulate", "2"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let seed = json(&o)["simulation"]["seed"].as_str().unwrap().to_string();
    assert!(stderr(&o).contains(&format!("seed: {seed}")));
}

#[test]
fn channel_simulation_strict_mode() {
    let o = run(&[
        "channel",
        "-n",
        "7",
        "-p",
        "0.4",
        "-l",
        "2",
        "-a",
        "0",
        "--i-max",
        "4",
        "--simulate",
        "4",
        "--seed",
        "3",
        "--strict",
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(json(&o)["simulation"]["duplicates"], "strict");
}

#[test]
fn pairs_csv_rows_are_worst_case() {
    let o = run(&["--format", "csv", "pairs", "-n", "8", "-a", "7", "-t", "2"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("n,a,t,E,F,intersection"));
    let code8 = VtCode::new(8, 7).unwrap();
    let mut count = 0;
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        let (e, g) = (w(f[3]), w(f[4]));
        assert!(code8.contains(&e) && code8.contains(&g));
        assert_eq!(edit_distance(&e, &g), 4);
        let shared = insertion_ball(&e, 2, 2).intersection(&insertion_ball(&g, 2, 2)).count();
        assert_eq!(shared.to_string(), f[5]);
        count += 1;
    }
    assert_eq!(count, 4);
}

#[test]
fn pairs_limit_and_seed() {
    let o = run(&["pairs", "-n", "10", "-a", "3", "-t", "2", "--limit", "2"]);
    let v = json(&o);
    assert_eq!(v["pairs"].as_array().unwrap().len(), 2);
    assert_eq!(v["complete"], false);

    let args = ["pairs", "-n", "12", "-a", "5", "-t", "3", "--seed", "9", "--limit", "3"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(code(&a), 0, "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["seed"], "9");
}

#[test]
fn pairs_reject_single_insertion() {
    assert_eq!(code(&run(&["pairs", "-n", "8", "-a", "0", "-t", "1"])), 1);
}

#[test]
fn out_flag_writes_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("nplus.json");
    let o = run(&["nplus", "-n", "4", "-t", "2", "-l", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["n_plus"], "12");
}
