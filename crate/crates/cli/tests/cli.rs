use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn zc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zc")).args(args).env_remove("ZC_JOBS").output().expect("zc runs")
}

fn zc_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_zc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("zc runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn compute_cycle_of_five() {
    let v = json(&zc(&["--format", "json", "compute", "--graph6", "Dhc"]));
    let g = &v["graphs"][0];
    assert_eq!(g["nk"], "32");
    assert_eq!(g["pi2"]["exact"], "1024");
    assert_eq!(g["pi2"]["factors"], serde_json::json!([[2, 10]]));
    assert_eq!(g["is_cactus"], true);
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["config"]["command"]["subcommand"], "compute");
}

#[test]
fn compute_star_from_edge_list() {
    let dir = std::env::temp_dir().join(format!("zc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("star.txt");
    std::fs::write(&path, "# K1,4\n0 1\n0 2\n0 3\n0 4\n").unwrap();
    let v = json(&zc(&["--format", "json", "compute", "--input", path.to_str().unwrap()]));
    assert_eq!(v["graphs"][0]["pi1"]["exact"], "4");
    assert_eq!(v["graphs"][0]["is_cactus"], true);
    assert_eq!(v["graphs"][0]["k"], 4);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn compute_reads_stdin_and_flags_non_cacti() {
    let out = zc_stdin(&["--format", "csv", "compute", "--c", "1/2"], "C~\nDhc\n");
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("C~,4,6,0,false,"), "{}", lines[1]);
    // sqrt(32) is reported through its base and exponent
    assert!(lines[2].contains(",1/2,(32)^(1/2),1.732867951400,"), "{}", lines[2]);
}

#[test]
fn malformed_graph6_is_a_usage_error_with_line_number() {
    let out = zc_stdin(&["compute"], "Dhc\nD!!\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn bad_arguments_exit_with_two() {
    assert_eq!(zc(&[]).status.code(), Some(2));
    assert_eq!(zc(&["compute", "--graph6", "Dhc", "--c", "0"]).status.code(), Some(2));
    assert_eq!(zc(&["optimize", "--index", "pi2", "--graph6", "Dhc"]).status.code(), Some(2));
    assert_eq!(zc(&["construct", "--theorem", "T2", "--n", "9", "--k", "1"]).status.code(), Some(2));
    assert_eq!(zc(&["--format", "graph6", "compute", "--graph6", "Dhc"]).status.code(), Some(2));
}

#[test]
fn verify_confirms_and_echoes_configuration() {
    let v = json(&zc(&["--format", "json", "--jobs", "2", "verify", "--theorem", "T5", "--n-max", "7"]));
    assert_eq!(v["mismatches"], 0);
    assert!(v["total"].as_u64().unwrap() > 0);
    assert_eq!(v["config"]["jobs"], 2);
    assert_eq!(v["config"]["command"]["n_max"], 7);
    assert!(v["reports"].as_array().unwrap().iter().all(|r| r["verdict"] == "confirmed"));
}

#[test]
fn verify_exit_codes() {
    let out = zc(&["verify", "--theorem", "T3", "--n-max", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0 mismatches"));
    assert_eq!(zc(&["verify", "--theorem", "T1", "--n-max", "12"]).status.code(), Some(2));
    assert_eq!(zc(&["verify", "--theorem", "T9", "--n-max", "5"]).status.code(), Some(2));
}

#[test]
fn verify_csv_columns_and_thread_variable() {
    let out = Command::new(env!("CARGO_BIN_EXE_zc"))
        .args(["--format", "csv", "verify", "--theorem", "all", "--n-max", "6", "--c", "1,2"])
        .env("ZC_JOBS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), "theorem,n,k,c,predicted,observed,verdict,witness_count");
    assert!(text.lines().any(|l| l == "T1,6,3,2,144,144,confirmed,2"));
    assert!(text.lines().skip(1).all(|l| l.contains(",confirmed,")));
}

#[test]
fn construct_attains_the_bound() {
    let out = zc(&["--format", "graph6", "construct", "--theorem", "T5", "--n", "6", "--k", "2"]);
    assert!(out.status.success());
    let g6 = stdout(&out).trim().to_string();
    let v = json(&zc(&["--format", "json", "compute", "--graph6", &g6]));
    assert_eq!(v["graphs"][0]["pi2"]["exact"], "16384");
    assert_eq!(v["graphs"][0]["k"], 2);

    let v = json(&zc(&["--format", "json", "construct", "--theorem", "T1", "--n", "8", "--k", "3", "--c", "2"]));
    assert_eq!(v["value"]["exact"], v["bound"]["value"]["exact"]);
    assert_eq!(v["recipe"]["builder"]["shape"], "spider");
}

#[test]
fn enumerate_lists_one_line_per_class() {
    let out = zc(&["enumerate", "--n", "4"]);
    assert!(out.status.success());
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines.len(), 4);
    let only_c4 = zc(&["--format", "graph6", "enumerate", "--n", "4", "--k", "0"]);
    assert_eq!(stdout(&only_c4).lines().count(), 1);
    let v = json(&zc(&["--format", "json", "enumerate", "--n", "6"]));
    assert_eq!(v["enumeration"]["count"], 23);
    assert_eq!(zc(&["enumerate", "--n", "10"]).status.code(), Some(2));
}

#[test]
fn optimize_random_tree_reaches_balanced_fixpoint() {
    for seed in ["0", "1", "2", "3"] {
        let args = [
            "--format",
            "json",
            "--seed",
            seed,
            "optimize",
            "--min",
            "--index",
            "pi2",
            "--random",
            "--n",
            "7",
            "--k",
            "3",
            "--tree",
            "--shuffle",
        ];
        let v = json(&zc(&args));
        assert_eq!(v["exhausted"], false);
        let degrees: Vec<u64> =
            v["final_degree_sequence"].as_array().unwrap().iter().map(|d| d.as_u64().unwrap()).collect();
        assert_eq!(degrees, vec![3, 2, 2, 2, 1, 1, 1], "seed {seed}");
        assert_eq!(v["final_value"]["exact"], "1728");
        assert_eq!(json(&zc(&args)), v, "same seed, same report");
    }
}

#[test]
fn optimize_trace_from_a_star_like_cactus() {
    // two triangles sharing vertex 0, with three pendants on 0
    let path = std::env::temp_dir().join(format!("zc-opt-{}.txt", std::process::id()));
    std::fs::write(&path, "0 1\n1 2\n0 2\n0 3\n3 4\n0 4\n0 5\n0 6\n0 7\n").unwrap();
    let v = json(&zc(&["--format", "json", "optimize", "--min", "--index", "pi1", "--input", path.to_str().unwrap()]));
    std::fs::remove_file(&path).unwrap();
    let trace = v["trace"].as_array().unwrap();
    assert!(!trace.is_empty());
    for t in trace {
        assert!(t["lemma_id"].is_string());
        assert!(t["index_before"]["exact"].is_string() && t["index_after"]["exact"].is_string());
    }
    // eight vertices, three pendants: the minimum is 2^4 * 3
    assert_eq!(v["final_value"]["exact"], "48");
}

#[test]
fn reattach_spreads_pendants() {
    let path = std::env::temp_dir().join(format!("zc-pro-{}.txt", std::process::id()));
    std::fs::write(&path, "0 1\n1 2\n0 2\n2 3\n3 4\n2 4\n4 5\n5 6\n4 6\n2 7\n2 8\n").unwrap();
    let v = json(&zc(&["--format", "json", "reattach", "--input", path.to_str().unwrap()]));
    std::fs::remove_file(&path).unwrap();
    let r = &v["results"][0];
    assert_eq!(r["nk_before"], "768");
    assert_eq!(r["nk_after"], "1152");
}
