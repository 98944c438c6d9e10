//! End-to-end tests of the compiled binary: exit-code contract, output
//! formats, file I/O round trips, and schema conformance of the JSON
//! reports.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rearrange"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn exit_code_contract() {
    // 0: success
    let ok = run(&["kperm", "--n", "2", "--k", "2", "--int", "--mode", "vmin"]);
    assert_eq!(ok.status.code(), Some(0));

    // 2: argument parse errors (clap and usage validation)
    let bad_flag = run(&["kperm", "--nope"]);
    assert_eq!(bad_flag.status.code(), Some(2));
    let missing_source = run(&["kperm", "--n", "2", "--k", "2", "--mode", "vmin"]);
    assert_eq!(missing_source.status.code(), Some(2));
    let missing_seed = run(&["verify", "--suite", "circular"]);
    assert_eq!(missing_seed.status.code(), Some(2));

    // 3: size-limit errors respect REARRANGE_MAX_NODES
    let over = bin()
        .env("REARRANGE_MAX_NODES", "10")
        .args(["kperm", "--n", "4", "--k", "4", "--int", "--mode", "vmin"])
        .output()
        .expect("runs");
    assert_eq!(over.status.code(), Some(3));

    // 4: hypothesis violations
    let unsorted = run(&[
        "kperm", "--k", "2", "--seq", "3,1", "--mode", "vmin",
    ]);
    assert_eq!(unsorted.status.code(), Some(4));

    // 1: a failed check (the signed-domain negative control)
    let failed = run(&[
        "general", "--check", "order1", "--f", "plus", "--g", "negprod", "--domain", "all",
        "--samples", "5000", "--seed", "7",
    ]);
    assert_eq!(failed.status.code(), Some(1));
    let text = stdout_of(&failed);
    assert!(text.contains("FAIL"));
    assert!(text.contains("counterexample"));
}

#[test]
fn oeis_plain_is_one_value_per_line() {
    let out = run(&["oeis", "A333420", "--max-n", "2", "--max-k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<String> = stdout_of(&out).lines().map(str::to_string).collect();
    assert_eq!(lines, vec!["1", "3", "2", "25"]);

    let csv = run(&["oeis", "A333420", "--max-n", "2", "--max-k", "2", "--format", "csv"]);
    let text = stdout_of(&csv);
    assert!(text.starts_with("n,k,value\n"));
    assert!(text.contains("2,2,25"));
}

fn validate_report_schema(report: &serde_json::Value) {
    let obj = report.as_object().expect("report is an object");
    for key in ["command", "inputs", "results", "checks", "timing_ms"] {
        assert!(obj.contains_key(key), "missing `{key}`: {report}");
    }
    for key in obj.keys() {
        assert!(
            ["command", "inputs", "results", "checks", "seed", "timing_ms"].contains(&key.as_str()),
            "unexpected key `{key}`"
        );
    }
    assert!(obj["command"].is_string());
    assert!(obj["inputs"].is_object() || obj["inputs"].is_null());
    assert!(obj["timing_ms"].is_u64());
    if let Some(seed) = obj.get("seed") {
        assert!(seed.is_u64());
    }
    for check in obj["checks"].as_array().expect("checks is an array") {
        let c = check.as_object().expect("check is an object");
        assert!(c["name"].is_string());
        assert!(c["passed"].is_boolean());
        for key in c.keys() {
            assert!(["name", "passed", "counterexample"].contains(&key.as_str()));
        }
    }
}

#[test]
fn json_reports_match_the_published_schema() {
    let invocations: Vec<Vec<&str>> = vec![
        vec!["kperm", "--n", "3", "--k", "2", "--int", "--mode", "wmax", "--method", "closed"],
        vec!["pool", "--n", "2", "--k", "2", "--int", "--mode", "vmin", "--method", "bound"],
        vec!["circular", "--seq", "1,2,3,4", "--fg", "times:sum"],
        vec!["oeis", "A260355", "--max-n", "2", "--max-k", "2"],
        vec![
            "general", "--check", "order1", "--fg", "times:sum", "--samples", "50", "--seed", "3",
        ],
    ];
    for args in invocations {
        let mut full = args.clone();
        full.extend(["--format", "json"]);
        let out = run(&full);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let report: serde_json::Value =
            serde_json::from_str(&stdout_of(&out)).expect("valid JSON");
        validate_report_schema(&report);
    }
}

#[test]
fn matrix_files_round_trip() {
    let dir = std::env::temp_dir().join(format!("rearrange-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let chain_path = dir.join("chain.json");
    let chain_str = chain_path.to_str().unwrap();

    let generate = run(&[
        "matrix", "--op", "chain", "--m", "2", "--len", "3", "--commuting", "--seed", "11",
        "--out", chain_str, "--format", "json",
    ]);
    assert_eq!(generate.status.code(), Some(0));

    let verify = run(&[
        "matrix", "--op", "verify-chain", "--chain-file", chain_str, "--commuting",
    ]);
    assert_eq!(verify.status.code(), Some(0), "{}", stdout_of(&verify));
    let text = stdout_of(&verify);
    assert!(text.contains("check chain-verifies: PASS"));
    assert!(text.contains("check kron-hadamard-sandwich: PASS"));

    // single-matrix predicates on a hand-written file
    let psd_path = dir.join("m.json");
    std::fs::write(&psd_path, r#"[["1","1"],["1","1"]]"#).unwrap();
    let psd = run(&["matrix", "--op", "psd", "--file", psd_path.to_str().unwrap()]);
    assert_eq!(psd.status.code(), Some(0));
    assert!(stdout_of(&psd).contains("result is_psd: true"));

    let bad = dir.join("asym.json");
    std::fs::write(&bad, r#"[["1","2"],["3","1"]]"#).unwrap();
    let asym = run(&["matrix", "--op", "psd", "--file", bad.to_str().unwrap()]);
    assert_eq!(asym.status.code(), Some(2));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn kperm_construct_reports_column_sums() {
    let out = run(&[
        "kperm", "--n", "3", "--k", "3", "--int", "--mode", "wmax", "--method", "construct",
        "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["results"]["value"], "216");
    assert_eq!(report["results"]["column_sums"], serde_json::json!([6, 6, 6]));
    assert_eq!(
        report["checks"][0]["name"].as_str(),
        Some("construct-attains-extremum")
    );
    assert_eq!(report["checks"][0]["passed"], serde_json::json!(true));
}

#[test]
fn pool_gp_closed_form() {
    // pool 1,2,4,8 as a geometric progression: v_min = 16
    let out = run(&[
        "pool", "--n", "2", "--k", "2", "--gp", "1,2,0,1", "--mode", "vmin", "--method",
        "closed", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout_of(&out));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["results"]["closed_form"], "16");
    assert_eq!(report["checks"][0]["passed"], serde_json::json!(true));
}
