use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn sawlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sawlab"))
        .args(args)
        .env_remove("SAWLAB_CACHE_DIR")
        .output()
        .unwrap()
}

fn with_cache_env(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sawlab"))
        .args(args)
        .env("SAWLAB_CACHE_DIR", dir)
        .output()
        .unwrap()
}

fn rows(out: &Output) -> Vec<Vec<String>> {
    let mut r = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(out.stdout.as_slice());
    r.records()
        .map(|rec| rec.unwrap().iter().map(String::from).collect())
        .collect()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).unwrap()
}

#[test]
fn count_ladder() {
    let out = sawlab(&["count", "--family", "ladder", "--n", "10"]);
    assert!(out.status.success());
    let r = rows(&out);
    assert_eq!(r.len(), 11);
    assert_eq!(r[1], ["1", "3"]);
    assert_eq!(r[10], ["10", "430"]);
    let text = stdout(&out);
    assert!(text.starts_with("# sawlab "));
    assert!(text.contains(r#""graph":{"family":"ladder"}"#));
}

#[test]
fn fisher_pull() {
    let out = sawlab(&["fisher", "--pull", "2"]);
    let r = rows(&out);
    let v: f64 = r[0][3].parse().unwrap();
    assert!((v - 1.7693).abs() < 1e-4);
    let out = sawlab(&["fisher", "--iterate", "2", "--k", "3"]);
    assert_eq!(rows(&out).len(), 4);
}

#[test]
fn square_interval_straddles_estimate() {
    let out = sawlab(&[
        "interval",
        "--family",
        "hypercubic",
        "--dim",
        "2",
        "--n",
        "14",
    ]);
    assert!(out.status.success());
    let r = rows(&out);
    let lower: f64 = r[0][3].parse().unwrap();
    let upper: f64 = r[0][4].parse().unwrap();
    assert!(lower <= 2.63815 && 2.63815 <= upper);
    assert_eq!(r[0][5], "certified");
}

#[test]
fn json_format() {
    let out = sawlab(&[
        "ratio", "--family", "bridge", "--degree", "4", "--n", "20", "--step", "2", "--format",
        "json",
    ]);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["columns"][3], "ratio");
    let r: f64 = doc["rows"][0][3].as_str().unwrap().parse().unwrap();
    assert!((r - 3f64.sqrt()).abs() < 1e-3);
    assert_eq!(doc["config"]["extra"]["step"], 2);
    assert_eq!(doc["version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn usage_errors_exit_2_with_json() {
    for args in [
        &["count", "--family", "ladder", "--n", "5", "--bogus"][..],
        &["count", "--family", "ladder"],
        &["count", "--family", "moebius", "--n", "3"],
        &["count", "--family", "ladder", "--dim", "2", "--n", "3"],
        &["count", "--graph", "{not json", "--n", "3"],
        &["fisher"],
        &["fisher", "--pull", "0.5"],
        &["report", "nonsense"],
        &["frobnicate"],
    ] {
        let out = sawlab(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = stderr_json(&out);
        assert_eq!(err["error"], "usage", "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn budget_truncation_exits_3_with_partial_series() {
    let out = sawlab(&[
        "count",
        "--family",
        "hypercubic",
        "--dim",
        "2",
        "--n",
        "30",
        "--budget",
        "100000",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let r = rows(&out);
    assert!(r.len() > 5 && r.len() < 31);
    assert!(stdout(&out).contains("# truncated=completed"));
    assert_eq!(stderr_json(&out)["error"], "budget");
    let out = sawlab(&[
        "interval", "--family", "ladder", "--n", "30", "--budget", "1000",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn graph_json_matches_flags() {
    let a = sawlab(&[
        "count",
        "--family",
        "free-product",
        "--degree",
        "3",
        "--girth",
        "3",
        "--n",
        "12",
    ]);
    let b = sawlab(&[
        "count",
        "--graph",
        r#"{"family":"fisher","base":{"family":"tree","degree":3}}"#,
        "--n",
        "12",
    ]);
    let sigma = |o: &Output| {
        rows(o)
            .into_iter()
            .map(|r| r[1].clone())
            .collect::<Vec<_>>()
    };
    assert_eq!(sigma(&a), sigma(&b));
}

#[test]
fn worker_count_does_not_change_output() {
    let run = |w: &str| {
        let o = sawlab(&[
            "count",
            "--family",
            "hexagonal",
            "--n",
            "18",
            "--workers",
            w,
        ]);
        rows(&o)
    };
    assert_eq!(run("1"), run("2"));
    assert_eq!(run("1"), run("0"));
}

#[test]
fn sampling_is_reproducible() {
    let args = [
        "sample",
        "--family",
        "hypercubic",
        "--dim",
        "2",
        "--n",
        "8",
        "--count",
        "5",
        "--seed",
        "11",
    ];
    let a = sawlab(&args);
    let b = sawlab(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let r = rows(&a);
    assert_eq!(r.len(), 5);
    assert_eq!(r[0][3].split(' ').count(), 9);
}

#[test]
fn tree_statistics() {
    let out = sawlab(&[
        "nu", "--family", "tree", "--degree", "3", "--n", "4,6,8,10", "--mode", "exact",
    ]);
    assert!(stdout(&out).contains("# nu=1.000000000"));
    let out = sawlab(&[
        "speed", "--family", "tree", "--degree", "3", "--n", "10", "--c", "0.9", "--count", "100",
    ]);
    assert_eq!(rows(&out)[0][2], "0.000000000");
}

#[test]
fn spectral_and_girth_bounds() {
    let out = sawlab(&["spectral", "--degree", "3", "--lambda", "0"]);
    assert_eq!(rows(&out)[0][2], "1.414213562");
    let out = sawlab(&[
        "spectral",
        "--family",
        "tree",
        "--degree",
        "4",
        "--estimate",
        "--n",
        "8",
    ]);
    assert!(out.status.success());
    assert_eq!(rows(&out)[0][3], "heuristic");
    let out = sawlab(&["girthbound", "--degree", "3", "--girth", "3"]);
    assert_eq!(rows(&out)[0][2], "1.769292354");
    let out = sawlab(&["cubiclower", "--girth", "4"]);
    assert_eq!(rows(&out)[0][1], "1.513085749");
}

#[test]
fn families_lists_the_zoo() {
    let out = sawlab(&["families"]);
    let names: Vec<String> = rows(&out).into_iter().map(|r| r[0].clone()).collect();
    assert!(names.contains(&"free-product".to_string()));
    assert!(names.contains(&"fisher-semicubic".to_string()));
    assert_eq!(names.len(), 11);
}

#[test]
fn report_regenerates_from_cache_without_enumeration() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["square", "locality", "sampler"] {
        for format in ["csv", "json"] {
            let first = with_cache_env(dir.path(), &["report", name, "--format", format]);
            assert!(first.status.success(), "{name}");
            let again = with_cache_env(
                dir.path(),
                &["report", name, "--format", format, "--budget", "0"],
            );
            assert!(
                again.status.success(),
                "{name}: {}",
                String::from_utf8_lossy(&again.stderr)
            );
            if format == "csv" {
                assert_eq!(rows(&first), rows(&again));
                assert!(rows(&first).iter().all(|r| r[4] == "true"), "{name}");
            } else {
                let a: Value = serde_json::from_slice(&first.stdout).unwrap();
                let b: Value = serde_json::from_slice(&again.stdout).unwrap();
                assert_eq!(a["rows"], b["rows"]);
                assert_eq!(a["summary"], b["summary"]);
                assert_eq!(b["config"]["budget"], 0);
            }
        }
    }
    // an uncached report cannot run on a zero budget
    let cold = with_cache_env(dir.path(), &["report", "ladder", "--budget", "0"]);
    assert_eq!(cold.status.code(), Some(3));
}

#[test]
fn cache_flag_overrides_environment() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let out = with_cache_env(
        env_dir.path(),
        &[
            "count",
            "--family",
            "ladder",
            "--n",
            "6",
            "--cache",
            flag_dir.path().to_str().unwrap(),
        ],
    );
    assert!(out.status.success());
    assert!(flag_dir.path().join("ledger.jsonl").exists());
    assert!(!env_dir.path().join("ledger.jsonl").exists());
    let ledger = std::fs::read_to_string(flag_dir.path().join("ledger.jsonl")).unwrap();
    let first: Value = serde_json::from_str(ledger.lines().next().unwrap()).unwrap();
    assert_eq!(first["kind"], "saw");
    assert_eq!(first["value"], "1");
}
