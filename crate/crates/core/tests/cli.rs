use std::process::Command;

use redkron::cli::{run_with, EXIT_OK, EXIT_RESOURCE, EXIT_SUITE_FAILED, EXIT_USAGE};
use redkron::{Decomposition, Partition};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with(
        std::iter::once("redkron").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut with_flag = vec!["--json"];
    with_flag.extend_from_slice(args);
    let (code, out) = run(&with_flag);
    assert_eq!(code, EXIT_OK, "{args:?}");
    serde_json::from_str(&out).unwrap()
}

const DECOMPOSITION_CORPUS: &[&[&str]] = &[
    &["reduced", "[1,1]", "[2]"],
    &["reduced", "[2]", "[2]"],
    &["reduced", "[]", "[3,1]"],
    &["reduced", "[1]", "[3,2,1]"],
    &["product", "[2,1]", "[2,1]"],
    &["product", "[3,1,1]", "[3,2]"],
    &["outer", "[2,1]", "[2,1]"],
    &["atlevel", "[1,1]", "[2]", "--n", "6"],
];

#[test]
fn json_and_text_agree_on_decompositions() {
    for args in DECOMPOSITION_CORPUS {
        let (code, text) = run(args);
        assert_eq!(code, EXIT_OK);
        let record = json(args);
        let d: Decomposition = serde_json::from_value(record["result"].clone()).unwrap();
        assert_eq!(format!("{d}\n"), text, "{args:?}");
        assert_eq!(record["command"], args[0]);
        // canonical order in JSON as well
        let parts: Vec<Partition> = d.partitions().cloned().collect();
        let mut sorted = parts.clone();
        sorted.sort();
        assert_eq!(parts, sorted);
    }
}

#[test]
fn json_and_text_agree_on_scalars() {
    let cases: &[(&[&str], &str)] = &[
        (&["coeff", "--kind", "reduced", "[2]", "[2]", "[2]"], "2"),
        (&["coeff", "--kind", "kron", "[2,1]", "[2,1]", "[2,1]"], "1"),
        (&["coeff", "--kind", "lr", "[3,2,1]", "[2,1]", "[2,1]"], "2"),
        (&["level", "[1,1]", "[2]"], "7"),
    ];
    for (args, expected) in cases {
        let (_, text) = run(args);
        assert_eq!(text.trim(), *expected);
        assert_eq!(json(args)["result"].to_string(), *expected);
    }
    let record = json(&["cctype", "--kind", "reduced", "[2]", "[2]"]);
    assert_eq!(record["result"]["components"], 10);
    assert_eq!(record["result"]["constituents"], 12);
    assert_eq!(
        run(&["cctype", "--kind", "reduced", "[2]", "[2]"]).1,
        "(10,12)\n"
    );

    let record = json(&["straighten", "[0,3,1]"]);
    assert_eq!(record["result"]["sign"], -1);
    assert_eq!(record["result"]["partition"], serde_json::json!([2, 1, 1]));
    assert_eq!(json(&["straighten", "[1,2,1]"])["result"]["sign"], 0);
}

#[test]
fn classify_reports_case_and_check() {
    let (code, text) = run(&["classify", "[1]", "[2,1]"]);
    assert_eq!(code, EXIT_OK);
    assert!(text.contains("case: OneTimesFatHook21"));
    assert!(text.contains("computed cc-type: (8,9)"));
    assert!(text.contains("agrees: true"));
    let record = json(&["classify", "[2]", "[1,1]"]);
    assert_eq!(record["result"]["case"], "ColTwoRowTwo");
    assert_eq!(record["result"]["agrees"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["reduced", "[1,2]", "[1]"]).0, EXIT_USAGE);
    assert_eq!(run(&["reduced", "[0]", "[1]"]).0, EXIT_USAGE);
    assert_eq!(run(&["product", "[3]", "[2]"]).0, EXIT_USAGE);
    assert_eq!(run(&["atlevel", "[2,1]", "[1]", "--n", "3"]).0, EXIT_USAGE);
    assert_eq!(
        run(&["coeff", "--kind", "bogus", "[1]", "[1]", "[1]"]).0,
        EXIT_USAGE
    );
    assert_eq!(run(&["verify", "nonsense"]).0, EXIT_USAGE);
    assert_eq!(run(&["chartable", "3", "--write-cache"]).0, EXIT_USAGE);
    assert_eq!(
        run(&["--max-level", "11", "reduced", "[3]", "[3]"]).0,
        EXIT_RESOURCE
    );
    assert_eq!(run(&["chartable", "40"]).0, EXIT_RESOURCE);
    assert_eq!(run(&["verify", "census"]).0, EXIT_SUITE_FAILED);
    assert_eq!(run(&["verify", "sequences"]).0, EXIT_OK);
}

fn strip_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timing_ms");
    v
}

#[test]
fn warm_cache_gives_identical_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap();
    let (code, _) = run(&["--cache-dir", path, "chartable", "8", "--write-cache"]);
    assert_eq!(code, EXIT_OK);
    assert!(dir.path().join("chartable_8.json").exists());

    let mut commands: Vec<Vec<&str>> = DECOMPOSITION_CORPUS.iter().map(|a| a.to_vec()).collect();
    commands.push(vec!["chartable", "6"]);
    commands.push(vec!["coeff", "--kind", "kron", "[3,1]", "[2,2]", "[2,1,1]"]);
    commands.push(vec!["verify", "murnaghan", "--max-size", "2"]);
    for args in commands {
        let cold = run(&args);
        let mut warm_args = vec!["--cache-dir", path];
        warm_args.extend_from_slice(&args);
        let warm = run(&warm_args);
        assert_eq!(cold, warm, "{args:?}");

        let mut cold_json = vec!["--json"];
        cold_json.extend_from_slice(&args);
        let mut warm_json = vec!["--json"];
        warm_json.extend_from_slice(&warm_args);
        let a: Value = serde_json::from_str(&run(&cold_json).1).unwrap();
        let b: Value = serde_json::from_str(&run(&warm_json).1).unwrap();
        assert_eq!(strip_timing(a), strip_timing(b), "{args:?}");
    }
}

#[test]
fn corrupt_cache_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("chartable_3.json"),
        "{\"format_version\":1}",
    )
    .unwrap();
    let (code, _) = run(&[
        "--cache-dir",
        dir.path().to_str().unwrap(),
        "reduced",
        "[1]",
        "[1]",
    ]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn binary_reads_cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_redkron");
    let status = Command::new(bin)
        .args(["chartable", "7", "--write-cache"])
        .env("REDKRON_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert!(status.status.success());
    assert!(dir.path().join("chartable_7.json").exists());

    let out = Command::new(bin)
        .args(["reduced", "[1,1]", "[2]"])
        .env("REDKRON_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "[1]+[2]+2[1,1]+[3]+2[2,1]+[1,1,1]+[3,1]+[2,1,1]\n"
    );

    let out = Command::new(bin)
        .args(["reduced", "[2,3]", "[1]"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("position"));
}
