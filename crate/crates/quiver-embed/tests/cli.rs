use std::path::PathBuf;

use quiver_embed::cli::main_with_args;
use quiver_embed::embedding::EmbeddingStep;
use quiver_embed::fixed_points::VWTuple;
use quiver_embed::quiver_rep::{QuiverSetting, Representation};
use serde_json::Value;

fn out_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!(
        "quiver-embed-cli-{}-{name}.json",
        std::process::id()
    ))
}

/// Runs the CLI writing to a temp file; returns exit code and raw output.
fn run(name: &str, args: &[&str]) -> (i32, String) {
    let out = out_path(name);
    let _ = std::fs::remove_file(&out);
    let mut argv = vec!["quiver-embed".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    argv.extend(["--out".to_string(), out.display().to_string()]);
    let code = main_with_args(argv);
    let text = std::fs::read_to_string(&out).unwrap_or_default();
    let _ = std::fs::remove_file(&out);
    (code, text)
}

const TWO: &str = r#"{"m":2,"v":[1,1],"w":[1,1]}"#;

#[test]
fn fixed_points_round_trip() {
    let (code, text) = run("fp", &["fixed-points", "--input", TWO]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&text).unwrap();
    let s: QuiverSetting = serde_json::from_value(v["setting"].clone()).unwrap();
    let fps: Vec<VWTuple> = v["fixed_points"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| VWTuple::from_json(&s, f).unwrap())
        .collect();
    assert_eq!(
        fps.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        ["((1,1),∅)", "((1),(1))", "(∅,(2))"]
    );
}

#[test]
fn empty_vertex_has_one_fixed_point() {
    let (code, text) = run(
        "fp0",
        &["fixed-points", "--input", r#"{"m":1,"v":[0],"w":[1]}"#],
    );
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(
        v["fixed_points"],
        serde_json::json!([{"partitions": {"1_1": []}}])
    );
}

#[test]
fn embed_prints_the_chain() {
    let (code, text) = run(
        "embed",
        &[
            "embed",
            "--input",
            r#"{"m":6,"v":[2,3,4,4,3,1],"w":[0,0,1,2,0,0]}"#,
        ],
    );
    assert_eq!(code, 0);
    let chain: Vec<EmbeddingStep> = serde_json::from_str(&text).unwrap();
    assert_eq!(chain.len(), 3);
    assert_eq!(chain[2].target.w, [0, 0, 0, 0, 0, 10]);
}

#[test]
fn embed_rep_output_parses_on_the_target() {
    let input = r#"{"setting":{"v":[1,1],"w":[1,1]},
        "rep":{"X":[[["2"]]],"Y":[[["3"]]],"I":[[["5"]],[["11"]]],"J":[[["7"]],[["13"]]]}}"#;
    let (code, text) = run("rep", &["embed-rep", "--input", input]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&text).unwrap();
    let chain: Vec<EmbeddingStep> = serde_json::from_value(v["chain"].clone()).unwrap();
    let r = Representation::from_json(&chain.last().unwrap().target, &v["rep"]).unwrap();
    assert_eq!(r.x[0].to_strings(), [["2"], ["-7"]]);
}

#[test]
fn character_and_vertex_commands() {
    let (code, text) = run("char", &["character", "--input", TWO]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    let single =
        r#"{"setting":{"v":[1,1],"w":[1,1]},"fixed_point":{"partitions":{"1_1":[1],"2_1":[1]}}}"#;
    let (code, text) = run("vertex", &["vertex", "--input", single, "--bound", "1"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v[0]["terms"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_passes_and_is_deterministic() {
    let args = ["verify", "--input", TWO, "--bound", "2", "--seed", "7"];
    let (code, first) = run("v1", &args);
    assert_eq!(code, 0);
    let (_, second) = run("v2", &args);
    assert_eq!(first, second);
    let v: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["passed"], true);
    assert!(v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["per_term"]["failures"].as_array().unwrap().is_empty()));
}

#[test]
fn wrong_shift_exits_one() {
    let (code, text) = run(
        "bad",
        &["verify", "--input", TWO, "--bound", "2", "--shift=-1,2"],
    );
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["shift_used"], serde_json::json!([-1, 2]));
    assert_eq!(v["passed"], false);
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(run("e1", &["embed", "--input", r#"{"v":[1]}"#]).0, 2);
    assert_eq!(run("e2", &["verify", "--input", TWO, "--shift", "1"]).0, 2);
    assert_eq!(run("e3", &["fixed-points", "--input", "{not json"]).0, 2);
    assert_eq!(
        run("e4", &["verify", "--input", r#"{"v":[1,1],"w":[0,2]}"#]).0,
        2
    );
    assert_eq!(run("e5", &["bogus"]).0, 2);
}

#[test]
fn selftest_passes() {
    let (code, text) = run("self", &["selftest", "--seed", "3"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["passed"], true);
}
