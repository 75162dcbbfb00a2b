use brace_dend::cli::run;

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn compose_example() {
    let o = run([
        "compose",
        "--species",
        "ape",
        "--outer",
        "1(2)",
        "--inner",
        "3(4)",
        "--at",
        "1",
    ]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout, "3(2,4) + 3(4,2) + 3(4(2))\n");
    let o = run([
        "compose",
        "--species",
        "prelie",
        "--outer",
        "1(2)",
        "--inner",
        "3(4)",
        "--at",
        "1",
    ]);
    assert_eq!(o.stdout, "3(2,4) + 3(4(2))\n");
}

#[test]
fn compose_relabels_clashes() {
    let o = run([
        "compose",
        "--species",
        "ape",
        "--outer",
        "1(2)",
        "--inner",
        "1(2)",
        "--at",
        "1",
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(o.stdout.matches('+').count(), 2);
    assert!(o.stdout.contains('3'), "{}", o.stdout);
}

#[test]
fn eval_and_coproduct() {
    let o = run(["eval", "--expr", "(a<b)<c - a<(b<c) - a<(b>c)"]);
    assert_eq!(o.stdout, "0\n");
    let o = run(["coproduct", "--expr", "a>b"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("a (x) b"), "{}", o.stdout);
}

#[test]
fn verify_brace_relations() {
    let o = run(["verify", "--suite", "brace-relations", "--bound", "4"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.ends_with("0 defects\n"), "{}", o.stdout);
    let o = run(["verify", "--suite", "zin-quotient", "--bound", "4"]);
    assert!(o.stdout.contains("quotient dims: 2,6,24"));
    assert_eq!(run(["verify", "--suite", "nonsense"]).code, 2);
}

#[test]
fn json_wraps_results() {
    let o = run(["primitives", "--gens", "1", "--degree", "2", "--output", "json"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["command"], "primitives");
    assert_eq!(v["result"]["basis"][0], "a<a - a>a");
    assert_eq!(v["defects"].as_array().unwrap().len(), 0);
    let o = run(["dims", "--gens", "1", "--upto", "4", "--output", "json"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["result"]["degrees"][3]["primitives"], 5);
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "cmm", "--bound", "3", "--output", "json"];
    assert_eq!(run(args), run(args));
}

#[test]
fn envelope_files() {
    let o = run(["envelope", "--brace", &data("trivial2.json"), "--upto", "3"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    assert!(o.stdout.contains("dims: 1,2,4,8"));
    assert!(o.stdout.contains("note: relations include arity-2 corollas"));
    let o = run([
        "envelope",
        "--brace",
        &data("idempotent.json"),
        "--upto",
        "3",
        "--output",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["result"]["dims"], serde_json::json!([1, 1, 1, 1]));
    assert_eq!(v["result"]["stable"], true);
    let o = run(["envelope", "--brace", &data("invalid.json"), "--upto", "3"]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("rhs = 3 b"), "{}", o.stdout);
    assert_eq!(run(["envelope", "--brace", "/nonexistent.json"]).code, 2);
}
