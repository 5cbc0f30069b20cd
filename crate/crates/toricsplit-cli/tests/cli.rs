//! End-to-end tests of the binary: dispatch, rendering, exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_toricsplit"))
}

fn write_tmp(content: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(content.as_bytes()).unwrap();
    f
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn split_decide_yes() {
    let f = write_tmp("1 4\n4 6 11 13\n");
    let out = run(&["split", "decide", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("splittable: yes"));
}

#[test]
fn split_decide_no() {
    let f = write_tmp("1 4\n20 24 25 31\n");
    let out = run(&["split", "decide", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "splittable: no");
}

#[test]
fn minsys_count_is_plain() {
    let f = write_tmp("# comment line\n1 4\n4 6 11 13 # trailing comment\n");
    let out = run(&["minsys", "--count", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "18");
}

#[test]
fn json_and_text_share_numbers() {
    let f = write_tmp("1 4\n4 6 11 13\n");
    let path = f.path().to_str().unwrap();
    let text = stdout(&run(&["minsys", "--count", path]));
    let json_out = stdout(&run(&["--json", "minsys", "--count", path]));
    let value: serde_json::Value = serde_json::from_str(&json_out).unwrap();
    assert_eq!(value["verb"], "minsys.count");
    assert_eq!(value["result"]["count"].to_string(), text.trim());
    // Round trip: parse and re-serialize losslessly.
    let reparsed: serde_json::Value =
        serde_json::from_str(&serde_json::to_string(&value).unwrap()).unwrap();
    assert_eq!(reparsed, value);
}

#[test]
fn reports_are_deterministic() {
    let f = write_tmp("1 4\n4 6 11 13\n");
    let path = f.path().to_str().unwrap();
    let a = run(&["--json", "split", "enumerate", path]);
    let b = run(&["--json", "split", "enumerate", path]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn verify_published_matrices() {
    let a = write_tmp("1 4\n4 6 11 13\n");
    let a1 = write_tmp("2 4\n2 3 3 4\n4 6 11 13\n");
    let a2 = write_tmp("2 4\n1 8 6 0\n0 -2 -1 1\n");
    let out = run(&[
        "verify",
        a.path().to_str().unwrap(),
        a1.path().to_str().unwrap(),
        a2.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verdict:              true"));
}

#[test]
fn gluing_detect_reports_common_element() {
    let f = write_tmp("1 5\n85 102 77 88 99\n");
    let out = run(&[
        "gluing",
        "detect",
        f.path().to_str().unwrap(),
        "--partition",
        "1,2|3,4,5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("gluing: yes"));
    assert!(text.contains("a: [187]"));
}

#[test]
fn semigroup_profile_and_flags() {
    let out = run(&["semigroup", "5", "6", "7", "8", "--gorenstein"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("frobenius: 9"));
    assert!(text.contains("gaps (5): 1 2 3 4 9"));
    assert!(text.contains("gorenstein: true"));
}

#[test]
fn semigroup_split_constructs_verified_splitting() {
    let out = run(&["semigroup", "5", "6", "7", "8", "--split"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("splittable: yes"));
    assert!(text.contains("verified: true"));
    assert!(text.contains("explicit A1:"));
}

#[test]
fn graph_commands() {
    let out = run(&["graph", "bipartite", "3", "3", "--split"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("kernel dimension: 4"));
    assert!(text.contains("splittable: no"));

    let out = run(&["graph", "complete", "4", "--split", "--count"]);
    let text = stdout(&out);
    assert!(text.contains("splittable: yes"));
    assert!(text.contains("minimal systems: 3"));

    let out = run(&["graph", "treecover", "4"]);
    assert_eq!(stdout(&out).trim(), "tree cover check (n=4): true");
}

#[test]
fn split_construct_realizes_matrices() {
    let f = write_tmp("1 3\n6 10 15\n");
    let out = run(&["split", "construct", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("splittable: yes"));
    assert!(text.contains("A1:"));
    assert!(text.contains("verified: true"));

    let f = write_tmp("1 4\n20 24 25 31\n");
    let out = run(&["split", "construct", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "splittable: no");
}

#[test]
fn json_split_decide_schema() {
    let f = write_tmp("1 4\n4 6 11 13\n");
    let out = run(&["--json", "split", "decide", f.path().to_str().unwrap()]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["verb"], "split.decide");
    assert_eq!(value["result"]["splittable"], true);
    assert!(value["result"]["C1"].is_array());
    assert!(value["result"]["span1"]["basis"].is_array());
    assert_eq!(value["input"]["matrix"][0][3], serde_json::json!(13));
}

#[test]
fn stdin_input() {
    let mut child = bin()
        .args(["split", "decide", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(b"1 2\n1 2\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "splittable: no");
}

#[test]
fn invalid_input_exits_2() {
    // Missing file.
    let out = run(&["split", "decide", "/definitely/not/a/file"]);
    assert_eq!(out.status.code(), Some(2));
    // Malformed matrix.
    let f = write_tmp("2 2\n1 0\n");
    let out = run(&["markov", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    // Zero column.
    let f = write_tmp("1 3\n1 0 2\n");
    let out = run(&["markov", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    // Bad partition syntax.
    let f = write_tmp("1 3\n6 10 15\n");
    let out = run(&[
        "gluing",
        "detect",
        f.path().to_str().unwrap(),
        "--partition",
        "1;2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // Semigroup gcd violation.
    let out = run(&["semigroup", "2", "4"]);
    assert_eq!(out.status.code(), Some(2));
    // Usage error from the parser itself.
    let out = run(&["definitely-not-a-verb"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn resource_caps_exit_3() {
    let f = write_tmp("1 4\n4 6 11 13\n");
    let out = run(&[
        "--max-systems",
        "2",
        "minsys",
        "--all",
        f.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));

    let f = write_tmp("1 3\n6 10 15\n");
    let out = run(&["--max-fiber", "1", "minsys", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));

    let gens: Vec<String> = (101..=118).map(|x| x.to_string()).collect();
    let f = write_tmp(&format!("1 18\n{}\n", gens.join(" ")));
    let out = run(&["gluing", "search", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}
