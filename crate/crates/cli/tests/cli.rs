use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_anosov"));
    c.env_remove("ANOSOV_PRECISION_CAP");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json_out(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn example(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "docs", "examples", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn temp_doc(tag: &str, doc: &Value) -> String {
    let p = std::env::temp_dir().join(format!("anosov-cli-{}-{tag}.json", std::process::id()));
    std::fs::write(&p, serde_json::to_string_pretty(doc).unwrap()).unwrap();
    p.to_string_lossy().into_owned()
}

fn without_timings(s: &str) -> String {
    s.lines().filter(|l| !l.contains("total_ms")).collect::<Vec<_>>().join("\n")
}

#[test]
fn certify_dim9_333_with_auto_square() {
    let o = run(&["certify", "case:dim9_333", "--auto-square"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("verdict PASS (squared)"), "{text}");

    let o = run(&["certify", "case:dim9_333", "--auto-square", "--json"]);
    assert_eq!(code(&o), 0);
    let r = json_out(&o);
    assert_eq!(r["verdict"], "PASS");
    assert_eq!(r["squared"], true);
    assert_eq!(r["graded_type"], "(3,3,3)");
    assert_eq!(r["tool"], "anosov");
    assert_eq!(r["command"], json!(["certify", "case:dim9_333", "--auto-square", "--json"]));
    let initial: Vec<&str> =
        r["stages"]["initial_products"].as_array().unwrap().iter().map(|p| p["class"].as_str().unwrap()).collect();
    assert_eq!(initial, ["-1", "1", "-1"]);
    assert!(r["stages"]["products"].as_array().unwrap().iter().all(|p| p["class"] == "1"));
    assert_eq!(r["stages"]["hyperbolicity"]["status"], "HYPERBOLIC");
    assert_eq!(r["stages"]["integrality"]["det"], "1");
    assert!(r["witness"].is_null());
}

#[test]
fn filter_m1_examples() {
    let o = run(&["filter-m1", "4", "3", "2"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o).trim(), "VIOLATES rule 1");

    let o = run(&["filter-m1", "4", "4", "3", "--product-eigen"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o).trim(), "VIOLATES rule 2");

    let o = run(&["filter-m1", "3", "3", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "ADMISSIBLE");

    let o = run(&["--json", "filter-m1", "4", "3", "2"]);
    assert_eq!(json_out(&o)["rule"], 1);

    assert_eq!(code(&run(&["filter-m1", "0", "3", "2"])), 2);
    assert_eq!(code(&run(&["filter-m1", "4", "x", "2"])), 2);
}

#[test]
fn type_of_new1_document() {
    let o = run(&["type", &example("new1.json")]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("(4,2,2,2)"));
    assert!(text.contains("abelian factor dimension 0"));

    let r = json_out(&run(&["--json", "type", &example("new1.json")]));
    assert_eq!(r["type"], json!([4, 2, 2, 2]));
    assert_eq!(r["dim"], 10);
}

#[test]
fn type_reports_abelian_factor() {
    let doc = json!({ "dim": 5, "brackets": [{ "i": 1, "j": 2, "k": 3, "c": "1" }] });
    let o = run(&["type", &temp_doc("abfactor", &doc)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).contains("abelian factor dimension 2"), "{}", stdout(&o));
}

#[test]
fn json_reports_are_deterministic() {
    for args in [
        &["certify", "case:dim10_55", "--json", "--auto-square"][..],
        &["certify", "case:dim9_ntilde", "--json", "--unimodular-trials", "2", "--seed", "7"][..],
        &["--json", "pfaffian", "catalog:h5", "--samples", "20", "--seed", "3"][..],
        &["--json", "reduce", "catalog:n442_0"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(code(&a), code(&b));
        assert_eq!(without_timings(&stdout(&a)), without_timings(&stdout(&b)), "{args:?}");
    }
}

#[test]
fn all_cases_are_ordered_by_name() {
    let o = run(&["certify", "--all-cases", "--auto-square", "--json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let r = json_out(&o);
    let names: Vec<String> = r.as_array().unwrap().iter().map(|c| c["target"].as_str().unwrap().to_string()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert_eq!(names.len(), 11);
    assert!(r.as_array().unwrap().iter().all(|c| c["verdict"] == "PASS"));
    let again = run(&["certify", "--all-cases", "--auto-square", "--json"]);
    assert_eq!(without_timings(&stdout(&o)), without_timings(&stdout(&again)));
}

#[test]
fn catalog_show_round_trips_through_certify() {
    let list = json_out(&run(&["--json", "catalog", "list"]));
    for case in list["cases"].as_array().unwrap() {
        let name = case["name"].as_str().unwrap();
        let shown = run(&["catalog", "show", name]);
        assert_eq!(code(&shown), 0);
        let path = temp_doc(name, &json_out(&shown));
        let from_file = json_out(&run(&["certify", &path, "--auto-square", "--json"]));
        let from_case = json_out(&run(&["certify", &format!("case:{name}"), "--auto-square", "--json"]));
        assert_eq!(from_file["stages"], from_case["stages"], "{name}");
        assert_eq!(from_file["verdict"], "PASS", "{name}");
        assert_eq!(from_file["target"], name);
        let _ = std::fs::remove_file(path);
    }
}

#[test]
fn catalog_show_accepts_parameters() {
    let o = run(&["catalog", "show", "n333", "--params", "2,1,-3"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let doc = json_out(&o);
    let cs: Vec<&str> = doc["brackets"].as_array().unwrap().iter().map(|b| b["c"].as_str().unwrap()).collect();
    assert!(cs.contains(&"2") && cs.contains(&"-3"), "{cs:?}");
    assert_eq!(code(&run(&["catalog", "show", "n333", "--params", "1"])), 2);
    assert_eq!(code(&run(&["catalog", "show", "nothing"])), 2);
    assert_eq!(code(&run(&["catalog", "show", "dim9_333", "--params", "1"])), 2);
}

#[test]
fn broken_automorphism_is_a_certified_fail() {
    let mut doc = json_out(&run(&["catalog", "show", "dim9_333"]));
    // swap eigenvalues 1 and 4
    let auto = doc["automorphism"].as_array_mut().unwrap();
    auto.swap(0, 3);
    let path = temp_doc("broken", &doc);
    let o = run(&["certify", &path, "--json"]);
    assert_eq!(code(&o), 1, "{}", stderr(&o));
    let r = json_out(&o);
    assert_eq!(r["verdict"], "FAIL");
    assert_eq!(r["stages"]["automorphism"]["ok"], false);
    assert_eq!(r["witness"]["stage"], "automorphism");
    let _ = std::fs::remove_file(path);
}

#[test]
fn eigenvalue_on_the_circle_fails() {
    let doc = json!({
        "dim": 3,
        "brackets": [{ "i": 1, "j": 2, "k": 3, "c": "1" }],
        "automorphism": ["2", "1", "2"],
    });
    let o = run(&["certify", &temp_doc("circle", &doc), "--json"]);
    assert_eq!(code(&o), 1);
    let r = json_out(&o);
    assert_eq!(r["stages"]["hyperbolicity"]["status"], "ON_CIRCLE");
    assert_eq!(r["stages"]["hyperbolicity"]["index"], 2);
}

#[test]
fn missing_automorphism_is_a_usage_error() {
    let o = run(&["certify", &example("h3.json")]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("no automorphism"), "{}", stderr(&o));
}

#[test]
fn jacobi_failure_has_a_witness() {
    let doc = json!({
        "dim": 4,
        "brackets": [{ "i": 1, "j": 2, "k": 3, "c": "1" }, { "i": 3, "j": 4, "k": 1, "c": "1" }],
    });
    let o = run(&["jacobi", &temp_doc("jacobi", &doc)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("Jacobi FAIL at (e"), "{}", stdout(&o));
    let o = run(&["jacobi", &example("new1.json")]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "Jacobi OK");
}

#[test]
fn pfaffian_command() {
    let o = run(&["pfaffian", "catalog:h5"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).contains("Pf^2 = det at 100 points (seed 0)"));
    let r = json_out(&run(&["--json", "pfaffian", "catalog:U:1,0,0"]));
    assert_eq!(r["form"], "x*y*z");
    assert_eq!(r["det_check"]["ok"], true);
    let o = run(&["pfaffian", "catalog:l4"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("not (2k, m)"));
    assert_eq!(code(&run(&["pfaffian", "catalog:f3"])), 2);
}

#[test]
fn reduce_command() {
    let o = run(&["reduce", "catalog:n442_1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("quotient: (4,4) on e1 e2 e3 e4 e5 e6 e7 e8"), "{}", stdout(&o));
    let r = json_out(&run(&["--json", "reduce", "catalog:n333"]));
    assert_eq!(r["quotient_type"], "(3,3)");
    assert_eq!(r["quotient"]["dim"], 6);
}

#[test]
fn parse_errors_carry_locations() {
    let o = run_stdin(&["type", "-"], "{\n  \"dim\": 3,\n  \"brackets\": [}\n");
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("-:3:"), "{}", stderr(&o));

    let cases = [
        (json!({ "dim": 3, "brackets": [{ "i": 2, "j": 1, "k": 3, "c": "1" }] }), "brackets[0]"),
        (json!({ "dim": 3, "brackets": [{ "i": 1, "j": 2, "k": 4, "c": "1" }] }), "brackets[0]"),
        (json!({ "dim": 3, "brackets": [{ "i": 1, "j": 2, "k": 3, "c": "1/0" }] }), "brackets[0].c"),
        (json!({ "dim": 3, "brackets": [{ "i": 1, "j": 2, "k": 3, "c": ["1", "2"] }] }), "brackets[0].c"),
        (json!({ "dim": 3, "field": ["1/2", "0", "1"], "brackets": [] }), "field"),
        (json!({ "dim": 3, "brackets": [], "automorphism": ["1", "2"] }), "automorphism"),
    ];
    for (doc, field) in cases {
        let o = run_stdin(&["type", "-"], &doc.to_string());
        assert_eq!(code(&o), 2, "{doc}");
        assert!(stderr(&o).contains(field), "{doc}: {}", stderr(&o));
    }

    let o = run_stdin(&["type", "-"], r#"{"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1", "x": 0}]}"#);
    assert_eq!(code(&o), 2);
    let o = run(&["type", "/nonexistent/doc.json"]);
    assert_eq!(code(&o), 2);
    assert_eq!(code(&run(&["type", "case:nothing"])), 2);
}

#[test]
fn field_documents_over_a_number_field() {
    // h3 over Q(sqrt 2); the eigenvalue 2 is not a unit
    let doc = json!({
        "dim": 3,
        "field": ["-2", "0", "1"],
        "brackets": [{ "i": 1, "j": 2, "k": 3, "c": ["1"] }],
        "automorphism": [["1", "1"], ["2"], ["2", "2"]],
    });
    let o = run(&["certify", &temp_doc("field", &doc), "--json"]);
    assert_eq!(code(&o), 1, "{}", stderr(&o));
    assert_eq!(json_out(&o)["verdict"], "FAIL");
}

#[test]
fn unimodular_trials_leave_the_verdict_unchanged() {
    let o = run(&["certify", "case:dim9_333", "--auto-square", "--unimodular-trials", "3", "--json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let r = json_out(&o);
    assert_eq!(r["lattice_invariance"]["unchanged"], true);
    assert_eq!(r["lattice_invariance"]["trials"], 3);
}

#[test]
fn precision_cap_is_validated() {
    let o = bin().args(["certify", "case:dim9_333"]).env("ANOSOV_PRECISION_CAP", "abc").output().unwrap();
    assert_eq!(code(&o), 2);
    let o = bin().args(["certify", "case:dim9_333", "--auto-square"]).env("ANOSOV_PRECISION_CAP", "256").output().unwrap();
    assert_eq!(code(&o), 0);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&run(&[])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["certify"])), 2);
    assert_eq!(code(&run(&["--help"])), 0);
}
