//! End-to-end tests of the `fltk` binary: output bytes and exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn fltk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fltk"))
        .args(args)
        .env_remove("FLTK_MAX_NODES")
        .output()
        .expect("binary runs")
}

fn fltk_with_stdin(args: &[&str], envs: &[(&str, &str)], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fltk"))
        .args(args)
        .env_remove("FLTK_MAX_NODES")
        .envs(envs.iter().copied())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .expect("stdin piped")
        .write_all(input.as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary finishes")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is utf-8")
}

#[test]
fn eval_prints_the_canonical_value() {
    let out = fltk(&["eval", "apply([0->0],0)"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "0\n");

    let out = fltk(&["eval", "apply(0,0)"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "undef\n");

    let out = fltk(&["eval", "tofun(set{set{}})"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "{0}\n");
}

#[test]
fn user_errors_exit_one_with_a_message() {
    let out = fltk(&["eval", "[0->"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("parse error at 1:5"));
    assert!(stdout_of(&out).is_empty());

    let out = fltk(&["eval", "comp([[0->0]->0],[0->0])"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("codomain"));

    let out = fltk(&["check", "--theory", "zf", "--max-size", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("unknown theory"));

    let out = fltk(&["check", "--theory", "flt", "--max-size", "9"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("between 1 and 3"));

    let out = fltk(&["enumerate", "--stage", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("stages start at 1"));
}

#[test]
fn node_cap_breaches_exit_two() {
    let out = fltk_with_stdin(
        &["eval", "{0,[0->0],[0->[0->0]]}"],
        &[("FLTK_MAX_NODES", "2")],
        "",
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("node cap"));

    let out = fltk_with_stdin(&["eval", "0"], &[("FLTK_MAX_NODES", "soup")], "");
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("FLTK_MAX_NODES"));
}

#[test]
fn enumerate_lists_stages_and_counts() {
    let out = fltk(&["enumerate", "--stage", "3"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 9);
    assert_eq!(lines[0], "0");
    assert_eq!(lines[1], "{0}");

    let out = fltk(&["enumerate", "--stage", "4", "--count-only"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "1000000000\n");

    let out = fltk(&["count-p", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "1000000000\n");

    let out = fltk(&["enumerate", "--stage", "4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn fevels_reports_the_stage_and_its_fevels() {
    let out = fltk(&["fevels", "--within-stage", "3"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("stage 3: 9 functions on fevel {0,{0}}")
    );
    assert_eq!(lines.collect::<Vec<_>>(), vec!["0", "{0}", "{0,{0}}"]);
}

#[test]
fn check_renders_json_with_the_documented_schema() {
    let out = fltk(&[
        "check", "--theory", "flt", "--max-size", "2", "--report", "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid JSON");
    let rows = doc.as_array().expect("an array of size rows");
    assert_eq!(rows.len(), 2);
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row["size"], i + 1);
        for key in ["candidates", "models", "iso_classes", "per_axiom_failures"] {
            assert!(row.get(key).is_some(), "missing key {key}");
        }
    }
    assert_eq!(rows[0]["candidates"], 2);
    assert_eq!(rows[0]["models"], 1);
    assert_eq!(rows[1]["candidates"], 81);
    assert_eq!(rows[1]["models"], 2);

    let out = fltk(&["check", "--theory", "lt", "--max-size", "2"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("size 2: candidates 16, models 2, iso classes 1"));
}

#[test]
fn translate_maps_lines_between_the_sorts() {
    let out = fltk_with_stdin(&["translate", "--dir", "i"], &[], "0\n{0}\n\n[0->0]\n");
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "set{}\nset{set{set{set{}}}}\nset{set{set{set{}}}}\n"
    );

    let out = fltk_with_stdin(&["translate", "--dir", "j"], &[], "set{}\nset{set{}}\n");
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "0\n{0}\n");

    // Round trip i then j over a mixed value.
    let first = fltk_with_stdin(&["translate", "--dir", "i"], &[], "[0->{0}]\n");
    let back = fltk_with_stdin(&["translate", "--dir", "j"], &[], &stdout_of(&first));
    assert!(back.status.success());

    let out = fltk_with_stdin(&["translate", "--dir", "i"], &[], "set{}\n");
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("line 1"));

    let out = fltk_with_stdin(&["translate", "--dir", "j"], &[], "0\n[0->\n");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn cat_laws_and_products_run_clean() {
    let out = fltk(&["cat", "laws", "--stage", "3"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("identity laws: 9 of 9 arrows"));
    assert!(text.contains("associativity:"));

    let out = fltk(&["cat", "product", "--cardA", "1", "--cardB", "2"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("product: apex"));

    let out = fltk(&["cat", "product", "--cardA", "2", "--cardB", "2", "--report"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid JSON");
    assert_eq!(doc["found"], false);
    assert_eq!(doc["diagrams"].as_array().unwrap().len(), 0);
    assert_eq!(doc["max_apex"], 5);

    let out = fltk(&["cat", "product", "--cardA", "3", "--cardB", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn repl_batch_mode_is_line_oriented() {
    let script = ":let x = {0}\napply(x,0)\n[0->\n:enumerate 2\n:quit\nignored\n";
    let out = fltk_with_stdin(&["repl"], &[], script);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "{0}\n0\n0\n{0}\n");
    let err = stderr_of(&out);
    assert!(err.contains("parse error at 1:5"));
    assert!(!err.contains("ignored"));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["enumerate", "--stage", "3"],
        vec!["check", "--theory", "flt", "--max-size", "2", "--report", "json"],
        vec!["eval", "toset({0,[0->0]})"],
    ] {
        let a = fltk(&args);
        let b = fltk(&args);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.status.code(), b.status.code());
    }
}
