//! End-to-end checks of the command-line interface: outputs, formats,
//! determinism and exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ferrers-rsk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn gansner_prints_the_reference_grid() {
    let grid = data("grid_input.json");
    let args = ["gansner", "--shape", "5,3,3,2", "--filling", grid.to_str().unwrap()];
    let first = stdout_of(&args);
    assert_eq!(first, "1 3 4 4 7\n3 4 5\n4 6 9\n8 10\n");
    // byte-identical across runs
    assert_eq!(stdout_of(&args), first);
}

#[test]
fn gk_prints_parts_and_width() {
    let dag = data("dag11.json");
    assert_eq!(stdout_of(&["gk", "--dag", dag.to_str().unwrap()]), "13 5 3 2\n");
    assert_eq!(stdout_of(&["width", "--dag", dag.to_str().unwrap()]), "4\n");
}

#[test]
fn gk_json_reparses_to_equal_value() {
    let dag = data("dag11.json");
    let text = stdout_of(&["gk", "--dag", dag.to_str().unwrap(), "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["parts"], serde_json::json!([13, 5, 3, 2]));
    assert_eq!(value["prefix_maxima"], serde_json::json!([0, 13, 18, 21, 23]));
    assert_eq!(value["width"], serde_json::json!(4));
}

#[test]
fn filling_json_output_reparses() {
    let grid = data("grid_input.json");
    let text = stdout_of(&[
        "gansner",
        "--filling",
        grid.to_str().unwrap(),
        "--format",
        "json",
    ]);
    let doc: ferrers_rsk::io::FillingDoc = serde_json::from_str(&text).unwrap();
    assert_eq!(doc.shape, vec![5, 3, 3, 2]);
    assert_eq!(doc.rows[3], vec![8, 10]);
    assert_eq!(serde_json::to_string(&doc).unwrap() + "\n", text);
}

#[test]
fn special_coxeter_and_coincidence() {
    assert_eq!(stdout_of(&["special-coxeter", "--shape", "2,1"]), "1 3 4 2\n");
    let c = stdout_of(&["special-coxeter", "--shape", "5,3,3,2"]);
    let c = c.trim().to_string();

    let grid = data("grid_input.json");
    let via_coxeter = stdout_of(&[
        "coxrsk",
        "--filling",
        grid.to_str().unwrap(),
        "--coxeter",
        &c,
    ]);
    let via_classical = stdout_of(&["gansner", "--filling", grid.to_str().unwrap()]);
    assert_eq!(via_coxeter, via_classical);
}

#[test]
fn coxrsk_accepts_word_form() {
    let grid = data("grid_input.json");
    let by_word = stdout_of(&[
        "coxrsk",
        "--filling",
        grid.to_str().unwrap(),
        "--word",
        "s3 s2 s1 s4 s6 s5 s8 s7",
    ]);
    let by_cycle = stdout_of(&[
        "coxrsk",
        "--filling",
        grid.to_str().unwrap(),
        "--coxeter",
        "1 4 5 7 9 8 6 3 2",
    ]);
    assert_eq!(by_word, by_cycle);
}

#[test]
fn invert_recovers_the_filling() {
    let target = data("hook_target.json");
    assert_eq!(
        stdout_of(&["invert", "--rpp", target.to_str().unwrap()]),
        "1 2\n3\n"
    );
    assert_eq!(
        stdout_of(&[
            "invert",
            "--rpp",
            target.to_str().unwrap(),
            "--coxeter",
            "1 3 4 2"
        ]),
        "1 2\n3\n"
    );
}

#[test]
fn coxeter_list_is_complete_and_sorted_stably() {
    let four = stdout_of(&["coxeter-list", "--n", "4"]);
    let lines: Vec<&str> = four.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines.contains(&"1 2 3 4"));
    assert!(lines.contains(&"1 4 3 2"));
    assert_eq!(four, stdout_of(&["coxeter-list", "--n", "4"]));
}

#[test]
fn ar_emits_dot_with_ranks_and_weights() {
    let full = stdout_of(&["ar", "--coxeter", "1 3 4 2"]);
    assert!(full.starts_with("digraph ar {"));
    assert!(full.contains("t2_3 [label=\"(2,3)\"]"));
    assert!(full.contains("rank=same"));

    let slice = stdout_of(&["ar", "--coxeter", "1 3 4 2", "--slice", "2"]);
    assert!(slice.contains("t2_3 -> t2_4;"));

    let grid = data("hook_target.json");
    let weighted = stdout_of(&[
        "ar",
        "--coxeter",
        "1 3 4 2",
        "--filling",
        grid.to_str().unwrap(),
    ]);
    assert!(weighted.contains("label=\"(1,4): 1\""));
}

#[test]
fn dag_dot_highlights_witness() {
    let dag = data("dag11.json");
    let text = stdout_of(&[
        "gk",
        "--dag",
        dag.to_str().unwrap(),
        "--format",
        "dot",
        "--witness",
        "1",
    ]);
    assert!(text.contains("digraph gk {"));
    assert!(text.contains("penwidth=3"));
    assert!(text.contains("n7 [label=\"7: 4\", style=filled"));
}

#[test]
fn verify_passes_on_a_small_battery() {
    let out = run(&[
        "verify",
        "--shape",
        "2,1",
        "--max-entry",
        "1",
        "--samples",
        "5",
        "--seed",
        "9",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("seed: 9\n"));
    assert!(text.contains("verification passed"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn error_paths_exit_one() {
    // missing file
    let out = run(&["gansner", "--filling", "/nope/missing.json"]);
    assert_eq!(out.status.code(), Some(1));

    // malformed shape token is named
    let out = run(&["special-coxeter", "--shape", "5,x"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("\"x\""));

    // shape flag disagreeing with the document
    let grid = data("grid_input.json");
    let out = run(&["gansner", "--shape", "2,1", "--filling", grid.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    // degree mismatch between element and shape
    let out = run(&[
        "coxrsk",
        "--filling",
        grid.to_str().unwrap(),
        "--coxeter",
        "1 3 4 2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degree"));

    // unknown flags are usage errors, not panics
    let out = run(&["gk", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(1));

    // non-unimodal cycle is rejected with the offending cycle
    let out = run(&["ar", "--coxeter", "1 3 2 4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unimodal"));
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("ferrers-rsk"));
}
