//! End-to-end checks of the command-line surface: exit codes, JSON
//! round-tripping, and the CSV emitter.

use std::path::PathBuf;
use std::process::{Command, Output};

fn testdata(name: &str) -> String {
    let mut path = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    path.push("testdata");
    path.push(name);
    path.to_str().unwrap().to_string()
}

fn latsurg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latsurg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 output")
}

#[test]
fn lens_table_matches_known_values() {
    let output = latsurg(&["dinv", "lens", "3", "1"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("1/2"));
    assert!(text.contains("-1/6"));
}

#[test]
fn negative_q_normalizes() {
    let output = latsurg(&["dinv", "lens", "3", "-1", "--json"]);
    assert!(output.status.success());
    assert_eq!(
        stdout(&output).trim(),
        r#"{"p":3,"q":2,"source":"L(3,2)","values":["1/6","1/6","-1/2"]}"#
    );
}

#[test]
fn json_output_reparses_byte_identically() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["dinv", "lens", "11", "4", "--json"],
        vec![
            "dinv",
            "surgery",
            "--knot",
            Box::leak(testdata("trefoil.json").into_boxed_str()),
            "--slope",
            "8",
            "--json",
        ],
        vec![
            "lattice",
            "analyze",
            "--gram",
            Box::leak(testdata("lam11_4.json").into_boxed_str()),
            "--json",
        ],
        vec![
            "knot",
            "vseq",
            "--knot",
            Box::leak(testdata("torus_2_5.json").into_boxed_str()),
            "--json",
        ],
    ];
    for args in cases {
        let output = latsurg(&args);
        assert!(output.status.success(), "{args:?}");
        let text = stdout(&output);
        let value: serde_json::Value = serde_json::from_str(text.trim()).expect("valid json");
        assert_eq!(
            serde_json::to_string(&value).unwrap(),
            text.trim(),
            "round trip for {args:?}"
        );
    }
}

#[test]
fn obstruction_exit_codes() {
    // verdict failures exit 1
    let output = latsurg(&[
        "obstruct",
        "--gram",
        &testdata("lam9_2.json"),
        "--knot",
        &testdata("trefoil.json"),
        "--slope",
        "9",
        "--mode",
        "global",
    ]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout(&output).contains("FAIL"));

    // a standard lattice passes
    let output = latsurg(&[
        "obstruct",
        "--gram",
        &testdata("standard9.json"),
        "--knot",
        &testdata("trefoil.json"),
        "--slope",
        "9",
    ]);
    assert_eq!(output.status.code(), Some(0));

    // I/O problems exit 2, never 1
    let output = latsurg(&[
        "obstruct",
        "--gram",
        "/no/such/file.json",
        "--knot",
        &testdata("trefoil.json"),
        "--slope",
        "9",
    ]);
    assert_eq!(output.status.code(), Some(2));

    // determinant mismatches are input errors
    let output = latsurg(&[
        "obstruct",
        "--gram",
        &testdata("lam11_4.json"),
        "--knot",
        &testdata("trefoil.json"),
        "--slope",
        "9",
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn sharpness_paths() {
    let output = latsurg(&[
        "sharp",
        "--gram",
        &testdata("lam11_4.json"),
        "--lens",
        "11",
        "-4",
    ]);
    assert_eq!(output.status.code(), Some(0), "{output:?}");

    let output = latsurg(&[
        "sharp",
        "--gram",
        &testdata("standard9.json"),
        "--knot",
        &testdata("trefoil.json"),
        "--slope",
        "9",
        "--reversed",
    ]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn csv_export() {
    let out = std::env::temp_dir().join("latsurg_cli_test_lens.csv");
    let out_str = out.to_str().unwrap();
    let output = latsurg(&["dinv", "lens", "3", "1", "--out", out_str]);
    assert!(output.status.success());
    let csv = std::fs::read_to_string(&out).unwrap();
    assert_eq!(csv, "p,q,i,d\n3,1,0,1/2\n3,1,1,-1/6\n3,1,2,-1/6\n");
    std::fs::remove_file(&out).ok();
}

#[test]
fn lbound_reports() {
    let output = latsurg(&[
        "lbound",
        "--knot",
        &testdata("trefoil.json"),
        "--max-n",
        "30",
        "--json",
    ]);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&output).trim()).unwrap();
    assert_eq!(value["l_upper_bound"], 7);
    assert_eq!(value["genus_bound"], 7);
    assert_eq!(value["swept_to"], 30);
}

#[test]
fn vseq_warning_goes_to_stderr() {
    let doc = r#"{"name": "tweaked", "alexander": [[0, -1], [1, 1]], "slice_genus": 1,
                  "l_space": true, "v_sequence": [0]}"#;
    let path = std::env::temp_dir().join("latsurg_cli_test_tweaked.json");
    std::fs::write(&path, doc).unwrap();
    let output = latsurg(&["knot", "vseq", "--knot", path.to_str().unwrap()]);
    assert!(output.status.success());
    let stderr = String::from_utf8(output.stderr.clone()).unwrap();
    assert!(stderr.contains("disagrees"), "stderr: {stderr}");
    std::fs::remove_file(&path).ok();
}
