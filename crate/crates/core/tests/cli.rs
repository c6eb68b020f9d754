//! End-to-end runs of the `benzleap` binary.

use std::path::Path;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_benzleap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn indices_print_token_value_lines() {
    let out = bin(&[
        "indices",
        "--family",
        "zigzag",
        "--p",
        "2",
        "--k",
        "2",
        "--quantities",
        "lm1,lm2,lso",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "lm1 148\nlm2 273\nlso 55.23\n");
}

#[test]
fn poly_prints_ascending_terms() {
    let out = bin(&[
        "poly", "--family", "rhombic", "--p", "2", "--kind", "lm2", "--k", "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "4x^6 + 2x^9 + 8x^12 + 4x^24 + 1x^36\n");
}

#[test]
fn partition_table() {
    let out = bin(&["partition", "--family", "rhombic", "--p", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let total: u64 = text
        .lines()
        .map(|l| l.split(' ').nth(2).unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 38);
}

#[test]
fn generate_then_indices_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("r4.edges");
    let out = bin(&[
        "generate",
        "--family",
        "rhombic",
        "--p",
        "4",
        "--out",
        arg(&file),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let direct = bin(&["indices", "--family", "rhombic", "--p", "4"]);
    let via_file = bin(&["indices", "--input", arg(&file)]);
    assert_eq!(via_file.status.code(), Some(0));
    assert_eq!(stdout(&direct), stdout(&via_file));
    assert!(stdout(&direct).contains("lm1 588\n"));
}

#[test]
fn hexes_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("naphthalene.hex");
    std::fs::write(&file, "# two fused rings\n0 0\n1 0\n").unwrap();
    let out = bin(&["indices", "--hexes", arg(&file), "--quantities", "m1,m2"]);
    assert_eq!(out.status.code(), Some(0));
    // naphthalene edges by degree: 6 of (2,2), 4 of (2,3), 1 of (3,3)
    assert_eq!(stdout(&out), "m1 50\nm2 57\n");
}

#[test]
fn verify_zigzag_csv_exits_zero() {
    let out = bin(&[
        "verify", "--family", "zigzag", "--p-min", "2", "--p-max", "10", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 9 * 10);
    for quantity in ["lm1", "lyco", "partition"] {
        let n = rows
            .iter()
            .filter(|r| r.split(',').nth(2) == Some(quantity))
            .count();
        assert_eq!(n, 9, "{quantity}");
    }
    assert!(!rows.iter().any(|r| r.ends_with(",mismatch")));
}

#[test]
fn verify_jsonl_both_families() {
    let out = bin(&[
        "verify", "--family", "both", "--p-min", "2", "--p-max", "3", "--format", "jsonl",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 2 * 2 * 10);
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["status"].is_string());
    }
}

#[test]
fn sweep_csv_rows_per_p() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("sweep.csv");
    let out = bin(&[
        "sweep",
        "--family",
        "zigzag",
        "--p-min",
        "2",
        "--p-max",
        "6",
        "--quantities",
        "lm1,lso,lyco",
        "--out",
        arg(&file),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&file).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "family,p,n,m,lm1,lso,lyco");
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[1], "zigzag,2,18,21,148,55.2268,7344");
}

#[test]
fn output_is_deterministic() {
    let args = [
        "sweep", "--family", "rhombic", "--p-min", "1", "--p-max", "30", "--format", "text",
    ];
    assert_eq!(bin(&args).stdout, bin(&args).stdout);
    let args = ["verify", "--family", "both", "--format", "text"];
    assert_eq!(bin(&args).stdout, bin(&args).stdout);
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["frobnicate"][..],
        &["indices"][..],
        &["indices", "--family", "zigzag"][..],
        &["indices", "--family", "zigzag", "--p", "2", "--k", "0"][..],
        &["poly", "--family", "zigzag", "--p", "2", "--kind", "lso"][..],
        &[
            "verify", "--family", "zigzag", "--p-min", "5", "--p-max", "2",
        ][..],
        &["indices", "--input", "/nonexistent/file"][..],
    ] {
        let out = bin(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(bin(&["--help"]).status.code(), Some(0));
    assert_eq!(bin(&["--version"]).status.code(), Some(0));
}
