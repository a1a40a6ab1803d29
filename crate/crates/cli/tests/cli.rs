// Copyright 2026 The qovp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn qovp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qovp"))
        .args(args)
        .output()
        .expect("spawn qovp")
}

fn temp_file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qovp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::File::create(&path)
        .unwrap()
        .write_all(body.as_bytes())
        .unwrap();
    path
}

fn corpus(name: &str) -> String {
    [env!("CARGO_MANIFEST_DIR"), "..", "..", "corpus", name]
        .iter()
        .collect::<PathBuf>()
        .display()
        .to_string()
}

#[test]
fn json_schema() {
    let out = qovp(&[
        "grover",
        "--winners",
        "0110,1101",
        "--format",
        "json",
        "--shots",
        "64",
        "--seed",
        "9",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        ["experiment", "num_qubits", "exact", "samples", "details"]
    );
    assert_eq!(v["experiment"], "grover");
    assert_eq!(v["num_qubits"], 4);
    for e in v["exact"].as_array().unwrap() {
        assert!(e["state"].is_string() && e["probability"].is_number());
    }
    assert_eq!(v["samples"]["shots"], 64);
    assert_eq!(v["samples"]["seed"], 9);
    let total: u64 = v["samples"]["counts"]
        .as_object()
        .unwrap()
        .values()
        .map(|c| c.as_u64().unwrap())
        .sum();
    assert_eq!(total, 64);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"probability\": 0.472656250"));
}

#[test]
fn zero_shots_suppresses_samples() {
    let out = qovp(&[
        "swap-test",
        "--a",
        "+",
        "--b",
        "-",
        "--shots",
        "0",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["samples"].is_null());
}

#[test]
fn single_qubit_file() {
    let path = temp_file("empty.qc", "qubits 1\n");
    let out = qovp(&[
        "run",
        path.to_str().unwrap(),
        "--format",
        "json",
        "--shots",
        "0",
    ]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["exact"].as_array().unwrap().len(), 1);
    assert_eq!(v["exact"][0]["state"], "0");
    assert_eq!(v["exact"][0]["probability"].as_f64(), Some(1.0));
}

#[test]
fn parse_error_exits_one_with_location() {
    let path = temp_file("bad.qc", "qubits 2\ncz 0 5\n");
    let out = qovp(&["run", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with(&format!("{}:2:", path.display())), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn missing_file_exits_two() {
    let out = qovp(&["run", "/definitely/not/here.qc"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn input_errors_exit_one() {
    for args in [
        &["grover", "--winners", "01,101"][..],
        &["grover", "--winners", ""],
        &["grover"],
        &["mgsa", "--initial", "0,0", "--marked", "0", "--iters", "2"],
        &[
            "mgsa",
            "--initial",
            "1,0,0",
            "--marked",
            "0",
            "--iters",
            "2",
        ],
        &["swap-test", "--a", "2", "--b", "0"],
        &["ovp-gsa", "--test", "0"],
        &["ones-complement", "--ref", "10a"],
        &["ones-complement", "--ref", "101", "--mixed", "3"],
        &["run", "x.qc", "--format", "xml"],
        &["--shots", "-1", "run", "x.qc"],
        &["frobnicate"],
    ] {
        assert_eq!(qovp(args).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(qovp(&["--help"]).status.code(), Some(0));
    assert_eq!(qovp(&["--version"]).status.code(), Some(0));
    assert_eq!(qovp(&["grover", "--help"]).status.code(), Some(0));
}

#[test]
fn mgsa_csv_trace() {
    let out = qovp(&[
        "mgsa",
        "--initial",
        "0.7071,0,0.7071,0",
        "--marked",
        "2",
        "--iters",
        "6",
        "--format",
        "csv",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "t,a0,a1,a2,a3");
    assert_eq!(
        lines[1],
        "0,0.707106781,0.000000000,0.707106781,0.000000000"
    );
    assert_eq!(
        lines[2],
        "1,-0.707106781,0.000000000,0.707106781,0.000000000"
    );
    assert_eq!(lines[7], lines[1].replacen('0', "6", 1));
}

#[test]
fn csv_with_counts() {
    let out = qovp(&[
        "ones-complement",
        "--ref",
        "101",
        "--mixed",
        "0",
        "--format",
        "csv",
        "--shots",
        "1000",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "state,probability,count");
    let counts: u64 = lines[1..]
        .iter()
        .map(|l| l.rsplit(',').next().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(counts, 1000);
    assert!(lines[1].starts_with("010,0.500000000,"));
}

#[test]
fn ascii_bars_scale_with_probability() {
    let out = qovp(&["run", &corpus("fig1_naive.qc"), "--shots", "0"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let bars: Vec<usize> = text
        .lines()
        .filter(|l| l.contains("0.250000000"))
        .map(|l| l.chars().filter(|&c| c == '#').count())
        .collect();
    assert_eq!(bars, [13, 13, 13, 13]);
}

#[test]
fn grover_reports_closed_form() {
    let out = qovp(&[
        "grover",
        "--winners",
        "1000,0110,1001,0111",
        "--format",
        "json",
        "--shots",
        "0",
    ]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["details"]["iterations"], 1);
    let closed = v["details"]["closed_form_success_probability"]
        .as_f64()
        .unwrap();
    let sim = v["details"]["success_probability"].as_f64().unwrap();
    assert!((closed - 1.0).abs() < 1e-9 && (sim - 1.0).abs() < 1e-9);
}

#[test]
fn global_flags_anywhere() {
    let a = qovp(&[
        "--format",
        "csv",
        "--shots",
        "0",
        "swap-test",
        "--a",
        "0",
        "--b",
        "+",
    ]);
    let b = qovp(&[
        "swap-test",
        "--a",
        "0",
        "--b",
        "+",
        "--shots",
        "0",
        "--format",
        "csv",
    ]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(
        String::from_utf8(a.stdout).unwrap(),
        "state,probability\n0,0.750000000\n1,0.250000000\n"
    );
}
