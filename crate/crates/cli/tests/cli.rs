use std::process::{Command, Output};

use hankel_core::rational::{int, parse, ratio, to_fraction_string};
use hankel_core::{moment_matrix, ExactMatrix, FamilySpec};
use serde_json::Value;

fn hankel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hankel")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn laguerre_inverse_json() {
    let o = hankel(&["inv", "--family", "laguerre", "--alpha", "0", "--n", "1", "--output", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"], serde_json::json!([["2", "-1"], ["-1", "1"]]));
    assert_eq!(v["family"], "laguerre");
    assert_eq!(v["params"]["alpha"], "0");
    assert_eq!(v["method"], "explicit");
    assert_eq!(v["normalized"], true);
}

#[test]
fn hermite_determinant_pretty() {
    let o = hankel(&["det", "--family", "hermite", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1/4\n");
    let o = hankel(&["det", "--family", "hermite", "--n", "2", "--output", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["det"], "1/4");
}

#[test]
fn hilbert_generation() {
    let o = hankel(&["gen", "--family", "jacobi-shifted", "--alpha", "0", "--beta", "0", "--n", "2", "--output", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1,1/2,1/3\n1/2,1/3,1/4\n1/3,1/4,1/5\n");
}

#[test]
fn gen_json_round_trips() {
    let spec = FamilySpec::jacobi(ratio(1, 3), ratio(1, 5)).unwrap();
    let o = hankel(&["gen", "--family", "jacobi", "--alpha", "1/3", "--beta", "1/5", "--n", "6", "--output", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows: Vec<Vec<_>> = v["result"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|e| parse(e.as_str().unwrap()).unwrap()).collect())
        .collect();
    assert_eq!(ExactMatrix::from_rows(rows).unwrap(), moment_matrix(&spec, 6));
}

#[test]
fn methods_agree_byte_for_byte() {
    let cases: [&[&str]; 5] = [
        &["--family", "hermite"],
        &["--family", "laguerre", "--alpha", "7/3"],
        &["--family", "gegenbauer", "--lambda", "1/4"],
        &["--family", "jacobi", "--alpha", "1/2", "--beta", "-1/2"],
        &["--family", "jacobi-shifted", "--alpha", "2", "--beta", "3"],
    ];
    for family in cases {
        for n in ["0", "3", "12"] {
            for cmd in ["inv", "det"] {
                let run = |method: &str| {
                    let mut args = vec![cmd];
                    args.extend_from_slice(family);
                    args.extend(["--n", n, "--output", "json", "--method", method]);
                    let o = hankel(&args);
                    assert_eq!(o.status.code(), Some(0));
                    // the method label is the only field allowed to differ
                    stdout(&o).replace(&format!("\"method\":\"{method}\""), "\"method\":\"*\"")
                };
                let explicit = run("explicit");
                assert_eq!(explicit, run("kernel"), "{cmd} {family:?} n={n}");
                assert_eq!(explicit, run("oracle"), "{cmd} {family:?} n={n}");
            }
        }
    }
}

#[test]
fn kernel_command() {
    let base = ["kernel", "--family", "hermite", "--n", "1", "--x", "1/2", "--y", "1/2"];
    for method in ["explicit", "kernel", "oracle"] {
        let mut args = base.to_vec();
        args.extend(["--method", method]);
        assert_eq!(stdout(&hankel(&args)), "3/2\n");
    }
    let o = hankel(&["kernel", "--family", "laguerre", "--alpha", "1", "--n", "0", "--x", "7", "--y", "-2"]);
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn float_and_unnormalized_output() {
    let o = hankel(&["gen", "--family", "gegenbauer", "--lambda", "1/2", "--n", "1", "--float", "--digits", "5"]);
    assert_eq!(stdout(&o), " 1.0000        0\n      0  0.33333\n");
    // scaled by the mass 2 of dx on [-1, 1]
    let o = hankel(&[
        "gen", "--family", "gegenbauer", "--lambda", "1/2", "--n", "1", "--float", "--digits", "5",
        "--unnormalized", "--output", "json",
    ]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["normalized"], false);
    assert_eq!(v["result"][1][1].to_string(), "0.66667");
    assert_eq!(v["result"][0][0].to_string(), "2.0000");
}

#[test]
fn verify_reports() {
    let o = hankel(&["verify", "--family", "jacobi-shifted", "--alpha", "0", "--beta", "0", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("all checks passed\n"));
    let o = hankel(&["verify", "--family", "hermite", "--n", "3", "--output", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 4);
}

#[test]
fn errata_formats() {
    let o = hankel(&["errata", "--family", "jacobi", "--alpha", "1/2", "--beta", "-1/2", "--n", "2", "--output", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["exact"], "1/64");
    assert_eq!(v["verdict"], "mismatch");
    let o = hankel(&["errata", "--family", "jacobi", "--alpha", "-1/2", "--beta", "-1/2", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: undefined"));
}

#[test]
fn usage_errors_exit_2() {
    let cases: [(&[&str], &str); 9] = [
        (&["verify", "--family", "gegenbauer", "--lambda", "0", "--n", "3"], "lambda must be > -1/2 and nonzero"),
        (&["gen", "--family", "laguerre", "--alpha", "-1", "--n", "3"], "alpha must be > -1"),
        (&["gen", "--family", "laguerre", "--alpha", "1/x", "--n", "3"], "malformed rational"),
        (&["gen", "--family", "laguerre", "--n", "3"], "laguerre requires alpha"),
        (&["gen", "--family", "hermite", "--beta", "1", "--n", "3"], "hermite takes no beta"),
        (&["gen", "--family", "chebyshev", "--n", "3"], "unknown family"),
        (&["kernel", "--family", "hermite", "--n", "3", "--x", "1"], "--y"),
        (&["det", "--family", "hermite", "--n", "3", "--unnormalized"], "--float"),
        (&["errata", "--family", "hermite", "--n", "1"], "errata requires --family jacobi"),
    ];
    for (args, message) in cases {
        let o = hankel(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).contains(message), "{args:?}: {}", stderr(&o));
        assert!(o.stdout.is_empty());
    }
    let o = hankel(&["gen", "--family", "hermite", "--n", "-1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = hankel(&["det", "--family", "hermite", "--n", "2", "--float", "--digits", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn negative_parameters_are_accepted() {
    let o = hankel(&["det", "--family", "laguerre", "--alpha", "-1/2", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    // det [[1, 1/2], [1/2, 3/4]]
    assert_eq!(stdout(&o).trim(), to_fraction_string(&ratio(1, 2)));
    assert_eq!(int(1), parse("1").unwrap());
}
