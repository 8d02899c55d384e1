use std::process::{Command, Output};

fn hippasus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hippasus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn table_matches_golden() {
    let out = hippasus(&["table", "--max-beta", "1000"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), include_str!("golden/table_1000.txt"));
    assert!(out.stderr.is_empty());
}

#[test]
fn default_table_is_the_1000_table() {
    let out = hippasus(&["table"]);
    assert_eq!(stdout(&out), include_str!("golden/table_1000.txt"));
}

#[test]
fn csv_and_json_carry_the_same_rows() {
    let csv_out = stdout(&hippasus(&[
        "table",
        "--max-beta",
        "100000",
        "--format",
        "csv",
    ]));
    let json_out = stdout(&hippasus(&[
        "table",
        "--max-beta",
        "100000",
        "--format",
        "json",
    ]));

    let mut reader = csv::Reader::from_reader(csv_out.as_bytes());
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        header,
        ["beta", "alpha", "sum", "product", "sign", "alpha_squared"]
    );
    let from_csv: Vec<Vec<String>> = reader
        .records()
        .map(|r| r.unwrap().iter().map(String::from).collect())
        .collect();

    let parsed: serde_json::Value = serde_json::from_str(&json_out).unwrap();
    let from_json: Vec<Vec<String>> = parsed
        .as_array()
        .unwrap()
        .iter()
        .map(|obj| {
            header
                .iter()
                .map(|k| obj[k.as_str()].as_number().unwrap().to_string())
                .collect()
        })
        .collect();

    // beta = F_0 .. F_24 = 75025
    assert_eq!(from_csv.len(), 25);
    assert_eq!(from_csv, from_json);
    assert_eq!(from_csv[0], ["1", "1", "2", "2", "1", "1"]);
}

#[test]
fn small_table_has_both_rows_for_one() {
    let out = stdout(&hippasus(&["table", "--max-beta", "1", "--format", "csv"]));
    assert_eq!(out.lines().count(), 3);
}

#[test]
fn check_exit_codes() {
    let out = hippasus(&["check", "55"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("hippasus: yes"));
    assert!(text.contains("successors: 89"));
    assert!(text.contains("fibonacci index: 9"));
    assert!(text.contains("descent: 55 > 34 > 21 > 13 > 8 > 5 > 3 > 2 > 1 > 1"));

    assert_eq!(hippasus(&["check", "1"]).status.code(), Some(0));
    assert_eq!(hippasus(&["check", "57"]).status.code(), Some(1));
    let bad = hippasus(&["check", "5x"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty());
    assert!(!bad.stderr.is_empty());
}

#[test]
fn check_large_fibonacci() {
    // F_200
    let beta = "453973694165307953197296969697410619233826";
    let out = hippasus(&["check", beta]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("fibonacci index: 200"));
}

#[test]
fn wasteels_exit_codes() {
    assert_eq!(hippasus(&["wasteels", "21", "34"]).status.code(), Some(0));
    assert_eq!(hippasus(&["wasteels", "1", "1"]).status.code(), Some(0));
    let out = hippasus(&["wasteels", "9", "15"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("consecutive: no"));
    assert_eq!(hippasus(&["wasteels", "9"]).status.code(), Some(2));
}

#[test]
fn octagon_report() {
    let out = hippasus(&["octagon", "--n", "40", "--digits", "50"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("d/F_n: 1.0037558617877042"));
    assert!(text.contains("d/F_n limit: 1.0037558617877043"));
    assert!(text.contains("e/F_n deviation: -0.00000000000000000"));

    assert_eq!(hippasus(&["octagon", "--n", "0"]).status.code(), Some(0));
    let low = hippasus(&["octagon", "--n", "40", "--digits", "10"]);
    assert_eq!(low.status.code(), Some(3));
    assert!(low.stdout.is_empty());
}

#[test]
fn phi_convergence_formats() {
    let out = hippasus(&[
        "phi-convergence",
        "--n-max",
        "16",
        "--digits",
        "30",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 17);
    // 2584 / 1597
    assert!(rows[16]["ratio"]
        .to_string()
        .starts_with("1.61803381340012"));

    let aligned = stdout(&hippasus(&["phi-convergence", "--n-max", "2"]));
    assert_eq!(aligned.lines().count(), 4);
    assert_eq!(
        hippasus(&["phi-convergence", "--n-max", "300", "--digits", "40"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn verify_suites() {
    for (suite, bound) in [
        ("cassini", "300"),
        ("equivalence", "100000"),
        ("parity", "1000"),
        ("convergence", "60"),
    ] {
        let out = hippasus(&["verify", suite, "--bound", bound]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
        assert!(stdout(&out).starts_with(&format!("{suite}: pass")));
    }
    assert_eq!(
        hippasus(&["verify", "nope", "--bound", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(hippasus(&["verify", "cassini"]).status.code(), Some(2));
}

#[test]
fn fib_and_descent() {
    assert_eq!(stdout(&hippasus(&["fib", "0"])), "1\n");
    assert_eq!(stdout(&hippasus(&["fib", "10"])), "89\n");
    let out = hippasus(&["descent", "2"]);
    assert_eq!(stdout(&out), "2 1 1\nindex: 2\n");
    assert_eq!(hippasus(&["descent", "100"]).status.code(), Some(1));
}

#[test]
fn help_is_not_an_error() {
    let out = hippasus(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("phi-convergence"));
}
