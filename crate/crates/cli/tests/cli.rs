use std::process::{Command, Output};

fn annulus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_annulus")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = annulus(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Vec<serde_json::Value> {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn diff_examples() {
    assert_eq!(stdout(&["diff", "--complex", "f00", "--expr", "x(4)"]), "x(2)^2\n");
    assert_eq!(
        stdout(&["diff", "--complex", "f22", "--expr", "c(1)*d(0)*x(-1)"]),
        "c(0)*d(0) + c(1)*d(-1) + a(1/2)*b(1/2)*x(-1)\n"
    );
    assert_eq!(stdout(&["diff", "--complex", "f02", "--expr", "a(1/2)"]), "0\n");
    assert_eq!(stdout(&["diff", "--complex", "F02", "--expr", "a(5/2)"]), "a(1/2)*x(2) + a(3/2)*x(1)\n");
}

#[test]
fn parse_errors_exit_with_2() {
    let out = annulus(&["diff", "--complex", "f00", "--expr", "x(1) + y(2)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 7"));
    assert_eq!(annulus(&["diff", "--complex", "f33", "--expr", "x(1)"]).status.code(), Some(2));
    assert_eq!(annulus(&["verify", "--suite", "nope"]).status.code(), Some(2));
    let bad = annulus(&["homology", "--complex", "f00", "--summand", "a+b+", "--winding", "0", "--max-weight", "2"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn homology_json_records() {
    let rows = json(&["homology", "--complex", "f00", "--winding", "0", "--max-weight", "2", "--format", "json"]);
    assert_eq!(rows.len(), 1);
    let r = &rows[0];
    assert_eq!(r["complex"], "f00");
    assert_eq!(r["winding"], 0);
    assert_eq!(r["max_weight"], 2);
    assert_eq!(r["dim_space"], 2);
    assert_eq!(r["dim_kernel"], 2);
    assert_eq!(r["dim_image"], 0);
    assert_eq!(r["dim_homology"], 2);
    assert_eq!(r["predicted"], 2);
    assert_eq!(r["stable"], true);

    let rows = json(&[
        "homology", "--complex", "f22", "--summand", "a+b-", "--winding", "0", "--max-weight", "1", "--format", "json",
    ]);
    assert_eq!((rows[0]["dim_homology"].clone(), rows[0]["predicted"].clone()), (1.into(), 1.into()));

    let rows = json(&[
        "homology", "--complex", "f02", "--summand", "a+", "--winding", "1/2", "--max-weight", "5/2", "--format", "json",
    ]);
    assert_eq!(rows[0]["winding"], "1/2");
    assert_eq!(rows[0]["max_weight"], "5/2");
    assert_eq!(rows[0]["dim_homology"], 1);
}

#[test]
fn table_scans_mark_stable_tails() {
    let rows = json(&["table", "--complex", "f11", "--winding", "0", "--max-weight", "0..3", "--format", "json"]);
    let dims: Vec<i64> = rows.iter().map(|r| r["dim_homology"].as_i64().unwrap()).collect();
    let stable: Vec<bool> = rows.iter().map(|r| r["stable"].as_bool().unwrap()).collect();
    assert_eq!(dims, vec![1, 1, 0, 0]);
    assert_eq!(stable, vec![false, false, true, true]);
    assert!(rows.iter().all(|r| r["prediction_scope"] == "limit"));
}

#[test]
fn rows_are_ordered_by_winding_then_weight_and_deterministic() {
    let args = [
        "homology", "--complex", "f00", "--winding=-2..2", "--max-weight", "2..5", "--format", "csv", "--jobs", "4",
    ];
    let a = stdout(&args);
    let b = stdout(&args);
    assert_eq!(a, b);
    let rows: Vec<Vec<String>> = a.lines().skip(1).map(|l| l.split(',').map(str::to_string).collect()).collect();
    assert_eq!(rows.len(), 20);
    let keys: Vec<(i64, i64)> = rows.iter().map(|r| (r[1].parse().unwrap(), r[2].parse().unwrap())).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert_eq!(a.lines().next().unwrap().split(',').nth(8), Some("dim_homology"));
}

#[test]
fn verify_suites() {
    let out = stdout(&["verify", "--suite", "d2", "--max-weight", "10"]);
    assert!(out.lines().all(|l| !l.starts_with("FAIL")));
    assert!(out.ends_with("0 failed\n"));
    let out = stdout(&["verify", "--suite", "nonvanishing"]);
    assert!(out.contains("PASS c_n d_-n survive"));
    stdout(&["verify", "--suite", "weyl", "--max-weight", "12"]);
    let all = annulus(&["verify"]);
    assert_eq!(all.status.code(), Some(0));
}
