use std::process::{Command, Output};

use num_bigint::BigUint;
use polycoef::triangle_row;

fn polycoef(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polycoef")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = polycoef(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    polycoef(args).status.code().unwrap()
}

#[test]
fn row_prints_one_entry_per_line() {
    assert_eq!(stdout(&["row", "3", "2"]), "1\n3\n6\n7\n6\n3\n1\n");
}

#[test]
fn row_round_trips() {
    for (k, l) in [(0, 4), (7, 1), (25, 3), (60, 6)] {
        let text = stdout(&["row", &k.to_string(), &l.to_string()]);
        let parsed: Vec<BigUint> = text.lines().map(|s| s.parse().unwrap()).collect();
        assert_eq!(parsed, triangle_row(k, l).unwrap().into_values());
    }
}

#[test]
fn scalar_commands() {
    assert_eq!(stdout(&["coeff", "0", "0", "5"]), "1\n");
    assert_eq!(stdout(&["coeff", "7", "-1", "2"]), "0\n");
    assert_eq!(stdout(&["coeff", "10", "20", "4"]), "856945\n");
    assert_eq!(stdout(&["central", "3", "3"]), "12\n");
    assert_eq!(stdout(&["compositions", "5", "3", "1", "3"]), "6\n");
    assert_eq!(stdout(&["compositions", "2", "2", "0", "2", "--list"]), "0,2\n1,1\n2,0\n");
    // Full decimal, no exponent.
    assert_eq!(stdout(&["central", "100", "1"]), "100891344545564193334812497256\n");
}

#[test]
fn approx_methods() {
    let pointwise = stdout(&["approx", "20", "40", "4"]);
    let central = stdout(&["approx", "20", "0", "4", "--method", "central"]);
    assert_eq!(pointwise, central);
    let lines: Vec<&str> = pointwise.lines().collect();
    let log: f64 = lines[0].strip_prefix("log_value ").unwrap().parse().unwrap();
    let value: f64 = lines[1].strip_prefix("value ").unwrap().parse().unwrap();
    assert!((value.ln() - log).abs() < 1e-12);

    let cc = stdout(&["approx", "20", "40", "4", "--method", "cc-phi"]);
    let p: f64 = cc.lines().last().unwrap().strip_prefix("probability ").unwrap().parse().unwrap();
    assert!((p - 0.063_012_668_028_519_38).abs() < 1e-12);

    // (l+1)^m overflows a double here, so only the log is printed.
    let huge = stdout(&["approx", "5000", "10000", "4"]);
    assert_eq!(huge.lines().count(), 1);
}

#[test]
fn pmf_output() {
    assert_eq!(stdout(&["pmf", "2", "1", "--rational"]), "1/4\n1/2\n1/4\n");
    assert_eq!(stdout(&["pmf", "3", "2", "--rational"]).lines().nth(3), Some("7/27"));
    assert_eq!(stdout(&["pmf", "2", "1"]), "0.25\n0.5\n0.25\n");
}

#[test]
fn sample_is_deterministic() {
    let args = ["sample", "10", "4", "--count", "200000", "--seed", "7"];
    let first = stdout(&args);
    assert_eq!(first, stdout(&args));
    let counts: Vec<u64> = first.lines().map(|s| s.parse().unwrap()).collect();
    assert_eq!(counts.len(), 41);
    assert_eq!(counts.iter().sum::<u64>(), 200_000);
    let cfg = polycoef::SamplerConfig { m: 10, l: 4, sample_count: 200_000, seed: 7 };
    assert_eq!(counts, polycoef::sample_sums(&cfg).unwrap());
    assert_eq!(stdout(&["sample", "1", "0", "--count", "1000", "--seed", "42"]), "1000\n");
}

#[test]
fn error_csv_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    stdout(&["errors", "100", "4", "--out", path.to_str().unwrap()]);
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("m,l,n,exact_log,approx_log,rel_error"));
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|f| f.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 401);
    let expected = polycoef::error_sweep(100, 4).unwrap();
    for (row, rec) in rows.iter().zip(&expected) {
        assert_eq!(row[2] as u64, rec.n);
        assert_eq!(row[5], rec.rel_error);
    }

    let path = dir.path().join("central.csv");
    stdout(&["central-errors", "4", "--m-list", "10,20,40", "--out", path.to_str().unwrap()]);
    let text = std::fs::read_to_string(&path).unwrap();
    let ns: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').nth(2).unwrap()).collect();
    assert_eq!(ns, ["20", "40", "80"]);

    let path = dir.path().join("fig1.csv");
    stdout(&["pmf-normal", "5", "4", "--out", path.to_str().unwrap()]);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().next(), Some("m,l,n,exact_pmf,normal_density,cc_phi"));
    assert_eq!(text.lines().count(), 22);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["row", "3"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["approx", "10", "5", "2", "--method", "exact"]), 2);
    assert_eq!(code(&["approx", "10", "5", "0"]), 1);
    assert_eq!(code(&["approx", "10", "41", "4"]), 1);
    assert_eq!(code(&["compositions", "3", "2", "4", "1"]), 1);
    assert_eq!(code(&["pmf", "0", "3"]), 1);
    assert_eq!(code(&["row", "100000000", "100"]), 3);
    assert_eq!(code(&["compositions", "30", "10", "0", "6", "--list"]), 3);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn usage_errors_name_the_flag() {
    let out = polycoef(&["sample", "2", "1", "--count", "many"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--count"));
    let out = polycoef(&["approx", "10", "5", "0"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("l must be at least 1"));
}
