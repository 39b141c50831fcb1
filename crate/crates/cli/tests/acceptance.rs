//! CLI acceptance: census determinism (criterion 10) plus the command
//! surface contracts (exit codes, formats, JSON round-trip).

use std::process::{Command, Output};

use bicellular::bicellular::{poly_closed, BicellularInstance};
use bicellular::combinat::Partition;
use bicellular_cli::census;
use bicellular_cli::report::PolyReport;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bicellular"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn criterion_10_census_determinism() {
    // in-process, parallel render
    let a = census::render(7);
    let b = census::render(7);
    assert_eq!(a, b, "in-process census must be byte-identical");

    // across processes and thread counts
    let r1 = run(&["census", "--max-n", "7", "--threads", "4"]);
    let r2 = run(&["census", "--max-n", "7", "--threads", "4"]);
    let r3 = run(&["census", "--max-n", "7", "--threads", "1"]);
    assert!(r1.status.success());
    assert_eq!(r1.stdout, r2.stdout, "two parallel runs differ");
    assert_eq!(r1.stdout, r3.stdout, "parallel and serial runs differ");
    assert_eq!(stdout(&r1), a, "process output differs from library render");
    println!("PASS criterion 10: census --max-n 7 is byte-identical across runs and thread counts");
}

#[test]
fn census_row_contents() {
    let out = stdout(&run(&["census", "--max-n", "5"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,p,mu,poly,genus_counts,imag_axis,log_concave,method,ms");
    assert!(lines.contains(&"5,2,\"5\",(1/4)x^4+(3/4)x^2,0:6;1:18,true,true,closed,"));

    let small = stdout(&run(&["census", "--max-n", "3"]));
    let rows: Vec<&str> = small.lines().skip(1).collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].starts_with("2,1,\"2\","));
    assert!(rows[1].starts_with("3,1,\"3\","));

    let empty = stdout(&run(&["census", "--max-n", "1"]));
    assert_eq!(empty.lines().count(), 1, "header only");
}

#[test]
fn census_out_file_and_io_error() {
    let dir = std::env::temp_dir().join("bicellular-census-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("census.csv");
    let ok = run(&["census", "--max-n", "4", "--out", path.to_str().unwrap()]);
    assert!(ok.status.success());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, census::render(4));

    let bad = run(&["census", "--max-n", "3", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(bad.status.code(), Some(4));
}

#[test]
fn poly_json_round_trip() {
    let out = run(&["poly", "--n", "6", "--p", "2", "--mu", "3,3", "--format", "json"]);
    assert!(out.status.success());
    let report: PolyReport = serde_json::from_str(stdout(&out).trim()).expect("valid JSON");
    assert_eq!(report.n, 6);
    assert_eq!(report.p, 2);
    assert_eq!(report.mu, vec![3, 3]);
    assert!(report.checks.imag_axis);
    assert!(report.checks.log_concave);

    let inst = BicellularInstance::new(6, 2, Partition::new(vec![3, 3])).unwrap();
    assert_eq!(report.to_poly(), poly_closed(&inst).unwrap());

    let genus = report.genus.expect("valid instance has a genus table");
    assert_eq!(genus.get(&0).map(String::as_str), Some("12"));
    assert_eq!(genus.get(&1).map(String::as_str), Some("28"));
}

#[test]
fn poly_text_and_fallback() {
    let out = run(&["poly", "--n", "5", "--p", "2", "--mu", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("(1/4)x^4+(3/4)x^2"), "got: {text}");
    assert!(text.contains("genus: {0: 6, 1: 18}"), "got: {text}");

    // min(mu) = p: warning on stderr, charsum fallback
    let out = run(&["poly", "--n", "4", "--p", "2", "--mu", "2,2"]);
    assert!(out.status.success());
    let err = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(err.contains("falling back"), "stderr: {err}");
    assert!(stdout(&out).contains("method: charsum"));

    // mu accepts multiplicity syntax and unsorted parts
    let out = run(&["poly", "--n", "6", "--p", "1", "--mu", "2^2,2"]);
    assert!(out.status.success());
    let via_sorted = run(&["poly", "--n", "6", "--p", "1", "--mu", "2,2,2"]);
    let head = |o: &Output| stdout(o).lines().take(2).map(String::from).collect::<Vec<_>>();
    assert_eq!(head(&out), head(&via_sorted));
}

#[test]
fn poly_methods_agree() {
    for method in ["closed", "charsum", "oracle"] {
        let out = run(&[
            "poly", "--n", "6", "--p", "2", "--mu", "3,3", "--format", "json", "--method", method,
        ]);
        assert!(out.status.success(), "method {method}");
        let report: PolyReport = serde_json::from_str(stdout(&out).trim()).unwrap();
        let inst = BicellularInstance::new(6, 2, Partition::new(vec![3, 3])).unwrap();
        assert_eq!(report.to_poly(), poly_closed(&inst).unwrap(), "method {method}");
    }
}

#[test]
fn exit_codes() {
    // sum(mu) != n
    let out = run(&["poly", "--n", "5", "--p", "2", "--mu", "4"]);
    assert_eq!(out.status.code(), Some(2));
    // malformed partition
    let out = run(&["poly", "--n", "5", "--p", "2", "--mu", "0,5"]);
    assert_eq!(out.status.code(), Some(2));
    // oracle guard
    let out = run(&[
        "poly", "--n", "12", "--p", "1", "--mu", "12", "--method", "oracle",
        "--max-class-size", "1000",
    ]);
    assert_eq!(out.status.code(), Some(3));
    // char size mismatch
    let out = run(&["char", "--lambda", "2,1", "--mu", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn char_values() {
    let out = run(&["char", "--lambda", "2,1", "--mu", "3"]);
    assert_eq!(stdout(&out).trim(), "-1");
    let out = run(&["char", "--lambda", "4", "--mu", "2,2"]);
    assert_eq!(stdout(&out).trim(), "1");
    let out = run(&["char", "--lambda", "1,1,1", "--mu", "3"]);
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn verify_small_suite_passes() {
    let out = run(&["verify", "--max-n", "5", "--suite", "all"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("PASS closed       n=3 p=1 mu=[3]"), "got: {text}");
    assert!(text.contains("PASS zeros        n=5 p=2 mu=[5]"));
    assert!(text.contains("0 failed"));
    // no ANSI styling when piped
    assert!(!text.contains('\x1b'));
}
