//! End-to-end tests against the compiled binary: exact output bytes,
//! exit codes, and the error paths.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recurharm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn eval_prints_exact_value() {
    let out = run(&["eval", "--n", "4", "--m", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "5845/1728\n");
}

#[test]
fn eval_honors_strategy_flag() {
    let out = run(&["eval", "--n", "3", "--m", "2", "--strategy", "binomial"]);
    assert_eq!(stdout(&out), "85/36\n");
    let out = run(&["eval", "--n", "4", "--m", "4", "--strategy", "definition"]);
    assert_eq!(stdout(&out), "76111/20736\n");
}

#[test]
fn eval_renders_integers_bare_in_plain() {
    let out = run(&["eval", "--n", "7", "--m", "0"]);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn eval_all_cross_checks_strategies() {
    let out = run(&["eval", "--n", "5", "--m", "2", "--strategy", "all"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "12019/3600\n");
}

#[test]
fn eval_formats_value() {
    let out = run(&["eval", "--n", "4", "--m", "1", "--format", "json"]);
    assert_eq!(stdout(&out), "{\"num\":\"25\",\"den\":\"12\"}\n");
    let out = run(&["eval", "--n", "7", "--m", "0", "--format", "csv"]);
    assert_eq!(stdout(&out), "1/1\n");
    let out = run(&["eval", "--n", "3", "--m", "2", "--format", "latex"]);
    assert_eq!(stdout(&out), "\\frac{85}{36}\n");
}

#[test]
fn eval_rejects_n_zero_as_usage_error() {
    let out = run(&["eval", "--n", "0", "--m", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_rejects_unknown_strategy() {
    let out = run(&["eval", "--n", "2", "--m", "1", "--strategy", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_csv_matches_golden_row() {
    let out = run(&["table", "--n-max", "4", "--m-max", "4", "--format", "csv"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,m=0,m=1,m=2,m=3,m=4");
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[3].split(',').nth(5), Some("3661/1296"));
    assert_eq!(lines[4], "4,1/1,25/12,415/144,5845/1728,76111/20736");
}

#[test]
fn table_plain_is_human_readable() {
    let out = run(&["table", "--n-max", "4", "--m-max", "4"]);
    let text = stdout(&out);
    assert!(text.starts_with("n\\m"));
    assert!(text.contains("25/12"));
}

#[test]
fn table_json_has_bounds_and_values() {
    let out = run(&["table", "--n-max", "4", "--m-max", "4", "--format", "json"]);
    let text = stdout(&out);
    assert!(text.starts_with("{\"n_max\":4,\"m_max\":4,\"values\":[\"1/1\""));
    assert!(text.contains("\"76111/20736\""));
}

#[test]
fn table_latex_emits_one_row_per_n() {
    let out = run(&["table", "--n-max", "3", "--m-max", "2", "--format", "latex"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines.iter().all(|l| l.ends_with("\\\\")));
    assert_eq!(lines[2], "3 & 1 & \\frac{11}{6} & \\frac{85}{36} \\\\");
}

#[test]
fn verify_passes_on_small_grid() {
    let out = run(&["verify", "--n-max", "6", "--m-max", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("property strategies-agree: ok"));
    assert!(text.contains("all passed"));
}

#[test]
fn bench_emits_csv_grid() {
    let out = run(&[
        "bench", "--n-max", "4", "--m-max", "2", "--repetitions", "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "strategy,n,m,wall_time_ns,peak_live_rationals,max_numerator_bits,max_denominator_bits"
    );
    // powers of two {1, 2, 4} x m {0, 1, 2} x three strategies
    assert_eq!(lines.len(), 1 + 3 * 3 * 3);
    assert!(lines[1].starts_with("definition,1,0,"));
}

#[test]
fn bench_can_restrict_strategy_and_format() {
    let out = run(&[
        "bench", "--n-max", "4", "--m-max", "2", "--repetitions", "1", "--strategy", "table",
        "--format", "json",
    ]);
    let text = stdout(&out);
    assert!(text.starts_with("[{\"strategy\":\"table\""));
    assert_eq!(text.matches("{\"strategy\":").count(), 9);
}

#[test]
fn bench_rejects_plain_format() {
    let out = run(&[
        "bench", "--n-max", "2", "--m-max", "1", "--repetitions", "1", "--format", "plain",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("cannot be rendered as plain"));
}

#[test]
fn float_error_plain_block_shows_cancellation() {
    let out = run(&["float-error", "--n", "60", "--m", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rel: f64 = text
        .lines()
        .find_map(|l| l.strip_prefix("rel_error: "))
        .expect("rel_error line")
        .parse()
        .expect("parses as float");
    assert!(rel > 1e-6);
    assert!(text.lines().any(|l| l.starts_with("exact: ")));
}

#[test]
fn float_error_is_zero_where_floats_are_exact() {
    let out = run(&["float-error", "--n", "1", "--m", "0"]);
    let text = stdout(&out);
    assert!(text.contains("abs_error: 0.0000000000000000e0"));
    assert!(text.contains("rel_error: 0.0000000000000000e0"));
}

#[test]
fn float_error_csv_and_json() {
    let out = run(&["float-error", "--n", "4", "--m", "1", "--format", "csv"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "n,m,exact,float_value,abs_error,rel_error,largest_term_magnitude"
    );
    assert!(lines[1].starts_with("4,1,25/12,"));

    let out = run(&["float-error", "--n", "4", "--m", "1", "--format", "json"]);
    let text = stdout(&out);
    assert!(text.starts_with("[{\"n\":4,\"m\":1,\"exact\":\"25/12\""));
    assert!(text.contains("\"rel_error\":"));
}

#[test]
fn float_error_reports_overflow() {
    let out = run(&["float-error", "--n", "1100", "--m", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("not finite"));
}

#[test]
fn float_error_rejects_latex() {
    let out = run(&["float-error", "--n", "4", "--m", "1", "--format", "latex"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("cannot be rendered as latex"));
}
