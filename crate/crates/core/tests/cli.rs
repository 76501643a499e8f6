mod common;

use std::process::{Command, Output};

use assort_bounds::report::parse_report_strict;
use common::fixture;

fn assort(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_assort"))
        .args(args)
        .env_remove("ASSORT_THREADS")
        .output()
        .expect("binary runs")
}

fn path(name: &str) -> String {
    fixture(name).display().to_string()
}

fn json(out: &Output) -> assort_bounds::report::AnalysisReport {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    parse_report_strict(std::str::from_utf8(&out.stdout).unwrap()).unwrap()
}

#[test]
fn wolf_bounds_all_spaces() {
    let out = assort(&[
        "bounds",
        &path("wolf.edges"),
        "--metadata",
        &path("wolf.meta"),
    ]);
    let report = json(&out);
    let observed = report.observed.unwrap();
    assert!((observed.r + 0.153).abs() < 0.001);
    let ranges: Vec<(f64, f64)> = report
        .ranges
        .iter()
        .map(|r| (r.r_lower, r.r_upper))
        .collect();
    for ((lo, hi), (elo, ehi)) in ranges.iter().zip([(-0.263, 0.099), (-0.153, 0.009)]) {
        assert!(
            (lo - elo).abs() < 0.001 && (hi - ehi).abs() < 0.001,
            "{lo} {hi}"
        );
    }
}

#[test]
fn path_graph_bounds_in_graph_space() {
    let out = assort(&[
        "bounds",
        &path("p3.edges"),
        "--metadata",
        &path("p3.meta"),
        "--space",
        "gs",
    ]);
    let report = json(&out);
    assert!((report.observed.unwrap().r + 1.0 / 3.0).abs() < 1e-12);
    assert!((report.ranges[0].r_lower + 1.0 / 3.0).abs() < 1e-12);
}

#[test]
fn exit_codes() {
    let gs_without_labels = assort(&["bounds", &path("p3.edges"), "--space", "gs"]);
    assert_eq!(gs_without_labels.status.code(), Some(2));
    let gs_with_n1_only = assort(&["bounds", &path("p3.edges"), "--space", "gs", "--n1", "1"]);
    assert_eq!(gs_with_n1_only.status.code(), Some(2));

    let degenerate = assort(&["bounds", &path("p3.edges"), "--n1", "3"]);
    assert_eq!(degenerate.status.code(), Some(3));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.edges");
    std::fs::write(&bad, "a b\nb c d\n").unwrap();
    let parse = assort(&["bounds", bad.to_str().unwrap(), "--n1", "1"]);
    assert_eq!(parse.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&parse.stderr).contains("bad.edges:2:"));

    // every edge inside class 0: r is undefined
    let meta = dir.path().join("flat.meta");
    std::fs::write(&meta, "a\t0\nb\t0\nc\t0\nd\t1\n").unwrap();
    let edges = dir.path().join("flat.edges");
    std::fs::write(&edges, "a b\nb c\n").unwrap();
    let undefined = assort(&[
        "bounds",
        edges.to_str().unwrap(),
        "--metadata",
        meta.to_str().unwrap(),
        "--space",
        "mgs",
    ]);
    assert_eq!(undefined.status.code(), Some(4));
}

#[test]
fn enumerate_wolf() {
    let out = assort(&["enumerate", &path("wolf.edges"), "--n1", "9"]);
    let ex = &json(&out).exploration[0];
    assert_eq!(ex.sample_count, 11_440);
    assert!((ex.r_min_observed.unwrap() + 0.16).abs() < 0.001);
    assert!((ex.r_max_observed.unwrap() - 0.009).abs() < 0.001);

    let capped = assort(&[
        "enumerate",
        &path("wolf.edges"),
        "--n1",
        "9",
        "--cap",
        "100",
    ]);
    assert_eq!(capped.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("heuristic"));
}

#[test]
fn heuristic_on_path() {
    let out = assort(&[
        "heuristic",
        &path("p3.edges"),
        "--n1",
        "1",
        "--objective",
        "min",
        "--seed",
        "7",
    ]);
    let ex = &json(&out).exploration[0];
    assert_eq!(ex.heuristic.as_ref().unwrap().best_r, Some(-1.0));
    assert_eq!(ex.seed, Some(7));
}

#[test]
fn permtest_on_complete_graph() {
    let out = assort(&[
        "permtest",
        &path("k4.edges"),
        "--metadata",
        &path("k4.meta"),
        "--samples",
        "100000",
        "--seed",
        "1",
    ]);
    assert_eq!(json(&out).permutation_test.unwrap().p_value, 1.0);
}

#[test]
fn missing_seed_is_generated_and_printed() {
    let out = assort(&[
        "permtest",
        &path("p3.edges"),
        "--metadata",
        &path("p3.meta"),
        "--samples",
        "10",
    ]);
    let stderr = String::from_utf8_lossy(&out.stderr);
    let printed: u64 = stderr
        .trim()
        .strip_prefix("seed: ")
        .unwrap()
        .parse()
        .unwrap();
    assert_eq!(json(&out).seed, Some(printed));
}

#[test]
fn histogram_csv_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("h.csv");
    let report = dir.path().join("r.json");
    let out = assort(&[
        "rewire",
        &path("c6.edges"),
        "--metadata",
        &path("c6.meta"),
        "--seed",
        "3",
        "--samples",
        "50",
        "--swaps",
        "5",
        "--bins",
        "10",
        "--histogram-csv",
        csv.to_str().unwrap(),
        "--output",
        report.to_str().unwrap(),
        "--summary",
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("Rewiring: 50 samples"));
    let csv = std::fs::read_to_string(csv).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("bin_left,bin_right,count"));
    let total: u64 = lines
        .map(|l| l.rsplit(',').next().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 50);
    let parsed = parse_report_strict(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(parsed.exploration[0].sample_count, 50);
}

#[test]
fn thread_count_does_not_change_reports() {
    let runs: [&[&str]; 3] = [
        &[
            "permtest",
            &path("wolf.edges"),
            "--metadata",
            &path("wolf.meta"),
            "--samples",
            "20000",
            "--seed",
            "11",
        ],
        &[
            "heuristic",
            &path("wolf.edges"),
            "--n1",
            "9",
            "--iters",
            "2000",
            "--restarts",
            "6",
            "--seed",
            "11",
        ],
        &[
            "rewire",
            &path("c6.edges"),
            "--metadata",
            &path("c6.meta"),
            "--samples",
            "300",
            "--swaps",
            "4",
            "--seed",
            "11",
        ],
    ];
    for args in runs {
        let outputs: Vec<Vec<u8>> = ["1", "2", "7"]
            .iter()
            .map(|t| {
                let mut with_threads = args.to_vec();
                with_threads.extend(["--threads", t]);
                let out = assort(&with_threads);
                assert!(out.status.success());
                out.stdout
            })
            .collect();
        assert!(outputs.windows(2).all(|w| w[0] == w[1]), "{}", args[0]);
    }
}

#[test]
fn threads_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_assort"))
        .args(["enumerate", &path("k4.edges"), "--n1", "2"])
        .env("ASSORT_THREADS", "0")
        .output()
        .unwrap();
    // zero workers is rejected, so the variable was read
    assert_eq!(out.status.code(), Some(2));
}
