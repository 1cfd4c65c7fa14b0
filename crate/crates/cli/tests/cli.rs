use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use threshold_bppc::harness::{read_csv, CSV_HEADER};
use threshold_bppc::{parse_instance, recognize_threshold};

fn tbppc(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tbppc"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(report: &'a str, key: &str) -> &'a str {
    report
        .lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
        .unwrap_or_else(|| panic!("no {key:?} in\n{report}"))
}

#[test]
fn generate_threshold_zero_has_no_conflicts() {
    let dir = tempfile::tempdir().unwrap();
    let o = tbppc(&["generate", "--kind", "T", "--n", "10", "--d", "0", "--seed", "1"], dir.path());
    assert!(o.status.success(), "{o:?}");
    let inst = parse_instance(&fs::read_to_string(dir.path().join("T_n10_d0_s1.txt")).unwrap()).unwrap();
    assert_eq!(inst.n(), 10);
    assert_eq!(inst.capacity(), 150);
    assert_eq!(inst.graph().edge_count(), 0);
    assert!(inst.weights().iter().all(|&w| (20..=100).contains(&w)));
    assert!(stdout(&o).contains("conflicts=0 density=0.000000"));
}

#[test]
fn generate_arbitrary_full_density_is_complete() {
    let dir = tempfile::tempdir().unwrap();
    let o = tbppc(&["generate", "--kind", "A", "--n", "100", "--delta", "1.0", "--seed", "1"], dir.path());
    assert!(o.status.success(), "{o:?}");
    let inst = parse_instance(&fs::read_to_string(dir.path().join("A_n100_delta1_s1.txt")).unwrap()).unwrap();
    assert_eq!(inst.graph().edge_count(), 4950);
}

#[test]
fn generate_threshold_from_density_is_threshold() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["generate", "--kind", "T", "--n", "250", "--delta", "0.5", "--seed", "7", "--B", "150", "--seeds", "3"];
    let o = tbppc(&args, dir.path());
    assert!(o.status.success(), "{o:?}");
    assert_eq!(stdout(&o).lines().count(), 3);
    for seed in 7..10 {
        let path = dir.path().join(format!("T_n250_delta0.5_s{seed}.txt"));
        let inst = parse_instance(&fs::read_to_string(path).unwrap()).unwrap();
        assert_eq!(inst.n(), 250);
        assert!(recognize_threshold(inst.graph()).is_threshold());
    }
}

#[test]
fn usage_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 6] = [
        &["generate", "--kind", "T", "--n", "10", "--d", "0.3", "--delta", "0.3"],
        &["generate", "--kind", "A", "--n", "10", "--d", "0.3"],
        &["generate", "--kind", "Q", "--n", "10", "--delta", "0.3"],
        &["generate", "--kind", "T", "--n", "10", "--delta", "1.5"],
        &["solve", "missing.txt"],
        &["frobnicate"],
    ];
    for args in cases {
        let o = tbppc(args, dir.path());
        assert_eq!(o.status.code(), Some(1), "{args:?}: {o:?}");
    }
    assert_eq!(tbppc(&["--help"], dir.path()).status.code(), Some(0));
    assert_eq!(tbppc(&["--version"], dir.path()).status.code(), Some(0));
}

#[test]
fn parse_errors_exit_two_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.txt"), "3 150\n1 60\n2 x\n3 60\n").unwrap();
    for cmd in ["solve", "analyze"] {
        let o = tbppc(&[cmd, "bad.txt"], dir.path());
        assert_eq!(o.status.code(), Some(2));
        let err = String::from_utf8(o.stderr).unwrap();
        assert!(err.contains("line 3"), "{err}");
    }
}

#[test]
fn solve_small_files() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("tiny.txt"), "3 150\n1 60\n2 60\n3 60\n").unwrap();
    let o = tbppc(&["solve", "tiny.txt"], dir.path());
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(field(&out, "exact k"), "2");
    assert_eq!(field(&out, "optimal"), "yes");

    fs::write(
        dir.path().join("k5.txt"),
        "5 150\n1 10 2 3 4 5\n2 10 3 4 5\n3 10 4 5\n4 10 5\n5 10\n",
    )
    .unwrap();
    let out = stdout(&tbppc(&["solve", "k5.txt"], dir.path()));
    assert_eq!(field(&out, "exact k"), "5");
    assert_eq!(field(&out, "g + k(Q)"), "5 + 0 = 5 (agrees)");
}

#[test]
fn solve_generated_threshold_instance_with_cross_check() {
    let dir = tempfile::tempdir().unwrap();
    let gen = ["generate", "--kind", "T", "--n", "30", "--delta", "0.82", "--seed", "3"];
    assert!(tbppc(&gen, dir.path()).status.success());
    let o = tbppc(&["solve", "T_n30_delta0.82_s3.txt", "--time-limit", "30"], dir.path());
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(field(&out, "optimal"), "yes");
    assert!(field(&out, "g + k(Q)").ends_with("(agrees)"), "{out}");
    let lb: usize = field(&out, "lower bound").parse().unwrap();
    let k: usize = field(&out, "exact k").parse().unwrap();
    let ffd: usize = field(&out, "ffd k").parse().unwrap();
    assert!(lb <= k && k <= ffd);
}

#[test]
fn analyze_reports_structure() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("empty.txt"), "4 150\n1 10\n2 10\n3 10\n4 10\n").unwrap();
    let out = stdout(&tbppc(&["analyze", "empty.txt"], dir.path()));
    assert_eq!(field(&out, "threshold"), "yes");
    assert_eq!(field(&out, "t"), "1");
    assert_eq!(field(&out, "g"), "0");
    assert_eq!(field(&out, "independent set"), "4");

    // Path on four vertices is P4.
    fs::write(dir.path().join("p4.txt"), "4 150\n1 10 2\n2 10 3\n3 10 4\n4 10\n").unwrap();
    let out = stdout(&tbppc(&["analyze", "p4.txt"], dir.path()));
    assert_eq!(field(&out, "threshold"), "no");
    assert_eq!(field(&out, "density"), "0.500000");

    let gen = ["generate", "--kind", "T", "--n", "40", "--d", "0.6", "--seed", "2"];
    assert!(tbppc(&gen, dir.path()).status.success());
    let o = tbppc(&["analyze", "T_n40_d0.6_s2.txt", "--intervals"], dir.path());
    let out = stdout(&o);
    assert_eq!(field(&out, "threshold"), "yes");
    let t: f64 = field(&out, "t").parse().unwrap();
    assert!((t - 24.0).abs() <= 10.0, "t={t}");
    let intervals = out.lines().skip_while(|l| *l != "intervals:").skip(1).count();
    assert_eq!(intervals, 40);
}

#[test]
fn empty_config_writes_header_only() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("empty.toml"), "").unwrap();
    let o = tbppc(&["experiment", "--config", "empty.toml", "--out", "rows.csv"], dir.path());
    assert!(o.status.success(), "{o:?}");
    let csv = fs::read_to_string(dir.path().join("rows.csv")).unwrap();
    assert_eq!(csv, format!("{}\n", CSV_HEADER.join(",")));
}

#[test]
fn experiment_from_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = "classes = [\"T\", \"I\", \"A\"]\nn = [12]\ndelta = [0.32, 0.82]\nseeds = 2\ntime_limit = 30.0\njobs = 2\n";
    fs::write(dir.path().join("grid.toml"), cfg).unwrap();
    let o = tbppc(&["experiment", "--config", "grid.toml", "--out", "rows.csv"], dir.path());
    assert!(o.status.success(), "{o:?}");
    let rows = read_csv(fs::File::open(dir.path().join("rows.csv")).unwrap()).unwrap();
    assert_eq!(rows.len(), 12);
    for r in &rows {
        assert_eq!(r.optimal, Some(true));
        let (lb, k, ffd) = (r.lower_bound.unwrap(), r.exact_k.unwrap(), r.ffd_k.unwrap());
        assert!(lb <= k && k <= ffd);
        assert!((0.0..=1.0).contains(&r.delta_measured.unwrap()));
    }
    let summary = stdout(&o);
    assert!(summary.contains("T Opt") && summary.contains("2/2"), "{summary}");

    // Flags override the file.
    let o = tbppc(&["experiment", "--config", "grid.toml", "--kind", "T", "--seeds", "1"], dir.path());
    let rows = read_csv(o.stdout.as_slice()).unwrap();
    assert_eq!(rows.len(), 2);
}

#[test]
fn bad_config_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.toml"), "classes = [\"T\"]\nbogus = 1\n").unwrap();
    let o = tbppc(&["experiment", "--config", "bad.toml"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn density_table_prints_rows_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let o = tbppc(&["density-table", "--n", "200", "--seeds", "2", "--out", "t.csv"], dir.path());
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 12);
    assert!(out.lines().any(|l| l.trim_start().starts_with("0.5  ") && l.contains("0.500000")));
    let csv = fs::read_to_string(dir.path().join("t.csv")).unwrap();
    assert_eq!(csv.lines().count(), 11);
}
