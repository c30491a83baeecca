use std::path::PathBuf;
use std::process::{Command, Output};

fn kernelops(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kernelops")).args(args).output().expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("kernelops-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn unknown_example_is_a_usage_error() {
    let o = kernelops(&["converge", "--example", "9.9", "--grids", "20"]);
    assert_eq!(o.status.code(), Some(2));
    let msg = stderr(&o);
    assert!(msg.contains("1.1") && msg.contains("6.2"), "valid ids not listed: {msg}");
}

#[test]
fn unknown_table_is_a_usage_error() {
    let o = kernelops(&["table", "no_such_table"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("ex_diff_periodic"));
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(kernelops(&["converge", "--example", "1.1", "--k", "4", "--grids", "20"]).status.code(), Some(2));
    assert_eq!(kernelops(&["converge", "--example", "1.1", "--grids", "20,abc"]).status.code(), Some(2));
    assert_eq!(kernelops(&["run", "--example", "1.1", "--quadrature", "cubic"]).status.code(), Some(2));
}

#[test]
fn single_grid_gives_one_row_with_blank_order() {
    let out = scratch("single.csv");
    let o = kernelops(&["converge", "--example", "1.1", "--k", "2", "--grids", "20", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let csv = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "N,error,order");
    assert_eq!(lines.len(), 2);
    let cells: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(cells[0], "20");
    assert_eq!(cells[2], "");
    assert!(out.with_file_name("single.raw.csv").exists());
}

#[test]
fn convergence_csv_has_three_significant_digits() {
    let out = scratch("conv.csv");
    let o = kernelops(&["converge", "--example", "1.1", "--k", "3", "--cfl", "0.5", "--grids", "20,40,80", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let csv = std::fs::read_to_string(&out).unwrap();
    let rows: Vec<Vec<&str>> = csv.lines().skip(1).map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 3);
    for r in &rows {
        let mantissa = r[1].split('e').next().unwrap();
        assert_eq!(mantissa.len(), 4, "error cell {}", r[1]);
    }
    let last: f64 = rows[2][2].parse().unwrap();
    assert!(last > 2.5, "order {last}");
}

#[test]
fn run_dumps_coordinates_and_values() {
    let o = kernelops(&["run", "--example", "1.2", "--k", "1", "--grids", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8_lossy(&o.stdout);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,u"));
    assert_eq!(lines.count(), 11);

    let o = kernelops(&["run", "--example", "5", "--k", "1", "--grids", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8_lossy(&o.stdout);
    assert_eq!(text.lines().next(), Some("x,y,u"));
    assert!(text.lines().skip(1).all(|l| l.split(',').count() == 3));
}

#[test]
fn selftest_passes_and_fault_hook_fails() {
    let ok = kernelops(&["selftest"]);
    assert_eq!(ok.status.code(), Some(0));
    let report = String::from_utf8_lossy(&ok.stdout);
    assert!(report.lines().filter(|l| l.starts_with("PASS")).count() >= 6);

    let bad = kernelops(&["selftest", "--inject-fault"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stdout).contains("FAIL coefficient"));
}

#[test]
fn thread_count_is_validated() {
    let o = Command::new(env!("CARGO_BIN_EXE_kernelops"))
        .args(["selftest"])
        .env("KERNELOPS_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_kernelops"))
        .args(["converge", "--example", "1.1", "--grids", "20", "--out", scratch("t1.csv").to_str().unwrap()])
        .env("KERNELOPS_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}
