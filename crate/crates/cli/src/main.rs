//! `kernelops`: single runs, convergence studies, refinement tables and the
//! self-test suite.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kernelops::problems::tables::TableSpec;
use kernelops::problems::{run_convergence, ConvergenceReport, ExampleId, Scheme};
use kernelops::quadrature::QuadratureMode;
use kernelops::selftest::{run_all, SelftestOptions};

#[derive(Parser)]
#[command(name = "kernelops", version, about = "Kernel-based derivative operators: runs and convergence studies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one example on one grid and dump `x[,y],u` rows.
    Run {
        #[command(flatten)]
        common: Common,
        /// Grid size N (cells per line).
        #[arg(long, default_value = "80")]
        grids: String,
    },
    /// Refinement study for one example, k and CFL.
    Converge {
        #[command(flatten)]
        common: Common,
        /// Comma-separated grid sizes.
        #[arg(long, default_value = "20,40,80,160,320")]
        grids: String,
    },
    /// Reproduce one refinement table over all CFL numbers and k = 1, 2, 3.
    Table {
        /// Table identifier.
        id: String,
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long, value_enum, default_value_t = Quadrature::Linear)]
        quadrature: Quadrature,
        /// Output CSV path (default: table_<id>.csv).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include the optional 320 x 320 grids of the 2D tables.
        #[arg(long)]
        full: bool,
    },
    /// Run the invariant suites.
    Selftest {
        /// Corrupt one correction coefficient (the coefficient suite must fail).
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Args)]
struct Common {
    /// Example id.
    #[arg(long)]
    example: String,
    /// Partial-sum order (also the SSP-RK order).
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value_t = 1.0)]
    cfl: f64,
    /// Kernel-rate constant; defaults to 2, 1, 0.8 for k = 1, 2, 3.
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long, value_enum, default_value_t = Quadrature::Linear)]
    quadrature: Quadrature,
    /// Output path.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Quadrature {
    Linear,
    Nonlinear,
}

impl From<Quadrature> for QuadratureMode {
    fn from(q: Quadrature) -> Self {
        match q {
            Quadrature::Linear => QuadratureMode::Linear,
            Quadrature::Nonlinear => QuadratureMode::Nonlinear,
        }
    }
}

/// Failure with the exit code to report.
struct Failure(u8, String);

fn usage(msg: impl Into<String>) -> Failure {
    Failure(2, msg.into())
}

fn runtime(msg: impl Into<String>) -> Failure {
    Failure(1, msg.into())
}

fn parse_example(id: &str) -> Result<ExampleId, Failure> {
    ExampleId::parse(id).ok_or_else(|| usage(format!("unknown example '{id}'; valid ids: {}", ExampleId::valid_ids())))
}

fn parse_grids(s: &str) -> Result<Vec<usize>, Failure> {
    let ns: Vec<usize> = s
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("bad grid list '{s}'")))?;
    if ns.is_empty() || ns.windows(2).any(|w| w[1] <= w[0]) {
        return Err(usage("grid list must be non-empty and increasing"));
    }
    Ok(ns)
}

fn scheme(k: usize, cfl: f64, beta: Option<f64>, quadrature: Quadrature) -> Result<Scheme, Failure> {
    let mut s = Scheme::new(k, cfl).map_err(|e| usage(e.to_string()))?;
    if let Some(b) = beta {
        if !(b > 0.0) {
            return Err(usage(format!("beta must be positive, got {b}")));
        }
        s.beta = Some(b);
    }
    s.quadrature = quadrature.into();
    Ok(s)
}

/// Scientific notation with three significant digits and a two-digit exponent.
fn sci3(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x:.2e}");
    }
    let s = format!("{x:.2e}");
    let (mant, exp) = s.split_once('e').expect("exponent present");
    let e: i32 = exp.parse().expect("integer exponent");
    format!("{mant}e{}{:02}", if e < 0 { '-' } else { '+' }, e.abs())
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| runtime(format!("cannot create {}: {e}", dir.display())))?;
    }
    fs::write(path, contents).map_err(|e| runtime(format!("cannot write {}: {e}", path.display())))
}

fn raw_sibling(path: &Path) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    path.with_file_name(format!("{stem}.raw.csv"))
}

fn convergence_csv(report: &ConvergenceReport, raw: bool) -> String {
    let mut s = String::from("N,error,order\n");
    for r in &report.rows {
        let (err, ord) = if raw {
            (format!("{:e}", r.error), r.order.map(|o| format!("{o}")).unwrap_or_default())
        } else {
            (sci3(r.error), r.order.map(|o| format!("{o:.3}")).unwrap_or_default())
        };
        let _ = writeln!(s, "{},{err},{ord}", r.n);
    }
    s
}

fn cmd_run(common: Common, grids: String) -> Result<(), Failure> {
    let example = parse_example(&common.example)?;
    let ns = parse_grids(&grids)?;
    let n = *ns.last().expect("non-empty");
    let sch = scheme(common.k, common.cfl, common.beta, common.quadrature)?;
    let sol = example.solve(n, &sch).map_err(|e| runtime(e.to_string()))?;
    let mut out = String::from(if sol.dim == 1 { "x,u\n" } else { "x,y,u\n" });
    for (c, u) in sol.coords.iter().zip(&sol.numeric) {
        if sol.dim == 1 {
            let _ = writeln!(out, "{},{u}", c[0]);
        } else {
            let _ = writeln!(out, "{},{},{u}", c[0], c[1]);
        }
    }
    match &common.out {
        Some(p) => write_file(p, &out)?,
        None => print!("{out}"),
    }
    eprintln!("example {example}, N = {n}, k = {}, CFL = {}: max error {} at T = {}", sch.k, sch.cfl, sci3(sol.max_error()), sol.t);
    Ok(())
}

fn cmd_converge(common: Common, grids: String) -> Result<(), Failure> {
    let example = parse_example(&common.example)?;
    let ns = parse_grids(&grids)?;
    let sch = scheme(common.k, common.cfl, common.beta, common.quadrature)?;
    let report = run_convergence(example, &sch, &ns).map_err(|e| runtime(e.to_string()))?;
    let path = common
        .out
        .unwrap_or_else(|| PathBuf::from(format!("converge_{}_k{}_cfl{}.csv", example.id(), sch.k, sch.cfl)));
    let csv = convergence_csv(&report, false);
    write_file(&path, &csv)?;
    write_file(&raw_sibling(&path), &convergence_csv(&report, true))?;
    print!("{csv}");
    eprintln!("wrote {}", path.display());
    Ok(())
}

fn cmd_table(id: String, beta: Option<f64>, quadrature: Quadrature, out: Option<PathBuf>, full: bool) -> Result<(), Failure> {
    let spec = TableSpec::find(&id).ok_or_else(|| usage(format!("unknown table '{id}'; valid ids: {}", TableSpec::valid_ids())))?;
    let full = full || std::env::var("KERNELOPS_FULL_2D").map_or(false, |v| v != "0");
    let ns = spec.grids(full);
    let mut jobs = Vec::new();
    for &cfl in spec.cfls {
        for k in 1..=3 {
            jobs.push(scheme(k, cfl, beta, quadrature)?);
        }
    }
    use rayon::prelude::*;
    let reports: Vec<ConvergenceReport> = jobs
        .par_iter()
        .map(|s| run_convergence(spec.example, s, &ns))
        .collect::<Result<_, _>>()
        .map_err(|e| runtime(e.to_string()))?;

    let mut text = String::new();
    let _ = writeln!(text, "{} ({}, example {})", spec.id, spec.title, spec.example);
    let _ = writeln!(text, "PASS/FAIL: order >= k - 0.5, judged from the third grid on\n");
    let mut csv = String::from("cfl,N,k,error,order,mark\n");
    let mut any_fail = false;
    for (b, &cfl) in spec.cfls.iter().enumerate() {
        let block = &reports[3 * b..3 * b + 3];
        let _ = writeln!(text, "CFL = {cfl}");
        let _ = write!(text, "{:>9}", "N");
        for k in 1..=3 {
            let _ = write!(text, " | {:>9} {:>6} {:4}", format!("k={k} err"), "order", "");
        }
        text.push('\n');
        for (row, &n) in ns.iter().enumerate() {
            let label = if spec.example.dim() == 2 { format!("{n}x{n}") } else { n.to_string() };
            let _ = write!(text, "{label:>9}");
            for r in block {
                let cell = &r.rows[row];
                let verdict = spec.judge(r.k, row, cell.order);
                let mark = match verdict {
                    Some(true) => "PASS",
                    Some(false) => {
                        any_fail = true;
                        "FAIL"
                    }
                    None => "",
                };
                let ord = cell.order.map(|o| format!("{o:.3}")).unwrap_or_else(|| "--".into());
                let _ = write!(text, " | {:>9} {:>6} {:4}", sci3(cell.error), ord, mark);
                let _ = writeln!(
                    csv,
                    "{cfl},{n},{},{},{},{mark}",
                    r.k,
                    sci3(cell.error),
                    cell.order.map(|o| format!("{o:.3}")).unwrap_or_default()
                );
            }
            text.push('\n');
        }
        text.push('\n');
    }
    print!("{text}");
    let path = out.unwrap_or_else(|| PathBuf::from(format!("table_{}.csv", spec.id)));
    write_file(&path, &csv)?;
    eprintln!("wrote {}{}", path.display(), if any_fail { " (some cells FAIL)" } else { "" });
    Ok(())
}

fn cmd_selftest(inject_fault: bool) -> Result<(), Failure> {
    let results = run_all(&SelftestOptions { corrupt_coefficients: inject_fault });
    let mut failed = 0;
    for r in &results {
        println!("{} {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.name, r.detail);
        if !r.passed {
            failed += 1;
        }
    }
    println!("{} suites, {failed} failed", results.len());
    if failed > 0 {
        Err(Failure(1, format!("{failed} suite(s) failed")))
    } else {
        Ok(())
    }
}

fn configure_threads() -> Result<(), Failure> {
    if let Ok(v) = std::env::var("KERNELOPS_THREADS") {
        let n: usize = v.trim().parse().map_err(|_| usage(format!("KERNELOPS_THREADS must be a positive integer, got '{v}'")))?;
        if n == 0 {
            return Err(usage("KERNELOPS_THREADS must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| runtime(e.to_string()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = configure_threads().and_then(|_| match cli.command {
        Command::Run { common, grids } => cmd_run(common, grids),
        Command::Converge { common, grids } => cmd_converge(common, grids),
        Command::Table { id, beta, quadrature, out, full } => cmd_table(id, beta, quadrature, out, full),
        Command::Selftest { inject_fault } => cmd_selftest(inject_fault),
    });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sci_format() {
        assert_eq!(sci3(2.8812e-5), "2.88e-05");
        assert_eq!(sci3(1.0), "1.00e+00");
        assert_eq!(sci3(123456.0), "1.23e+05");
    }

    #[test]
    fn raw_path() {
        assert_eq!(raw_sibling(Path::new("out/a.csv")), PathBuf::from("out/a.raw.csv"));
    }
}
