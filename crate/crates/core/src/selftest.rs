//! Invariant suites runnable outside the test harness (`kernelops selftest`).
//!
//! Every suite checks the library against an independent reference: Gauss
//! quadrature for integrals, closed forms for coefficient tables and
//! analytic derivatives for the refinement slopes.

use std::f64::consts::PI;

use crate::convolution::LineKernel;
use crate::grid::Grid1D;
use crate::operators::{
    apply_d0, apply_dl, dirichlet_zero, first_derivative, neumann_zero, reconstruction_ends, second_derivative,
    BoundaryJet, CoeffTable, FirstBc, Parity, SecondBc, Side, ZeroClosure,
};
use crate::quadrature::{eno_extrapolation_rows, EnoStencil, LineQuadrature, QuadratureMode};
use crate::timestep::{ssp_step, RkScheme, Semidiscrete};

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Test hooks.
#[derive(Debug, Clone, Default)]
pub struct SelftestOptions {
    /// Corrupts one correction coefficient before the suites run.
    pub corrupt_coefficients: bool,
}

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    (1..=n)
        .map(|i| {
            let mut x = (PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
            let mut dp = 1.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            (x, 2.0 / ((1.0 - x * x) * dp * dp))
        })
        .collect()
}

/// Composite Gauss-Legendre integral of `f` over `[a, b]`.
pub fn reference_integral(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let rule = gauss_legendre(20);
    let panels = 8;
    let h = (b - a) / panels as f64;
    (0..panels)
        .map(|p| {
            let (lo, hi) = (a + p as f64 * h, a + (p + 1) as f64 * h);
            let (mid, half) = (0.5 * (lo + hi), 0.5 * (hi - lo));
            rule.iter().map(|&(x, w)| w * half * f(mid + half * x)).sum::<f64>()
        })
        .sum()
}

fn result(name: &'static str, failures: Vec<String>, summary: String) -> SuiteResult {
    SuiteResult { name, passed: failures.is_empty(), detail: failures.first().cloned().unwrap_or(summary) }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

fn quadrature_exactness() -> SuiteResult {
    let mut fails = Vec::new();
    let mut worst: f64 = 0.0;
    let alpha = 7.0;
    let cases = [
        ("uniform", Grid1D::uniform(0.0, 1.0, 12).unwrap(), 5),
        ("half-cell", Grid1D::half_cell(0.0, 1.0, 12).unwrap(), 3),
        ("short", Grid1D::from_nodes(vec![0.0, 0.1, 0.35, 0.6, 0.8]).unwrap(), 4),
    ];
    for (label, g, degree) in cases {
        let q = LineQuadrature::new(&g, alpha, QuadratureMode::Linear, EnoStencil::Center).unwrap();
        let x = g.nodes();
        for m in 0..=degree {
            let f = move |s: f64| (s - 0.3).powi(m);
            let v: Vec<f64> = x.iter().map(|&s| f(s)).collect();
            let (jl, jr) = q.integrals(&v);
            for c in 0..g.cells() {
                let el = reference_integral(&|s| alpha * (-alpha * (s - x[c])).exp() * f(s), x[c], x[c + 1]);
                let er = reference_integral(&|s| alpha * (-alpha * (x[c + 1] - s)).exp() * f(s), x[c], x[c + 1]);
                let e = rel(jl[c], el).max(rel(jr[c], er));
                worst = worst.max(e);
                if e > 1e-12 {
                    fails.push(format!("{label} grid, degree {m}, cell {c}: error {e:.2e}"));
                }
            }
        }
    }
    result("quadrature exactness", fails, format!("max error {worst:.2e}"))
}

fn sweep_vs_direct() -> SuiteResult {
    let mut fails = Vec::new();
    let mut worst: f64 = 0.0;
    for n in [8usize, 16, 32] {
        let g = Grid1D::half_cell(-0.4, 1.1, n).unwrap();
        let alpha = 5.0;
        let ker = LineKernel::new(g.clone(), alpha, QuadratureMode::Linear).unwrap();
        let f = |s: f64| 1.0 + s - 2.0 * s * s + 0.7 * s * s * s;
        let v: Vec<f64> = g.nodes().iter().map(|&s| f(s)).collect();
        let sweep = ker.sweep(&v);
        let (a, b) = (g.a(), g.b());
        for (i, &x) in g.nodes().iter().enumerate() {
            let il = if x < b { reference_integral(&|s| alpha * (-alpha * (s - x)).exp() * f(s), x, b) } else { 0.0 };
            let ir = if x > a { reference_integral(&|s| alpha * (-alpha * (x - s)).exp() * f(s), a, x) } else { 0.0 };
            let e = rel(sweep.il[i], il).max(rel(sweep.ir[i], ir));
            worst = worst.max(e);
            if e > 1e-12 {
                fails.push(format!("N = {n}, node {i}: error {e:.2e}"));
            }
        }
    }
    result("sweep vs direct quadrature", fails, format!("max error {worst:.2e}"))
}

fn coefficient_closed_form(table: &CoeffTable) -> SuiteResult {
    let mut fails = Vec::new();
    let k = table.k();
    for p in 1..=k {
        for m in p..=k {
            let want = CoeffTable::closed_form(p, m);
            if table.raw(p, m) != want {
                fails.push(format!("c({p}, {m}) = {} but closed form gives {want}", table.raw(p, m)));
            }
        }
    }
    result("coefficient closed form", fails, format!("{k} x {k} table matches"))
}

fn boundary_reconstruction() -> SuiteResult {
    let mut fails = Vec::new();
    let mut worst: f64 = 0.0;
    for i in 0..20 {
        let s = i as f64 / 19.0;
        let (i0a, i0b, alpha) = (0.3 - s, 0.9 * s - 0.2, 2.0 + 30.0 * s);
        let mu = (-alpha * 0.8f64).exp();
        let (ta, tb) = (1.0 + s, -0.5 * s);
        let (a0, b0) = dirichlet_zero(ta, tb, i0a, i0b, mu).unwrap();
        let (ra, rb, _, _) = reconstruction_ends(i0a, i0b, a0, b0, alpha, mu);
        let (a1, b1) = neumann_zero(ta, tb, i0a, i0b, alpha, mu).unwrap();
        let (_, _, sa, sb) = reconstruction_ends(i0a, i0b, a1, b1, alpha, mu);
        let e = rel(ra, ta).max(rel(rb, tb)).max(rel(sa, ta)).max(rel(sb, tb));
        worst = worst.max(e);
        if e > 1e-12 {
            fails.push(format!("case {i}: error {e:.2e}"));
        }
    }
    result("boundary reconstruction", fails, format!("max error {worst:.2e}"))
}

fn sin_jet(parity: Parity, x: f64) -> BoundaryJet {
    BoundaryJet::from_fn(parity, 7, |m| match m % 4 {
        0 => x.sin(),
        1 => x.cos(),
        2 => -x.sin(),
        _ => -x.cos(),
    })
}

/// Slope of `err(alpha)` between `alpha` and `2 alpha`, in powers of `1/alpha`.
fn slope(err: impl Fn(f64) -> f64, alpha: f64) -> f64 {
    (err(alpha) / err(2.0 * alpha)).log2()
}

fn max_abs(a: &[f64]) -> f64 {
    a.iter().fold(0.0, |m, v| m.max(v.abs()))
}

fn refinement_setup(alpha: f64) -> (Grid1D, LineKernel, Vec<f64>) {
    let g = Grid1D::uniform(0.2, 1.3, 2000).unwrap();
    let ker = LineKernel::new(g.clone(), alpha, QuadratureMode::Linear).unwrap();
    let v = g.nodes().iter().map(|x| x.sin()).collect();
    (g, ker, v)
}

fn lemma_slopes() -> SuiteResult {
    let mut fails = Vec::new();
    let dl = |alpha: f64| {
        let (g, ker, v) = refinement_setup(alpha);
        let b = g.b();
        let d = apply_dl(&ker, &v, (b.sin(), b.cos()));
        let r: Vec<f64> = g.nodes().iter().zip(&d).map(|(x, d)| d + x.cos() / alpha).collect();
        max_abs(&r)
    };
    let d0 = |alpha: f64| {
        let (g, ker, v) = refinement_setup(alpha);
        let jet = |x: f64| [x.sin(), x.cos(), -x.sin(), -x.cos()];
        let d = apply_d0(&ker, &v, ZeroClosure::Jet { at_a: jet(g.a()), at_b: jet(g.b()) }).unwrap();
        let r: Vec<f64> = g.nodes().iter().zip(&d).map(|(x, d)| d - x.sin() / (alpha * alpha)).collect();
        max_abs(&r)
    };
    let (s1, s2) = (slope(dl, 20.0), slope(d0, 10.0));
    if (s1 - 2.0).abs() > 0.2 {
        fails.push(format!("one-sided residual slope {s1:.3}, expected 2"));
    }
    if (s2 - 4.0).abs() > 0.3 {
        fails.push(format!("centred residual slope {s2:.3}, expected 4"));
    }
    result("single-operator residual slopes", fails, format!("slopes {s1:.3} and {s2:.3}"))
}

fn partial_sum_slopes(table: &CoeffTable) -> SuiteResult {
    let mut fails = Vec::new();
    let mut seen = Vec::new();
    for k in 1..=3usize {
        let mut coeffs = CoeffTable::new(k);
        for p in 1..=k {
            for m in p..=k {
                if p <= table.k() && m <= table.k() {
                    coeffs.set(p, m, table.raw(p, m));
                }
            }
        }
        let first = |alpha: f64| {
            let (g, ker, v) = refinement_setup(alpha);
            let jet = sin_jet(Parity::Full, g.a());
            let d = first_derivative(&ker, &v, k, Side::R, FirstBc::Jet(&jet), &coeffs).unwrap();
            let r: Vec<f64> = g.nodes().iter().zip(&d).map(|(x, d)| d - x.cos()).collect();
            max_abs(&r)
        };
        let second = |alpha: f64| {
            let (g, ker, v) = refinement_setup(alpha);
            let (ja, jb) = (sin_jet(Parity::Even, g.a()), sin_jet(Parity::Even, g.b()));
            let d = second_derivative(&ker, &v, k, SecondBc::Dirichlet { a: &ja, b: &jb }, &coeffs).unwrap();
            let r: Vec<f64> = g.nodes().iter().zip(&d).map(|(x, d)| d + x.sin()).collect();
            max_abs(&r)
        };
        let s1 = slope(first, 20.0);
        let s2 = slope(second, 16.0);
        seen.push(format!("k={k}: {s1:.2}/{s2:.2}"));
        if (s1 - k as f64).abs() > 0.3 {
            fails.push(format!("first-derivative sum k = {k}: slope {s1:.3}, expected {k}"));
        }
        if (s2 - 2.0 * k as f64).abs() > 0.4 {
            fails.push(format!("second-derivative sum k = {k}: slope {s2:.3}, expected {}", 2 * k));
        }
    }
    result("partial-sum refinement slopes", fails, seen.join(", "))
}

fn eno_unit_fraction() -> SuiteResult {
    let mut fails = Vec::new();
    let (r1, r2) = eno_extrapolation_rows(1.0).unwrap();
    let want1 = [5.0, -10.0, 10.0, -5.0, 1.0];
    let want2 = [15.0, -40.0, 45.0, -24.0, 5.0];
    for j in 0..5 {
        if (r1[j] - want1[j]).abs() > 1e-12 || (r2[j] - want2[j]).abs() > 1e-12 {
            fails.push(format!("ghost row entry {j}: ({}, {}) vs ({}, {})", r1[j], r2[j], want1[j], want2[j]));
        }
    }
    result("ENO unit-fraction extrapolation", fails, "rows match".into())
}

struct Growth;

impl Semidiscrete for Growth {
    fn set_dt(&mut self, _dt: f64) -> crate::Result<()> {
        Ok(())
    }
    fn rhs(&self, _t: f64, u: &[f64]) -> crate::Result<Vec<f64>> {
        Ok(u.to_vec())
    }
}

fn rk_taylor() -> SuiteResult {
    let mut fails = Vec::new();
    let dt: f64 = 0.1;
    for p in 1..=3usize {
        let u = ssp_step(RkScheme::new(p).unwrap(), &Growth, &[1.0], 0.0, dt).unwrap()[0];
        let mut want = 0.0;
        let mut term = 1.0;
        for i in 0..=p {
            want += term;
            term *= dt / (i + 1) as f64;
        }
        if (u - want).abs() > 1e-14 {
            fails.push(format!("order {p}: amplification {u} vs {want}"));
        }
    }
    result("SSP-RK Taylor amplification", fails, "orders 1-3 match".into())
}

/// Runs every suite in a fixed order.
pub fn run_all(options: &SelftestOptions) -> Vec<SuiteResult> {
    let mut table = CoeffTable::new(10);
    if options.corrupt_coefficients {
        table.set(2, 3, table.raw(2, 3) + 1);
    }
    vec![
        quadrature_exactness(),
        sweep_vs_direct(),
        coefficient_closed_form(&table),
        boundary_reconstruction(),
        lemma_slopes(),
        partial_sum_slopes(&table),
        eno_unit_fraction(),
        rk_taylor(),
    ]
}
