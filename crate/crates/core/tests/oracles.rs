//! Library results checked against closed forms computed here, independent
//! of the library's own reference routines.

use kernelops::convolution::LineKernel;
use kernelops::grid::Grid1D;
use kernelops::operators::{first_derivative, second_derivative, BoundaryJet, CoeffTable, FirstBc, Parity, SecondBc, Side};
use kernelops::problems::bessel::{j0, j0_zero};
use kernelops::problems::examples::ExampleId;
use kernelops::problems::Scheme;
use kernelops::quadrature::{eno_extrapolation_rows, exp_moments, QuadratureMode};

const G: f64 = 0.7;

fn expo(x: f64) -> f64 {
    (G * x).exp()
}

/// `a int_x^b exp(-a (s - x)) exp(g s) ds`.
fn il_exp(a: f64, x: f64, b: f64) -> f64 {
    a * ((G - a) * b + a * x).exp() / (G - a) - a * (G * x).exp() / (G - a)
}

/// `a int_a^x exp(-a (x - s)) exp(g s) ds`.
fn ir_exp(a: f64, lo: f64, x: f64) -> f64 {
    a * ((G * x).exp() - ((G + a) * lo - a * x).exp()) / (G + a)
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

#[test]
fn sweeps_match_closed_form_integrals() {
    for grid in [Grid1D::uniform(-0.3, 1.1, 160).unwrap(), Grid1D::half_cell(-0.3, 1.1, 160).unwrap()] {
        let alpha = 6.0;
        let ker = LineKernel::new(grid.clone(), alpha, QuadratureMode::Linear).unwrap();
        let v: Vec<f64> = grid.nodes().iter().map(|&x| expo(x)).collect();
        let s = ker.sweep(&v);
        let want_l: Vec<f64> = grid.nodes().iter().map(|&x| il_exp(alpha, x, grid.b())).collect();
        let want_r: Vec<f64> = grid.nodes().iter().map(|&x| ir_exp(alpha, grid.a(), x)).collect();
        assert!(max_diff(&s.il, &want_l) < 1e-10, "I_L off by {}", max_diff(&s.il, &want_l));
        assert!(max_diff(&s.ir, &want_r) < 1e-10, "I_R off by {}", max_diff(&s.ir, &want_r));
    }
}

#[test]
fn constants_convolve_exactly() {
    let grid = Grid1D::half_cell(0.0, 2.0, 37).unwrap();
    let alpha = 3.5;
    let ker = LineKernel::new(grid.clone(), alpha, QuadratureMode::Linear).unwrap();
    let s = ker.sweep(&vec![1.0; grid.len()]);
    for (i, &x) in grid.nodes().iter().enumerate() {
        assert!((s.il[i] - (1.0 - (-alpha * (2.0 - x)).exp())).abs() < 1e-13);
        assert!((s.ir[i] - (1.0 - (-alpha * x).exp())).abs() < 1e-13);
    }
}

#[test]
fn moments_match_integration_by_parts() {
    // nu int_0^1 e^{-nu t} t^m dt by repeated integration by parts.
    for nu in [0.01, 0.3, 2.0, 7.5, 40.0] {
        let mu = exp_moments(nu, 4).unwrap();
        let e = (-nu).exp();
        let mut want = vec![1.0 - e];
        for m in 1..=4 {
            let prev = want[m - 1];
            want.push(-e + m as f64 / nu * prev);
        }
        if nu >= 1.0 {
            assert!(max_diff(&mu, &want) < 1e-12, "nu {nu}");
        } else {
            // Upward recursion is unstable for small nu; check against the Taylor series instead.
            for (m, &got) in mu.iter().enumerate() {
                let mut term = 1.0;
                let mut series = 0.0;
                for n in 0..30 {
                    series += term / (m + n + 1) as f64;
                    term *= -nu / (n + 1) as f64;
                }
                assert!((got - nu * series).abs() < 1e-12, "nu {nu} m {m}");
            }
        }
    }
}

fn exp_jet(parity: Parity, x: f64, max: usize) -> BoundaryJet {
    BoundaryJet::from_fn(parity, max, |m| G.powi(m as i32) * expo(x))
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

#[test]
fn coefficient_table_is_signed_binomial() {
    let t = CoeffTable::new(10);
    for m in 1..=10 {
        for p in 1..=m {
            let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
            assert_eq!(t.get(p, m), sign * binomial(m - 1, p - 1), "c({p},{m})");
        }
    }
}

fn first_error(k: usize, side: Side, alpha: f64) -> f64 {
    let grid = Grid1D::uniform(0.1, 1.4, 2400).unwrap();
    let ker = LineKernel::new(grid.clone(), alpha, QuadratureMode::Linear).unwrap();
    let phi: Vec<f64> = grid.nodes().iter().map(|&x| expo(x)).collect();
    let end = if side == Side::L { grid.b() } else { grid.a() };
    let jet = exp_jet(Parity::Full, end, 2 * k + 1);
    let d = first_derivative(&ker, &phi, k, side, FirstBc::Jet(&jet), &CoeffTable::new(k)).unwrap();
    grid.nodes().iter().zip(&d).map(|(&x, d)| (d - G * expo(x)).abs()).fold(0.0, f64::max)
}

#[test]
fn first_derivative_converges_at_order_k_in_alpha() {
    for k in 1..=3 {
        for side in [Side::L, Side::R] {
            let slope = (first_error(k, side, 12.0) / first_error(k, side, 24.0)).log2();
            assert!((slope - k as f64).abs() < 0.3, "k={k} {side:?} slope {slope}");
        }
    }
}

fn second_error(k: usize, parity: Parity, alpha: f64) -> f64 {
    let grid = Grid1D::uniform(0.1, 1.4, 2400).unwrap();
    let ker = LineKernel::new(grid.clone(), alpha, QuadratureMode::Linear).unwrap();
    let phi: Vec<f64> = grid.nodes().iter().map(|&x| expo(x)).collect();
    let (ja, jb) = (exp_jet(parity, grid.a(), 2 * k + 1), exp_jet(parity, grid.b(), 2 * k + 1));
    let bc = match parity {
        Parity::Full => SecondBc::Full { a: &ja, b: &jb },
        Parity::Even => SecondBc::Dirichlet { a: &ja, b: &jb },
        Parity::Odd => SecondBc::Neumann { a: &ja, b: &jb },
    };
    let d = second_derivative(&ker, &phi, k, bc, &CoeffTable::new(k)).unwrap();
    grid.nodes().iter().zip(&d).map(|(&x, d)| (d - G * G * expo(x)).abs()).fold(0.0, f64::max)
}

#[test]
fn second_derivative_converges_at_order_2k_in_alpha() {
    for k in 1..=3 {
        for parity in [Parity::Full, Parity::Even, Parity::Odd] {
            let slope = (second_error(k, parity, 16.0) / second_error(k, parity, 32.0)).log2();
            assert!((slope - 2.0 * k as f64).abs() < 0.4, "k={k} {parity:?} slope {slope}");
        }
    }
}

#[test]
fn eno_unit_fraction_rows_are_the_rational_extrapolants() {
    let (first, second) = eno_extrapolation_rows(1.0).unwrap();
    let want1 = [5.0, -10.0, 10.0, -5.0, 1.0];
    let want2 = [15.0, -40.0, 45.0, -24.0, 5.0];
    assert!(max_diff(&first, &want1) < 1e-12, "{first:?}");
    assert!(max_diff(&second, &want2) < 1e-12, "{second:?}");
}

#[test]
fn bessel_values_match_tabulated_constants() {
    assert!((j0(1.0) - 0.765_197_686_557_966_6).abs() < 1e-14);
    assert!((j0(5.0) + 0.177_596_771_314_338_3).abs() < 1e-13);
    assert!((j0_zero(1).unwrap() - 2.404_825_557_695_773).abs() < 1e-12);
    assert!((j0_zero(2).unwrap() - 5.520_078_110_286_311).abs() < 1e-12);
}

#[test]
fn periodic_problem_stays_bounded_at_large_cfl() {
    let scheme = Scheme::new(2, 2.0).unwrap();
    let sol = ExampleId::PeriodicAdvection.solve(80, &scheme).unwrap();
    let initial = 1.0;
    let peak = sol.numeric.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    assert!(peak <= 1.1 * initial, "max norm {peak}");
}
