//! Boundary jets from boundary data by trading time derivatives for space
//! derivatives through the PDE (inverse Lax-Wendroff), plus the exact-jet
//! fallback used where no data-only rule is available.

use super::exact::Exact;
use crate::operators::{BoundaryJet, Parity};

/// Highest jet order any partial sum of order `k` reads.
pub fn jet_order(k: usize) -> usize {
    2 * k + 1
}

/// `u_t = q u_xx` with Dirichlet data: `d^(2m) u = g^(m)(t) / q^m`.
/// `g(m)` returns the `m`-th time derivative of the boundary value.
pub fn heat_dirichlet(g: impl Fn(usize) -> f64, q: f64, k: usize) -> BoundaryJet {
    BoundaryJet::from_fn(Parity::Even, 2 * k, |n| g(n / 2) / q.powi((n / 2) as i32))
}

/// `u_t = q u_xx` with Neumann data: `d^(2m+1) u = h^(m)(t) / q^m`.
pub fn heat_neumann(h: impl Fn(usize) -> f64, q: f64, k: usize) -> BoundaryJet {
    BoundaryJet::from_fn(Parity::Odd, 2 * k + 1, |n| h(n / 2) / q.powi((n / 2) as i32))
}

/// `u_tt = q u_xx` with Dirichlet data: `d^(2m) u = g^(2m)(t) / q^m`.
pub fn wave_dirichlet(g: impl Fn(usize) -> f64, q: f64, k: usize) -> BoundaryJet {
    BoundaryJet::from_fn(Parity::Even, 2 * k, |n| g(n) / q.powi((n / 2) as i32))
}

/// `u_t + c u_x = 0` with inflow data: `d^m u = (-1/c)^m g^(m)(t)`.
pub fn advection_inflow(g: impl Fn(usize) -> f64, c: f64, k: usize) -> BoundaryJet {
    BoundaryJet::from_fn(Parity::Full, k, |m| (-1.0 / c).powi(m as i32) * g(m))
}

/// Derivatives along x (`along_x`) or y of the exact solution at `(x, y, t)`.
pub fn exact_jet(exact: &dyn Exact, parity: Parity, max_order: usize, along_x: bool, x: f64, y: f64, t: f64) -> BoundaryJet {
    BoundaryJet::from_fn(parity, max_order, |m| {
        if along_x {
            exact.d(m, 0, 0, x, y, t)
        } else {
            exact.d(0, m, 0, x, y, t)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::super::exact::{Factor, Shape, SumOfProducts};
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn heat_rules_match_exact_derivatives() {
        // sin(pi x) e^{-pi^2 t} + e^{x + t}, q = 1
        let u = SumOfProducts::new()
            .term(1.0, &[Factor::new(Shape::Sin, [PI, 0.0, 0.0], 0.0), Factor::new(Shape::Exp, [0.0, 0.0, -PI * PI], 0.0)])
            .term(1.0, &[Factor::new(Shape::Exp, [1.0, 0.0, 1.0], 0.0)]);
        let t = 0.2;
        for x in [0.0, 1.0] {
            let jd = heat_dirichlet(|m| u.d(0, 0, m, x, 0.0, t), 1.0, 3);
            let jn = heat_neumann(|m| u.d(1, 0, m, x, 0.0, t), 1.0, 3);
            for n in 1..=7 {
                let want = u.d(n, 0, 0, x, 0.0, t);
                let got = if n % 2 == 0 { jd.get(n) } else { jn.get(n) }.unwrap();
                assert!((got - want).abs() < 1e-9 * want.abs().max(1.0), "x={x} n={n}");
            }
        }
        assert!((heat_dirichlet(|m| u.d(0, 0, m, 0.0, 0.0, t), 1.0, 1).get(2).unwrap() - (t.exp())).abs() < 1e-12);
    }

    #[test]
    fn wave_rule() {
        // x - sin(pi x) sin(pi t), q = 1
        let u = SumOfProducts::new()
            .term(1.0, &[Factor::new(Shape::Affine, [1.0, 0.0, 0.0], 0.0)])
            .term(-1.0, &[Factor::new(Shape::Sin, [PI, 0.0, 0.0], 0.0), Factor::new(Shape::Sin, [0.0, 0.0, PI], 0.0)]);
        let j = wave_dirichlet(|m| u.d(0, 0, m, 0.5, 0.0, 0.3), 1.0, 3);
        for n in [2, 4, 6] {
            let want = u.d(n, 0, 0, 0.5, 0.0, 0.3);
            assert!((j.get(n).unwrap() - want).abs() < 1e-9 * want.abs().max(1.0));
        }
    }

    #[test]
    fn advection_rule() {
        let u = SumOfProducts::new().term(1.0, &[Factor::new(Shape::Sin, [1.0, 0.0, -2.0], 0.0)]);
        let j = advection_inflow(|m| u.d(0, 0, m, -1.0, 0.0, 0.4), 2.0, 3);
        for m in 1..=3 {
            assert!((j.get(m).unwrap() - u.d(m, 0, 0, -1.0, 0.0, 0.4)).abs() < 1e-12);
        }
    }
}
