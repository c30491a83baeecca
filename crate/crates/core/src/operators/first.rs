use super::closure::{general_l, general_r, periodic_l, periodic_r};
use super::{BoundaryJet, CoeffTable, Side};
use crate::convolution::LineKernel;
use crate::{Error, Result};

/// Boundary information for the one-sided operators.
#[derive(Debug, Clone, Copy)]
pub enum FirstBc<'a> {
    Periodic,
    /// Derivatives of the field at the closure end (`b` for `L`, `a` for `R`).
    Jet(&'a BoundaryJet),
}

/// `D_L[w] = w - I_L[w] - B_L e_b` with `B_L` from the pair `(w(b), w_x(b))`.
pub fn apply_dl(kernel: &LineKernel, w: &[f64], pair: (f64, f64)) -> Vec<f64> {
    let s = kernel.sweep(w);
    let bl = general_l(pair.0, pair.1, kernel.alpha());
    residual(w, &s.il, bl, kernel.e_b())
}

/// `D_R[w] = w - I_R[w] - A_R e_a` with `A_R` from the pair `(w(a), w_x(a))`.
pub fn apply_dr(kernel: &LineKernel, w: &[f64], pair: (f64, f64)) -> Vec<f64> {
    let s = kernel.sweep(w);
    let ar = general_r(pair.0, pair.1, kernel.alpha());
    residual(w, &s.ir, ar, kernel.e_a())
}

fn residual(w: &[f64], conv: &[f64], constant: f64, e: &[f64]) -> Vec<f64> {
    w.iter().zip(conv).zip(e).map(|((w, i), e)| w - i - constant * e).collect()
}

/// Corrected partial sum of order `k` approximating `phi_x`: the upwind-left
/// (`Side::L`) or upwind-right (`Side::R`) variant.
///
/// Stage `p` applies the one-sided operator to the previous corrected stage;
/// every stage except the last is corrected by boundary terms so that the
/// stages telescope to `-(s/a) phi_x` up to `O(a^-(k+1))`.
pub fn first_derivative(
    kernel: &LineKernel,
    phi: &[f64],
    k: usize,
    side: Side,
    bc: FirstBc,
    coeffs: &CoeffTable,
) -> Result<Vec<f64>> {
    if k == 0 || k > coeffs.k() {
        return Err(Error::Config(format!("partial-sum order {k} outside 1..={}", coeffs.k())));
    }
    let alpha = kernel.alpha();
    let n = phi.len() - 1;
    let (s, end, e) = match side {
        Side::L => (1.0, n, kernel.e_b()),
        Side::R => (-1.0, 0, kernel.e_a()),
    };
    let jet = match bc {
        FirstBc::Jet(j) => {
            if let Some(m) = (1..=k).find(|&m| !j.has(m)) {
                return Err(Error::Config(format!("boundary jet lacks order {m}")));
            }
            Some(j)
        }
        FirstBc::Periodic => None,
    };
    let mut total = vec![0.0; phi.len()];
    let mut w = phi.to_vec();
    let mut deriv = jet.map_or(0.0, |j| j.or_zero(1));
    for p in 1..=k {
        let sw = kernel.sweep(&w);
        let (conv, constant) = match (side, jet) {
            (Side::L, Some(_)) => (&sw.il, general_l(w[end], deriv, alpha)),
            (Side::R, Some(_)) => (&sw.ir, general_r(w[end], deriv, alpha)),
            (Side::L, None) => (&sw.il, periodic_l(sw.il[0], kernel.mu())?),
            (Side::R, None) => (&sw.ir, periodic_r(sw.ir[n], kernel.mu())?),
        };
        let mut d = residual(&w, conv, constant, e);
        if let (Some(j), true) = (jet, p < k) {
            let mut corr = 0.0;
            deriv = 0.0;
            for m in p + 1..=k {
                let c = coeffs.get(p, m - 1);
                let g = (s / alpha).powi(m as i32 - 1) * j.or_zero(m);
                corr += c * (s / alpha) * g;
                deriv += c * g;
            }
            for (di, ei) in d.iter_mut().zip(e) {
                *di += corr * ei;
            }
        }
        for (t, di) in total.iter_mut().zip(&d) {
            *t += di;
        }
        w = d;
    }
    let scale = -s * alpha;
    Ok(total.into_iter().map(|t| scale * t).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid1D;
    use crate::operators::Parity;
    use crate::quadrature::QuadratureMode;

    fn error(k: usize, side: Side, alpha: f64) -> f64 {
        let g = Grid1D::uniform(0.2, 1.3, 2000).unwrap();
        let ker = LineKernel::new(g.clone(), alpha, QuadratureMode::Linear).unwrap();
        let phi: Vec<f64> = g.nodes().iter().map(|x| x.sin()).collect();
        let end = match side {
            Side::L => g.b(),
            Side::R => g.a(),
        };
        let jet = BoundaryJet::from_fn(Parity::Full, 7, |m| match m % 4 {
            0 => end.sin(),
            1 => end.cos(),
            2 => -end.sin(),
            _ => -end.cos(),
        });
        let d = first_derivative(&ker, &phi, k, side, FirstBc::Jet(&jet), &CoeffTable::new(k)).unwrap();
        g.nodes().iter().zip(&d).map(|(x, d)| (d - x.cos()).abs()).fold(0.0, f64::max)
    }

    #[test]
    fn refinement_in_alpha_gives_order_k() {
        for side in [Side::L, Side::R] {
            for k in 1..=3 {
                let (e1, e2) = (error(k, side, 20.0), error(k, side, 40.0));
                let slope = (e1 / e2).log2();
                assert!((slope - k as f64).abs() < 0.3, "k={k} {side:?} slope {slope}");
            }
        }
    }

    #[test]
    fn periodic_sum_differentiates_trig() {
        let n = 200;
        let len = 2.0 * std::f64::consts::PI;
        let g = Grid1D::uniform(0.0, len, n).unwrap();
        let ker = LineKernel::new(g.clone(), 30.0, QuadratureMode::Linear).unwrap();
        let phi: Vec<f64> = g.nodes().iter().map(|x| x.sin()).collect();
        let d = first_derivative(&ker, &phi, 3, Side::R, FirstBc::Periodic, &CoeffTable::new(3)).unwrap();
        let err = g.nodes().iter().zip(&d).map(|(x, d)| (d - x.cos()).abs()).fold(0.0, f64::max);
        assert!(err < 1e-3, "err {err}");
    }
}
