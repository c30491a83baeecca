use super::closure::{dirichlet_zero, jet_zero, neumann_zero, periodic_zero};
use super::{BoundaryJet, CoeffTable};
use crate::convolution::LineKernel;
use crate::{Error, Result};

/// Boundary information for the centred operator.
#[derive(Debug, Clone, Copy)]
pub enum SecondBc<'a> {
    Periodic,
    /// All derivative orders `1..=2k+1` at both ends.
    Full { a: &'a BoundaryJet, b: &'a BoundaryJet },
    /// Even orders `2..=2k` (Dirichlet data); values come from the field.
    Dirichlet { a: &'a BoundaryJet, b: &'a BoundaryJet },
    /// Odd orders `1..=2k+1` (Neumann data).
    Neumann { a: &'a BoundaryJet, b: &'a BoundaryJet },
}

/// How the constants of one `D_0` application are fixed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ZeroClosure {
    /// Taylor jets `[w, w', w'', w''']` at `a` and `b`.
    Jet { at_a: [f64; 4], at_b: [f64; 4] },
    /// Reconstruction values at the ends.
    Dirichlet { t_a: f64, t_b: f64 },
    /// Reconstruction slopes at the ends.
    Neumann { s_a: f64, s_b: f64 },
    Periodic,
}

/// `D_0[w] = w - I_0[w] - A_0 e_a - B_0 e_b`.
pub fn apply_d0(kernel: &LineKernel, w: &[f64], closure: ZeroClosure) -> Result<Vec<f64>> {
    let i0 = kernel.sweep(w).i0();
    d0_from(kernel, w, &i0, closure)
}

fn d0_from(kernel: &LineKernel, w: &[f64], i0: &[f64], closure: ZeroClosure) -> Result<Vec<f64>> {
    let n = w.len() - 1;
    let (alpha, mu) = (kernel.alpha(), kernel.mu());
    let (a0, b0) = match closure {
        ZeroClosure::Jet { at_a, at_b } => jet_zero(at_a, at_b, alpha),
        ZeroClosure::Dirichlet { t_a, t_b } => dirichlet_zero(t_a, t_b, i0[0], i0[n], mu)?,
        ZeroClosure::Neumann { s_a, s_b } => neumann_zero(s_a, s_b, i0[0], i0[n], alpha, mu)?,
        ZeroClosure::Periodic => periodic_zero(i0[0], i0[n], mu)?,
    };
    Ok((0..=n).map(|i| w[i] - i0[i] - a0 * kernel.e_a()[i] - b0 * kernel.e_b()[i]).collect())
}

/// `n`-th derivative at one end of the operand of stage `q + 1`: the field
/// itself for `q = 0`, else the corrected stage `q`, whose expansion is
/// `sum_{m=q}^k c(q, m) a^-2m d^(2m) phi` up to `O(a^-(2k+2))`.
fn operand_derivative(q: usize, n: usize, jet: &BoundaryJet, k: usize, alpha: f64, coeffs: &CoeffTable) -> f64 {
    if q == 0 {
        return jet.or_zero(n);
    }
    (q..=k)
        .filter(|&m| jet.has(2 * m + n))
        .map(|m| coeffs.get(q, m) * alpha.powi(-2 * m as i32) * jet.or_zero(2 * m + n))
        .sum()
}

fn required_orders(bc: &SecondBc, k: usize) -> Vec<usize> {
    match bc {
        SecondBc::Periodic => vec![],
        SecondBc::Full { .. } => (1..=2 * k + 1).collect(),
        SecondBc::Dirichlet { .. } => (1..=k).map(|m| 2 * m).collect(),
        SecondBc::Neumann { .. } => (0..=k).map(|m| 2 * m + 1).collect(),
    }
}

/// Corrected partial sum of order `k` approximating `phi_xx`.
pub fn second_derivative(
    kernel: &LineKernel,
    phi: &[f64],
    k: usize,
    bc: SecondBc,
    coeffs: &CoeffTable,
) -> Result<Vec<f64>> {
    if k == 0 || k > coeffs.k() {
        return Err(Error::Config(format!("partial-sum order {k} outside 1..={}", coeffs.k())));
    }
    let jets = match bc {
        SecondBc::Periodic => None,
        SecondBc::Full { a, b } | SecondBc::Dirichlet { a, b } | SecondBc::Neumann { a, b } => Some((a, b)),
    };
    if let Some((ja, jb)) = jets {
        for m in required_orders(&bc, k) {
            if !ja.has(m) || !jb.has(m) {
                return Err(Error::Config(format!("boundary jets lack order {m}")));
            }
        }
    }
    let alpha = kernel.alpha();
    let mu = kernel.mu();
    let n = phi.len() - 1;
    let det = 1.0 - mu * mu;
    let mut total = vec![0.0; phi.len()];
    let mut w = phi.to_vec();
    for p in 1..=k {
        let q = p - 1;
        let i0 = kernel.sweep(&w).i0();
        let closure = match (bc, jets) {
            (SecondBc::Periodic, _) | (_, None) => ZeroClosure::Periodic,
            (SecondBc::Full { .. }, Some((ja, jb))) => {
                let od = |j: &BoundaryJet, nn| operand_derivative(q, nn, j, k, alpha, coeffs);
                ZeroClosure::Jet {
                    at_a: [w[0], od(ja, 1), od(ja, 2), od(ja, 3)],
                    at_b: [w[n], od(jb, 1), od(jb, 2), od(jb, 3)],
                }
            }
            (SecondBc::Dirichlet { .. }, Some((ja, jb))) => {
                let a2 = alpha.powi(-2);
                ZeroClosure::Dirichlet {
                    t_a: w[0] + a2 * operand_derivative(q, 2, ja, k, alpha, coeffs),
                    t_b: w[n] + a2 * operand_derivative(q, 2, jb, k, alpha, coeffs),
                }
            }
            (SecondBc::Neumann { .. }, Some((ja, jb))) => {
                let a2 = alpha.powi(-2);
                let sl = |j: &BoundaryJet| {
                    operand_derivative(q, 1, j, k, alpha, coeffs) + a2 * operand_derivative(q, 3, j, k, alpha, coeffs)
                };
                ZeroClosure::Neumann { s_a: sl(ja), s_b: sl(jb) }
            }
        };
        let mut d = d0_from(kernel, &w, &i0, closure)?;
        if let (Some((ja, jb)), true) = (jets, p < k) {
            let (mut ca, mut cb) = (0.0, 0.0);
            for m in p + 1..=k {
                let c = coeffs.get(p, m - 1);
                let even = alpha.powi(-2 * m as i32);
                let odd = alpha.powi(-(2 * m as i32) - 1);
                match bc {
                    SecondBc::Full { .. } => {
                        ca += 0.5 * c * (even * ja.or_zero(2 * m) - odd * ja.or_zero(2 * m + 1));
                        cb += 0.5 * c * (even * jb.or_zero(2 * m) + odd * jb.or_zero(2 * m + 1));
                    }
                    SecondBc::Dirichlet { .. } => {
                        let (xa, xb) = (even * ja.or_zero(2 * m), even * jb.or_zero(2 * m));
                        ca += c * (xa - mu * xb) / det;
                        cb += c * (xb - mu * xa) / det;
                    }
                    SecondBc::Neumann { .. } => {
                        let (ya, yb) = (-odd * ja.or_zero(2 * m + 1), odd * jb.or_zero(2 * m + 1));
                        ca += c * (ya + mu * yb) / det;
                        cb += c * (yb + mu * ya) / det;
                    }
                    SecondBc::Periodic => {}
                }
            }
            for i in 0..=n {
                d[i] += ca * kernel.e_a()[i] + cb * kernel.e_b()[i];
            }
        }
        for (t, di) in total.iter_mut().zip(&d) {
            *t += di;
        }
        w = d;
    }
    let scale = -alpha * alpha;
    Ok(total.into_iter().map(|t| scale * t).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid1D;
    use crate::operators::Parity;
    use crate::quadrature::QuadratureMode;

    fn sin_jet(parity: Parity, x: f64) -> BoundaryJet {
        BoundaryJet::from_fn(parity, 7, |m| match m % 4 {
            0 => x.sin(),
            1 => x.cos(),
            2 => -x.sin(),
            _ => -x.cos(),
        })
    }

    fn error(k: usize, parity: Parity, alpha: f64) -> f64 {
        let g = Grid1D::uniform(0.2, 1.3, 2000).unwrap();
        let ker = LineKernel::new(g.clone(), alpha, QuadratureMode::Linear).unwrap();
        let phi: Vec<f64> = g.nodes().iter().map(|x| x.sin()).collect();
        let (ja, jb) = (sin_jet(parity, g.a()), sin_jet(parity, g.b()));
        let bc = match parity {
            Parity::Full => SecondBc::Full { a: &ja, b: &jb },
            Parity::Even => SecondBc::Dirichlet { a: &ja, b: &jb },
            Parity::Odd => SecondBc::Neumann { a: &ja, b: &jb },
        };
        let d = second_derivative(&ker, &phi, k, bc, &CoeffTable::new(k)).unwrap();
        g.nodes().iter().zip(&d).map(|(x, d)| (d + x.sin()).abs()).fold(0.0, f64::max)
    }

    #[test]
    fn refinement_in_alpha_gives_order_2k() {
        for parity in [Parity::Full, Parity::Even, Parity::Odd] {
            for k in 1..=2 {
                let (e1, e2) = (error(k, parity, 10.0), error(k, parity, 20.0));
                let slope = (e1 / e2).log2();
                assert!((slope - 2.0 * k as f64).abs() < 0.4, "k={k} {parity:?} slope {slope}");
            }
        }
    }

    #[test]
    fn missing_jet_orders_are_rejected() {
        let g = Grid1D::uniform(0.0, 1.0, 20).unwrap();
        let ker = LineKernel::new(g, 10.0, QuadratureMode::Linear).unwrap();
        let j = BoundaryJet::from_fn(Parity::Even, 2, |_| 0.0);
        let r = second_derivative(&ker, &[0.0; 21], 2, SecondBc::Dirichlet { a: &j, b: &j }, &CoeffTable::new(2));
        assert!(matches!(r, Err(Error::Config(_))));
    }
}
