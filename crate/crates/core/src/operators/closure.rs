//! Boundary constants of the resolvent reconstructions
//!
//! ```text
//! L_L^-1[w] = I_L[w] + B_L e_b,  L_R^-1[w] = I_R[w] + A_R e_a,
//! L_0^-1[w] = I_0[w] + A_0 e_a + B_0 e_b,
//! ```
//!
//! with `e_a = exp(-a (x - a))`, `e_b = exp(-a (b - x))`, `mu = exp(-a (b - a))`.

use crate::{Error, Result};

const DEGENERATE: f64 = 1e-14;

fn check_mu(mu: f64) -> Result<f64> {
    let det = 1.0 - mu * mu;
    if det.abs() < DEGENERATE {
        Err(Error::Degenerate(det.abs()))
    } else {
        Ok(det)
    }
}

/// `B_L = w(b) + w_x(b) / a`.
pub fn general_l(w_b: f64, dw_b: f64, alpha: f64) -> f64 {
    w_b + dw_b / alpha
}

/// `A_R = w(a) - w_x(a) / a`.
pub fn general_r(w_a: f64, dw_a: f64, alpha: f64) -> f64 {
    w_a - dw_a / alpha
}

/// Centred closure from four-term Taylor jets `[w, w', w'', w''']` at each
/// end: `A_0 = 1/2 sum (-1/a)^p d^p w(a)`, `B_0 = 1/2 sum (1/a)^p d^p w(b)`.
pub fn jet_zero(at_a: [f64; 4], at_b: [f64; 4], alpha: f64) -> (f64, f64) {
    let mut a0 = 0.0;
    let mut b0 = 0.0;
    let mut s = 1.0;
    for p in 0..4 {
        let sa = if p % 2 == 0 { s } else { -s };
        a0 += sa * at_a[p];
        b0 += s * at_b[p];
        s /= alpha;
    }
    (0.5 * a0, 0.5 * b0)
}

/// Centred closure whose reconstruction takes the values `t_a`, `t_b`.
pub fn dirichlet_zero(t_a: f64, t_b: f64, i0_a: f64, i0_b: f64, mu: f64) -> Result<(f64, f64)> {
    let det = check_mu(mu)?;
    let ra = t_a - i0_a;
    let rb = t_b - i0_b;
    Ok(((ra - mu * rb) / det, (rb - mu * ra) / det))
}

/// Centred closure whose reconstruction has the slopes `s_a`, `s_b`.
pub fn neumann_zero(s_a: f64, s_b: f64, i0_a: f64, i0_b: f64, alpha: f64, mu: f64) -> Result<(f64, f64)> {
    let det = check_mu(mu)?;
    // R'(a) = a (I_0(a) - A + mu B),  R'(b) = a (-I_0(b) - mu A + B)
    let ra = s_a / alpha - i0_a;
    let rb = s_b / alpha + i0_b;
    Ok(((-ra + mu * rb) / det, (rb - mu * ra) / det))
}

/// Periodic centred closure: value and slope of the reconstruction agree at
/// both ends.
pub fn periodic_zero(i0_a: f64, i0_b: f64, mu: f64) -> Result<(f64, f64)> {
    check_mu(mu)?;
    Ok((i0_b / (1.0 - mu), i0_a / (1.0 - mu)))
}

/// Periodic `B_L` from `I_L(a)`.
pub fn periodic_l(il_a: f64, mu: f64) -> Result<f64> {
    check_mu(mu)?;
    Ok(il_a / (1.0 - mu))
}

/// Periodic `A_R` from `I_R(b)`.
pub fn periodic_r(ir_b: f64, mu: f64) -> Result<f64> {
    check_mu(mu)?;
    Ok(ir_b / (1.0 - mu))
}

/// Values and slopes `(R(a), R(b), R'(a), R'(b))` of the centred
/// reconstruction, evaluated from its representation.
pub fn reconstruction_ends(i0_a: f64, i0_b: f64, a0: f64, b0: f64, alpha: f64, mu: f64) -> (f64, f64, f64, f64) {
    (
        i0_a + a0 + mu * b0,
        i0_b + mu * a0 + b0,
        alpha * (i0_a - a0 + mu * b0),
        alpha * (-i0_b - mu * a0 + b0),
    )
}
