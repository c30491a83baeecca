//! Per-cell exponential-kernel integrals.
//!
//! For cell `[x_c, x_{c+1}]` the left and right integrals are
//!
//! ```text
//! J_L,c = a * int_cell exp(-a (s - x_c))     v(s) ds
//! J_R,c = a * int_cell exp(-a (x_{c+1} - s)) v(s) ds
//! ```
//!
//! Both are approximated by integrating a polynomial interpolant of `v`
//! against the kernel exactly, via the scaled moments `mu_m(nu)`.

use nalgebra::{DMatrix, DVector};

use crate::grid::{Grid1D, MIN_STENCIL_NODES};
use crate::{Error, Result};

/// Largest moment order supported by [`exp_moments`].
pub const MAX_MOMENT: usize = 8;
/// WENO regularisation.
pub const WENO_EPS: f64 = 1e-6;

/// Below this `nu` the moments come from the power series.
const SERIES_SWITCH: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    L,
    R,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QuadratureMode {
    #[default]
    Linear,
    Nonlinear,
}

/// Stencil used by the ENO path on nonuniform lines, fixed per line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EnoStencil {
    Left,
    #[default]
    Center,
    Right,
}

impl EnoStencil {
    /// Offset of the first stencil node relative to the cell's left node.
    fn offset(self) -> i64 {
        match self {
            EnoStencil::Left => -2,
            EnoStencil::Center => -1,
            EnoStencil::Right => 0,
        }
    }
}

/// `mu_m(nu) = nu * int_0^1 exp(-nu t) t^m dt` for `m = 0..=m_max`.
pub fn exp_moments(nu: f64, m_max: usize) -> Result<Vec<f64>> {
    if !(nu > 0.0) || !nu.is_finite() {
        return Err(Error::Config(format!("moment rate must be positive, got {nu}")));
    }
    if m_max > MAX_MOMENT {
        return Err(Error::Config(format!("moment order {m_max} exceeds {MAX_MOMENT}")));
    }
    let mut mu = vec![0.0; m_max + 1];
    if nu < SERIES_SWITCH {
        // nu * sum_n (-nu)^n / (n! (m + n + 1))
        for (m, slot) in mu.iter_mut().enumerate() {
            let mut term = 1.0;
            let mut sum = 0.0;
            let mut n = 0usize;
            loop {
                let add = term / (m + n + 1) as f64;
                sum += add;
                if add.abs() < 1e-18 * sum.abs() && n > 2 {
                    break;
                }
                n += 1;
                term *= -nu / n as f64;
            }
            *slot = nu * sum;
        }
    } else {
        let e = (-nu).exp();
        mu[0] = -(-nu).exp_m1();
        for m in 1..=m_max {
            mu[m] = -e + (m as f64 / nu) * mu[m - 1];
        }
    }
    Ok(mu)
}

/// Weights `w_j` with `sum_j w_j v(t_j) = a * int_0^{lam H} exp(-a s) p(s) ds`
/// where `p` interpolates `v` at the offsets `taus` (in units of `H`) and
/// `nu_h = a H`.
pub fn moment_weights(taus: &[f64], lam: f64, nu_h: f64) -> Result<Vec<f64>> {
    let d = taus.len();
    if d == 0 || d > MAX_MOMENT + 1 {
        return Err(Error::Quadrature(format!("unsupported stencil size {d}")));
    }
    let mu = exp_moments(nu_h * lam, d - 1)?;
    let rhs = DVector::from_iterator(d, (0..d).map(|m| lam.powi(m as i32) * mu[m]));
    let vt = DMatrix::from_fn(d, d, |m, j| taus[j].powi(m as i32));
    let w = vt
        .lu()
        .solve(&rhs)
        .ok_or_else(|| Error::Quadrature("singular interpolation nodes".into()))?;
    if w.iter().any(|x| !x.is_finite()) {
        return Err(Error::Quadrature("non-finite quadrature weights".into()));
    }
    Ok(w.iter().copied().collect())
}

/// Quadrature weights for the cell `[cell.0, cell.1]` from interpolation
/// nodes `nodes`, exact for polynomials of degree `nodes.len() - 1`.
pub fn poly_quad_weights(nodes: &[f64], cell: (f64, f64), alpha: f64, side: Side) -> Result<Vec<f64>> {
    let (x0, x1) = cell;
    if !(x1 > x0) {
        return Err(Error::Quadrature("empty cell".into()));
    }
    let span = nodes.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
        - nodes.iter().cloned().fold(f64::INFINITY, f64::min);
    let h = if nodes.len() > 1 { span / (nodes.len() - 1) as f64 } else { x1 - x0 };
    let taus: Vec<f64> = match side {
        Side::L => nodes.iter().map(|&x| (x - x0) / h).collect(),
        Side::R => nodes.iter().map(|&x| (x1 - x) / h).collect(),
    };
    moment_weights(&taus, (x1 - x0) / h, alpha * h)
}

/// Cubic sub-stencil weights and linear weights for the uniform six-point
/// WENO quadrature of one side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WenoWeights {
    /// Full six-point weights on nodes `c-2 ..= c+3`.
    pub full: [f64; 6],
    /// Sub-stencil `r` uses nodes `c-2+r ..= c+1+r`.
    pub sub: [[f64; 4]; 3],
    pub linear: [f64; 3],
}

fn uniform_taus(side: Side, offsets: impl Iterator<Item = i64>) -> Vec<f64> {
    offsets
        .map(|o| match side {
            Side::L => o as f64,
            Side::R => 1.0 - o as f64,
        })
        .collect()
}

/// Linear weights `d_r` (and the stencil weights they combine) for
/// `nu = a h` on a uniform grid.
pub fn weno_weights(nu: f64, side: Side) -> Result<WenoWeights> {
    let full_v = moment_weights(&uniform_taus(side, -2..=3), 1.0, nu)?;
    let mut full = [0.0; 6];
    full.copy_from_slice(&full_v);
    let mut sub = [[0.0; 4]; 3];
    for (r, s) in sub.iter_mut().enumerate() {
        let lo = r as i64 - 2;
        let w = moment_weights(&uniform_taus(side, lo..=lo + 3), 1.0, nu)?;
        s.copy_from_slice(&w);
    }
    let a = DMatrix::from_fn(6, 3, |j, r| if j >= r && j < r + 4 { sub[r][j - r] } else { 0.0 });
    let b = DVector::from_column_slice(&full);
    let svd = a.clone().svd(true, true);
    let d = svd
        .solve(&b, 1e-300)
        .map_err(|e| Error::Quadrature(format!("linear weight solve: {e}")))?;
    let resid = (&a * &d - &b).norm();
    if !(resid <= 1e-11 * b.norm().max(1e-300)) {
        return Err(Error::Quadrature(format!("linear weight residual {resid:e} at nu = {nu}")));
    }
    Ok(WenoWeights { full, sub, linear: [d[0], d[1], d[2]] })
}

/// Linear weights `(d_0, d_1, d_2)` for the left-side integral.
pub fn weno_linear_weights(nu: f64) -> Result<[f64; 3]> {
    Ok(weno_weights(nu, Side::L)?.linear)
}

/// Jiang-Shu indicators of the three cubic sub-stencil interpolants on the
/// six samples `v[0..6]` at offsets `-2..=3` from the target cell, measured
/// on the target cell in units of the spacing (scale invariant).
pub fn smoothness_indicators(v: &[f64; 6]) -> [f64; 3] {
    let mut beta = [0.0; 3];
    for (r, b) in beta.iter_mut().enumerate() {
        let s = r as f64 - 2.0;
        let (f0, f1, f2, f3) = (v[r], v[r + 1], v[r + 2], v[r + 3]);
        // Newton form on nodes s, s+1, s+2, s+3, expanded in xi.
        let d1 = f1 - f0;
        let d2 = (f2 - 2.0 * f1 + f0) / 2.0;
        let d3 = (f3 - 3.0 * f2 + 3.0 * f1 - f0) / 6.0;
        // p(xi) = f0 + d1 (xi-s) + d2 (xi-s)(xi-s-1) + d3 (xi-s)(xi-s-1)(xi-s-2)
        let c3 = d3;
        let c2 = d2 - d3 * (3.0 * s + 3.0);
        let c1 = d1 - d2 * (2.0 * s + 1.0) + d3 * (3.0 * s * s + 6.0 * s + 2.0);
        // p' = c1 + 2 c2 xi + 3 c3 xi^2, p'' = 2 c2 + 6 c3 xi, p''' = 6 c3
        let (pa, pb, pc) = (c1, 2.0 * c2, 3.0 * c3);
        let i1 = pa * pa + pa * pb + (2.0 * pa * pc + pb * pb) / 3.0 + pb * pc / 2.0 + pc * pc / 5.0;
        let (qa, qb) = (2.0 * c2, 6.0 * c3);
        let i2 = qa * qa + qa * qb + qb * qb / 3.0;
        let i3 = 36.0 * c3 * c3;
        *b = i1 + i2 + i3;
    }
    beta
}

/// Nonlinear weights from linear weights and indicators (power 2).
pub fn nonlinear_weights(d: &[f64; 3], beta: &[f64; 3]) -> [f64; 3] {
    let mut w = [0.0; 3];
    for r in 0..3 {
        let t = WENO_EPS + beta[r];
        w[r] = d[r] / (t * t);
    }
    let s: f64 = w.iter().sum();
    w.map(|x| x / s)
}

/// Coefficient rows for the two ghost values beyond an end, by degree-4
/// extrapolation from the five nodes at `0, lam, lam+1, lam+2, lam+3`
/// (units of `h`) to `-1` and `-2`.
pub fn eno_extrapolation_rows(lambda: f64) -> Result<([f64; 5], [f64; 5])> {
    if !(lambda > 0.0) {
        return Err(Error::Config(format!("end-cell fraction must be positive, got {lambda}")));
    }
    let pos = [0.0, lambda, lambda + 1.0, lambda + 2.0, lambda + 3.0];
    let row = |target: f64| {
        let mut r = [0.0; 5];
        for j in 0..5 {
            let mut l = 1.0;
            for m in 0..5 {
                if m != j {
                    l *= (target - pos[m]) / (pos[j] - pos[m]);
                }
            }
            r[j] = l;
        }
        r
    };
    Ok((row(-1.0), row(-2.0)))
}

/// Ghost values `(v_-1, v_-2)` at `a - h`, `a - 2h` from `v_0..v_4`.
pub fn eno_extrapolate(v: &[f64; 5], lambda: f64) -> Result<(f64, f64)> {
    let (r1, r2) = eno_extrapolation_rows(lambda)?;
    let dot = |r: &[f64; 5]| r.iter().zip(v).map(|(a, b)| a * b).sum();
    Ok((dot(&r1), dot(&r2)))
}

/// Linear weights of one cell on the six-node window starting at `start`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellWeights {
    pub start: usize,
    pub l: [f64; 6],
    pub r: [f64; 6],
}

/// All cell integrals of one line at a fixed kernel rate.
#[derive(Debug, Clone)]
pub struct LineQuadrature {
    cells: Vec<CellWeights>,
    weno: Option<(WenoWeights, WenoWeights)>,
    mode: QuadratureMode,
}

impl LineQuadrature {
    /// Uniform lines use the six-point WENO quadrature (shifted inward near
    /// the ends); nonuniform lines with a uniform interior use cubic ENO
    /// stencils with two extrapolated ghost nodes per end; lines with fewer
    /// than seven nodes use one interpolant through all nodes.
    pub fn new(grid: &Grid1D, alpha: f64, mode: QuadratureMode, stencil: EnoStencil) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::Config(format!("kernel rate must be positive, got {alpha}")));
        }
        let x = grid.nodes();
        let n = grid.cells();
        if grid.len() < MIN_STENCIL_NODES {
            let mut cells = Vec::with_capacity(n);
            for c in 0..n {
                let mut cw = CellWeights { start: 0, l: [0.0; 6], r: [0.0; 6] };
                let wl = poly_quad_weights(x, (x[c], x[c + 1]), alpha, Side::L)?;
                let wr = poly_quad_weights(x, (x[c], x[c + 1]), alpha, Side::R)?;
                cw.l[..wl.len()].copy_from_slice(&wl);
                cw.r[..wr.len()].copy_from_slice(&wr);
                cells.push(cw);
            }
            return Ok(Self { cells, weno: None, mode: QuadratureMode::Linear });
        }
        if grid.is_uniform() {
            Self::uniform(grid, alpha, mode)
        } else {
            Self::eno(grid, alpha, stencil)
        }
    }

    fn uniform(grid: &Grid1D, alpha: f64, mode: QuadratureMode) -> Result<Self> {
        let x = grid.nodes();
        let n = grid.cells();
        let h = grid.spacings()[0];
        let nu = alpha * h;
        // One template per position of the cell inside its window.
        let mut templates = Vec::with_capacity(5);
        for pos in 0..5i64 {
            let wl = moment_weights(&uniform_taus(Side::L, -pos..6 - pos), 1.0, nu)?;
            let wr = moment_weights(&uniform_taus(Side::R, -pos..6 - pos), 1.0, nu)?;
            let mut l = [0.0; 6];
            let mut r = [0.0; 6];
            l.copy_from_slice(&wl);
            r.copy_from_slice(&wr);
            templates.push((l, r));
        }
        let cells = (0..n)
            .map(|c| {
                let start = window_start(c, n);
                let (l, r) = templates[c - start];
                CellWeights { start, l, r }
            })
            .collect();
        let weno = match mode {
            QuadratureMode::Linear => None,
            QuadratureMode::Nonlinear => Some((weno_weights(nu, Side::L)?, weno_weights(nu, Side::R)?)),
        };
        debug_assert!(x.len() == n + 1);
        Ok(Self { cells, weno, mode })
    }

    fn eno(grid: &Grid1D, alpha: f64, stencil: EnoStencil) -> Result<Self> {
        let (h, lam_a, lam_b) = grid
            .end_fractions()
            .ok_or_else(|| Error::Grid("nonuniform line needs a uniform interior".into()))?;
        let x = grid.nodes();
        let n = grid.cells();
        let (ga1, ga2) = eno_extrapolation_rows(lam_a)?;
        let (gb1, gb2) = eno_extrapolation_rows(lam_b)?;
        // Extended node e maps to real node e - 2; e = 0, 1 and n+3, n+4 are ghosts.
        let pos = |e: i64| -> f64 {
            match e {
                0 => x[0] - 2.0 * h,
                1 => x[0] - h,
                e if e == n as i64 + 3 => x[n] + h,
                e if e == n as i64 + 4 => x[n] + 2.0 * h,
                e => x[(e - 2) as usize],
            }
        };
        let mut cells = Vec::with_capacity(n);
        for c in 0..n {
            let start = window_start(c, n);
            let first = c as i64 + 2 + stencil.offset();
            let ext: Vec<i64> = (first..first + 4).collect();
            let nodes: Vec<f64> = ext.iter().map(|&e| pos(e)).collect();
            let wl = poly_quad_weights(&nodes, (x[c], x[c + 1]), alpha, Side::L)?;
            let wr = poly_quad_weights(&nodes, (x[c], x[c + 1]), alpha, Side::R)?;
            let mut cw = CellWeights { start, l: [0.0; 6], r: [0.0; 6] };
            for (k, &e) in ext.iter().enumerate() {
                let mut add = |node: usize, f: f64| {
                    let j = node - start;
                    cw.l[j] += f * wl[k];
                    cw.r[j] += f * wr[k];
                };
                match e {
                    0 | 1 => {
                        let row = if e == 1 { &ga1 } else { &ga2 };
                        for (j, &f) in row.iter().enumerate() {
                            add(j, f);
                        }
                    }
                    e if e >= n as i64 + 3 => {
                        let row = if e == n as i64 + 3 { &gb1 } else { &gb2 };
                        for (j, &f) in row.iter().enumerate() {
                            add(n - j, f);
                        }
                    }
                    e => add((e - 2) as usize, 1.0),
                }
            }
            cells.push(cw);
        }
        Ok(Self { cells, weno: None, mode: QuadratureMode::Linear })
    }

    pub fn cells(&self) -> &[CellWeights] {
        &self.cells
    }

    pub fn mode(&self) -> QuadratureMode {
        self.mode
    }

    /// `(J_L, J_R)` for every cell.
    pub fn integrals(&self, v: &[f64]) -> (Vec<f64>, Vec<f64>) {
        let n = self.cells.len();
        let mut jl = vec![0.0; n];
        let mut jr = vec![0.0; n];
        for (c, cw) in self.cells.iter().enumerate() {
            let mut sl = 0.0;
            let mut sr = 0.0;
            for j in 0..6.min(v.len() - cw.start) {
                let vj = v[cw.start + j];
                sl += cw.l[j] * vj;
                sr += cw.r[j] * vj;
            }
            jl[c] = sl;
            jr[c] = sr;
        }
        if let Some((wl, wr)) = &self.weno {
            for c in 2..n.saturating_sub(2) {
                let mut s = [0.0; 6];
                s.copy_from_slice(&v[c - 2..c + 4]);
                let beta = smoothness_indicators(&s);
                jl[c] = weno_combine(wl, &beta, &s);
                jr[c] = weno_combine(wr, &beta, &s);
            }
        }
        (jl, jr)
    }
}

fn weno_combine(w: &WenoWeights, beta: &[f64; 3], s: &[f64; 6]) -> f64 {
    let omega = nonlinear_weights(&w.linear, beta);
    (0..3)
        .map(|r| omega[r] * (0..4).map(|j| w.sub[r][j] * s[r + j]).sum::<f64>())
        .sum()
}

/// First node of the six-node window serving cell `c` of an `n`-cell line.
fn window_start(c: usize, n: usize) -> usize {
    c.saturating_sub(2).min(n.saturating_sub(5))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn adaptive(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
        #[allow(clippy::too_many_arguments)]
        fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, eps: f64, depth: u32) -> f64 {
            let m = 0.5 * (a + b);
            let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
            let (flm, frm) = (f(lm), f(rm));
            let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            let delta = left + right - whole;
            if depth == 0 || delta.abs() <= 15.0 * eps {
                return left + right + delta / 15.0;
            }
            simpson(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1)
                + simpson(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1)
        }
        let (fa, fb, fm) = (f(a), f(b), f(0.5 * (a + b)));
        let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        let eps = 1e-16 * whole.abs().max(1e-300);
        simpson(f, a, b, fa, fm, fb, whole, eps, 30)
    }

    #[test]
    fn moments_match_closed_forms() {
        let mu = exp_moments(1.0, 3).unwrap();
        assert!((mu[0] - (1.0 - (-1.0f64).exp())).abs() < 1e-15);
        assert!((mu[1] - (1.0 - 2.0 * (-1.0f64).exp())).abs() < 1e-15);
        for &nu in &[1e-4, 0.1, 1.0, 3.9, 4.1, 10.0, 100.0] {
            let mu = exp_moments(nu, 8).unwrap();
            for (m, &v) in mu.iter().enumerate() {
                let exact = adaptive(&|t: f64| nu * (-nu * t).exp() * t.powi(m as i32), 0.0, 1.0);
                assert!((v - exact).abs() <= 1e-12 * exact.abs(), "nu={nu} m={m} {v} {exact}");
                assert!(v > 0.0 && v <= 1.0);
            }
        }
        assert!(exp_moments(0.0, 2).is_err());
        assert!(exp_moments(1.0, 9).is_err());
    }

    #[test]
    fn small_nu_limit() {
        let nu = 1e-6;
        let mu = exp_moments(nu, 5).unwrap();
        for (m, &v) in mu.iter().enumerate() {
            assert!((v - nu / (m + 1) as f64).abs() < 1e-9);
        }
    }

    #[test]
    fn weights_exact_on_monomials() {
        let alpha = 7.0;
        let nodes = [0.0, 0.1, 0.25, 0.3, 0.45, 0.6];
        let cell = (0.25, 0.3);
        for side in [Side::L, Side::R] {
            let w = poly_quad_weights(&nodes, cell, alpha, side).unwrap();
            for deg in 0..6 {
                let got: f64 = w.iter().zip(&nodes).map(|(w, x)| w * x.powi(deg)).sum();
                let k = |s: f64| match side {
                    Side::L => alpha * (-alpha * (s - cell.0)).exp() * s.powi(deg),
                    Side::R => alpha * (-alpha * (cell.1 - s)).exp() * s.powi(deg),
                };
                let exact = adaptive(&k, cell.0, cell.1);
                assert!((got - exact).abs() <= 1e-12 * exact.abs().max(1e-3), "{side:?} {deg}");
            }
        }
    }

    #[test]
    fn linear_weights_positive_and_consistent() {
        for &nu in &[0.01, 0.1, 1.0, 5.0, 20.0] {
            for side in [Side::L, Side::R] {
                let w = weno_weights(nu, side).unwrap();
                let s: f64 = w.linear.iter().sum();
                assert!((s - 1.0).abs() < 1e-12);
                assert!(w.linear.iter().all(|&d| d > 0.0));
            }
            let l = weno_weights(nu, Side::L).unwrap().linear;
            let r = weno_weights(nu, Side::R).unwrap().linear;
            for i in 0..3 {
                assert!((l[i] - r[2 - i]).abs() < 1e-12);
            }
        }
        let d = weno_linear_weights(1.0).unwrap();
        assert!((d[0] - 0.19315).abs() < 1e-4 && (d[1] - 0.63293).abs() < 1e-4);
    }

    #[test]
    fn indicators() {
        assert_eq!(smoothness_indicators(&[2.0; 6]), [0.0; 3]);
        let b = smoothness_indicators(&[0.0, 1.0, 2.0, 3.0, 4.0, 5.0]);
        assert!((b[0] - b[1]).abs() < 1e-12 && (b[1] - b[2]).abs() < 1e-12 && b[0] > 0.0);
        let b = smoothness_indicators(&[0.0, 1.0, 1.0, 1.0, 1.0, 1.0]);
        assert!(b[0] > 10.0 * b[1].max(b[2]));
        // scale invariance: indicators depend only on samples
        let v = [0.3, 0.1, -0.2, 0.5, 0.9, 1.2];
        let w = nonlinear_weights(&[0.2, 0.6, 0.2], &smoothness_indicators(&v));
        assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn eno_rows_at_unit_fraction() {
        let (r1, r2) = eno_extrapolation_rows(1.0).unwrap();
        let e1 = [5.0, -10.0, 10.0, -5.0, 1.0];
        let e2 = [15.0, -40.0, 45.0, -24.0, 5.0];
        for j in 0..5 {
            assert!((r1[j] - e1[j]).abs() < 1e-12 && (r2[j] - e2[j]).abs() < 1e-12);
        }
        for lam in [0.1, 0.5, 0.87] {
            let (r1, r2) = eno_extrapolation_rows(lam).unwrap();
            assert!((r1.iter().sum::<f64>() - 1.0).abs() < 1e-11);
            assert!((r2.iter().sum::<f64>() - 1.0).abs() < 1e-11);
        }
        assert!(eno_extrapolation_rows(0.0).is_err());
    }

    #[test]
    fn nonuniform_line_exact_on_cubics() {
        let g = Grid1D::half_cell(0.0, 1.0, 10).unwrap();
        let alpha = 13.0;
        let q = LineQuadrature::new(&g, alpha, QuadratureMode::Linear, EnoStencil::Center).unwrap();
        let f = |s: f64| 1.0 - 2.0 * s + 0.5 * s * s - 3.0 * s * s * s;
        let v: Vec<f64> = g.nodes().iter().map(|&x| f(x)).collect();
        let (jl, jr) = q.integrals(&v);
        let x = g.nodes();
        for c in 0..g.cells() {
            let el = adaptive(&|s| alpha * (-alpha * (s - x[c])).exp() * f(s), x[c], x[c + 1]);
            let er = adaptive(&|s| alpha * (-alpha * (x[c + 1] - s)).exp() * f(s), x[c], x[c + 1]);
            assert!((jl[c] - el).abs() < 1e-12, "cell {c}");
            assert!((jr[c] - er).abs() < 1e-12, "cell {c}");
        }
    }
}
