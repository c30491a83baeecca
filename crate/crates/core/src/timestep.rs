//! Explicit SSP Runge-Kutta marching (Shu-Osher form) of a semi-discrete
//! system whose right-hand side is built from the kernel operators.

use crate::{Error, Result};

/// A method-of-lines system `u' = L(t, u)`.
///
/// The kernel rate depends on the step size, so the integrator announces
/// every step size before using it.
pub trait Semidiscrete {
    /// Called before each step; implementations rebuild kernels when needed.
    fn set_dt(&mut self, dt: f64) -> Result<()>;

    fn rhs(&self, t: f64, u: &[f64]) -> Result<Vec<f64>>;

    /// Imposes any strongly enforced data on the state at time `t`.
    fn finalize(&self, _t: f64, _u: &mut [f64]) {}
}

/// Shu-Osher coefficients: stage `i` is `a u^n + b (u^(i-1) + dt L(u^(i-1)))`
/// evaluated at `t + c dt`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RkScheme {
    order: usize,
}

impl RkScheme {
    pub fn new(order: usize) -> Result<Self> {
        if !(1..=3).contains(&order) {
            return Err(Error::Config(format!("SSP-RK order must be 1, 2 or 3, got {order}")));
        }
        Ok(Self { order })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `(a, b, c)` per stage; `a + b = 1`, both nonnegative.
    pub fn stages(&self) -> &'static [(f64, f64, f64)] {
        match self.order {
            1 => &[(0.0, 1.0, 0.0)],
            2 => &[(0.0, 1.0, 0.0), (0.5, 0.5, 1.0)],
            _ => &[(0.0, 1.0, 0.0), (0.75, 0.25, 1.0), (1.0 / 3.0, 2.0 / 3.0, 0.5)],
        }
    }
}

/// One step from `t` to `t + dt`.
pub fn ssp_step<S: Semidiscrete + ?Sized>(scheme: RkScheme, sys: &S, u: &[f64], t: f64, dt: f64) -> Result<Vec<f64>> {
    let mut stage = u.to_vec();
    for &(a, b, c) in scheme.stages() {
        let l = sys.rhs(t + c * dt, &stage)?;
        let next: Vec<f64> = u
            .iter()
            .zip(&stage)
            .zip(&l)
            .map(|((u0, s), l)| a * u0 + b * (s + dt * l))
            .collect();
        stage = next;
    }
    Ok(stage)
}

/// Steps of size `dt` from `t0`, the last one shortened to land on `t_final`.
pub fn step_sizes(t0: f64, t_final: f64, dt: f64) -> Result<Vec<f64>> {
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(Error::Config(format!("time step must be positive, got {dt}")));
    }
    let span = t_final - t0;
    if span < 0.0 {
        return Err(Error::Config("final time precedes start time".into()));
    }
    let n = ((span / dt) - 1e-12).ceil().max(0.0) as usize;
    let mut steps = vec![dt; n];
    if let Some(last) = steps.last_mut() {
        *last = span - dt * (n - 1) as f64;
    }
    Ok(steps)
}

/// Marches `u` from `t0` to `t_final`, calling `observe(step, t, u)` after
/// each step. Aborts on the first non-finite value.
pub fn march_with<S, F>(scheme: RkScheme, sys: &mut S, mut u: Vec<f64>, t0: f64, t_final: f64, dt: f64, mut observe: F) -> Result<Vec<f64>>
where
    S: Semidiscrete + ?Sized,
    F: FnMut(usize, f64, &[f64]),
{
    let mut t = t0;
    let mut current = f64::NAN;
    let steps = step_sizes(t0, t_final, dt)?;
    let count = steps.len();
    for (step, h) in steps.into_iter().enumerate() {
        if h != current {
            sys.set_dt(h)?;
            current = h;
        }
        u = ssp_step(scheme, sys, &u, t, h)?;
        t = if step + 1 == count { t_final } else { t + h };
        sys.finalize(t, &mut u);
        if u.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite { t, step });
        }
        observe(step, t, &u);
    }
    Ok(u)
}

pub fn march<S: Semidiscrete + ?Sized>(scheme: RkScheme, sys: &mut S, u: Vec<f64>, t0: f64, t_final: f64, dt: f64) -> Result<Vec<f64>> {
    march_with(scheme, sys, u, t0, t_final, dt, |_, _, _| {})
}

/// `u_tt = F(t, u)` written as the first-order system `(u, v)' = (v, F(t, u))`
/// on a stacked state `[u; v]`.
pub trait SecondOrderInTime {
    fn set_dt(&mut self, dt: f64) -> Result<()>;
    /// The acceleration `F(t, u)`.
    fn acceleration(&self, t: f64, u: &[f64]) -> Result<Vec<f64>>;
    /// Velocity right-hand side; the default is `v` itself. Boundary entries
    /// may be replaced by data derivatives.
    fn velocity(&self, _t: f64, _u: &[f64], v: &[f64]) -> Vec<f64> {
        v.to_vec()
    }
    fn finalize(&self, _t: f64, _u: &mut [f64], _v: &mut [f64]) {}
}

/// Adapter running a [`SecondOrderInTime`] system through the SSP integrators.
pub struct WaveSystem<W> {
    pub inner: W,
}

impl<W: SecondOrderInTime> Semidiscrete for WaveSystem<W> {
    fn set_dt(&mut self, dt: f64) -> Result<()> {
        self.inner.set_dt(dt)
    }

    fn rhs(&self, t: f64, state: &[f64]) -> Result<Vec<f64>> {
        let n = state.len() / 2;
        let (u, v) = state.split_at(n);
        let mut out = self.inner.velocity(t, u, v);
        out.extend(self.inner.acceleration(t, u)?);
        Ok(out)
    }

    fn finalize(&self, t: f64, state: &mut [f64]) {
        let n = state.len() / 2;
        let (u, v) = state.split_at_mut(n);
        self.inner.finalize(t, u, v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Linear(f64);

    impl Semidiscrete for Linear {
        fn set_dt(&mut self, _dt: f64) -> Result<()> {
            Ok(())
        }
        fn rhs(&self, _t: f64, u: &[f64]) -> Result<Vec<f64>> {
            Ok(u.iter().map(|x| self.0 * x).collect())
        }
    }

    struct Clock;

    impl Semidiscrete for Clock {
        fn set_dt(&mut self, _dt: f64) -> Result<()> {
            Ok(())
        }
        fn rhs(&self, t: f64, _u: &[f64]) -> Result<Vec<f64>> {
            Ok(vec![2.0 * t])
        }
    }

    #[test]
    fn rk3_is_cubic_taylor() {
        let s = RkScheme::new(3).unwrap();
        let u = ssp_step(s, &Linear(1.0), &[1.0], 0.0, 0.1).unwrap();
        assert!((u[0] - (1.0 + 0.1 + 0.005 + 0.001 / 6.0)).abs() < 1e-14);
    }

    #[test]
    fn stage_weights_are_convex() {
        for p in 1..=3 {
            for &(a, b, _) in RkScheme::new(p).unwrap().stages() {
                assert!(a >= 0.0 && b >= 0.0 && (a + b - 1.0).abs() < 1e-15);
            }
        }
        assert!(RkScheme::new(4).is_err());
    }

    #[test]
    fn orders_on_exponential() {
        for p in 1..=3 {
            let s = RkScheme::new(p).unwrap();
            let err = |dt: f64| (march(s, &mut Linear(1.0), vec![1.0], 0.0, 1.0, dt).unwrap()[0] - 1f64.exp()).abs();
            let slope = (err(0.01) / err(0.005)).log2();
            assert!((slope - p as f64).abs() < 0.1, "order {p}: {slope}");
        }
    }

    #[test]
    fn stage_times_integrate_quadratics() {
        // u' = 2t is integrated exactly by RK2 and RK3 only with the right stage times.
        for p in 2..=3 {
            let u = march(RkScheme::new(p).unwrap(), &mut Clock, vec![0.0], 0.0, 1.0, 0.3).unwrap();
            assert!((u[0] - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn last_step_lands_on_final_time() {
        let steps = step_sizes(0.0, 1.0, 0.3).unwrap();
        assert_eq!(steps.len(), 4);
        assert!((steps.iter().sum::<f64>() - 1.0).abs() < 1e-15);
        assert_eq!(step_sizes(0.0, 1.0, 0.25).unwrap().len(), 4);
        assert!(step_sizes(0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn zero_rhs_leaves_state() {
        let u = ssp_step(RkScheme::new(3).unwrap(), &Linear(0.0), &[1.5, -2.0], 0.0, 0.7).unwrap();
        assert_eq!(u, vec![1.5, -2.0]);
    }
}
