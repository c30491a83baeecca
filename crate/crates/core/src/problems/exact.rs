//! Closed-form exact solutions with mixed partial derivatives of any order.

use super::bessel::j0_radial_derivative;

/// A smooth function of `(x, y, t)` with all mixed partials available.
pub trait Exact: Send + Sync {
    /// `d^mx_x d^my_y d^mt_t u(x, y, t)`.
    fn d(&self, mx: usize, my: usize, mt: usize, x: f64, y: f64, t: f64) -> f64;

    fn u(&self, x: f64, y: f64, t: f64) -> f64 {
        self.d(0, 0, 0, x, y, t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Shape {
    Sin,
    Cos,
    Exp,
    /// `phase + k . (x, y, t)` itself.
    Affine,
}

/// `shape(k . (x, y, t) + phase)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Factor {
    pub shape: Shape,
    pub k: [f64; 3],
    pub phase: f64,
}

impl Factor {
    pub fn new(shape: Shape, k: [f64; 3], phase: f64) -> Self {
        Self { shape, k, phase }
    }

    fn d(&self, m: [usize; 3], z: [f64; 3]) -> f64 {
        let theta = self.phase + self.k[0] * z[0] + self.k[1] * z[1] + self.k[2] * z[2];
        let n = m[0] + m[1] + m[2];
        let scale: f64 = (0..3).map(|i| self.k[i].powi(m[i] as i32)).product();
        let quarter = std::f64::consts::FRAC_PI_2 * n as f64;
        let base = match self.shape {
            Shape::Sin => (theta + quarter).sin(),
            Shape::Cos => (theta + quarter).cos(),
            Shape::Exp => theta.exp(),
            Shape::Affine => match n {
                0 => return theta,
                1 => 1.0,
                _ => 0.0,
            },
        };
        scale * base
    }
}

/// `coef * prod(factors)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub coef: f64,
    pub factors: Vec<Factor>,
}

/// A sum of products of plane-wave factors.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SumOfProducts {
    pub terms: Vec<Term>,
}

impl SumOfProducts {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn term(mut self, coef: f64, factors: &[Factor]) -> Self {
        self.terms.push(Term { coef, factors: factors.to_vec() });
        self
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// General Leibniz rule over the factor list.
fn product_derivative(factors: &[Factor], m: [usize; 3], z: [f64; 3]) -> f64 {
    match factors {
        [] => {
            if m == [0, 0, 0] {
                1.0
            } else {
                0.0
            }
        }
        [f] => f.d(m, z),
        [f, rest @ ..] => {
            let mut sum = 0.0;
            for i in 0..=m[0] {
                for j in 0..=m[1] {
                    for l in 0..=m[2] {
                        let head = f.d([i, j, l], z);
                        if head == 0.0 {
                            continue;
                        }
                        let w = binomial(m[0], i) * binomial(m[1], j) * binomial(m[2], l);
                        sum += w * head * product_derivative(rest, [m[0] - i, m[1] - j, m[2] - l], z);
                    }
                }
            }
            sum
        }
    }
}

impl Exact for SumOfProducts {
    fn d(&self, mx: usize, my: usize, mt: usize, x: f64, y: f64, t: f64) -> f64 {
        self.terms
            .iter()
            .map(|term| term.coef * product_derivative(&term.factors, [mx, my, mt], [x, y, t]))
            .sum()
    }
}

/// Drumhead mode `J_0(k r) cos(k t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DrumMode {
    pub k: f64,
}

impl Exact for DrumMode {
    fn d(&self, mx: usize, my: usize, mt: usize, x: f64, y: f64, t: f64) -> f64 {
        let time = self.k.powi(mt as i32) * (self.k * t + std::f64::consts::FRAC_PI_2 * mt as f64).cos();
        time * j0_radial_derivative(self.k, mx, my, x, y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn leibniz_matches_hand_derivative() {
        // x e^{x/2 - t/4}
        let u = SumOfProducts::new().term(
            1.0,
            &[Factor::new(Shape::Affine, [1.0, 0.0, 0.0], 0.0), Factor::new(Shape::Exp, [0.5, 0.0, -0.25], 0.0)],
        );
        let (x, t): (f64, f64) = (0.3, 0.7);
        let e = (0.5 * x - 0.25 * t).exp();
        assert!((u.d(1, 0, 0, x, 0.0, t) - e * (1.0 + 0.5 * x)).abs() < 1e-15);
        assert!((u.d(2, 0, 0, x, 0.0, t) - e * (1.0 + 0.25 * x)).abs() < 1e-15);
        assert!((u.d(1, 0, 1, x, 0.0, t) + 0.25 * e * (1.0 + 0.5 * x)).abs() < 1e-15);
    }

    #[test]
    fn trig_derivatives_cycle() {
        let u = SumOfProducts::new().term(2.0, &[Factor::new(Shape::Sin, [PI, 0.0, 0.0], 0.0)]);
        for m in 0..8 {
            let expect = 2.0 * PI.powi(m as i32) * (PI * 0.3 + PI / 2.0 * m as f64).sin();
            assert!((u.d(m, 0, 0, 0.3, 0.0, 0.0) - expect).abs() < 1e-10 * expect.abs().max(1.0));
        }
    }

    #[test]
    fn drum_mode_solves_wave() {
        let u = DrumMode { k: super::super::bessel::j0_zero(1).unwrap() };
        let (x, y, t) = (0.2, 0.4, 0.3);
        let res = u.d(0, 0, 2, x, y, t) - u.d(2, 0, 0, x, y, t) - u.d(0, 2, 0, x, y, t);
        assert!(res.abs() < 1e-12);
    }
}
