//! `J_0` by its ascending series, its first zeros, and x/y derivatives of
//! `J_0(k r)` through the series in `r^2 = x^2 + y^2`.

/// Series terms kept; ample for arguments up to about 15.
const TERMS: usize = 48;

pub fn j0(x: f64) -> f64 {
    let z = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for j in 1..TERMS {
        term *= -z / (j * j) as f64;
        sum += term;
        if term.abs() < 1e-18 {
            break;
        }
    }
    sum
}

/// The `n`-th positive zero of `J_0`, `n` in `1..=3`.
pub fn j0_zero(n: usize) -> Option<f64> {
    let (mut lo, mut hi) = match n {
        1 => (2.0, 3.0),
        2 => (5.0, 6.0),
        3 => (8.0, 9.0),
        _ => return None,
    };
    let mut flo = j0(lo);
    while hi - lo > 1e-14 {
        let mid = 0.5 * (lo + hi);
        let fm = j0(mid);
        if fm == 0.0 {
            return Some(mid);
        }
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

fn falling(p: usize, n: usize) -> f64 {
    (0..n).map(|i| (p - i) as f64).product()
}

fn monomial_derivative(p: usize, n: usize, x: f64) -> f64 {
    if n > p {
        0.0
    } else {
        falling(p, n) * x.powi((p - n) as i32)
    }
}

/// `d^mx/dx^mx d^my/dy^my J_0(k sqrt(x^2 + y^2))`.
pub fn j0_radial_derivative(k: f64, mx: usize, my: usize, x: f64, y: f64) -> f64 {
    // J0(k r) = sum_j c_j (x^2 + y^2)^j, c_j = (-k^2/4)^j / (j!)^2
    let mut c = 1.0;
    let mut sum = 0.0;
    let mut binom = vec![1.0f64];
    for j in 0..TERMS {
        if j > 0 {
            c *= -0.25 * k * k / (j * j) as f64;
            let mut next = vec![1.0; j + 1];
            for i in 1..j {
                next[i] = binom[i - 1] + binom[i];
            }
            binom = next;
        }
        if 2 * j < mx + my {
            continue;
        }
        let mut poly = 0.0;
        for (i, &b) in binom.iter().enumerate() {
            poly += b * monomial_derivative(2 * i, mx, x) * monomial_derivative(2 * (j - i), my, y);
        }
        sum += c * poly;
        if c.abs() < 1e-30 {
            break;
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(j0(0.0), 1.0);
        assert!((j0(1.0) - 0.765_197_686_557_966_6).abs() < 1e-15);
        assert!((j0(10.0) + 0.245_935_764_451_348_3).abs() < 1e-12);
    }

    #[test]
    fn zeros() {
        let k1 = j0_zero(1).unwrap();
        assert!((k1 - 2.404_825_557_695_773).abs() < 1e-13);
        let k2 = j0_zero(2).unwrap();
        assert!((k2 - 5.520_078_110_286_311).abs() < 1e-13);
        assert!(j0(k2).abs() < 1e-12);
        assert!(j0_zero(7).is_none());
    }

    #[test]
    fn radial_series_matches_j0() {
        let k = 2.4;
        let (x, y) = (0.3, -0.5);
        let r = (x * x + y * y as f64).sqrt();
        assert!((j0_radial_derivative(k, 0, 0, x, y) - j0(k * r)).abs() < 1e-14);
        // Laplacian of J0(k r) is -k^2 J0(k r).
        let lap = j0_radial_derivative(k, 2, 0, x, y) + j0_radial_derivative(k, 0, 2, x, y);
        assert!((lap + k * k * j0(k * r)).abs() < 1e-12);
        // Central difference check of an x-derivative.
        let h = 1e-4;
        let fd = (j0_radial_derivative(k, 2, 0, x + h, y) - j0_radial_derivative(k, 2, 0, x - h, y)) / (2.0 * h);
        assert!((fd - j0_radial_derivative(k, 3, 0, x, y)).abs() < 1e-6);
    }
}
