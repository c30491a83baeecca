/// Correction coefficients `c(p, m)` for `1 <= p <= m <= k`:
/// `c(1, m) = -1`, `c(p, m) = -sum_{i=p-1}^{m-1} c(p-1, i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffTable {
    k: usize,
    c: Vec<Vec<i64>>,
}

impl CoeffTable {
    pub fn new(k: usize) -> Self {
        assert!((1..=10).contains(&k), "coefficient table order must be in 1..=10");
        let mut c = vec![vec![0i64; k + 1]; k + 1];
        for m in 1..=k {
            c[1][m] = -1;
        }
        for p in 2..=k {
            for m in p..=k {
                c[p][m] = -(p - 1..m).map(|i| c[p - 1][i]).sum::<i64>();
            }
        }
        Self { k, c }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `c(p, m)`, zero outside `1 <= p <= m <= k`.
    pub fn get(&self, p: usize, m: usize) -> f64 {
        if p == 0 || m < p || m > self.k {
            0.0
        } else {
            self.c[p][m] as f64
        }
    }

    /// `(-1)^p binom(m - 1, p - 1)`.
    pub fn closed_form(p: usize, m: usize) -> i64 {
        let sign = if p % 2 == 0 { 1 } else { -1 };
        sign * binomial(m as u64 - 1, p as u64 - 1) as i64
    }

    /// Overwrites one entry. Used by the self-test fault injection.
    pub fn set(&mut self, p: usize, m: usize, value: i64) {
        self.c[p][m] = value;
    }

    pub fn raw(&self, p: usize, m: usize) -> i64 {
        self.c[p][m]
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
