/// Highest derivative order a jet can carry (`2k + 1` for `k = 3`).
pub const MAX_JET_ORDER: usize = 7;

/// Which derivative orders a jet provides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Full,
    Even,
    Odd,
}

impl Parity {
    pub fn has(self, m: usize) -> bool {
        match self {
            Parity::Full => true,
            Parity::Even => m % 2 == 0,
            Parity::Odd => m % 2 == 1,
        }
    }
}

/// Spatial derivatives `d^m phi` at one end of a line, `1 <= m <= max_order`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryJet {
    d: [f64; MAX_JET_ORDER + 1],
    parity: Parity,
    max_order: usize,
}

impl BoundaryJet {
    /// Fills the orders allowed by `parity` up to `max_order` from `f(m)`.
    pub fn from_fn(parity: Parity, max_order: usize, f: impl Fn(usize) -> f64) -> Self {
        let max_order = max_order.min(MAX_JET_ORDER);
        let mut d = [0.0; MAX_JET_ORDER + 1];
        for (m, slot) in d.iter_mut().enumerate().take(max_order + 1).skip(1) {
            if parity.has(m) {
                *slot = f(m);
            }
        }
        Self { d, parity, max_order }
    }

    /// A jet whose supplied derivatives are all zero.
    pub fn zero(parity: Parity, max_order: usize) -> Self {
        Self::from_fn(parity, max_order, |_| 0.0)
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    pub fn has(&self, m: usize) -> bool {
        m >= 1 && m <= self.max_order && self.parity.has(m)
    }

    /// `d^m phi`, or `None` when the order is not supplied.
    pub fn get(&self, m: usize) -> Option<f64> {
        self.has(m).then(|| self.d[m])
    }

    /// `d^m phi`, treating unsupplied orders as zero.
    pub fn or_zero(&self, m: usize) -> f64 {
        self.get(m).unwrap_or(0.0)
    }
}
