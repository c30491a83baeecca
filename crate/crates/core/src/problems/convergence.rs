//! Grid-refinement studies.

use rayon::prelude::*;

use super::{ExampleId, Scheme};
use crate::Result;

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub error: f64,
    /// `log2(e_prev / e)` scaled by the refinement ratio; `None` on the first row.
    pub order: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub example: ExampleId,
    pub k: usize,
    pub cfl: f64,
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceReport {
    pub fn errors(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.error).collect()
    }

    /// The order between the last two grids.
    pub fn final_order(&self) -> Option<f64> {
        self.rows.last().and_then(|r| r.order)
    }

    /// The order reported on the row for grid `n`.
    pub fn order_at(&self, n: usize) -> Option<f64> {
        self.rows.iter().find(|r| r.n == n).and_then(|r| r.order)
    }

    pub fn error_at(&self, n: usize) -> Option<f64> {
        self.rows.iter().find(|r| r.n == n).map(|r| r.error)
    }
}

/// Observed orders between consecutive grids, `log(e_i / e_{i+1}) / log(n_{i+1} / n_i)`.
pub fn observed_orders(ns: &[usize], errors: &[f64]) -> Vec<Option<f64>> {
    let mut out = vec![None];
    for i in 1..errors.len() {
        let ratio = ns[i] as f64 / ns[i - 1] as f64;
        out.push(Some((errors[i - 1] / errors[i]).ln() / ratio.ln()));
    }
    out.truncate(errors.len());
    out
}

/// Solves on every grid of `ns` (concurrently) and reports errors and orders.
pub fn run_convergence(example: ExampleId, scheme: &Scheme, ns: &[usize]) -> Result<ConvergenceReport> {
    let errors: Vec<f64> = ns
        .par_iter()
        .map(|&n| example.solve(n, scheme).map(|s| s.max_error()))
        .collect::<Result<_>>()?;
    let orders = observed_orders(ns, &errors);
    let rows = ns
        .iter()
        .zip(errors)
        .zip(orders)
        .map(|((&n, error), order)| ConvergenceRow { n, error, order })
        .collect();
    Ok(ConvergenceReport { example, k: scheme.k, cfl: scheme.cfl, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_from_errors() {
        let o = observed_orders(&[10, 20, 40], &[1.0, 0.25, 0.0625]);
        assert_eq!(o[0], None);
        assert!((o[1].unwrap() - 2.0).abs() < 1e-14);
        assert!((o[2].unwrap() - 2.0).abs() < 1e-14);
        assert_eq!(observed_orders(&[10], &[1.0]), vec![None]);
    }
}
