use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid grid: {0}")]
    Grid(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("quadrature construction failed: {0}")]
    Quadrature(String),
    #[error("degenerate boundary system: |1 - mu^2| = {0:e}")]
    Degenerate(f64),
    #[error("non-finite value at t = {t} (step {step})")]
    NonFinite { t: f64, step: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
