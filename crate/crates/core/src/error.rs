use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input lies outside the region where the formula is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// The adaptive integrator could not reach the requested tolerance.
    #[error(
        "quadrature on [{lower}, {upper}] stopped at estimated error {estimate:e} \
         (requested {requested:e}) after {intervals} subintervals"
    )]
    Quadrature {
        lower: f64,
        upper: f64,
        requested: f64,
        estimate: f64,
        intervals: usize,
    },

    /// A finite-difference grid cannot deliver the requested accuracy.
    #[error("grid error: {0}")]
    Grid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_finite(name: &str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Domain(format!("{name} must be finite, got {value}")))
    }
}
