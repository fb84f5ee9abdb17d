use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A `b` sequence whose leading term is not 1.
    #[error("invalid normalization: {0}")]
    InvalidNormalization(String),

    /// Reversion needs `c_0 = 0` and `c_1 = 1`.
    #[error("series is not invertible under the unit normalization: {0}")]
    NonInvertible(String),

    #[error("composition requires an inner series with zero constant term")]
    CompositionDomain,

    #[error("argument {value} outside the domain of {what}")]
    Domain { what: &'static str, value: f64 },

    #[error("value {value} outside the range of {what}")]
    Range { what: &'static str, value: f64 },

    #[error("root finding did not converge: {0}")]
    Convergence(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// alpha = 1 is excluded from every Z-entropy; the limit is the Boltzmann entropy.
    #[error("alpha = 1 is not admissible for {0}; use the Boltzmann/von Neumann entropy")]
    AlphaOne(&'static str),

    #[error("invalid distribution: {0}")]
    Distribution(String),

    #[error("invalid density matrix: {0}")]
    DensityMatrix(String),
}

pub(crate) fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}
