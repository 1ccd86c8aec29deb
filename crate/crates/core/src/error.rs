use thiserror::Error;

pub type Result<T> = std::result::Result<T, PileError>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PileError {
    /// A physical input violates its invariant.
    #[error("invalid {field}: {reason} (got {value})")]
    Validation {
        field: &'static str,
        reason: &'static str,
        value: f64,
    },

    /// Evaluation point outside the pile.
    #[error("x = {x} m lies outside the pile [0, {length}] m")]
    Domain { x: f64, length: f64 },

    #[error("{0}")]
    Argument(String),

    #[error("eta undefined: {0}")]
    EtaUndefined(&'static str),

    #[error("numeric failure: {0}")]
    Numeric(String),

    /// More than one displacement sign change was found in a discrete solution.
    #[error("unexpected nonmonotone displacement: {0} sign changes")]
    NonMonotone(usize),
}
