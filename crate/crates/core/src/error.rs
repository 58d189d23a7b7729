use thiserror::Error;

/// Errors raised by the library and surfaced by the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("clutter axiom violated: {0}")]
    ClutterAxiom(String),

    #[error("graph is not connected")]
    NotConnected,

    #[error("clutter is not uniform")]
    NotUniform,

    #[error("graph is not perfect")]
    NotPerfect,

    #[error("cone is not pointed: {0}")]
    NotPointed(String),

    #[error("polytope is unbounded: {0}")]
    Unbounded(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("linear program is {0}")]
    Lp(&'static str),

    #[error("enumeration budget exceeded while {what} (limit {limit})")]
    BudgetExceeded { what: &'static str, limit: u64 },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable, machine-readable code used in reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::MalformedInput(_) => "malformed_input",
            Error::ClutterAxiom(_) => "clutter_axiom",
            Error::NotConnected => "not_connected",
            Error::NotUniform => "not_uniform",
            Error::NotPerfect => "not_perfect",
            Error::NotPointed(_) => "not_pointed",
            Error::Unbounded(_) => "unbounded",
            Error::Degenerate(_) => "degenerate",
            Error::Lp(_) => "lp_status",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::Overflow(_) => "overflow",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
