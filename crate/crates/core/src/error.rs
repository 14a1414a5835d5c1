use thiserror::Error;

/// Errors produced by the library.
///
/// The variants split into three families that the command-line front end
/// maps onto distinct exit codes: malformed input, exceeded size guards, and
/// internal-consistency failures (an oracle disagreeing with the engine).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("variable index {index} out of range 1..={n}")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("prime component is empty (the unit ideal is not prime)")]
    UnitPrime,

    #[error("operation requires a proper nonzero ideal, got the {0} ideal")]
    DegenerateIdeal(&'static str),

    #[error("operation requires a non-void simplicial complex")]
    VoidComplex,

    #[error("size guard exceeded: {what} = {value} > {limit} (use --force to override)")]
    GuardExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl Error {
    /// True for failures of the engine itself, as opposed to bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Inconsistent(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
