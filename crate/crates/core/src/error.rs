use crate::group::Parity;

/// Errors raised by the word algebra, the class enumerators and the estimators.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("Hecke parameter p must satisfy 3 <= p <= {max} (got {p})")]
    InvalidP { p: u64, max: u32 },

    #[error("operation is undefined on the identity element")]
    IdentityInput,

    #[error("expected a hyperbolic-shape cyclic word, got a torsion word")]
    TorsionInput,

    #[error("{what} requires {expected} p (got p = {p})")]
    ParityMismatch {
        what: &'static str,
        expected: Parity,
        p: u32,
    },

    #[error("class `{0}` is not reciprocal")]
    NotReciprocal(String),

    #[error("no reciprocal classes of length at most {0}")]
    EmptyCount(u32),

    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("invalid exponent tuple: {0}")]
    InvalidTuple(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
