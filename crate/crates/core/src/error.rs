//! Crate-wide error type.
//!
//! Errors fall into three groups: bad inputs (parse errors, invalid data),
//! violated preconditions (e.g. asking for the residue of an element with a
//! pole), and internal self-check failures. The last group corresponds to
//! facts that hold by theorem; tripping one of those variants means the
//! implementation has a bug, and callers are expected to abort.

use std::fmt;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Text parse failure, with 1-based line/column of the offending input.
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    /// Residue requested for an element with negative valuation.
    #[error("negative valuation: element has a pole at eps = 0")]
    NegativeValuation,

    /// Zero denominator or inverse of zero.
    #[error("division by zero in Q(eps)")]
    DivisionByZero,

    /// An operation that requires an invertible matrix received a singular one.
    #[error("singular matrix")]
    SingularMatrix,

    /// Resultant of a zero polynomial.
    #[error("zero polynomial")]
    ZeroPolynomial,

    /// Two parabolic subgroups with different Levi components where the same
    /// Levi was required.
    #[error("parabolic subgroups have different Levi components")]
    LeviMismatch,

    /// An adjacent pair of parabolic subgroups was required.
    #[error("parabolic subgroups are not adjacent")]
    NotAdjacent,

    /// A root was passed that does not lie in the relevant n ∩ n̄' slice.
    #[error("root ({0}, {1}) does not lie between the given parabolic pair")]
    RootNotInNNbar(usize, usize),

    /// Malformed combinatorial data (blocks not a partition, bad permutation, ...).
    #[error("invalid datum: {0}")]
    InvalidDatum(String),

    /// A matrix that fails the integral regular semisimple requirements.
    #[error("not an integral regular semisimple element: {0}")]
    NotIntegralRss(String),

    /// Invalid enumeration window.
    #[error("invalid enumeration window: {0}")]
    InvalidWindow(String),

    /// Point is not in the affine Springer fiber, but a fiber-only operation
    /// was requested.
    #[error("point does not lie in the affine Springer fiber")]
    NotInFiber,

    /// Block characteristic polynomials share a root; the resultant vanished.
    #[error("block characteristic polynomials are not coprime")]
    CoprimalityViolation,

    /// Internal self-check: the retraction difference was not a non-negative
    /// multiple of beta. This is a proved fact, so hitting it is a bug.
    #[error("internal consistency failure: nu difference {nu:?} is not a non-negative multiple of beta {beta:?}")]
    ProportionalityViolation { nu: Vec<i64>, beta: Vec<i64> },

    /// Internal self-check: a retracted fiber point fell outside the Levi
    /// fiber. Proved impossible, so hitting it is a bug.
    #[error("internal consistency failure: retraction left the Levi fiber")]
    FiberRetractViolation,

    /// Internal self-check: a verified theorem instance failed. Carries a
    /// JSON rendering of the offending certificate.
    #[error("internal consistency failure: theorem check failed on a point: {0}")]
    TheoremViolation(Box<str>),

    /// The Puiseux oracle could not separate or expand roots within its
    /// configured depth / coefficient field.
    #[error("puiseux precision exhausted: {0}")]
    PrecisionExhausted(String),
}

impl Error {
    /// True for the self-check variants that signal an implementation bug
    /// rather than bad input. The CLI maps these to a distinct exit status.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::ProportionalityViolation { .. }
                | Error::FiberRetractViolation
                | Error::TheoremViolation(_)
        )
    }
}

/// Helper for parse errors: compute line/column from a byte offset.
pub(crate) fn parse_error(input: &str, offset: usize, msg: impl fmt::Display) -> Error {
    let clamped = offset.min(input.len());
    let mut line = 1;
    let mut col = 1;
    for ch in input[..clamped].chars() {
        if ch == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    Error::Parse { line, col, msg: msg.to_string() }
}
