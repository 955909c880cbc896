//! Exact arithmetic in Q and in the rational-function field Q(eps), viewed
//! inside the Laurent series field F = C((eps)).
//!
//! The coefficient field is Q rather than C: every construction downstream
//! (valuations, residues, normal forms) is rational, so exact arithmetic over
//! Q exhibits the same phenomena with no precision management. F itself is
//! modeled by its subfield Q(eps) of rational functions, which is closed
//! under every matrix operation used here and carries an exact eps-adic
//! valuation.

mod epspoly;
mod fieldelem;
pub(crate) mod parse;

pub use epspoly::{rat, EpsPoly};
pub use fieldelem::{FieldElem, Valuation};
pub use parse::{parse_rational_text, rational_to_text};

/// Exact rational scalar; arbitrary-precision numerator and positive
/// denominator in lowest terms (maintained by `num_rational`).
pub type Rational = num_rational::BigRational;
