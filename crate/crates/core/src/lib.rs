//! Exact-arithmetic computations on the affine Grassmannian of GL(n) over
//! the Laurent series field F = C((eps)).
//!
//! The crate computes, with no floating point anywhere:
//!
//! * canonical coset normal forms for points of X = GL(n, F)/GL(n, O);
//! * Iwasawa factorizations g = n·m·k and the retractions r_P : X -> X_M;
//! * the non-negative integers n(x, P, P') attached to adjacent parabolic
//!   pairs by the retraction differences, and their valuation-theoretic
//!   bounds n(u, P, P') computed from resultants of block characteristic
//!   polynomials;
//! * affine Springer fiber membership, residue conjugacy classes, and point
//!   regularity for integral regular semisimple u;
//! * a verification harness that sweeps fiber points and checks the
//!   inequality n(x, P, P') <= n(u, P, P') together with the regularity
//!   criterion, emitting machine-readable certificates.
//!
//! Scalars live in Q and in the rational-function field Q(eps) ⊂ F, so every
//! valuation, residue and normal form is exact.

pub mod error;
pub mod exactfield;
pub mod grassmann;
pub mod polylinalg;
pub mod randgen;
pub mod rootcomb;

pub use error::{Error, Result};
