//! Exact-arithmetic toolkit for Gauss-type invariants of piecewise-linear
//! link maps and ornaments.
//!
//! Everything reduces to a signed count of solutions of affine
//! coincidence/ray constraint systems over simplicial complexes:
//!
//! * [`exactgeom`] - rational points, oriented complexes, PL maps and their
//!   combinatorial constructions;
//! * [`coincidence`] - the signed-count engine and the exact emptiness
//!   checker;
//! * [`invariants`] - linking number, the ornament invariant, the triple
//!   mu-invariant and its double-degree form, and the beta family;
//! * [`constructions`] - builders for the canonical example scenes.
//!
//! The core is generic over the [`scalar::Scalar`] coordinate field; the
//! concrete alias [`Rat`] (arbitrary-precision rationals) is what builders,
//! invariants and the CLI use. There is no floating-point path anywhere.

pub mod coincidence;
pub mod constructions;
pub mod exactgeom;
pub mod invariants;
pub mod linalg;
pub mod scalar;

pub use scalar::{int, rat, Rat, Scalar};
