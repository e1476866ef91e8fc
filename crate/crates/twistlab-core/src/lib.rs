//! Exact linear algebra over the rationals (and any other exact field).
//!
//! Everything downstream works with dense matrices whose entries form a
//! field. The matrix type is generic over the scalar so that the algorithms
//! are written once; the only instantiation used by the rest of the
//! workspace is [`Rat`], an arbitrary-precision rational. No floating point
//! is involved anywhere: equality is exact and ranks/determinants are
//! computed by fraction-free elimination.

pub mod mat;
pub mod perm;
pub mod vecops;

pub use mat::{Mat, Scalar};
pub use perm::Perm;

/// The field `K` used throughout: arbitrary-precision rationals.
pub type Rat = num::BigRational;

/// A rational matrix, the concrete instantiation used by the higher crates.
pub type QMat = Mat<Rat>;

/// Shorthand for building a rational from an integer pair `p/q`.
///
/// # Panics
/// Panics when `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    assert!(q != 0, "denominator must be nonzero");
    Rat::new(p.into(), q.into())
}

/// Shorthand for an integral rational.
pub fn rint(p: i64) -> Rat {
    Rat::from_integer(p.into())
}

/// Parses a rational from the textual form `p/q` or `p`.
pub fn rat_from_str(s: &str) -> Result<Rat, String> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| format!("invalid rational {s:?}: {e}"))
}

/// Formats a rational as `p/q`, or `p` when the denominator is one.
pub fn rat_to_string(r: &Rat) -> String {
    r.to_string()
}
