//! The twisted algebra `K^n (x) K^m` of a twisting family.
//!
//! The twisted tensor product is spanned by the cells
//! `x_{jl} = (f_j (x) 1)(1 (x) e_l)`, and the whole multiplication collapses
//! to one scalar per pair of cells: `x_{ki} x_{jl} = A(i,l)_{kj} x_{kl}`.
//! This crate materialises that table, the matrix representations `ρ_u` and
//! `ρ̃_v` attached to the columns of either tensor factor, the Jacobson
//! radical (closed form on quasi-standard maps, guarded monomial-ideal
//! search in general), and the certification that a standard map's algebra
//! is the radical-square-zero quotient of its quiver's path algebra.

mod iso;
mod radical;
mod rep;
mod span;
mod table;

#[cfg(test)]
pub(crate) mod fixtures;

pub use iso::quiver_algebra_iso_check;
pub use radical::{jacobson_radical, RadicalReport, RADICAL_GUARD};
pub use rep::{rep_image_dim, representation, Representation, Side};
pub use table::{build_algebra, check_unital_associative, TwistedAlgebra};
