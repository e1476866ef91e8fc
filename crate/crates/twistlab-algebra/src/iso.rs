//! The presentation of a standard twisted algebra by its quiver.
//!
//! A standard twisting map's algebra is the radical-square-zero quotient
//! `K(Q)/⟨Q_1²⟩` of the path algebra of its quiver.  The witnessing map φ
//! sends a vertex `(j,l)` to `x_{jl}` plus the sum of the cells of the
//! arrows targeting `(j,l)`, and an arrow `α_{jl}` to `x_{jl}`; this module
//! rebuilds φ and certifies it is a unital algebra isomorphism.

use crate::table::{build_algebra, TwistedAlgebra};
use num_traits::Zero;
use twistlab_core::{Mat, Rat};
use twistlab_standard::{is_standard, quiver_of, StandardQuiver};
use twistlab_twistmap::TwistingFamily;

/// A basis element of the quotient path algebra `K(Q)/⟨Q_1²⟩`.
#[derive(Clone, Copy, PartialEq, Eq)]
enum PathCell {
    Vertex(usize, usize),
    Arrow(usize, usize),
}

fn phi(alg: &TwistedAlgebra, q: &StandardQuiver, cell: PathCell) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); alg.dim()];
    match cell {
        PathCell::Vertex(j, l) => {
            v[alg.index(j, l)] = Rat::from_integer(1.into());
            for (&(j2, l2), _) in q.arrows() {
                if q.target(j2, l2) == Some((j, l)) {
                    v[alg.index(j2, l2)] = Rat::from_integer(1.into());
                }
            }
        }
        PathCell::Arrow(j, l) => {
            v[alg.index(j, l)] = Rat::from_integer(1.into());
        }
    }
    v
}

/// The product of two basis elements in `K(Q)/⟨Q_1²⟩`, as a scalar multiple
/// of a basis element (or zero): paths compose left to right, so a vertex
/// absorbs an arrow whose source it is, and products of arrows vanish.
fn quotient_product(q: &StandardQuiver, x: PathCell, y: PathCell) -> Option<PathCell> {
    match (x, y) {
        (PathCell::Vertex(a, b), PathCell::Vertex(c, d)) => {
            if (a, b) == (c, d) {
                Some(x)
            } else {
                None
            }
        }
        (PathCell::Vertex(a, b), PathCell::Arrow(j, l)) => {
            (q.source(j, l) == Some((a, b))).then_some(y)
        }
        (PathCell::Arrow(j, l), PathCell::Vertex(a, b)) => {
            (q.target(j, l) == Some((a, b))).then_some(x)
        }
        (PathCell::Arrow(..), PathCell::Arrow(..)) => None,
    }
}

/// Whether the twisted algebra of a standard map is presented by its quiver:
/// φ must be linear-bijective, multiplicative against the quotient path
/// algebra, and send the sum of the vertices to the unit.
///
/// Errors when the family is not standard (column criterion) or when the
/// quiver cannot be constructed.
pub fn quiver_algebra_iso_check(f: &TwistingFamily) -> Result<bool, String> {
    if !is_standard(f) {
        return Err("the family is not standard, so the quiver presentation does not apply"
            .to_string());
    }
    let q = quiver_of(f)?;
    let alg = build_algebra(f);
    let basis: Vec<PathCell> = q
        .vertices()
        .iter()
        .map(|&(j, l)| PathCell::Vertex(j, l))
        .chain(q.arrows().keys().map(|&(j, l)| PathCell::Arrow(j, l)))
        .collect();
    let images: Vec<Vec<Rat>> = basis.iter().map(|&c| phi(&alg, &q, c)).collect();

    // φ is a linear bijection of the nm-dimensional spaces.
    if basis.len() != alg.dim() || Mat::from_rows(images.clone()).rank() != alg.dim() {
        return Ok(false);
    }
    // φ sends the sum of the vertices (the unit of the quotient) to the unit.
    let mut vertex_sum = vec![Rat::zero(); alg.dim()];
    for (cell, img) in basis.iter().zip(&images) {
        if matches!(cell, PathCell::Vertex(..)) {
            for (acc, x) in vertex_sum.iter_mut().zip(img) {
                *acc += x;
            }
        }
    }
    if vertex_sum != alg.unit() {
        return Ok(false);
    }
    // φ turns the quotient products into table products.
    for (&x, ix) in basis.iter().zip(&images) {
        for (&y, iy) in basis.iter().zip(&images) {
            let got = alg.multiply(ix, iy);
            let expected = match quotient_product(&q, x, y) {
                None => vec![Rat::zero(); alg.dim()],
                Some(z) => {
                    let at = basis.iter().position(|&c| c == z).expect("product in basis");
                    images[at].clone()
                }
            };
            if got != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::a_family;
    use twistlab_core::rint;

    #[test]
    fn flip_algebra_is_its_quiver_quotient() {
        assert_eq!(quiver_algebra_iso_check(&TwistingFamily::flip(3, 2)), Ok(true));
        assert_eq!(quiver_algebra_iso_check(&TwistingFamily::flip(1, 4)), Ok(true));
    }

    #[test]
    fn degenerate_family_members_are_presented_by_their_quivers() {
        assert_eq!(quiver_algebra_iso_check(&a_family(rint(0))), Ok(true));
        assert_eq!(quiver_algebra_iso_check(&a_family(rint(1))), Ok(true));
    }

    #[test]
    fn non_standard_input_is_rejected() {
        let err = quiver_algebra_iso_check(&a_family(rint(2))).unwrap_err();
        assert!(err.contains("not standard"), "unexpected message: {err}");
    }

    #[test]
    fn standard_columns_without_twisting_fail_the_check() {
        // Dropping the off-diagonal −1 from A(2,1) of the a = 0 family keeps
        // every column standard and the quiver constructible, but the grid is
        // no longer a twisting map: φ(v2)·φ(v1) becomes x_{11} instead of 0.
        let zero = a_family(rint(0));
        let mutant = TwistingFamily::from_fn(2, 2, |i, l| {
            if (i, l) == (2, 1) {
                crate::fixtures::qm(&[&[1, 0], &[0, 0]])
            } else {
                zero.a(i, l).clone()
            }
        })
        .unwrap();
        assert!(is_standard(&mutant));
        assert!(!mutant.verify().is_twisting);
        assert_eq!(quiver_algebra_iso_check(&mutant), Ok(false));
    }
}
