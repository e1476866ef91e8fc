//! Shared fixtures for the unit tests of this crate.

use twistlab_core::{Mat, QMat, Rat};
use twistlab_twistmap::TwistingFamily;

pub fn qm(rows: &[&[i64]]) -> QMat {
    Mat::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| twistlab_core::rint(x)).collect())
            .collect(),
    )
}

/// The one-parameter twisting family of K² with K²: standard exactly at
/// a ∈ {0,1}, semisimple twisted algebra otherwise.
pub fn a_family(a: Rat) -> TwistingFamily {
    let one = Rat::from_integer(1.into());
    let a11 = Mat::from_rows(vec![
        vec![a.clone(), one.clone() - a.clone()],
        vec![a.clone(), one.clone() - a.clone()],
    ]);
    let a22 = Mat::from_rows(vec![
        vec![one.clone() - a.clone(), a.clone()],
        vec![one.clone() - a.clone(), a.clone()],
    ]);
    let a21 = QMat::identity(2).sub(&a11);
    let a12 = QMat::identity(2).sub(&a22);
    TwistingFamily::new(2, 2, vec![vec![a11, a12], vec![a21, a22]]).unwrap()
}

/// A verified standard twisting map of K³ with K² witnessing that the B-side
/// images must be transposed: at v = 2 the pair x_12 · x_11 = x_11 breaks
/// the straight multiplication law for both untransposed assignments
/// `B(j,v) E^{ll}` and `E^{ll} B(j,v)`.
pub fn b_side_counterexample() -> TwistingFamily {
    TwistingFamily::new(
        3,
        2,
        vec![
            vec![
                qm(&[&[0, 1], &[0, 1]]),
                qm(&[&[0, 0], &[-1, 1]]),
                qm(&[&[0, 0], &[-1, 1]]),
            ],
            vec![
                qm(&[&[1, -1], &[0, 0]]),
                qm(&[&[1, 0], &[1, 0]]),
                QMat::zeros(2, 2),
            ],
            vec![
                QMat::zeros(2, 2),
                QMat::zeros(2, 2),
                qm(&[&[1, 0], &[1, 0]]),
            ],
        ],
    )
    .unwrap()
}

/// A grid that is not a twisting map and whose table is visibly
/// non-associative: (x_22 x_11) x_12 = 0 yet x_22 (x_11 x_12) = x_22.
pub fn non_associative_family() -> TwistingFamily {
    TwistingFamily::new(
        2,
        2,
        vec![
            vec![qm(&[&[1, 0], &[1, 0]]), QMat::identity(2)],
            vec![qm(&[&[0, 1], &[0, 1]]), qm(&[&[0, 1], &[1, 0]])],
        ],
    )
    .unwrap()
}
