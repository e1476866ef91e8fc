//! Standard twisting maps of `K^m` with `K^n`.
//!
//! A column `l` of a twisting family is *standard* when its diagonal block
//! `A(l,l)` is a 0,1-matrix and every other block of the column is supported
//! inside `Supp A(l,l) ∪ Supp Id`; a twisting map is *standard* when all of
//! its columns are.  Standard maps are rigid combinatorial objects: they are
//! classified by pairs of compatible families of idempotent 0,1-matrices, or
//! equivalently by quivers on the grid `{1..n} × {1..m}` with one arrow for
//! each non-vertex cell.  This crate implements the predicates, the two
//! constructions and their mutual inverses, exhaustive enumeration for small
//! `(m,n)`, orbit classification under relabelling, and the `n = 2`
//! quiver-with-coloration correspondence.

mod build;
mod cibils;
mod classify;
mod enumerate;
mod quiver;
mod std01;

pub use build::{build_standard, check_standard_map};
pub use cibils::{cibils_build, cibils_extract, CibilsData};
pub use classify::{classify, ClassEntry, ClassificationReport};
pub use enumerate::{brute_force_standard, enumerate_standard, enumerate_standard_threaded};
pub use quiver::{quiver_of, quiver_to_standard, StandardQuiver};
pub use std01::{
    c_index, equiv_to_standard_01, fixed_rows, is_standard_01, std01_predicates, Std01Report,
};

use num_traits::{One, Zero};
use std::collections::BTreeSet;
use twistlab_twistmap::TwistingFamily;

/// The fixed-row data of one column of a twisting family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnSets {
    /// `j_sets[i-1]` is `J_i(l) = {j : A(i,l)_{jj} = 1}`; for a standard
    /// column this is also the fixed set `F(A(i,l))`.
    pub j_sets: Vec<BTreeSet<usize>>,
    /// `F_0(𝒜,l) = {k : A(i,l)_{kj} = δ_{il}δ_{kj} for all i, j}` — the rows
    /// on which the whole column acts like the flip.
    pub f0: BTreeSet<usize>,
}

/// Computes `J_i(l)` for every `i` together with `F_0(𝒜,l)` (1-based `l`).
pub fn column_sets(f: &TwistingFamily, l: usize) -> Result<ColumnSets, String> {
    let (m, n) = (f.m(), f.n());
    if !(1..=m).contains(&l) {
        return Err(format!("column {l} out of range for m = {m}"));
    }
    let j_sets = (1..=m)
        .map(|i| {
            let a = f.a(i, l);
            (1..=n).filter(|&j| a[(j - 1, j - 1)].is_one()).collect()
        })
        .collect();
    let f0 = (1..=n)
        .filter(|&k| {
            (1..=m).all(|i| {
                let a = f.a(i, l);
                (1..=n).all(|j| {
                    let entry = &a[(k - 1, j - 1)];
                    if i == l && k == j {
                        entry.is_one()
                    } else {
                        entry.is_zero()
                    }
                })
            })
        })
        .collect();
    Ok(ColumnSets { j_sets, f0 })
}

/// Whether column `l` of the family is standard: `A(l,l)` is a 0,1-matrix
/// and `Supp A(i,l) ⊆ Supp A(l,l) ∪ Supp Id` for every `i`.
pub fn is_standard_column(f: &TwistingFamily, l: usize) -> Result<bool, String> {
    let (m, n) = (f.m(), f.n());
    if !(1..=m).contains(&l) {
        return Err(format!("column {l} out of range for m = {m}"));
    }
    let d = f.a(l, l);
    if !d.is_zero_one() {
        return Ok(false);
    }
    for i in 1..=m {
        let a = f.a(i, l);
        for r in 0..n {
            for c in 0..n {
                if !a[(r, c)].is_zero() && r != c && d[(r, c)].is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Whether every column of the family is standard.
pub fn is_standard(f: &TwistingFamily) -> bool {
    (1..=f.m()).all(|l| is_standard_column(f, l).expect("column index in range"))
}


#[cfg(test)]
mod tests {
    use super::fixtures::{a_family, qm};
    use super::*;
    use twistlab_core::{rat, rint, QMat};

    #[test]
    fn flip_columns_are_standard_and_flip_like() {
        let f = TwistingFamily::flip(3, 2);
        assert!(is_standard(&f));
        for l in 1..=3 {
            let sets = column_sets(&f, l).unwrap();
            assert_eq!(sets.f0, (1..=2).collect());
            for i in 1..=3 {
                let expected: BTreeSet<usize> =
                    if i == l { (1..=2).collect() } else { BTreeSet::new() };
                assert_eq!(sets.j_sets[i - 1], expected);
            }
        }
        assert!(column_sets(&f, 4).is_err());
        assert!(is_standard_column(&f, 0).is_err());
    }

    #[test]
    fn a_family_standard_exactly_at_zero_and_one() {
        assert!(is_standard(&a_family(rint(0))));
        assert!(is_standard(&a_family(rint(1))));
        assert!(!is_standard(&a_family(rint(2))));
        assert!(!is_standard(&a_family(rat(1, 2))));
        // At a = 2 the diagonal blocks already fail the 0,1 test.
        assert!(!is_standard_column(&a_family(rint(2)), 1).unwrap());
    }

    #[test]
    fn a_family_column_sets_at_zero() {
        let f = a_family(rint(0));
        // A(1,1) = [[0,1],[0,1]], A(2,1) = [[1,-1],[0,0]].
        let col1 = column_sets(&f, 1).unwrap();
        assert_eq!(col1.j_sets[0], BTreeSet::from([2]));
        assert_eq!(col1.j_sets[1], BTreeSet::from([1]));
        assert_eq!(col1.f0, BTreeSet::from([2]));
        let col2 = column_sets(&f, 2).unwrap();
        assert_eq!(col2.j_sets[0], BTreeSet::from([2]));
        assert_eq!(col2.j_sets[1], BTreeSet::from([1]));
        assert_eq!(col2.f0, BTreeSet::from([1]));
    }

    #[test]
    fn support_condition_is_checked_off_diagonal() {
        // Diagonal block 0,1, but an off-diagonal block supported outside it.
        let a11 = qm(vec![vec![1, 0], vec![1, 0]]);
        let a21 = qm(vec![vec![0, 0], vec![0, 1]]); // (2,2) is diagonal: fine
        let bad21 = qm(vec![vec![0, 1], vec![0, 0]]); // (1,2) not in Supp A(1,1)
        let id = QMat::identity(2);
        let zero = QMat::zeros(2, 2);
        let ok = TwistingFamily::new(
            2,
            2,
            vec![vec![a11.clone(), zero.clone()], vec![a21, id.clone()]],
        )
        .unwrap();
        assert!(is_standard_column(&ok, 1).unwrap());
        let bad = TwistingFamily::new(2, 2, vec![vec![a11, zero], vec![bad21, id]]).unwrap();
        assert!(!is_standard_column(&bad, 1).unwrap());
    }
}
