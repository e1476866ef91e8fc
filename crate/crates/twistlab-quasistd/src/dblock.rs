//! D-blocks of a column and the quasi-standard predicate.

use num_traits::{One, Zero};
use std::collections::BTreeSet;
use twistlab_core::QMat;
use twistlab_twistmap::TwistingFamily;

/// Selects the block `D^{uv}_{(i,l0)} = A(i,l0)|_{J_u × J_v}` of column
/// `l0`, where `J_w = J_w(l0) = {k : A(w,l0)_{kk} = 1}` (all indices
/// 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DBlockIndex {
    pub i: usize,
    pub l0: usize,
    pub u: usize,
    pub v: usize,
}

/// The J-sets of column `l0`, demanding that they partition `{1..n}`: every
/// diagonal entry of the column must be 0 or 1, and each row index must
/// carry exactly one diagonal 1 across the column's blocks.
pub(crate) fn partition_j_sets(
    f: &TwistingFamily,
    l0: usize,
) -> Result<Vec<BTreeSet<usize>>, String> {
    let (m, n) = (f.m(), f.n());
    if !(1..=m).contains(&l0) {
        return Err(format!("column {l0} out of range for m = {m}"));
    }
    let mut j_sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m];
    for k in 1..=n {
        let mut owners = Vec::new();
        for i in 1..=m {
            let e = &f.a(i, l0)[(k - 1, k - 1)];
            if e.is_one() {
                owners.push(i);
            } else if !e.is_zero() {
                return Err(format!(
                    "A({i},{l0})_{{{k},{k}}} = {e} is not 0 or 1, so the J-sets \
                     of column {l0} are undefined"
                ));
            }
        }
        match owners[..] {
            [i] => {
                j_sets[i - 1].insert(k);
            }
            [] => {
                return Err(format!(
                    "row {k} lies in no J-set of column {l0}: the J-sets do \
                     not partition {{1..{n}}}"
                ))
            }
            [i, i2, ..] => {
                return Err(format!(
                    "row {k} lies in both J_{i} and J_{i2} of column {l0}: \
                     the J-sets do not partition {{1..{n}}}"
                ))
            }
        }
    }
    Ok(j_sets)
}

/// The submatrix `D^{uv}_{(i,l0)} = A(i,l0)|_{J_u × J_v}`, rows and columns
/// in increasing index order.  Requires the J-sets of column `l0` to
/// partition `{1..n}` (a consequence of the diagonal entries being 0 or 1
/// on a column whose blocks sum to the identity).
pub fn d_block(f: &TwistingFamily, idx: DBlockIndex) -> Result<QMat, String> {
    let m = f.m();
    for (name, val) in [("i", idx.i), ("u", idx.u), ("v", idx.v)] {
        if !(1..=m).contains(&val) {
            return Err(format!("index {name} = {val} out of range for m = {m}"));
        }
    }
    let j_sets = partition_j_sets(f, idx.l0)?;
    let rows: Vec<usize> = j_sets[idx.u - 1].iter().copied().collect();
    let cols: Vec<usize> = j_sets[idx.v - 1].iter().copied().collect();
    let a = f.a(idx.i, idx.l0);
    Ok(QMat::from_fn(rows.len(), cols.len(), |r, c| {
        a[(rows[r] - 1, cols[c] - 1)].clone()
    }))
}

/// Whether column `l0` of `f` is quasi-standard; with `column = None`,
/// whether every column is.
///
/// A column is quasi-standard when its diagonal block is a 0,1-matrix whose
/// rows each carry exactly one 1 (so the column function `c` is total, with
/// `c_k = k` on fixed rows), every diagonal entry of the column is 0 or 1,
/// the blocks `D^{uv}_{(i)} = A(i,l0)|_{J_u × J_v}` vanish for `u ≠ i` and
/// `v ∉ {i, l0}`, and for `v ≠ l0` each row of each block has at most one
/// nonzero entry, sitting in a column `d` with `c_d = c_k`.  On columns of
/// a pre-twisting the block-vanishing and support conditions are equivalent
/// to their usual simplified forms that only constrain `D^{uv}_{(v)}` for
/// `u, v ≠ l0`.
///
/// Total predicate: out-of-range columns are simply not quasi-standard.
pub fn is_quasi_standard(f: &TwistingFamily, column: Option<usize>) -> bool {
    match column {
        Some(l0) => (1..=f.m()).contains(&l0) && quasi_standard_column(f, l0),
        None => (1..=f.m()).all(|l0| quasi_standard_column(f, l0)),
    }
}

fn quasi_standard_column(f: &TwistingFamily, l0: usize) -> bool {
    let (m, n) = (f.m(), f.n());
    let diag = f.a(l0, l0);
    if !diag.is_zero_one() {
        return false;
    }
    // The support conditions speak of c_k(A(l0,l0)), the unique column
    // holding the 1 of row k; rows fixed by the diagonal block get c_k = k.
    let mut c = vec![0usize; n];
    for k in 0..n {
        let ones: Vec<usize> = (0..n).filter(|&j| !diag[(k, j)].is_zero()).collect();
        match ones[..] {
            [j] => c[k] = j + 1,
            _ => return false,
        }
    }
    // Diagonal entries of every block in the column are 0 or 1; J_i collects
    // the rows where A(i,l0) has a diagonal 1.
    let mut j_sets: Vec<Vec<usize>> = vec![Vec::new(); m];
    for i in 1..=m {
        let a = f.a(i, l0);
        for k in 1..=n {
            let e = &a[(k - 1, k - 1)];
            if !e.is_zero() && !e.is_one() {
                return false;
            }
            if e.is_one() {
                j_sets[i - 1].push(k);
            }
        }
    }
    // D_(i)^{uv} = 0 whenever u ≠ i and v ∉ {i, l0}.
    for i in 1..=m {
        let a = f.a(i, l0);
        for (u, rows) in j_sets.iter().enumerate() {
            if u + 1 == i {
                continue;
            }
            for (v, cols) in j_sets.iter().enumerate() {
                if v + 1 == i || v + 1 == l0 {
                    continue;
                }
                for &k in rows {
                    for &j in cols {
                        if !a[(k - 1, j - 1)].is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
    }
    // Rows of D_(i)^{uv} for v ≠ l0 have at most one nonzero entry, and that
    // entry sits in a column with the same c-value as its row.
    for i in 1..=m {
        let a = f.a(i, l0);
        for rows in &j_sets {
            for (v, cols) in j_sets.iter().enumerate() {
                if v + 1 == l0 {
                    continue;
                }
                for &k in rows {
                    let supp: Vec<usize> = cols
                        .iter()
                        .copied()
                        .filter(|&d| !a[(k - 1, d - 1)].is_zero())
                        .collect();
                    match supp[..] {
                        [] => {}
                        [d] => {
                            if c[d - 1] != c[k - 1] {
                                return false;
                            }
                        }
                        _ => return false,
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{prop82_embedded, qm, row20, row82, sumtr6_222};
    use twistlab_core::{rat, rint, Mat};
    use twistlab_standard::is_standard;

    #[test]
    fn flip_and_standard_maps_are_quasi_standard() {
        for f in [
            TwistingFamily::flip(2, 2),
            TwistingFamily::flip(3, 4),
            row20(),
        ] {
            assert!(is_standard(&f));
            assert!(is_quasi_standard(&f, None));
            for l in 1..=f.m() {
                assert!(is_quasi_standard(&f, Some(l)));
            }
        }
    }

    #[test]
    fn row82_is_quasi_standard_but_not_standard() {
        let f = row82();
        assert!(f.verify().is_twisting);
        assert!(is_quasi_standard(&f, None));
        assert!(!is_standard(&f));
    }

    #[test]
    fn out_of_range_column_is_not_quasi_standard() {
        let f = TwistingFamily::flip(2, 2);
        assert!(!is_quasi_standard(&f, Some(0)));
        assert!(!is_quasi_standard(&f, Some(3)));
    }

    #[test]
    fn prop82_embedded_family_is_nowhere_quasi_standard() {
        let f = prop82_embedded();
        assert!(f.verify().is_twisting);
        for l in 1..=3 {
            assert!(!is_quasi_standard(&f, Some(l)), "column {l}");
        }
        // Column 1 fails the diagonal-entry condition already.
        assert_eq!(f.a(2, 1)[(1, 1)], rint(2));
    }

    #[test]
    fn fractional_diagonals_are_rejected() {
        // The one-parameter (2,2) family at a = 1/2 has diagonal entries 1/2.
        let a = rat(1, 2);
        let one = rint(1);
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
        let f = TwistingFamily::new(2, 2, vec![vec![a11, a12], vec![a21, a22]]).unwrap();
        assert!(f.verify().is_twisting);
        assert!(!is_quasi_standard(&f, None));
        assert!(d_block(
            &f,
            DBlockIndex { i: 1, l0: 1, u: 1, v: 2 }
        )
        .is_err());
    }

    #[test]
    fn quasi_standardness_is_self_dual() {
        for f in [
            TwistingFamily::flip(3, 2),
            row20(),
            row82(),
            prop82_embedded(),
            sumtr6_222(rint(2), 1),
            sumtr6_222(rint(2), 2),
            sumtr6_222(rat(1, 2), 1),
        ] {
            assert_eq!(
                is_quasi_standard(&f, None),
                is_quasi_standard(&f.dual(), None)
            );
        }
    }

    #[test]
    fn d_blocks_of_row20_column_2() {
        let f = row20();
        // J-sets of column 2: J_1 = {3}, J_2 = {1,2}, J_3 = ∅.
        let j = partition_j_sets(&f, 2).unwrap();
        assert_eq!(j[0], BTreeSet::from([3]));
        assert_eq!(j[1], BTreeSet::from([1, 2]));
        assert!(j[2].is_empty());
        let d12 = d_block(&f, DBlockIndex { i: 1, l0: 2, u: 1, v: 2 }).unwrap();
        assert_eq!(d12, qm(vec![vec![0, -1]]));
        let d22 = d_block(&f, DBlockIndex { i: 2, l0: 2, u: 2, v: 2 }).unwrap();
        assert_eq!(d22, QMat::identity(2));
        let empty = d_block(&f, DBlockIndex { i: 1, l0: 2, u: 3, v: 2 }).unwrap();
        assert_eq!(empty.rows(), 0);
        assert_eq!(empty.cols(), 2);
    }

    #[test]
    fn diagonal_d_blocks_are_identities_off_l0() {
        // In a quasi-standard column, D^{uu}_{(u)} = Id for u ≠ l0.
        for f in [row20(), row82()] {
            for l0 in 1..=f.m() {
                let j = partition_j_sets(&f, l0).unwrap();
                for u in 1..=f.m() {
                    if u == l0 {
                        continue;
                    }
                    let d = d_block(&f, DBlockIndex { i: u, l0, u, v: u }).unwrap();
                    assert_eq!(d, QMat::identity(j[u - 1].len()));
                }
            }
        }
    }

    #[test]
    fn standard_columns_have_vanishing_off_blocks() {
        // D^{uv}_{(i)} = 0 for u ≠ i, v ∉ {i, l0} in a standard column.
        let f = row20();
        for l0 in 1..=3 {
            for i in 1..=3 {
                for u in 1..=3 {
                    for v in 1..=3 {
                        if u == i || v == i || v == l0 {
                            continue;
                        }
                        let d = d_block(&f, DBlockIndex { i, l0, u, v }).unwrap();
                        assert!(d.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn d_block_index_range_errors() {
        let f = row20();
        assert!(d_block(&f, DBlockIndex { i: 4, l0: 1, u: 1, v: 1 }).is_err());
        assert!(d_block(&f, DBlockIndex { i: 1, l0: 5, u: 1, v: 1 }).is_err());
    }
}
