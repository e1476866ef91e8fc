//! Standard idempotent 0,1-matrices and the `c_k` map.
//!
//! A *standard* idempotent 0,1-matrix is one of the block form
//!
//! ```text
//! ┌ Id_r  0 ┐
//! └  C    0 ┘        r ≥ 1, C with exactly one 1 in each row,
//! ```
//!
//! and a square 0,1-matrix is *equivalent* to such a block form via identical
//! row and column permutations exactly when it has one nonzero entry in each
//! row and every vanishing diagonal entry sits in a zero column.  These are
//! precisely the matrices of idempotent self-maps `c` of `{1..n}`: row `k`
//! is the basis row `e_{c(k)}`, and the diagonal ones mark the fixed points.
//! For a non-fixed row `k` the image `c_k` is the unique column carrying its
//! one, and `c_k` is itself fixed.

use num_traits::{One, Zero};
use twistlab_core::QMat;

/// The per-row predicates of a square 0,1-matrix with row sums one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Std01Report {
    /// Whether the matrix literally has the standard block form.
    pub is_standard_01: bool,
    /// Whether it is equivalent to the block form via identical permutations.
    pub equiv_to_standard_01: bool,
    /// `c[k-1] = Some(c_k)` exactly when the diagonal entry of row `k` is
    /// zero; then the single one of row `k` is in column `c_k` (1-based).
    pub c: Vec<Option<usize>>,
}

fn check_row_stochastic_01(m: &QMat) -> Result<(), String> {
    if !m.is_square() {
        return Err(format!("matrix must be square, got {}x{}", m.rows(), m.cols()));
    }
    if !m.is_zero_one() {
        return Err("matrix has an entry outside {0,1}".to_string());
    }
    for r in 0..m.rows() {
        if !m.row_sum(r).is_one() {
            return Err(format!("row {} must sum to 1", r + 1));
        }
    }
    Ok(())
}

/// Whether `M` is a standard idempotent 0,1-matrix: the block form
/// `[[Id_r, 0], [C, 0]]` with `r ≥ 1` and exactly one 1 per row of `C`.
pub fn is_standard_01(m: &QMat) -> bool {
    if !m.is_square() || !m.is_zero_one() {
        return false;
    }
    let n = m.rows();
    // The leading identity block is forced: r is the run of identity rows.
    let mut r = 0;
    while r < n
        && (0..n).all(|c| {
            if c == r {
                m[(r, c)].is_one()
            } else {
                m[(r, c)].is_zero()
            }
        })
    {
        r += 1;
    }
    if r == 0 {
        return false;
    }
    // Every remaining row carries a single one, inside the first r columns.
    (r..n).all(|row| {
        let mut ones = (0..n).filter(|&c| !m[(row, c)].is_zero());
        matches!((ones.next(), ones.next()), (Some(c), None) if c < r)
    })
}

/// Whether `M` is equivalent, via identical row and column permutations, to a
/// standard idempotent 0,1-matrix: entries in `{0,1}`, exactly one nonzero in
/// each row, and every `j` with `M_{jj} = 0` has a zero column.
pub fn equiv_to_standard_01(m: &QMat) -> bool {
    if !m.is_square() || !m.is_zero_one() {
        return false;
    }
    let n = m.rows();
    for row in 0..n {
        if (0..n).filter(|&c| !m[(row, c)].is_zero()).count() != 1 {
            return false;
        }
    }
    (0..n).all(|j| !m[(j, j)].is_zero() || (0..n).all(|row| m[(row, j)].is_zero()))
}

/// The 1-based rows of a square matrix with a one on the diagonal,
/// `J = {k : M_{kk} = 1}`.
pub fn fixed_rows(m: &QMat) -> Vec<usize> {
    assert!(m.is_square(), "fixed_rows of a non-square matrix");
    (1..=m.rows()).filter(|&k| m[(k - 1, k - 1)].is_one()).collect()
}

/// The index `c_k` (1-based): the column of the single one in row `k`, for a
/// square 0,1-matrix with row sums one and `M_{kk} = 0`.
pub fn c_index(m: &QMat, k: usize) -> Result<usize, String> {
    check_row_stochastic_01(m)?;
    let n = m.rows();
    if !(1..=n).contains(&k) {
        return Err(format!("row index {k} out of range for a {n}x{n} matrix"));
    }
    if m[(k - 1, k - 1)].is_one() {
        return Err(format!("c_{k} is undefined: row {k} has a one on the diagonal"));
    }
    let j = (0..n).find(|&c| m[(k - 1, c)].is_one()).expect("row sums to one");
    Ok(j + 1)
}

/// Bundles the standardness predicates and the `c` map of a square 0,1-matrix
/// with row sums one; errors when the input is outside that domain.
pub fn std01_predicates(m: &QMat) -> Result<Std01Report, String> {
    check_row_stochastic_01(m)?;
    let n = m.rows();
    let c = (1..=n)
        .map(|k| {
            if m[(k - 1, k - 1)].is_one() {
                None
            } else {
                Some(c_index(m, k).expect("preconditions checked"))
            }
        })
        .collect();
    Ok(Std01Report {
        is_standard_01: is_standard_01(m),
        equiv_to_standard_01: equiv_to_standard_01(m),
        c,
    })
}
