//! Dense matrices over an exact field, with fraction-free rank/determinant.

use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Div, Index, IndexMut, Neg, Sub};

/// Scalars the matrix algorithms work over: an exact field.
///
/// The bound set is what Gaussian/Bareiss elimination needs — ring
/// operations, exact division and exact equality. `num::BigRational`
/// satisfies it; so does any other exact field type.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Neg<Output = T>
        + Sub<Output = T>
        + Div<Output = T>
{
}

/// A dense `rows × cols` matrix in row-major order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    /// The zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, entries: vec![T::zero(); rows * cols] }
    }

    /// The identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// The basis matrix `E^{ij}` with a single one in the `(i, j)` entry
    /// (0-based here).
    pub fn basis(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = T::one();
        m
    }

    /// Builds a matrix from a closure over (row, col).
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Mat { rows, cols, entries }
    }

    /// Builds a matrix from explicit rows.
    ///
    /// # Panics
    /// Panics when the rows are ragged or empty in a way that leaves the
    /// column count ambiguous.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row `r` as a slice.
    pub fn row(&self, r: usize) -> &[T] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// All entries, row-major.
    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |r, c| self[(r, c)].clone() + other[(r, c)].clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |r, c| self[(r, c)].clone() - other[(r, c)].clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self[(r, c)].clone() * s.clone())
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matmul");
        Self::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self[(r, k)].clone() * other[(k, c)].clone();
            }
            acc
        })
    }

    /// Matrix–vector product `M v`.
    pub fn matvec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matvec");
        (0..self.rows)
            .map(|r| {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc + self[(r, k)].clone() * v[k].clone();
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    /// Whether `M·M = M`. Errors on non-square input.
    pub fn is_idempotent(&self) -> Result<bool, String> {
        if !self.is_square() {
            return Err(format!("is_idempotent requires a square matrix, got {}×{}", self.rows, self.cols));
        }
        Ok(self.matmul(self) == *self)
    }

    /// Whether every entry is 0 or 1.
    pub fn is_zero_one(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero() || e.is_one())
    }

    /// Sum of the entries of row `r` (the result of `M·𝟙` at position `r`).
    pub fn row_sum(&self, r: usize) -> T {
        self.row(r).iter().fold(T::zero(), |acc, e| acc + e.clone())
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        (0..self.rows).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    /// Support of the matrix: the 0-based positions of nonzero entries.
    pub fn support(&self) -> Vec<(usize, usize)> {
        let mut s = Vec::new();
        for r in 0..self.rows {
            for c in 0..self.cols {
                if !self[(r, c)].is_zero() {
                    s.push((r, c));
                }
            }
        }
        s
    }

    /// Exact rank, by fraction-free (Bareiss) elimination with full pivoting.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let (rows, cols) = (a.rows, a.cols);
        let mut rank = 0;
        let mut prev = T::one();
        let mut row_perm: Vec<usize> = (0..rows).collect();
        while rank < rows && rank < cols {
            // Full pivoting: search the whole remaining block for a nonzero.
            let mut pivot = None;
            'search: for r in rank..rows {
                for c in rank..cols {
                    if !a[(row_perm[r], c)].is_zero() {
                        pivot = Some((r, c));
                        break 'search;
                    }
                }
            }
            let Some((pr, pc)) = pivot else { break };
            row_perm.swap(rank, pr);
            if pc != rank {
                for r in 0..rows {
                    let (i, j) = (r * cols + rank, r * cols + pc);
                    a.entries.swap(i, j);
                }
            }
            let piv = a[(row_perm[rank], rank)].clone();
            for r in rank + 1..rows {
                let rr = row_perm[r];
                let head = a[(rr, rank)].clone();
                for c in rank + 1..cols {
                    // Bareiss update: (piv·a[r,c] − head·a[pivrow,c]) / prev
                    let num = piv.clone() * a[(rr, c)].clone()
                        - head.clone() * a[(row_perm[rank], c)].clone();
                    a[(rr, c)] = num / prev.clone();
                }
                a[(rr, rank)] = T::zero();
            }
            prev = piv;
            rank += 1;
        }
        rank
    }

    /// Exact determinant, by fraction-free (Bareiss) elimination.
    ///
    /// # Panics
    /// Panics on non-square input.
    pub fn det(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut a = self.clone();
        let mut sign_flip = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !a[(r, k)].is_zero()) {
                    Some(r) => {
                        for c in 0..n {
                            let (i, j) = (k * n + c, r * n + c);
                            a.entries.swap(i, j);
                        }
                        sign_flip = !sign_flip;
                    }
                    None => return T::zero(),
                }
            }
            for r in k + 1..n {
                for c in k + 1..n {
                    let num = a[(k, k)].clone() * a[(r, c)].clone()
                        - a[(r, k)].clone() * a[(k, c)].clone();
                    a[(r, c)] = num / prev.clone();
                }
                a[(r, k)] = T::zero();
            }
            prev = a[(k, k)].clone();
        }
        let d = a[(n - 1, n - 1)].clone();
        if sign_flip {
            -d
        } else {
            d
        }
    }
}

impl<T> Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of {}×{}", self.rows, self.cols);
        &self.entries[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of {}×{}", self.rows, self.cols);
        &mut self.entries[r * self.cols + c]
    }
}

impl<T: fmt::Display> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            let row: Vec<String> =
                (0..self.cols).map(|c| self.entries[r * self.cols + c].to_string()).collect();
            writeln!(f, "  [{}],", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rint, QMat};

    fn qm(rows: Vec<Vec<i64>>) -> QMat {
        Mat::from_rows(rows.into_iter().map(|r| r.into_iter().map(rint).collect()).collect())
    }

    #[test]
    fn rank_examples() {
        assert_eq!(QMat::identity(3).rank(), 3);
        assert_eq!(QMat::zeros(2, 2).rank(), 0);
        // [[a, 1−a], [a, 1−a]] at a = 2 has rank 1.
        let a = rat(2, 1);
        let one_minus = rint(1) - a.clone();
        let m = Mat::from_rows(vec![vec![a.clone(), one_minus.clone()], vec![a, one_minus]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rank_needs_full_pivoting() {
        // First column zero; elimination must look right for a pivot.
        assert_eq!(qm(vec![vec![0, 1], vec![0, 0]]).rank(), 1);
        assert_eq!(qm(vec![vec![0, 0, 2], vec![0, 0, 4], vec![1, 0, 0]]).rank(), 2);
    }

    #[test]
    fn idempotent_examples() {
        assert!(QMat::identity(2).is_idempotent().unwrap());
        assert!(qm(vec![vec![1, 0], vec![1, 0]]).is_idempotent().unwrap());
        assert!(!qm(vec![vec![2, 0], vec![0, 0]]).is_idempotent().unwrap());
    }

    #[test]
    fn idempotent_rejects_non_square() {
        let m: QMat = Mat::zeros(2, 3);
        assert!(m.is_idempotent().is_err());
    }

    #[test]
    fn determinant_matches_cofactor_values() {
        assert_eq!(qm(vec![vec![1, 2], vec![3, 4]]).det(), rint(-2));
        assert_eq!(qm(vec![vec![0, 1], vec![1, 0]]).det(), rint(-1));
        assert_eq!(
            qm(vec![vec![2, 0, 1], vec![1, 1, 0], vec![0, 3, 1]]).det(),
            rint(5)
        );
        assert_eq!(QMat::identity(4).det(), rint(1));
        // Singular.
        assert_eq!(qm(vec![vec![1, 2], vec![2, 4]]).det(), rint(0));
    }

    #[test]
    fn matmul_and_trace() {
        let a = qm(vec![vec![1, 2], vec![3, 4]]);
        let b = qm(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(a.matmul(&b), qm(vec![vec![2, 1], vec![4, 3]]));
        assert_eq!(a.trace(), rint(5));
        assert_eq!(a.matvec(&[rint(1), rint(1)]), vec![rint(3), rint(7)]);
    }
}
