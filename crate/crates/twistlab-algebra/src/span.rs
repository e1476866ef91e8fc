//! Incremental exact row reduction over the rationals.

use num_traits::Zero;
use twistlab_core::Rat;

/// A subspace of `Q^width` kept in reduced row-echelon form.
pub(crate) struct RowSpace {
    width: usize,
    /// Rows sorted by pivot column; every stored row is zero at the other
    /// rows' pivot columns and has a leading one.
    rows: Vec<(usize, Vec<Rat>)>,
}

impl RowSpace {
    pub fn new(width: usize) -> Self {
        RowSpace { width, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [Rat]) {
        for (pivot, row) in &self.rows {
            if !v[*pivot].is_zero() {
                let factor = v[*pivot].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= &factor * y;
                }
            }
        }
    }

    /// Adds a vector to the space; returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vec<Rat>) -> bool {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        self.reduce(&mut v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = v[pivot].clone();
        for x in &mut v {
            *x /= &lead;
        }
        for (_, row) in &mut self.rows {
            if !row[pivot].is_zero() {
                let factor = row[pivot].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    *x -= &factor * y;
                }
            }
        }
        let at = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(at, (pivot, v));
        true
    }

}
