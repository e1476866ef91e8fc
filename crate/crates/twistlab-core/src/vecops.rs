//! Componentwise (Hadamard) vector operations and the (n−1)-ary cross
//! product on `K^n`.

use crate::mat::{Mat, Scalar};

/// Dot product `a · b`.
pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    assert_eq!(a.len(), b.len(), "dot product dimension mismatch");
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Componentwise product `a • b`.
pub fn hadamard<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    assert_eq!(a.len(), b.len(), "componentwise product dimension mismatch");
    a.iter().zip(b).map(|(x, y)| x.clone() * y.clone()).collect()
}

/// Componentwise inverse `a^•`. Errors when some component is zero.
pub fn hadamard_inv<T: Scalar>(a: &[T]) -> Result<Vec<T>, String> {
    a.iter()
        .enumerate()
        .map(|(i, x)| {
            if x.is_zero() {
                Err(format!("component {} is zero, vector not invertible", i + 1))
            } else {
                Ok(T::one() / x.clone())
            }
        })
        .collect()
}

/// Total product `μ_n(a) = a_1 ⋯ a_n`.
pub fn mu<T: Scalar>(a: &[T]) -> T {
    a.iter().fold(T::one(), |acc, x| acc * x.clone())
}

/// The (n−1)-ary cross product on `K^n`.
///
/// `w = v_1 × ⋯ × v_{n−1}` is the unique vector with
/// `w · x = det(x; v_1; …; v_{n−1})` for all `x`; it is computed by Laplace
/// expansion along a symbolic first row, i.e. `w_j = (−1)^{1+j}` times the
/// minor obtained by deleting column `j` from the matrix whose rows are the
/// `v_i`. The result is orthogonal to every input and zero when the inputs
/// are linearly dependent.
pub fn cross_product<T: Scalar>(vs: &[Vec<T>]) -> Result<Vec<T>, String> {
    let n = vs.len() + 1;
    if vs.iter().any(|v| v.len() != n) {
        return Err(format!(
            "cross product on K^{n} needs {} vectors of length {n}, got lengths {:?}",
            n - 1,
            vs.iter().map(Vec::len).collect::<Vec<_>>()
        ));
    }
    let mut w = Vec::with_capacity(n);
    for j in 0..n {
        let minor = Mat::from_fn(n - 1, n - 1, |r, c| {
            let col = if c < j { c } else { c + 1 };
            vs[r][col].clone()
        });
        let cof = minor.det();
        w.push(if j % 2 == 0 { cof } else { -cof });
    }
    Ok(w)
}
