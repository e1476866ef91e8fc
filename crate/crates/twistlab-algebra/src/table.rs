//! The twisted algebra `K^n (x) K^m` as a based algebra on the cells
//! `x_{jl} = (f_j (x) 1)(1 (x) e_l)`.

use num_traits::Zero;
use twistlab_core::Rat;
use twistlab_twistmap::TwistingFamily;

/// Structure constants of a twisted algebra on the basis
/// `{x_{jl} : j in N_n, l in N_m}`.
///
/// The basis is ordered by `index(j, l) = (j - 1) * m + (l - 1)` and every
/// product of two basis cells is a scalar multiple of a single cell:
/// `x_{ki} x_{jl} = A(i, l)_{kj} x_{kl}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedAlgebra {
    m: usize,
    n: usize,
    /// `coeffs[a * dim + b]` is the scalar in `x_a x_b = coeff * x_supp(a,b)`.
    coeffs: Vec<Rat>,
}

impl TwistedAlgebra {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the algebra, `n * m`.
    pub fn dim(&self) -> usize {
        self.n * self.m
    }

    /// Flat index of the basis cell `x_{jl}`, with `1 <= j <= n` and
    /// `1 <= l <= m`.
    pub fn index(&self, j: usize, l: usize) -> usize {
        assert!((1..=self.n).contains(&j), "row index out of range");
        assert!((1..=self.m).contains(&l), "column index out of range");
        (j - 1) * self.m + (l - 1)
    }

    /// Inverse of [`index`](Self::index): the cell `(j, l)` at a flat index.
    pub fn label(&self, idx: usize) -> (usize, usize) {
        assert!(idx < self.dim(), "flat index out of range");
        (idx / self.m + 1, idx % self.m + 1)
    }

    /// The scalar `c` in `x_a x_b = c x_supp(a,b)`.
    pub fn coeff(&self, a: usize, b: usize) -> &Rat {
        &self.coeffs[a * self.dim() + b]
    }

    /// The flat index of the only cell that can support `x_a x_b`:
    /// for `a = (k, i)` and `b = (j, l)` this is `(k, l)`.
    pub fn product_support(&self, a: usize, b: usize) -> usize {
        let (k, _) = self.label(a);
        let (_, l) = self.label(b);
        self.index(k, l)
    }

    /// Coordinates of the unit `1 (x) 1 = sum_{j,l} x_{jl}`.
    pub fn unit(&self) -> Vec<Rat> {
        vec![Rat::from_integer(1.into()); self.dim()]
    }

    /// Product of two coordinate vectors.
    pub fn multiply(&self, u: &[Rat], v: &[Rat]) -> Vec<Rat> {
        assert_eq!(u.len(), self.dim(), "left factor has wrong length");
        assert_eq!(v.len(), self.dim(), "right factor has wrong length");
        let mut out = vec![Rat::zero(); self.dim()];
        for (a, ua) in u.iter().enumerate() {
            if ua.is_zero() {
                continue;
            }
            for (b, vb) in v.iter().enumerate() {
                if vb.is_zero() {
                    continue;
                }
                let c = self.coeff(a, b);
                if !c.is_zero() {
                    out[self.product_support(a, b)] += ua * vb * c;
                }
            }
        }
        out
    }
}

/// Reads the multiplication table off a family of matrices:
/// `x_{ki} x_{jl} = A(i, l)_{kj} x_{kl}`.
///
/// No verification is performed; the result is a genuine associative unital
/// algebra exactly when the family is a twisting map (see
/// [`check_unital_associative`]).
pub fn build_algebra(f: &TwistingFamily) -> TwistedAlgebra {
    let (m, n) = (f.m(), f.n());
    let dim = n * m;
    let mut coeffs = Vec::with_capacity(dim * dim);
    for k in 1..=n {
        for i in 1..=m {
            for j in 1..=n {
                for l in 1..=m {
                    coeffs.push(f.a(i, l)[(k - 1, j - 1)].clone());
                }
            }
        }
    }
    TwistedAlgebra { m, n, coeffs }
}

/// Whether the table defines a unital associative algebra with unit
/// `sum_{j,l} x_{jl}`.
///
/// Associativity reduces to one scalar identity per triple of basis cells,
/// since both `(x_a x_b) x_c` and `x_a (x_b x_c)` are supported on the same
/// single cell.
pub fn check_unital_associative(alg: &TwistedAlgebra) -> bool {
    let dim = alg.dim();
    let one = alg.unit();
    for a in 0..dim {
        let mut e = vec![Rat::zero(); dim];
        e[a] = Rat::from_integer(1.into());
        if alg.multiply(&one, &e) != e || alg.multiply(&e, &one) != e {
            return false;
        }
    }
    for a in 0..dim {
        for b in 0..dim {
            let ab = alg.product_support(a, b);
            for c in 0..dim {
                let bc = alg.product_support(b, c);
                let left = alg.coeff(a, b) * alg.coeff(ab, c);
                let right = alg.coeff(b, c) * alg.coeff(a, bc);
                if left != right {
                    return false;
                }
            }
        }
    }
    true
}
