//! The two families of matrix representations of a twisted algebra.
//!
//! For a twisting family of `K^m` with `K^n` there is one representation
//! `ρ_u : C → M_n(K)` per column index `u ∈ {1..m}`, acting on basis cells by
//! `x_{jl} ↦ E^{jj} A(l,u)`, and one dual representation `ρ̃_v : C → M_m(K)`
//! per row index `v ∈ {1..n}`, acting by `x_{jl} ↦ B(j,v)^T E^{ll}`.
//!
//! The transpose on the B-side is not optional. The B-matrices are the
//! A-matrices of the opposite twisting family (the one with the tensor
//! factors swapped), and swapping the factors reverses products, so the
//! generator-order assignment `x_{jl} ↦ E^{ll} B(j,v)` is an
//! anti-homomorphism — a homomorphism into `M_m(K)^op`. Composing with
//! matrix transposition, an anti-automorphism of `M_m(K)`, turns it into the
//! genuine representation `x_{jl} ↦ B(j,v)^T E^{ll}`. The naive untransposed
//! order `x_{jl} ↦ B(j,v) E^{ll}` satisfies neither the straight nor the
//! reversed multiplication law.

use crate::span::RowSpace;
use crate::table::TwistedAlgebra;
use num_traits::Zero;
use twistlab_core::{QMat, Rat};
use twistlab_twistmap::TwistingFamily;

/// Which of the two tensor factors the representation favours.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `ρ_u` into `M_n(K)`, built from the matrices `A(l,u)`.
    A,
    /// `ρ̃_v` into `M_m(K)`, built from the transposed matrices `B(j,v)^T`.
    B,
}

/// A basis-image assignment `x_{jl} ↦ M_{jl}` into square matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    m: usize,
    n: usize,
    side: Side,
    index: usize,
    /// Flat by `(j - 1) * m + (l - 1)`, matching `TwistedAlgebra::index`.
    images: Vec<QMat>,
}

impl Representation {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// The column index `u` (A-side) or row index `v` (B-side).
    pub fn index(&self) -> usize {
        self.index
    }

    /// Size of the square target matrices: `n` on the A-side, `m` on the B-side.
    pub fn target_size(&self) -> usize {
        match self.side {
            Side::A => self.n,
            Side::B => self.m,
        }
    }

    /// Image of the basis cell `x_{jl}`.
    pub fn image(&self, j: usize, l: usize) -> &QMat {
        assert!((1..=self.n).contains(&j), "row index out of range");
        assert!((1..=self.m).contains(&l), "column index out of range");
        &self.images[(j - 1) * self.m + (l - 1)]
    }

    /// All basis images, flat by `(j - 1) * m + (l - 1)`.
    pub fn images(&self) -> &[QMat] {
        &self.images
    }

    /// Linear extension: the image of `Σ coeffs[idx] x_idx`.
    pub fn apply(&self, coeffs: &[Rat]) -> QMat {
        assert_eq!(coeffs.len(), self.images.len(), "coefficient vector has wrong length");
        let t = self.target_size();
        QMat::from_fn(t, t, |r, c| {
            self.images
                .iter()
                .zip(coeffs)
                .fold(Rat::zero(), |acc, (img, x)| acc + x * &img[(r, c)])
        })
    }

    /// Whether the assignment preserves all basis products of the table.
    pub fn is_multiplicative(&self, alg: &TwistedAlgebra) -> bool {
        assert_eq!(
            (alg.m(), alg.n()),
            (self.m, self.n),
            "algebra and representation dimensions differ"
        );
        let dim = alg.dim();
        (0..dim).all(|a| {
            (0..dim).all(|b| {
                let rhs = self.images[alg.product_support(a, b)].scale(alg.coeff(a, b));
                self.images[a].matmul(&self.images[b]) == rhs
            })
        })
    }

    /// Whether the unit `Σ x_{jl}` maps to the identity matrix.
    pub fn is_unital(&self) -> bool {
        let ones = vec![Rat::from_integer(1.into()); self.images.len()];
        self.apply(&ones).is_identity()
    }
}

/// Builds the basis images without any verification of the family.
pub(crate) fn build_representation(
    f: &TwistingFamily,
    index: usize,
    side: Side,
) -> Representation {
    let (m, n) = (f.m(), f.n());
    let mut images = Vec::with_capacity(n * m);
    match side {
        Side::A => {
            assert!((1..=m).contains(&index), "A-side index out of range");
            for j in 1..=n {
                for l in 1..=m {
                    // E^{jj} A(l,u): row j of A(l,u), other rows zero.
                    let a = f.a(l, index);
                    images.push(QMat::from_fn(n, n, |r, c| {
                        if r == j - 1 {
                            a[(j - 1, c)].clone()
                        } else {
                            Rat::zero()
                        }
                    }));
                }
            }
        }
        Side::B => {
            assert!((1..=n).contains(&index), "B-side index out of range");
            for j in 1..=n {
                let b = f.b_matrix(j, index).expect("index validated");
                for l in 1..=m {
                    // B(j,v)^T E^{ll}: column l holds row l of B(j,v), other
                    // columns zero. The transpose is forced: the B-matrices
                    // read products with the tensor factors swapped, which
                    // reverses multiplication order, so the generator-order
                    // images E^{ll} B(j,v) only define a morphism into
                    // M_m(K)^op. Transposing them yields a genuine morphism
                    // into M_m(K); see the unit test
                    // `untransposed_b_images_reverse_products`.
                    images.push(QMat::from_fn(m, m, |r, c| {
                        if c == l - 1 {
                            b[(l - 1, r)].clone()
                        } else {
                            Rat::zero()
                        }
                    }));
                }
            }
        }
    }
    Representation { m, n, side, index, images }
}

/// The representation `ρ_index` (A-side) or `ρ̃_index` (B-side) of a verified
/// twisting family.
///
/// Errors when the index is out of range for the chosen side or when the
/// family fails verification; on verified input the result is multiplicative
/// and unital.
pub fn representation(
    f: &TwistingFamily,
    index: usize,
    side: Side,
) -> Result<Representation, String> {
    let bound = match side {
        Side::A => f.m(),
        Side::B => f.n(),
    };
    if !(1..=bound).contains(&index) {
        return Err(format!("representation index {index} out of range 1..={bound}"));
    }
    if !f.verify().is_twisting {
        return Err("input must be a verified twisting map".to_string());
    }
    Ok(build_representation(f, index, side))
}

/// Dimension of the smallest multiplication-closed subspace containing all
/// basis images — the linear span of the image for a multiplicative
/// assignment, and the span of all products of basis images in general.
pub fn rep_image_dim(r: &Representation) -> usize {
    let t = r.target_size();
    let mut space = RowSpace::new(t * t);
    let mut gens: Vec<QMat> = Vec::new();
    let mut queue: Vec<QMat> = r.images().to_vec();
    while let Some(g) = queue.pop() {
        if !space.insert(g.entries().to_vec()) {
            continue;
        }
        queue.push(g.matmul(&g));
        for h in &gens {
            queue.push(g.matmul(h));
            queue.push(h.matmul(&g));
        }
        gens.push(g);
    }
    space.dim()
}
