//! Twisting maps of `K^m` with `K^n`, stored through their coefficient matrices.
//!
//! A linear map `χ: K^m ⊗ K^n → K^n ⊗ K^m` with
//!
//! ```text
//! χ(e_i ⊗ f_j) = Σ_{k,l} λ_{ij}^{kl} · f_k ⊗ e_l
//! ```
//!
//! is determined by the grid of matrices `A(i,l) ∈ M_n(K)` defined by
//! `A(i,l)_{kj} = λ_{ij}^{kl}`.  The matrices `B(j,k) ∈ M_m(K)` given by
//! `B(j,k)_{li} = A(i,l)_{kj}` are a derived view of the same data.
//!
//! A [`TwistingFamily`] is such a grid of candidate coefficient matrices; it
//! need not satisfy the twisting-map conditions until [`TwistingFamily::verify`]
//! says so.  All public indices (`i`, `l` into `{1..m}`; `j`, `k` into
//! `{1..n}`) are 1-based, matching the usual mathematical notation.

mod canon;
mod json;
mod rank;
mod verify;

pub use canon::canonical_form;
pub use json::{family_from_json, family_to_json};
pub use rank::{rank_matrices, RankMatrices};
pub use verify::{verify, Condition, VerifyReport, Violation, Witness};

use num_traits::{One, Zero};
use std::fmt;
use twistlab_core::{Perm, QMat, Rat};

/// A candidate twisting map of `K^m` with `K^n`: the grid `(A(i,l))` of
/// `m × m` coefficient matrices, each of size `n × n`.
///
/// The grid is only a *pretwisting* until [`verify`] confirms the four
/// twisting-map conditions; construction checks dimensions, nothing else.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TwistingFamily {
    m: usize,
    n: usize,
    /// Row-major grid: `a[(i-1)*m + (l-1)]` is `A(i,l)`.
    a: Vec<QMat>,
}

impl TwistingFamily {
    /// Builds a family from the grid of matrices, `grid[i-1][l-1] = A(i,l)`.
    pub fn new(m: usize, n: usize, grid: Vec<Vec<QMat>>) -> Result<Self, String> {
        if m == 0 || n == 0 {
            return Err("m and n must be positive".to_string());
        }
        if grid.len() != m {
            return Err(format!("expected {} rows of matrices, got {}", m, grid.len()));
        }
        let mut a = Vec::with_capacity(m * m);
        for (i, row) in grid.into_iter().enumerate() {
            if row.len() != m {
                return Err(format!(
                    "expected {} matrices in row {}, got {}",
                    m,
                    i + 1,
                    row.len()
                ));
            }
            for (l, mat) in row.into_iter().enumerate() {
                if mat.rows() != n || mat.cols() != n {
                    return Err(format!(
                        "A({},{}) must be {}x{}, got {}x{}",
                        i + 1,
                        l + 1,
                        n,
                        n,
                        mat.rows(),
                        mat.cols()
                    ));
                }
                a.push(mat);
            }
        }
        Ok(TwistingFamily { m, n, a })
    }

    /// Builds a family by evaluating `f(i, l)` for every 1-based pair.
    pub fn from_fn(
        m: usize,
        n: usize,
        mut f: impl FnMut(usize, usize) -> QMat,
    ) -> Result<Self, String> {
        let grid = (1..=m)
            .map(|i| (1..=m).map(|l| f(i, l)).collect())
            .collect();
        TwistingFamily::new(m, n, grid)
    }

    /// The flip `τ(e_i ⊗ f_j) = f_j ⊗ e_i`, i.e. `A(i,l) = δ_{il}·Id`.
    pub fn flip(m: usize, n: usize) -> Self {
        TwistingFamily::from_fn(m, n, |i, l| {
            if i == l {
                QMat::identity(n)
            } else {
                QMat::zeros(n, n)
            }
        })
        .expect("flip dimensions are valid")
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The coefficient matrix `A(i,l)` (1-based indices).
    ///
    /// # Panics
    /// Panics when an index is out of range; use [`TwistingFamily::lambda`]
    /// for a checked entry access.
    pub fn a(&self, i: usize, l: usize) -> &QMat {
        assert!(
            (1..=self.m).contains(&i) && (1..=self.m).contains(&l),
            "A({i},{l}) out of range for m = {}",
            self.m
        );
        &self.a[(i - 1) * self.m + (l - 1)]
    }

    /// The coefficient `λ_{ij}^{kl} = A(i,l)_{kj}` (all indices 1-based).
    pub fn lambda(&self, i: usize, j: usize, k: usize, l: usize) -> Result<Rat, String> {
        if !(1..=self.m).contains(&i) || !(1..=self.m).contains(&l) {
            return Err(format!("indices i = {i}, l = {l} out of range for m = {}", self.m));
        }
        if !(1..=self.n).contains(&j) || !(1..=self.n).contains(&k) {
            return Err(format!("indices j = {j}, k = {k} out of range for n = {}", self.n));
        }
        Ok(self.a(i, l)[(k - 1, j - 1)].clone())
    }

    /// The derived matrix `B(j,k) ∈ M_m(K)` with `B(j,k)_{li} = A(i,l)_{kj}`.
    pub fn b_matrix(&self, j: usize, k: usize) -> Result<QMat, String> {
        if !(1..=self.n).contains(&j) || !(1..=self.n).contains(&k) {
            return Err(format!("indices j = {j}, k = {k} out of range for n = {}", self.n));
        }
        Ok(QMat::from_fn(self.m, self.m, |l0, i0| {
            self.a(i0 + 1, l0 + 1)[(k - 1, j - 1)].clone()
        }))
    }

    /// The dual family: `m' = n`, `n' = m`, `A'(j,k) = B(j,k)`.
    ///
    /// Duality is an involution and preserves the twisting property, so
    /// `verify(dual(f)).is_twisting == verify(f).is_twisting`.
    pub fn dual(&self) -> TwistingFamily {
        TwistingFamily::from_fn(self.n, self.m, |j, k| {
            self.b_matrix(j, k).expect("indices in range")
        })
        .expect("dual dimensions are valid")
    }

    /// Checks the four twisting-map conditions; see [`verify`].
    pub fn verify(&self) -> VerifyReport {
        verify(self)
    }

    /// The rank matrices `Γ` (of the `A(i,l)`) and `Γ̃` (of the `B(j,k)`).
    pub fn rank_matrices(&self) -> RankMatrices {
        rank_matrices(self)
    }

    /// Relabels both tensor factors: `A'(i,l)_{kj} = A(σ(i),σ(l))_{ς(k)ς(j)}`.
    ///
    /// Two verified families present isomorphic twisted algebras exactly when
    /// one is obtained from the other this way.  The map is a right action:
    /// `apply_perms(apply_perms(f,σ₁,ς₁),σ₂,ς₂) = apply_perms(f,σ₁∘σ₂,ς₁∘ς₂)`.
    pub fn apply_perms(&self, sigma: &Perm, varsigma: &Perm) -> Result<TwistingFamily, String> {
        if sigma.size() != self.m {
            return Err(format!(
                "permutation of the K^m factor has size {}, expected {}",
                sigma.size(),
                self.m
            ));
        }
        if varsigma.size() != self.n {
            return Err(format!(
                "permutation of the K^n factor has size {}, expected {}",
                varsigma.size(),
                self.n
            ));
        }
        TwistingFamily::from_fn(self.m, self.n, |i, l| {
            let src = self.a(sigma.apply(i - 1) + 1, sigma.apply(l - 1) + 1);
            QMat::from_fn(self.n, self.n, |k0, j0| {
                src[(varsigma.apply(k0), varsigma.apply(j0))].clone()
            })
        })
    }

    /// The canonical representative of the isomorphism class; see
    /// [`canonical_form`].
    pub fn canonical_form(&self) -> Result<(TwistingFamily, Perm, Perm), String> {
        canonical_form(self)
    }

    /// Restriction to a set `S ⊆ {1..m}` of base idempotents.
    ///
    /// When `A(i,l) = 0` for every `i ∉ S`, `l ∈ S`, the sub-grid
    /// `(A(i,l))_{i,l ∈ S}` is itself a twisting family of `K^|S|` with `K^n`
    /// (verified whenever `self` is) and is returned with indices relabelled
    /// by position in `S`.  Otherwise `None`: the map is not an extension
    /// over `S`.
    pub fn restrict(&self, s: &[usize]) -> Option<TwistingFamily> {
        let mut labels: Vec<usize> = s.to_vec();
        labels.sort_unstable();
        labels.dedup();
        if labels.is_empty() || labels.iter().any(|&i| i < 1 || i > self.m) {
            return None;
        }
        let inside = |i: usize| labels.binary_search(&i).is_ok();
        for l in labels.iter().copied() {
            for i in 1..=self.m {
                if !inside(i) && !self.a(i, l).is_zero() {
                    return None;
                }
            }
        }
        Some(
            TwistingFamily::from_fn(labels.len(), self.n, |i, l| {
                self.a(labels[i - 1], labels[l - 1]).clone()
            })
            .expect("restricted dimensions are valid"),
        )
    }

    /// Direct sum over the `K^m` factor: the result acts on
    /// `K^{m₁+m₂} ⊗ K^n` with the two diagonal blocks taken from the inputs
    /// and the cross blocks zero.  Requires `self.n == other.n`.
    ///
    /// The direct sum of verified families is verified, and restricting to
    /// either block recovers the corresponding input.
    pub fn direct_sum(&self, other: &TwistingFamily) -> Result<TwistingFamily, String> {
        if self.n != other.n {
            return Err(format!(
                "direct sum requires equal n, got {} and {}",
                self.n, other.n
            ));
        }
        let m1 = self.m;
        TwistingFamily::from_fn(m1 + other.m, self.n, |i, l| {
            if i <= m1 && l <= m1 {
                self.a(i, l).clone()
            } else if i > m1 && l > m1 {
                other.a(i - m1, l - m1).clone()
            } else {
                QMat::zeros(self.n, self.n)
            }
        })
    }

    /// The coarse quiver on vertices `{1..m}`: entry `(i,l)` is 1 exactly
    /// when `i ≠ l` and `A(i,l) ≠ 0`.
    pub fn coarse_quiver(&self) -> Vec<Vec<u8>> {
        (1..=self.m)
            .map(|i| {
                (1..=self.m)
                    .map(|l| u8::from(i != l && !self.a(i, l).is_zero()))
                    .collect()
            })
            .collect()
    }

    /// The reduced rank at column `l`: the number of indices `i ≠ l` with
    /// `A(i,l) ≠ 0`.
    pub fn reduced_rank(&self, l: usize) -> Result<usize, String> {
        if !(1..=self.m).contains(&l) {
            return Err(format!("column {l} out of range for m = {}", self.m));
        }
        Ok((1..=self.m)
            .filter(|&i| i != l && !self.a(i, l).is_zero())
            .count())
    }

    /// The sum `Σ_l Tr A(l,l)` of the diagonal traces.
    pub fn sum_trace(&self) -> Rat {
        (1..=self.m).fold(Rat::zero(), |acc, l| acc + self.a(l, l).trace())
    }

    /// The λ-tensor flattened in `(i, l, k, j)` row-major order; the
    /// lexicographic key used for canonicalization and deterministic sorting.
    pub fn key(&self) -> Vec<Rat> {
        let mut out = Vec::with_capacity(self.m * self.m * self.n * self.n);
        for mat in &self.a {
            out.extend(mat.entries().iter().cloned());
        }
        out
    }

    /// Serializes to the interchange JSON schema; see [`family_to_json`].
    pub fn to_json(&self) -> String {
        family_to_json(self)
    }

    /// Parses the interchange JSON schema; see [`family_from_json`].
    pub fn from_json(text: &str) -> Result<TwistingFamily, String> {
        family_from_json(text)
    }
}

impl fmt::Debug for TwistingFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "TwistingFamily m={} n={}", self.m, self.n)?;
        for i in 1..=self.m {
            for l in 1..=self.m {
                writeln!(f, "A({i},{l}) = {:?}", self.a(i, l))?;
            }
        }
        Ok(())
    }
}

/// Convenience: the `n × n` all-ones column vector test value `𝟙` as a `QMat`
/// column, used by a few internal checks and tests.
pub(crate) fn ones_vector(n: usize) -> Vec<Rat> {
    vec![Rat::one(); n]
}
