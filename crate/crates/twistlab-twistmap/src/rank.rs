//! Rank matrices `Γ` and `Γ̃` of a family.
//!
//! `Γ ∈ M_m(ℕ)` has `γ_{il} = rk A(i,l)` and `Γ̃ ∈ M_n(ℕ)` has
//! `γ̃_{jk} = rk B(j,k)`.  For verified twisting maps these satisfy
//! `δ_{il} ≤ γ_{il} ≤ n`, column sums of `Γ` equal `n`, `δ_{jk} ≤ γ̃_{jk} ≤ m`,
//! column sums of `Γ̃` equal `m`, and `Tr Γ = Tr Γ̃`.

use crate::TwistingFamily;

/// The pair of rank matrices of a family.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RankMatrices {
    /// `m × m`: `gamma[i-1][l-1] = rk A(i,l)`.
    pub gamma: Vec<Vec<usize>>,
    /// `n × n`: `gamma_tilde[j-1][k-1] = rk B(j,k)`.
    pub gamma_tilde: Vec<Vec<usize>>,
}

impl RankMatrices {
    pub fn trace_gamma(&self) -> usize {
        (0..self.gamma.len()).map(|i| self.gamma[i][i]).sum()
    }

    pub fn trace_gamma_tilde(&self) -> usize {
        (0..self.gamma_tilde.len())
            .map(|j| self.gamma_tilde[j][j])
            .sum()
    }

    /// The Cor. 2.9-style sanity bounds for a verified family of `K^m` with
    /// `K^n`; returns the first failed bound as an error message.
    pub fn check_bounds(&self, m: usize, n: usize) -> Result<(), String> {
        for i in 0..m {
            for l in 0..m {
                let g = self.gamma[i][l];
                let low = usize::from(i == l);
                if g < low || g > n {
                    return Err(format!(
                        "gamma[{},{}] = {} outside [{}, {}]",
                        i + 1,
                        l + 1,
                        g,
                        low,
                        n
                    ));
                }
            }
        }
        for l in 0..m {
            let col: usize = (0..m).map(|i| self.gamma[i][l]).sum();
            if col != n {
                return Err(format!("column {} of gamma sums to {}, expected {}", l + 1, col, n));
            }
        }
        for j in 0..n {
            for k in 0..n {
                let g = self.gamma_tilde[j][k];
                let low = usize::from(j == k);
                if g < low || g > m {
                    return Err(format!(
                        "gamma_tilde[{},{}] = {} outside [{}, {}]",
                        j + 1,
                        k + 1,
                        g,
                        low,
                        m
                    ));
                }
            }
        }
        for k in 0..n {
            let col: usize = (0..n).map(|j| self.gamma_tilde[j][k]).sum();
            if col != m {
                return Err(format!(
                    "column {} of gamma_tilde sums to {}, expected {}",
                    k + 1,
                    col,
                    m
                ));
            }
        }
        if self.trace_gamma() != self.trace_gamma_tilde() {
            return Err(format!(
                "trace mismatch: Tr gamma = {}, Tr gamma_tilde = {}",
                self.trace_gamma(),
                self.trace_gamma_tilde()
            ));
        }
        Ok(())
    }
}

/// Computes both rank matrices with exact rational rank.
pub fn rank_matrices(f: &TwistingFamily) -> RankMatrices {
    let gamma = (1..=f.m())
        .map(|i| (1..=f.m()).map(|l| f.a(i, l).rank()).collect())
        .collect();
    let gamma_tilde = (1..=f.n())
        .map(|j| {
            (1..=f.n())
                .map(|k| f.b_matrix(j, k).expect("indices in range").rank())
                .collect()
        })
        .collect();
    RankMatrices { gamma, gamma_tilde }
}
