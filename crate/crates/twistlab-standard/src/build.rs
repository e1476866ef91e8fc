//! Building standard twisting maps from compatible idempotent 0,1-data, and
//! deciding the twisting property of standard-column pretwistings.

use crate::{column_sets, is_standard_column};
use num_traits::{One, Zero};
use twistlab_core::{QMat, Rat};
use twistlab_twistmap::TwistingFamily;

fn check_side(mats: &[QMat], label: char, size: usize) -> Result<(), String> {
    for (idx, m) in mats.iter().enumerate() {
        let name = format!("{label}({})", idx + 1);
        if m.rows() != size || m.cols() != size {
            return Err(format!(
                "{name} must be {size}x{size}, got {}x{}",
                m.rows(),
                m.cols()
            ));
        }
        if !m.is_zero_one() {
            return Err(format!("{name} has an entry outside {{0,1}}"));
        }
        for r in 0..size {
            if !m.row_sum(r).is_one() {
                return Err(format!("row {} of {name} must sum to 1", r + 1));
            }
        }
        if !m.is_idempotent()? {
            return Err(format!("{name} must be idempotent"));
        }
    }
    Ok(())
}

/// Builds the unique standard twisting map with diagonal data
/// `A(i,i) = Alist[i-1]` and `B(k,k) = Blist[k-1]`.
///
/// The inputs must be idempotent 0,1-matrices with row sums one (sizes
/// `n × n` on the `A` side, `m × m` on the `B` side) satisfying the
/// compatibility `A(i)_{kk} = B(k)_{ii}`; the blocks of the result are
///
/// ```text
/// A_χ(i,l)_{kj} = A(l)_{kj}            if i = l,
///                 B(k)_{li}            if k = j,
///                 −1                   if i ≠ l, k ≠ j, A(l)_{kj} = B(k)_{li} = 1,
///                 0                — otherwise.
/// ```
pub fn build_standard(a_list: &[QMat], b_list: &[QMat]) -> Result<TwistingFamily, String> {
    let m = a_list.len();
    let n = b_list.len();
    if m == 0 || n == 0 {
        return Err("need at least one matrix on each side".to_string());
    }
    check_side(a_list, 'A', n)?;
    check_side(b_list, 'B', m)?;
    for i in 1..=m {
        for k in 1..=n {
            if a_list[i - 1][(k - 1, k - 1)] != b_list[k - 1][(i - 1, i - 1)] {
                return Err(format!(
                    "diagonal compatibility fails at (i,k) = ({i},{k}): \
                     A({i})_{{{k},{k}}} != B({k})_{{{i},{i}}}"
                ));
            }
        }
    }
    TwistingFamily::from_fn(m, n, |i, l| {
        QMat::from_fn(n, n, |k0, j0| {
            if i == l {
                a_list[l - 1][(k0, j0)].clone()
            } else if k0 == j0 {
                b_list[k0][(l - 1, i - 1)].clone()
            } else if a_list[l - 1][(k0, j0)].is_one() && b_list[k0][(l - 1, i - 1)].is_one() {
                -Rat::one()
            } else {
                Rat::zero()
            }
        })
    })
}

/// The pretwisting conditions: within every column, the blocks are orthogonal
/// idempotents summing to the identity, with row sums `δ_{il}`.
fn is_pretwisting(f: &TwistingFamily) -> bool {
    let (m, n) = (f.m(), f.n());
    for l in 1..=m {
        let mut sum = QMat::zeros(n, n);
        for i in 1..=m {
            let a = f.a(i, l);
            sum = sum.add(a);
            for r in 0..n {
                let s = a.row_sum(r);
                if (i == l && !s.is_one()) || (i != l && !s.is_zero()) {
                    return false;
                }
            }
            for i2 in 1..=m {
                let prod = a.matmul(f.a(i2, l));
                if i == i2 {
                    if prod != *a {
                        return false;
                    }
                } else if !prod.is_zero() {
                    return false;
                }
            }
        }
        if !sum.is_identity() {
            return false;
        }
    }
    true
}

/// Decides the twisting property for a family all of whose columns are
/// standard, without running the full quartic condition: such a pretwisting
/// is a twisting map exactly when `F(A(i,l)) ⊆ F_0(𝒜,i)` for all `i, l`.
///
/// Errors when some column is not standard; agrees with
/// `verify(f).is_twisting` on its domain.
pub fn check_standard_map(f: &TwistingFamily) -> Result<bool, String> {
    let m = f.m();
    for l in 1..=m {
        if !is_standard_column(f, l)? {
            return Err(format!("column {l} is not standard"));
        }
    }
    if !is_pretwisting(f) {
        return Ok(false);
    }
    let sets: Vec<_> = (1..=m)
        .map(|l| column_sets(f, l).expect("column index in range"))
        .collect();
    for i in 1..=m {
        let f0_i = &sets[i - 1].f0;
        for l in 1..=m {
            if !sets[l - 1].j_sets[i - 1].is_subset(f0_i) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
