//! The fourth twisting condition on a quasi-standard column, and the
//! extension criterion for completing a twisting block by quasi-standard
//! columns.

use crate::dblock::is_quasi_standard;
use num_traits::{One, Zero};
use std::collections::BTreeSet;
use twistlab_core::QMat;
use twistlab_standard::column_sets;
use twistlab_twistmap::{Condition, TwistingFamily};

/// Rows on which `m` acts as the identity: `{k : m_{kj} = δ_{kj} ∀j}`.
fn identity_rows(m: &QMat) -> BTreeSet<usize> {
    let n = m.rows();
    (1..=n)
        .filter(|&k| {
            (1..=n).all(|j| {
                let e = &m[(k - 1, j - 1)];
                if k == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
        .collect()
}

/// Diagonal-one rows of each block of column `l`, without any partition
/// demand.
fn diag_j_sets(f: &TwistingFamily, l: usize) -> Vec<Vec<usize>> {
    (1..=f.m())
        .map(|i| {
            let a = f.a(i, l);
            (1..=f.n()).filter(|&k| a[(k - 1, k - 1)].is_one()).collect()
        })
        .collect()
}

/// Direct evaluation of the fourth condition restricted to column `l0`:
/// `Σ_h A(i,h)_{kj}·A(h,l0)_{kj'} = δ_{jj'}·A(i,l0)_{kj}` for all
/// `i, k, j, j'`.
pub(crate) fn column_condition4_direct(f: &TwistingFamily, l0: usize) -> bool {
    let (m, n) = (f.m(), f.n());
    for i in 1..=m {
        for k in 1..=n {
            for j in 1..=n {
                for j2 in 1..=n {
                    let mut sum = twistlab_core::Rat::zero();
                    for h in 1..=m {
                        sum += f.a(i, h)[(k - 1, j - 1)].clone()
                            * f.a(h, l0)[(k - 1, j2 - 1)].clone();
                    }
                    let rhs = if j == j2 {
                        f.a(i, l0)[(k - 1, j - 1)].clone()
                    } else {
                        twistlab_core::Rat::zero()
                    };
                    if sum != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The pointwise demands placed on column `v` by a nonzero entry
/// `A(u,l)_{kd}` sitting in the block `D^{uv}_{(u,l)}`: row `k` of `A(u,v)`
/// is `Id − E` at `d`, row `k` of `A(v,v)` is the point mass at `d`, and
/// row `k` of every other block of column `v` vanishes.
fn entry_demands(f: &TwistingFamily, u: usize, v: usize, k: usize, d: usize) -> bool {
    let (m, n) = (f.m(), f.n());
    for j in 1..=n {
        let auv = &f.a(u, v)[(k - 1, j - 1)];
        let expected_uv = match (j == k, j == d) {
            (true, false) => auv.is_one(),
            (false, true) => (-auv.clone()).is_one(),
            (true, true) => auv.is_zero(),
            (false, false) => auv.is_zero(),
        };
        if !expected_uv {
            return false;
        }
        let avv = &f.a(v, v)[(k - 1, j - 1)];
        if (j == d) != avv.is_one() || (j != d && !avv.is_zero()) {
            return false;
        }
    }
    for i in 1..=m {
        if i == u || i == v {
            continue;
        }
        if (1..=n).any(|j| !f.a(i, v)[(k - 1, j - 1)].is_zero()) {
            return false;
        }
    }
    true
}

/// Condition (2) of the column characterization for column `l`: every
/// nonzero `(D^{uv}_{(u,l)})_{kd}` with `u ≠ v`, `v ≠ l` forces the
/// pointwise demands on column `v`.
fn cond2_for_column(f: &TwistingFamily, l: usize, j_sets: &[Vec<usize>]) -> bool {
    let m = f.m();
    for u in 1..=m {
        for v in 1..=m {
            if u == v || v == l {
                continue;
            }
            for &k in &j_sets[u - 1] {
                for &d in &j_sets[v - 1] {
                    if f.a(u, l)[(k - 1, d - 1)].is_zero() {
                        continue;
                    }
                    if !entry_demands(f, u, v, k, d) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The two structural conditions equivalent (on a pre-twisting with a
/// quasi-standard column `l0`) to the fourth condition in that column:
/// (1) `J_i = F(A(i,l0)) ⊆ F_0(𝒜,i)` for all `i`, and (2) the pointwise
/// demands of every nonzero off-diagonal D-block entry.
pub(crate) fn proto_column_conditions(f: &TwistingFamily, l0: usize) -> bool {
    let m = f.m();
    let j_sets = diag_j_sets(f, l0);
    for i in 1..=m {
        let fixed = identity_rows(f.a(i, l0));
        let j_i: BTreeSet<usize> = j_sets[i - 1].iter().copied().collect();
        if j_i != fixed {
            return false;
        }
        let f0 = column_sets(f, i).expect("column index in range").f0;
        if !j_i.is_subset(&f0) {
            return false;
        }
    }
    cond2_for_column(f, l0, &j_sets)
}

/// Whether the fourth twisting condition holds restricted to column `l0`,
/// i.e. `Σ_h A(i,h)_{kj}·A(h,l0)_{kj'} = δ_{jj'}·A(i,l0)_{kj}` for all
/// `i, k, j, j'`.  Computed by direct evaluation; on a pre-twisting this
/// coincides with the structural characterization through the column's
/// D-blocks (exercised by the tests).
///
/// Errors when column `l0` is out of range or not quasi-standard.
pub fn check_column_condition4(f: &TwistingFamily, l0: usize) -> Result<bool, String> {
    if !(1..=f.m()).contains(&l0) {
        return Err(format!("column {l0} out of range for m = {}", f.m()));
    }
    if !is_quasi_standard(f, Some(l0)) {
        return Err(format!("column {l0} is not quasi-standard"));
    }
    Ok(column_condition4_direct(f, l0))
}

/// Decides whether a pre-twisting extension of a twisting `r`-block by
/// quasi-standard columns is a twisting map, via the two closure
/// conditions: (1) for every `i`, each row on which some `A(i,l)` with
/// `l > r` acts as the identity is a flip row of column `i`, and (2) every
/// nonzero off-diagonal D-block entry of a column `l > r` forces the
/// pointwise demands on its target column.  The result equals
/// `verify(f).is_twisting`.
///
/// Preconditions, each reported as an error with a witness: `1 ≤ r < m`;
/// `A(i,l) = 0` for `i > r`, `l ≤ r`; the whole grid satisfies the first
/// three twisting conditions (is a pre-twisting); the leading `r×r` block
/// is a twisting family; every column `l > r` is quasi-standard.
pub fn check_extension(f: &TwistingFamily, r: usize) -> Result<bool, String> {
    let (m, n) = (f.m(), f.n());
    if !(1..m).contains(&r) {
        return Err(format!("r = {r} must satisfy 1 ≤ r < m = {m}"));
    }
    for i in r + 1..=m {
        for l in 1..=r {
            if !f.a(i, l).is_zero() {
                return Err(format!(
                    "not an extension of an r-block: A({i},{l}) ≠ 0 with i > r = {r}"
                ));
            }
        }
    }
    let report = f.verify();
    if let Some(v) = report
        .violations
        .iter()
        .find(|v| v.condition != Condition::C4)
    {
        return Err(format!("the family is not a pre-twisting: {v}"));
    }
    let block = TwistingFamily::from_fn(r, n, |i, l| f.a(i, l).clone())
        .expect("block dimensions are valid");
    let block_report = block.verify();
    if !block_report.is_twisting {
        return Err(format!(
            "the leading {r}-block is not a twisting map: {}",
            block_report.violations[0]
        ));
    }
    for l in r + 1..=m {
        if !is_quasi_standard(f, Some(l)) {
            return Err(format!("column {l} is not quasi-standard"));
        }
    }
    // Condition (1): ⋃_{l>r} F(A(i,l)) ⊆ F_0(𝒜,i) for every i.
    for i in 1..=m {
        let f0 = column_sets(f, i).expect("column index in range").f0;
        for l in r + 1..=m {
            if !identity_rows(f.a(i, l)).is_subset(&f0) {
                return Ok(false);
            }
        }
    }
    // Condition (2), over every added column.
    for l in r + 1..=m {
        let j_sets = diag_j_sets(f, l);
        if !cond2_for_column(f, l, &j_sets) {
            return Ok(false);
        }
    }
    Ok(true)
}
