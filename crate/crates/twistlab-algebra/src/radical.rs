//! The Jacobson radical of a twisted algebra.
//!
//! Every two-sided ideal of `K^n (x) K^m` is spanned by the basis cells it
//! meets, so the radical — the largest nilpotent ideal in this
//! finite-dimensional setting — is the union of all nilpotent monomial
//! ideals.  For quasi-standard twisting maps it has the closed form
//! `⊕ K x_{jl}` over the cells with `A(l,l)_{jj} ≠ 1`; in general a guarded
//! subset search over the monomial ideals settles it.

use crate::table::{build_algebra, check_unital_associative, TwistedAlgebra};
use num_traits::{One, Zero};
use twistlab_twistmap::TwistingFamily;

/// Largest dimension `n·m` accepted by the general subset search.
pub const RADICAL_GUARD: usize = 12;

/// The Jacobson radical of a twisted algebra, described on the monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalReport {
    /// Cells `(j,l)` spanning the radical, sorted.
    pub radical_basis: Vec<(usize, usize)>,
    /// Dimension of the radical.
    pub dim: usize,
    /// Least `t ≥ 1` with `J^t = 0` (so the zero radical has index 1).
    pub nilpotency_index: usize,
    /// Whether `J² = 0`.
    pub square_zero: bool,
    /// Dimension of the semisimple quotient, `nm − dim`.
    pub quotient_dim: usize,
}

/// Whether column `l0` of the family is quasi-standard: the diagonal block
/// is a 0,1-matrix, all diagonal entries of the column are 0 or 1, and the
/// blocks `D_(i)^{uv} = A(i,l0)` restricted to `J_u × J_v` vanish or
/// concentrate per the quasi-standard support rules.
fn quasi_standard_column(f: &TwistingFamily, l0: usize) -> bool {
    let (m, n) = (f.m(), f.n());
    let diag = f.a(l0, l0);
    if !diag.is_zero_one() {
        return false;
    }
    // The rest of the conditions speak of c_k(A(l0,l0)), the unique column
    // holding the 1 of row k; rows fixed by the diagonal block get c_k = k.
    let mut c = vec![0usize; n];
    for k in 0..n {
        let ones: Vec<usize> =
            (0..n).filter(|&j| !diag[(k, j)].is_zero()).collect();
        match ones[..] {
            [j] => c[k] = j + 1,
            _ => return false,
        }
    }
    // Diagonal entries of every block in the column are 0 or 1; J_i collects
    // the rows where A(i,l0) has a diagonal 1.
    let mut j_sets: Vec<Vec<usize>> = vec![Vec::new(); m];
    for i in 1..=m {
        let a = f.a(i, l0);
        for k in 1..=n {
            let e = &a[(k - 1, k - 1)];
            if !e.is_zero() && !e.is_one() {
                return false;
            }
            if e.is_one() {
                j_sets[i - 1].push(k);
            }
        }
    }
    // D_(i)^{uv} = 0 whenever u ≠ i and v ∉ {i, l0}.
    for i in 1..=m {
        for (u, rows) in j_sets.iter().enumerate() {
            if u + 1 == i {
                continue;
            }
            for (v, cols) in j_sets.iter().enumerate() {
                if v + 1 == i || v + 1 == l0 {
                    continue;
                }
                let a = f.a(i, l0);
                for &k in rows {
                    for &j in cols {
                        if !a[(k - 1, j - 1)].is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
    }
    // Rows of D_(i)^{uv} for v ≠ l0 have at most one nonzero entry, and that
    // entry sits in a column with the same c-value as its row.
    for i in 1..=m {
        let a = f.a(i, l0);
        for rows in &j_sets {
            for (v, cols) in j_sets.iter().enumerate() {
                if v + 1 == l0 {
                    continue;
                }
                for &k in rows {
                    let supp: Vec<usize> = cols
                        .iter()
                        .copied()
                        .filter(|&d| !a[(k - 1, d - 1)].is_zero())
                        .collect();
                    match supp[..] {
                        [] => {}
                        [d] => {
                            if c[d - 1] != c[k - 1] {
                                return false;
                            }
                        }
                        _ => return false,
                    }
                }
            }
        }
    }
    true
}

/// Whether every column of the family is quasi-standard.
pub(crate) fn all_columns_quasi_standard(f: &TwistingFamily) -> bool {
    (1..=f.m()).all(|l0| quasi_standard_column(f, l0))
}

/// Whether the span of `cells` is a two-sided ideal of the table.
fn is_ideal(alg: &TwistedAlgebra, member: &[bool]) -> bool {
    let dim = alg.dim();
    (0..dim).filter(|&b| member[b]).all(|b| {
        (0..dim).all(|a| {
            (alg.coeff(a, b).is_zero() || member[alg.product_support(a, b)])
                && (alg.coeff(b, a).is_zero() || member[alg.product_support(b, a)])
        })
    })
}

/// Follows the powers of the span of `cells`: returns the nilpotency index
/// and whether the square vanishes, or `None` when the powers stabilise on a
/// nonzero set.
fn power_profile(alg: &TwistedAlgebra, cells: &[usize]) -> Option<(usize, bool)> {
    if cells.is_empty() {
        return Some((1, true));
    }
    let dim = alg.dim();
    let mut current = cells.to_vec();
    for t in 2..=dim + 1 {
        let mut next = vec![false; dim];
        for &a in &current {
            for &b in cells {
                if !alg.coeff(a, b).is_zero() {
                    next[alg.product_support(a, b)] = true;
                }
            }
        }
        let next: Vec<usize> = (0..dim).filter(|&s| next[s]).collect();
        if next.is_empty() {
            return Some((t, t <= 2));
        }
        if next == current {
            return None;
        }
        current = next;
    }
    None
}

/// Union of all nilpotent monomial ideals, found by enumerating the subsets
/// of the basis.  Caller guarantees `alg.dim() ≤ RADICAL_GUARD`.
pub(crate) fn subset_search(alg: &TwistedAlgebra) -> Vec<usize> {
    let dim = alg.dim();
    assert!(dim <= RADICAL_GUARD, "subset search dimension over the guard");
    let mut union = vec![false; dim];
    for mask in 1u32..(1 << dim) {
        let member: Vec<bool> = (0..dim).map(|s| mask >> s & 1 == 1).collect();
        if member.iter().zip(&union).all(|(m, u)| !m || *u) {
            continue; // already inside the union
        }
        let cells: Vec<usize> = (0..dim).filter(|&s| member[s]).collect();
        if is_ideal(alg, &member) && power_profile(alg, &cells).is_some() {
            for s in cells {
                union[s] = true;
            }
        }
    }
    (0..dim).filter(|&s| union[s]).collect()
}

fn report_from_cells(alg: &TwistedAlgebra, cells: Vec<usize>) -> RadicalReport {
    let member: Vec<bool> = {
        let mut v = vec![false; alg.dim()];
        for &s in &cells {
            v[s] = true;
        }
        v
    };
    assert!(is_ideal(alg, &member), "radical cells must span a two-sided ideal");
    let (nilpotency_index, square_zero) =
        power_profile(alg, &cells).expect("radical cells must span a nilpotent ideal");
    let dim = cells.len();
    RadicalReport {
        radical_basis: cells.into_iter().map(|s| alg.label(s)).collect(),
        dim,
        nilpotency_index,
        square_zero,
        quotient_dim: alg.dim() - dim,
    }
}

/// The Jacobson radical of the twisted algebra of `f`.
///
/// For a verified quasi-standard twisting map the closed form
/// `J = ⊕ K x_{jl}` over the cells with `A(l,l)_{jj} ≠ 1` applies at any
/// size.  Otherwise the table must be unital associative and of dimension at
/// most [`RADICAL_GUARD`], and the radical is the union of all nilpotent
/// monomial ideals.
///
/// Errors when the table does not match the family, when the guard is
/// exceeded, or when the table is not a unital associative algebra.
pub fn jacobson_radical(
    alg: &TwistedAlgebra,
    f: &TwistingFamily,
) -> Result<RadicalReport, String> {
    if *alg != build_algebra(f) {
        return Err("the multiplication table does not match the family".to_string());
    }
    if f.verify().is_twisting && all_columns_quasi_standard(f) {
        let cells: Vec<usize> = (0..alg.dim())
            .filter(|&s| {
                let (j, l) = alg.label(s);
                !f.a(l, l)[(j - 1, j - 1)].is_one()
            })
            .collect();
        return Ok(report_from_cells(alg, cells));
    }
    if alg.dim() > RADICAL_GUARD {
        return Err(format!(
            "general radical search is guarded at nm <= {RADICAL_GUARD}, got nm = {}; \
             only verified quasi-standard maps are handled beyond the guard",
            alg.dim()
        ));
    }
    if !check_unital_associative(alg) {
        return Err(
            "the table is not a unital associative algebra, so the Jacobson radical \
             is undefined"
                .to_string(),
        );
    }
    Ok(report_from_cells(alg, subset_search(alg)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{a_family, non_associative_family, qm};
    use twistlab_core::{rat, rint, QMat};

    fn radical_of(f: &TwistingFamily) -> RadicalReport {
        jacobson_radical(&build_algebra(f), f).unwrap()
    }

    #[test]
    fn flip_is_semisimple() {
        let report = radical_of(&TwistingFamily::flip(3, 2));
        assert_eq!(
            report,
            RadicalReport {
                radical_basis: vec![],
                dim: 0,
                nilpotency_index: 1,
                square_zero: true,
                quotient_dim: 6,
            }
        );
    }

    #[test]
    fn degenerate_family_members_have_a_square_zero_radical() {
        let report = radical_of(&a_family(rint(0)));
        assert_eq!(
            report,
            RadicalReport {
                radical_basis: vec![(1, 1), (2, 2)],
                dim: 2,
                nilpotency_index: 2,
                square_zero: true,
                quotient_dim: 2,
            }
        );
        let report = radical_of(&a_family(rint(1)));
        assert_eq!(report.radical_basis, vec![(1, 2), (2, 1)]);
        assert_eq!(report.nilpotency_index, 2);
    }

    #[test]
    fn generic_family_members_are_semisimple() {
        // a ∉ {0,1} fails the quasi-standard gate, so the subset search runs
        // and finds no nonzero nilpotent monomial ideal.
        for a in [rint(2), rat(1, 2), rat(-3, 7)] {
            let f = a_family(a);
            assert!(!all_columns_quasi_standard(&f));
            let report = radical_of(&f);
            assert_eq!(report.dim, 0);
            assert_eq!(report.quotient_dim, 4);
            assert_eq!(report.nilpotency_index, 1);
            assert!(report.square_zero);
        }
    }

    #[test]
    fn closed_form_agrees_with_the_subset_search() {
        for f in [TwistingFamily::flip(2, 2), a_family(rint(0)), a_family(rint(1))] {
            assert!(all_columns_quasi_standard(&f));
            let alg = build_algebra(&f);
            let closed = jacobson_radical(&alg, &f).unwrap();
            let searched: Vec<(usize, usize)> =
                subset_search(&alg).into_iter().map(|s| alg.label(s)).collect();
            assert_eq!(closed.radical_basis, searched);
        }
    }

    #[test]
    fn radical_is_idempotent_free() {
        for a in [rint(0), rint(1)] {
            let f = a_family(a);
            for (j, l) in radical_of(&f).radical_basis {
                assert!(f.a(l, l)[(j - 1, j - 1)].is_zero());
            }
        }
    }

    #[test]
    fn table_family_mismatch_is_rejected() {
        let err = jacobson_radical(&build_algebra(&TwistingFamily::flip(2, 2)), &a_family(rint(0)))
            .unwrap_err();
        assert!(err.contains("does not match"), "unexpected message: {err}");
    }

    #[test]
    fn guard_rejects_large_non_quasi_standard_input() {
        // A broken (4,4) grid: the flip with one diagonal block zeroed out.
        let f = TwistingFamily::from_fn(4, 4, |i, l| {
            if (i, l) == (1, 1) {
                QMat::zeros(4, 4)
            } else if i == l {
                QMat::identity(4)
            } else {
                QMat::zeros(4, 4)
            }
        })
        .unwrap();
        let err = jacobson_radical(&build_algebra(&f), &f).unwrap_err();
        assert!(err.contains("guarded at nm <= 12"), "unexpected message: {err}");
    }

    #[test]
    fn non_associative_tables_are_rejected() {
        let f = non_associative_family();
        let err = jacobson_radical(&build_algebra(&f), &f).unwrap_err();
        assert!(err.contains("not a unital associative"), "unexpected message: {err}");
    }

    #[test]
    fn quasi_standard_column_rules_reject_bad_diagonals() {
        assert!(all_columns_quasi_standard(&TwistingFamily::flip(3, 2)));
        // A 0,1 diagonal block with a two-one row has no c function.
        let f = TwistingFamily::new(
            2,
            2,
            vec![
                vec![qm(&[&[1, 1], &[0, 0]]), QMat::zeros(2, 2)],
                vec![qm(&[&[0, -1], &[0, 1]]), QMat::identity(2)],
            ],
        )
        .unwrap();
        assert!(!quasi_standard_column(&f, 1));
    }
}
