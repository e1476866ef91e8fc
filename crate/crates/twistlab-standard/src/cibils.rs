//! The `n = 2` correspondence between twisting maps of `K^m` with `K^2` and
//! one-valued quivers with a coloration.
//!
//! Every twisting map of `K^m` with `K^2` determines a quiver on `{1..m}`
//! with exactly one outgoing arrow per vertex — the arrow at `l` points to
//! `l` itself when `A(l,l) = Id`, and otherwise to the unique `i ≠ l` with
//! `A(i,l) ≠ 0` — together with the coloration `c_l = A(l,l)_{21}`.
//! Conversely a quiver with a valid coloration rebuilds the map:
//!
//! ```text
//! A(l,l) = Id, A(i,l) = 0                                  at a loop vertex,
//! A(l,l) = [[c_l, 1−c_l], [c_l, 1−c_l]],
//! A(t(l),l) = [[1−c_l, c_l−1], [−c_l, c_l]], rest zero     otherwise.
//! ```

use num_traits::{One, Zero};
use twistlab_core::{QMat, Rat};
use twistlab_twistmap::TwistingFamily;

/// The quiver-with-coloration data of a twisting map of `K^m` with `K^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CibilsData {
    pub m: usize,
    /// `targets[l-1] = t(l)`: the head of the single arrow leaving `l`
    /// (`t(l) = l` marks a loop vertex).
    pub targets: Vec<usize>,
    /// `coloration[l-1] = c_l = A(l,l)_{21}`.
    pub coloration: Vec<Rat>,
    /// Adjacency matrix `M(χ) = (Γ − Id)ᵀ`: row `i` has its one in column
    /// `t(i)`.
    pub adjacency: Vec<Vec<usize>>,
    /// Coefficients of the algebra map `f`: `f(e_i) = Σ_l (F)_{il} e_l` with
    /// `(F)_{il} = A(i,l)_{11} − A(i,l)_{21}`.
    pub f_coeffs: QMat,
    /// Coefficients of the derivation `δ`: `δ(e_i) = Σ_l A(i,l)_{21} e_l`.
    pub delta_coeffs: QMat,
}

/// Extracts the quiver and coloration of a verified twisting map with n = 2.
pub fn cibils_extract(f: &TwistingFamily) -> Result<CibilsData, String> {
    if f.n() != 2 {
        return Err(format!(
            "the quiver-with-coloration correspondence requires n = 2, got n = {}",
            f.n()
        ));
    }
    if !f.verify().is_twisting {
        return Err("input must be a verified twisting map".to_string());
    }
    let m = f.m();
    let mut targets = Vec::with_capacity(m);
    for l in 1..=m {
        if f.a(l, l).is_identity() {
            targets.push(l);
        } else {
            let mut owners = (1..=m).filter(|&i| i != l && !f.a(i, l).is_zero());
            match (owners.next(), owners.next()) {
                (Some(i), None) => targets.push(i),
                _ => {
                    return Err(format!(
                        "column {l} does not have exactly one nonzero off-diagonal block"
                    ))
                }
            }
        }
    }
    let coloration = (1..=m).map(|l| f.a(l, l)[(1, 0)].clone()).collect();
    let gamma = f.rank_matrices().gamma;
    let adjacency = (1..=m)
        .map(|i| (1..=m).map(|l| gamma[l - 1][i - 1] - usize::from(i == l)).collect())
        .collect();
    let f_coeffs = QMat::from_fn(m, m, |i0, l0| {
        let a = f.a(i0 + 1, l0 + 1);
        a[(0, 0)].clone() - a[(1, 0)].clone()
    });
    let delta_coeffs = QMat::from_fn(m, m, |i0, l0| f.a(i0 + 1, l0 + 1)[(1, 0)].clone());
    Ok(CibilsData { m, targets, coloration, adjacency, f_coeffs, delta_coeffs })
}

/// Validates a coloration on the one-valued quiver given by `targets`:
///
/// 1. on a connected component that is exactly a round trip between `i` and
///    `j`, the values satisfy `c_i + c_j = 1`;
/// 2. on every other component, non-loop vertices carry values in `{0,1}`,
///    loop vertices carry `0`, and each arrow whose target is not a loop has
///    one extremity `0` and the other `1`.
fn check_coloration(targets: &[usize], c: &[Rat]) -> Result<(), String> {
    let m = targets.len();
    // Connected components of the underlying undirected graph.
    let mut comp = vec![usize::MAX; m];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for start in 0..m {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut stack = vec![start];
        let mut members = Vec::new();
        comp[start] = id;
        while let Some(v) = stack.pop() {
            members.push(v);
            let t = targets[v] - 1;
            if comp[t] == usize::MAX {
                comp[t] = id;
                stack.push(t);
            }
            for u in 0..m {
                if targets[u] - 1 == v && comp[u] == usize::MAX {
                    comp[u] = id;
                    stack.push(u);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }
    let one = Rat::one();
    for members in &comps {
        let is_round_trip = members.len() == 2 && {
            let (i, j) = (members[0], members[1]);
            targets[i] == j + 1 && targets[j] == i + 1
        };
        if is_round_trip {
            let (i, j) = (members[0], members[1]);
            if c[i].clone() + c[j].clone() != one {
                return Err(format!(
                    "round-trip component {{{},{}}} needs c_{} + c_{} = 1",
                    i + 1,
                    j + 1,
                    i + 1,
                    j + 1
                ));
            }
            continue;
        }
        for &v in members {
            if targets[v] == v + 1 {
                if !c[v].is_zero() {
                    return Err(format!("loop vertex {} needs c = 0", v + 1));
                }
            } else if !c[v].is_zero() && !c[v].is_one() {
                return Err(format!("non-loop vertex {} needs c in {{0,1}}", v + 1));
            }
        }
        for &v in members {
            let t = targets[v] - 1;
            if t == v || targets[t] == t + 1 {
                continue; // loops and arrows into loop vertices are exempt
            }
            if c[v].clone() + c[t].clone() != one {
                return Err(format!(
                    "arrow {} -> {} needs one extremity 0 and the other 1",
                    v + 1,
                    t + 1
                ));
            }
        }
    }
    Ok(())
}

/// Builds the twisting map of `K^m` with `K^2` attached to a one-valued
/// quiver (`targets[l-1] = t(l)`) with a valid coloration.
pub fn cibils_build(m: usize, targets: &[usize], coloration: &[Rat]) -> Result<TwistingFamily, String> {
    if m == 0 {
        return Err("m must be positive".to_string());
    }
    if targets.len() != m || coloration.len() != m {
        return Err(format!(
            "expected {m} targets and {m} coloration values, got {} and {}",
            targets.len(),
            coloration.len()
        ));
    }
    if let Some(l) = (0..m).find(|&l| targets[l] < 1 || targets[l] > m) {
        return Err(format!("target of vertex {} out of range", l + 1));
    }
    check_coloration(targets, coloration)?;
    TwistingFamily::from_fn(m, 2, |i, l| {
        if targets[l - 1] == l {
            // Loop vertex: the identity column.
            if i == l {
                QMat::identity(2)
            } else {
                QMat::zeros(2, 2)
            }
        } else {
            let a = coloration[l - 1].clone();
            let one = Rat::one();
            if i == l {
                QMat::from_fn(2, 2, |_, c| {
                    if c == 0 {
                        a.clone()
                    } else {
                        one.clone() - a.clone()
                    }
                })
            } else if i == targets[l - 1] {
                QMat::from_rows(vec![
                    vec![one.clone() - a.clone(), a.clone() - one.clone()],
                    vec![-a.clone(), a.clone()],
                ])
            } else {
                QMat::zeros(2, 2)
            }
        }
    })
}
