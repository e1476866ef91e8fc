//! Verification of the four twisting-map conditions.
//!
//! A family `(A(i,l))` of `n × n` matrices over `K` defines a twisting map
//! exactly when:
//!
//! * **C1** — `δ_{ii'}·A(i,l) = A(i,l)·A(i',l)` for all `i`, `i'`, `l`
//!   (each column of the grid is a family of orthogonal idempotents);
//! * **C2** — `A(i,l)·𝟙 = δ_{il}·𝟙` for all `i`, `l` (rows of `A(i,l)` sum
//!   to `δ_{il}`);
//! * **C3** — `Σ_i A(i,l) = Id` for all `l`;
//! * **C4** — `Σ_h A(i,h)_{kj}·A(h,l)_{kj'} = δ_{jj'}·A(i,l)_{kj}` for all
//!   `i`, `j`, `j'`, `k`, `l`.
//!
//! [`verify`] performs the full check and reports *every* failing condition
//! together with a localized witness, so a caller can see exactly which
//! instance of which identity broke.

use crate::{ones_vector, TwistingFamily};
use num_traits::{One, Zero};
use std::fmt;
use twistlab_core::Rat;

/// One of the four twisting-map conditions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Condition {
    /// `δ_{ii'}·A(i,l) = A(i,l)·A(i',l)`.
    C1,
    /// `A(i,l)·𝟙 = δ_{il}·𝟙`.
    C2,
    /// `Σ_i A(i,l) = Id`.
    C3,
    /// `Σ_h A(i,h)_{kj}·A(h,l)_{kj'} = δ_{jj'}·A(i,l)_{kj}`.
    C4,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::C1 => write!(f, "C1"),
            Condition::C2 => write!(f, "C2"),
            Condition::C3 => write!(f, "C3"),
            Condition::C4 => write!(f, "C4"),
        }
    }
}

/// The indices pinning down a single failing instance of a condition.
/// Fields not used by the condition are `None`; all values are 1-based.
///
/// * C1 uses `i`, `i2` (the `i'`), `l`, and the first differing entry `(k, j)`.
/// * C2 uses `i`, `l`, and the failing row `k`.
/// * C3 uses `l` and the first differing entry `(k, j)`.
/// * C4 uses `i`, `l`, `j`, `j2` (the `j'`), and `k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Witness {
    pub i: Option<usize>,
    pub i2: Option<usize>,
    pub l: Option<usize>,
    pub j: Option<usize>,
    pub j2: Option<usize>,
    pub k: Option<usize>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(i) = self.i {
            parts.push(format!("i={i}"));
        }
        if let Some(i2) = self.i2 {
            parts.push(format!("i'={i2}"));
        }
        if let Some(l) = self.l {
            parts.push(format!("l={l}"));
        }
        if let Some(j) = self.j {
            parts.push(format!("j={j}"));
        }
        if let Some(j2) = self.j2 {
            parts.push(format!("j'={j2}"));
        }
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        write!(f, "({})", parts.join(", "))
    }
}

/// A single failing instance of a condition.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Violation {
    pub condition: Condition,
    pub witness: Witness,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}", self.condition, self.witness)
    }
}

/// The outcome of [`verify`]: `is_twisting` holds exactly when `violations`
/// is empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerifyReport {
    pub is_twisting: bool,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    /// Whether some violation of `condition` mentions column `l` (and, when
    /// given, the row/column indices `k`, `j` of the mutated entry).  Used to
    /// check that a reported witness localizes a known defect.
    pub fn mentions(&self, condition: Condition, l: usize) -> bool {
        self.violations
            .iter()
            .any(|v| v.condition == condition && (v.witness.l == Some(l) || v.witness.i == Some(l)))
    }
}

/// Checks the four conditions on the whole grid and reports every failure.
///
/// The scan order is deterministic: C1, C2, C3, C4, each with its indices in
/// lexicographic order; for the matrix identities (C1, C3) the witness points
/// at the first differing entry.
pub fn verify(f: &TwistingFamily) -> VerifyReport {
    let m = f.m();
    let n = f.n();
    let mut violations = Vec::new();

    // C1: each column is a family of orthogonal idempotents.
    for i in 1..=m {
        for i2 in 1..=m {
            for l in 1..=m {
                let prod = f.a(i, l).matmul(f.a(i2, l));
                let expected = if i == i2 {
                    f.a(i, l).clone()
                } else {
                    twistlab_core::QMat::zeros(n, n)
                };
                if prod != expected {
                    let (k0, j0) = first_diff(&prod, &expected);
                    violations.push(Violation {
                        condition: Condition::C1,
                        witness: Witness {
                            i: Some(i),
                            i2: Some(i2),
                            l: Some(l),
                            j: Some(j0 + 1),
                            j2: None,
                            k: Some(k0 + 1),
                        },
                    });
                }
            }
        }
    }

    // C2: A(i,l)·𝟙 = δ_{il}·𝟙.
    let ones = ones_vector(n);
    for i in 1..=m {
        for l in 1..=m {
            let image = f.a(i, l).matvec(&ones);
            let target = if i == l { Rat::one() } else { Rat::zero() };
            for (k0, value) in image.iter().enumerate() {
                if *value != target {
                    violations.push(Violation {
                        condition: Condition::C2,
                        witness: Witness {
                            i: Some(i),
                            i2: None,
                            l: Some(l),
                            j: None,
                            j2: None,
                            k: Some(k0 + 1),
                        },
                    });
                    break;
                }
            }
        }
    }

    // C3: the columns of the grid sum to the identity.
    for l in 1..=m {
        let mut sum = twistlab_core::QMat::zeros(n, n);
        for i in 1..=m {
            sum = sum.add(f.a(i, l));
        }
        let id = twistlab_core::QMat::identity(n);
        if sum != id {
            let (k0, j0) = first_diff(&sum, &id);
            violations.push(Violation {
                condition: Condition::C3,
                witness: Witness {
                    i: None,
                    i2: None,
                    l: Some(l),
                    j: Some(j0 + 1),
                    j2: None,
                    k: Some(k0 + 1),
                },
            });
        }
    }

    // C4: Σ_h A(i,h)_{kj}·A(h,l)_{kj'} = δ_{jj'}·A(i,l)_{kj}.
    for i in 1..=m {
        for l in 1..=m {
            for k in 1..=n {
                for j in 1..=n {
                    for j2 in 1..=n {
                        let mut sum = Rat::zero();
                        for h in 1..=m {
                            sum += f.a(i, h)[(k - 1, j - 1)].clone()
                                * f.a(h, l)[(k - 1, j2 - 1)].clone();
                        }
                        let rhs = if j == j2 {
                            f.a(i, l)[(k - 1, j - 1)].clone()
                        } else {
                            Rat::zero()
                        };
                        if sum != rhs {
                            violations.push(Violation {
                                condition: Condition::C4,
                                witness: Witness {
                                    i: Some(i),
                                    i2: None,
                                    l: Some(l),
                                    j: Some(j),
                                    j2: Some(j2),
                                    k: Some(k),
                                },
                            });
                        }
                    }
                }
            }
        }
    }

    VerifyReport {
        is_twisting: violations.is_empty(),
        violations,
    }
}

/// First entry (row-major) where two equally-sized matrices differ.
fn first_diff(a: &twistlab_core::QMat, b: &twistlab_core::QMat) -> (usize, usize) {
    for k in 0..a.rows() {
        for j in 0..a.cols() {
            if a[(k, j)] != b[(k, j)] {
                return (k, j);
            }
        }
    }
    unreachable!("first_diff called on equal matrices")
}
