//! Orbit classification of twisting families under relabelling.

use crate::quiver::{quiver_of, StandardQuiver};
use std::collections::HashMap;
use twistlab_core::Rat;
use twistlab_twistmap::TwistingFamily;

/// One isomorphism class of twisting maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassEntry {
    /// The canonical form representing the class.
    pub representative: TwistingFamily,
    /// How many of the classified families fell into this class.
    pub size: usize,
    /// Rank matrix `Γ` of the representative.
    pub gamma: Vec<Vec<usize>>,
    /// Rank matrix `Γ̃` of the representative.
    pub gamma_tilde: Vec<Vec<usize>>,
    /// `ΣTr = Σ_i Tr A(i,i)` of the representative (a class invariant).
    pub sum_tr: Rat,
    /// The quiver of the representative, when it is quasi-standard.
    pub quiver: Option<StandardQuiver>,
}

/// The outcome of classifying a list of families of common size `(m,n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub m: usize,
    pub n: usize,
    /// Number of families classified; equals the sum of the class sizes.
    pub total: usize,
    /// Classes ordered by `ΣTr` descending, ties by the representative's
    /// lexicographic key.
    pub classes: Vec<ClassEntry>,
}

/// Groups families by their canonical form under the `S_m × S_n` relabelling
/// action.  Requires a nonempty list with a common `(m,n)`.
pub fn classify(fams: &[TwistingFamily]) -> Result<ClassificationReport, String> {
    let first = fams.first().ok_or_else(|| "cannot classify an empty list".to_string())?;
    let (m, n) = (first.m(), first.n());
    for (idx, f) in fams.iter().enumerate() {
        if f.m() != m || f.n() != n {
            return Err(format!(
                "mixed dimensions: expected ({m},{n}), found ({},{}) at index {idx}",
                f.m(),
                f.n()
            ));
        }
    }
    let mut counts: HashMap<TwistingFamily, usize> = HashMap::new();
    for f in fams {
        let (rep, _, _) = f.canonical_form()?;
        *counts.entry(rep).or_insert(0) += 1;
    }
    let mut classes: Vec<ClassEntry> = counts
        .into_iter()
        .map(|(rep, size)| {
            let ranks = rep.rank_matrices();
            ClassEntry {
                sum_tr: rep.sum_trace(),
                gamma: ranks.gamma,
                gamma_tilde: ranks.gamma_tilde,
                quiver: quiver_of(&rep).ok(),
                representative: rep,
                size,
            }
        })
        .collect();
    classes.sort_by(|x, y| {
        y.sum_tr
            .cmp(&x.sum_tr)
            .then_with(|| x.representative.key().cmp(&y.representative.key()))
    });
    Ok(ClassificationReport { m, n, total: fams.len(), classes })
}
