//! Orbit canonicalization under the `S_m × S_n` relabelling action.
//!
//! Two verified families are isomorphic exactly when some pair `(σ, ς)` of
//! permutations carries one to the other, so the lexicographically minimal
//! relabelling of the flattened λ-tensor is a complete isomorphism invariant.

use crate::TwistingFamily;
use twistlab_core::Perm;

/// Maximum factor size for the full `m!·n!` permutation scan.
const CANON_MAX: usize = 6;

/// The canonical representative of the isomorphism class of `f`, together
/// with a minimizing permutation pair: the returned family equals
/// `f.apply_perms(σ, ς)` and its [`TwistingFamily::key`] is lexicographically
/// minimal over all pairs.  Two families are isomorphic iff their canonical
/// forms are equal.
///
/// Guarded by `m, n ≤ 6`; the scan visits all `m!·n!` pairs in lexicographic
/// permutation order (ties keep the first pair found), so the result is
/// deterministic.
pub fn canonical_form(f: &TwistingFamily) -> Result<(TwistingFamily, Perm, Perm), String> {
    if f.m() > CANON_MAX || f.n() > CANON_MAX {
        return Err(format!(
            "canonical_form scans m!*n! relabellings and requires m, n <= {CANON_MAX}; got m = {}, n = {}",
            f.m(),
            f.n()
        ));
    }
    let mut best: Option<(Vec<twistlab_core::Rat>, TwistingFamily, Perm, Perm)> = None;
    let varsigmas = Perm::all(f.n());
    for sigma in Perm::all(f.m()) {
        for varsigma in &varsigmas {
            let candidate = f
                .apply_perms(&sigma, varsigma)
                .expect("permutation sizes match");
            let key = candidate.key();
            let better = match &best {
                None => true,
                Some((best_key, _, _, _)) => key < *best_key,
            };
            if better {
                best = Some((key, candidate, sigma.clone(), varsigma.clone()));
            }
        }
    }
    let (_, family, sigma, varsigma) = best.expect("at least the identity pair is scanned");
    Ok((family, sigma, varsigma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tests::a_family;
    use crate::TwistingFamily;
    use twistlab_core::rat;

    #[test]
    fn canonical_form_is_orbit_invariant() {
        let f = a_family(rat(3, 1));
        let (canon_f, sigma, varsigma) = f.canonical_form().unwrap();
        assert_eq!(canon_f, f.apply_perms(&sigma, &varsigma).unwrap());
        for s in Perm::all(2) {
            for v in Perm::all(2) {
                let g = f.apply_perms(&s, &v).unwrap();
                let (canon_g, _, _) = g.canonical_form().unwrap();
                assert_eq!(canon_g, canon_f);
            }
        }
    }

    #[test]
    fn a_and_one_minus_a_share_canonical_form() {
        let (c3, _, _) = a_family(rat(3, 1)).canonical_form().unwrap();
        let (cm2, _, _) = a_family(rat(-2, 1)).canonical_form().unwrap();
        assert_eq!(c3, cm2);
        // Distinct parameters outside the a ↔ 1-a pairing are not isomorphic.
        let (c4, _, _) = a_family(rat(4, 1)).canonical_form().unwrap();
        assert_ne!(c3, c4);
    }

    #[test]
    fn guard_rejects_large_factors() {
        let f = TwistingFamily::flip(7, 2);
        assert!(f.canonical_form().is_err());
    }
}
