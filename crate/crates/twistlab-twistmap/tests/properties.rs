//! Randomized property suites for the family data model: duality,
//! permutation action, canonicalization, and rank-matrix invariants.

use num_traits::One;
use proptest::prelude::*;
use twistlab_core::{rat, Perm, QMat, Rat};
use twistlab_twistmap::TwistingFamily;

/// The one-parameter verified family of K² with K².
fn a_family(a: Rat) -> TwistingFamily {
    let one = Rat::one();
    let a11 = QMat::from_rows(vec![
        vec![a.clone(), one.clone() - a.clone()],
        vec![a.clone(), one.clone() - a.clone()],
    ]);
    let a22 = QMat::from_rows(vec![
        vec![one.clone() - a.clone(), a.clone()],
        vec![one.clone() - a.clone(), a.clone()],
    ]);
    let a21 = QMat::identity(2).sub(&a11);
    let a12 = QMat::identity(2).sub(&a22);
    TwistingFamily::new(2, 2, vec![vec![a11, a12], vec![a21, a22]]).unwrap()
}

/// Small rational entries keep arithmetic fast while exercising signs and
/// non-integers.
fn small_rat() -> impl Strategy<Value = Rat> {
    (-2i64..=2, 1i64..=2).prop_map(|(p, q)| rat(p, q))
}

/// An arbitrary candidate family (usually not a twisting map).
fn candidate() -> impl Strategy<Value = TwistingFamily> {
    (1usize..=3, 1usize..=3)
        .prop_flat_map(|(m, n)| {
            prop::collection::vec(small_rat(), m * m * n * n)
                .prop_map(move |entries| {
                    let mut it = entries.into_iter();
                    TwistingFamily::from_fn(m, n, |_, _| {
                        QMat::from_fn(n, n, |_, _| it.next().expect("sized exactly"))
                    })
                    .expect("dimensions are consistent")
                })
        })
}

/// A random permutation of `{0..size-1}` as a shuffle of the identity.
fn perm(size: usize) -> impl Strategy<Value = Perm> {
    Just((0..size).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| Perm::from_images(images).expect("shuffle is a bijection"))
}

/// A random *verified* family: a flip, an a-family, or a direct sum of such,
/// relabelled by random permutations.  Every value this strategy yields
/// satisfies the four twisting-map conditions.
fn verified_family() -> impl Strategy<Value = TwistingFamily> {
    let base = prop_oneof![
        (1usize..=3, 1usize..=3).prop_map(|(m, n)| TwistingFamily::flip(m, n)),
        small_rat().prop_map(a_family),
        (1usize..=2, small_rat())
            .prop_map(|(m, a)| TwistingFamily::flip(m, 2).direct_sum(&a_family(a)).unwrap()),
    ];
    base.prop_flat_map(|f| {
        let (m, n) = (f.m(), f.n());
        (Just(f), perm(m), perm(n))
    })
    .prop_map(|(f, sigma, varsigma)| f.apply_perms(&sigma, &varsigma).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// Duality is an involution, matches the B-matrix view, and preserves
    /// the verification verdict.
    #[test]
    fn dual_involution_and_verdict(f in candidate()) {
        let d = f.dual();
        prop_assert_eq!(d.dual(), f.clone());
        for j in 1..=f.n() {
            for k in 1..=f.n() {
                prop_assert_eq!(f.b_matrix(j, k).unwrap(), d.a(j, k).clone());
            }
        }
        prop_assert_eq!(f.verify().is_twisting, d.verify().is_twisting);
    }

    /// The relabelling action composes like a right group action and
    /// conjugates the rank matrices.
    #[test]
    fn apply_perms_group_action(f in candidate(), seed in any::<u64>()) {
        let m = f.m();
        let n = f.n();
        // Derive two deterministic permutation pairs from the seed.
        let sigmas = Perm::all(m);
        let varsigmas = Perm::all(n);
        let s1 = &sigmas[(seed % sigmas.len() as u64) as usize];
        let s2 = &sigmas[((seed / 7) % sigmas.len() as u64) as usize];
        let v1 = &varsigmas[((seed / 11) % varsigmas.len() as u64) as usize];
        let v2 = &varsigmas[((seed / 13) % varsigmas.len() as u64) as usize];

        let lhs = f.apply_perms(s1, v1).unwrap().apply_perms(s2, v2).unwrap();
        let rhs = f.apply_perms(&s1.compose(s2), &v1.compose(v2)).unwrap();
        prop_assert_eq!(lhs, rhs);

        let id = f.apply_perms(&Perm::identity(m), &Perm::identity(n)).unwrap();
        prop_assert_eq!(id, f.clone());

        let g = f.apply_perms(s1, v1).unwrap();
        let rf = f.rank_matrices();
        let rg = g.rank_matrices();
        for i in 0..m {
            for l in 0..m {
                prop_assert_eq!(rg.gamma[i][l], rf.gamma[s1.apply(i)][s1.apply(l)]);
            }
        }
        for j in 0..n {
            for k in 0..n {
                prop_assert_eq!(rg.gamma_tilde[j][k], rf.gamma_tilde[v1.apply(j)][v1.apply(k)]);
            }
        }
    }

    /// Canonical forms are constant on relabelling orbits.
    #[test]
    fn canonical_form_orbit_invariance(f in candidate(), seed in any::<u64>()) {
        let sigmas = Perm::all(f.m());
        let varsigmas = Perm::all(f.n());
        let s = &sigmas[(seed % sigmas.len() as u64) as usize];
        let v = &varsigmas[((seed / 5) % varsigmas.len() as u64) as usize];
        let (canon_f, cs, cv) = f.canonical_form().unwrap();
        prop_assert_eq!(&canon_f, &f.apply_perms(&cs, &cv).unwrap());
        let g = f.apply_perms(s, v).unwrap();
        let (canon_g, _, _) = g.canonical_form().unwrap();
        prop_assert_eq!(canon_g, canon_f);
    }

    /// Verified families satisfy the rank-matrix laws: entry bounds, column
    /// sums, and equal traces; and permutation relabellings stay verified.
    #[test]
    fn verified_rank_invariants(f in verified_family()) {
        prop_assert!(f.verify().is_twisting);
        let r = f.rank_matrices();
        prop_assert!(r.check_bounds(f.m(), f.n()).is_ok());
        prop_assert_eq!(r.trace_gamma(), r.trace_gamma_tilde());
        // Duals of twisting maps are twisting maps.
        prop_assert!(f.dual().verify().is_twisting);
    }

    /// When every diagonal block of a verified square family has rank one,
    /// both rank matrices are all-ones.
    #[test]
    fn rank_one_diagonal_forces_all_ones(a in small_rat(), seed in any::<u64>()) {
        let f = a_family(a);
        let sigmas = Perm::all(2);
        let s = &sigmas[(seed % 2) as usize];
        let v = &sigmas[((seed / 3) % 2) as usize];
        let g = f.apply_perms(s, v).unwrap();
        let r = g.rank_matrices();
        if (0..2).all(|i| r.gamma[i][i] == 1) {
            prop_assert!(r.gamma.iter().all(|row| row.iter().all(|&x| x == 1)));
            prop_assert!(r.gamma_tilde.iter().all(|row| row.iter().all(|&x| x == 1)));
        }
    }

    /// Triangular rank matrix forces 0,1 diagonal blocks (here: every flip
    /// and every direct sum of flips is triangular with 0,1 diagonals; the
    /// a-family is triangular only at a ∈ {0,1} where its blocks are 0,1).
    #[test]
    fn triangular_gamma_has_zero_one_diagonals(f in verified_family()) {
        let r = f.rank_matrices();
        let m = f.m();
        let upper = (0..m).all(|i| (0..i).all(|l| r.gamma[i][l] == 0));
        let lower = (0..m).all(|i| (i + 1..m).all(|l| r.gamma[i][l] == 0));
        if upper || lower {
            for l in 1..=m {
                prop_assert!(f.a(l, l).is_zero_one(), "A({l},{l}) must be a 0,1-matrix");
            }
        }
    }

    /// JSON round trip is the identity and canonical.
    #[test]
    fn json_round_trip(f in candidate()) {
        let text = f.to_json();
        let back = TwistingFamily::from_json(&text).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(back.to_json(), text);
    }
}
