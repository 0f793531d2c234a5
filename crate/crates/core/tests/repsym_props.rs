use proptest::prelude::*;

use cohint::linalg::pair_int;
use cohint::repsym::{
    decompose_irreducibles, irreducible_character, is_orthogonal, is_symmetric, is_weyl_invariant, recompose,
    self_dual_indicator, SelfDuality, WeightMultiset,
};
use cohint::rootdata::{CartanType, GroupSpec, Isogeny, RootDatum};

fn groups() -> Vec<RootDatum> {
    use CartanType::*;
    [(A, 1), (A, 2), (B, 2), (G, 2), (A, 3), (C, 3)]
        .iter()
        .map(|&(k, r)| RootDatum::new(&GroupSpec::simple(k, r, Isogeny::SimplyConnected)).unwrap())
        .collect()
}

/// A sum of up to three irreducibles with small highest weights.
fn rep(rd: &RootDatum, picks: &[(Vec<i64>, i64)]) -> WeightMultiset {
    picks.iter().fold(WeightMultiset::new(rd.rank()), |acc, (lambda, m)| {
        let lambda: Vec<i64> = lambda.iter().take(rd.rank()).cloned().collect();
        acc.direct_sum(&irreducible_character(rd, &lambda).scaled(*m))
    })
}

fn picks() -> impl Strategy<Value = Vec<(Vec<i64>, i64)>> {
    prop::collection::vec((prop::collection::vec(0i64..=1, 3), 1i64..=2), 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn decomposition_round_trips(k in 0usize..6, p in picks()) {
        let rd = &groups()[k];
        let v = rep(rd, &p);
        prop_assert!(is_weyl_invariant(rd, &v));
        let parts = decompose_irreducibles(rd, &v).unwrap();
        prop_assert_eq!(recompose(rd, &parts), v);
    }

    #[test]
    fn two_out_of_three(k in 0usize..6, p1 in picks(), p2 in picks(), sym2 in any::<bool>()) {
        let rd = &groups()[k];
        let half = rep(rd, &p1);
        let v1 = half.direct_sum(&half.dual());
        let v2 = if sym2 { let h = rep(rd, &p2); h.direct_sum(&h.dual()) } else { rep(rd, &p2) };
        let sum = v1.direct_sum(&v2);
        if is_symmetric(rd, &sum).unwrap() {
            prop_assert!(is_symmetric(rd, &v2).unwrap());
            if is_orthogonal(rd, &v1).unwrap() && is_orthogonal(rd, &sum).unwrap() {
                prop_assert!(is_orthogonal(rd, &v2).unwrap());
            }
        }
    }
}

#[test]
fn two_rho_check_pairs_evenly_with_roots() {
    for rd in groups() {
        let h = rd.two_rho_check();
        for r in rd.roots() {
            assert_eq!(pair_int(r, &h) % 2, 0, "{}", rd.label());
        }
    }
}

#[test]
fn adjoint_forms_have_only_orthogonal_self_dual_irreducibles() {
    use CartanType::*;
    for (k, r) in [(A, 2), (B, 2), (G, 2), (A, 3), (C, 3)] {
        let rd = RootDatum::new(&GroupSpec::simple(k, r, Isogeny::Adjoint)).unwrap();
        // Dominant elements of the root lattice with small coordinates.
        for root in rd.roots() {
            for scale in 1..=2 {
                let lambda = rd.dominant(&root.iter().map(|x| x * scale).collect::<Vec<_>>());
                let ind = self_dual_indicator(&rd, &lambda);
                assert_ne!(ind, SelfDuality::Symplectic, "{} λ = {lambda:?}", rd.label());
            }
        }
    }
}
