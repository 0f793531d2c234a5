use proptest::prelude::*;

use cohint::quiverbps::{bps_series, parity_consistent, reconstruct_stack, stack_generating_series, QuiverSpec};
use cohint::series::{pexp, plog, GradedSeries, Laurent};

fn laurent() -> impl Strategy<Value = Laurent> {
    (-2i64..=2, prop::collection::vec(-3i64..=3, 0..4)).prop_map(|(low, c)| Laurent::from_coeffs(low, &c, None))
}

fn graded(max: u32) -> impl Strategy<Value = GradedSeries> {
    prop::collection::vec(laurent(), max as usize).prop_map(move |cs| {
        let mut f = GradedSeries::zero(vec![max]);
        for (i, c) in cs.into_iter().enumerate() {
            f.set(&[i as u32 + 1], c);
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pexp_turns_sums_into_products(f in graded(3), g in graded(3)) {
        let lhs = pexp(&f.add(&g).unwrap()).unwrap();
        let rhs = pexp(&f).unwrap().mul(&pexp(&g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn plog_inverts_pexp(f in graded(4)) {
        prop_assert_eq!(plog(&pexp(&f).unwrap()).unwrap(), f);
    }

    #[test]
    fn odd_monomials_are_fermionic(k in 0i64..4) {
        // Exp(s^{2k+1} x) = 1 + s^{2k+1} x: no x² term.
        let f = GradedSeries::monomial(vec![3], &[1], Laurent::monomial(2 * k + 1, cohint::rat(1)));
        let e = pexp(&f).unwrap();
        prop_assert!(e.get(&[2]).is_zero());
        prop_assert!(e.get(&[3]).is_zero());
    }
}

#[test]
fn bps_round_trip_reconstructs_the_stack() {
    let kronecker = QuiverSpec::from_arrows(2, &[(0, 1), (1, 0), (0, 0), (1, 1)]).unwrap();
    for (q, gmax) in [(QuiverSpec::loops(2), vec![3]), (kronecker, vec![2, 2])] {
        let window = 20;
        let bps = bps_series(&q, &gmax, window).unwrap();
        let back = reconstruct_stack(&bps, &gmax).unwrap();
        let stack = stack_generating_series(&q, &gmax, window);
        for (g, s) in stack.components() {
            let r = back.get(g);
            let p = r.prec().unwrap_or(i64::MAX).min(s.prec().unwrap_or(i64::MAX));
            assert_eq!(r.truncate(p), s.truncate(p), "γ = {g:?}");
        }
        for (g, o) in &bps.omega {
            assert!(parity_consistent(&q, g, o), "γ = {g:?}: {o}");
        }
    }
}

#[test]
fn three_loop_goldens() {
    let b = bps_series(&QuiverSpec::loops(3), &[3], 30).unwrap();
    let m = |terms: &[i64]| Laurent::from_terms(terms.iter().map(|&k| (k, cohint::rat(1))), None);
    assert_eq!(b.omega[&vec![1]].known_part(), m(&[-3]));
    assert_eq!(b.omega[&vec![2]].known_part(), m(&[-9]));
    assert_eq!(b.omega[&vec![3]].known_part(), m(&[-19, -15, -13]));
}

#[test]
fn kronecker_with_loops_goldens() {
    let q = QuiverSpec::from_arrows(2, &[(0, 1), (1, 0), (0, 0), (1, 1)]).unwrap();
    let b = bps_series(&q, &[3, 3], 30).unwrap();
    let m = |k: i64| Laurent::monomial(k, cohint::rat(1));
    for (g, k) in [([1, 0], -1), ([0, 1], -1), ([1, 1], -3), ([1, 2], -5), ([2, 1], -5)] {
        assert_eq!(b.omega[&g.to_vec()].known_part(), m(k), "γ = {g:?}");
    }
    for g in [[2, 0], [3, 0], [0, 2], [0, 3]] {
        assert!(b.omega[&g.to_vec()].is_zero(), "γ = {g:?}");
    }
}
