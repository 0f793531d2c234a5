use std::collections::HashSet;

use proptest::prelude::*;

use cohint::facelat::special_faces_with;
use cohint::linalg::{pair, IntMatrix};
use cohint::repsym::WeightMultiset;
use cohint::rootdata::{fundamental_degrees, levi_of_subspace, CartanType, GroupSpec, Isogeny, RootDatum, WeylGroup};

fn rd(kind: CartanType, rank: usize, iso: Isogeny) -> RootDatum {
    RootDatum::new(&GroupSpec::simple(kind, rank, iso)).unwrap()
}

fn small_types() -> Vec<RootDatum> {
    use CartanType::*;
    use Isogeny::*;
    vec![
        rd(A, 1, SimplyConnected),
        rd(A, 2, Adjoint),
        rd(A, 3, SimplyConnected),
        rd(B, 2, SimplyConnected),
        rd(B, 3, Adjoint),
        rd(C, 3, SimplyConnected),
        rd(D, 4, SimplyConnected),
        rd(G, 2, SimplyConnected),
        RootDatum::new(&GroupSpec::gl(4)).unwrap(),
    ]
}

#[test]
fn order_is_product_of_degrees() {
    let mut all = small_types();
    all.push(rd(CartanType::F, 4, Isogeny::SimplyConnected));
    for r in &all {
        let w = WeylGroup::new(r).unwrap();
        let product: usize = fundamental_degrees(r).iter().map(|&d| d as usize).product();
        assert_eq!(w.order(), product, "{}", r.label());
    }
}

#[test]
fn weyl_group_is_closed_and_permutes_roots() {
    for r in small_types() {
        let w = WeylGroup::new(&r).unwrap();
        let set: HashSet<IntMatrix> = w.iter().map(|g| g.matrix.clone()).collect();
        assert_eq!(set.len(), w.order());
        for a in w.iter().step_by(3) {
            for b in w.iter() {
                assert!(set.contains(&a.matrix.mul(&b.matrix)));
            }
            let image: HashSet<Vec<i64>> = r.roots().iter().map(|x| a.act_covector(x)).collect();
            let roots: HashSet<Vec<i64>> = r.roots().iter().cloned().collect();
            assert_eq!(image, roots);
        }
    }
}

#[test]
fn levi_weyl_is_pointwise_stabilizer_and_relative_weyl_preserves_restricted_roots() {
    for r in small_types() {
        let w = WeylGroup::new(&r).unwrap();
        for sf in special_faces_with(&r, &WeightMultiset::new(r.rank()), &w) {
            let face = sf.face.subspace();
            let levi = levi_of_subspace(&r, face).unwrap();
            let fixing = w.iter().filter(|g| face.basis().iter().all(|b| g.act_vector_q(b) == *b)).count();
            assert_eq!(levi.weyl_order(), fixing);
            assert_eq!(sf.aut.fixer_order, fixing);
            assert_eq!(sf.aut.order() * fixing, sf.aut.stabilizer_order);

            let restrict = |cov: &[i64]| -> Vec<_> { face.basis().iter().map(|b| pair(cov, b)).collect() };
            let restricted: HashSet<Vec<_>> = r
                .roots()
                .iter()
                .map(|x| restrict(x))
                .filter(|v| v.iter().any(|c| *c != num_traits::Zero::zero()))
                .collect();
            for e in &sf.aut.elements {
                let image: HashSet<Vec<_>> = r
                    .roots()
                    .iter()
                    .map(|x| restrict(&e.representative.act_covector(x)))
                    .filter(|v| v.iter().any(|c| *c != num_traits::Zero::zero()))
                    .collect();
                assert_eq!(image, restricted);
            }
        }
    }
}

proptest! {
    #[test]
    fn dominant_is_a_class_function(a in -4i64..=4, b in -4i64..=4, c in -4i64..=4, k in 0usize..24) {
        let r = rd(CartanType::A, 3, Isogeny::SimplyConnected);
        let w = WeylGroup::new(&r).unwrap();
        let lambda = vec![a, b, c];
        let moved = w.elements()[k].act_covector(&lambda);
        prop_assert_eq!(r.dominant(&moved), r.dominant(&lambda));
        prop_assert!(r.is_dominant(&r.dominant(&lambda)));
    }

    #[test]
    fn inverse_is_recorded(k in 0usize..12) {
        let r = rd(CartanType::G, 2, Isogeny::SimplyConnected);
        let w = WeylGroup::new(&r).unwrap();
        let g = &w.elements()[k];
        prop_assert!(g.matrix.mul(&g.inverse).is_identity());
        prop_assert_eq!(g.matrix.det().abs(), 1);
    }
}
