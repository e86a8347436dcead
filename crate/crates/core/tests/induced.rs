mod common;

use common::{el, random_element, rng};
use galois_equiv::equivariance::compute_x;
use galois_equiv::field::{rat, Place, Rat};
use galois_equiv::fixtures;
use galois_equiv::induced::{endomorphism_dim, schur_index, CrossedProduct, InducedRep, SemilinearMat};
use galois_equiv::linalg::Mat;
use proptest::prelude::*;

#[test]
fn induced_shapes_and_relations() {
    let a5 = InducedRep::build(&fixtures::a5().rep);
    assert_eq!(a5.dim(), 6);
    assert!(a5.check_relations().unwrap().all_hold());
    let c3 = InducedRep::build(&fixtures::c3().rep);
    assert_eq!(c3.dim(), 2);
    assert!(c3.check_relations().unwrap().all_hold());
    let id = SemilinearMat::identity(&a5.shift);
    assert!(id.is_identity());
    assert_eq!(id.power, 0);
    assert!(a5.tau().pow(2).unwrap().is_identity());
}

#[test]
fn induced_from_c3_is_the_plane_rep_of_s3() {
    // classical induction: characters 2 on 1, -1 on 3-cycles, 0 on reflections
    let c3 = InducedRep::build(&fixtures::c3().rep);
    let ch = c3.character_samples(3, 30, 7).unwrap();
    assert!(ch.checks.all_hold());
    for v in ch.values {
        assert!(v == rat(2) || v == rat(-1));
    }
    assert_eq!(c3.tau().rational_trace().unwrap(), rat(0));
}

#[test]
fn a5_induced_character_values_are_rational() {
    let a5 = InducedRep::build(&fixtures::a5().rep);
    let ch = a5.character_samples(1, 24, 9).unwrap();
    assert!(ch.checks.all_hold());
    // chi + chi^sigma on A5 takes the values 6, -2, 0, 1
    let allowed = [rat(6), rat(-2), rat(0), rat(1)];
    assert!(ch.values.iter().all(|v| allowed.contains(v)));
}

#[test]
fn crossed_product_on_a5() {
    let p = fixtures::a5();
    let induced = InducedRep::build(&p.rep);
    let x = compute_x(&p.rep).unwrap();
    let cp = CrossedProduct::build(&induced, &x).unwrap();
    assert_eq!(cp.lambda_rep, rat(-1));
    assert!(cp.m(&p.ext.one()).is_identity());
    let m_neg1 = cp.m(&p.ext.from_rational(rat(-1)));
    assert_eq!(cp.xi.mul(&cp.xi).unwrap(), m_neg1);
    let s5 = el(&p.ext, 0, 1, 1);
    let lhs = cp.m(&s5).mul(&cp.xi).unwrap();
    let rhs = cp.xi.mul(&cp.m(&p.ext.sigma(&s5, 1))).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn wrong_x_is_not_an_endomorphism() {
    let p = fixtures::a5();
    let induced = InducedRep::build(&p.rep);
    let bad = Mat::identity(&p.ext, 3);
    assert!(CrossedProduct::build(&induced, &bad).is_err());
}

#[test]
fn endomorphism_dimension_is_r_squared() {
    for p in [fixtures::a5(), fixtures::c3(), fixtures::two_a7()] {
        assert_eq!(endomorphism_dim(&p.rep).unwrap(), 4);
    }
}

#[test]
fn schur_indices() {
    let a5 = schur_index(&fixtures::a5().rep, None).unwrap();
    assert_eq!(a5.index, 1);
    assert!(a5.division_algebra.is_none());
    let c3 = schur_index(&fixtures::c3().rep, None).unwrap();
    assert_eq!(c3.index, 1);
    let two = schur_index(&fixtures::two_a7().rep, None).unwrap();
    assert_eq!(two.index, 2);
    assert_eq!(two.division_algebra, Some((rat(-2), rat(-7))));
    assert_eq!(two.ramified, vec![Place::Infinity, Place::prime(7)]);
}

#[test]
fn two_a7_crossed_product() {
    let p = fixtures::two_a7();
    let induced = InducedRep::build(&p.rep);
    assert!(induced.check_relations().unwrap().all_hold());
    let cp = CrossedProduct::build(&induced, &compute_x(&p.rep).unwrap()).unwrap();
    assert_eq!(cp.xi.mul(&cp.xi).unwrap(), cp.m(&p.ext.from_rational(cp.lambda_rep.clone())));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn crossed_product_relations_hold(seed in any::<u64>()) {
        for p in [fixtures::a5(), fixtures::c3()] {
            let induced = InducedRep::build(&p.rep);
            let cp = CrossedProduct::build(&induced, &compute_x(&p.rep).unwrap()).unwrap();
            let mut r = rng(seed);
            let samples: Vec<_> = (0..6).map(|_| random_element(&mut r, &p.ext, 9)).collect();
            prop_assert!(cp.check_relations(&samples).unwrap().all_hold());
            for w in samples.windows(2) {
                let (a, b) = (&w[0], &w[1]);
                prop_assert_eq!(cp.m(a).add(&cp.m(b)).unwrap(), cp.m(&p.ext.add(a, b)));
                prop_assert_eq!(cp.m(a).mul(&cp.m(b)).unwrap(), cp.m(&p.ext.mul(a, b)));
            }
        }
    }

    #[test]
    fn semilinear_products_associate(seed in any::<u64>()) {
        let induced = InducedRep::build(&fixtures::a5().rep);
        let mut r = rng(seed);
        let a = induced.random_element(&mut r, 4).unwrap();
        let b = induced.random_element(&mut r, 4).unwrap();
        let c = induced.random_element(&mut r, 4).unwrap();
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert!(a.mul(&a.inverse().unwrap()).unwrap().is_identity());
        let ab: Rat = a.mul(&b).unwrap().rational_trace().unwrap();
        prop_assert_eq!(ab, b.mul(&a).unwrap().rational_trace().unwrap());
    }
}
