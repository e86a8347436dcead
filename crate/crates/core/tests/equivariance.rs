mod common;

use std::sync::Arc;

use common::{el, known_a_prime, known_b_prime, known_c_prime, known_x, known_y, quad, random_invertible, random_nonzero, rng};
use galois_equiv::equivariance::{
    cocycle_chain, compute_x, equivariant_form, hilbert90, is_coboundary_solution, lambda_invariant, norm_scalar,
    rescale_x, verify_certificate, EquivarianceOptions, Status,
};
use galois_equiv::field::{canonical_lambda, rat, CyclicExtension};
use galois_equiv::fixtures;
use galois_equiv::linalg::Mat;
use galois_equiv::rep::{GroupData, Letter, Representation, Word};
use galois_equiv::Error;
use proptest::prelude::*;

fn c3_with_trivial_tau() -> Representation {
    let e = quad(-3);
    let g = GroupData::parse(&["g"], &["g g g"], &[("g", "g")], 2).unwrap();
    let omega = Mat::scalar(&e, 1, &el(&e, -1, 1, 2));
    Representation::new(Arc::new(g), e, vec![omega]).unwrap()
}

fn rational_klein_sum() -> Representation {
    let e = quad(5);
    let g = GroupData::parse(&["a", "b"], &["a a", "b b", "a b a' b'"], &[("a", "a"), ("b", "b")], 2).unwrap();
    let a = Mat::from_int_rows(&e, &[vec![1, 0], vec![0, -1]]).unwrap();
    let b = Mat::from_int_rows(&e, &[vec![-1, 0], vec![0, -1]]).unwrap();
    Representation::new(Arc::new(g), e, vec![a, b]).unwrap()
}

#[test]
fn intertwiner_of_the_a5_fixture_is_the_known_matrix() {
    let p = fixtures::a5();
    let x = compute_x(&p.rep).unwrap();
    assert_eq!(x, known_x(&p.ext));
    for g in 0..2 {
        assert_eq!(x.mul(p.rep.image(g)).unwrap(), p.rep.twisted_image(g, 1).mul(&x).unwrap());
    }
}

#[test]
fn intertwiner_failures() {
    // omega and sigma(omega) = omega^2 are different characters of C3
    assert_eq!(compute_x(&c3_with_trivial_tau()), Err(Error::NotEquivalent));
    assert_eq!(compute_x(&rational_klein_sum()), Err(Error::NotIrreducible { dim: 2 }));
}

#[test]
fn lambda_examples() {
    let a5 = lambda_invariant(&fixtures::a5().rep, None).unwrap();
    assert_eq!((a5.lambda_rep, a5.lambda_canonical, a5.is_trivial), (rat(-1), Some(rat(1)), true));
    let c3 = lambda_invariant(&fixtures::c3().rep, None).unwrap();
    assert_eq!(compute_x(&fixtures::c3().rep).unwrap(), Mat::identity(&fixtures::c3().ext, 1));
    assert_eq!((c3.lambda_rep, c3.lambda_canonical, c3.is_trivial), (rat(1), Some(rat(1)), true));
    let two = lambda_invariant(&fixtures::two_a7().rep, None).unwrap();
    assert_eq!(two.lambda_canonical, Some(rat(-2)));
    assert!(!two.is_trivial);
}

#[test]
fn rescaling_by_the_known_witness() {
    let e = quad(5);
    let x = known_x(&e);
    let mu = el(&e, 2, -1, 1);
    let x1 = rescale_x(&x, &mu).unwrap();
    assert!(x1.matrix_norm().unwrap().is_identity());
    assert_eq!(rescale_x(&x1, &e.one()).unwrap(), x1);
    assert!(matches!(rescale_x(&x, &e.one()), Err(Error::BadWitness(_))));
}

#[test]
fn hilbert90_examples() {
    let e = quad(5);
    let id = Mat::identity(&e, 3);
    let h = hilbert90(&id, 0, 64).unwrap();
    assert!(is_coboundary_solution(&h.y, &id));
    let x1 = known_x(&e).scale(&el(&e, 2, -1, 1));
    let h = hilbert90(&x1, 7, 64).unwrap();
    assert!(is_coboundary_solution(&h.y, &x1));
    assert!(is_coboundary_solution(&known_y(&e), &x1));
    assert_eq!(hilbert90(&known_x(&e), 0, 64), Err(Error::NotACocycle));
}

#[test]
fn a5_pipeline_constructs_a_verified_form() {
    let p = fixtures::a5();
    let cert = equivariant_form(&p.rep, &EquivarianceOptions::default()).unwrap();
    assert_eq!(cert.status, Status::Constructed);
    assert!(verify_certificate(&cert, &p.rep).all_hold());
    let rho = cert.rho_prime.as_ref().unwrap();
    assert!(rho.check_relations().all_hold());
    for g in 0..2 {
        assert_eq!(rho.twisted_image(g, 1), *rho.image(g));
    }
}

#[test]
fn replaying_the_known_y_reproduces_the_known_matrices() {
    let p = fixtures::a5();
    let opts = EquivarianceOptions { replay_y: Some(known_y(&p.ext)), ..Default::default() };
    let cert = equivariant_form(&p.rep, &opts).unwrap();
    assert_eq!(cert.witness, Some(el(&p.ext, 2, -1, 1)));
    let rho = cert.rho_prime.unwrap();
    assert_eq!(*rho.image(0), known_a_prime(&p.ext));
    assert_eq!(*rho.image(1), known_b_prime(&p.ext));
    assert_eq!(rho.evaluate("a b b a b a b b").unwrap(), known_c_prime(&p.ext));
    assert_eq!(rho.image(1).apply_sigma(1), known_c_prime(&p.ext));
}

#[test]
fn replaying_a_wrong_y_is_refused() {
    let p = fixtures::a5();
    let opts = EquivarianceOptions { replay_y: Some(Mat::identity(&p.ext, 3)), ..Default::default() };
    assert!(equivariant_form(&p.rep, &opts).is_err());
}

#[test]
fn c3_pipeline_keeps_rho() {
    let p = fixtures::c3();
    let cert = equivariant_form(&p.rep, &EquivarianceOptions::default()).unwrap();
    assert_eq!(cert.status, Status::Constructed);
    assert_eq!(cert.rho_prime.unwrap().images(), p.rep.images());
}

#[test]
fn two_a7_pipeline_is_obstructed() {
    let p = fixtures::two_a7();
    let cert = equivariant_form(&p.rep, &EquivarianceOptions::default()).unwrap();
    assert_eq!(cert.status, Status::Obstructed);
    assert!(!cert.is_trivial);
    assert_eq!(cert.lambda_canonical, Some(rat(-2)));
    assert_eq!(cert.symbol, Some((rat(-2), rat(-7))));
    assert!(cert.y.is_none() && cert.rho_prime.is_none());
    assert!(verify_certificate(&cert, &p.rep).all_hold());
}

#[test]
fn tampered_certificates_are_flagged() {
    let p = fixtures::a5();
    let cert = equivariant_form(&p.rep, &EquivarianceOptions::default()).unwrap();
    let mut bad_y = cert.clone();
    let y = bad_y.y.take().unwrap();
    bad_y.y = Some(y.scale(&el(&p.ext, 0, 1, 1)));
    assert!(!verify_certificate(&bad_y, &p.rep).all_hold());
    let mut bad_rho = cert.clone();
    bad_rho.rho_prime = Some(p.rep.clone());
    assert!(!verify_certificate(&bad_rho, &p.rep).all_hold());
    let mut bad_lambda = cert;
    bad_lambda.lambda_rep = rat(3);
    assert!(!verify_certificate(&bad_lambda, &p.rep).all_hold());
}

#[test]
fn witness_of_the_wrong_norm_is_refused() {
    let p = fixtures::a5();
    let opts = EquivarianceOptions { witness: Some(p.ext.one()), ..Default::default() };
    assert!(matches!(equivariant_form(&p.rep, &opts), Err(Error::BadWitness(_))));
}

#[test]
fn cubic_extension_with_rational_root() {
    // t = 2 cos(2 pi / 7) with sigma(t) = t^2 - 2; rho is rational and 1-dim
    let e = Arc::new(CyclicExtension::new(vec![rat(-1), rat(-2), rat(1), rat(1)], vec![rat(-2), rat(0), rat(1)]).unwrap());
    assert_eq!(e.degree(), 3);
    let g = GroupData::parse(&["g"], &[], &[("g", "g")], 3).unwrap();
    let rep = Representation::new(Arc::new(g), e.clone(), vec![Mat::identity(&e, 1).scale(&e.from_rational(rat(2)))]).unwrap();
    let inv = lambda_invariant(&rep, None).unwrap();
    assert!(inv.is_trivial);
    let cert = equivariant_form(&rep, &EquivarianceOptions::default()).unwrap();
    assert_eq!(cert.status, Status::Constructed);
    assert!(verify_certificate(&cert, &rep).all_hold());
}

fn word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0usize..2, any::<bool>()), 0..max)
        .prop_map(|v| Word::from_letters(v.into_iter().map(|(gen, inverse)| Letter { gen, inverse })))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn scalar_ambiguity_law(seed in any::<u64>()) {
        let p = fixtures::two_a7();
        let x = compute_x(&p.rep).unwrap();
        let lam = norm_scalar(&x).unwrap();
        let mu = random_nonzero(&mut rng(seed), &p.ext, 5);
        let moved = norm_scalar(&x.scale(&mu)).unwrap();
        prop_assert_eq!(moved.clone(), &lam * p.ext.norm(&mu).unwrap());
        prop_assert_eq!(canonical_lambda(&moved, &p.ext).unwrap(), canonical_lambda(&lam, &p.ext).unwrap());
    }

    #[test]
    fn chain_telescopes_to_the_norm(seed in any::<u64>(), n in 1usize..=3) {
        let e = quad(5);
        let z = random_invertible(&mut rng(seed), &e, n, 3);
        let x = z.apply_sigma(1).inverse().unwrap().mul(&z).unwrap();
        let chain = cocycle_chain(&x).unwrap();
        prop_assert!(chain[2].is_identity());
        prop_assert_eq!(chain[2].clone(), x.matrix_norm().unwrap());
    }

    #[test]
    fn random_cocycles_are_coboundaries(seed in any::<u64>(), n in 1usize..=4, d in prop::sample::select(vec![5i64, -7])) {
        let e = quad(d);
        let z = random_invertible(&mut rng(seed), &e, n, 3);
        let x = z.apply_sigma(1).inverse().unwrap().mul(&z).unwrap();
        let h = hilbert90(&x, seed, 64).unwrap();
        prop_assert!(is_coboundary_solution(&h.y, &x));
        prop_assert!(h.attempts <= 64);
    }

    #[test]
    fn equivariance_transfers_to_words(seed in 0u64..8, w in word(10)) {
        let p = fixtures::a5();
        let opts = EquivarianceOptions { seed, ..Default::default() };
        let cert = equivariant_form(&p.rep, &opts).unwrap();
        let rho = cert.rho_prime.unwrap();
        prop_assert!(rho.check_relations().all_hold());
        let lhs = rho.evaluate_word(&p.group.apply_tau(&w, 1));
        prop_assert_eq!(lhs, rho.evaluate_word(&w).apply_sigma(1));
    }

    #[test]
    fn conjugated_fixtures_keep_their_class(seed in any::<u64>()) {
        let p = fixtures::a5();
        let y = random_invertible(&mut rng(seed), &p.ext, 3, 2);
        let moved = p.rep.conjugate(&y).unwrap();
        let inv = lambda_invariant(&moved, None).unwrap();
        prop_assert!(inv.is_trivial);
        prop_assert_eq!(inv.lambda_canonical, Some(rat(1)));
    }
}
