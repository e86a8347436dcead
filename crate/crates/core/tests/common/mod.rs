#![allow(dead_code)]

use std::sync::Arc;

use galois_equiv::field::{rat, ratio, CyclicExtension, FieldElement, Rat};
use galois_equiv::linalg::Mat;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64;

pub fn quad(d: i64) -> Arc<CyclicExtension> {
    Arc::new(CyclicExtension::quadratic(d).unwrap())
}

/// `(a + b t) / den` in a quadratic field.
pub fn el(ext: &CyclicExtension, a: i64, b: i64, den: i64) -> FieldElement {
    ext.element(vec![ratio(a, den), ratio(b, den)]).unwrap()
}

/// A quadratic-field matrix whose entries `[a, b]` stand for `(a + b t) / den`.
pub fn mat2(ext: &Arc<CyclicExtension>, den: i64, rows: &[Vec<[i64; 2]>]) -> Mat {
    let n = rows.len();
    let m = rows[0].len();
    Mat::from_fn(ext, n, m, |i, j| el(ext, rows[i][j][0], rows[i][j][1], den))
}

pub fn known_x(ext: &Arc<CyclicExtension>) -> Mat {
    let (one, ma, a) = ([2, 0], [-1, 1], [1, -1]);
    mat2(ext, 2, &[vec![one, ma, a], vec![ma, one, ma], vec![a, ma, one]])
}

pub fn known_y(ext: &Arc<CyclicExtension>) -> Mat {
    let (p, q, m) = ([1, -2], [3, -2], [-3, 2]);
    mat2(ext, 1, &[vec![p, q, m], vec![q, p, q], vec![m, q, p]])
}

pub fn known_a_prime(ext: &Arc<CyclicExtension>) -> Mat {
    let (z, o, m) = ([0, 0], [1, 0], [-1, 0]);
    mat2(ext, 1, &[vec![m, z, z], vec![z, z, o], vec![z, o, z]])
}

pub fn known_b_prime(ext: &Arc<CyclicExtension>) -> Mat {
    mat2(
        ext,
        40,
        &[
            vec![[10, -4], [-5, 19], [25, -9]],
            vec![[-10, -4], [25, 9], [-5, -19]],
            vec![[-50, 0], [35, -5], [-35, -5]],
        ],
    )
}

pub fn known_c_prime(ext: &Arc<CyclicExtension>) -> Mat {
    mat2(
        ext,
        40,
        &[
            vec![[10, 4], [-5, -19], [25, 9]],
            vec![[-10, 4], [25, -9], [-5, 19]],
            vec![[-50, 0], [35, 5], [-35, 5]],
        ],
    )
}

pub fn random_element(rng: &mut Pcg64, ext: &CyclicExtension, bound: i64) -> FieldElement {
    let c: Vec<Rat> = (0..ext.degree()).map(|_| ratio(rng.random_range(-bound..=bound), 1)).collect();
    ext.element(c).unwrap()
}

pub fn random_nonzero(rng: &mut Pcg64, ext: &CyclicExtension, bound: i64) -> FieldElement {
    loop {
        let x = random_element(rng, ext, bound);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn random_invertible(rng: &mut Pcg64, ext: &Arc<CyclicExtension>, n: usize, bound: i64) -> Mat {
    loop {
        let m = Mat::from_fn(ext, n, n, |_, _| random_element(rng, ext, bound));
        if m.is_invertible() {
            return m;
        }
    }
}

pub fn rng(seed: u64) -> Pcg64 {
    Pcg64::seed_from_u64(seed)
}

/// Searches `x^2 - d y^2 = lam` over rationals with numerators and
/// denominators bounded by `bound`.
pub fn brute_force_norm(lam: &Rat, d: i64, bound: i64) -> bool {
    for yd in 1..=bound {
        for yn in -bound..=bound {
            let y = ratio(yn, yd);
            let x2 = lam + Rat::from_integer(d.into()) * &y * &y;
            if x2 < rat(0) {
                continue;
            }
            let (n, den) = (x2.numer().clone(), x2.denom().clone());
            let (rn, rd) = (n.sqrt(), den.sqrt());
            if &rn * &rn == n && &rd * &rd == den && rn <= BigInt::from(bound) && rd <= BigInt::from(bound) {
                return true;
            }
        }
    }
    false
}
