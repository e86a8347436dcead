//! Constructive Hilbert 90 for `GL(n, L)`.
//!
//! Given `X` with `N(X) = I`, put `B_0 = I`, `B_(i+1) = sigma(B_i) X`, so that
//! `B_r = N(X) = I`. For any `C` the sum `Y = sum_i sigma^i(C) B_i` then
//! satisfies `sigma(Y) X = Y`; a random `C` makes `Y` invertible with high
//! probability.

use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64;

use crate::error::{Error, Result};
use crate::field::{rat, CyclicExtension};
use crate::linalg::Mat;

pub const DEFAULT_H90_BUDGET: usize = 64;
pub const DEFAULT_SEED: u64 = 0;

/// A coboundary solution `Y` and the number of candidates drawn.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hilbert90 {
    pub y: Mat,
    pub attempts: usize,
}

/// The partial products `B_0, ..., B_r`.
pub fn cocycle_chain(x: &Mat) -> Result<Vec<Mat>> {
    let r = x.ext().degree();
    let mut chain = vec![Mat::identity(x.ext(), x.rows())];
    for i in 0..r {
        let next = chain[i].apply_sigma(1).mul(x)?;
        chain.push(next);
    }
    Ok(chain)
}

/// `sum_i sigma^i(C) B_i`.
pub fn telescoping_sum(c: &Mat, chain: &[Mat]) -> Result<Mat> {
    let r = c.ext().degree();
    let mut y = Mat::zeros(c.ext(), c.rows(), c.cols());
    for (i, b) in chain.iter().take(r).enumerate() {
        y = y.add(&c.apply_sigma(i).mul(b)?)?;
    }
    Ok(y)
}

fn random_candidate(ext: &std::sync::Arc<CyclicExtension>, n: usize, rng: &mut Pcg64) -> Mat {
    Mat::from_fn(ext, n, n, |_, _| {
        let coeffs = (0..ext.degree()).map(|_| rat(rng.random_range(-3..=3))).collect();
        ext.element(coeffs).expect("degree-many coordinates")
    })
}

/// Finds invertible `Y` with `sigma(Y)^-1 Y = X`.
pub fn hilbert90(x: &Mat, seed: u64, budget: usize) -> Result<Hilbert90> {
    let chain = cocycle_chain(x)?;
    if !chain[x.ext().degree()].is_identity() {
        return Err(Error::NotACocycle);
    }
    let mut rng = Pcg64::seed_from_u64(seed);
    for attempt in 1..=budget {
        let c = random_candidate(x.ext(), x.rows(), &mut rng);
        let y = telescoping_sum(&c, &chain)?;
        let Ok(y_inv) = y.inverse() else { continue };
        let sy_inv = y_inv.apply_sigma(1);
        if sy_inv.mul(&y)? != *x {
            return Err(Error::InternalInvariantViolation(
                "telescoping sum does not solve sigma(Y)^-1 Y = X".into(),
            ));
        }
        return Ok(Hilbert90 { y, attempts: attempt });
    }
    Err(Error::BudgetExhausted { budget })
}

/// Whether `sigma(Y)^-1 Y = X` holds, with `Y` invertible.
pub fn is_coboundary_solution(y: &Mat, x: &Mat) -> bool {
    match y.apply_sigma(1).inverse() {
        Ok(inv) => inv.mul(y).is_ok_and(|p| p == *x),
        Err(_) => false,
    }
}
