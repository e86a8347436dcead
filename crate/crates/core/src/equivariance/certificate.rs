//! The full pipeline from `rho` to a Galois-equivariant conjugate `rho'`,
//! and an independent checker for its output.

use num_traits::One;

use crate::error::{Error, Result};
use crate::field::{canonical_lambda, is_norm, norm_witness, FieldElement, Rat, DEFAULT_WITNESS_BUDGET};
use crate::linalg::Mat;
use crate::rep::{Check, CheckReport, Representation};

use super::hilbert90::{hilbert90, is_coboundary_solution, DEFAULT_H90_BUDGET, DEFAULT_SEED};
use super::intertwiner::{classify, compute_x, norm_scalar, rescale_x, witness_from_root};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivarianceOptions {
    pub seed: u64,
    /// Candidate draws allowed in Hilbert 90.
    pub budget: usize,
    /// Search bound for norm witnesses.
    pub witness_budget: u64,
    /// A user-supplied `mu` with `N(mu) lambda = 1`.
    pub witness: Option<FieldElement>,
    /// Use this `Y` instead of constructing one.
    pub replay_y: Option<Mat>,
}

impl Default for EquivarianceOptions {
    fn default() -> Self {
        EquivarianceOptions {
            seed: DEFAULT_SEED,
            budget: DEFAULT_H90_BUDGET,
            witness_budget: DEFAULT_WITNESS_BUDGET,
            witness: None,
            replay_y: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// `Y` and `rho'` were built.
    Constructed,
    /// `lambda` is not a norm; no equivariant conjugate exists.
    Obstructed,
    /// `lambda` is a norm but no witness was found within budget.
    DecidedUnconstructed,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Constructed => "constructed",
            Status::Obstructed => "obstructed",
            Status::DecidedUnconstructed => "decided-unconstructed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivarianceCertificate {
    pub status: Status,
    /// The normalized intertwiner, with `N(X) = lambda_rep I`.
    pub x: Mat,
    pub lambda_rep: Rat,
    pub lambda_canonical: Option<Rat>,
    pub is_trivial: bool,
    /// Quaternion symbol `(lambda, d)` of the obstruction, for `r = 2`.
    pub symbol: Option<(Rat, Rat)>,
    /// `mu` with `N(mu) lambda_rep = 1`.
    pub witness: Option<FieldElement>,
    /// `mu X`, with norm `I`.
    pub x_rescaled: Option<Mat>,
    pub y: Option<Mat>,
    pub rho_prime: Option<Representation>,
    /// Hilbert 90 draws used; absent when `Y` was replayed.
    pub attempts: Option<usize>,
}

/// Runs the whole construction and verifies the result before returning it.
pub fn equivariant_form(rep: &Representation, opts: &EquivarianceOptions) -> Result<EquivarianceCertificate> {
    let ext = rep.ext().clone();
    let x = compute_x(rep)?;
    let inv = classify(x, opts.witness.as_ref())?;
    let mut cert = EquivarianceCertificate {
        status: Status::Obstructed,
        x: inv.x,
        lambda_rep: inv.lambda_rep,
        lambda_canonical: inv.lambda_canonical,
        is_trivial: inv.is_trivial,
        symbol: None,
        witness: None,
        x_rescaled: None,
        y: None,
        rho_prime: None,
        attempts: None,
    };
    if !cert.is_trivial {
        if let (Some(c), Some(d)) = (&cert.lambda_canonical, ext.disc_core()) {
            cert.symbol = Some((c.clone(), Rat::from_integer(d.clone())));
        }
        return finish(cert, rep);
    }

    if let Some(y) = &opts.replay_y {
        let target = y.apply_sigma(1).inverse()?.mul(y)?;
        let mu = scalar_ratio(&target, &cert.x).ok_or_else(|| {
            Error::BadWitness("replayed Y does not solve sigma(Y)^-1 Y = mu X for any scalar mu".into())
        })?;
        cert.x_rescaled = Some(rescale_x(&cert.x, &mu)?);
        cert.witness = Some(mu);
        cert.y = Some(y.clone());
    } else {
        let mu = match &opts.witness {
            Some(mu) => mu.clone(),
            None if ext.degree() == 2 => {
                match norm_witness(&cert.lambda_rep.recip(), &ext, opts.witness_budget) {
                    Ok(mu) => mu,
                    Err(Error::NoWitnessFound { .. }) => {
                        cert.status = Status::DecidedUnconstructed;
                        return finish(cert, rep);
                    }
                    Err(e) => return Err(e),
                }
            }
            None => witness_from_root(&cert.lambda_rep, &ext)
                .ok_or_else(|| Error::Unsupported("no witness for r > 2".into()))?,
        };
        let xr = rescale_x(&cert.x, &mu)?;
        let h = hilbert90(&xr, opts.seed, opts.budget)?;
        cert.witness = Some(mu);
        cert.x_rescaled = Some(xr);
        cert.y = Some(h.y);
        cert.attempts = Some(h.attempts);
    }
    cert.rho_prime = Some(rep.conjugate(cert.y.as_ref().expect("set above"))?);
    cert.status = Status::Constructed;
    finish(cert, rep)
}

fn finish(cert: EquivarianceCertificate, rep: &Representation) -> Result<EquivarianceCertificate> {
    let report = verify_certificate(&cert, rep);
    if let Some(bad) = report.failures().next() {
        return Err(Error::InternalInvariantViolation(format!("certificate check failed: {}", bad.label)));
    }
    Ok(cert)
}

/// `mu` with `a = mu b`, if one exists.
fn scalar_ratio(a: &Mat, b: &Mat) -> Option<FieldElement> {
    let (idx, lead) = b.first_nonzero()?;
    let ext = b.ext();
    let mu = ext.div(&a.entries()[idx], lead).ok()?;
    (b.scale(&mu) == *a).then_some(mu)
}

/// Re-checks every claim in a certificate by direct computation.
pub fn verify_certificate(cert: &EquivarianceCertificate, rep: &Representation) -> CheckReport {
    let mut checks = Vec::new();
    let mut check = |label: &str, holds: bool| checks.push(Check { label: label.to_string(), holds });
    let ext = rep.ext();
    let gens = rep.group().num_gens();

    let x = &cert.x;
    let shape_ok = x.rows() == rep.dim() && x.cols() == rep.dim();
    check("X has the size of rho", shape_ok);
    if !shape_ok {
        return CheckReport { checks };
    }
    let intertwines = (0..gens).all(|g| {
        x.mul(rep.image(g)).ok() == rep.twisted_image(g, 1).mul(x).ok()
    });
    check("X rho(g) = sigma(rho(tau^-1 g)) X", intertwines);
    check("X is invertible", x.is_invertible());
    check("N(X) = lambda_rep I", norm_scalar(x).ok().as_ref() == Some(&cert.lambda_rep));

    if ext.degree() == 2 {
        let trivial = is_norm(&cert.lambda_rep, ext).ok();
        check("is_trivial matches the norm decision", trivial == Some(cert.is_trivial));
        let canon = canonical_lambda(&cert.lambda_rep, ext).ok();
        check("lambda_canonical is the class representative", canon == cert.lambda_canonical);
    }
    let status_ok = match cert.status {
        Status::Obstructed => !cert.is_trivial && cert.y.is_none() && cert.rho_prime.is_none(),
        Status::DecidedUnconstructed => cert.is_trivial && cert.y.is_none() && cert.rho_prime.is_none(),
        Status::Constructed => cert.is_trivial && cert.y.is_some() && cert.rho_prime.is_some(),
    };
    check("status agrees with the certificate contents", status_ok);

    if let Some(mu) = &cert.witness {
        let n = ext.norm(mu).ok();
        check("N(mu) lambda_rep = 1", n.is_some_and(|n| (n * &cert.lambda_rep).is_one()));
        let xr = x.scale(mu);
        check("X' = mu X", cert.x_rescaled.as_ref() == Some(&xr));
        check("N(X') = I", xr.matrix_norm().is_ok_and(|m| m.is_identity()));
    }
    if let Some(y) = &cert.y {
        let ok = cert.x_rescaled.as_ref().is_some_and(|xr| is_coboundary_solution(y, xr));
        check("sigma(Y)^-1 Y = X'", ok);
    }
    if let Some(rp) = &cert.rho_prime {
        let conj = cert.y.as_ref().and_then(|y| rep.conjugate(y).ok());
        check("rho' = Y rho Y^-1", conj.as_ref() == Some(rp));
        let equivariant = (0..gens).all(|g| rp.twisted_image(g, 1) == *rp.image(g));
        check("sigma(rho'(tau^-1 g)) = rho'(g)", equivariant);
        check("rho' satisfies the relations", rp.check_relations().all_hold());
    }
    CheckReport { checks }
}
