//! The intertwiner `X` between `rho` and `sigma o rho o tau^-1`, and the
//! scalar `lambda` with `N(X) = lambda I`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{canonical_lambda, is_norm, CyclicExtension, FieldElement, Rat};
use crate::linalg::{solve_sylvester_space, Mat};
use crate::rep::Representation;

/// Solves `X rho(g) = sigma(rho(tau^-1 g)) X` on the generators and returns
/// the solution normalized to have first nonzero entry `1`.
pub fn compute_x(rep: &Representation) -> Result<Mat> {
    let pairs: Vec<(Mat, Mat)> = (0..rep.group().num_gens())
        .map(|g| (rep.image(g).clone(), rep.twisted_image(g, 1)))
        .collect();
    let space = solve_sylvester_space(&pairs)?;
    match space.l_dim() {
        0 => Err(Error::NotEquivalent),
        1 => normalize(&space.l_basis[0]),
        dim => Err(Error::NotIrreducible { dim }),
    }
}

/// Divides by the first nonzero entry in row-major order.
pub fn normalize(x: &Mat) -> Result<Mat> {
    let (_, lead) = x.first_nonzero().ok_or(Error::Singular)?;
    Ok(x.scale(&x.ext().inv(lead)?))
}

/// The rational `lambda` with `N(X) = lambda I`.
pub fn norm_scalar(x: &Mat) -> Result<Rat> {
    let n = x.matrix_norm()?;
    let c = n.as_scalar().ok_or_else(|| {
        Error::InternalInvariantViolation("N(X) is not a scalar matrix".into())
    })?;
    let lam = c.as_rational().cloned().ok_or_else(|| {
        Error::InternalInvariantViolation("N(X) is scalar but not rational".into())
    })?;
    if lam.is_zero() {
        return Err(Error::Singular);
    }
    Ok(lam)
}

/// `X`, its `lambda`, and the class of `lambda` in `Q^x / N(L^x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaInvariant {
    pub x: Mat,
    pub lambda_rep: Rat,
    /// Smallest squarefree representative; only available for `r = 2`.
    pub lambda_canonical: Option<Rat>,
    pub is_trivial: bool,
}

/// Computes `X` and classifies `lambda`. For `r > 2` the class is decided
/// only when `lambda` is a rational `r`-th power or a witness `mu` with
/// `N(mu) lambda = 1` is supplied.
pub fn lambda_invariant(rep: &Representation, witness: Option<&FieldElement>) -> Result<LambdaInvariant> {
    let x = compute_x(rep)?;
    classify(x, witness)
}

pub(crate) fn classify(x: Mat, witness: Option<&FieldElement>) -> Result<LambdaInvariant> {
    let ext = x.ext().clone();
    let lambda_rep = norm_scalar(&x)?;
    if ext.degree() == 2 {
        let lambda_canonical = canonical_lambda(&lambda_rep, &ext)?;
        let is_trivial = is_norm(&lambda_rep, &ext)?;
        return Ok(LambdaInvariant { x, lambda_rep, lambda_canonical: Some(lambda_canonical), is_trivial });
    }
    let decided = match witness {
        Some(mu) => (ext.norm(mu)? * &lambda_rep).is_one(),
        None => rational_root(&lambda_rep, ext.degree()).is_some(),
    };
    if !decided {
        return Err(Error::Unsupported(format!(
            "deciding whether {lambda_rep} is a norm from a degree {} extension needs a witness",
            ext.degree()
        )));
    }
    Ok(LambdaInvariant { x, lambda_rep, lambda_canonical: None, is_trivial: true })
}

/// `q` with `q^r = lam`, if one exists in `Q`.
pub(crate) fn rational_root(lam: &Rat, r: usize) -> Option<Rat> {
    let r32 = u32::try_from(r).ok()?;
    let root = |n: &BigInt| -> Option<BigInt> {
        let s = if n.is_negative() {
            if r % 2 == 0 {
                return None;
            }
            -(-n).nth_root(r32)
        } else {
            n.nth_root(r32)
        };
        (num_traits::pow(s.clone(), r) == *n).then_some(s)
    };
    Some(Rat::new(root(lam.numer())?, root(lam.denom())?))
}

/// A witness `mu` with `N(mu) lambda = 1` from a known rational `r`-th root.
pub(crate) fn witness_from_root(lambda: &Rat, ext: &CyclicExtension) -> Option<FieldElement> {
    rational_root(lambda, ext.degree()).map(|q| ext.from_rational(q.recip()))
}

/// `mu X`, checked to have `N(mu X) = I`.
pub fn rescale_x(x: &Mat, mu: &FieldElement) -> Result<Mat> {
    let scaled = x.scale(mu);
    if !scaled.matrix_norm()?.is_identity() {
        return Err(Error::BadWitness(format!(
            "N(mu X) is not the identity for mu = {}",
            x.ext().display(mu)
        )));
    }
    Ok(scaled)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, ratio};
    use std::sync::Arc;

    #[test]
    fn rational_roots() {
        assert_eq!(rational_root(&ratio(8, 27), 3), Some(ratio(2, 3)));
        assert_eq!(rational_root(&rat(-8), 3), Some(rat(-2)));
        assert_eq!(rational_root(&rat(-4), 2), None);
        assert_eq!(rational_root(&rat(2), 2), None);
    }

    #[test]
    fn rescale_rejects_wrong_witness() {
        let e = Arc::new(CyclicExtension::quadratic(5).unwrap());
        let x = Mat::scalar(&e, 2, &e.element_from_ints(&[2, 1]));
        assert_eq!(norm_scalar(&x).unwrap(), rat(-1));
        let good = rescale_x(&x, &e.element_from_ints(&[2, 1])).unwrap();
        assert!(good.matrix_norm().unwrap().is_identity());
        assert!(matches!(rescale_x(&x, &e.one()), Err(Error::BadWitness(_))));
    }
}
