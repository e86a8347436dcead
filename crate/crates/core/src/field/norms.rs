//! Norm classes `Q^x / N(L^x)` for quadratic `L = Q(sqrt d)`.
//!
//! Membership is decided locally: `lam` is a norm exactly when the Hilbert
//! symbol `(lam, d)_v` is `+1` at every place `v`. Witnesses are found
//! separately and are never needed for the decision.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::extension::{CyclicExtension, FieldElement, QuadraticData};
use super::numtheory::{
    factor, hilbert_symbol, relevant_places, sqrt_mod_squarefree, square_class,
    squarefree_decomposition, Place, DEFAULT_FACTOR_BOUND,
};
use super::rational::{exact_sqrt, Rat};
use crate::error::{Error, Result};

/// Default bound on the `y`-numerator explored by [`norm_witness`] before it
/// falls back to Legendre descent.
pub const DEFAULT_WITNESS_BUDGET: u64 = 10_000;

const MAX_DESCENT_DEPTH: usize = 256;

fn quadratic(ext: &CyclicExtension) -> Result<&QuadraticData> {
    ext.quadratic_data().ok_or_else(|| {
        Error::Unsupported(format!(
            "norm decisions need a quadratic extension, this one has degree {}",
            ext.degree()
        ))
    })
}

fn nonzero(lam: &Rat) -> Result<()> {
    if lam.is_zero() {
        Err(Error::BadWitness("zero is never a norm of a unit".into()))
    } else {
        Ok(())
    }
}

/// The symbols `(lam, d)_v` at `inf`, `2` and the primes of `lam` and `d`.
pub fn local_symbols(lam: &Rat, ext: &CyclicExtension) -> Result<Vec<(Place, i8)>> {
    nonzero(lam)?;
    let d = Rat::from_integer(quadratic(ext)?.disc_core.clone());
    relevant_places(&[lam, &d])?
        .into_iter()
        .map(|p| hilbert_symbol(lam, &d, &p).map(|s| (p, s)))
        .collect()
}

/// Whether `lam = x^2 - d y^2` for rationals `x, y`.
pub fn is_norm(lam: &Rat, ext: &CyclicExtension) -> Result<bool> {
    Ok(local_symbols(lam, ext)?.iter().all(|(_, s)| *s == 1))
}

/// An element `mu` with `N(mu) = lam`.
///
/// Small witnesses are searched first: `mu = (x + y sqrt d) / (D q)` with
/// `D` in `{1, 2}`, `q` the denominator of `lam` and `|y| <= budget`. When
/// that fails the equation is solved by Legendre descent, which succeeds for
/// every norm as long as the integers involved can be factored.
pub fn norm_witness(lam: &Rat, ext: &CyclicExtension, budget: u64) -> Result<FieldElement> {
    let quad = quadratic(ext)?;
    nonzero(lam)?;
    if !is_norm(lam, ext)? {
        return Err(Error::BadWitness(format!("{lam} is not a norm from this field")));
    }
    let d = &quad.disc_core;
    let q = lam.denom().clone();
    let n = lam.numer() * &q;

    let mut found = None;
    'search: for y in 0..=budget {
        let y = BigInt::from(y);
        let dy2 = d * &y * &y;
        for den in [1u32, 2] {
            let val = &n * BigInt::from(den * den) + &dy2;
            if let Some(x) = exact_sqrt(&val) {
                found = Some((x, y.clone(), BigInt::from(den) * &q));
                break 'search;
            }
        }
        if d.is_negative() && (&n * BigInt::from(4) + &dy2).is_negative() {
            break;
        }
    }
    let (x, y, den) = match found {
        Some(t) => t,
        None => {
            // N = s^2 N', solve N' X^2 + d Y^2 = Z^2 and scale.
            let (core, s) = squarefree_decomposition(&n)?;
            let (x1, y1, z1) = legendre_solve(&core, d, 0)?
                .ok_or_else(|| Error::NoWitnessFound { lambda: lam.clone() })?;
            // (z1/x1)^2 - d (y1/x1)^2 = N'
            (&s * z1, &s * y1, &q * x1)
        }
    };
    let x = Rat::new(x, den.clone());
    let y = Rat::new(y, den);
    let mu = ext.add(
        &ext.from_rational(x),
        &ext.scale(&quad.sqrt_disc_core, &y),
    );
    let check = ext.norm(&mu)?;
    if &check != lam {
        return Err(Error::Internal(format!("witness has norm {check}, expected {lam}")));
    }
    Ok(mu)
}

/// Solves `a x^2 + b y^2 = z^2` in integers, not all zero, for squarefree
/// nonzero `a`, `b`. Returns `None` when there is no solution.
fn legendre_solve(
    a: &BigInt,
    b: &BigInt,
    depth: usize,
) -> Result<Option<(BigInt, BigInt, BigInt)>> {
    if depth > MAX_DESCENT_DEPTH {
        return Err(Error::Internal("Legendre descent did not terminate".into()));
    }
    let one = BigInt::one();
    if a.is_negative() && b.is_negative() {
        return Ok(None);
    }
    if a.is_one() {
        return Ok(Some((one.clone(), BigInt::zero(), one)));
    }
    if b.is_one() {
        return Ok(Some((BigInt::zero(), one.clone(), one)));
    }
    if a.abs() > b.abs() {
        return Ok(legendre_solve(b, a, depth + 1)?.map(|(x, y, z)| (y, x, z)));
    }
    let modulus = b.abs();
    let Some(mut t) = sqrt_mod_squarefree(a, &modulus)? else { return Ok(None) };
    if &t * 2 > modulus {
        t -= &modulus;
    }
    let k0 = (&t * &t - a) / b;
    debug_assert!(((&t * &t - a) % b).is_zero());
    if k0.is_zero() {
        return Err(Error::Internal("squarefree coefficient is a square".into()));
    }
    let (k, m) = squarefree_decomposition(&k0)?;
    let Some((x0, y0, z0)) = legendre_solve(a, &k, depth + 1)? else { return Ok(None) };
    let x = &z0 + &x0 * &t;
    let y = &k * &y0 * &m;
    let z = &z0 * &t + a * &x0;
    let g = x.gcd(&y).gcd(&z);
    Ok(Some((x / &g, y / &g, z / &g)))
}

/// A small representative of the norm class of `lam`: `1` when `lam` is a
/// norm, otherwise the squarefree integer of smallest absolute value other
/// than `+-1` in the class, positive first. Over `Q(sqrt(-7))` the class of
/// `-1` is reported as `-2`.
pub fn canonical_lambda(lam: &Rat, ext: &CyclicExtension) -> Result<Rat> {
    let target = local_symbols(lam, ext)?;
    if target.iter().all(|(_, s)| *s == 1) {
        return Ok(Rat::one());
    }
    let d = Rat::from_integer(quadratic(ext)?.disc_core.clone());
    // every nontrivial class contains primes, so the scan ends; the cap only
    // guards against a broken symbol
    let sqf = square_class(lam)?.abs().to_u64().unwrap_or(u64::MAX);
    let cap = sqf.max(CANONICAL_SCAN_CAP);
    for k in 2..=cap {
        let kb = BigInt::from(k);
        let f = factor(&kb, DEFAULT_FACTOR_BOUND)?;
        if f.factors.iter().any(|(_, e)| *e > 1) {
            continue;
        }
        for cand in [kb.clone(), -kb] {
            let c = Rat::from_integer(cand);
            if same_symbols(&c, &d, &target)? {
                return Ok(c);
            }
        }
    }
    Err(Error::Internal(format!("no representative found for the class of {lam}")))
}

const CANONICAL_SCAN_CAP: u64 = 1 << 20;

fn same_symbols(c: &Rat, d: &Rat, target: &[(Place, i8)]) -> Result<bool> {
    for (place, s) in target {
        if hilbert_symbol(c, d, place)? != *s {
            return Ok(false);
        }
    }
    // primes of c outside the target set must be unramified
    for place in relevant_places(&[c])? {
        if !target.iter().any(|(p, _)| *p == place) && hilbert_symbol(c, d, &place)? != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The places where the quaternion algebra `(a, b)_Q` ramifies.
pub fn ramified_places(a: &Rat, b: &Rat) -> Result<Vec<Place>> {
    let mut out = Vec::new();
    for p in relevant_places(&[a, b])? {
        if hilbert_symbol(a, b, &p)? == -1 {
            out.push(p);
        }
    }
    Ok(out)
}

/// A class in `Q^x / N(L^x)` for a quadratic extension `L`.
#[derive(Clone, Debug)]
pub struct RationalClass {
    pub representative: Rat,
    pub ext: Arc<CyclicExtension>,
}

impl RationalClass {
    pub fn new(representative: Rat, ext: Arc<CyclicExtension>) -> Result<Self> {
        nonzero(&representative)?;
        Ok(RationalClass { representative, ext })
    }

    pub fn is_trivial(&self) -> Result<bool> {
        is_norm(&self.representative, &self.ext)
    }

    pub fn canonical(&self) -> Result<Rat> {
        canonical_lambda(&self.representative, &self.ext)
    }

    pub fn same_class(&self, other: &Rat) -> Result<bool> {
        nonzero(other)?;
        is_norm(&(&self.representative / other), &self.ext)
    }

    /// The local invariants `(lam, d)_v` that determine the class.
    pub fn symbols(&self) -> Result<Vec<(Place, i8)>> {
        local_symbols(&self.representative, &self.ext)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rational::{rat, ratio};

    fn ext(d: i64) -> CyclicExtension {
        CyclicExtension::quadratic(d).unwrap()
    }

    #[test]
    fn is_norm_examples() {
        assert!(is_norm(&rat(-1), &ext(5)).unwrap());
        assert!(!is_norm(&rat(-2), &ext(-7)).unwrap());
        assert!(!is_norm(&rat(-1), &ext(-7)).unwrap());
        assert!(is_norm(&rat(2), &ext(-7)).unwrap());
        assert!(is_norm(&ratio(9, 4), &ext(3)).unwrap());
        assert!(!is_norm(&rat(-1), &ext(3)).unwrap());
        assert!(!is_norm(&rat(3), &ext(-1)).unwrap());
        assert!(is_norm(&rat(5), &ext(-1)).unwrap());
    }

    #[test]
    fn witness_examples() {
        let l = ext(5);
        let mu = norm_witness(&rat(-1), &l, DEFAULT_WITNESS_BUDGET).unwrap();
        assert_eq!(l.norm(&mu).unwrap(), rat(-1));
        assert!(norm_witness(&rat(1), &l, 10).unwrap().is_one());

        let l = ext(-7);
        let mu = norm_witness(&rat(2), &l, 10).unwrap();
        assert_eq!(mu, l.element(vec![ratio(1, 2), ratio(1, 2)]).unwrap());
    }

    #[test]
    fn descent_handles_what_the_small_search_misses() {
        // With budget 0 only y = 0 is tried; 13 = 3^2 + 1^2*4 over Q(i) needs descent.
        let l = ext(-1);
        for lam in [rat(13), rat(5 * 13 * 17), ratio(29, 37), rat(2 * 5 * 101)] {
            let mu = norm_witness(&lam, &l, 0).unwrap();
            assert_eq!(l.norm(&mu).unwrap(), lam);
        }
        let l = ext(7);
        let mu = norm_witness(&rat(-3), &l, 0).unwrap();
        assert_eq!(l.norm(&mu).unwrap(), rat(-3));
    }

    #[test]
    fn non_norm_is_rejected_by_witness_search() {
        assert!(matches!(norm_witness(&rat(-2), &ext(-7), 50), Err(Error::BadWitness(_))));
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical_lambda(&rat(-1), &ext(5)).unwrap(), rat(1));
        // -2 = -1 * N((1 + sqrt -7)/2): the class of -2 is the class of -1.
        assert_eq!(canonical_lambda(&rat(-2), &ext(-7)).unwrap(), rat(-2));
        assert_eq!(canonical_lambda(&rat(-8), &ext(-7)).unwrap(), rat(-2));
        assert_eq!(canonical_lambda(&ratio(-1, 4), &ext(-7)).unwrap(), rat(-2));
        assert_eq!(canonical_lambda(&rat(3), &ext(-1)).unwrap(), rat(3));
        assert_eq!(canonical_lambda(&rat(-3), &ext(-1)).unwrap(), rat(-3));
    }

    #[test]
    fn ramification_of_quaternion_algebras() {
        assert_eq!(
            ramified_places(&rat(-2), &rat(-7)).unwrap(),
            vec![Place::Infinity, Place::prime(7)]
        );
        assert_eq!(
            ramified_places(&rat(-1), &rat(-1)).unwrap(),
            vec![Place::Infinity, Place::prime(2)]
        );
        assert!(ramified_places(&rat(-1), &rat(5)).unwrap().is_empty());
    }

    #[test]
    fn unsupported_for_higher_degree() {
        let cubic = CyclicExtension::new(
            vec![rat(-1), rat(-2), rat(1), rat(1)],
            vec![rat(-2), rat(0), rat(1)],
        )
        .unwrap();
        assert!(matches!(is_norm(&rat(2), &cubic), Err(Error::Unsupported(_))));
    }
}
