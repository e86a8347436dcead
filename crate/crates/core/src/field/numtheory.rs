//! Desk-scale number theory over `Z` and `Q`: factorization by trial
//! division backed by a deterministic Miller-Rabin test, Legendre and
//! Hilbert symbols, and square roots modulo squarefree integers.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::Rat;
use crate::error::{Error, Result};

/// Default trial-division bound used across the crate.
pub const DEFAULT_FACTOR_BOUND: u64 = 1 << 20;

/// Miller-Rabin with the first thirteen prime bases is deterministic below
/// this value (3.317 * 10^24).
const MILLER_RABIN_LIMIT: &str = "3317044064679887385961981";
const MILLER_RABIN_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// `-1`, `0` or `1`.
    pub sign: i8,
    /// Primes in increasing order with their exponents.
    pub factors: Vec<(BigInt, u32)>,
}

impl Factorization {
    pub fn primes(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.iter().map(|(p, _)| p)
    }
}

/// Factors `n` by trial division up to `bound`. A leftover cofactor is
/// accepted when it is below `bound^2` or passes the deterministic
/// Miller-Rabin test; otherwise [`Error::FactorizationIncomplete`].
pub fn factor(n: &BigInt, bound: u64) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::Internal("cannot factor zero".into()));
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut rest = n.magnitude().clone();
    let mut factors = Vec::new();

    let mut push = |p: &BigUint, rest: &mut BigUint| {
        let mut e = 0u32;
        while (&*rest % p).is_zero() {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((BigInt::from(p.clone()), e));
        }
    };

    let two = BigUint::from(2u32);
    push(&two, &mut rest);
    let mut d = 3u64;
    while d <= bound {
        let dd = BigUint::from(d);
        if &dd * &dd > rest {
            break;
        }
        push(&dd, &mut rest);
        d += 2;
    }
    if !rest.is_one() {
        let b = BigUint::from(bound);
        let proven = &rest < &(&b * &b) || is_prime(&rest) == Some(true);
        if !proven {
            return Err(Error::FactorizationIncomplete {
                n: n.clone(),
                cofactor: BigInt::from(rest),
            });
        }
        factors.push((BigInt::from(rest), 1));
    }
    Ok(Factorization { sign, factors })
}

/// Deterministic primality for `n < 3.317 * 10^24`; `None` above that.
pub fn is_prime(n: &BigUint) -> Option<bool> {
    let limit: BigUint = MILLER_RABIN_LIMIT.parse().expect("constant");
    if n >= &limit {
        return None;
    }
    if n < &BigUint::from(2u32) {
        return Some(false);
    }
    for &p in &MILLER_RABIN_BASES {
        let p = BigUint::from(p);
        if *n == p {
            return Some(true);
        }
        if (n % &p).is_zero() {
            return Some(false);
        }
    }
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'bases: for &a in &MILLER_RABIN_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'bases;
            }
        }
        return Some(false);
    }
    Some(true)
}

/// Writes `n = core * root^2` with `core` squarefree (sign kept in `core`).
pub fn squarefree_decomposition(n: &BigInt) -> Result<(BigInt, BigInt)> {
    let f = factor(n, DEFAULT_FACTOR_BOUND)?;
    let mut core = BigInt::from(f.sign);
    let mut root = BigInt::one();
    for (p, e) in &f.factors {
        if e % 2 == 1 {
            core *= p;
        }
        root *= num_traits::pow(p.clone(), (e / 2) as usize);
    }
    Ok((core, root))
}

/// The squarefree integer in the square class of a nonzero rational.
pub fn square_class(q: &Rat) -> Result<BigInt> {
    Ok(squarefree_decomposition(&(q.numer() * q.denom()))?.0)
}

/// Legendre symbol `(a/p)` for an odd prime `p`, in `{-1, 0, 1}`.
pub fn legendre(a: &BigInt, p: &BigInt) -> i8 {
    let a = a.mod_floor(p);
    if a.is_zero() {
        return 0;
    }
    let e = (p - 1u32) / 2u32;
    if a.modpow(&e, p).is_one() {
        1
    } else {
        -1
    }
}

/// A place of `Q`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Infinity,
    Prime(BigInt),
}

impl Place {
    pub fn prime(p: i64) -> Place {
        Place::Prime(BigInt::from(p))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinity => write!(f, "inf"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

fn valuation(n: &BigInt, p: &BigInt) -> (u32, BigInt) {
    let mut n = n.clone();
    let mut v = 0;
    while (&n % p).is_zero() {
        n /= p;
        v += 1;
    }
    (v, n)
}

fn rational_to_class_integer(q: &Rat) -> BigInt {
    // p/q and p*q differ by the square q^2.
    q.numer() * q.denom()
}

/// The Hilbert symbol `(a, b)_v` of two nonzero rationals at the place `v`.
pub fn hilbert_symbol(a: &Rat, b: &Rat, place: &Place) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Internal("Hilbert symbol of zero".into()));
    }
    let a = rational_to_class_integer(a);
    let b = rational_to_class_integer(b);
    Ok(match place {
        Place::Infinity => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Prime(p) if *p == BigInt::from(2) => {
            let (alpha, u) = valuation(&a, p);
            let (beta, v) = valuation(&b, p);
            let eps = |x: &BigInt| -> u32 {
                if x.mod_floor(&BigInt::from(4)) == BigInt::one() { 0 } else { 1 }
            };
            let omega = |x: &BigInt| -> u32 {
                let r = x.mod_floor(&BigInt::from(8)).to_u32().expect("small");
                if r == 1 || r == 7 { 0 } else { 1 }
            };
            let exponent = eps(&u) * eps(&v) + alpha * omega(&v) + beta * omega(&u);
            if exponent % 2 == 0 { 1 } else { -1 }
        }
        Place::Prime(p) => {
            let (alpha, u) = valuation(&a, p);
            let (beta, v) = valuation(&b, p);
            let eps_p = ((p - 1u32) / 2u32).is_odd();
            let mut s: i8 = if eps_p && (alpha * beta) % 2 == 1 { -1 } else { 1 };
            if beta % 2 == 1 {
                s *= legendre(&u, p);
            }
            if alpha % 2 == 1 {
                s *= legendre(&v, p);
            }
            s
        }
    })
}

/// `{inf, 2}` together with every prime dividing a numerator or denominator
/// of `a` or `b`; outside this set `(a, b)_v = 1`.
pub fn relevant_places(values: &[&Rat]) -> Result<Vec<Place>> {
    let mut primes: Vec<BigInt> = vec![BigInt::from(2)];
    for q in values {
        for part in [q.numer(), q.denom()] {
            if part.is_one() || (-part).is_one() {
                continue;
            }
            primes.extend(factor(part, DEFAULT_FACTOR_BOUND)?.primes().cloned());
        }
    }
    primes.sort();
    primes.dedup();
    let mut places = vec![Place::Infinity];
    places.extend(primes.into_iter().map(Place::Prime));
    Ok(places)
}

/// A square root of `a` modulo the odd prime `p` (Tonelli-Shanks), if `a` is
/// a square mod `p`.
pub fn sqrt_mod_prime(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let a = a.mod_floor(p);
    if a.is_zero() {
        return Some(BigInt::zero());
    }
    if *p == BigInt::from(2) {
        return Some(a);
    }
    if legendre(&a, p) != 1 {
        return None;
    }
    let one = BigInt::one();
    let p_minus_one = p - &one;
    let s = p_minus_one.trailing_zeros().unwrap_or(0);
    let q = &p_minus_one >> s;
    let mut z = BigInt::from(2);
    while legendre(&z, p) != -1 {
        z += 1;
    }
    let mut m = s;
    let mut c = z.modpow(&q, p);
    let mut t = a.modpow(&q, p);
    let mut r = a.modpow(&((&q + 1u32) / 2u32), p);
    while !t.is_one() {
        let mut i = 0;
        let mut tt = t.clone();
        while !tt.is_one() {
            tt = (&tt * &tt) % p;
            i += 1;
        }
        let b = c.modpow(&(BigInt::one() << (m - i - 1)), p);
        m = i;
        c = (&b * &b) % p;
        t = (&t * &c) % p;
        r = (&r * &b) % p;
    }
    Some(r)
}

/// A square root of `a` modulo a squarefree modulus `n > 0`, combining
/// prime roots by the Chinese remainder theorem.
pub fn sqrt_mod_squarefree(a: &BigInt, n: &BigInt) -> Result<Option<BigInt>> {
    if n.is_one() {
        return Ok(Some(BigInt::zero()));
    }
    let f = factor(n, DEFAULT_FACTOR_BOUND)?;
    let mut x = BigInt::zero();
    let mut modulus = BigInt::one();
    for (p, e) in &f.factors {
        debug_assert_eq!(*e, 1, "modulus must be squarefree");
        let Some(r) = sqrt_mod_prime(a, p) else { return Ok(None) };
        // x = x0 mod modulus, x = r mod p
        let inv = mod_inverse(&modulus, p).expect("coprime moduli");
        let k = ((&r - &x) * inv).mod_floor(p);
        x += &modulus * k;
        modulus *= p;
        x = x.mod_floor(&modulus);
    }
    Ok(Some(x))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let g = a.extended_gcd(m);
    g.gcd.is_one().then(|| g.x.mod_floor(m))
}
