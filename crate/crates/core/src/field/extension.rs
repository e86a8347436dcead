//! Cyclic extensions `L = Q[t]/(m(t))` with an explicit generator of the
//! Galois group, and arithmetic on their elements.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::numtheory::squarefree_decomposition;
use super::rational::{format_rational, rat, Rat};
use crate::error::{Error, Result};

/// An element of `L`, stored as its coordinates in the basis `1, t, ..., t^(r-1)`.
///
/// Elements are always kept reduced modulo the minimal polynomial, so two
/// elements of the same extension are equal exactly when their coordinates
/// agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coeffs: Vec<Rat>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value of an element lying in `Q`, if it does.
    pub fn as_rational(&self) -> Option<&Rat> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }
}

/// Data specific to the quadratic case `r = 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticData {
    /// Squarefree `d` with `L = Q(sqrt d)`.
    pub disc_core: BigInt,
    /// The element of `L` whose square is `disc_core`.
    pub sqrt_disc_core: FieldElement,
}

/// A cyclic Galois extension `L/Q` of degree `r`, presented as
/// `Q[t]/(m(t))` together with the image `s(t)` of `t` under a generator
/// `sigma` of the Galois group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicExtension {
    min_poly: Vec<Rat>,
    sigma_image: Vec<Rat>,
    degree: usize,
    // sigma_table[i][k] holds sigma^i(t^k).
    sigma_table: Vec<Vec<Vec<Rat>>>,
    quadratic: Option<QuadraticData>,
}

impl CyclicExtension {
    /// Builds and validates an extension from the coefficients (constant term
    /// first) of a monic integer polynomial and of `s(t) = sigma(t)`.
    ///
    /// For `r = 2` irreducibility is checked through the discriminant. For
    /// larger `r` the polynomial is trusted to be irreducible; a reducible
    /// input surfaces later as an [`Error::Internal`] when a zero divisor is
    /// inverted.
    pub fn new(min_poly: Vec<Rat>, sigma_image: Vec<Rat>) -> Result<Self> {
        if min_poly.len() < 3 {
            return Err(Error::InvalidExtension("degree must be at least 2".into()));
        }
        let degree = min_poly.len() - 1;
        if !min_poly[degree].is_one() {
            return Err(Error::InvalidExtension("minimal polynomial must be monic".into()));
        }
        if min_poly.iter().any(|c| !c.is_integer()) {
            return Err(Error::InvalidExtension(
                "minimal polynomial must have integer coefficients".into(),
            ));
        }
        if sigma_image.len() > degree {
            return Err(Error::InvalidExtension(format!(
                "sigma image has degree {} but must have degree < {degree}",
                sigma_image.len() - 1
            )));
        }
        let mut ext = CyclicExtension {
            min_poly,
            sigma_image: Vec::new(),
            degree,
            sigma_table: Vec::new(),
            quadratic: None,
        };
        let mut s = sigma_image;
        s.resize(degree, Rat::zero());
        ext.sigma_image = s.clone();
        let s = FieldElement { coeffs: s };

        // sigma(t^k) = s^k; also m(s) must vanish.
        let mut powers = Vec::with_capacity(degree + 1);
        powers.push(ext.one());
        for k in 1..=degree {
            let next = ext.mul(&powers[k - 1], &s);
            powers.push(next);
        }
        let m_of_s = powers
            .iter()
            .zip(&ext.min_poly)
            .fold(ext.zero(), |acc, (p, c)| ext.add(&acc, &ext.scale(p, c)));
        if !m_of_s.is_zero() {
            return Err(Error::InvalidExtension(
                "sigma does not map t to a root of the minimal polynomial".into(),
            ));
        }

        let identity: Vec<Vec<Rat>> = (0..degree).map(|k| ext.basis(k).coeffs).collect();
        let first: Vec<Vec<Rat>> = powers[..degree].iter().map(|p| p.coeffs.clone()).collect();
        ext.sigma_table.push(identity);
        ext.sigma_table.push(first.clone());
        for i in 2..=degree {
            let prev = ext.sigma_table[i - 1].clone();
            let next: Vec<Vec<Rat>> =
                prev.iter().map(|v| apply_table(&first, v)).collect();
            if i < degree {
                ext.sigma_table.push(next);
            } else if next[1] != ext.sigma_table[0][1] {
                return Err(Error::InvalidExtension(format!(
                    "sigma^{degree} does not fix t"
                )));
            }
        }
        for i in 1..degree {
            if ext.sigma_table[i][1] == ext.sigma_table[0][1] {
                return Err(Error::InvalidExtension(format!(
                    "sigma has order {i}, expected {degree}"
                )));
            }
        }

        if degree == 2 {
            let b = ext.min_poly[1].to_integer();
            let c = ext.min_poly[0].to_integer();
            let disc = &b * &b - BigInt::from(4) * c;
            let (core, root) = squarefree_decomposition(&disc)?;
            if core.is_one() {
                return Err(Error::InvalidExtension(
                    "discriminant is a square: the polynomial is reducible".into(),
                ));
            }
            // sqrt(core) = (2t + b) / root
            let two_t_plus_b = FieldElement { coeffs: vec![Rat::from_integer(b), rat(2)] };
            let sqrt_disc_core =
                ext.scale(&two_t_plus_b, &Rat::new(BigInt::one(), root));
            ext.quadratic = Some(QuadraticData { disc_core: core, sqrt_disc_core });
        }
        Ok(ext)
    }

    /// `Q(sqrt d)` presented as `Q[t]/(t^2 - d)` with `sigma(t) = -t`.
    pub fn quadratic(d: i64) -> Result<Self> {
        CyclicExtension::new(vec![rat(-d), rat(0), rat(1)], vec![rat(0), rat(-1)])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn min_poly(&self) -> &[Rat] {
        &self.min_poly
    }

    pub fn sigma_image(&self) -> &[Rat] {
        &self.sigma_image
    }

    pub fn quadratic_data(&self) -> Option<&QuadraticData> {
        self.quadratic.as_ref()
    }

    /// The squarefree `d` with `L = Q(sqrt d)`, when `r = 2`.
    pub fn disc_core(&self) -> Option<&BigInt> {
        self.quadratic.as_ref().map(|q| &q.disc_core)
    }

    pub fn element(&self, mut coeffs: Vec<Rat>) -> Result<FieldElement> {
        if coeffs.len() > self.degree {
            return Err(Error::DimensionMismatch(format!(
                "element has {} coordinates, extension has degree {}",
                coeffs.len(),
                self.degree
            )));
        }
        coeffs.resize(self.degree, Rat::zero());
        Ok(FieldElement { coeffs })
    }

    /// Convenience for small integer coordinates.
    pub fn element_from_ints(&self, coeffs: &[i64]) -> FieldElement {
        self.element(coeffs.iter().map(|&c| rat(c)).collect())
            .expect("too many coordinates")
    }

    pub fn from_rational(&self, q: Rat) -> FieldElement {
        let mut coeffs = vec![Rat::zero(); self.degree];
        coeffs[0] = q;
        FieldElement { coeffs }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { coeffs: vec![Rat::zero(); self.degree] }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(Rat::one())
    }

    /// The class of `t`.
    pub fn generator(&self) -> FieldElement {
        self.basis(1)
    }

    /// The basis element `t^k`, `k < r`.
    pub fn basis(&self, k: usize) -> FieldElement {
        let mut coeffs = vec![Rat::zero(); self.degree];
        coeffs[k] = Rat::one();
        FieldElement { coeffs }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect() }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect() }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        FieldElement { coeffs: a.coeffs.iter().map(|x| -x).collect() }
    }

    pub fn scale(&self, a: &FieldElement, q: &Rat) -> FieldElement {
        FieldElement { coeffs: a.coeffs.iter().map(|x| x * q).collect() }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let r = self.degree;
        let mut prod = vec![Rat::zero(); 2 * r - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        self.reduce(prod)
    }

    fn reduce(&self, mut poly: Vec<Rat>) -> FieldElement {
        let r = self.degree;
        for k in (r..poly.len()).rev() {
            if poly[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut poly[k]);
            for j in 0..r {
                if !self.min_poly[j].is_zero() {
                    poly[k - r + j] -= &c * &self.min_poly[j];
                }
            }
        }
        poly.truncate(r);
        poly.resize(r, Rat::zero());
        FieldElement { coeffs: poly }
    }

    /// `sigma^i(x)`; `i` is taken modulo `r`.
    pub fn sigma(&self, x: &FieldElement, i: usize) -> FieldElement {
        let i = i % self.degree;
        if i == 0 {
            return x.clone();
        }
        FieldElement { coeffs: apply_table(&self.sigma_table[i], &x.coeffs) }
    }

    /// The field norm `sigma^(r-1)(x) ... sigma(x) x`.
    pub fn norm(&self, x: &FieldElement) -> Result<Rat> {
        let prod = (1..self.degree).fold(x.clone(), |acc, i| self.mul(&acc, &self.sigma(x, i)));
        prod.as_rational().cloned().ok_or_else(|| {
            Error::Internal("norm is not rational; sigma is not a field automorphism".into())
        })
    }

    /// The trace `x + sigma(x) + ... + sigma^(r-1)(x)`.
    pub fn trace(&self, x: &FieldElement) -> Rat {
        let sum = (1..self.degree).fold(x.clone(), |acc, i| self.add(&acc, &self.sigma(x, i)));
        // The trace of a basis element is sigma-invariant for a valid extension.
        sum.coeffs[0].clone()
    }

    pub fn inv(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.is_zero() {
            return Err(Error::Singular);
        }
        let cofactor = (1..self.degree).fold(self.one(), |acc, i| self.mul(&acc, &self.sigma(x, i)));
        let n = self.norm(x)?;
        if n.is_zero() {
            return Err(Error::Internal(
                "nonzero element with zero norm: the minimal polynomial is reducible".into(),
            ));
        }
        Ok(self.scale(&cofactor, &n.recip()))
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, x: &FieldElement, e: u32) -> FieldElement {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    /// Renders an element as a polynomial in `t`, e.g. `1/2 + 1/2*t`.
    pub fn display<'a>(&'a self, x: &'a FieldElement) -> impl fmt::Display + 'a {
        DisplayElement(x)
    }
}

fn apply_table(table: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); v.len()];
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (o, e) in out.iter_mut().zip(&table[k]) {
            if !e.is_zero() {
                *o += c * e;
            }
        }
    }
    out
}

struct DisplayElement<'a>(&'a FieldElement);

impl fmt::Display for DisplayElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.0.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = format_rational(&c.abs());
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ if c.abs().is_one() => write!(f, "t{}", power_suffix(k))?,
                _ => write!(f, "{mag}*t{}", power_suffix(k))?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn power_suffix(k: usize) -> String {
    if k == 1 {
        String::new()
    } else {
        format!("^{k}")
    }
}
