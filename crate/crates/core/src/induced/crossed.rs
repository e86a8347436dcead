//! The endomorphism algebra of the induced representation as a crossed
//! product generated by `m_lambda` (`lambda` in `L`) and `xi`.

use crate::error::{Error, Result};
use crate::field::{FieldElement, Rat};
use crate::linalg::{linear_kernel, Mat};
use crate::rep::{Check, CheckReport, Representation};

use super::induced_rep::InducedRep;

#[derive(Clone, Debug)]
pub struct CrossedProduct {
    pub x: Mat,
    pub lambda_rep: Rat,
    /// Blocks `sigma^i(X)` at `(i + 1, i)` and `sigma^(r-1)(X)` at `(0, r - 1)`.
    pub xi: Mat,
    n: usize,
}

impl CrossedProduct {
    /// Builds `xi` from `X` and checks that it and `m_t` are endomorphisms.
    pub fn build(induced: &InducedRep, x: &Mat) -> Result<CrossedProduct> {
        let ext = x.ext();
        let (n, r) = (x.rows(), ext.degree());
        if n != induced.base.dim() {
            return Err(Error::DimensionMismatch(format!("X is {n}x{n}, rho has dimension {}", induced.base.dim())));
        }
        let mut xi = Mat::zeros(ext, r * n, r * n);
        for i in 0..r {
            xi.set_block(((i + 1) % r) * n, i * n, &x.apply_sigma(i));
        }
        let lambda_rep = crate::equivariance::norm_scalar(x)?;
        let cp = CrossedProduct { x: x.clone(), lambda_rep, xi, n };
        cp.check_endomorphism(induced, &cp.xi, "xi")?;
        cp.check_endomorphism(induced, &cp.m(&ext.generator()), "m_t")?;
        Ok(cp)
    }

    pub fn r(&self) -> usize {
        self.x.ext().degree()
    }

    /// `diag(lambda I, sigma(lambda) I, ..., sigma^(r-1)(lambda) I)`.
    pub fn m(&self, lambda: &FieldElement) -> Mat {
        let ext = self.x.ext();
        let blocks: Vec<Mat> =
            (0..self.r()).map(|i| Mat::scalar(ext, self.n, &ext.sigma(lambda, i))).collect();
        Mat::block_diagonal(ext, &blocks)
    }

    fn check_endomorphism(&self, induced: &InducedRep, e: &Mat, name: &str) -> Result<()> {
        for (g, d) in induced.blocks.iter().enumerate() {
            if e.mul(d)? != d.mul(e)? {
                return Err(Error::EndomorphismCheckFailed(format!(
                    "{name} does not commute with generator `{}`",
                    induced.base.group().gen_names()[g]
                )));
            }
        }
        let p = &induced.shift;
        if e.mul(p)? != p.mul(&e.apply_sigma(1))? {
            return Err(Error::EndomorphismCheckFailed(format!("{name} does not commute with tau")));
        }
        Ok(())
    }

    /// The four defining relations, for each pair of consecutive samples.
    pub fn check_relations(&self, samples: &[FieldElement]) -> Result<CheckReport> {
        let ext = self.x.ext();
        let mut checks = Vec::new();
        let pairs = samples.iter().zip(samples.iter().cycle().skip(1));
        for (k, (a, b)) in pairs.enumerate() {
            let (ma, mb) = (self.m(a), self.m(b));
            checks.push(Check {
                label: format!("m(a) + m(b) = m(a + b) [sample {k}]"),
                holds: ma.add(&mb)? == self.m(&ext.add(a, b)),
            });
            checks.push(Check {
                label: format!("m(a) m(b) = m(ab) [sample {k}]"),
                holds: ma.mul(&mb)? == self.m(&ext.mul(a, b)),
            });
            checks.push(Check {
                label: format!("m(a) xi = xi m(sigma(a)) [sample {k}]"),
                holds: ma.mul(&self.xi)? == self.xi.mul(&self.m(&ext.sigma(a, 1)))?,
            });
        }
        checks.push(Check {
            label: format!("xi^{} = m(lambda_rep)", self.r()),
            holds: self.xi.pow(self.r() as u32)? == self.m(&ext.from_rational(self.lambda_rep.clone())),
        });
        Ok(CheckReport { checks })
    }
}

/// `Q`-dimension of the `L`-matrices `E` commuting with every `D(g)` and
/// with the `tau` action (`E P = P sigma(E)`).
pub fn endomorphism_dim(rep: &Representation) -> Result<usize> {
    let induced = InducedRep::build(rep);
    let dim = induced.dim();
    let p = &induced.shift;
    let basis = linear_kernel(rep.ext(), dim, dim, |e| {
        let mut out = Vec::with_capacity(induced.blocks.len() + 1);
        for d in &induced.blocks {
            out.push(e.mul(d)?.sub(&d.mul(e)?)?);
        }
        out.push(e.mul(p)?.sub(&p.mul(&e.apply_sigma(1))?)?);
        Ok(out)
    })?;
    Ok(basis.len())
}
