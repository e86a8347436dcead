//! `sigma`-semilinear maps `v -> A sigma^i(v)` on `L^m`.

use num_traits::Zero;

use crate::error::Result;
use crate::field::Rat;
use crate::linalg::Mat;

/// The map `v -> A sigma^power(v)`. Composition is
/// `(A, i)(B, j) = (A sigma^i(B), i + j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemilinearMat {
    pub mat: Mat,
    pub power: usize,
}

impl SemilinearMat {
    pub fn linear(mat: Mat) -> Self {
        SemilinearMat { mat, power: 0 }
    }

    pub fn identity(mat_like: &Mat) -> Self {
        SemilinearMat::linear(Mat::identity(mat_like.ext(), mat_like.rows()))
    }

    fn r(&self) -> usize {
        self.mat.ext().degree()
    }

    pub fn mul(&self, other: &SemilinearMat) -> Result<SemilinearMat> {
        let mat = self.mat.mul(&other.mat.apply_sigma(self.power))?;
        Ok(SemilinearMat { mat, power: (self.power + other.power) % self.r() })
    }

    pub fn inverse(&self) -> Result<SemilinearMat> {
        let r = self.r();
        let back = (r - self.power % r) % r;
        Ok(SemilinearMat { mat: self.mat.inverse()?.apply_sigma(back), power: back })
    }

    pub fn pow(&self, e: usize) -> Result<SemilinearMat> {
        (0..e).try_fold(SemilinearMat::identity(&self.mat), |acc, _| acc.mul(self))
    }

    pub fn is_identity(&self) -> bool {
        self.power == 0 && self.mat.is_identity()
    }

    /// Applies the map to a column vector.
    pub fn apply(&self, v: &Mat) -> Result<Mat> {
        self.mat.mul(&v.apply_sigma(self.power))
    }

    /// Trace of the map as a `Q`-linear endomorphism of `Q^(r m)`.
    pub fn rational_trace(&self) -> Result<Rat> {
        let ext = self.mat.ext();
        let r = ext.degree();
        let m = self.mat.cols();
        let mut tr = Rat::zero();
        for j in 0..m {
            for k in 0..r {
                let mut e = Mat::zeros(ext, m, 1);
                e.set(j, 0, ext.basis(k));
                let img = self.apply(&e)?;
                tr += &img.get(j, 0).coeffs()[k];
            }
        }
        Ok(tr)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, CyclicExtension};
    use std::sync::Arc;

    #[test]
    fn twisted_multiplication() {
        let e = Arc::new(CyclicExtension::quadratic(5).unwrap());
        let s = e.generator();
        let a = SemilinearMat { mat: Mat::scalar(&e, 1, &s), power: 1 };
        // (s sigma)^2 = s sigma(s) = -5
        let sq = a.pow(2).unwrap();
        assert_eq!(sq.power, 0);
        assert_eq!(sq.mat.as_scalar(), Some(e.from_rational(rat(-5))));
        assert!(a.mul(&a.inverse().unwrap()).unwrap().is_identity());
        assert!(a.inverse().unwrap().mul(&a).unwrap().is_identity());
    }

    #[test]
    fn rational_traces() {
        let e = Arc::new(CyclicExtension::quadratic(5).unwrap());
        let lin = SemilinearMat::linear(Mat::scalar(&e, 2, &e.element_from_ints(&[3, 1])));
        // Tr_{L/Q}(3 + s) times 2
        assert_eq!(lin.rational_trace().unwrap(), rat(12));
        let sigma = SemilinearMat { mat: Mat::identity(&e, 1), power: 1 };
        assert_eq!(sigma.rational_trace().unwrap(), rat(0));
    }
}
