//! Restriction of scalars: `Q`-linear maps between spaces of `L`-matrices,
//! their kernels, and recovery of `L`-structure on the result.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{CyclicExtension, Rat};

use super::bareiss::{self, QSpan};
use super::mat::Mat;

/// The rational matrix (as rows) of a `Q`-linear map on `rows x cols`
/// matrices over `L`. The map may return several matrices; their
/// coordinates are concatenated.
pub fn restrict_scalars(
    ext: &Arc<CyclicExtension>,
    rows: usize,
    cols: usize,
    map: impl Fn(&Mat) -> Result<Vec<Mat>>,
) -> Result<Vec<Vec<Rat>>> {
    let r = ext.degree();
    let dim = rows * cols * r;
    let mut columns: Vec<Vec<Rat>> = Vec::with_capacity(dim);
    for u in 0..dim {
        let (cell, k) = (u / r, u % r);
        let mut e = Mat::zeros(ext, rows, cols);
        e.set(cell / cols, cell % cols, ext.basis(k));
        let out: Vec<Rat> = map(&e)?.iter().flat_map(Mat::q_coords).collect();
        if let Some(first) = columns.first() {
            if first.len() != out.len() {
                return Err(Error::DimensionMismatch("map output size varies".into()));
            }
        }
        columns.push(out);
    }
    let out_dim = columns.first().map_or(0, Vec::len);
    Ok((0..out_dim).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect())
}

/// A `Q`-basis of the kernel of a `Q`-linear map on `rows x cols` matrices.
pub fn linear_kernel(
    ext: &Arc<CyclicExtension>,
    rows: usize,
    cols: usize,
    map: impl Fn(&Mat) -> Result<Vec<Mat>>,
) -> Result<Vec<Mat>> {
    let system = restrict_scalars(ext, rows, cols, map)?;
    let dim = rows * cols * ext.degree();
    bareiss::kernel(&system, dim)
        .iter()
        .map(|v| Mat::from_q_coords(ext, rows, cols, v))
        .collect()
}

/// Extracts an `L`-basis from a `Q`-basis of a space of matrices, after
/// checking the space is closed under multiplication by `t`.
pub fn l_basis_of(q_basis: &[Mat]) -> Result<Vec<Mat>> {
    let Some(first) = q_basis.first() else {
        return Ok(Vec::new());
    };
    let ext = first.ext().clone();
    let r = ext.degree();
    let dim = first.rows() * first.cols() * r;
    let mut whole = QSpan::new(dim);
    for m in q_basis {
        whole.insert(&m.q_coords());
    }
    let t = ext.generator();
    for m in q_basis {
        if !whole.contains(&m.scale(&t).q_coords()) {
            return Err(Error::InternalInvariantViolation(
                "solution space is not an L-subspace".into(),
            ));
        }
    }
    let mut seen = QSpan::new(dim);
    let mut basis = Vec::new();
    for m in q_basis {
        if seen.contains(&m.q_coords()) {
            continue;
        }
        for k in 0..r {
            seen.insert(&m.scale(&ext.basis(k)).q_coords());
        }
        basis.push(m.clone());
    }
    debug_assert_eq!(basis.len() * r, q_basis.len());
    Ok(basis)
}

/// Solutions of a Sylvester system `X A_k = B_k X` for all `k`.
#[derive(Clone, Debug)]
pub struct SylvesterSpace {
    pub q_basis: Vec<Mat>,
    pub l_basis: Vec<Mat>,
}

impl SylvesterSpace {
    pub fn q_dim(&self) -> usize {
        self.q_basis.len()
    }

    pub fn l_dim(&self) -> usize {
        self.l_basis.len()
    }
}

/// Solves `X A_k = B_k X` for every pair, over `Q`, and recovers an `L`-basis.
pub fn solve_sylvester_space(pairs: &[(Mat, Mat)]) -> Result<SylvesterSpace> {
    let Some((a0, _)) = pairs.first() else {
        return Err(Error::DimensionMismatch("empty Sylvester system".into()));
    };
    let n = a0.rows();
    for (a, b) in pairs {
        if !a.is_square() || !b.is_square() || a.rows() != n || b.rows() != n {
            return Err(Error::DimensionMismatch(format!(
                "Sylvester pair sizes differ from {n}x{n}"
            )));
        }
    }
    let ext = a0.ext().clone();
    let q_basis = linear_kernel(&ext, n, n, |x| {
        pairs.iter().map(|(a, b)| x.mul(a)?.sub(&b.mul(x)?)).collect()
    })?;
    let l_basis = l_basis_of(&q_basis)?;
    Ok(SylvesterSpace { q_basis, l_basis })
}
