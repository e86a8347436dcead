//! Dense matrices over a cyclic extension `L`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{CyclicExtension, FieldElement, Rat};

use super::bareiss;
use super::restrict::{l_basis_of, linear_kernel};

/// A dense `rows x cols` matrix with entries in `L`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
    ext: Arc<CyclicExtension>,
}

impl Mat {
    pub fn new(
        ext: &Arc<CyclicExtension>,
        rows: usize,
        cols: usize,
        entries: Vec<FieldElement>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(e) = entries.iter().find(|e| e.coeffs().len() != ext.degree()) {
            return Err(Error::DimensionMismatch(format!(
                "entry has {} coordinates, extension has degree {}",
                e.coeffs().len(),
                ext.degree()
            )));
        }
        Ok(Mat { rows, cols, entries, ext: ext.clone() })
    }

    pub fn from_fn(
        ext: &Arc<CyclicExtension>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElement,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Mat { rows, cols, entries, ext: ext.clone() }
    }

    /// Builds a matrix from rows of coordinate vectors (each of length at most `r`).
    pub fn from_coeff_rows(ext: &Arc<CyclicExtension>, data: &[Vec<Vec<i64>>]) -> Result<Self> {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        if data.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let entries = data.iter().flatten().map(|c| ext.element_from_ints(c)).collect();
        Mat::new(ext, rows, cols, entries)
    }

    /// Builds a matrix with rational integer entries.
    pub fn from_int_rows(ext: &Arc<CyclicExtension>, data: &[Vec<i64>]) -> Result<Self> {
        let lifted: Vec<Vec<Vec<i64>>> =
            data.iter().map(|r| r.iter().map(|&x| vec![x]).collect()).collect();
        Mat::from_coeff_rows(ext, &lifted)
    }

    pub fn zeros(ext: &Arc<CyclicExtension>, rows: usize, cols: usize) -> Self {
        Mat::from_fn(ext, rows, cols, |_, _| ext.zero())
    }

    pub fn identity(ext: &Arc<CyclicExtension>, n: usize) -> Self {
        Mat::scalar(ext, n, &ext.one())
    }

    pub fn scalar(ext: &Arc<CyclicExtension>, n: usize, c: &FieldElement) -> Self {
        Mat::from_fn(ext, n, n, |i, j| if i == j { c.clone() } else { ext.zero() })
    }

    pub fn block_diagonal(ext: &Arc<CyclicExtension>, blocks: &[Mat]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(ext, n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn ext(&self) -> &Arc<CyclicExtension> {
        &self.ext
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.entries[i * self.cols + j] = v;
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Mat) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        Mat::from_fn(&self.ext, rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    fn same_shape(&self, other: &Mat, what: &str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{what} of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        self.same_shape(other, "sum")?;
        let e = &self.ext;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| e.add(a, b)).collect();
        Ok(Mat { entries, ..self.clone_shape() })
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        self.same_shape(other, "difference")?;
        let e = &self.ext;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| e.sub(a, b)).collect();
        Ok(Mat { entries, ..self.clone_shape() })
    }

    pub fn neg(&self) -> Mat {
        let entries = self.entries.iter().map(|a| self.ext.neg(a)).collect();
        Mat { entries, ..self.clone_shape() }
    }

    /// `c * self` for `c` in `L`.
    pub fn scale(&self, c: &FieldElement) -> Mat {
        let entries = self.entries.iter().map(|a| self.ext.mul(c, a)).collect();
        Mat { entries, ..self.clone_shape() }
    }

    pub fn scale_rational(&self, q: &Rat) -> Mat {
        let entries = self.entries.iter().map(|a| self.ext.scale(a, q)).collect();
        Mat { entries, ..self.clone_shape() }
    }

    fn clone_shape(&self) -> Mat {
        Mat { rows: self.rows, cols: self.cols, entries: Vec::new(), ext: self.ext.clone() }
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let e = &self.ext;
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = e.zero();
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = e.add(&acc, &e.mul(a, b));
                    }
                }
                entries.push(acc);
            }
        }
        Ok(Mat { rows: self.rows, cols: other.cols, entries, ext: e.clone() })
    }

    /// Product of a sequence of square matrices, left to right.
    pub fn product<'a>(n: usize, ext: &Arc<CyclicExtension>, it: impl IntoIterator<Item = &'a Mat>) -> Result<Mat> {
        it.into_iter().try_fold(Mat::identity(ext, n), |acc, m| acc.mul(m))
    }

    pub fn pow(&self, e: u32) -> Result<Mat> {
        self.require_square("power")?;
        (0..e).try_fold(Mat::identity(&self.ext, self.rows), |acc, _| acc.mul(self))
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(&self.ext, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Entrywise `sigma^i`.
    pub fn apply_sigma(&self, i: usize) -> Mat {
        if i % self.ext.degree() == 0 {
            return self.clone();
        }
        let entries = self.entries.iter().map(|a| self.ext.sigma(a, i)).collect();
        Mat { entries, ..self.clone_shape() }
    }

    /// `sigma^(r-1)(A) ... sigma(A) A`.
    pub fn matrix_norm(&self) -> Result<Mat> {
        self.require_square("norm")?;
        (1..self.ext.degree()).try_fold(self.clone(), |acc, i| self.apply_sigma(i).mul(&acc))
    }

    pub fn trace(&self) -> FieldElement {
        (0..self.rows.min(self.cols))
            .fold(self.ext.zero(), |acc, i| self.ext.add(&acc, self.get(i, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FieldElement::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.as_scalar().is_some_and(|c| c.is_one())
    }

    /// The `c` with `self = c I`, if the matrix is scalar.
    pub fn as_scalar(&self) -> Option<FieldElement> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let c = self.get(0, 0);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if (i == j && v != c) || (i != j && !v.is_zero()) {
                    return None;
                }
            }
        }
        Some(c.clone())
    }

    /// Index and value of the first nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, &FieldElement)> {
        self.entries.iter().enumerate().find(|(_, e)| !e.is_zero())
    }

    fn require_square(&self, what: &str) -> Result<()> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "{what} of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    /// Gauss-Jordan inverse over `L`.
    pub fn inverse(&self) -> Result<Mat> {
        self.require_square("inverse")?;
        let n = self.rows;
        let e = &self.ext;
        let mut a: Vec<Vec<FieldElement>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut inv: Vec<Vec<FieldElement>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { e.one() } else { e.zero() }).collect())
            .collect();
        for col in 0..n {
            let p = (col..n).find(|&i| !a[i][col].is_zero()).ok_or(Error::Singular)?;
            a.swap(col, p);
            inv.swap(col, p);
            let pinv = e.inv(&a[col][col])?;
            for j in 0..n {
                a[col][j] = e.mul(&a[col][j], &pinv);
                inv[col][j] = e.mul(&inv[col][j], &pinv);
            }
            for i in 0..n {
                if i == col || a[i][col].is_zero() {
                    continue;
                }
                let f = a[i][col].clone();
                for j in 0..n {
                    let t = e.mul(&f, &a[col][j]);
                    a[i][j] = e.sub(&a[i][j], &t);
                    let t = e.mul(&f, &inv[col][j]);
                    inv[i][j] = e.sub(&inv[i][j], &t);
                }
            }
        }
        Ok(Mat { rows: n, cols: n, entries: inv.into_iter().flatten().collect(), ext: e.clone() })
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Rational coordinates, ordered by entry (row-major) then by power of `t`.
    pub fn q_coords(&self) -> Vec<Rat> {
        self.entries.iter().flat_map(|e| e.coeffs().iter().cloned()).collect()
    }

    pub fn from_q_coords(
        ext: &Arc<CyclicExtension>,
        rows: usize,
        cols: usize,
        coords: &[Rat],
    ) -> Result<Mat> {
        let r = ext.degree();
        if coords.len() != rows * cols * r {
            return Err(Error::DimensionMismatch(format!(
                "{} rational coordinates for a {rows}x{cols} matrix over a degree {r} field",
                coords.len()
            )));
        }
        let entries = coords
            .chunks(r)
            .map(|c| ext.element(c.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Mat::new(ext, rows, cols, entries)
    }

    /// Rank over `L`, computed as the `Q`-rank of `{t^k row_i}` divided by `r`.
    pub fn rank(&self) -> usize {
        let r = self.ext.degree();
        let mut q_rows = Vec::with_capacity(self.rows * r);
        for i in 0..self.rows {
            for k in 0..r {
                let tk = self.ext.basis(k);
                q_rows.push(
                    self.row(i)
                        .iter()
                        .flat_map(|x| self.ext.mul(&tk, x).coeffs().to_vec())
                        .collect::<Vec<_>>(),
                );
            }
        }
        bareiss::rank(&q_rows, self.cols * r) / r
    }

    /// An `L`-basis of the right kernel `{v : A v = 0}`, as column vectors.
    pub fn kernel(&self) -> Result<Vec<Mat>> {
        let q_basis = linear_kernel(&self.ext, self.cols, 1, |v| Ok(vec![self.mul(v)?]))?;
        l_basis_of(&q_basis)
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> =
                self.row(i).iter().map(|x| self.ext.display(x).to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
