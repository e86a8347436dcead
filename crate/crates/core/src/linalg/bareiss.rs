//! Fraction-free elimination over `Z` for rational matrices.
//!
//! Each rational row is first lifted to an integer row by clearing its
//! denominators (this does not change the row space), then reduced with
//! Bareiss' one-step rule so every intermediate entry is a minor of the
//! lifted matrix. Pivots are chosen by smallest bit length.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::field::rational::{height, lcm_of_denominators, Rat};

/// Row echelon form of an integer-lifted rational matrix.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// A basis of `{x : A x = 0}`, one vector per non-pivot column.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let is_pivot = {
            let mut v = vec![false; self.cols];
            for &p in &self.pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![Rat::zero(); self.cols];
            x[free] = Rat::one();
            for (row, &pc) in self.rows.iter().zip(&self.pivots).rev() {
                let mut acc = Rat::zero();
                for j in pc + 1..self.cols {
                    if !row[j].is_zero() && !x[j].is_zero() {
                        acc += &x[j] * Rat::from_integer(row[j].clone());
                    }
                }
                x[pc] = -acc / Rat::from_integer(row[pc].clone());
            }
            basis.push(x);
        }
        basis
    }
}

pub(crate) fn lift_row(row: &[Rat]) -> Vec<BigInt> {
    let l = lcm_of_denominators(row);
    row.iter().map(|q| q.numer() * (&l / q.denom())).collect()
}

/// Fraction-free row echelon form of `rows` (each of length `cols`).
pub fn echelon(rows: &[Vec<Rat>], cols: usize) -> Echelon {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            debug_assert_eq!(r.len(), cols);
            lift_row(r)
        })
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len())
            .filter(|&i| !a[i][col].is_zero())
            .min_by_key(|&i| height(&a[i][col]))
        else {
            continue;
        };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[col];
        for row in bottom.iter_mut() {
            let f = std::mem::take(&mut row[col]);
            for j in col + 1..cols {
                let num = pivot * &row[j] - &f * &pivot_row[j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
        }
        prev = pivot.clone();
        pivots.push(col);
        r += 1;
    }
    a.truncate(r);
    Echelon { rows: a, pivots, cols }
}

pub fn rank(rows: &[Vec<Rat>], cols: usize) -> usize {
    echelon(rows, cols).rank()
}

/// Right kernel `{x : A x = 0}` of a rational matrix given by rows.
pub fn kernel(rows: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    echelon(rows, cols).kernel()
}

/// An incrementally grown subspace of `Q^n`, stored as primitive integer
/// rows with distinct pivots.
#[derive(Clone, Debug)]
pub struct QSpan {
    dim: usize,
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl QSpan {
    pub fn new(dim: usize) -> Self {
        QSpan { dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        for (p, b) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let g = b[*p].gcd(&v[*p]);
            let cb = &b[*p] / &g;
            let cv = &v[*p] / &g;
            for (x, y) in v.iter_mut().zip(b) {
                *x = &cb * &*x - &cv * y;
            }
            make_primitive(&mut v);
        }
        v
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(lift_row(v)).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        let v = self.reduce(lift_row(v));
        match v.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.rows.push((p, v));
                true
            }
            None => false,
        }
    }
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rational::{rat, ratio};

    fn rows(data: &[&[i64]]) -> Vec<Vec<Rat>> {
        data.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn ranks() {
        let id = rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(rank(&id, 3), 3);
        assert_eq!(rank(&rows(&[&[0, 0, 0], &[0, 0, 0]]), 3), 0);
        assert_eq!(rank(&rows(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]), 3), 1);
        let m = vec![vec![ratio(1, 2), ratio(1, 3)], vec![ratio(3, 2), rat(1)]];
        assert_eq!(rank(&m, 2), 1);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = rows(&[&[1, 2, 3, 4], &[2, 4, 7, 9], &[0, 0, 1, 1]]);
        let k = kernel(&a, 4);
        assert_eq!(k.len(), 4 - rank(&a, 4));
        for v in &k {
            for r in &a {
                let dot: Rat = r.iter().zip(v).map(|(x, y)| x * y).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn skipped_columns_keep_divisions_exact() {
        let a = rows(&[&[0, 2, 4, 1], &[0, 3, 6, 5], &[0, 1, 2, 7], &[0, 5, 10, 2]]);
        let e = echelon(&a, 4);
        assert_eq!(e.pivots, vec![1, 3]);
        assert_eq!(e.kernel().len(), 2);
    }

    #[test]
    fn incremental_span() {
        let mut s = QSpan::new(3);
        assert!(s.insert(&[rat(1), rat(2), rat(3)]));
        assert!(!s.insert(&[rat(2), rat(4), rat(6)]));
        assert!(s.insert(&[ratio(1, 2), rat(0), rat(1)]));
        assert!(s.contains(&[rat(2), rat(2), rat(5)]));
        assert!(!s.contains(&[rat(0), rat(0), rat(1)]));
        assert!(s.insert(&[rat(0), rat(0), rat(1)]));
        assert_eq!(s.rank(), 3);
    }
}
