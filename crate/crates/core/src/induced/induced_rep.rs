//! The representation of `G = H x| <tau>` induced from `rho`, in block form:
//! `g` acts by `diag(sigma^i rho tau^-i (g))` and `tau` by the block cyclic
//! shift composed with `sigma`.

use rand::{Rng, SeedableRng};
use num_traits::Zero;
use rand_pcg::Pcg64;

use crate::error::Result;
use crate::field::Rat;
use crate::linalg::Mat;
use crate::rep::{Check, CheckReport, Representation, Word};

use super::semilinear::SemilinearMat;

#[derive(Clone, Debug)]
pub struct InducedRep {
    pub base: Representation,
    /// `D(g)` for each generator `g` of `H`.
    pub blocks: Vec<Mat>,
    /// The block permutation `P`; `tau` acts as `v -> P sigma(v)`.
    pub shift: Mat,
}

/// The block matrix with `I_n` at block positions `(i + 1, i)` and `(0, r - 1)`.
pub fn block_shift(rep: &Representation) -> Mat {
    let ext = rep.ext();
    let (n, r) = (rep.dim(), ext.degree());
    let mut p = Mat::zeros(ext, r * n, r * n);
    let id = Mat::identity(ext, n);
    for i in 0..r {
        p.set_block(((i + 1) % r) * n, i * n, &id);
    }
    p
}

impl InducedRep {
    pub fn build(rep: &Representation) -> InducedRep {
        let r = rep.ext().degree();
        let blocks = (0..rep.group().num_gens())
            .map(|g| {
                let diag: Vec<Mat> = (0..r).map(|i| rep.twisted_image(g, i)).collect();
                Mat::block_diagonal(rep.ext(), &diag)
            })
            .collect();
        InducedRep { base: rep.clone(), blocks, shift: block_shift(rep) }
    }

    pub fn dim(&self) -> usize {
        self.shift.rows()
    }

    pub fn tau(&self) -> SemilinearMat {
        SemilinearMat { mat: self.shift.clone(), power: 1 }
    }

    pub fn evaluate_h(&self, w: &Word) -> Result<Mat> {
        let mut acc = Mat::identity(self.base.ext(), self.dim());
        for l in w.letters() {
            let m = if l.inverse { self.blocks[l.gen].inverse()? } else { self.blocks[l.gen].clone() };
            acc = acc.mul(&m)?;
        }
        Ok(acc)
    }

    /// Relations of `G`: those of `H` blockwise, `tau^r = 1`, and
    /// `tau g tau^-1 = tau(g)` on generators.
    pub fn check_relations(&self) -> Result<CheckReport> {
        let group = self.base.group();
        let mut checks = Vec::new();
        for w in group.relations() {
            checks.push(Check {
                label: group.display_word(w),
                holds: self.evaluate_h(w)?.is_identity(),
            });
        }
        let t = self.tau();
        let r = self.base.ext().degree();
        checks.push(Check { label: format!("tau^{r}"), holds: t.pow(r)?.is_identity() });
        let t_inv = t.inverse()?;
        for g in 0..group.num_gens() {
            let lhs = t.mul(&SemilinearMat::linear(self.blocks[g].clone()))?.mul(&t_inv)?;
            let rhs = self.evaluate_h(&group.apply_tau(&Word::generator(g), 1))?;
            checks.push(Check {
                label: format!("tau {} tau^-1 = tau({})", group.gen_names()[g], group.gen_names()[g]),
                holds: lhs == SemilinearMat::linear(rhs),
            });
        }
        Ok(CheckReport { checks })
    }

    /// A random element of `G` as a product of `len` generators of `G`.
    pub fn random_element(&self, rng: &mut Pcg64, len: usize) -> Result<SemilinearMat> {
        let h = self.blocks.len();
        let t = self.tau();
        let mut acc = SemilinearMat::identity(&self.shift);
        for _ in 0..len {
            let k = rng.random_range(0..=h);
            let step = if k == h { t.clone() } else { SemilinearMat::linear(self.blocks[k].clone()) };
            acc = acc.mul(&step)?;
        }
        Ok(acc)
    }

    /// Character checks on `samples` random elements of `G` built from
    /// words of length `len`. On `H` every diagonal block has the same trace
    /// `chi(h)` and the induced character is the rational trace divided by
    /// `r`; off `H` the rational trace vanishes.
    pub fn character_samples(&self, seed: u64, samples: usize, len: usize) -> Result<CharacterReport> {
        let mut rng = Pcg64::seed_from_u64(seed);
        let ext = self.base.ext();
        let (n, r) = (self.base.dim(), ext.degree());
        let mut checks = Vec::new();
        let mut values = Vec::new();
        for k in 0..samples {
            let g = self.random_element(&mut rng, len)?;
            let tr = g.rational_trace()?;
            if g.power == 0 {
                let first = g.mat.block(0, 0, n, n).trace();
                let equal = (1..r).all(|i| g.mat.block(i * n, i * n, n, n).trace() == first);
                checks.push(Check { label: format!("sample {k}: block traces agree"), holds: equal });
                values.push(tr / Rat::from_integer(r.into()));
            } else {
                checks.push(Check { label: format!("sample {k}: trace vanishes off H"), holds: tr.is_zero() });
            }
        }
        Ok(CharacterReport { checks: CheckReport { checks }, values })
    }
}

/// Character checks on sampled group elements, with the induced character
/// values seen on `H`.
#[derive(Clone, Debug)]
pub struct CharacterReport {
    pub checks: CheckReport,
    pub values: Vec<Rat>,
}
