//! Matrix representations of presented groups over `L`, and the checks run
//! on them before any equivariance computation.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::CyclicExtension;
use crate::linalg::{Mat, QSpan};

use super::group::GroupData;
use super::word::Word;

pub const DEFAULT_BURNSIDE_CAP: usize = 64;

/// A homomorphism `H -> GL(n, L)` given by the images of the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    group: Arc<GroupData>,
    ext: Arc<CyclicExtension>,
    dim: usize,
    images: Vec<Mat>,
    inverses: Vec<Mat>,
}

impl Representation {
    /// Checks shapes and invertibility. Relations are checked separately by
    /// [`Representation::check_relations`].
    pub fn new(group: Arc<GroupData>, ext: Arc<CyclicExtension>, images: Vec<Mat>) -> Result<Self> {
        if images.len() != group.num_gens() {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices for {} generators",
                images.len(),
                group.num_gens()
            )));
        }
        if group.tau_order() != ext.degree() {
            return Err(Error::DimensionMismatch(format!(
                "tau has order {} but the extension has degree {}",
                group.tau_order(),
                ext.degree()
            )));
        }
        let dim = images.first().map_or(0, Mat::rows);
        if dim == 0 {
            return Err(Error::DimensionMismatch("representation needs a generator of positive size".into()));
        }
        for (m, name) in images.iter().zip(group.gen_names()) {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "image of `{name}` is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
            if **m.ext() != *ext {
                return Err(Error::DimensionMismatch(format!("image of `{name}` lives over another field")));
            }
        }
        let inverses = images.iter().map(Mat::inverse).collect::<Result<Vec<_>>>()?;
        Ok(Representation { group, ext, dim, images, inverses })
    }

    pub fn group(&self) -> &Arc<GroupData> {
        &self.group
    }

    pub fn ext(&self) -> &Arc<CyclicExtension> {
        &self.ext
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn images(&self) -> &[Mat] {
        &self.images
    }

    pub fn image(&self, gen: usize) -> &Mat {
        &self.images[gen]
    }

    /// The same group and field with new generator images.
    pub fn with_images(&self, images: Vec<Mat>) -> Result<Representation> {
        Representation::new(self.group.clone(), self.ext.clone(), images)
    }

    pub fn evaluate_word(&self, w: &Word) -> Mat {
        let mut acc = Mat::identity(&self.ext, self.dim);
        for l in w.letters() {
            let m = if l.inverse { &self.inverses[l.gen] } else { &self.images[l.gen] };
            acc = acc.mul(m).expect("images are square of the representation's size");
        }
        acc
    }

    pub fn evaluate(&self, word: &str) -> Result<Mat> {
        Ok(self.evaluate_word(&self.group.word(word)?))
    }

    /// `sigma^i(rho(tau^-i(g)))` for a generator `g`.
    pub fn twisted_image(&self, gen: usize, i: usize) -> Mat {
        let w = self.group.apply_tau_inverse(&Word::generator(gen), i);
        self.evaluate_word(&w).apply_sigma(i)
    }

    /// `sigma o rho o tau^-1` as a representation on the same generators.
    pub fn twisted(&self) -> Result<Representation> {
        let images = (0..self.group.num_gens()).map(|g| self.twisted_image(g, 1)).collect();
        self.with_images(images)
    }

    /// `Y rho(g) Y^-1` on every generator.
    pub fn conjugate(&self, y: &Mat) -> Result<Representation> {
        let yi = y.inverse()?;
        let images = self
            .images
            .iter()
            .map(|m| y.mul(m)?.mul(&yi))
            .collect::<Result<Vec<_>>>()?;
        self.with_images(images)
    }

    pub fn check_relations(&self) -> CheckReport {
        let checks = self
            .group
            .relations()
            .iter()
            .map(|w| Check {
                label: self.group.display_word(w),
                holds: self.evaluate_word(w).is_identity(),
            })
            .collect();
        CheckReport { checks }
    }

    /// `L`-dimension of the span of the image of the group algebra, grown
    /// one word length at a time until it stops changing.
    pub fn burnside_dim(&self, cap: usize) -> Result<BurnsideReport> {
        let r = self.ext.degree();
        let full = self.dim * self.dim;
        let mut span = QSpan::new(full * r);
        let mut per_length = Vec::new();
        let mut frontier = Vec::new();
        let add = |m: Mat, span: &mut QSpan, frontier: &mut Vec<Mat>| {
            if span.contains(&m.q_coords()) {
                return;
            }
            for k in 0..r {
                span.insert(&m.scale(&self.ext.basis(k)).q_coords());
            }
            frontier.push(m);
        };
        add(Mat::identity(&self.ext, self.dim), &mut span, &mut frontier);
        per_length.push(span.rank() / r);
        let steps: Vec<&Mat> = self.images.iter().chain(&self.inverses).collect();
        for _ in 1..=cap {
            let mut next = Vec::new();
            for m in &frontier {
                for s in &steps {
                    add(m.mul(s)?, &mut span, &mut next);
                }
            }
            per_length.push(span.rank() / r);
            if next.is_empty() {
                return Ok(BurnsideReport { dim: span.rank() / r, per_length });
            }
            frontier = next;
        }
        let dim = span.rank() / r;
        if dim == full {
            return Ok(BurnsideReport { dim, per_length });
        }
        Err(Error::CapExceeded { cap, dim })
    }

    pub fn is_absolutely_irreducible(&self, cap: usize) -> Result<bool> {
        Ok(self.burnside_dim(cap)?.dim == self.dim * self.dim)
    }
}

/// A labelled pass/fail check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurnsideReport {
    /// Stable `L`-dimension of the spanned algebra.
    pub dim: usize,
    /// Dimension of the span of words of length at most `k`, indexed by `k`.
    pub per_length: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    Checked(CheckReport),
    /// No representation was supplied to evaluate words in.
    Unverifiable,
}

impl Verification {
    pub fn passed(&self) -> Option<bool> {
        match self {
            Verification::Checked(r) => Some(r.all_hold()),
            Verification::Unverifiable => None,
        }
    }
}

/// Result of checking that `tau` is an automorphism of order dividing `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismReport {
    pub order: usize,
    pub order_ok: bool,
    /// `tau(relation) = 1` for each relation.
    pub relation_images: Verification,
    /// `tau^r(g) = g` for each generator.
    pub tau_power: Verification,
}

impl AutomorphismReport {
    /// `Some(true)` only when everything was checked and holds.
    pub fn passed(&self) -> Option<bool> {
        if !self.order_ok {
            return Some(false);
        }
        match (self.relation_images.passed(), self.tau_power.passed()) {
            (Some(a), Some(b)) => Some(a && b),
            (Some(false), None) | (None, Some(false)) => Some(false),
            _ => None,
        }
    }
}

/// Checks the `tau` data of `group`, evaluating words in `rep` when given.
/// The representation should be faithful for the word checks to be conclusive.
pub fn check_automorphism(group: &GroupData, rep: Option<&Representation>) -> AutomorphismReport {
    let r = group.tau_order();
    let order_ok = r >= 2;
    let (relation_images, tau_power) = match rep {
        None => (Verification::Unverifiable, Verification::Unverifiable),
        Some(rep) => {
            let rel = group
                .relations()
                .iter()
                .map(|w| Check {
                    label: format!("tau({})", group.display_word(w)),
                    holds: rep.evaluate_word(&group.apply_tau(w, 1)).is_identity(),
                })
                .collect();
            let pow = (0..group.num_gens())
                .map(|g| {
                    let w = Word::generator(g);
                    Check {
                        label: format!("tau^{r}({})", group.gen_names()[g]),
                        holds: rep.evaluate_word(&group.apply_tau(&w, r)) == *rep.image(g),
                    }
                })
                .collect();
            (
                Verification::Checked(CheckReport { checks: rel }),
                Verification::Checked(CheckReport { checks: pow }),
            )
        }
    };
    AutomorphismReport { order: r, order_ok, relation_images, tau_power }
}
