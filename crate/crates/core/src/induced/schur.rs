//! The Schur index of the induced representation, read off from the order
//! of `lambda` in `Q^x / N(L^x)`.

use num_traits::One;

use crate::equivariance::lambda_invariant;
use crate::error::{Error, Result};
use crate::field::{ramified_places, FieldElement, Place, Rat, RationalClass};
use crate::rep::Representation;

#[derive(Clone, Debug)]
pub struct SchurReport {
    pub index: usize,
    /// `(a, b)` with the endomorphism algebra the quaternion algebra `(a, b)_Q`.
    pub division_algebra: Option<(Rat, Rat)>,
    pub lambda_class: Option<RationalClass>,
    /// Places where the division algebra ramifies.
    pub ramified: Vec<Place>,
}

/// For `r = 2` the index is 1 or 2 by the norm decision. For larger `r` only
/// index 1 can be certified, by a witness `mu` with `N(mu) lambda = 1` (or a
/// rational `r`-th root of `lambda`).
pub fn schur_index(rep: &Representation, witness: Option<&FieldElement>) -> Result<SchurReport> {
    let ext = rep.ext().clone();
    let inv = lambda_invariant(rep, witness)?;
    if ext.degree() != 2 {
        debug_assert!(inv.is_trivial);
        return Ok(SchurReport { index: 1, division_algebra: None, lambda_class: None, ramified: Vec::new() });
    }
    let class = RationalClass::new(inv.lambda_rep.clone(), ext.clone())?;
    if inv.is_trivial {
        return Ok(SchurReport { index: 1, division_algebra: None, lambda_class: Some(class), ramified: Vec::new() });
    }
    let a = inv.lambda_canonical.clone().ok_or_else(|| Error::Internal("missing canonical lambda".into()))?;
    let d = Rat::from_integer(ext.disc_core().expect("quadratic").clone());
    let ramified = ramified_places(&a, &d)?;
    if ramified.is_empty() || a.is_one() {
        return Err(Error::Internal("nontrivial class with split quaternion algebra".into()));
    }
    Ok(SchurReport { index: 2, division_algebra: Some((a, d)), lambda_class: Some(class), ramified })
}
