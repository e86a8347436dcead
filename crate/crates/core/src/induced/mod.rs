//! The representation of `G = H x| <tau>` induced from `rho`, its
//! endomorphism algebra as a crossed product, and its Schur index.

pub mod crossed;
pub mod induced_rep;
pub mod schur;
pub mod semilinear;

pub use crossed::{endomorphism_dim, CrossedProduct};
pub use induced_rep::{block_shift, CharacterReport, InducedRep};
pub use schur::{schur_index, SchurReport};
pub use semilinear::SemilinearMat;
