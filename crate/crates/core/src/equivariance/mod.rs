//! Conjugating a representation into Galois-equivariant form: the
//! intertwiner `X`, the invariant `lambda`, constructive Hilbert 90 and
//! certificates.

pub mod certificate;
pub mod hilbert90;
pub mod intertwiner;

pub use certificate::{equivariant_form, verify_certificate, EquivarianceCertificate, EquivarianceOptions, Status};
pub use hilbert90::{cocycle_chain, hilbert90, is_coboundary_solution, Hilbert90, DEFAULT_H90_BUDGET, DEFAULT_SEED};
pub use intertwiner::{compute_x, lambda_invariant, norm_scalar, normalize, rescale_x, LambdaInvariant};
