//! Exact arithmetic in `Q` and in cyclic extensions `L/Q`, and the number
//! theory used to decide membership in the norm group `N(L^x)`.

pub mod extension;
pub mod norms;
pub mod numtheory;
pub mod rational;

pub use extension::{CyclicExtension, FieldElement, QuadraticData};
pub use norms::{
    canonical_lambda, is_norm, local_symbols, norm_witness, ramified_places, RationalClass,
    DEFAULT_WITNESS_BUDGET,
};
pub use numtheory::{factor, hilbert_symbol, Factorization, Place, DEFAULT_FACTOR_BOUND};
pub use rational::{format_rational, parse_rational, rat, ratio, Rat};
