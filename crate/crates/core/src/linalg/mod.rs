//! Exact linear algebra over `Q` and over a cyclic extension `L`.

pub mod bareiss;
pub mod mat;
pub mod restrict;

pub use bareiss::QSpan;
pub use mat::Mat;
pub use restrict::{l_basis_of, linear_kernel, restrict_scalars, solve_sylvester_space, SylvesterSpace};
