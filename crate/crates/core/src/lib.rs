pub mod cli;
pub mod equivariance;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod induced;
pub mod linalg;
pub mod rep;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/fields.md")]
    struct Fields;
    #[doc = include_str!("../../../book/src/lambda.md")]
    struct Lambda;
    #[doc = include_str!("../../../book/src/hilbert90.md")]
    struct Hilbert90;
    #[doc = include_str!("../../../book/src/induced.md")]
    struct Induced;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
