use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid cyclic extension: {0}")]
    InvalidExtension(String),

    /// An arithmetic identity that must hold for a valid extension failed.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("factorization of {n} incomplete: cofactor {cofactor} is neither split by trial division nor provably prime")]
    FactorizationIncomplete { n: BigInt, cofactor: BigInt },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("no norm witness found for {lambda} within the search budget")]
    NoWitnessFound { lambda: BigRational },

    #[error("matrix is singular")]
    Singular,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("span dimension still growing at word length {cap} (dimension {dim})")]
    CapExceeded { cap: usize, dim: usize },

    #[error("representation is not equivalent to its twisted Galois conjugate (intertwiner space is zero)")]
    NotEquivalent,

    #[error("intertwiner space has dimension {dim} over L; the representation is not absolutely irreducible")]
    NotIrreducible { dim: usize },

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),

    #[error("bad witness: {0}")]
    BadWitness(String),

    #[error("input to Hilbert 90 does not have norm equal to the identity")]
    NotACocycle,

    #[error("no invertible candidate found after {budget} draws")]
    BudgetExhausted { budget: usize },

    #[error("endomorphism check failed: {0}")]
    EndomorphismCheckFailed(String),

    #[error("invalid input at {path}: {message}")]
    Input { path: String, message: String },
}

impl Error {
    pub(crate) fn input(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Input { path: path.into(), message: message.into() }
    }
}
