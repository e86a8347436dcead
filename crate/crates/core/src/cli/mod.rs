//! The batch front end: problem files in, JSON reports and certificates out.

pub mod certificate_file;
pub mod commands;
pub mod problem;

pub use certificate_file::{CertificateFile, CERTIFICATE_FORMAT};
pub use commands::{run, run_text, Command, Outcome, Overrides};
pub use problem::{ParseError, Problem, ProblemFile};
