//! Problem files shipped with the crate.

use crate::cli::{Problem, ProblemFile};

pub const A5_3DIM: &str = include_str!("../fixtures/a5_3dim.json");
pub const A5_BROKEN: &str = include_str!("../fixtures/a5_broken.json");
pub const A5_KNOWN_Y: &str = include_str!("../fixtures/a5_known_Y.json");
pub const C3_INVERSION: &str = include_str!("../fixtures/c3_inversion.json");
pub const TWO_A7_4DIM: &str = include_str!("../fixtures/2a7_4dim.json");

/// Parses and builds a fixture, panicking on failure.
pub fn load(text: &str) -> Problem {
    ProblemFile::parse(text)
        .unwrap_or_else(|e| panic!("fixture does not parse: {e}"))
        .build()
        .unwrap_or_else(|e| panic!("fixture does not build: {e}"))
}

pub fn a5() -> Problem {
    load(A5_3DIM)
}

pub fn c3() -> Problem {
    load(C3_INVERSION)
}

pub fn two_a7() -> Problem {
    load(TWO_A7_4DIM)
}
