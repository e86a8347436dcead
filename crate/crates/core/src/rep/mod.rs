//! Presented groups, the automorphism `tau`, and representations over `L`.

pub mod group;
pub mod representation;
pub mod word;

pub use group::GroupData;
pub use representation::{
    check_automorphism, AutomorphismReport, BurnsideReport, Check, CheckReport, Representation,
    Verification, DEFAULT_BURNSIDE_CAP,
};
pub use word::{Letter, Word};
