//! Fixture ingestion, the command pipelines and their reports.

pub mod fixture;
pub mod report;
pub mod run;

pub use fixture::{corpus, FixtureFile};
pub use report::Report;
pub use run::{run, Command, Options};

use crate::error::Error;

/// Process exit status for an error: 3 for an exhausted budget, 2 for bad
/// input, 1 for everything else (a failed verification).
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => 3,
        Error::Parse { .. }
        | Error::NonPrimeField(_)
        | Error::MalformedQuiver(_)
        | Error::MalformedRelation(_)
        | Error::InfiniteDimensional(_)
        | Error::EnumerationUnsupported => 2,
        _ => 1,
    }
}
