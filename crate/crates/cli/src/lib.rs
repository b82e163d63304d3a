//! Claim catalog, report formats and golden values behind the `triflect`
//! command.

pub mod claims;
pub mod golden;
pub mod report;

pub use claims::{catalog, run_claims, Claim, Settings, Source};
pub use golden::Golden;
pub use report::{ClaimRecord, Report, Status, Summary};
