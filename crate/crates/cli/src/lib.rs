//! Command-line surface over `elias-core`: ring and ideal parsing, reports
//! and the regression corpus runner.

pub mod corpus;
pub mod error;
pub mod parse;
pub mod report;

pub use error::CliError;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const MISMATCH: u8 = 1;
    pub const USAGE: u8 = 2;
}
