//! Command-line surface for `polycoef`, plus the pieces that need `std`:
//! CSV output and thread-parallel drivers.

pub mod cli;
pub mod csv_out;
pub mod parallel;

pub use cli::{run, CliError};
