//! Instance files, reports and the command line on top of `novikov-core`.

pub mod cli;
pub mod error;
pub mod format;
pub mod report;

pub use error::{CliError, CliResult};
pub use report::Report;
