//! Command-line front end for `bott-kit`.

pub mod commands;
pub mod input;
pub mod report;

pub use commands::{execute, Cli, CliError, Command, Format};
pub use report::{Document, Report, SCHEMA};
