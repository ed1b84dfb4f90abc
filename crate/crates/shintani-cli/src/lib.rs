//! File formats, reports, subcommands and the embedded self-test behind the `shintani` binary.

pub mod commands;
pub mod error;
pub mod fieldfile;
pub mod report;
pub mod selftest;

pub use error::CliError;
