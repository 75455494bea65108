//! Library side of the `splineqi` command-line tool.

pub mod args;
pub mod commands;
pub mod error;
pub mod reproduce;
pub mod table;

pub use error::CliError;
