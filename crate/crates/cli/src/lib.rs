//! Command-line front end: argument types, dispatch and report emission.

pub mod args;
pub mod commands;
pub mod dot;
pub mod error;
pub mod report;

pub use args::{Cli, Command, Format};
pub use commands::{run, Output};
pub use error::CliError;
pub use report::{Check, Report};
