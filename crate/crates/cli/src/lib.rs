//! Command-line front end: JSON file formats, subcommand dispatch, and the
//! built-in catalog of worked examples.

pub mod catalog;
pub mod commands;
pub mod error;
pub mod format;

pub use commands::{run, Cli};
pub use error::{CliError, CliResult};
