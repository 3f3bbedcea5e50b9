//! Command-line verbs and the HTTP session service of the mutation workbench.

pub mod commands;
pub mod service;
pub mod session;

pub use commands::{execute, Cli, CliError, Command, Output};
