//! Command-line front end: instance files, subcommands, result documents.

pub mod commands;
pub mod exit;
pub mod instance_file;
pub mod report;

pub use commands::{main_with, run, Outcome};
