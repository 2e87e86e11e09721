//! Command-line workbench over `trisect-core`: configuration, reports and
//! the reproduction harness for the bundled worked examples.

pub mod commands;
pub mod config;
pub mod error;
pub mod fixtures;
pub mod report;
pub mod reproduce;

pub use commands::{run, Cli};
pub use error::{exit, CliError};
