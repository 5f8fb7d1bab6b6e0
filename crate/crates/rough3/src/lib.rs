//! File formats and the command-line front end for `rough3-core`.
//!
//! - [`table`] reads information tables from CSV;
//! - [`formats`] defines the JSON written and read by the tool;
//! - [`cli`] parses arguments and runs commands.

pub mod cli;
pub mod formats;
pub mod table;
