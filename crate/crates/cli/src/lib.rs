//! Command-line front end for the `oddcycle` library.

pub mod app;
pub mod format;

pub use app::{run, CliError};
pub use format::{emit_graph, parse_graph, GraphFile, ParseError};
