//! Command-line surface over the workspace: relation sweeps, quasiinvariant
//! series, quiver and bow checks, and the acceptance battery.
//!
//! [`run`] parses an argument vector, executes it and returns the exit status
//! together with the JSON report. Exit status is 0 when every check passes,
//! 1 when a check fails, 2 on a usage error and 3 on an internal error.

pub mod acceptance;
pub mod args;
mod commands;
pub mod report;

pub use commands::{execute, Failure, Outcome};
pub use report::{run, Exit, Report};
