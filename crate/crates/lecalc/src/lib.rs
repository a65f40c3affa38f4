//! Command-line workbench over the polynomial, ideal, Lê cycle and class
//! calculus crates: parses line-oriented job files, runs one job per
//! invocation and emits a deterministic key/value report (all rationals are
//! serialized as `p/q`; nothing is ever a float).

mod commands;
mod jobfile;
mod report;

pub use commands::{run, CliError, Command, RunOptions, RunOutcome};
pub use jobfile::JobFile;
pub use report::ReportBuilder;

/// Process exit code for an error class.
pub fn exit_code(err: &CliError) -> i32 {
    match err {
        CliError::Input(_) => 2,
        CliError::Genericity(_) => 3,
        CliError::Resource(_) => 4,
        CliError::Gate(_) => 5,
    }
}
