//! Command-line front end: argument parsing, dispatch to the toolkit, and
//! deterministic JSON / CSV / SVG reports.

pub mod config;
pub mod figure;
pub mod report;
pub mod run;

pub use config::{parse_args, Command, ConfigError, Figure, Format, RunConfig};
pub use figure::FigureData;
pub use report::{ConfigEcho, RunReport, Verdict};
pub use run::{execute, render, run, RunError};

/// Env var capping the worker threads.
pub const THREADS_ENV: &str = "MAJORANT_THREADS";

/// Reads [`THREADS_ENV`]; `Ok(None)` when unset or empty.
pub fn thread_cap() -> Result<Option<usize>, ConfigError> {
    match std::env::var(THREADS_ENV) {
        Ok(v) if !v.trim().is_empty() => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(ConfigError::Invalid {
                field: "MAJORANT_THREADS",
                message: format!("{v:?} is not a positive integer"),
            }),
        },
        _ => Ok(None),
    }
}
