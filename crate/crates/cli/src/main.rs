use std::process::ExitCode;

use majorant_cli::{execute, parse_args, thread_cap, ConfigError};

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("{msg}");
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let config = match parse_args(std::env::args_os().skip(1)) {
        Ok(c) => c,
        Err(ConfigError::Info(text)) => {
            print!("{text}");
            return ExitCode::SUCCESS;
        }
        Err(e @ ConfigError::Usage(_)) => return fail(2, e),
        Err(e) => return fail(2, format!("error: {e}")),
    };
    match thread_cap() {
        Ok(Some(n)) => {
            if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                return fail(2, format!("error: cannot size thread pool: {e}"));
            }
        }
        Ok(None) => {}
        Err(e) => return fail(2, format!("error: {e}")),
    }
    match execute(&config) {
        Ok(report) => {
            eprintln!("{:?}: {:?} in {:.3} s", config.command, report.verdict, report.wall_time);
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => fail(e.exit_code() as u8, format!("error: {e}")),
    }
}
