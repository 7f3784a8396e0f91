use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, ValueEnum};
use serde::Serialize;
use thiserror::Error;

pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_TRIALS: usize = 1000;
pub const DEFAULT_ORDER: usize = majorant::series::DEFAULT_ORDER;
pub const MAX_RADIUS: f64 = 0.999;
pub const MIN_ORDER: usize = 2;
pub const MAX_ORDER: usize = 4096;
pub const MAX_TRIALS: usize = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    /// `--help` / `--version`; not a failure.
    #[error("{0}")]
    Info(String),
    #[error("{0}")]
    Usage(String),
    #[error("invalid {field}: {message}")]
    Invalid { field: &'static str, message: String },
}

impl ConfigError {
    fn invalid(field: &'static str, message: impl Into<String>) -> Self {
        Self::Invalid { field, message: message.into() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Solve the radius equation for r1.
    Solve,
    /// Seeded majorization trials |f'| <= |g'|.
    #[value(name = "verify-theorem1")]
    #[serde(rename = "verify-theorem1")]
    VerifyTheorem1,
    /// Seeded trials of the classical bound |f'| <= 1 at sqrt(2) - 1.
    VerifyMacgregor,
    /// Nehari bound on sampled bounded functions.
    VerifyNehari,
    /// Shows the 1 + cos z definition admits no normalized function.
    ProbeFlaw,
    /// Scans the radius function of the flawed theorem for roots.
    ProbeTheoremA,
    /// Builds and certifies one class member from a seeded Schwarz function.
    Member,
    /// Emits figure data.
    Plot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Svg,
}

/// Which figure `plot` emits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Figure {
    /// The closed curve cos(e^{iθ}).
    Boundary,
    /// The radius function k(r) on [0, 1].
    K,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: Command,
    /// Only set for `plot`.
    pub figure: Option<Figure>,
    pub seed: u64,
    pub trials: usize,
    /// `None` means r1 from a fresh solve (or the command's own fixed radius).
    pub radius: Option<f64>,
    pub order: usize,
    /// `None` writes to stdout.
    pub output_path: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            figure: (command == Command::Plot).then_some(Figure::Boundary),
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
            radius: None,
            order: DEFAULT_ORDER,
            output_path: None,
            format: if command == Command::Plot { Format::Csv } else { Format::Json },
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if let Some(r) = self.radius {
            if !(r > 0.0 && r <= MAX_RADIUS) {
                return Err(ConfigError::invalid("radius", format!("{r} is outside (0, {MAX_RADIUS}]")));
            }
            if self.command == Command::Member && r > majorant::classes::MAX_MEMBERSHIP_RADIUS {
                return Err(ConfigError::invalid(
                    "radius",
                    format!("member sampling radius {r} exceeds {}", majorant::classes::MAX_MEMBERSHIP_RADIUS),
                ));
            }
        }
        if self.trials == 0 || self.trials > MAX_TRIALS {
            return Err(ConfigError::invalid("trials", format!("{} is outside [1, {MAX_TRIALS}]", self.trials)));
        }
        if !(MIN_ORDER..=MAX_ORDER).contains(&self.order) {
            return Err(ConfigError::invalid("order", format!("{} is outside [{MIN_ORDER}, {MAX_ORDER}]", self.order)));
        }
        match (self.command, self.figure) {
            (Command::Plot, None) => return Err(ConfigError::invalid("figure", "plot needs a figure")),
            (Command::Plot, Some(_)) => {}
            (_, Some(_)) => return Err(ConfigError::invalid("figure", "only plot takes a figure")),
            (_, None) => {}
        }
        if self.command != Command::Plot && self.format != Format::Json {
            return Err(ConfigError::invalid("format", format!("{:?} output is only available for plot", self.format)));
        }
        Ok(())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "majorant",
    version,
    about = "Majorization and radius toolkit for the cos-starlike class",
    allow_negative_numbers = true
)]
struct Args {
    command: Command,
    /// Figure for `plot` (default: boundary).
    figure: Option<Figure>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    trials: Option<usize>,
    /// Sampling radius in (0, 0.999]; defaults to r1.
    #[arg(long)]
    radius: Option<f64>,
    /// Truncation order of all series.
    #[arg(long)]
    order: Option<usize>,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

/// Parses arguments without the program name; the first positional is the command.
pub fn parse_args<I, S>(argv: I) -> Result<RunConfig, ConfigError>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("majorant")).chain(argv.into_iter().map(Into::into));
    let args = Args::try_parse_from(argv).map_err(|e| match e.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
            ConfigError::Info(e.render().to_string())
        }
        _ => ConfigError::Usage(e.render().to_string().trim_end().to_owned()),
    })?;

    let mut config = RunConfig::new(args.command);
    if args.figure.is_some() {
        config.figure = args.figure;
    }
    config.seed = args.seed.unwrap_or(config.seed);
    config.trials = args.trials.unwrap_or(config.trials);
    config.radius = args.radius;
    config.order = args.order.unwrap_or(config.order);
    config.output_path = args.out;
    config.format = args.format.unwrap_or(config.format);
    config.validate()?;
    Ok(config)
}
