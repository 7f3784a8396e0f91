use std::time::Instant;

use majorant::classes::{self, TRIAL_MAX_DEGREE};
use majorant::functions::{nehari_suite, sample_schwarz};
use majorant::grid::PolarGrid;
use majorant::radius::{self, DEFAULT_TOL_ROOT};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::config::{Command, ConfigError, Format, RunConfig};
use crate::figure::FigureData;
use crate::report::{ConfigEcho, RunReport, Verdict};

/// Nehari suite grid: radius, radii, angles.
pub const NEHARI_GRID: (f64, usize, usize) = (0.95, 16, 32);
/// Scan points of the flawed-theorem probe.
pub const THEOREM_A_POINTS: usize = 10_000;
/// `member` passes when `z g'/g` matches `cos ∘ φ` to this.
pub const RELATION_TOL: f64 = 1e-10;
pub const SOLVE_RESIDUAL_TOL: f64 = 1e-9;

pub const RADII_NOTE: &str =
    "the class radius r1 = 0.391389 is smaller than the classical radius sqrt(2) - 1 = 0.414214 \
and additionally assumes f'(0) = 1; both radii are reported and no improvement is asserted";

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("computation failed: {0}")]
    Compute(#[from] majorant::Error),
    #[error("serialization failed: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Config(_) => 2,
            _ => 1,
        }
    }
}

fn to_value<S: Serialize>(v: &S) -> Result<Value, RunError> {
    Ok(serde_json::to_value(v)?)
}

fn solve() -> Result<radius::RadiusResult<f64>, RunError> {
    Ok(radius::solve_radius(DEFAULT_TOL_ROOT)?)
}

/// Runs one command. The payload depends only on the config.
pub fn run(config: &RunConfig) -> Result<RunReport, RunError> {
    config.validate()?;
    let start = Instant::now();
    let (used_radius, verdict, payload, figure) = dispatch(config)?;
    Ok(RunReport {
        toolkit_version: majorant::VERSION,
        config: ConfigEcho::new(config, used_radius),
        verdict,
        payload,
        wall_time: start.elapsed().as_secs_f64(),
        figure,
    })
}

type Dispatched = (Option<f64>, Verdict, Value, Option<FigureData>);

fn dispatch(config: &RunConfig) -> Result<Dispatched, RunError> {
    let radius_or_r1 = || -> Result<f64, RunError> {
        match config.radius {
            Some(r) => Ok(r),
            None => Ok(solve()?.r1),
        }
    };
    Ok(match config.command {
        Command::Solve => {
            let res = solve()?;
            let ok = res.residual.abs() <= SOLVE_RESIDUAL_TOL && res.bracket.0 <= res.r1 && res.r1 <= res.bracket.1;
            (None, Verdict::from_pass(ok), to_value(&res)?, None)
        }
        Command::VerifyTheorem1 => {
            let r = radius_or_r1()?;
            let summary = classes::monte_carlo_majorization::<f64>(config.trials, config.seed, r, config.order)?;
            (Some(r), Verdict::from_pass(summary.violations == 0), to_value(&summary)?, None)
        }
        Command::VerifyMacgregor => {
            let summary = classes::macgregor_probe::<f64>(config.trials, config.seed, config.order)?;
            let payload = json!({
                "summary": summary,
                "macgregor_radius": classes::macgregor_radius::<f64>(),
                "r1": solve()?.r1,
                "note": RADII_NOTE,
            });
            (Some(summary.radius), Verdict::from_pass(summary.violations == 0), payload, None)
        }
        Command::VerifyNehari => {
            let (default_radius, radii, angles) = NEHARI_GRID;
            let r = config.radius.unwrap_or(default_radius);
            let grid = PolarGrid::new(r, radii, angles);
            let summary = nehari_suite::<f64>(config.trials, config.seed, TRIAL_MAX_DEGREE, &grid)?;
            let payload = json!({ "grid": grid, "summary": summary });
            (Some(r), Verdict::from_pass(summary.violations == 0), payload, None)
        }
        Command::ProbeFlaw => {
            let report = classes::flawed_definition_probe(&classes::flaw_fixtures::<f64>(config.order)?)?;
            (None, Verdict::Informational, to_value(&report)?, None)
        }
        Command::ProbeTheoremA => {
            let report = radius::theorem_a_probe::<f64>(THEOREM_A_POINTS)?;
            (None, Verdict::Informational, to_value(&report)?, None)
        }
        Command::Member => {
            let r = radius_or_r1()?;
            let member = classes::generate_member(&sample_schwarz::<f64>(config.seed, TRIAL_MAX_DEGREE), config.order)?;
            let membership = classes::membership_check(&member.g, r)?;
            let ok = membership.passed && member.certificate.relation_residual <= RELATION_TOL;
            let payload = json!({
                "phi": member.phi.factor(),
                "g": member.g,
                "certificate": member.certificate,
                "membership": membership,
            });
            (Some(r), Verdict::from_pass(ok), payload, None)
        }
        Command::Plot => {
            let figure = config.figure.ok_or_else(|| ConfigError::Usage("plot needs a figure".into()))?;
            let data = FigureData::build(figure)?;
            (None, Verdict::Informational, to_value(&data)?, Some(data))
        }
    })
}

/// The report in the configured format. CSV and SVG carry only the figure.
pub fn render(report: &RunReport, format: Format) -> Result<String, RunError> {
    let figure = || {
        report.figure.as_ref().ok_or_else(|| ConfigError::Invalid {
            field: "format",
            message: format!("{format:?} output is only available for plot"),
        })
    };
    Ok(match format {
        Format::Json => report.to_json()?,
        Format::Csv => figure()?.to_csv()?,
        Format::Svg => figure()?.to_svg(),
    })
}

/// Runs, renders, and writes to the output path or stdout.
pub fn execute(config: &RunConfig) -> Result<RunReport, RunError> {
    let report = run(config)?;
    let text = render(&report, config.format)?;
    match &config.output_path {
        Some(path) => std::fs::write(path, text)?,
        None => {
            use std::io::Write;
            std::io::stdout().lock().write_all(text.as_bytes())?;
        }
    }
    Ok(report)
}
