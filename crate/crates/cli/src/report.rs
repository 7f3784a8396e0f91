use std::path::PathBuf;

use serde::Serialize;

use crate::config::{Command, Figure, Format, RunConfig};
use crate::figure::FigureData;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Informational,
}

impl Verdict {
    pub fn from_pass(passed: bool) -> Self {
        if passed {
            Self::Pass
        } else {
            Self::Fail
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Self::Pass | Self::Informational => 0,
            Self::Fail => 1,
        }
    }
}

/// The configuration as the command actually ran it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConfigEcho {
    pub command: Command,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub figure: Option<Figure>,
    pub seed: u64,
    pub trials: usize,
    /// Radius the command used; absent for commands without one.
    pub radius: Option<f64>,
    pub order: usize,
    pub output_path: Option<PathBuf>,
    pub format: Format,
}

impl ConfigEcho {
    pub fn new(config: &RunConfig, radius: Option<f64>) -> Self {
        Self {
            command: config.command,
            figure: config.figure,
            seed: config.seed,
            trials: config.trials,
            radius,
            order: config.order,
            output_path: config.output_path.clone(),
            format: config.format,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub toolkit_version: &'static str,
    pub config: ConfigEcho,
    pub verdict: Verdict,
    pub payload: serde_json::Value,
    /// Seconds; kept out of the JSON so identical runs give identical bytes.
    #[serde(skip)]
    pub wall_time: f64,
    #[serde(skip)]
    pub figure: Option<FigureData>,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        self.verdict.exit_code()
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}
