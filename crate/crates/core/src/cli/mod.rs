//! Command-line workflow: `analyze`, `compare`, `sweep`, `validate`.

pub mod file;
pub mod render;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::design::compare_designs;
use crate::error::{Validation, VoiError};
use crate::model::{perfect_measurement, MeasurementModel};
use crate::voi::analyze;

pub use file::{parse_problem_file, render_problem_file, FileError, LoadedProblem, ProblemFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_OTHER: i32 = 1;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_INVALID: i32 = 4;
pub const EXIT_ARITHMETIC: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "voikit",
    version,
    about = "Value-of-information analysis for discrete decision problems"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full metric report for one measurement
    Analyze {
        #[command(flatten)]
        target: Target,
        /// Comma-separated rVSI thresholds; overrides the file's `deltas`
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        deltas: Option<Vec<f64>>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Rank every measurement in the file by EVSI
    Compare {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        deltas: Option<Vec<f64>>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// rVSI over a grid of thresholds, as CSV
    Sweep {
        #[command(flatten)]
        target: Target,
        /// `start:stop:step`
        #[arg(long)]
        grid: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Parse and validate a problem file
    Validate { file: PathBuf },
}

#[derive(Debug, Args)]
pub struct Target {
    pub file: PathBuf,
    /// Measurement name; optional when the file has exactly one
    #[arg(long, conflicts_with = "perfect")]
    pub measurement: Option<String>,
    /// Use the perfect-information measurement instead
    #[arg(long)]
    pub perfect: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: parse error: {source}")]
    Parse { path: String, source: FileError },
    #[error("{path}: invalid problem:\n{validation}")]
    Invalid {
        path: String,
        validation: Validation,
    },
    #[error("{0}")]
    Analysis(VoiError),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } => EXIT_PARSE,
            CliError::Invalid { .. } => EXIT_INVALID,
            CliError::Analysis(VoiError::ArithmeticFault { .. }) => EXIT_ARITHMETIC,
            CliError::Analysis(_) => EXIT_INVALID,
            CliError::Usage(_) | CliError::Io { .. } | CliError::Csv(_) => EXIT_OTHER,
        }
    }
}

impl From<VoiError> for CliError {
    fn from(e: VoiError) -> Self {
        CliError::Analysis(e)
    }
}

/// A finished command: rendered text plus where it should go.
#[derive(Debug)]
pub struct Rendered {
    pub text: String,
    pub output: Option<PathBuf>,
}

pub fn run(cli: Cli) -> Result<Rendered, CliError> {
    match cli.command {
        Command::Analyze {
            target,
            deltas,
            format,
            output,
        } => {
            let loaded = load(&target.file)?;
            let m = select(&loaded, &target)?;
            let deltas = deltas.unwrap_or_else(|| loaded.deltas.clone());
            Ok(Rendered {
                text: cmd_analyze(&loaded, &m, &deltas, format)?,
                output,
            })
        }
        Command::Compare {
            file,
            deltas,
            format,
            output,
        } => {
            let loaded = load(&file)?;
            let deltas = deltas.unwrap_or_else(|| loaded.deltas.clone());
            Ok(Rendered {
                text: cmd_compare(&loaded, &deltas, format)?,
                output,
            })
        }
        Command::Sweep {
            target,
            grid,
            output,
        } => {
            let loaded = load(&target.file)?;
            let m = select(&loaded, &target)?;
            Ok(Rendered {
                text: cmd_sweep(&loaded, &m, &grid)?,
                output,
            })
        }
        Command::Validate { file } => {
            let loaded = load(&file)?;
            Ok(Rendered {
                text: format!(
                    "ok: `{}` with {} states, {} actions, {} measurement(s)\n",
                    loaded.problem.name(),
                    loaded.problem.state_count(),
                    loaded.problem.action_count(),
                    loaded.measurements.len()
                ),
                output: None,
            })
        }
    }
}

/// Writes `rendered` to its output path, or returns it for standard output.
pub fn emit(rendered: Rendered) -> Result<Option<String>, CliError> {
    match rendered.output {
        Some(path) => {
            fs::write(&path, rendered.text).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            Ok(None)
        }
        None => Ok(Some(rendered.text)),
    }
}

pub fn load(path: &Path) -> Result<LoadedProblem, CliError> {
    let display = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: display.clone(),
        source,
    })?;
    parse_problem_file(&text).map_err(|e| match e {
        FileError::Invalid(validation) => CliError::Invalid {
            path: display,
            validation,
        },
        source => CliError::Parse {
            path: display,
            source,
        },
    })
}

fn select(loaded: &LoadedProblem, target: &Target) -> Result<MeasurementModel, CliError> {
    if target.perfect {
        return Ok(perfect_measurement(&loaded.problem));
    }
    match &target.measurement {
        Some(name) => loaded.measurement(name).cloned().ok_or_else(|| {
            let known: Vec<_> = loaded.measurements.iter().map(|m| m.name()).collect();
            CliError::Usage(format!(
                "unknown measurement `{name}`; file has: {}",
                known.join(", ")
            ))
        }),
        None if loaded.measurements.len() == 1 => Ok(loaded.measurements[0].clone()),
        None => Err(CliError::Usage(format!(
            "file has {} measurements; pick one with --measurement or use --perfect",
            loaded.measurements.len()
        ))),
    }
}

pub fn cmd_analyze(
    loaded: &LoadedProblem,
    m: &MeasurementModel,
    deltas: &[f64],
    format: Format,
) -> Result<String, CliError> {
    let report = analyze(&loaded.problem, m, deltas)?;
    Ok(match format {
        Format::Table => render::analyze_table(loaded.problem.name(), &report),
        Format::Csv => render::analyze_csv(&report)?,
    })
}

pub fn cmd_compare(
    loaded: &LoadedProblem,
    deltas: &[f64],
    format: Format,
) -> Result<String, CliError> {
    let comparison = compare_designs(&loaded.problem, &loaded.measurements, deltas)?;
    Ok(match format {
        Format::Table => render::compare_table(loaded.problem.name(), &comparison),
        Format::Csv => render::compare_csv(&comparison)?,
    })
}

pub fn cmd_sweep(
    loaded: &LoadedProblem,
    m: &MeasurementModel,
    grid: &str,
) -> Result<String, CliError> {
    let grid = parse_grid(grid)?;
    let report = analyze(&loaded.problem, m, &[])?;
    let points = grid
        .iter()
        .map(|&d| Ok((d, report.risk_of_low_value(d)?)))
        .collect::<Result<Vec<_>, VoiError>>()?;
    Ok(render::sweep_csv(&points)?)
}

/// Expands `start:stop:step` into grid points. Points are snapped to the
/// largest number of decimals written in the grid so that `0:0.07:0.01`
/// yields `0.03` rather than `0.030000000000000002`.
pub fn parse_grid(grid: &str) -> Result<Vec<f64>, CliError> {
    let bad = |why: &str| CliError::Usage(format!("malformed grid `{grid}`: {why}"));
    let parts: Vec<&str> = grid.split(':').map(str::trim).collect();
    let [start_s, stop_s, step_s] = parts[..] else {
        return Err(bad("expected start:stop:step"));
    };
    let num = |s: &str| s.parse::<f64>().map_err(|_| bad("not a number"));
    let (start, stop, step) = (num(start_s)?, num(stop_s)?, num(step_s)?);
    if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
        return Err(bad("values must be finite"));
    }
    if start < 0.0 || stop < start {
        return Err(bad("need 0 <= start <= stop"));
    }
    if step <= 0.0 {
        return Err(bad("step must be positive"));
    }

    let decimals = [start_s, stop_s, step_s]
        .iter()
        .map(|s| s.split_once('.').map_or(0, |(_, frac)| frac.len()))
        .max()
        .unwrap_or(0);
    let count = ((stop - start) / step + 1e-9).floor() as usize;
    let scale = 10f64.powi(decimals as i32);
    Ok((0..=count)
        .map(|k| {
            let x = start + k as f64 * step;
            if decimals <= 15 && !grid.contains(['e', 'E']) {
                (x * scale).round() / scale
            } else {
                x
            }
        })
        .collect())
}
