//! Problem file format.
//!
//! ```json
//! {
//!   "name": "frog",
//!   "states": [{"label": "disease present", "prior": 0.5}, ...],
//!   "actions": ["translocate", "do nothing"],
//!   "values": [[55, 135], [100, 100]],
//!   "measurements": [
//!     {"name": "disease-test", "outcomes": ["positive", "negative"],
//!      "likelihood": [[0.73, 0.27], [0.06, 0.94]]},
//!     {"name": "d1", "binomial": {"n": 10, "survival": [0.85, 0.72, 0.68]}}
//!   ],
//!   "deltas": [0]
//! }
//! ```
//!
//! `values` rows follow `actions`; `likelihood` rows follow `states`.
//! Unknown keys are rejected.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Validation, VoiError};
use crate::model::{
    binomial_trial, validate_measurement_for, validate_problem, DecisionProblem, MeasurementDef,
    MeasurementModel, ProblemDef,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub name: String,
    pub states: Vec<StateEntry>,
    pub actions: Vec<String>,
    pub values: Vec<Vec<f64>>,
    #[serde(default)]
    pub measurements: Vec<MeasurementEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deltas: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateEntry {
    pub label: String,
    pub prior: f64,
}

/// Either an explicit likelihood table or a generative binomial trial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeasurementEntry {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outcomes: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub likelihood: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub binomial: Option<BinomialEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BinomialEntry {
    pub n: u32,
    pub survival: Vec<f64>,
}

/// A parsed and validated problem file.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadedProblem {
    pub file: ProblemFile,
    pub problem: DecisionProblem,
    pub measurements: Vec<MeasurementModel>,
    /// Thresholds from the file, or `[0]` when it names none.
    pub deltas: Vec<f64>,
}

impl LoadedProblem {
    pub fn measurement(&self, name: &str) -> Option<&MeasurementModel> {
        self.measurements.iter().find(|m| m.name() == name)
    }
}

#[derive(Debug)]
pub enum FileError {
    Syntax {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    Invalid(Validation),
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FileError::Syntax {
                path,
                line,
                column,
                message,
            } => write!(f, "line {line}, column {column}: at `{path}`: {message}"),
            FileError::Invalid(v) => write!(f, "{v}"),
        }
    }
}

impl std::error::Error for FileError {}

pub fn parse_problem_file(text: &str) -> Result<LoadedProblem, FileError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let file: ProblemFile = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        FileError::Syntax {
            path,
            line: inner.line(),
            column: inner.column(),
            message: inner.to_string(),
        }
    })?;
    build(file)
}

/// Checks and expands a document into analysis-ready models.
pub fn build(file: ProblemFile) -> Result<LoadedProblem, FileError> {
    let def = ProblemDef {
        name: file.name.clone(),
        states: file
            .states
            .iter()
            .map(|s| (s.label.clone(), s.prior))
            .collect(),
        actions: file.actions.clone(),
        values: file.values.clone(),
    };
    let mut v = validate_problem(&def);
    if let Some(deltas) = &file.deltas {
        for (i, d) in deltas.iter().enumerate() {
            if !(d.is_finite() && *d >= 0.0) {
                v.push(
                    format!("deltas[{i}]"),
                    format!("threshold {d} must be >= 0"),
                );
            }
        }
    }

    let state_count = def.states.len();
    let mut names = HashSet::new();
    let mut measurements = Vec::with_capacity(file.measurements.len());
    for (i, entry) in file.measurements.iter().enumerate() {
        let prefix = format!("measurements[{i}]");
        if !names.insert(entry.name.as_str()) {
            v.push(
                format!("{prefix}.name"),
                format!("duplicate measurement name `{}`", entry.name),
            );
        }
        match expand_measurement(state_count, entry) {
            Ok(m) => measurements.push(m),
            Err(errs) => v.extend(errs.nested(&prefix)),
        }
    }
    if !v.is_valid() {
        return Err(FileError::Invalid(v));
    }
    let problem = DecisionProblem::new(def).map_err(from_model_error)?;

    let deltas = file.deltas.clone().unwrap_or_else(|| vec![0.0]);
    Ok(LoadedProblem {
        file,
        problem,
        measurements,
        deltas,
    })
}

fn expand_measurement(
    state_count: usize,
    entry: &MeasurementEntry,
) -> Result<MeasurementModel, Validation> {
    let mut v = Validation::default();
    let def = match (&entry.outcomes, &entry.likelihood, &entry.binomial) {
        (Some(outcomes), Some(likelihood), None) => MeasurementDef {
            name: entry.name.clone(),
            outcomes: outcomes.clone(),
            likelihood: likelihood.clone(),
        },
        (None, None, Some(b)) => {
            if b.survival.len() != state_count {
                v.push(
                    "binomial.survival",
                    format!(
                        "{} survival probabilities for {} states",
                        b.survival.len(),
                        state_count
                    ),
                );
                return Err(v);
            }
            match binomial_trial(&entry.name, b.n, &b.survival) {
                Ok(m) => m.to_def(),
                Err(e) => {
                    v.push("binomial", e.to_string());
                    return Err(v);
                }
            }
        }
        _ => {
            v.push(
                "",
                "give either `outcomes` with `likelihood`, or `binomial`",
            );
            return Err(v);
        }
    };
    v.extend(validate_measurement_for(state_count, &def));
    if !v.is_valid() {
        return Err(v);
    }
    MeasurementModel::new(def).map_err(|e| match e {
        VoiError::Invalid(v) => v,
        other => {
            v.push("", other.to_string());
            v
        }
    })
}

fn from_model_error(e: VoiError) -> FileError {
    match e {
        VoiError::Invalid(v) => FileError::Invalid(v),
        other => {
            let mut v = Validation::default();
            v.push("", other.to_string());
            FileError::Invalid(v)
        }
    }
}

/// Canonical text form: pretty-printed with shortest round-trip numbers.
pub fn render_problem_file(file: &ProblemFile) -> String {
    let mut s = serde_json::to_string_pretty(file).expect("problem file serializes");
    s.push('\n');
    s
}
