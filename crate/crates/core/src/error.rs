use std::fmt;

use thiserror::Error;

/// A single broken invariant, located by a field path such as
/// `measurements[0].likelihood[1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub path: String,
    pub message: String,
}

impl Violation {
    pub fn new(path: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            path: path.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

/// Outcome of a validation pass. Collects every violation, not just the first.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Validation {
    pub violations: Vec<Violation>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn push(&mut self, path: impl Into<String>, message: impl Into<String>) {
        self.violations.push(Violation::new(path, message));
    }

    pub(crate) fn extend(&mut self, other: Validation) {
        self.violations.extend(other.violations);
    }

    /// Prefixes every violation path, e.g. to nest a measurement's
    /// violations under `measurements[2]`.
    pub(crate) fn nested(mut self, prefix: &str) -> Self {
        for v in &mut self.violations {
            v.path = if v.path.is_empty() {
                prefix.to_string()
            } else {
                format!("{prefix}.{}", v.path)
            };
        }
        self
    }

    pub fn into_result(self) -> Result<(), VoiError> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(VoiError::Invalid(self))
        }
    }
}

impl fmt::Display for Validation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum VoiError {
    #[error("validation failed:\n{0}")]
    Invalid(Validation),

    #[error("dimension mismatch: {what} has {found}, expected {expected}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("binomial trial `{name}`: {reason}")]
    Binomial { name: String, reason: String },

    #[error("delta threshold must be finite and non-negative, got {0}")]
    NegativeDelta(f64),

    #[error("internal arithmetic fault: VSI for outcome `{outcome}` is {vsi:e}")]
    ArithmeticFault { outcome: String, vsi: f64 },

    #[error("no measurement designs to compare")]
    NoDesigns,
}

pub type Result<T, E = VoiError> = std::result::Result<T, E>;
