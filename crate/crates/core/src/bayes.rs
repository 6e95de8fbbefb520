//! Predictive outcome distribution and per-outcome posteriors.

use crate::error::{Result, VoiError};
use crate::model::{DecisionProblem, MeasurementModel};

/// `p(x)` and `p(s | x)` for every outcome of one measurement.
#[derive(Debug, Clone, PartialEq)]
pub struct PosteriorTable {
    outcomes: Vec<String>,
    predictive: Vec<f64>,
    /// One posterior over states per outcome; `None` where `p(x) = 0`.
    posteriors: Vec<Option<Vec<f64>>>,
    zero_outcomes: Vec<String>,
}

impl PosteriorTable {
    pub fn outcomes(&self) -> &[String] {
        &self.outcomes
    }

    pub fn predictive(&self) -> &[f64] {
        &self.predictive
    }

    /// Posterior over states given outcome `j`, in problem state order.
    pub fn posterior(&self, outcome: usize) -> Option<&[f64]> {
        self.posteriors[outcome].as_deref()
    }

    /// Outcomes that cannot occur under the prior.
    pub fn zero_outcomes(&self) -> &[String] {
        &self.zero_outcomes
    }

    /// Indices of outcomes with positive predictive probability.
    pub fn possible(&self) -> impl Iterator<Item = usize> + '_ {
        self.posteriors
            .iter()
            .enumerate()
            .filter_map(|(j, p)| p.as_ref().map(|_| j))
    }
}

/// Applies Bayes' rule to every outcome of `m`.
pub fn posterior_table(problem: &DecisionProblem, m: &MeasurementModel) -> Result<PosteriorTable> {
    if m.state_count() != problem.state_count() {
        return Err(VoiError::DimensionMismatch {
            what: "measurement likelihood",
            expected: problem.state_count(),
            found: m.state_count(),
        });
    }
    let prior = problem.prior().probs();

    let mut predictive = Vec::with_capacity(m.outcome_count());
    let mut posteriors = Vec::with_capacity(m.outcome_count());
    let mut zero_outcomes = Vec::new();

    for (j, label) in m.outcomes().iter().enumerate() {
        let joint: Vec<f64> = prior
            .iter()
            .enumerate()
            .map(|(s, p)| m.likelihood(s, j) * p)
            .collect();
        let px: f64 = joint.iter().sum();
        predictive.push(px);
        if px > 0.0 {
            posteriors.push(Some(joint.into_iter().map(|q| q / px).collect()));
        } else {
            posteriors.push(None);
            zero_outcomes.push(label.clone());
        }
    }

    Ok(PosteriorTable {
        outcomes: m.outcomes().to_vec(),
        predictive,
        posteriors,
        zero_outcomes,
    })
}
