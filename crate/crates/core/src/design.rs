//! Ranking competing measurement designs.
//!
//! Taking the per-outcome utility of design `d` to be `u(d, x) = VSI_x(d)`
//! makes the expected utility `u(d) = sum_x p(x | d) VSI_x(d)` equal to the
//! design's EVSI, so picking the best experiment is an ordinary
//! expected-utility maximization over designs.

use std::thread;

use crate::error::{Result, VoiError};
use crate::model::{DecisionProblem, MeasurementModel};
use crate::voi::{analyze, argmax, VoiReport};

#[derive(Debug, Clone, PartialEq)]
pub struct DesignSummary {
    pub name: String,
    pub expected_utility: f64,
    pub sigma_vsi: f64,
    pub report: VoiReport,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DesignComparison {
    /// Designs in input order.
    pub designs: Vec<DesignSummary>,
    pub best_design: usize,
}

impl DesignComparison {
    pub fn best(&self) -> &DesignSummary {
        &self.designs[self.best_design]
    }

    pub fn get(&self, name: &str) -> Option<&DesignSummary> {
        self.designs.iter().find(|d| d.name == name)
    }
}

/// Expected utility `u(d)` of one design.
pub fn design_utility(problem: &DecisionProblem, m: &MeasurementModel) -> Result<f64> {
    Ok(analyze(problem, m, &[])?.evsi)
}

/// Evaluates every design and marks the EVSI maximizer (earliest wins ties).
pub fn compare_designs(
    problem: &DecisionProblem,
    designs: &[MeasurementModel],
    deltas: &[f64],
) -> Result<DesignComparison> {
    if designs.is_empty() {
        return Err(VoiError::NoDesigns);
    }

    let reports: Vec<Result<VoiReport>> = thread::scope(|scope| {
        let handles: Vec<_> = designs
            .iter()
            .map(|m| scope.spawn(move || analyze(problem, m, deltas)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("design analysis panicked"))
            .collect()
    });

    let designs = designs
        .iter()
        .zip(reports)
        .map(|(m, report)| {
            let report = report?;
            Ok(DesignSummary {
                name: m.name().to_string(),
                expected_utility: report.evsi,
                sigma_vsi: report.sigma_vsi,
                report,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let utilities: Vec<f64> = designs.iter().map(|d| d.expected_utility).collect();
    let (best_design, _) = argmax(&utilities);
    Ok(DesignComparison {
        designs,
        best_design,
    })
}
