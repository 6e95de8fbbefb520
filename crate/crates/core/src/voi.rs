//! Traditional and outcome-aware value-of-information metrics.
//!
//! For a problem with prior `p(s)`, values `V(a, s)` and a measurement with
//! predictive `p(x)` and posteriors `p(s | x)`:
//!
//! ```text
//! EV(a)               = sum_s V(a,s) p(s)
//! EV_uncertainty      = max_a EV(a),                a* = argmax
//! EV_certainty        = sum_s p(s) max_a V(a,s)
//! EVPI                = EV_certainty - EV_uncertainty
//! PEV_x(a)            = sum_s V(a,s) p(s|x)
//! EV_less_uncertainty = sum_x p(x) max_a PEV_x(a)
//! EVSI                = EV_less_uncertainty - EV_uncertainty
//! dEV_x               = max_a PEV_x(a) - EV_uncertainty
//! VSI_x               = max_a PEV_x(a) - PEV_x(a*)
//! sigma_VSI           = sqrt(sum_x p(x) (VSI_x - EVSI)^2)
//! rVSI_delta          = sum_{x : VSI_x <= delta} p(x)
//! ```
//!
//! Every argmax breaks ties toward the earliest action in input order.

use crate::bayes::posterior_table;
use crate::error::{Result, VoiError};
use crate::model::{perfect_measurement, DecisionProblem, MeasurementModel};

/// VSI below `-VSI_FAULT` cannot come from rounding; anything in
/// `[-VSI_FAULT, 0)` is clamped to 0.
const VSI_FAULT: f64 = 1e-6;
/// Slack on the inclusive `VSI_x <= delta` comparison.
const RISK_SLACK: f64 = 1e-9;

/// The action chosen without further information.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimalAction {
    pub index: usize,
    pub value: f64,
}

/// Per-outcome metrics.
#[derive(Debug, Clone, PartialEq)]
pub struct OutcomeRow {
    pub outcome: String,
    pub probability: f64,
    pub delta_ev: f64,
    pub vsi: f64,
    pub posterior_action: String,
    pub posterior_action_index: usize,
    pub action_changed: bool,
}

impl OutcomeRow {
    /// Short description of what happens to the recommended action.
    pub fn narration(&self) -> String {
        if self.action_changed {
            format!("{} instead", self.posterior_action)
        } else {
            format!("still {}", self.posterior_action)
        }
    }
}

/// `rVSI_delta` at one threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiskAtThreshold {
    pub delta: f64,
    pub probability: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VoiReport {
    pub actions: Vec<String>,
    pub ev_per_action: Vec<f64>,
    pub optimal_action: usize,
    pub ev_uncertainty: f64,
    pub ev_certainty: f64,
    pub evpi: f64,
    pub measurement: String,
    pub ev_less_uncertainty: f64,
    pub evsi: f64,
    pub sigma_vsi: f64,
    pub risk: Vec<RiskAtThreshold>,
    /// One row per possible outcome, in the measurement's outcome order.
    pub rows: Vec<OutcomeRow>,
    pub zero_outcomes: Vec<String>,
}

impl VoiReport {
    pub fn optimal_action_label(&self) -> &str {
        &self.actions[self.optimal_action]
    }

    /// `rVSI_delta` for an arbitrary threshold, computed from the rows.
    pub fn risk_of_low_value(&self, delta: f64) -> Result<f64> {
        check_delta(delta)?;
        Ok(self
            .rows
            .iter()
            .filter(|r| r.vsi <= delta + RISK_SLACK)
            .map(|r| r.probability)
            .sum())
    }

    /// Looks up a threshold requested at analysis time.
    pub fn risk_at(&self, delta: f64) -> Option<f64> {
        self.risk
            .iter()
            .find(|r| r.delta == delta)
            .map(|r| r.probability)
    }
}

/// `EV(a)` for each action, in action order.
pub fn expected_values(problem: &DecisionProblem) -> Vec<f64> {
    let prior = problem.prior().probs();
    (0..problem.action_count())
        .map(|a| dot(problem.value_row(a), prior))
        .collect()
}

pub fn ev_uncertainty(problem: &DecisionProblem) -> OptimalAction {
    let (index, value) = argmax(&expected_values(problem));
    OptimalAction { index, value }
}

pub fn ev_certainty(problem: &DecisionProblem) -> f64 {
    problem
        .prior()
        .probs()
        .iter()
        .enumerate()
        .map(|(s, p)| {
            let best = (0..problem.action_count())
                .map(|a| problem.value(a, s))
                .fold(f64::NEG_INFINITY, f64::max);
            p * best
        })
        .sum()
}

pub fn evpi(problem: &DecisionProblem) -> f64 {
    ev_certainty(problem) - ev_uncertainty(problem).value
}

/// Runs the full metric set for one measurement. An empty `deltas` slice
/// means the single default threshold 0.
pub fn analyze(
    problem: &DecisionProblem,
    m: &MeasurementModel,
    deltas: &[f64],
) -> Result<VoiReport> {
    for &d in deltas {
        check_delta(d)?;
    }
    let deltas = if deltas.is_empty() {
        &[0.0][..]
    } else {
        deltas
    };

    let ev_per_action = expected_values(problem);
    let (a_star, ev_unc) = argmax(&ev_per_action);
    let ev_cert = ev_certainty(problem);
    let table = posterior_table(problem, m)?;

    let mut rows = Vec::new();
    let mut ev_less = 0.0;
    for j in table.possible() {
        let post = table
            .posterior(j)
            .expect("possible outcome has a posterior");
        let px = table.predictive()[j];
        let pev: Vec<f64> = (0..problem.action_count())
            .map(|a| dot(problem.value_row(a), post))
            .collect();
        let (best, best_value) = argmax(&pev);

        let raw_vsi = best_value - pev[a_star];
        if raw_vsi < -VSI_FAULT {
            return Err(VoiError::ArithmeticFault {
                outcome: table.outcomes()[j].clone(),
                vsi: raw_vsi,
            });
        }
        let vsi = raw_vsi.max(0.0);

        ev_less += px * best_value;
        rows.push(OutcomeRow {
            outcome: table.outcomes()[j].clone(),
            probability: px,
            delta_ev: best_value - ev_unc,
            vsi,
            posterior_action: problem.actions()[best].clone(),
            posterior_action_index: best,
            action_changed: best != a_star,
        });
    }

    let evsi = ev_less - ev_unc;
    let variance: f64 = rows
        .iter()
        .map(|r| r.probability * (r.vsi - evsi).powi(2))
        .sum();

    let mut report = VoiReport {
        actions: problem.actions().to_vec(),
        ev_per_action,
        optimal_action: a_star,
        ev_uncertainty: ev_unc,
        ev_certainty: ev_cert,
        evpi: ev_cert - ev_unc,
        measurement: m.name().to_string(),
        ev_less_uncertainty: ev_less,
        evsi,
        sigma_vsi: variance.max(0.0).sqrt(),
        risk: Vec::with_capacity(deltas.len()),
        rows,
        zero_outcomes: table.zero_outcomes().to_vec(),
    };
    for &delta in deltas {
        let probability = report.risk_of_low_value(delta)?;
        report.risk.push(RiskAtThreshold { delta, probability });
    }
    Ok(report)
}

/// Outcome-aware metrics when the measurement reveals the state exactly.
pub fn perfect_info_report(problem: &DecisionProblem, deltas: &[f64]) -> Result<VoiReport> {
    analyze(problem, &perfect_measurement(problem), deltas)
}

fn check_delta(delta: f64) -> Result<()> {
    if delta.is_finite() && delta >= 0.0 {
        Ok(())
    } else {
        Err(VoiError::NegativeDelta(delta))
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// First index attaining the maximum.
pub(crate) fn argmax(xs: &[f64]) -> (usize, f64) {
    let mut best = (0, xs[0]);
    for (i, &x) in xs.iter().enumerate().skip(1) {
        if x > best.1 {
            best = (i, x);
        }
    }
    best
}
