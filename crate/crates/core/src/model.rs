//! Decision problems, measurement models, and the standard likelihood
//! constructors.
//!
//! Raw input arrives as [`ProblemDef`] / [`MeasurementDef`] plain data. The
//! `validate_*` functions report every broken invariant at once; the checked
//! types [`DecisionProblem`] and [`MeasurementModel`] can only be built from
//! input that passes them, and are immutable afterwards.

use std::collections::HashSet;

use crate::error::{Result, Validation, VoiError};

/// Tolerance on probability sums for user-supplied distributions.
pub const PROB_TOLERANCE: f64 = 1e-9;

/// Binomial coefficients switch to log space above this trial size.
const DIRECT_BINOMIAL_MAX_N: u32 = 60;

/// A normalized distribution over a finite set of labeled items.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbVector {
    labels: Vec<String>,
    probs: Vec<f64>,
}

impl ProbVector {
    pub fn new(entries: Vec<(String, f64)>) -> Result<Self> {
        let (labels, probs): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
        let mut v = Validation::default();
        check_labels(&labels, "labels", &mut v);
        check_distribution(&probs, "probabilities", &mut v);
        v.into_result()?;
        Ok(Self { labels, probs })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn get(&self, label: &str) -> Option<f64> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| self.probs[i])
    }
}

/// Unchecked description of a decision problem.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemDef {
    pub name: String,
    /// State labels with their prior probabilities, in order.
    pub states: Vec<(String, f64)>,
    pub actions: Vec<String>,
    /// Value table, one row per action, one column per state.
    pub values: Vec<Vec<f64>>,
}

/// Unchecked description of a measurement: likelihood rows are indexed by
/// state, columns by outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementDef {
    pub name: String,
    pub outcomes: Vec<String>,
    pub likelihood: Vec<Vec<f64>>,
}

/// A validated decision problem: prior over states, actions, and the value
/// table `V(a, s)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionProblem {
    name: String,
    prior: ProbVector,
    actions: Vec<String>,
    // row-major, action x state
    values: Vec<f64>,
}

impl DecisionProblem {
    pub fn new(def: ProblemDef) -> Result<Self> {
        validate_problem(&def).into_result()?;
        let (labels, probs) = def.states.into_iter().unzip();
        Ok(Self {
            name: def.name,
            prior: ProbVector { labels, probs },
            actions: def.actions,
            values: def.values.into_iter().flatten().collect(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn prior(&self) -> &ProbVector {
        &self.prior
    }

    pub fn states(&self) -> &[String] {
        self.prior.labels()
    }

    pub fn actions(&self) -> &[String] {
        &self.actions
    }

    pub fn state_count(&self) -> usize {
        self.prior.len()
    }

    pub fn action_count(&self) -> usize {
        self.actions.len()
    }

    pub fn value(&self, action: usize, state: usize) -> f64 {
        self.values[action * self.state_count() + state]
    }

    /// Values of one action across all states.
    pub fn value_row(&self, action: usize) -> &[f64] {
        let n = self.state_count();
        &self.values[action * n..(action + 1) * n]
    }

    pub fn to_def(&self) -> ProblemDef {
        ProblemDef {
            name: self.name.clone(),
            states: self
                .prior
                .labels
                .iter()
                .cloned()
                .zip(self.prior.probs.iter().copied())
                .collect(),
            actions: self.actions.clone(),
            values: (0..self.action_count())
                .map(|a| self.value_row(a).to_vec())
                .collect(),
        }
    }
}

/// A validated likelihood table `p(x | s)` for one design.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementModel {
    name: String,
    outcomes: Vec<String>,
    // row-major, state x outcome
    likelihood: Vec<f64>,
    state_count: usize,
}

impl MeasurementModel {
    /// Checks the measurement's own invariants. Agreement with a problem's
    /// state count is checked by [`validate_measurement`] and at analysis time.
    pub fn new(def: MeasurementDef) -> Result<Self> {
        validate_measurement_rows(&def).into_result()?;
        Ok(Self {
            name: def.name,
            outcomes: def.outcomes,
            state_count: def.likelihood.len(),
            likelihood: def.likelihood.into_iter().flatten().collect(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn outcomes(&self) -> &[String] {
        &self.outcomes
    }

    pub fn outcome_count(&self) -> usize {
        self.outcomes.len()
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn likelihood(&self, state: usize, outcome: usize) -> f64 {
        self.likelihood[state * self.outcome_count() + outcome]
    }

    pub fn likelihood_row(&self, state: usize) -> &[f64] {
        let n = self.outcome_count();
        &self.likelihood[state * n..(state + 1) * n]
    }

    pub fn to_def(&self) -> MeasurementDef {
        MeasurementDef {
            name: self.name.clone(),
            outcomes: self.outcomes.clone(),
            likelihood: (0..self.state_count)
                .map(|s| self.likelihood_row(s).to_vec())
                .collect(),
        }
    }
}

/// Checks every invariant of a decision problem.
pub fn validate_problem(def: &ProblemDef) -> Validation {
    let mut v = Validation::default();

    if def.states.is_empty() {
        v.push("states", "at least one state is required");
    }
    if def.actions.is_empty() {
        v.push("actions", "at least one action is required");
    }

    let labels: Vec<String> = def.states.iter().map(|(l, _)| l.clone()).collect();
    let priors: Vec<f64> = def.states.iter().map(|(_, p)| *p).collect();
    check_labels(&labels, "states", &mut v);
    check_distribution(&priors, "states", &mut v);
    check_labels(&def.actions, "actions", &mut v);

    if def.values.len() != def.actions.len() {
        v.push(
            "values",
            format!(
                "{} rows for {} actions",
                def.values.len(),
                def.actions.len()
            ),
        );
    }
    for (a, row) in def.values.iter().enumerate() {
        if row.len() != def.states.len() {
            v.push(
                format!("values[{a}]"),
                format!("{} columns for {} states", row.len(), def.states.len()),
            );
        }
        for (s, x) in row.iter().enumerate() {
            if !x.is_finite() {
                v.push(format!("values[{a}][{s}]"), format!("non-finite value {x}"));
            }
        }
    }
    v
}

/// Checks a measurement's own invariants and its agreement with `problem`.
pub fn validate_measurement(problem: &DecisionProblem, def: &MeasurementDef) -> Validation {
    validate_measurement_for(problem.state_count(), def)
}

/// Same checks as [`validate_measurement`], given only the number of states.
pub fn validate_measurement_for(state_count: usize, def: &MeasurementDef) -> Validation {
    let mut v = validate_measurement_rows(def);
    if def.likelihood.len() != state_count {
        v.push(
            "likelihood",
            format!(
                "{} state rows for a problem with {} states",
                def.likelihood.len(),
                state_count
            ),
        );
    }
    v
}

fn validate_measurement_rows(def: &MeasurementDef) -> Validation {
    let mut v = Validation::default();
    if def.name.trim().is_empty() {
        v.push("name", "measurement name must be non-empty");
    }
    if def.outcomes.is_empty() {
        v.push("outcomes", "at least one outcome is required");
    }
    check_labels(&def.outcomes, "outcomes", &mut v);
    if def.likelihood.is_empty() {
        v.push("likelihood", "at least one state row is required");
    }
    for (s, row) in def.likelihood.iter().enumerate() {
        let path = format!("likelihood[{s}]");
        if row.len() != def.outcomes.len() {
            v.push(
                path.clone(),
                format!("{} entries for {} outcomes", row.len(), def.outcomes.len()),
            );
        }
        check_distribution(row, &path, &mut v);
    }
    v
}

fn check_labels(labels: &[String], path: &str, v: &mut Validation) {
    let mut seen = HashSet::new();
    for (i, label) in labels.iter().enumerate() {
        if label.trim().is_empty() {
            v.push(format!("{path}[{i}]"), "label must be non-empty");
        } else if !seen.insert(label.as_str()) {
            v.push(format!("{path}[{i}]"), format!("duplicate label `{label}`"));
        }
    }
}

fn check_distribution(probs: &[f64], path: &str, v: &mut Validation) {
    let mut all_in_range = true;
    for (i, &p) in probs.iter().enumerate() {
        if !(0.0..=1.0).contains(&p) {
            all_in_range = false;
            v.push(
                format!("{path}[{i}]"),
                format!("probability {p} outside [0, 1]"),
            );
        }
    }
    if all_in_range && !probs.is_empty() {
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > PROB_TOLERANCE {
            v.push(path, format!("probabilities sum to {sum}, not 1"));
        }
    }
}

/// Identity measurement whose outcome reveals the state. Feeding it through
/// the imperfect-information pipeline yields the perfect-information metrics.
pub fn perfect_measurement(problem: &DecisionProblem) -> MeasurementModel {
    let n = problem.state_count();
    let likelihood = (0..n * n)
        .map(|k| if k / n == k % n { 1.0 } else { 0.0 })
        .collect();
    MeasurementModel {
        name: "perfect information".to_string(),
        outcomes: problem.states().to_vec(),
        likelihood,
        state_count: n,
    }
}

/// Likelihood of observing `x` survivors out of `n` independent trial
/// individuals, for each state's per-individual survival probability.
/// Outcomes are labeled `0..=n`.
pub fn binomial_trial(name: &str, n: u32, survival: &[f64]) -> Result<MeasurementModel> {
    let fail = |reason: String| VoiError::Binomial {
        name: name.to_string(),
        reason,
    };
    if n == 0 {
        return Err(fail("trial size must be at least 1".into()));
    }
    if survival.is_empty() {
        return Err(fail("at least one survival probability is required".into()));
    }
    if let Some((i, p)) = survival
        .iter()
        .enumerate()
        .find(|(_, p)| !(0.0..=1.0).contains(*p))
    {
        return Err(fail(format!("survival[{i}] = {p} outside [0, 1]")));
    }

    let width = n as usize + 1;
    let mut likelihood = Vec::with_capacity(survival.len() * width);
    for &p in survival {
        likelihood.extend(binomial_pmf_row(n, p));
    }
    Ok(MeasurementModel {
        name: name.to_string(),
        outcomes: (0..=n).map(|x| x.to_string()).collect(),
        likelihood,
        state_count: survival.len(),
    })
}

fn binomial_pmf_row(n: u32, p: f64) -> Vec<f64> {
    let width = n as usize + 1;
    // Degenerate rates put all mass on one end; avoids 0 * ln(0).
    if p == 0.0 || p == 1.0 {
        let mut row = vec![0.0; width];
        row[if p == 0.0 { 0 } else { n as usize }] = 1.0;
        return row;
    }

    if n <= DIRECT_BINOMIAL_MAX_N {
        let mut coeff = 1.0_f64;
        (0..=n)
            .map(|x| {
                if x > 0 {
                    coeff = coeff * f64::from(n - x + 1) / f64::from(x);
                }
                coeff * p.powi(x as i32) * (1.0 - p).powi((n - x) as i32)
            })
            .collect()
    } else {
        let (ln_p, ln_q) = (p.ln(), (-p).ln_1p());
        let mut ln_coeff = 0.0_f64;
        (0..=n)
            .map(|x| {
                if x > 0 {
                    ln_coeff += (f64::from(n - x + 1) / f64::from(x)).ln();
                }
                (ln_coeff + f64::from(x) * ln_p + f64::from(n - x) * ln_q).exp()
            })
            .collect()
    }
}
