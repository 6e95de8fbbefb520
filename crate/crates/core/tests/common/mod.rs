//! Shared fixtures, random instance generators, and a brute-force oracle that
//! works from joint probabilities without ever forming a posterior.

#![allow(dead_code)]

use std::path::PathBuf;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use voikit::cli::{parse_problem_file, LoadedProblem};
use voikit::model::{DecisionProblem, MeasurementDef, MeasurementModel, ProblemDef};

pub mod tables;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

pub fn load_bundled(name: &str) -> LoadedProblem {
    let text = std::fs::read_to_string(data_path(name)).unwrap();
    parse_problem_file(&text).unwrap()
}

pub fn frog() -> LoadedProblem {
    load_bundled("frog.json")
}

pub fn turtle() -> LoadedProblem {
    load_bundled("turtle.json")
}

/// Random distribution over `n` items; roughly one entry in five is zero
/// when `allow_zeros` is set (at least one entry stays positive).
pub fn random_distribution(rng: &mut ChaCha8Rng, n: usize, allow_zeros: bool) -> Vec<f64> {
    let mut w: Vec<f64> = (0..n)
        .map(|_| {
            if allow_zeros && rng.gen_bool(0.2) {
                0.0
            } else {
                rng.gen_range(0.01..1.0)
            }
        })
        .collect();
    if w.iter().all(|&x| x == 0.0) {
        w[rng.gen_range(0..n)] = 1.0;
    }
    let total: f64 = w.iter().sum();
    w.iter().map(|x| x / total).collect()
}

pub fn random_problem(
    rng: &mut ChaCha8Rng,
    max_states: usize,
    max_actions: usize,
) -> DecisionProblem {
    let ns = rng.gen_range(1..=max_states);
    let na = rng.gen_range(1..=max_actions);
    let prior = random_distribution(rng, ns, true);
    DecisionProblem::new(ProblemDef {
        name: "random".into(),
        states: prior
            .into_iter()
            .enumerate()
            .map(|(i, p)| (format!("s{i}"), p))
            .collect(),
        actions: (0..na).map(|i| format!("a{i}")).collect(),
        values: (0..na)
            .map(|_| (0..ns).map(|_| rng.gen_range(-10.0..10.0)).collect())
            .collect(),
    })
    .unwrap()
}

pub fn random_measurement(
    rng: &mut ChaCha8Rng,
    states: usize,
    max_outcomes: usize,
) -> MeasurementModel {
    let no = rng.gen_range(1..=max_outcomes);
    MeasurementModel::new(MeasurementDef {
        name: "random".into(),
        outcomes: (0..no).map(|i| format!("x{i}")).collect(),
        likelihood: (0..states)
            .map(|_| random_distribution(rng, no, true))
            .collect(),
    })
    .unwrap()
}

/// Reference metrics computed from the joint table `p(x, s)` only.
#[derive(Debug, Clone)]
pub struct Oracle {
    pub ev: Vec<f64>,
    pub a_star: usize,
    pub ev_uncertainty: f64,
    pub ev_certainty: f64,
    /// Per possible outcome: (index, p(x), max_a PEV_x(a), PEV_x(a*), argmax).
    pub outcomes: Vec<(usize, f64, f64, f64, usize)>,
    pub evsi: f64,
}

impl Oracle {
    #[allow(clippy::needless_range_loop)]
    pub fn new(p: &DecisionProblem, m: &MeasurementModel) -> Self {
        let ns = p.state_count();
        let na = p.action_count();
        let prior = p.prior().probs();

        let mut ev = vec![0.0; na];
        for a in 0..na {
            for s in 0..ns {
                ev[a] += p.value(a, s) * prior[s];
            }
        }
        let mut a_star = 0;
        for a in 1..na {
            if ev[a] > ev[a_star] {
                a_star = a;
            }
        }

        let mut ev_certainty = 0.0;
        for s in 0..ns {
            let mut best = f64::NEG_INFINITY;
            for a in 0..na {
                best = best.max(p.value(a, s));
            }
            ev_certainty += prior[s] * best;
        }

        let mut outcomes = Vec::new();
        let mut ev_less = 0.0;
        for x in 0..m.outcome_count() {
            let px: f64 = (0..ns).map(|s| m.likelihood(s, x) * prior[s]).sum();
            if px <= 0.0 {
                continue;
            }
            // unnormalized posterior expectations: sum_s V(a,s) p(x|s) p(s)
            let joint_ev: Vec<f64> = (0..na)
                .map(|a| {
                    (0..ns)
                        .map(|s| p.value(a, s) * m.likelihood(s, x) * prior[s])
                        .sum()
                })
                .collect();
            let mut best = 0;
            for a in 1..na {
                if joint_ev[a] / px > joint_ev[best] / px {
                    best = a;
                }
            }
            ev_less += joint_ev[best];
            outcomes.push((x, px, joint_ev[best] / px, joint_ev[a_star] / px, best));
        }

        Oracle {
            ev_uncertainty: ev[a_star],
            evsi: ev_less - ev[a_star],
            ev,
            a_star,
            ev_certainty,
            outcomes,
        }
    }
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

/// Relative closeness with an absolute floor for exact zeros.
pub fn close_rel(a: f64, b: f64, rel: f64) -> bool {
    let diff = (a - b).abs();
    diff <= rel * a.abs().max(b.abs()) || diff <= 1e-12
}
