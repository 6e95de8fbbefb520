//! Discrete Bayesian value-of-information analysis.
//!
//! Computes the classical metrics (EV, EVPI, EVSI) together with
//! outcome-aware measurement metrics: the per-outcome shift in expected value
//! `dEV_x`, the per-outcome value of sample information `VSI_x`, its spread
//! `sigma_VSI`, and the risk `rVSI_delta` that a measurement is worth no more
//! than `delta`. Competing measurement designs are ranked by expected
//! utility with `u(d, x) = VSI_x`.
//!
//! ```
//! use voikit::model::{DecisionProblem, MeasurementDef, MeasurementModel, ProblemDef};
//! use voikit::voi::analyze;
//!
//! let problem = DecisionProblem::new(ProblemDef {
//!     name: "frog".into(),
//!     states: vec![("disease present".into(), 0.5), ("disease absent".into(), 0.5)],
//!     actions: vec!["translocate".into(), "do nothing".into()],
//!     values: vec![vec![55.0, 135.0], vec![100.0, 100.0]],
//! })?;
//! let test = MeasurementModel::new(MeasurementDef {
//!     name: "disease-test".into(),
//!     outcomes: vec!["positive".into(), "negative".into()],
//!     likelihood: vec![vec![0.73, 0.27], vec![0.06, 0.94]],
//! })?;
//! let report = analyze(&problem, &test, &[0.0])?;
//! assert!((report.evsi - 10.4).abs() < 0.05);
//! assert!((report.risk_at(0.0).unwrap() - 0.395).abs() < 1e-9);
//! # Ok::<(), voikit::VoiError>(())
//! ```

pub mod bayes;
pub mod cli;
pub mod design;
pub mod error;
pub mod model;
pub mod voi;

pub use error::{Result, Validation, Violation, VoiError};
