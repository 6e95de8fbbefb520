//! Text and CSV renderers.
//!
//! Table mode rounds to 4 decimals. Rust's `{:.4}` formats the exact binary
//! value, so decimal ties round half to even. CSV carries every float in its
//! shortest round-trip decimal form.

use std::fmt::Write as _;

use crate::design::DesignComparison;
use crate::voi::VoiReport;

pub fn fixed4(x: f64) -> String {
    let s = format!("{x:.4}");
    if s == "-0.0000" {
        "0.0000".to_string()
    } else {
        s
    }
}

pub fn percent(p: f64) -> String {
    let s = format!("{:.1}%", p * 100.0);
    if s == "-0.0%" {
        "0.0%".to_string()
    } else {
        s
    }
}

/// Full-precision decimal rendering.
pub fn full(x: f64) -> String {
    format!("{x}")
}

pub fn risk_label(delta: f64) -> String {
    format!("rVSI_{delta}")
}

pub fn analyze_table(problem_name: &str, r: &VoiReport) -> String {
    let mut out = String::new();
    let width = r.actions.iter().map(|a| a.len()).max().unwrap_or(0);
    // fmt::Write into a String cannot fail.
    let _ = writeln!(out, "problem: {problem_name}");
    let _ = writeln!(out, "measurement: {}", r.measurement);
    let _ = writeln!(out);
    let _ = writeln!(out, "expected value per action");
    for (i, (a, ev)) in r.actions.iter().zip(&r.ev_per_action).enumerate() {
        let marker = if i == r.optimal_action { "  (a*)" } else { "" };
        let _ = writeln!(out, "  {a:<width$}  {}{marker}", fixed4(*ev));
    }
    let _ = writeln!(
        out,
        "EV_uncertainty = {} ({})",
        fixed4(r.ev_uncertainty),
        r.optimal_action_label()
    );
    let _ = writeln!(out, "EV_certainty = {}", fixed4(r.ev_certainty));
    let _ = writeln!(out, "EVPI = {}", fixed4(r.evpi));
    let _ = writeln!(
        out,
        "EV_less_uncertainty = {}",
        fixed4(r.ev_less_uncertainty)
    );
    let _ = writeln!(
        out,
        "EVSI ± σVSI = {} ± {}",
        fixed4(r.evsi),
        fixed4(r.sigma_vsi)
    );
    for risk in &r.risk {
        let _ = writeln!(
            out,
            "{} = {} ({})",
            risk_label(risk.delta),
            fixed4(risk.probability),
            percent(risk.probability)
        );
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "outcomes");
    for row in &r.rows {
        let _ = writeln!(
            out,
            "x={}: ΔEV={}, VSI={}, p={}, {}",
            row.outcome,
            fixed4(row.delta_ev),
            fixed4(row.vsi),
            fixed4(row.probability),
            row.narration()
        );
    }
    if !r.zero_outcomes.is_empty() {
        let _ = writeln!(out, "impossible outcomes: {}", r.zero_outcomes.join(", "));
    }
    out
}

pub fn analyze_csv(r: &VoiReport) -> csv::Result<String> {
    let mut w = writer();
    w.write_record([
        "outcome",
        "p_x",
        "delta_ev",
        "vsi",
        "posterior_action",
        "action_changed",
    ])?;
    for row in &r.rows {
        w.write_record([
            row.outcome.clone(),
            full(row.probability),
            full(row.delta_ev),
            full(row.vsi),
            row.posterior_action.clone(),
            row.action_changed.to_string(),
        ])?;
    }
    finish(w)
}

pub fn compare_table(problem_name: &str, c: &DesignComparison) -> String {
    let mut out = String::new();
    let width = c.designs.iter().map(|d| d.name.len()).max().unwrap_or(0);
    let _ = writeln!(out, "problem: {problem_name}");
    let _ = writeln!(out, "design comparison (EVSI ± σVSI)");
    for (i, d) in c.designs.iter().enumerate() {
        let mut line = format!(
            "{:<width$}: {} ± {}",
            d.name,
            fixed4(d.expected_utility),
            fixed4(d.sigma_vsi)
        );
        for risk in &d.report.risk {
            let _ = write!(
                line,
                ", {} = {}",
                risk_label(risk.delta),
                percent(risk.probability)
            );
        }
        if i == c.best_design {
            line.push_str("  [best]");
        }
        let _ = writeln!(out, "{line}");
    }
    let _ = writeln!(out, "best design: {}", c.best().name);
    out
}

pub fn compare_csv(c: &DesignComparison) -> csv::Result<String> {
    let mut w = writer();
    let deltas: Vec<f64> = c.designs[0].report.risk.iter().map(|r| r.delta).collect();
    let mut header = vec!["design".to_string(), "evsi".into(), "sigma_vsi".into()];
    header.extend(deltas.iter().map(|d| format!("rvsi_{d}")));
    header.push("best".into());
    w.write_record(&header)?;
    for (i, d) in c.designs.iter().enumerate() {
        let mut rec = vec![d.name.clone(), full(d.expected_utility), full(d.sigma_vsi)];
        rec.extend(d.report.risk.iter().map(|r| full(r.probability)));
        rec.push((i == c.best_design).to_string());
        w.write_record(&rec)?;
    }
    finish(w)
}

pub fn sweep_csv(points: &[(f64, f64)]) -> csv::Result<String> {
    let mut w = writer();
    w.write_record(["delta", "rvsi"])?;
    for (delta, risk) in points {
        w.write_record([full(*delta), full(*risk)])?;
    }
    finish(w)
}

fn writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> csv::Result<String> {
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
