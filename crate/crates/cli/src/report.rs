//! Serialization of verification reports.

use ccgeom::verify::CRITERIA;
use ccgeom::{TrialRecord, VerificationReport};

/// Column order of the CSV report.
pub const CSV_COLUMNS: [&str; 27] = [
    "index",
    "geometry",
    "r",
    "theta",
    "s",
    "center_x",
    "center_y",
    "center_z",
    "direction_x",
    "direction_y",
    "direction_z",
    "common_angle",
    "area_ab",
    "area_ac",
    "area_ad",
    "pythagoras_abs",
    "pythagoras_rel",
    "pythagoras_quadrature_rel",
    "parallelogram",
    "parallelogram_rel",
    "parallelogram_z",
    "coplanarity",
    "rectangle",
    "rectangle_form",
    "angle_spread",
    "proper",
    "breadcrust",
];

/// Columns that hold residuals; the aggregate row reports their maxima.
const RESIDUAL_FROM: usize = 15;

pub fn to_json(report: &VerificationReport) -> serde_json::Result<String> {
    let mut s = serde_json::to_string_pretty(report)?;
    s.push('\n');
    Ok(s)
}

/// Shortest round-trip representation, exponent form for tiny residuals.
fn num(v: f64) -> String {
    format!("{v:?}")
}

fn opt(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

fn row(r: &TrialRecord) -> Vec<String> {
    vec![
        r.index.to_string(),
        r.geometry.name().to_string(),
        num(r.r),
        num(r.theta),
        num(r.s),
        num(r.center[0]),
        num(r.center[1]),
        num(r.center[2]),
        num(r.direction[0]),
        num(r.direction[1]),
        num(r.direction[2]),
        num(r.common_angle),
        num(r.area_ab),
        num(r.area_ac),
        num(r.area_ad),
        num(r.pythagoras_abs),
        num(r.pythagoras_rel),
        opt(r.pythagoras_quadrature_rel),
        num(r.parallelogram),
        num(r.parallelogram_rel),
        num(r.parallelogram_z),
        num(r.coplanarity),
        opt(r.rectangle),
        num(r.rectangle_form),
        num(r.angle_spread),
        num(r.proper),
        opt(r.breadcrust),
    ]
}

/// One row per trial, then an aggregate row with `index = max`, the
/// overall verdict in `geometry`, and the maximum of every residual column.
pub fn to_csv(report: &VerificationReport) -> String {
    let mut out = CSV_COLUMNS.join(",");
    out.push('\n');
    let mut max: Vec<Option<f64>> = vec![None; CSV_COLUMNS.len()];
    for rec in &report.records {
        let cells = row(rec);
        for (slot, cell) in max.iter_mut().zip(&cells).skip(RESIDUAL_FROM) {
            if let Ok(v) = cell.parse::<f64>() {
                *slot = Some(slot.map_or(v, |m: f64| m.max(v)));
            }
        }
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    let mut agg = vec![String::new(); CSV_COLUMNS.len()];
    agg[0] = "max".into();
    agg[1] = if report.pass { "pass" } else { "fail" }.into();
    for (cell, m) in agg.iter_mut().zip(&max).skip(RESIDUAL_FROM) {
        *cell = opt(*m);
    }
    out.push_str(&agg.join(","));
    out.push('\n');
    out
}

/// Human-readable criterion table for standard error.
pub fn summary(report: &VerificationReport) -> String {
    let mut s = format!("{} trials, seed {}\n", report.records.len(), report.seed);
    for name in CRITERIA {
        if let Some(c) = report.criterion(name) {
            s.push_str(&format!(
                "{:<22} {:>5}  max {:.3e}  threshold {:.1e}  {}\n",
                c.name,
                c.count,
                c.max,
                c.threshold,
                if c.pass { "PASS" } else { "FAIL" }
            ));
        }
    }
    s.push_str(if report.pass { "overall PASS\n" } else { "overall FAIL\n" });
    s
}
