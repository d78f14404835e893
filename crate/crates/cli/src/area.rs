//! Disk-area tables.

use ccgeom::{disk_area, disk_area_quadrature, Disk, Geometry, GeometryKind};

use crate::args::TableFormat;
use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AreaRow {
    pub rho: f64,
    pub closed: f64,
    /// `None` when the oracle is off or the geometry is flat.
    pub quadrature: Option<f64>,
    pub rel_diff: Option<f64>,
}

pub fn table(
    kind: GeometryKind,
    r: f64,
    rhos: &[f64],
    oracle: bool,
    tol: f64,
) -> Result<Vec<AreaRow>, CliError> {
    if oracle && !(tol > 0.0 && tol.is_finite()) {
        return Err(CliError::usage(format!("--tol must be positive, got {tol}")));
    }
    let g = Geometry::new(kind, r)?;
    let mut rows = Vec::with_capacity(rhos.len());
    for &rho in rhos {
        let d = Disk::new(g.pole(), rho)?;
        let closed = disk_area(&d);
        let quadrature = if oracle && kind.is_curved() { Some(disk_area_quadrature(&d, tol)?) } else { None };
        let rel_diff =
            quadrature.map(|q| if closed > 0.0 { (closed - q).abs() / closed } else { (closed - q).abs() });
        rows.push(AreaRow { rho, closed, quadrature, rel_diff });
    }
    Ok(rows)
}

pub fn format(rows: &[AreaRow], fmt: TableFormat) -> String {
    let mut out = String::new();
    match fmt {
        TableFormat::Csv => {
            out.push_str("rho,closed_form,quadrature,rel_diff\n");
            for r in rows {
                let opt = |v: Option<f64>| v.map(|v| format!("{v:?}")).unwrap_or_default();
                out.push_str(&format!(
                    "{:?},{:?},{},{}\n",
                    r.rho,
                    r.closed,
                    opt(r.quadrature),
                    opt(r.rel_diff)
                ));
            }
        }
        TableFormat::Text => {
            out.push_str(&format!(
                "{:>14}  {:>22}  {:>22}  {:>10}\n",
                "rho", "closed form", "quadrature", "rel diff"
            ));
            for r in rows {
                let q = r.quadrature.map(|v| format!("{v:.15}")).unwrap_or_else(|| "-".into());
                let d = r.rel_diff.map(|v| format!("{v:.3e}")).unwrap_or_else(|| "-".into());
                out.push_str(&format!("{:>14.10}  {:>22.15}  {:>22}  {:>10}\n", r.rho, r.closed, q, d));
            }
        }
    }
    out
}
