//! SVG figures of a construction.
//!
//! Every curve is a sampled polyline so the output depends only on the
//! projected sample points, printed with a fixed number of decimals.

use std::f64::consts::{FRAC_1_SQRT_2, TAU};
use std::fmt::Write as _;

use ccgeom::{distance, exp_map, GeodesicSegment, Geometry, GeometryKind, SurfacePoint};

use crate::args::{Element, ProjectionArg};
use crate::construct::Construction;
use crate::error::CliError;

/// Segments per geodesic (samples = segments + 1).
pub const GEODESIC_SEGMENTS: usize = 64;
/// Samples per closed curve, excluding the repeated first point.
pub const CIRCLE_SAMPLES: usize = 256;
/// Blank border around the drawing, in pixels.
pub const MARGIN: f64 = 24.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Projection {
    /// `(x, y, z) -> (x, y) / r`, sphere.
    Orthographic,
    /// `(x, y, z) -> (x, y) / (r + z)`, hyperboloid.
    Poincare,
    /// The plane itself, fitted to the figure.
    Identity,
}

impl Projection {
    pub fn default_for(kind: GeometryKind) -> Self {
        match kind {
            GeometryKind::Spherical => Projection::Orthographic,
            GeometryKind::Hyperbolic => Projection::Poincare,
            GeometryKind::Euclidean => Projection::Identity,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Projection::Orthographic => "orthographic",
            Projection::Poincare => "poincare",
            Projection::Identity => "identity",
        }
    }
}

impl From<ProjectionArg> for Projection {
    fn from(p: ProjectionArg) -> Self {
        match p {
            ProjectionArg::Orthographic => Projection::Orthographic,
            ProjectionArg::Poincare => Projection::Poincare,
            ProjectionArg::Identity => Projection::Identity,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    pub projection: Option<Projection>,
    pub size: u32,
    pub stroke: f64,
    pub elements: Vec<Element>,
}

impl Default for RenderSpec {
    fn default() -> Self {
        Self {
            projection: None,
            size: 640,
            stroke: 1.5,
            elements: vec![
                Element::Disks,
                Element::Circumcircle,
                Element::Sides,
                Element::Diagonals,
                Element::Vertices,
            ],
        }
    }
}

type Pt = (f64, f64);

struct Curve {
    id: String,
    class: &'static str,
    points: Vec<Pt>,
}

fn sample_geodesic(p: &SurfacePoint<f64>, q: &SurfacePoint<f64>) -> Result<Vec<SurfacePoint<f64>>, CliError> {
    Ok(GeodesicSegment::new(*p, *q)?.sample(GEODESIC_SEGMENTS)?)
}

/// Boundary of the geodesic disk; the last sample repeats the first.
fn sample_circle(center: &SurfacePoint<f64>, rho: f64) -> Result<Vec<SurfacePoint<f64>>, CliError> {
    let (e1, _) = center.geometry().tangent_frame(center)?;
    let mut pts = Vec::with_capacity(CIRCLE_SAMPLES + 1);
    for k in 0..CIRCLE_SAMPLES {
        let dir = e1.rotated(TAU * k as f64 / CIRCLE_SAMPLES as f64);
        pts.push(exp_map(center, &dir, rho)?);
    }
    pts.push(pts[0]);
    Ok(pts)
}

fn project(proj: Projection, g: &Geometry<f64>, p: &SurfacePoint<f64>) -> Pt {
    let c = p.coords();
    let r = g.scale();
    match proj {
        Projection::Orthographic => (c.x / r, c.y / r),
        Projection::Poincare => (c.x / (r + c.z), c.y / (r + c.z)),
        Projection::Identity => (c.x, c.y),
    }
}

fn check_projection(proj: Projection, kind: GeometryKind) -> Result<(), CliError> {
    if proj == Projection::default_for(kind) {
        Ok(())
    } else {
        Err(CliError::usage(format!(
            "projection {} does not apply to {} geometry (use {})",
            proj.name(),
            kind.name(),
            Projection::default_for(kind).name()
        )))
    }
}

/// Fixed three-decimal output without negative zero.
fn fmt(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn points_attr(pts: &[Pt]) -> String {
    pts.iter().map(|&(x, y)| format!("{},{}", fmt(x), fmt(y))).collect::<Vec<_>>().join(" ")
}

pub fn render_svg(c: &Construction, spec: &RenderSpec) -> Result<String, CliError> {
    if !(spec.size >= 64 && spec.size <= 16384) {
        return Err(CliError::usage(format!("--size must lie in [64, 16384], got {}", spec.size)));
    }
    if !(spec.stroke > 0.0 && spec.stroke.is_finite()) {
        return Err(CliError::usage(format!("--stroke must be positive, got {}", spec.stroke)));
    }
    let (g, [a, b, d, cc, o]) = c.points()?;
    let proj = spec.projection.unwrap_or(Projection::default_for(g.kind()));
    check_projection(proj, g.kind())?;
    let wants = |e: Element| spec.elements.contains(&e);

    let mut curves: Vec<Curve> = Vec::new();
    let mut add = |id: &str, class: &'static str, pts: Vec<SurfacePoint<f64>>| {
        curves.push(Curve {
            id: id.to_string(),
            class,
            points: pts.iter().map(|p| project(proj, &g, p)).collect(),
        })
    };
    if wants(Element::Disks) {
        for (id, far) in [("disk-AD", &d), ("disk-AB", &b), ("disk-AC", &cc)] {
            add(id, "disk", sample_circle(&a, distance(&a, far)?)?);
        }
    }
    if wants(Element::Circumcircle) {
        add("circumcircle", "circumcircle", sample_circle(&o, c.half_diagonal)?);
    }
    if wants(Element::Sides) {
        for (id, p, q) in
            [("side-AB", &a, &b), ("side-BD", &b, &d), ("side-DC", &d, &cc), ("side-CA", &cc, &a)]
        {
            add(id, "side", sample_geodesic(p, q)?);
        }
    }
    if wants(Element::Diagonals) {
        for (id, p, q) in [("diagonal-AD", &a, &d), ("diagonal-BC", &b, &cc)] {
            add(id, "diagonal", sample_geodesic(p, q)?);
        }
    }
    let labels = [("A", &a), ("B", &b), ("D", &d), ("C", &cc)].map(|(n, p)| (n, project(proj, &g, p)));
    let origin = project(proj, &g, &o);

    // Model coordinates to [-1, 1]², then to the viewport.
    let (mid, half) = match proj {
        Projection::Identity => {
            let all = curves.iter().flat_map(|c| c.points.iter()).chain(labels.iter().map(|l| &l.1));
            let (mut lo, mut hi) = ((f64::INFINITY, f64::INFINITY), (f64::NEG_INFINITY, f64::NEG_INFINITY));
            for &(x, y) in all {
                lo = (lo.0.min(x), lo.1.min(y));
                hi = (hi.0.max(x), hi.1.max(y));
            }
            let half = ((hi.0 - lo.0).max(hi.1 - lo.1) / 2.0).max(1e-300);
            (((lo.0 + hi.0) / 2.0, (lo.1 + hi.1) / 2.0), half)
        }
        _ => ((0.0, 0.0), 1.0),
    };
    let size = spec.size as f64;
    let scale = size / 2.0 - MARGIN;
    let to_view =
        |(x, y): Pt| (size / 2.0 + (x - mid.0) / half * scale, size / 2.0 - (y - mid.1) / half * scale);

    let sw = spec.stroke;
    let mut s = String::new();
    let w = &mut s;
    let _ = writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        spec.size
    );
    let r_txt = c.geometry.r.map(|r| format!(" r={}", fmt(r))).unwrap_or_default();
    let _ = writeln!(
        w,
        "<title>{}{} theta={} s={} ({})</title>",
        g.kind().name(),
        r_txt,
        fmt(c.theta),
        fmt(c.half_diagonal),
        proj.name()
    );
    let _ = writeln!(w, r#"<rect width="{0}" height="{0}" fill="white"/>"#, spec.size);
    if proj != Projection::Identity {
        let boundary: Vec<Pt> = (0..=CIRCLE_SAMPLES)
            .map(|k| {
                let t = TAU * (k % CIRCLE_SAMPLES) as f64 / CIRCLE_SAMPLES as f64;
                to_view((t.cos(), t.sin()))
            })
            .collect();
        let _ = writeln!(
            w,
            r##"<polyline id="boundary" class="boundary" fill="none" stroke="#999999" stroke-width="{}" points="{}"/>"##,
            fmt(sw * 0.5),
            points_attr(&boundary)
        );
    }
    for cv in &curves {
        let style = match (cv.class, cv.id.as_str()) {
            ("disk", "disk-AD") => {
                format!(r##"fill="#f2c14e" fill-opacity="0.30" stroke="#c08a00" stroke-width="{}""##, fmt(sw))
            }
            ("disk", _) => {
                format!(r##"fill="#4e79a7" fill-opacity="0.20" stroke="#2b5d8f" stroke-width="{}""##, fmt(sw))
            }
            ("circumcircle", _) => {
                format!(r##"fill="none" stroke="#555555" stroke-dasharray="6 4" stroke-width="{}""##, fmt(sw))
            }
            ("diagonal", _) => format!(r##"fill="none" stroke="#b03a2e" stroke-width="{}""##, fmt(sw)),
            _ => format!(r##"fill="none" stroke="#000000" stroke-width="{}""##, fmt(sw * 1.3)),
        };
        let pts: Vec<Pt> = cv.points.iter().map(|&p| to_view(p)).collect();
        let _ = writeln!(
            w,
            r#"<polyline id="{}" class="{}" {} points="{}"/>"#,
            cv.id,
            cv.class,
            style,
            points_attr(&pts)
        );
    }
    if wants(Element::Vertices) {
        let centre = to_view(origin);
        for (name, p) in labels {
            let (x, y) = to_view(p);
            let (dx, dy) = (x - centre.0, y - centre.1);
            let n = dx.hypot(dy);
            let (ux, uy) = if n > 1e-9 { (dx / n, dy / n) } else { (FRAC_1_SQRT_2, -FRAC_1_SQRT_2) };
            let _ = writeln!(
                w,
                r##"<circle id="vertex-{0}" class="vertex" cx="{1}" cy="{2}" r="{3}" fill="#000000"/>"##,
                name,
                fmt(x),
                fmt(y),
                fmt(sw * 2.0)
            );
            let _ = writeln!(
                w,
                r#"<text id="label-{0}" x="{1}" y="{2}" font-family="serif" font-size="16" text-anchor="middle" dominant-baseline="middle">{0}</text>"#,
                name,
                fmt(x + 14.0 * ux),
                fmt(y + 14.0 * uy)
            );
        }
    }
    let _ = writeln!(w, "</svg>");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build, describe, FigureParams};

    fn figure(kind: GeometryKind) -> Construction {
        let p = FigureParams { kind, r: 1.0, theta: 1.1, half_diagonal: 0.9, center: None, seed: Some(3) };
        describe(&build(&p).unwrap()).unwrap()
    }

    #[test]
    fn negative_zero_is_normalized() {
        assert_eq!(fmt(-0.0001), "0.000");
        assert_eq!(fmt(-1.25), "-1.250");
    }

    #[test]
    fn mismatched_projection_is_rejected() {
        let spec = RenderSpec { projection: Some(Projection::Poincare), ..RenderSpec::default() };
        assert!(matches!(render_svg(&figure(GeometryKind::Spherical), &spec), Err(CliError::Usage(_))));
    }

    #[test]
    fn element_selection() {
        let spec = RenderSpec { elements: vec![Element::Sides], ..RenderSpec::default() };
        let svg = render_svg(&figure(GeometryKind::Euclidean), &spec).unwrap();
        assert_eq!(svg.matches("class=\"side\"").count(), 4);
        assert!(!svg.contains("disk-AD"));
        assert!(!svg.contains("<text"));
    }

    #[test]
    fn identity_fits_viewport() {
        let svg = render_svg(&figure(GeometryKind::Euclidean), &RenderSpec::default()).unwrap();
        assert!(!svg.contains("id=\"boundary\""));
        assert!(svg.contains("id=\"disk-AD\""));
    }
}
