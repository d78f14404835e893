//! Single constructions and their JSON form.

use ccgeom::verify::seeded_direction;
use ccgeom::{
    build_equiangular_quadrilateral, project_to_surface, record_for, EquiangularQuadrilateral, Geometry,
    GeometryKind, SurfacePoint, TangentVector, Vec3,
};
use serde::{Deserialize, Serialize};

use crate::args::FigureArgs;
use crate::error::CliError;

/// Validated inputs for one construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FigureParams {
    pub kind: GeometryKind,
    pub r: f64,
    pub theta: f64,
    pub half_diagonal: f64,
    pub center: Option<[f64; 3]>,
    pub seed: Option<u64>,
}

impl TryFrom<&FigureArgs> for FigureParams {
    type Error = CliError;

    fn try_from(a: &FigureArgs) -> Result<Self, CliError> {
        let missing = |flag: &str| CliError::usage(format!("missing required flag --{flag}"));
        Ok(FigureParams {
            kind: a.geometry.ok_or_else(|| missing("geometry"))?.into(),
            r: a.radius,
            theta: a.theta.ok_or_else(|| missing("theta"))?,
            half_diagonal: a.half_diagonal.ok_or_else(|| missing("half-diagonal"))?,
            center: a.center,
            seed: a.seed,
        })
    }
}

pub struct Figure {
    pub quad: EquiangularQuadrilateral<f64>,
    pub direction: TangentVector<f64>,
}

pub fn build(p: &FigureParams) -> Result<Figure, CliError> {
    let g = Geometry::new(p.kind, p.r)?;
    let center = match p.center {
        Some(c) => project_to_surface(&g, Vec3::from_array(c))?,
        None => g.pole(),
    };
    let direction = seeded_direction(&center, p.seed)?;
    let quad = build_equiangular_quadrilateral(&g, &center, &direction, p.theta, p.half_diagonal)?;
    Ok(Figure { quad, direction })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeometrySpec {
    pub kind: GeometryKind,
    /// Absent on the plane.
    pub r: Option<f64>,
}

impl GeometrySpec {
    pub fn geometry(&self) -> Result<Geometry<f64>, CliError> {
        match (self.kind, self.r) {
            (GeometryKind::Euclidean, _) => Ok(Geometry::euclidean()),
            (k, Some(r)) => Ok(Geometry::new(k, r)?),
            (k, None) => Err(CliError::usage(format!("{} geometry needs a radius", k.name()))),
        }
    }
}

/// Per-vertex values in the cyclic order A, B, D, C.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PerVertex<V> {
    #[serde(rename = "A")]
    pub a: V,
    #[serde(rename = "B")]
    pub b: V,
    #[serde(rename = "D")]
    pub d: V,
    #[serde(rename = "C")]
    pub c: V,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub struct Sides {
    pub ab: f64,
    pub bd: f64,
    pub dc: f64,
    pub ca: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub struct Diagonals {
    pub ad: f64,
    pub bc: f64,
}

/// Areas of the disks about `A` through `B`, `C` and `D`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub struct Areas {
    pub ab: f64,
    pub ac: f64,
    pub ad: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Residuals {
    pub pythagoras_abs: f64,
    pub pythagoras_rel: f64,
    pub pythagoras_quadrature_rel: Option<f64>,
    pub parallelogram: f64,
    pub parallelogram_z: f64,
    pub coplanarity: f64,
    pub rectangle: Option<f64>,
    pub rectangle_form: f64,
    pub angle_spread: f64,
    pub proper: f64,
    pub breadcrust: Option<f64>,
}

/// JSON document emitted by `construct` and accepted by `render --input`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Construction {
    pub geometry: GeometrySpec,
    pub theta: f64,
    pub half_diagonal: f64,
    pub center: [f64; 3],
    pub direction: [f64; 3],
    pub vertices: PerVertex<[f64; 3]>,
    pub angles: PerVertex<f64>,
    pub sides: Sides,
    pub diagonals: Diagonals,
    pub areas: Areas,
    pub residuals: Residuals,
}

fn coords(p: &SurfacePoint<f64>) -> [f64; 3] {
    p.coords().to_array()
}

pub fn describe(fig: &Figure) -> Result<Construction, CliError> {
    let q = &fig.quad;
    let g = q.geometry;
    let rec = record_for(q, fig.direction, 0, g.scale())?;
    let [aa, ab, ad, ac] = q.angles()?;
    let [s_ab, s_bd, s_dc, s_ca] = q.sides()?;
    let [d_ad, d_bc] = q.diagonals()?;
    Ok(Construction {
        geometry: GeometrySpec { kind: g.kind(), r: g.radius() },
        theta: q.theta,
        half_diagonal: q.half_diagonal,
        center: coords(&q.center),
        direction: fig.direction.vector().to_array(),
        vertices: PerVertex { a: coords(&q.a), b: coords(&q.b), d: coords(&q.d), c: coords(&q.c) },
        angles: PerVertex { a: aa, b: ab, d: ad, c: ac },
        sides: Sides { ab: s_ab, bd: s_bd, dc: s_dc, ca: s_ca },
        diagonals: Diagonals { ad: d_ad, bc: d_bc },
        areas: Areas { ab: rec.area_ab, ac: rec.area_ac, ad: rec.area_ad },
        residuals: Residuals {
            pythagoras_abs: rec.pythagoras_abs,
            pythagoras_rel: rec.pythagoras_rel,
            pythagoras_quadrature_rel: rec.pythagoras_quadrature_rel,
            parallelogram: rec.parallelogram,
            parallelogram_z: rec.parallelogram_z,
            coplanarity: rec.coplanarity,
            rectangle: rec.rectangle,
            rectangle_form: rec.rectangle_form,
            angle_spread: rec.angle_spread,
            proper: rec.proper,
            breadcrust: rec.breadcrust,
        },
    })
}

impl Construction {
    /// Points of the figure back on their surface; each one is re-validated.
    pub fn points(&self) -> Result<(Geometry<f64>, [SurfacePoint<f64>; 5]), CliError> {
        let g = self.geometry.geometry()?;
        let pt = |c: [f64; 3]| SurfacePoint::new(g, Vec3::from_array(c));
        let v = &self.vertices;
        Ok((g, [pt(v.a)?, pt(v.b)?, pt(v.d)?, pt(v.c)?, pt(self.center)?]))
    }
}

pub fn to_json(c: &Construction) -> serde_json::Result<String> {
    let mut s = serde_json::to_string_pretty(c)?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn params(kind: GeometryKind, theta: f64, s: f64) -> FigureParams {
        FigureParams { kind, r: 1.0, theta, half_diagonal: s, center: None, seed: None }
    }

    #[test]
    fn square() {
        let c = describe(&build(&params(GeometryKind::Euclidean, FRAC_PI_2, 1.0)).unwrap()).unwrap();
        for a in [c.angles.a, c.angles.b, c.angles.d, c.angles.c] {
            assert!((a - FRAC_PI_2).abs() < 1e-12);
        }
        assert!((c.sides.ab - 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(c.geometry.r, None);
    }

    #[test]
    fn spherical_identity_holds() {
        let c = describe(&build(&params(GeometryKind::Spherical, FRAC_PI_2, 0.6)).unwrap()).unwrap();
        let rel = (c.areas.ab + c.areas.ac - c.areas.ad).abs() / c.areas.ad;
        assert!(rel < 1e-9);
        assert!(c.residuals.rectangle.unwrap() < 1e-12);
    }

    #[test]
    fn spherical_bound_is_reported() {
        let err = build(&params(GeometryKind::Spherical, FRAC_PI_2, 1.6)).err().unwrap();
        assert!(err.to_string().contains("half-diagonal exceeds spherical bound"));
    }

    #[test]
    fn center_and_seed_are_used() {
        let p = FigureParams {
            center: Some([0.3, -0.2, 1.0]),
            seed: Some(9),
            ..params(GeometryKind::Hyperbolic, PI / 3.0, 0.7)
        };
        let c = describe(&build(&p).unwrap()).unwrap();
        let [x, y, z] = c.center;
        assert!((x * x + y * y - z * z + 1.0).abs() < 1e-12);
        assert!((x / z - 0.3).abs() < 1e-12 && (y / z + 0.2).abs() < 1e-12);
        let again = describe(&build(&p).unwrap()).unwrap();
        assert_eq!(c, again);
    }

    #[test]
    fn json_roundtrip_and_points() {
        let c = describe(&build(&params(GeometryKind::Hyperbolic, 1.0, 1.2)).unwrap()).unwrap();
        let back: Construction = serde_json::from_str(&to_json(&c).unwrap()).unwrap();
        assert_eq!(back, c);
        let (_, pts) = back.points().unwrap();
        assert_eq!(pts[0].coords().to_array(), c.vertices.a);
    }
}
