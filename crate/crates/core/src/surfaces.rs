//! The three model surfaces and their intrinsic geometry.
//!
//! Points are stored in ambient coordinates. The plane is `z = 0`, the
//! sphere is centered at the origin, and the hyperbolic plane is the upper
//! sheet (`z > 0`) of the two-sheeted hyperboloid.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::{validate_isometry_with, BilinearForm, Isometry, Mat3, Vec3};
use crate::scalar::Scalar;
use crate::tolerance::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeometryKind {
    Euclidean,
    Spherical,
    Hyperbolic,
}

impl GeometryKind {
    pub fn name(self) -> &'static str {
        match self {
            GeometryKind::Euclidean => "euclidean",
            GeometryKind::Spherical => "spherical",
            GeometryKind::Hyperbolic => "hyperbolic",
        }
    }

    pub fn is_curved(self) -> bool {
        self != GeometryKind::Euclidean
    }
}

/// A curvature regime together with the tolerances used on it.
///
/// Two geometries are equal when their kind and radius agree; tolerances
/// do not take part in the comparison.
#[derive(Debug, Clone, Copy)]
pub struct Geometry<T> {
    kind: GeometryKind,
    r: T,
    tol: Tolerances<T>,
}

impl<T: PartialEq> PartialEq for Geometry<T> {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.r == other.r
    }
}

impl<T: Scalar> Geometry<T> {
    pub fn euclidean() -> Self {
        Self { kind: GeometryKind::Euclidean, r: T::one(), tol: Tolerances::default() }
    }

    pub fn spherical(r: T) -> Result<Self> {
        Self::curved(GeometryKind::Spherical, r)
    }

    pub fn hyperbolic(r: T) -> Result<Self> {
        Self::curved(GeometryKind::Hyperbolic, r)
    }

    /// Builds a geometry of the given kind. `r` is ignored for the plane.
    pub fn new(kind: GeometryKind, r: T) -> Result<Self> {
        match kind {
            GeometryKind::Euclidean => Ok(Self::euclidean()),
            k => Self::curved(k, r),
        }
    }

    fn curved(kind: GeometryKind, r: T) -> Result<Self> {
        if !(r > T::zero() && r.is_finite()) {
            return Err(Error::InvalidRadius(r.f64()));
        }
        Ok(Self { kind, r, tol: Tolerances::default() })
    }

    pub fn with_tolerances(mut self, tol: Tolerances<T>) -> Self {
        self.tol = tol;
        self
    }

    pub fn kind(&self) -> GeometryKind {
        self.kind
    }

    /// Radius of a curved model, `None` for the plane.
    pub fn radius(&self) -> Option<T> {
        self.kind.is_curved().then_some(self.r)
    }

    /// Length scale for relative tolerances: `r`, or 1 for the plane.
    pub fn scale(&self) -> T {
        self.r
    }

    pub fn tolerances(&self) -> &Tolerances<T> {
        &self.tol
    }

    pub fn form(&self) -> BilinearForm {
        match self.kind {
            GeometryKind::Hyperbolic => BilinearForm::Lorentzian,
            _ => BilinearForm::Euclidean,
        }
    }

    /// The normalizing point: `(0,0,r)` on curved models, the origin on the plane.
    pub fn pole(&self) -> SurfacePoint<T> {
        let z = if self.kind.is_curved() { self.r } else { T::zero() };
        SurfacePoint { geometry: *self, coords: Vec3::new(T::zero(), T::zero(), z) }
    }

    /// Signed defect of the defining equation at `c`.
    pub fn membership_residual(&self, c: Vec3<T>) -> T {
        let r2 = self.r * self.r;
        match self.kind {
            GeometryKind::Euclidean => c.z.abs(),
            GeometryKind::Spherical => (c.dot(c) - r2).abs() / r2,
            // Roundoff in x² + y² − z² grows with z², not r².
            GeometryKind::Hyperbolic => (self.form().dot(c, c) + r2).abs() / r2.max(c.dot(c)),
        }
    }

    /// A form-orthonormal basis of the tangent plane at `p`, right-handed
    /// around the outward normal.
    pub fn tangent_frame(&self, p: &SurfacePoint<T>) -> Result<(TangentVector<T>, TangentVector<T>)> {
        self.check(p)?;
        let (e1, e2) = match self.kind {
            GeometryKind::Euclidean => (Vec3::unit_x(), Vec3::unit_y()),
            _ => crate::forms::orthonormal_frame_at(p.coords, self.form())?,
        };
        let e1 = TangentVector { base: *p, v: e1 };
        let e2_oriented = e1.quarter_turn();
        let e2 = if e2_oriented.v.dot(e2) >= T::zero() { e2 } else { -e2 };
        Ok((e1, TangentVector { base: *p, v: e2 }))
    }

    fn check(&self, p: &SurfacePoint<T>) -> Result<()> {
        if p.geometry == *self {
            Ok(())
        } else {
            Err(Error::GeometryMismatch)
        }
    }

    /// Largest admissible geodesic distance for a unique shortest path.
    pub fn injectivity_radius(&self) -> Option<T> {
        (self.kind == GeometryKind::Spherical).then(|| T::PI() * self.r)
    }
}

/// A point on one of the model surfaces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfacePoint<T> {
    geometry: Geometry<T>,
    coords: Vec3<T>,
}

impl<T: Scalar> SurfacePoint<T> {
    /// Validates that `coords` lies on the surface within `tol.surf`.
    pub fn new(geometry: Geometry<T>, coords: Vec3<T>) -> Result<Self> {
        if !coords.is_finite() {
            return Err(Error::NotOnSurface { residual: f64::INFINITY });
        }
        let residual = geometry.membership_residual(coords);
        let on_surface = match geometry.kind {
            GeometryKind::Euclidean => coords.z == T::zero(),
            _ => residual <= geometry.tol.surf,
        };
        if !on_surface {
            return Err(Error::NotOnSurface { residual: residual.f64() });
        }
        if geometry.kind == GeometryKind::Hyperbolic && !(coords.z > T::zero()) {
            return Err(Error::NotOnSurface { residual: residual.f64() });
        }
        Ok(Self { geometry, coords })
    }

    pub fn geometry(&self) -> &Geometry<T> {
        &self.geometry
    }

    pub fn coords(&self) -> Vec3<T> {
        self.coords
    }
}

/// A tangent vector at a surface point, in ambient coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentVector<T> {
    base: SurfacePoint<T>,
    v: Vec3<T>,
}

impl<T: Scalar> TangentVector<T> {
    pub fn new(base: SurfacePoint<T>, v: Vec3<T>) -> Result<Self> {
        let g = base.geometry;
        let residual = match g.kind {
            GeometryKind::Euclidean => v.z.abs(),
            _ => g.form().dot(base.coords, v).abs() / g.r,
        };
        if !v.is_finite() || residual > g.tol.surf * v.norm() {
            return Err(Error::NotTangent { residual: residual.f64() });
        }
        if g.kind == GeometryKind::Hyperbolic && !(g.form().dot(v, v) > T::zero()) {
            return Err(Error::NotTangent { residual: residual.f64() });
        }
        Ok(Self { base, v })
    }

    pub fn base(&self) -> &SurfacePoint<T> {
        &self.base
    }

    pub fn vector(&self) -> Vec3<T> {
        self.v
    }

    /// Length under the surface metric.
    pub fn norm(&self) -> T {
        self.base.geometry.form().dot(self.v, self.v).max(T::zero()).sqrt()
    }

    pub fn unit(&self) -> Result<Self> {
        let n = self.norm();
        if !(n > T::zero()) {
            return Err(Error::DegenerateVector);
        }
        Ok(self.scaled(T::one() / n))
    }

    pub fn scaled(&self, k: T) -> Self {
        Self { base: self.base, v: self.v * k }
    }

    /// Rotation by +90° in the tangent plane: `G (n × v)` with `n` the unit normal.
    pub fn quarter_turn(&self) -> Self {
        let g = &self.base.geometry;
        let n = match g.kind {
            GeometryKind::Euclidean => Vec3::unit_z(),
            _ => self.base.coords * (T::one() / g.r),
        };
        Self { base: self.base, v: g.form().flip(n.cross(self.v)) }
    }

    /// Rotation by `theta` in the tangent plane.
    pub fn rotated(&self, theta: T) -> Self {
        let (s, c) = theta.sin_cos();
        Self { base: self.base, v: self.v * c + self.quarter_turn().v * s }
    }
}

impl<T: Scalar> std::ops::Neg for TangentVector<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { base: self.base, v: -self.v }
    }
}

/// Shortest geodesic between two points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeodesicSegment<T> {
    pub p: SurfacePoint<T>,
    pub q: SurfacePoint<T>,
    pub length: T,
}

impl<T: Scalar> GeodesicSegment<T> {
    pub fn new(p: SurfacePoint<T>, q: SurfacePoint<T>) -> Result<Self> {
        let length = distance(&p, &q)?;
        Ok(Self { p, q, length })
    }

    /// `n + 1` points from `p` to `q`, evenly spaced in arclength, endpoints exact.
    pub fn sample(&self, n: usize) -> Result<Vec<SurfacePoint<T>>> {
        let n = n.max(1);
        if self.length <= self.p.geometry.tol.coincident * self.p.geometry.r {
            return Ok(vec![self.p; n + 1]);
        }
        let dir = log_map(&self.p, &self.q)?;
        let mut out = Vec::with_capacity(n + 1);
        out.push(self.p);
        for i in 1..n {
            let s = self.length * T::c(i as f64) / T::c(n as f64);
            out.push(exp_map(&self.p, &dir, s)?);
        }
        out.push(self.q);
        Ok(out)
    }
}

/// Rescales `raw` onto the surface along the ray through the origin.
///
/// On the plane the `z` coordinate is dropped instead.
pub fn project_to_surface<T: Scalar>(g: &Geometry<T>, raw: Vec3<T>) -> Result<SurfacePoint<T>> {
    if !raw.is_finite() {
        return Err(Error::NotProjectable("non-finite coordinates"));
    }
    let coords = match g.kind {
        GeometryKind::Euclidean => Vec3::new(raw.x, raw.y, T::zero()),
        GeometryKind::Spherical => {
            let n = raw.norm();
            if !(n > T::zero()) {
                return Err(Error::NotProjectable("zero vector"));
            }
            raw * (g.r / n)
        }
        GeometryKind::Hyperbolic => {
            let q = g.form().dot(raw, raw);
            if !(q < T::zero() && raw.z > T::zero()) {
                return Err(Error::NotProjectable("vector is not timelike in the upper cone"));
            }
            raw * (g.r / (-q).sqrt())
        }
    };
    SurfacePoint::new(*g, coords)
}

/// Snaps a computed point back onto the surface. Radial rescaling would
/// amplify roundoff far out on the hyperboloid, where the radial direction is
/// nearly null, so there `z` is recomputed from `x` and `y` instead.
fn settle<T: Scalar>(g: &Geometry<T>, raw: Vec3<T>) -> Result<SurfacePoint<T>> {
    match g.kind {
        GeometryKind::Hyperbolic if raw.is_finite() && raw.z > T::zero() => {
            let z = raw.x.hypot(raw.y).hypot(g.r);
            SurfacePoint::new(*g, Vec3::new(raw.x, raw.y, z))
        }
        _ => project_to_surface(g, raw),
    }
}

fn same_geometry<T: Scalar>(p: &SurfacePoint<T>, q: &SurfacePoint<T>) -> Result<Geometry<T>> {
    if p.geometry == q.geometry {
        Ok(p.geometry)
    } else {
        Err(Error::GeometryMismatch)
    }
}

/// Geodesic distance.
///
/// Uses `atan2(|p×q|, p·q)` on the sphere and the chord form
/// `2r·asinh(|q−p|_L / 2r)` near the diagonal of the hyperboloid; both agree
/// with `r·arccos` / `r·arcosh` of the normalized inner product but keep full
/// precision for nearby points.
pub fn distance<T: Scalar>(p: &SurfacePoint<T>, q: &SurfacePoint<T>) -> Result<T> {
    let g = same_geometry(p, q)?;
    let (a, b) = (p.coords, q.coords);
    let r = g.r;
    match g.kind {
        GeometryKind::Euclidean => Ok((b - a).norm()),
        GeometryKind::Spherical => {
            let c = a.dot(b) / (r * r);
            if c.abs() > T::one() + g.tol.domain {
                return Err(Error::DomainExcursion { value: c.f64() });
            }
            Ok(r * a.cross(b).norm().atan2(a.dot(b)))
        }
        GeometryKind::Hyperbolic => {
            let form = g.form();
            let c = -form.dot(a, b) / (r * r);
            if c < T::one() - g.tol.domain {
                return Err(Error::DomainExcursion { value: c.f64() });
            }
            let c = c.max(T::one());
            if c > T::two() {
                Ok(r * c.acosh())
            } else {
                let d = b - a;
                let chord = form.dot(d, d).max(T::zero()).sqrt();
                Ok(T::two() * r * (chord / (T::two() * r)).asinh())
            }
        }
    }
}

fn check_direction<T: Scalar>(p: &SurfacePoint<T>, dir: &TangentVector<T>) -> Result<()> {
    let g = same_geometry(p, &dir.base)?;
    if (dir.base.coords - p.coords).norm() > g.tol.surf * g.r {
        return Err(Error::BaseMismatch);
    }
    let n2 = g.form().dot(dir.v, dir.v);
    if !((n2 - T::one()).abs() <= g.tol.surf) {
        return Err(Error::NotUnitDirection { norm_sq: n2.f64() });
    }
    Ok(())
}

/// Walks distance `s` from `p` along the geodesic with unit direction `dir`.
pub fn exp_map<T: Scalar>(p: &SurfacePoint<T>, dir: &TangentVector<T>, s: T) -> Result<SurfacePoint<T>> {
    check_direction(p, dir)?;
    if !(s >= T::zero() && s.is_finite()) {
        return Err(Error::InvalidArgument(format!("geodesic length {s} must be finite and non-negative")));
    }
    let g = p.geometry;
    let (a, v, r) = (p.coords, dir.v, g.r);
    let raw = match g.kind {
        GeometryKind::Euclidean => a + v * s,
        GeometryKind::Spherical => {
            let (sn, cs) = (s / r).sin_cos();
            a * cs + v * (r * sn)
        }
        GeometryKind::Hyperbolic => {
            let t = s / r;
            a * t.cosh() + v * (r * t.sinh())
        }
    };
    settle(&g, raw)
}

/// Unit direction at `p` of the shortest geodesic towards `q`.
pub fn log_map<T: Scalar>(p: &SurfacePoint<T>, q: &SurfacePoint<T>) -> Result<TangentVector<T>> {
    let g = same_geometry(p, q)?;
    let (a, b, r) = (p.coords, q.coords, g.r);
    if g.kind == GeometryKind::Spherical && a.dot(b) / (r * r) < -T::one() + g.tol.antipodal {
        return Err(Error::AntipodalPoints);
    }
    if distance(p, q)? < g.tol.coincident * r {
        return Err(Error::CoincidentPoints);
    }
    let delta = b - a;
    let w = match g.kind {
        GeometryKind::Euclidean => Vec3::new(delta.x, delta.y, T::zero()),
        _ => {
            // Project the chord (not q itself) so nearby points keep full precision.
            let form = g.form();
            delta - a * (form.dot(delta, a) / form.dot(a, a))
        }
    };
    let n2 = g.form().dot(w, w);
    if !(n2 > T::zero()) {
        return Err(Error::CoincidentPoints);
    }
    Ok(TangentVector { base: *p, v: w * (T::one() / n2.sqrt()) })
}

/// Interior angle at `vertex` between the geodesics to `p` and `q`, in `[0, π]`.
pub fn angle_at<T: Scalar>(vertex: &SurfacePoint<T>, p: &SurfacePoint<T>, q: &SurfacePoint<T>) -> Result<T> {
    let u = log_map(vertex, p)?;
    let v = log_map(vertex, q)?;
    let form = vertex.geometry.form();
    let d = u.v - v.v;
    let s = u.v + v.v;
    let nd = form.dot(d, d).max(T::zero()).sqrt();
    let ns = form.dot(s, s).max(T::zero()).sqrt();
    Ok(T::two() * nd.atan2(ns))
}

/// An ambient isometry taking `p` to the pole of its geometry.
pub fn isometry_to_pole<T: Scalar>(p: &SurfacePoint<T>) -> Result<Isometry<T>> {
    let g = p.geometry;
    if g.kind == GeometryKind::Euclidean {
        return Ok(Isometry::translation(-p.coords));
    }
    let form = g.form();
    let (e1, e2) = g.tangent_frame(p)?;
    let n = p.coords * (T::one() / g.r);
    // L maps the standard frame to (e1, e2, n); its form-inverse is G Lᵀ G.
    let l = Mat3::from_cols(e1.v, e2.v, n);
    let gram = form.gram::<T>();
    let m = gram.mul_mat(&l.transpose()).mul_mat(&gram);
    validate_isometry_with(m, form, &g.tol)
}

fn isometry_fits<T: Scalar>(m: &Isometry<T>, g: &Geometry<T>) -> Result<()> {
    if m.form() != g.form() {
        return Err(Error::GeometryMismatch);
    }
    let t = m.translation_part();
    let mat = m.matrix();
    let tol = g.tol.lin * T::one().max(mat.max_abs());
    let ok = match g.kind {
        GeometryKind::Euclidean => {
            t.z == T::zero()
                && mat.get(2, 0).abs() <= tol
                && mat.get(2, 1).abs() <= tol
                && mat.get(0, 2).abs() <= tol
                && mat.get(1, 2).abs() <= tol
        }
        _ => t == Vec3::zero(),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::GeometryMismatch)
    }
}

pub fn apply_isometry<T: Scalar>(m: &Isometry<T>, p: &SurfacePoint<T>) -> Result<SurfacePoint<T>> {
    isometry_fits(m, &p.geometry)?;
    settle(&p.geometry, m.apply(p.coords))
}

/// Pushes a tangent vector forward along an isometry.
pub fn apply_isometry_tangent<T: Scalar>(m: &Isometry<T>, v: &TangentVector<T>) -> Result<TangentVector<T>> {
    let base = apply_isometry(m, &v.base)?;
    let mut w = m.apply_linear(v.v);
    if base.geometry.kind == GeometryKind::Euclidean {
        w.z = T::zero();
    }
    TangentVector::new(base, w)
}
