//! Geodesic disks, horizontal slices, and their areas.
//!
//! A slice of the sphere (or hyperboloid) between the planes `z = z1` and
//! `z = z2` has area `(z2 − z1)·2πr` regardless of where it sits. A disk
//! centered at the pole is such a slice, bounded by the plane of its rim and
//! the plane touching the pole, which gives the closed forms in
//! [`disk_area`]. [`disk_area_quadrature`] integrates the surface of
//! revolution directly and never touches those closed forms.

use crate::error::{Error, Result};
use crate::forms::Vec3;
use crate::quadrature::integrate;
use crate::scalar::Scalar;
use crate::surfaces::{isometry_to_pole, Geometry, GeometryKind, SurfacePoint};

/// Geodesic disk: all points within `rho` of `center`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disk<T> {
    center: SurfacePoint<T>,
    rho: T,
}

impl<T: Scalar> Disk<T> {
    /// Spherical disks must stay strictly below the antipode (`rho < πr`).
    pub fn new(center: SurfacePoint<T>, rho: T) -> Result<Self> {
        if !(rho >= T::zero() && rho.is_finite()) {
            return Err(Error::InvalidArgument(format!("disk radius {rho} must be finite and non-negative")));
        }
        if let Some(limit) = center.geometry().injectivity_radius() {
            if !(rho < limit) {
                return Err(Error::InvalidArgument(format!(
                    "spherical disk radius {rho} must be below pi*r = {limit}"
                )));
            }
        }
        Ok(Self { center, rho })
    }

    pub fn center(&self) -> &SurfacePoint<T> {
        &self.center
    }

    pub fn rho(&self) -> T {
        self.rho
    }

    pub fn geometry(&self) -> &Geometry<T> {
        self.center.geometry()
    }

    /// Height of the rim plane when the disk is moved to the pole.
    fn rim_height(&self) -> T {
        let r = self.geometry().scale();
        let t = self.rho / r;
        match self.geometry().kind() {
            GeometryKind::Spherical => r * t.cos(),
            _ => r * t.cosh(),
        }
    }
}

/// The ambient plane `{x : normal · x = offset}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectionPlane<T> {
    pub normal: Vec3<T>,
    pub offset: T,
}

impl<T: Scalar> SectionPlane<T> {
    pub fn new(normal: Vec3<T>, offset: T) -> Result<Self> {
        if !(normal.norm() > T::zero()) {
            return Err(Error::DegenerateVector);
        }
        Ok(Self { normal, offset })
    }

    /// Signed Euclidean distance of `p` from the plane.
    pub fn signed_distance(&self, p: Vec3<T>) -> T {
        (self.normal.dot(p) - self.offset) / self.normal.norm()
    }
}

/// Part of a curved surface between the horizontal planes `z = z1` and `z = z2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Slice<T> {
    geometry: Geometry<T>,
    z1: T,
    z2: T,
}

impl<T: Scalar> Slice<T> {
    pub fn new(geometry: Geometry<T>, z1: T, z2: T) -> Result<Self> {
        let r = geometry.scale();
        let ok = match geometry.kind() {
            GeometryKind::Euclidean => return Err(Error::UnsupportedGeometry("euclidean")),
            GeometryKind::Spherical => -r <= z1 && z1 <= z2 && z2 <= r,
            GeometryKind::Hyperbolic => r <= z1 && z1 <= z2 && z2.is_finite(),
        };
        if !ok {
            return Err(Error::InvalidArgument(format!(
                "slice [{z1}, {z2}] is not within the {} surface's z-range",
                geometry.kind().name()
            )));
        }
        Ok(Self { geometry, z1, z2 })
    }

    pub fn geometry(&self) -> &Geometry<T> {
        &self.geometry
    }

    pub fn bounds(&self) -> (T, T) {
        (self.z1, self.z2)
    }

    pub fn width(&self) -> T {
        self.z2 - self.z1
    }
}

/// Plane whose intersection with the surface is the boundary circle of `d`.
pub fn circle_section_plane<T: Scalar>(d: &Disk<T>) -> Result<SectionPlane<T>> {
    let g = d.geometry();
    if g.kind() == GeometryKind::Euclidean {
        return Err(Error::UnsupportedGeometry("euclidean"));
    }
    // At the pole the rim is z = h; pulled back through M it is (row₃ M)·x = h.
    let m = isometry_to_pole(d.center())?;
    SectionPlane::new(m.matrix().row(2), d.rim_height())
}

/// Area of a horizontal slice, `(z2 − z1)·2πr`.
pub fn slice_area<T: Scalar>(s: &Slice<T>) -> T {
    s.width() * T::two() * T::PI() * s.geometry.scale()
}

/// Closed-form disk area.
///
/// Sphere `2πr²(1 − cos(ρ/r))`, hyperboloid `2πr²(cosh(ρ/r) − 1)`, plane
/// `πρ²`. The curved forms are evaluated as `4πr²·sin²(ρ/2r)` and
/// `4πr²·sinh²(ρ/2r)` to avoid cancellation for small disks.
pub fn disk_area<T: Scalar>(d: &Disk<T>) -> T {
    let g = d.geometry();
    let r = g.scale();
    let four_pi_r2 = T::c(4.0) * T::PI() * r * r;
    let half = d.rho / (T::two() * r);
    match g.kind() {
        GeometryKind::Euclidean => T::PI() * d.rho * d.rho,
        GeometryKind::Spherical => {
            let s = half.sin();
            four_pi_r2 * s * s
        }
        GeometryKind::Hyperbolic => {
            let s = half.sinh();
            four_pi_r2 * s * s
        }
    }
}

/// Area of a slice by quadrature of the surface-of-revolution integral.
///
/// The profile is `f(z) = √(r² − z²)` with arclength factor `√(f′² + 1)` on
/// the sphere, and `f(z) = √(z² − r²)` with the Minkowski factor `√(f′² − 1)`
/// on the hyperboloid.
pub fn slice_area_quadrature<T: Scalar>(s: &Slice<T>, tol: T) -> Result<T> {
    let (z1, z2) = s.bounds();
    let r = s.geometry.scale();
    let two_pi = T::two() * T::PI();
    let (integral, _) = match s.geometry.kind() {
        GeometryKind::Spherical => integrate(
            |z: T| {
                let f = (r * r - z * z).max(T::zero()).sqrt();
                let fp = -z / f;
                f * (fp * fp + T::one()).sqrt()
            },
            z1,
            z2,
            tol,
        )?,
        GeometryKind::Hyperbolic => integrate(
            |z: T| {
                let f = (z * z - r * r).max(T::zero()).sqrt();
                let fp = z / f;
                f * (fp * fp - T::one()).max(T::zero()).sqrt()
            },
            z1,
            z2,
            tol,
        )?,
        GeometryKind::Euclidean => return Err(Error::UnsupportedGeometry("euclidean")),
    };
    Ok(two_pi * integral)
}

/// Disk area by quadrature over the cap's z-range once centered at the pole.
///
/// This is the independent oracle for [`disk_area`].
pub fn disk_area_quadrature<T: Scalar>(d: &Disk<T>, tol: T) -> Result<T> {
    let g = *d.geometry();
    if g.kind() == GeometryKind::Euclidean {
        return Err(Error::UnsupportedGeometry("euclidean"));
    }
    if !(tol > T::zero()) {
        return Err(Error::InvalidArgument(format!("quadrature tolerance {tol} must be positive")));
    }
    if d.rho == T::zero() {
        return Ok(T::zero());
    }
    let r = g.scale();
    let h = d.rim_height();
    let slice = match g.kind() {
        GeometryKind::Spherical => Slice::new(g, h.max(-r), r)?,
        _ => Slice::new(g, r, h.max(r))?,
    };
    slice_area_quadrature(&slice, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surfaces::{distance, exp_map, TangentVector};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

    fn sph(r: f64) -> Geometry<f64> {
        Geometry::spherical(r).unwrap()
    }

    fn hyp(r: f64) -> Geometry<f64> {
        Geometry::hyperbolic(r).unwrap()
    }

    // Composite midpoint rule, independent of the crate's quadrature; open,
    // so the singular endpoint factor is never evaluated.
    fn midpoint(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
        let h = (b - a) / n as f64;
        (0..n).map(|i| f(a + h * (i as f64 + 0.5))).sum::<f64>() * h
    }

    #[test]
    fn section_plane_at_pole() {
        let d = Disk::new(sph(1.0).pole(), FRAC_PI_2).unwrap();
        let p = circle_section_plane(&d).unwrap();
        assert!(p.signed_distance(Vec3::new(1.0, 0.0, 0.0)).abs() < 1e-15);
        assert!(p.offset.abs() < 1e-15);

        let d = Disk::new(sph(1.0).pole(), FRAC_PI_3).unwrap();
        let p = circle_section_plane(&d).unwrap();
        assert!((p.offset - 0.5).abs() < 1e-15);
        assert_eq!(p.normal, Vec3::new(0.0, 0.0, 1.0));
    }

    #[test]
    fn hyperbolic_rim_samples_lie_on_plane() {
        let g = hyp(1.0);
        let d = Disk::new(g.pole(), 1.0).unwrap();
        let plane = circle_section_plane(&d).unwrap();
        assert!((plane.offset - 1f64.cosh()).abs() < 1e-15);
        for k in 0..20 {
            let phi = k as f64 * 2.0 * PI / 20.0;
            let dir = TangentVector::new(g.pole(), Vec3::new(phi.cos(), phi.sin(), 0.0)).unwrap();
            let q = exp_map(&g.pole(), &dir, 1.0).unwrap();
            assert!(plane.signed_distance(q.coords()).abs() < 1e-14);
            assert!((distance(&g.pole(), &q).unwrap() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn off_pole_rim_lies_on_plane() {
        for g in [sph(1.7), hyp(0.6)] {
            let dir = TangentVector::new(g.pole(), Vec3::new(0.6, 0.8, 0.0)).unwrap();
            let c = exp_map(&g.pole(), &dir, 0.9 * g.scale()).unwrap();
            let d = Disk::new(c, 0.7 * g.scale()).unwrap();
            let plane = circle_section_plane(&d).unwrap();
            let (e1, e2) = g.tangent_frame(&c).unwrap();
            for k in 0..20 {
                let phi = k as f64 * 2.0 * PI / 20.0;
                let u = TangentVector::new(c, e1.vector() * phi.cos() + e2.vector() * phi.sin()).unwrap();
                let q = exp_map(&c, &u, d.rho()).unwrap();
                assert!(plane.signed_distance(q.coords()).abs() <= 1e-10 * g.scale());
            }
        }
    }

    #[test]
    fn euclidean_section_plane_unsupported() {
        let d = Disk::new(Geometry::<f64>::euclidean().pole(), 1.0).unwrap();
        assert_eq!(circle_section_plane(&d), Err(Error::UnsupportedGeometry("euclidean")));
    }

    #[test]
    fn slice_area_examples() {
        assert_eq!(slice_area(&Slice::new(sph(1.0), 0.3, 0.3).unwrap()), 0.0);
        let whole = slice_area(&Slice::new(sph(1.0), -1.0, 1.0).unwrap());
        assert!((whole - 4.0 * PI).abs() < 1e-15);

        let z2 = 1f64.cosh();
        let s = Slice::new(hyp(1.0), 1.0, z2).unwrap();
        let closed = slice_area(&s);
        assert!((closed - 2.0 * PI * (z2 - 1.0)).abs() < 1e-15);
        assert!((closed - 3.412276).abs() < 1e-6);
        // z = cosh u
        let oracle = 2.0
            * PI
            * midpoint(
                |u| {
                    let z = u.cosh();
                    let f = (z * z - 1.0).sqrt();
                    let fp = z / f;
                    f * (fp * fp - 1.0).sqrt() * u.sinh()
                },
                0.0,
                1.0,
                20_000,
            );
        assert!((closed - oracle).abs() / closed < 1e-7, "{closed} vs {oracle}");
        let q = slice_area_quadrature(&s, 1e-9).unwrap();
        assert!((closed - q).abs() / closed < 1e-7);
    }

    #[test]
    fn slice_validation() {
        assert!(Slice::new(sph(1.0), 0.5, 0.2).is_err());
        assert!(Slice::new(sph(1.0), -1.5, 0.2).is_err());
        assert!(Slice::new(hyp(1.0), 0.5, 2.0).is_err());
        assert!(Slice::new(Geometry::<f64>::euclidean(), 0.0, 0.0).is_err());
    }

    #[test]
    fn disk_area_examples() {
        assert_eq!(disk_area(&Disk::new(sph(1.0).pole(), 0.0).unwrap()), 0.0);
        let hemi = disk_area(&Disk::new(sph(1.0).pole(), FRAC_PI_2).unwrap());
        assert!((hemi - 2.0 * PI).abs() < 1e-14);
        let h = disk_area(&Disk::new(hyp(1.0).pole(), 1.0).unwrap());
        assert!((h - 2.0 * PI * (1f64.cosh() - 1.0)).abs() < 1e-14);
        let q = disk_area_quadrature(&Disk::new(hyp(1.0).pole(), 1.0).unwrap(), 1e-9).unwrap();
        assert!((h - q).abs() / h < 1e-7);
        let f = disk_area(&Disk::new(Geometry::<f64>::euclidean().pole(), 1.0).unwrap());
        assert!((f - PI).abs() < 1e-15);
    }

    #[test]
    fn quadrature_examples() {
        let zero = Disk::new(sph(1.0).pole(), 0.0).unwrap();
        assert_eq!(disk_area_quadrature(&zero, 1e-9).unwrap(), 0.0);
        let hemi = Disk::new(sph(1.0).pole(), FRAC_PI_2).unwrap();
        let hemi = disk_area_quadrature(&hemi, 1e-9).unwrap();
        assert!((hemi - 2.0 * PI).abs() < 2e-9);
        let d = Disk::new(hyp(2.0).pole(), 1.3).unwrap();
        let q = disk_area_quadrature(&d, 1e-9).unwrap();
        assert!((q - disk_area(&d)).abs() / q < 1e-7);
        assert!(disk_area_quadrature(&d, 0.0).is_err());
    }

    #[test]
    fn spherical_disk_must_not_reach_antipode() {
        assert!(Disk::new(sph(1.0).pole(), PI).is_err());
        assert!(Disk::new(sph(1.0).pole(), -0.1).is_err());
    }

    #[test]
    fn area_is_increasing_in_rho() {
        for g in [sph(1.0), hyp(1.0), Geometry::euclidean()] {
            let mut prev = -1.0;
            for k in 0..300 {
                let rho = k as f64 * 0.01;
                let a = disk_area(&Disk::new(g.pole(), rho).unwrap());
                assert!(a > prev);
                prev = a;
            }
        }
    }

    #[test]
    fn additivity() {
        for (g, z) in [(sph(1.3), [-1.2, 0.1, 0.9]), (hyp(0.7), [0.7, 1.5, 9.0])] {
            let a = slice_area(&Slice::new(g, z[0], z[1]).unwrap());
            let b = slice_area(&Slice::new(g, z[1], z[2]).unwrap());
            let c = slice_area(&Slice::new(g, z[0], z[2]).unwrap());
            assert!((a + b - c).abs() <= 1e-12 * c);
        }
    }

    #[test]
    fn euclidean_limit_is_quadratic() {
        let err = |g: Geometry<f64>| (disk_area(&Disk::new(g.pole(), 1.0).unwrap()) - PI).abs();
        for make in [sph as fn(f64) -> Geometry<f64>, hyp] {
            let e: Vec<f64> = [10.0, 100.0, 1000.0].iter().map(|&r| err(make(r))).collect();
            for w in e.windows(2) {
                let ratio = w[0] / w[1];
                assert!((50.0..=200.0).contains(&ratio), "ratio {ratio}");
            }
        }
    }
}
