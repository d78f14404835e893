//! Equiangular quadrilaterals and properly angled triangles.
//!
//! A quadrilateral `ABDC` (cyclic order A, B, D, C) is equiangular exactly
//! when its diagonals `AD` and `BC` have equal length and bisect each other.
//! We build it from that description: walk `s` from the center `O` in
//! directions `u`, `−u`, `u_θ`, `−u_θ`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::surfaces::{angle_at, distance, exp_map, Geometry, GeometryKind, SurfacePoint, TangentVector};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquiangularQuadrilateral<T> {
    pub geometry: Geometry<T>,
    pub a: SurfacePoint<T>,
    pub b: SurfacePoint<T>,
    pub d: SurfacePoint<T>,
    pub c: SurfacePoint<T>,
    pub center: SurfacePoint<T>,
    pub half_diagonal: T,
    pub theta: T,
}

impl<T: Scalar> EquiangularQuadrilateral<T> {
    /// Vertices in cyclic order A, B, D, C.
    pub fn cyclic(&self) -> [SurfacePoint<T>; 4] {
        [self.a, self.b, self.d, self.c]
    }

    /// Interior angles at A, B, D, C.
    pub fn angles(&self) -> Result<[T; 4]> {
        let [a, b, d, c] = self.cyclic();
        Ok([angle_at(&a, &b, &c)?, angle_at(&b, &d, &a)?, angle_at(&d, &c, &b)?, angle_at(&c, &a, &d)?])
    }

    /// Side lengths |AB|, |BD|, |DC|, |CA|.
    pub fn sides(&self) -> Result<[T; 4]> {
        Ok([
            distance(&self.a, &self.b)?,
            distance(&self.b, &self.d)?,
            distance(&self.d, &self.c)?,
            distance(&self.c, &self.a)?,
        ])
    }

    /// Diagonal lengths |AD|, |BC|.
    pub fn diagonals(&self) -> Result<[T; 2]> {
        Ok([distance(&self.a, &self.d)?, distance(&self.b, &self.c)?])
    }
}

/// Which vertex of a [`ProperTriangle`] carries the proper angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TriangleVertex {
    A,
    B,
    C,
}

/// Triangle in which the angle at `proper_vertex` equals the sum of the other two.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProperTriangle<T> {
    pub geometry: Geometry<T>,
    pub a: SurfacePoint<T>,
    pub b: SurfacePoint<T>,
    pub c: SurfacePoint<T>,
    pub proper_vertex: TriangleVertex,
}

impl<T: Scalar> ProperTriangle<T> {
    /// Interior angles at A, B, C.
    pub fn angles(&self) -> Result<[T; 3]> {
        Ok([
            angle_at(&self.a, &self.b, &self.c)?,
            angle_at(&self.b, &self.c, &self.a)?,
            angle_at(&self.c, &self.a, &self.b)?,
        ])
    }
}

/// Largest legal half-diagonal, if the geometry bounds it (`πr/2` on the sphere).
pub fn half_diagonal_bound<T: Scalar>(g: &Geometry<T>) -> Option<T> {
    (g.kind() == GeometryKind::Spherical).then(|| T::FRAC_PI_2() * g.scale())
}

pub fn build_equiangular_quadrilateral<T: Scalar>(
    g: &Geometry<T>,
    center: &SurfacePoint<T>,
    u: &TangentVector<T>,
    theta: T,
    s: T,
) -> Result<EquiangularQuadrilateral<T>> {
    if center.geometry() != g {
        return Err(Error::GeometryMismatch);
    }
    if !(theta > T::zero() && theta < T::PI()) {
        return Err(Error::ThetaOutOfRange(theta.f64()));
    }
    if !(s > T::zero() && s.is_finite()) {
        return Err(Error::InvalidArgument(format!("half-diagonal {s} must be positive and finite")));
    }
    if let Some(bound) = half_diagonal_bound(g) {
        if !(s < bound) {
            return Err(Error::HalfDiagonalTooLarge { s: s.f64(), bound: bound.f64() });
        }
    }
    let u_theta = u.rotated(theta);
    Ok(EquiangularQuadrilateral {
        geometry: *g,
        a: exp_map(center, u, s)?,
        d: exp_map(center, &-*u, s)?,
        b: exp_map(center, &u_theta, s)?,
        c: exp_map(center, &-u_theta, s)?,
        center: *center,
        half_diagonal: s,
        theta,
    })
}

/// Cuts along the diagonal `BC`, keeping triangle `ABC` with proper angle at `A`.
pub fn split_to_proper_triangle<T: Scalar>(q: &EquiangularQuadrilateral<T>) -> ProperTriangle<T> {
    ProperTriangle { geometry: q.geometry, a: q.a, b: q.b, c: q.c, proper_vertex: TriangleVertex::A }
}

/// Spread `max − min` of the four interior angles, and whether it is within `tol`.
pub fn check_equiangular<T: Scalar>(q: &EquiangularQuadrilateral<T>, tol: T) -> Result<(T, bool)> {
    let angles = q.angles()?;
    let max = angles.iter().fold(T::neg_infinity(), |m, &a| m.max(a));
    let min = angles.iter().fold(T::infinity(), |m, &a| m.min(a));
    let spread = max - min;
    Ok((spread, spread <= tol))
}

/// `|angle(proper) − angle(other₁) − angle(other₂)|`, and whether it is within `tol`.
pub fn check_proper<T: Scalar>(t: &ProperTriangle<T>, tol: T) -> Result<(T, bool)> {
    let [a, b, c] = t.angles()?;
    let residual = match t.proper_vertex {
        TriangleVertex::A => a - b - c,
        TriangleVertex::B => b - a - c,
        TriangleVertex::C => c - a - b,
    }
    .abs();
    Ok((residual, residual <= tol))
}
