//! Plane geometry of constant curvature on ambient embeddings.
//!
//! The three model surfaces share one carrier type, a point in ambient
//! 3-space:
//!
//! * the Euclidean plane, embedded as `z = 0`;
//! * the sphere `x² + y² + z² = r²` inside Euclidean 3-space;
//! * the upper sheet of the hyperboloid `x² + y² − z² = −r²` inside
//!   Minkowski 3-space.
//!
//! On top of the surfaces sit geodesic disks and their areas (closed form
//! plus an independent quadrature oracle), equiangular quadrilaterals, and
//! a verification harness that measures how well the diagonal Pythagorean
//! identity `area(O_AB) + area(O_AC) = area(O_AD)` and each step of its
//! embedding proof hold numerically.
//!
//! Everything is generic over the scalar type through [`Scalar`]; the
//! `*64` / `*32` aliases at the crate root pin the common choices.

// `!(x < bound)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod constructions;
pub mod disks;
pub mod error;
pub mod forms;
pub mod quadrature;
pub mod scalar;
pub mod surfaces;
pub mod tolerance;
pub mod verify;

pub use constructions::{
    build_equiangular_quadrilateral, check_equiangular, check_proper, split_to_proper_triangle,
    EquiangularQuadrilateral, ProperTriangle, TriangleVertex,
};
pub use disks::{
    circle_section_plane, disk_area, disk_area_quadrature, slice_area, slice_area_quadrature, Disk,
    SectionPlane, Slice,
};
pub use error::{Error, Result};
pub use forms::{form_dot, orthonormal_frame_at, validate_isometry, BilinearForm, Isometry, Mat3, Vec3};
pub use scalar::Scalar;
pub use surfaces::{
    angle_at, apply_isometry, apply_isometry_tangent, distance, exp_map, isometry_to_pole, log_map,
    project_to_surface, GeodesicSegment, Geometry, GeometryKind, SurfacePoint, TangentVector,
};
pub use tolerance::Tolerances;
pub use verify::{
    breadcrust_residual, coplanarity_residual, parallelogram_residual, pythagoras_residual,
    pythagoras_residual_quadrature, pythagorean_areas, record_for, rectangle_residual,
    rectangle_residual_under_form, run_trials, seeded_direction, CriterionSummary, CriterionTolerances,
    ParallelogramResidual, PythagorasResidual, TrialConfig, TrialRecord, VerificationReport,
};

pub type Vec3f64 = Vec3<f64>;
pub type Vec3f32 = Vec3<f32>;
pub type Isometry64 = Isometry<f64>;
pub type Isometry32 = Isometry<f32>;
pub type Geometry64 = Geometry<f64>;
pub type Geometry32 = Geometry<f32>;
pub type SurfacePoint64 = SurfacePoint<f64>;
pub type SurfacePoint32 = SurfacePoint<f32>;
pub type TangentVector64 = TangentVector<f64>;
pub type TangentVector32 = TangentVector<f32>;
pub type Disk64 = Disk<f64>;
pub type Disk32 = Disk<f32>;
pub type Slice64 = Slice<f64>;
pub type Slice32 = Slice<f32>;
pub type Quadrilateral64 = EquiangularQuadrilateral<f64>;
pub type Quadrilateral32 = EquiangularQuadrilateral<f32>;
pub type Tolerances64 = Tolerances<f64>;
pub type Tolerances32 = Tolerances<f32>;
