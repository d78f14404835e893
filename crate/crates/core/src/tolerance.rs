use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// Every numerical threshold the kernel uses.
///
/// [`Tolerances::default`] returns the `f64` values and, for narrower
/// scalars, floors each one at a fixed multiple of machine epsilon so the
/// same code stays usable in `f32`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances<T> {
    /// Linear-algebra residuals (isometry and frame checks).
    pub lin: T,
    /// Surface membership and tangency, relative to `r`.
    pub surf: T,
    /// Angle comparisons, radians.
    pub ang: T,
    /// How far an inverse-trig argument may stray outside its domain before it is an error.
    pub domain: T,
    /// Antipodal detection on the sphere: `<p,q>/r² < −1 + antipodal`.
    pub antipodal: T,
    /// Points closer than `coincident·r` have no log direction.
    pub coincident: T,
}

impl<T: Scalar> Default for Tolerances<T> {
    fn default() -> Self {
        let eps = T::epsilon();
        let floor = |v: f64, k: f64| T::c(v).max(eps * T::c(k));
        Self {
            lin: floor(1e-12, 64.0),
            surf: floor(1e-10, 256.0),
            ang: floor(1e-9, 1024.0),
            domain: floor(1e-8, 4096.0),
            antipodal: floor(1e-12, 64.0),
            coincident: floor(1e-12, 64.0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f64_defaults_are_the_documented_values() {
        let t = Tolerances::<f64>::default();
        assert_eq!(t.lin, 1e-12);
        assert_eq!(t.surf, 1e-10);
        assert_eq!(t.ang, 1e-9);
        assert_eq!(t.domain, 1e-8);
    }

    #[test]
    fn f32_defaults_are_floored_above_epsilon() {
        let t = Tolerances::<f32>::default();
        assert!(t.lin > f32::EPSILON);
        assert!(t.surf > t.lin);
    }
}
