//! Bilinear algebra on ambient 3-space: the Euclidean form `x² + y² + z²`
//! and the Minkowski form `x² + y² − z²`.

use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tolerance::Tolerances;

/// A point or direction in ambient 3-space.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vec3<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Scalar> Vec3<T> {
    pub const fn new(x: T, y: T, z: T) -> Self {
        Self { x, y, z }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero())
    }

    pub fn unit_x() -> Self {
        Self::new(T::one(), T::zero(), T::zero())
    }

    pub fn unit_y() -> Self {
        Self::new(T::zero(), T::one(), T::zero())
    }

    pub fn unit_z() -> Self {
        Self::new(T::zero(), T::zero(), T::one())
    }

    pub fn from_array(a: [T; 3]) -> Self {
        Self::new(a[0], a[1], a[2])
    }

    pub fn to_array(self) -> [T; 3] {
        [self.x, self.y, self.z]
    }

    /// Plain Euclidean dot product, whatever the ambient form.
    pub fn dot(self, o: Self) -> T {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Self) -> Self {
        Self::new(self.y * o.z - self.z * o.y, self.z * o.x - self.x * o.z, self.x * o.y - self.y * o.x)
    }

    /// Euclidean length, computed with `hypot` to avoid overflow.
    pub fn norm(self) -> T {
        self.x.hypot(self.y).hypot(self.z)
    }

    pub fn max_abs(self) -> T {
        self.x.abs().max(self.y.abs()).max(self.z.abs())
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn map(self, f: impl Fn(T) -> T) -> Self {
        Self::new(f(self.x), f(self.y), f(self.z))
    }

    pub fn cast<U: Scalar>(self) -> Vec3<U> {
        Vec3::new(U::c(self.x.f64()), U::c(self.y.f64()), U::c(self.z.f64()))
    }
}

impl<T: Scalar> Add for Vec3<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<T: Scalar> AddAssign for Vec3<T> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<T: Scalar> Sub for Vec3<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<T: Scalar> Neg for Vec3<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

impl<T: Scalar> Mul<T> for Vec3<T> {
    type Output = Self;
    fn mul(self, k: T) -> Self {
        Self::new(self.x * k, self.y * k, self.z * k)
    }
}

impl<T> Index<usize> for Vec3<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        match i {
            0 => &self.x,
            1 => &self.y,
            2 => &self.z,
            _ => panic!("Vec3 index {i} out of range"),
        }
    }
}

/// Row-major 3×3 matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mat3<T> {
    pub rows: [[T; 3]; 3],
}

impl<T: Scalar> Mat3<T> {
    pub const fn from_rows(rows: [[T; 3]; 3]) -> Self {
        Self { rows }
    }

    pub fn from_cols(c0: Vec3<T>, c1: Vec3<T>, c2: Vec3<T>) -> Self {
        Self::from_rows([[c0.x, c1.x, c2.x], [c0.y, c1.y, c2.y], [c0.z, c1.z, c2.z]])
    }

    pub fn identity() -> Self {
        Self::diag(T::one(), T::one(), T::one())
    }

    pub fn diag(a: T, b: T, c: T) -> Self {
        let o = T::zero();
        Self::from_rows([[a, o, o], [o, b, o], [o, o, c]])
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.rows[i][j]
    }

    pub fn row(&self, i: usize) -> Vec3<T> {
        Vec3::from_array(self.rows[i])
    }

    pub fn transpose(&self) -> Self {
        let r = &self.rows;
        Self::from_rows([
            [r[0][0], r[1][0], r[2][0]],
            [r[0][1], r[1][1], r[2][1]],
            [r[0][2], r[1][2], r[2][2]],
        ])
    }

    pub fn mul_vec(&self, v: Vec3<T>) -> Vec3<T> {
        Vec3::new(self.row(0).dot(v), self.row(1).dot(v), self.row(2).dot(v))
    }

    pub fn mul_mat(&self, o: &Self) -> Self {
        let mut out = [[T::zero(); 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).fold(T::zero(), |acc, k| acc + self.rows[i][k] * o.rows[k][j]);
            }
        }
        Self::from_rows(out)
    }

    pub fn det(&self) -> T {
        self.row(0).dot(self.row(1).cross(self.row(2)))
    }

    pub fn max_abs(&self) -> T {
        self.rows.iter().flatten().fold(T::zero(), |acc, v| acc.max(v.abs()))
    }
}

/// Signature of a diagonal bilinear form on ambient 3-space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BilinearForm {
    /// `(+,+,+)`
    Euclidean,
    /// `(+,+,−)`
    Lorentzian,
}

impl BilinearForm {
    /// Diagonal entry of the Gram matrix for axis `i`.
    pub fn sign<T: Scalar>(self, i: usize) -> T {
        match (self, i) {
            (BilinearForm::Lorentzian, 2) => -T::one(),
            _ => T::one(),
        }
    }

    pub fn gram<T: Scalar>(self) -> Mat3<T> {
        Mat3::diag(self.sign(0), self.sign(1), self.sign(2))
    }

    pub fn dot<T: Scalar>(self, u: Vec3<T>, v: Vec3<T>) -> T {
        match self {
            BilinearForm::Euclidean => u.x * v.x + u.y * v.y + u.z * v.z,
            BilinearForm::Lorentzian => u.x * v.x + u.y * v.y - u.z * v.z,
        }
    }

    /// Applies the Gram matrix, i.e. flips `z` for the Lorentzian form.
    pub fn flip<T: Scalar>(self, v: Vec3<T>) -> Vec3<T> {
        match self {
            BilinearForm::Euclidean => v,
            BilinearForm::Lorentzian => Vec3::new(v.x, v.y, -v.z),
        }
    }
}

pub fn form_dot<T: Scalar>(u: Vec3<T>, v: Vec3<T>, form: BilinearForm) -> T {
    form.dot(u, v)
}

/// An affine map of ambient space whose linear part preserves a bilinear form.
///
/// Curved surfaces only use the linear part (`translation` is zero). The
/// flat plane additionally needs translations, which preserve the Euclidean
/// form trivially.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Isometry<T> {
    m: Mat3<T>,
    translation: Vec3<T>,
    form: BilinearForm,
    orientation_preserving_sheet: bool,
}

impl<T: Scalar> Isometry<T> {
    pub fn identity(form: BilinearForm) -> Self {
        Self { m: Mat3::identity(), translation: Vec3::zero(), form, orientation_preserving_sheet: true }
    }

    pub fn rotation_z(phi: T, form: BilinearForm) -> Self {
        let (s, c) = phi.sin_cos();
        let (o, l) = (T::zero(), T::one());
        Self { m: Mat3::from_rows([[c, -s, o], [s, c, o], [o, o, l]]), ..Self::identity(form) }
    }

    /// Rotation about the x axis; an isometry of the Euclidean form only.
    pub fn rotation_x(phi: T) -> Self {
        let (s, c) = phi.sin_cos();
        let (o, l) = (T::zero(), T::one());
        Self {
            m: Mat3::from_rows([[l, o, o], [o, c, -s], [o, s, c]]),
            ..Self::identity(BilinearForm::Euclidean)
        }
    }

    /// Lorentz boost in the x–z plane with rapidity `t`.
    pub fn boost_x(t: T) -> Self {
        let (s, c) = (t.sinh(), t.cosh());
        let (o, l) = (T::zero(), T::one());
        Self {
            m: Mat3::from_rows([[c, o, s], [o, l, o], [s, o, c]]),
            ..Self::identity(BilinearForm::Lorentzian)
        }
    }

    /// Pure translation of the Euclidean ambient space.
    pub fn translation(v: Vec3<T>) -> Self {
        Self { translation: v, ..Self::identity(BilinearForm::Euclidean) }
    }

    pub fn matrix(&self) -> &Mat3<T> {
        &self.m
    }

    pub fn translation_part(&self) -> Vec3<T> {
        self.translation
    }

    pub fn form(&self) -> BilinearForm {
        self.form
    }

    /// Only meaningful for the Lorentzian form: the map keeps the upper sheet.
    pub fn orientation_preserving_sheet(&self) -> bool {
        self.orientation_preserving_sheet
    }

    pub fn apply(&self, v: Vec3<T>) -> Vec3<T> {
        self.m.mul_vec(v) + self.translation
    }

    pub fn apply_linear(&self, v: Vec3<T>) -> Vec3<T> {
        self.m.mul_vec(v)
    }

    /// `self ∘ inner`, revalidated.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if self.form != inner.form {
            return Err(Error::GeometryMismatch);
        }
        let mut out = validate_isometry(self.m.mul_mat(&inner.m), self.form)?;
        out.translation = self.m.mul_vec(inner.translation) + self.translation;
        Ok(out)
    }

    /// Inverse map. The linear part is `G mᵀ G`, exact for a form isometry.
    pub fn inverse(&self) -> Self {
        let g = self.form.gram::<T>();
        let m = g.mul_mat(&self.m.transpose()).mul_mat(&g);
        Self { m, translation: -m.mul_vec(self.translation), ..*self }
    }

    /// Largest entry of `|mᵀ G m − G|`.
    pub fn residual(&self) -> T {
        form_residual(&self.m, self.form)
    }
}

fn form_residual<T: Scalar>(m: &Mat3<T>, form: BilinearForm) -> T {
    let g = form.gram::<T>();
    let lhs = m.transpose().mul_mat(&g).mul_mat(m);
    let mut worst = T::zero();
    for i in 0..3 {
        for j in 0..3 {
            worst = worst.max((lhs.get(i, j) - g.get(i, j)).abs());
        }
    }
    worst
}

pub fn validate_isometry<T: Scalar>(m: Mat3<T>, form: BilinearForm) -> Result<Isometry<T>> {
    validate_isometry_with(m, form, &Tolerances::default())
}

/// Accepts `m` when `mᵀ G m = G` entrywise within `tol.lin`, scaled by the
/// squared magnitude of `m` for large boosts.
pub fn validate_isometry_with<T: Scalar>(
    m: Mat3<T>,
    form: BilinearForm,
    tol: &Tolerances<T>,
) -> Result<Isometry<T>> {
    let residual = form_residual(&m, form);
    let scale = T::one().max(m.max_abs());
    if !(residual <= tol.lin * scale * scale) {
        return Err(Error::NotAnIsometry { residual: residual.f64() });
    }
    let m33 = m.get(2, 2);
    if form == BilinearForm::Lorentzian && !(m33 > T::zero()) {
        return Err(Error::WrongSheet { m33: m33.f64() });
    }
    Ok(Isometry { m, translation: Vec3::zero(), form, orientation_preserving_sheet: true })
}

/// Two vectors completing `p` to a form-orthonormal frame.
///
/// The first is the coordinate axis least aligned with `p`, projected off
/// `p` and normalized; the second is the form-dual cross product. For the
/// Lorentzian form `p` must be timelike, since only then is its orthogonal
/// complement positive definite.
pub fn orthonormal_frame_at<T: Scalar>(p: Vec3<T>, form: BilinearForm) -> Result<(Vec3<T>, Vec3<T>)> {
    let pp = form.dot(p, p);
    if !p.is_finite() || pp == T::zero() || (form == BilinearForm::Lorentzian && pp > T::zero()) {
        return Err(Error::DegenerateVector);
    }
    let scale = p.max_abs();
    if pp.abs() <= T::epsilon() * scale * scale {
        return Err(Error::DegenerateVector);
    }
    let axis = if p.x.abs() <= p.y.abs() && p.x.abs() <= p.z.abs() {
        Vec3::unit_x()
    } else if p.y.abs() <= p.z.abs() {
        Vec3::unit_y()
    } else {
        Vec3::unit_z()
    };
    let e1 = axis - p * (form.dot(axis, p) / pp);
    let e1 = e1 * (T::one() / form.dot(e1, e1).sqrt());
    // G (p × e1) is form-orthogonal to both p and e1.
    let e2 = form.flip(p.cross(e1));
    let n2 = form.dot(e2, e2);
    if !(n2 > T::zero()) {
        return Err(Error::DegenerateVector);
    }
    let e2 = e2 * (T::one() / n2.sqrt());
    Ok((e1, e2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const E: BilinearForm = BilinearForm::Euclidean;
    const L: BilinearForm = BilinearForm::Lorentzian;

    fn v(x: f64, y: f64, z: f64) -> Vec3<f64> {
        Vec3::new(x, y, z)
    }

    #[test]
    fn form_dot_examples() {
        assert_eq!(form_dot(v(1., 0., 0.), v(1., 0., 0.), E), 1.0);
        assert_eq!(form_dot(v(0., 0., 1.), v(0., 0., 1.), L), -1.0);
        assert_eq!(form_dot(v(1., 1., 1.), v(1., 1., 1.), L), 1.0);
    }

    #[test]
    fn identity_validates_for_both_forms() {
        assert!(validate_isometry(Mat3::<f64>::identity(), E).is_ok());
        assert!(validate_isometry(Mat3::<f64>::identity(), L).is_ok());
    }

    #[test]
    fn z_rotations_validate_euclidean() {
        for k in 0..32 {
            let phi = k as f64 * 0.37;
            let r = Isometry::<f64>::rotation_z(phi, E);
            assert!(validate_isometry(*r.matrix(), E).is_ok(), "phi = {phi}");
        }
    }

    #[test]
    fn boost_validates_lorentzian() {
        // hand-expanded mᵀGm for the t = 0.7 boost
        let t: f64 = 0.7;
        let (c, s) = (t.cosh(), t.sinh());
        let m = [[c, 0., s], [0., 1., 0.], [s, 0., c]];
        let g = [1., 1., -1.];
        for i in 0..3 {
            for j in 0..3 {
                let entry: f64 = (0..3).map(|k| m[k][i] * g[k] * m[k][j]).sum();
                let want = if i == j { g[i] } else { 0.0 };
                assert!((entry - want).abs() < 1e-15);
            }
        }
        let iso = validate_isometry(Mat3::from_rows(m), L).unwrap();
        assert!(iso.orientation_preserving_sheet());
        // the same matrix is not a Euclidean isometry
        assert!(matches!(validate_isometry(Mat3::from_rows(m), E), Err(Error::NotAnIsometry { .. })));
    }

    #[test]
    fn time_reversal_is_wrong_sheet() {
        let m = Mat3::<f64>::diag(1., 1., -1.);
        assert!(matches!(validate_isometry(m, L), Err(Error::WrongSheet { .. })));
        assert!(validate_isometry(m, E).is_ok());
    }

    #[test]
    fn scaling_is_not_an_isometry() {
        let m = Mat3::<f64>::diag(1.0, 1.0, 1.0 + 1e-9);
        assert!(validate_isometry(m, E).is_err());
    }

    fn assert_frame(p: Vec3<f64>, form: BilinearForm) {
        // Lorentzian frames far from the apex have large Euclidean entries;
        // residuals are measured against those magnitudes.
        let (e1, e2) = orthonormal_frame_at(p, form).unwrap();
        let (n1, n2, np) = (e1.norm(), e2.norm(), p.norm());
        assert!((form.dot(e1, e1) - 1.0).abs() <= 1e-12 * n1 * n1);
        assert!((form.dot(e2, e2) - 1.0).abs() <= 1e-12 * n2 * n2);
        assert!(form.dot(e1, e2).abs() <= 1e-12 * n1 * n2);
        assert!(form.dot(e1, p).abs() <= 1e-12 * n1 * np);
        assert!(form.dot(e2, p).abs() <= 1e-12 * n2 * np);
    }

    #[test]
    fn frame_at_pole() {
        assert_frame(v(0., 0., 1.), E);
        let (e1, e2) = orthonormal_frame_at(v(0., 0., 1.), L).unwrap();
        assert_eq!(e1.z, 0.0);
        assert_eq!(e2.z, 0.0);
        assert_frame(v(0., 0., 1.), L);
    }

    #[test]
    fn frame_on_boosted_point() {
        let t: f64 = 0.7;
        assert_frame(v(t.sinh(), 0., t.cosh()), L);
    }

    #[test]
    fn frame_rejects_degenerate_vectors() {
        assert_eq!(orthonormal_frame_at(Vec3::<f64>::zero(), E), Err(Error::DegenerateVector));
        assert_eq!(orthonormal_frame_at(v(1., 0., 1.), L), Err(Error::DegenerateVector));
        assert_eq!(orthonormal_frame_at(v(2., 0., 1.), L), Err(Error::DegenerateVector));
    }

    #[test]
    fn inverse_undoes_map() {
        let a = Isometry::<f64>::boost_x(1.3).compose(&Isometry::rotation_z(0.4, L)).unwrap();
        let p = v(0.3, -0.2, 1.7);
        let back = a.inverse().apply(a.apply(p));
        assert!((back - p).norm() < 1e-13);
        let t = Isometry::<f64>::translation(v(1., 2., 0.)).compose(&Isometry::rotation_z(0.9, E)).unwrap();
        assert!((t.inverse().apply(t.apply(p)) - p).norm() < 1e-14);
    }

    fn vec3() -> impl Strategy<Value = Vec3<f64>> {
        (-5.0..5.0f64, -5.0..5.0f64, -5.0..5.0f64).prop_map(|(x, y, z)| v(x, y, z))
    }

    fn form() -> impl Strategy<Value = BilinearForm> {
        prop_oneof![Just(E), Just(L)]
    }

    fn lorentz_iso() -> impl Strategy<Value = Isometry<f64>> {
        (-3.0..3.0f64, -2.0..2.0f64, -3.0..3.0f64).prop_map(|(a, t, b)| {
            Isometry::rotation_z(a, L)
                .compose(&Isometry::boost_x(t))
                .and_then(|m| m.compose(&Isometry::rotation_z(b, L)))
                .unwrap()
        })
    }

    fn euclid_iso() -> impl Strategy<Value = Isometry<f64>> {
        (-3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64).prop_map(|(a, b, c)| {
            Isometry::rotation_z(a, E)
                .compose(&Isometry::rotation_x(b))
                .and_then(|m| m.compose(&Isometry::rotation_z(c, E)))
                .unwrap()
        })
    }

    proptest! {
        #[test]
        fn bilinear_and_symmetric(f in form(), u in vec3(), w in vec3(), x in vec3(),
                                  a in -3.0..3.0f64, b in -3.0..3.0f64) {
            let lhs = f.dot(u * a + w * b, x);
            let rhs = a * f.dot(u, x) + b * f.dot(w, x);
            let scale = 1.0 + (u.norm() * a.abs() + w.norm() * b.abs()) * x.norm();
            prop_assert!((lhs - rhs).abs() <= 1e-12 * scale);
            prop_assert_eq!(f.dot(u, x), f.dot(x, u));
        }

        #[test]
        fn lorentz_isometries_preserve_form(m in lorentz_iso(), u in vec3(), w in vec3()) {
            let d = (L.dot(m.apply(u), m.apply(w)) - L.dot(u, w)).abs();
            prop_assert!(d <= 1e-10 * (1.0 + u.norm() * w.norm()), "d = {}", d);
        }

        #[test]
        fn euclid_isometries_preserve_form(m in euclid_iso(), u in vec3(), w in vec3()) {
            prop_assert!((E.dot(m.apply(u), m.apply(w)) - E.dot(u, w)).abs() <= 1e-10);
        }

        #[test]
        fn composition_closure(a in lorentz_iso(), b in lorentz_iso()) {
            prop_assert!(a.compose(&b).is_ok());
        }

        #[test]
        fn frames_on_random_timelike_points(x in -3.0..3.0f64, y in -3.0..3.0f64, r in 0.1..4.0f64) {
            let z = (x * x + y * y + r * r).sqrt();
            assert_frame(v(x, y, z), L);
        }

        #[test]
        fn frames_on_random_euclidean_points(p in vec3()) {
            prop_assume!(p.norm() > 1e-3);
            assert_frame(p, E);
        }
    }
}
