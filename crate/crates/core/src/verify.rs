//! Numerical reproduction of the diagonal Pythagorean identity and of each
//! step of its embedding proof, plus seeded randomized sweeps.
//!
//! Proof-step residuals are measured after moving `A` to the pole:
//!
//! * parallelogram: `(A−B) + (A−C) − (A−D)` as ambient vectors;
//! * coplanarity: normalized volume of the tetrahedron `ABDC`;
//! * rectangle: cosine of the chord angle at `A` (sphere only);
//! * bread-crust: closed-form disk area against quadrature.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::constructions::{
    build_equiangular_quadrilateral, check_equiangular, check_proper, half_diagonal_bound,
    split_to_proper_triangle, EquiangularQuadrilateral,
};
use crate::disks::{disk_area, disk_area_quadrature, Disk};
use crate::error::{Error, Result};
use crate::forms::{BilinearForm, Isometry, Mat3, Vec3};
use crate::scalar::Scalar;
use crate::surfaces::{
    apply_isometry, distance, isometry_to_pole, Geometry, GeometryKind, SurfacePoint, TangentVector,
};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PythagorasResidual<T> {
    pub absolute: T,
    pub relative: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParallelogramResidual<T> {
    /// Euclidean norm of `(A−B) + (A−C) − (A−D)`.
    pub norm: T,
    /// Its z component alone: `BA_z + CA_z − DA_z`.
    pub z: T,
}

/// The three disk radii `|AB|`, `|AC|`, `|AD|` around `A`.
fn pythagorean_disks<T: Scalar>(q: &EquiangularQuadrilateral<T>) -> Result<[Disk<T>; 3]> {
    Ok([
        Disk::new(q.a, distance(&q.a, &q.b)?)?,
        Disk::new(q.a, distance(&q.a, &q.c)?)?,
        Disk::new(q.a, distance(&q.a, &q.d)?)?,
    ])
}

fn residual_from_areas<T: Scalar>(ab: T, ac: T, ad: T) -> PythagorasResidual<T> {
    let absolute = (ab + ac - ad).abs();
    let relative = if ad > T::zero() { absolute / ad } else { absolute };
    PythagorasResidual { absolute, relative }
}

/// Areas of `O_AB`, `O_AC`, `O_AD` from the closed forms.
pub fn pythagorean_areas<T: Scalar>(q: &EquiangularQuadrilateral<T>) -> Result<[T; 3]> {
    Ok(pythagorean_disks(q)?.map(|d| disk_area(&d)))
}

/// `|area(O_AB) + area(O_AC) − area(O_AD)|`, absolute and relative to `area(O_AD)`.
pub fn pythagoras_residual<T: Scalar>(q: &EquiangularQuadrilateral<T>) -> Result<PythagorasResidual<T>> {
    let [ab, ac, ad] = pythagorean_areas(q)?;
    Ok(residual_from_areas(ab, ac, ad))
}

/// Same as [`pythagoras_residual`] with every area taken from quadrature.
pub fn pythagoras_residual_quadrature<T: Scalar>(
    q: &EquiangularQuadrilateral<T>,
    tol: T,
) -> Result<PythagorasResidual<T>> {
    let disks = pythagorean_disks(q)?;
    let mut areas = [T::zero(); 3];
    for (area, d) in areas.iter_mut().zip(&disks) {
        *area = disk_area_quadrature(d, tol)?;
    }
    Ok(residual_from_areas(areas[0], areas[1], areas[2]))
}

/// Vertices A, B, D, C in ambient coordinates after moving `A` to the pole.
fn normalized_vertices<T: Scalar>(q: &EquiangularQuadrilateral<T>) -> Result<[Vec3<T>; 4]> {
    let m = isometry_to_pole(&q.a)?;
    let mut out = [Vec3::zero(); 4];
    for (slot, v) in out.iter_mut().zip(q.cyclic()) {
        *slot = apply_isometry(&m, &v)?.coords();
    }
    Ok(out)
}

pub fn parallelogram_residual<T: Scalar>(
    q: &EquiangularQuadrilateral<T>,
) -> Result<ParallelogramResidual<T>> {
    let [a, b, d, c] = normalized_vertices(q)?;
    let v = (a - b) + (a - c) - (a - d);
    Ok(ParallelogramResidual { norm: v.norm(), z: v.z.abs() })
}

/// `|det[B−A, C−A, D−A]| / scale³` with `scale` the longest of the six chords.
pub fn coplanarity_residual<T: Scalar>(q: &EquiangularQuadrilateral<T>) -> Result<T> {
    let [a, b, d, c] = normalized_vertices(q)?;
    let pts = [a, b, d, c];
    let mut scale = T::zero();
    for i in 0..4 {
        for j in i + 1..4 {
            scale = scale.max((pts[i] - pts[j]).norm());
        }
    }
    if scale == T::zero() {
        return Ok(T::zero());
    }
    let det = Mat3::from_rows([(b - a).to_array(), (c - a).to_array(), (d - a).to_array()]).det();
    Ok(det.abs() / (scale * scale * scale))
}

fn chord_cosine<T: Scalar>(q: &EquiangularQuadrilateral<T>, form: BilinearForm) -> Result<T> {
    let [a, b, _, c] = normalized_vertices(q)?;
    let (u, w) = (b - a, c - a);
    let nu = form.dot(u, u).abs().sqrt();
    let nw = form.dot(w, w).abs().sqrt();
    Ok(form.dot(u, w).abs() / (nu * nw))
}

/// Cosine of the ambient chord angle `BAC`; zero when `ABDC` is an ambient rectangle.
pub fn rectangle_residual<T: Scalar>(q: &EquiangularQuadrilateral<T>) -> Result<T> {
    match q.geometry.kind() {
        GeometryKind::Spherical => chord_cosine(q, BilinearForm::Euclidean),
        k => Err(Error::UnsupportedGeometry(k.name())),
    }
}

/// Chord-angle cosine under the geometry's own ambient form. On the
/// hyperboloid this is exploratory: nothing asserts it vanishes.
pub fn rectangle_residual_under_form<T: Scalar>(q: &EquiangularQuadrilateral<T>) -> Result<T> {
    chord_cosine(q, q.geometry.form())
}

/// Relative gap between closed-form and quadrature area of `d`.
pub fn breadcrust_residual<T: Scalar>(d: &Disk<T>) -> Result<T> {
    if d.rho() == T::zero() {
        return Ok(T::zero());
    }
    let closed = disk_area(d);
    let quad = disk_area_quadrature(d, T::c(1e-9))?;
    Ok((closed - quad).abs() / closed)
}

/// Pass thresholds for a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriterionTolerances {
    /// Relative Pythagorean residual with closed-form areas.
    pub thm: f64,
    /// Relative Pythagorean residual with quadrature areas.
    pub thm_quadrature: f64,
    /// Proof-step residuals (parallelogram relative to `r`, coplanarity, rectangle).
    pub proof: f64,
    /// Closed form vs quadrature.
    pub oracle: f64,
    /// Angle spreads and proper-angle residuals, radians.
    pub angle: f64,
}

impl Default for CriterionTolerances {
    fn default() -> Self {
        Self { thm: 1e-9, thm_quadrature: 1e-6, proof: 1e-10, oracle: 1e-7, angle: 1e-9 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub geometries: Vec<GeometryKind>,
    /// Radii of the curved models; on the plane, the length scale for `s`.
    pub radii: Vec<f64>,
    pub trials: usize,
    /// Half-diagonal range as fractions of its legal bound (`πr/2` on the sphere, `2r` otherwise).
    pub s_frac: (f64, f64),
    /// Diagonal angle range as fractions of `π`.
    pub theta_frac: (f64, f64),
    /// Largest distance of the random center from the pole, in units of `r`
    /// (hyperboloid and plane; sphere centers are uniform).
    pub center_spread: f64,
    pub seed: u64,
    pub tolerances: CriterionTolerances,
}

impl Default for TrialConfig {
    fn default() -> Self {
        Self {
            geometries: vec![GeometryKind::Euclidean, GeometryKind::Spherical, GeometryKind::Hyperbolic],
            radii: vec![0.5, 1.0, 2.0],
            trials: 1000,
            s_frac: (0.05, 0.8),
            theta_frac: (0.15, 0.85),
            center_spread: 1.5,
            seed: 42,
            tolerances: CriterionTolerances::default(),
        }
    }
}

impl TrialConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::ConfigInvalid(m.to_string()));
        if self.trials == 0 {
            return bad("trials per setting must be positive");
        }
        if self.geometries.is_empty() {
            return bad("no geometry selected");
        }
        if self.radii.is_empty() || self.radii.iter().any(|r| !(r.is_finite() && *r > 0.0)) {
            return bad("radii must be a non-empty list of positive finite numbers");
        }
        let (lo, hi) = self.s_frac;
        if !(lo > 0.0 && lo <= hi && hi < 1.0) {
            return bad("s fractions must satisfy 0 < lo <= hi < 1");
        }
        let (lo, hi) = self.theta_frac;
        if !(lo > 0.0 && lo <= hi && hi < 1.0) {
            return bad("theta fractions must satisfy 0 < lo <= hi < 1");
        }
        if !(self.center_spread >= 0.0 && self.center_spread.is_finite()) {
            return bad("center spread must be finite and non-negative");
        }
        let t = &self.tolerances;
        if [t.thm, t.thm_quadrature, t.proof, t.oracle, t.angle].iter().any(|v| !(v.is_finite() && *v > 0.0))
        {
            return bad("tolerances must be positive");
        }
        Ok(())
    }
}

/// Every residual measured on one random quadrilateral.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub index: usize,
    pub geometry: GeometryKind,
    pub r: f64,
    pub theta: f64,
    pub s: f64,
    pub center: [f64; 3],
    pub direction: [f64; 3],
    pub common_angle: f64,
    pub area_ab: f64,
    pub area_ac: f64,
    pub area_ad: f64,
    pub pythagoras_abs: f64,
    pub pythagoras_rel: f64,
    pub pythagoras_quadrature_rel: Option<f64>,
    pub parallelogram: f64,
    pub parallelogram_rel: f64,
    pub parallelogram_z: f64,
    pub coplanarity: f64,
    pub rectangle: Option<f64>,
    pub rectangle_form: f64,
    pub angle_spread: f64,
    pub proper: f64,
    pub breadcrust: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriterionSummary {
    pub name: String,
    pub threshold: f64,
    pub count: usize,
    pub max: f64,
    pub mean: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub config: TrialConfig,
    pub records: Vec<TrialRecord>,
    pub criteria: Vec<CriterionSummary>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn criterion(&self, name: &str) -> Option<&CriterionSummary> {
        self.criteria.iter().find(|c| c.name == name)
    }
}

/// Criterion names in report order.
pub const CRITERIA: [&str; 8] = [
    "pythagoras",
    "pythagoras_quadrature",
    "parallelogram",
    "coplanarity",
    "rectangle",
    "equiangular",
    "proper",
    "breadcrust",
];

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Generator for trial `trial` of setting `setting`: ChaCha8 seeded with
/// `splitmix64(splitmix64(splitmix64(seed) ^ setting) ^ trial)`.
pub fn trial_rng(seed: u64, setting: usize, trial: usize) -> ChaCha8Rng {
    let s = splitmix64(splitmix64(splitmix64(seed) ^ setting as u64) ^ trial as u64);
    ChaCha8Rng::seed_from_u64(s)
}

/// A random isometry of `g`, drawn so that the image of the pole is uniform
/// on the sphere, or within `spread·r` of the pole elsewhere.
pub fn random_isometry<T: Scalar, R: Rng>(g: &Geometry<T>, spread: f64, rng: &mut R) -> Result<Isometry<T>> {
    let tau = std::f64::consts::TAU;
    let a = T::c(rng.random::<f64>() * tau);
    let c = T::c(rng.random::<f64>() * tau);
    let reach = rng.random::<f64>() * spread;
    let form = g.form();
    match g.kind() {
        GeometryKind::Spherical => {
            let tilt = T::c((1.0 - 2.0 * rng.random::<f64>()).acos());
            Isometry::rotation_z(a, form)
                .compose(&Isometry::rotation_x(tilt))?
                .compose(&Isometry::rotation_z(c, form))
        }
        GeometryKind::Hyperbolic => Isometry::rotation_z(a, form)
            .compose(&Isometry::boost_x(T::c(reach)))?
            .compose(&Isometry::rotation_z(c, form)),
        GeometryKind::Euclidean => {
            let shift = Vec3::new(a.cos(), a.sin(), T::zero()) * (T::c(reach) * g.scale());
            Isometry::translation(shift).compose(&Isometry::rotation_z(c, form))
        }
    }
}

/// Unit tangent at `center`, rotated from the frame's first axis by an angle
/// drawn from `seed`. Without a seed the first frame axis itself.
pub fn seeded_direction<T: Scalar>(center: &SurfacePoint<T>, seed: Option<u64>) -> Result<TangentVector<T>> {
    let (e1, _) = center.geometry().tangent_frame(center)?;
    Ok(match seed {
        Some(seed) => {
            let mut rng = trial_rng(seed, 0, 0);
            e1.rotated(T::c(rng.random::<f64>() * std::f64::consts::TAU))
        }
        None => e1,
    })
}

fn uniform(rng: &mut ChaCha8Rng, (lo, hi): (f64, f64)) -> f64 {
    lo + (hi - lo) * rng.random::<f64>()
}

fn run_trial<T: Scalar>(
    cfg: &TrialConfig,
    g: &Geometry<T>,
    r: f64,
    setting: usize,
    index: usize,
) -> Result<TrialRecord> {
    let mut rng = trial_rng(cfg.seed, setting, index);
    let m = random_isometry(g, cfg.center_spread, &mut rng)?;
    let center = apply_isometry(&m, &g.pole())?;
    let phi = T::c(rng.random::<f64>() * std::f64::consts::TAU);
    let (e1, _) = g.tangent_frame(&center)?;
    let u = e1.rotated(phi);
    let theta = std::f64::consts::PI * uniform(&mut rng, cfg.theta_frac);
    let bound = half_diagonal_bound(g).map(|b| b.f64()).unwrap_or(2.0 * r);
    let s = bound * uniform(&mut rng, cfg.s_frac);
    let q = build_equiangular_quadrilateral(g, &center, &u, T::c(theta), T::c(s))?;
    record_for(&q, u, index, r)
}

/// Measures every residual on a single quadrilateral.
pub fn record_for<T: Scalar>(
    q: &EquiangularQuadrilateral<T>,
    u: TangentVector<T>,
    index: usize,
    r: f64,
) -> Result<TrialRecord> {
    let curved = q.geometry.kind().is_curved();
    let quad_tol = T::c(1e-9);
    let areas = pythagorean_areas(q)?;
    let pyth = pythagoras_residual(q)?;
    let pyth_quad =
        if curved { Some(pythagoras_residual_quadrature(q, quad_tol)?.relative.f64()) } else { None };
    let para = parallelogram_residual(q)?;
    let rect = match q.geometry.kind() {
        GeometryKind::Spherical => Some(rectangle_residual(q)?.f64()),
        _ => None,
    };
    let (spread, _) = check_equiangular(q, T::zero())?;
    let (proper, _) = check_proper(&split_to_proper_triangle(q), T::zero())?;
    let breadcrust = if curved {
        let d = Disk::new(q.a, distance(&q.a, &q.d)?)?;
        Some(breadcrust_residual(&d)?.f64())
    } else {
        None
    };
    let angles = q.angles()?;
    Ok(TrialRecord {
        index,
        geometry: q.geometry.kind(),
        r,
        theta: q.theta.f64(),
        s: q.half_diagonal.f64(),
        center: q.center.coords().cast::<f64>().to_array(),
        direction: u.vector().cast::<f64>().to_array(),
        common_angle: angles[0].f64(),
        area_ab: areas[0].f64(),
        area_ac: areas[1].f64(),
        area_ad: areas[2].f64(),
        pythagoras_abs: pyth.absolute.f64(),
        pythagoras_rel: pyth.relative.f64(),
        pythagoras_quadrature_rel: pyth_quad,
        parallelogram: para.norm.f64(),
        parallelogram_rel: para.norm.f64() / r,
        parallelogram_z: para.z.f64(),
        coplanarity: coplanarity_residual(q)?.f64(),
        rectangle: rect,
        rectangle_form: rectangle_residual_under_form(q)?.f64(),
        angle_spread: spread.f64(),
        proper: proper.f64(),
        breadcrust,
    })
}

fn summarize(name: &str, threshold: f64, values: impl Iterator<Item = f64>) -> CriterionSummary {
    let (mut count, mut max, mut sum) = (0usize, 0.0f64, 0.0f64);
    let mut finite = true;
    for v in values {
        count += 1;
        finite &= v.is_finite();
        max = max.max(v);
        sum += v;
    }
    CriterionSummary {
        name: name.to_string(),
        threshold,
        count,
        max,
        mean: if count > 0 { sum / count as f64 } else { 0.0 },
        pass: finite && max <= threshold,
    }
}

/// Runs every (geometry, radius) setting for `cfg.trials` trials.
///
/// Records are ordered by setting (geometries outer, radii inner) then by
/// trial index; each trial draws from its own counter-derived generator.
pub fn run_trials<T: Scalar>(cfg: &TrialConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    let mut records = Vec::with_capacity(cfg.geometries.len() * cfg.radii.len() * cfg.trials);
    let mut setting = 0usize;
    for &kind in &cfg.geometries {
        for &r in &cfg.radii {
            let g = Geometry::<T>::new(kind, T::c(r))?;
            for i in 0..cfg.trials {
                let mut rec = run_trial(cfg, &g, r, setting, i)?;
                rec.index = records.len();
                records.push(rec);
            }
            setting += 1;
        }
    }
    let t = &cfg.tolerances;
    let criteria = vec![
        summarize(CRITERIA[0], t.thm, records.iter().map(|r| r.pythagoras_rel)),
        summarize(CRITERIA[1], t.thm_quadrature, records.iter().filter_map(|r| r.pythagoras_quadrature_rel)),
        summarize(CRITERIA[2], t.proof, records.iter().map(|r| r.parallelogram_rel)),
        summarize(CRITERIA[3], t.proof, records.iter().map(|r| r.coplanarity)),
        summarize(CRITERIA[4], t.proof, records.iter().filter_map(|r| r.rectangle)),
        summarize(CRITERIA[5], t.angle, records.iter().map(|r| r.angle_spread)),
        summarize(CRITERIA[6], t.angle, records.iter().map(|r| r.proper)),
        summarize(CRITERIA[7], t.oracle, records.iter().filter_map(|r| r.breadcrust)),
    ];
    let pass = criteria.iter().all(|c| c.pass);
    Ok(VerificationReport { seed: cfg.seed, config: cfg.clone(), records, criteria, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surfaces::apply_isometry_tangent;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn quad(g: Geometry<f64>, theta: f64, s: f64) -> EquiangularQuadrilateral<f64> {
        let o = g.pole();
        let u = TangentVector::new(o, Vec3::new(1.0, 0.0, 0.0)).unwrap();
        build_equiangular_quadrilateral(&g, &o, &u, theta, s).unwrap()
    }

    #[test]
    fn euclidean_three_four_five_is_exact() {
        let q = quad(Geometry::euclidean(), (7.0f64 / 25.0).acos(), 2.5);
        let [ab, ac, ad] = pythagorean_areas(&q).unwrap();
        assert!((ab - 9.0 * PI).abs() < 1e-12 && (ac - 16.0 * PI).abs() < 1e-12);
        assert!((ad - 25.0 * PI).abs() < 1e-12);
        assert!(pythagoras_residual(&q).unwrap().absolute <= 1e-12);
    }

    #[test]
    fn spherical_theorem_example() {
        let q = quad(Geometry::spherical(1.0).unwrap(), FRAC_PI_2, 0.6);
        assert!(pythagoras_residual(&q).unwrap().relative <= 1e-9);
    }

    #[test]
    fn hyperbolic_theorem_example_both_routes() {
        let q = quad(Geometry::hyperbolic(1.0).unwrap(), 1.0, 0.8);
        assert!(pythagoras_residual(&q).unwrap().relative <= 1e-9);
        assert!(pythagoras_residual_quadrature(&q, 1e-9).unwrap().relative <= 1e-6);
    }

    #[test]
    fn euclidean_square_parallelogram() {
        let q = quad(Geometry::euclidean(), FRAC_PI_2, 1.0);
        assert!(parallelogram_residual(&q).unwrap().norm <= 1e-12);
        assert_eq!(coplanarity_residual(&q).unwrap(), 0.0);
        assert_eq!(rectangle_residual(&q), Err(Error::UnsupportedGeometry("euclidean")));
    }

    #[test]
    fn rectangle_examples() {
        let g = Geometry::spherical(1.0).unwrap();
        assert!(rectangle_residual(&quad(g, FRAC_PI_2, 0.5)).unwrap() <= 1e-10);
        assert!(rectangle_residual(&quad(g, 1.0, 0.5)).unwrap() <= 1e-10);
        assert!(rectangle_residual(&quad(g, FRAC_PI_2 - 1e-3, 1e-4)).unwrap() <= 1e-10);
        let h = Geometry::hyperbolic(1.0).unwrap();
        assert!(rectangle_residual(&quad(h, 1.0, 0.5)).is_err());
    }

    #[test]
    fn random_sphere_points_are_not_coplanar() {
        let g = Geometry::spherical(1.0).unwrap();
        let mut rng = trial_rng(7, 0, 0);
        let mut min = f64::INFINITY;
        for _ in 0..20 {
            let mut pts = [g.pole(); 4];
            for p in pts.iter_mut() {
                let m = random_isometry(&g, 0.0, &mut rng).unwrap();
                *p = apply_isometry(&m, &g.pole()).unwrap();
            }
            let q = EquiangularQuadrilateral {
                geometry: g,
                a: pts[0],
                b: pts[1],
                d: pts[2],
                c: pts[3],
                center: g.pole(),
                half_diagonal: 1.0,
                theta: 1.0,
            };
            min = min.min(coplanarity_residual(&q).unwrap());
        }
        // the control sits many orders of magnitude above the 1e-10 tolerance
        assert!(min > 1e-6, "{min}");
    }

    #[test]
    fn breadcrust_examples() {
        let s = Geometry::spherical(1.0).unwrap();
        assert_eq!(breadcrust_residual(&Disk::new(s.pole(), 0.0).unwrap()).unwrap(), 0.0);
        assert!(breadcrust_residual(&Disk::new(s.pole(), FRAC_PI_2).unwrap()).unwrap() <= 1e-8);
        let h = Geometry::hyperbolic(3.0).unwrap();
        assert!(breadcrust_residual(&Disk::new(h.pole(), 2.0).unwrap()).unwrap() <= 1e-7);
    }

    #[test]
    fn zero_trials_is_invalid() {
        let cfg = TrialConfig { trials: 0, ..TrialConfig::default() };
        assert!(matches!(run_trials::<f64>(&cfg), Err(Error::ConfigInvalid(_))));
        let cfg = TrialConfig { s_frac: (0.1, 1.0), ..TrialConfig::default() };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = TrialConfig { trials: 25, seed: 9, ..TrialConfig::default() };
        let a = run_trials::<f64>(&cfg).unwrap();
        let b = run_trials::<f64>(&cfg).unwrap();
        assert_eq!(a, b);
        assert!(a.pass, "{:#?}", a.criteria);
        let other = run_trials::<f64>(&TrialConfig { seed: 10, ..cfg }).unwrap();
        assert_ne!(a.records[0].theta, other.records[0].theta);
    }

    #[test]
    fn residuals_are_isometry_invariant() {
        for g in [Geometry::spherical(1.3).unwrap(), Geometry::hyperbolic(0.8).unwrap()] {
            let o = g.pole();
            let u = TangentVector::new(o, Vec3::new(0.0, 1.0, 0.0)).unwrap();
            let q = build_equiangular_quadrilateral(&g, &o, &u, 1.1, 0.5 * g.scale()).unwrap();
            let mut rng = trial_rng(3, 1, 4);
            let m = random_isometry(&g, 1.0, &mut rng).unwrap();
            let mo = apply_isometry(&m, &o).unwrap();
            let mu = apply_isometry_tangent(&m, &u).unwrap();
            let mq = build_equiangular_quadrilateral(&g, &mo, &mu, 1.1, 0.5 * g.scale()).unwrap();
            let a = record_for(&q, u, 0, g.scale()).unwrap();
            let b = record_for(&mq, mu, 0, g.scale()).unwrap();
            assert!((a.pythagoras_rel - b.pythagoras_rel).abs() <= 1e-10);
            assert!((a.parallelogram - b.parallelogram).abs() <= 1e-10);
            assert!((a.coplanarity - b.coplanarity).abs() <= 1e-10);
            assert!((a.proper - b.proper).abs() <= 1e-10);
            assert!((a.area_ad - b.area_ad).abs() <= 1e-10 * a.area_ad);
        }
    }

    #[test]
    fn spherical_scale_coherence() {
        for lambda in [0.5, 3.0, 10.0] {
            let q1 = quad(Geometry::spherical(1.0).unwrap(), 1.2, 0.7);
            let q2 = quad(Geometry::spherical(lambda).unwrap(), 1.2, 0.7 * lambda);
            let a1 = pythagorean_areas(&q1).unwrap();
            let a2 = pythagorean_areas(&q2).unwrap();
            for (x, y) in a1.iter().zip(a2) {
                assert!((x * lambda * lambda - y).abs() <= 1e-10 * y);
            }
            let r1 = pythagoras_residual(&q1).unwrap().relative;
            let r2 = pythagoras_residual(&q2).unwrap().relative;
            assert!((r1 - r2).abs() <= 1e-10);
        }
    }

    #[test]
    fn proof_steps_imply_theorem() {
        let cfg = TrialConfig {
            geometries: vec![GeometryKind::Spherical, GeometryKind::Hyperbolic],
            trials: 40,
            seed: 1234,
            ..TrialConfig::default()
        };
        for rec in run_trials::<f64>(&cfg).unwrap().records {
            if rec.parallelogram <= 1e-10 && rec.breadcrust.unwrap() <= 1e-7 {
                assert!(rec.pythagoras_rel <= 1e-6);
            }
        }
    }

    #[test]
    fn hyperbolic_chord_rectangle_is_exploratory_but_small() {
        let q = quad(Geometry::hyperbolic(1.0).unwrap(), 1.0, 0.8);
        let c = rectangle_residual_under_form(&q).unwrap();
        assert!(c.is_finite());
    }

    #[test]
    fn f32_sweep_runs() {
        let cfg = TrialConfig { trials: 5, ..TrialConfig::default() };
        let rep = run_trials::<f32>(&cfg).unwrap();
        assert_eq!(rep.records.len(), 45);
        assert!(rep.records.iter().all(|r| r.pythagoras_rel < 1e-3));
    }
}
