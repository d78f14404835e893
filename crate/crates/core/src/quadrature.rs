//! Globally adaptive Gauss–Kronrod (7/15) integration.
//!
//! The rule never evaluates the interval endpoints, so integrands with an
//! integrable endpoint singularity in a factor (e.g. `f'(z)` blowing up at
//! the pole of a surface of revolution) are fine.

#![allow(clippy::excessive_precision)]

use crate::error::{Error, Result};
use crate::scalar::Scalar;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for the odd Kronrod nodes (XGK[1], XGK[3], XGK[5], XGK[7]).
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Maximum number of panels kept alive before giving up.
pub const MAX_PANELS: usize = 2000;

#[derive(Debug, Clone, Copy)]
struct Panel<T> {
    a: T,
    b: T,
    value: T,
    error: T,
}

fn gk15<T: Scalar, F: Fn(T) -> T>(f: &F, a: T, b: T) -> Panel<T> {
    let half = (b - a) / T::two();
    let mid = (a + b) / T::two();
    let fc = f(mid);
    let mut kronrod = fc * T::c(WGK[7]);
    let mut gauss = fc * T::c(WG[3]);
    for i in 0..7 {
        let dx = half * T::c(XGK[i]);
        let pair = f(mid - dx) + f(mid + dx);
        kronrod = kronrod + pair * T::c(WGK[i]);
        if i % 2 == 1 {
            gauss = gauss + pair * T::c(WG[i / 2]);
        }
    }
    Panel { a, b, value: kronrod * half, error: ((kronrod - gauss) * half).abs() }
}

/// Integrates `f` over `[a, b]` until the summed error estimate is at most
/// `rel_tol · |result|` (or an absolute floor of a few ulps of the result).
///
/// Returns the value and the final error estimate.
pub fn integrate<T: Scalar, F: Fn(T) -> T>(f: F, a: T, b: T, rel_tol: T) -> Result<(T, T)> {
    if !(rel_tol > T::zero()) {
        return Err(Error::InvalidArgument(format!("quadrature tolerance {rel_tol} must be positive")));
    }
    if a == b {
        return Ok((T::zero(), T::zero()));
    }
    let mut panels = vec![gk15(&f, a, b)];
    loop {
        let value = panels.iter().fold(T::zero(), |s, p| s + p.value);
        let error = panels.iter().fold(T::zero(), |s, p| s + p.error);
        if !value.is_finite() || !error.is_finite() {
            return Err(Error::QuadratureNonConvergent { estimate: error.f64(), requested: rel_tol.f64() });
        }
        let floor = T::epsilon() * T::c(50.0) * value.abs();
        if error <= rel_tol * value.abs() || error <= floor {
            return Ok((value, error));
        }
        if panels.len() >= MAX_PANELS {
            return Err(Error::QuadratureNonConvergent {
                estimate: (error / value.abs()).f64(),
                requested: rel_tol.f64(),
            });
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.partial_cmp(&y.1.error).unwrap_or(std::cmp::Ordering::Equal))
            .map(|(i, _)| i)
            .unwrap_or(0);
        let p = panels.swap_remove(worst);
        let mid = (p.a + p.b) / T::two();
        panels.push(gk15(&f, p.a, mid));
        panels.push(gk15(&f, mid, p.b));
    }
}
