//! Adaptive Gauss–Kronrod quadrature for the moments ∫₀^∞ 𝓕ₖ(t) tᵉ dt.
//!
//! The half line is cut into three pieces:
//! * [0, δ] is integrated term by term from the Laurent expansion of
//!   1/(eᵗ − 1), which absorbs the algebraic singularity at the origin;
//! * [δ, 1] is covered by geometrically graded panels and [1, T] by uniform
//!   ones, all refined by global error-driven bisection;
//! * (T, ∞) is dropped after bounding it by an incomplete-gamma majorant.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::bose_kernel::{kernel, KERNEL_KMAX};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::specfun::BERNOULLI_EVEN;

/// Panel budget of one adaptive integration.
pub const MAX_PANELS: usize = 10_000;

/// Largest accepted relative tolerance.
pub const TOL_CEIL: f64 = 1e-4;

/// Left end of the graded panels; [0, δ] is handled analytically.
const NEAR_ZERO: f64 = 1.0 / 16.0;
const GRADED_PANELS: usize = 4;
const INITIAL_WIDTH: f64 = 4.0;

/// Smallest accepted relative tolerance for the scalar type.
pub fn tol_floor<T: Scalar>() -> T {
    T::c(1e-13).max(T::c(64.0) * T::epsilon())
}

/// Outcome of a semi-infinite (or finite, for [`integrate_interval`])
/// integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult<T> {
    pub value: T,
    /// Absolute error estimate, including the tail bound.
    pub error_estimate: T,
    pub subdivisions: usize,
    /// Upper limit actually integrated to.
    pub truncation_point: T,
}

// 15-point Kronrod nodes and weights with the embedded 7-point Gauss rule.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
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
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Panel<T> {
    a: T,
    b: T,
    value: T,
    error: T,
}

impl<T: Scalar> PartialEq for Panel<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<T: Scalar> Eq for Panel<T> {}

impl<T: Scalar> PartialOrd for Panel<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Scalar> Ord for Panel<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .partial_cmp(&other.error)
            .unwrap_or(Ordering::Equal)
            .then_with(|| other.a.partial_cmp(&self.a).unwrap_or(Ordering::Equal))
    }
}

fn gauss_kronrod<T: Scalar, F: Fn(T) -> T>(f: &F, a: T, b: T) -> Panel<T> {
    let half = T::c(0.5);
    let center = half * (a + b);
    let half_len = half * (b - a);
    let f_center = f(center);
    let mut res_gauss = f_center * T::c(WG[3]);
    let mut res_kronrod = f_center * T::c(WGK[7]);
    let mut res_abs = res_kronrod.abs();
    let mut values = [(T::zero(), T::zero()); 7];
    for (j, slot) in values.iter_mut().enumerate() {
        let dx = half_len * T::c(XGK[j]);
        let (f1, f2) = (f(center - dx), f(center + dx));
        *slot = (f1, f2);
        let w = T::c(WGK[j]);
        res_kronrod = res_kronrod + w * (f1 + f2);
        res_abs = res_abs + w * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_gauss = res_gauss + T::c(WG[j / 2]) * (f1 + f2);
        }
    }
    let mean = res_kronrod * half;
    let mut res_asc = T::c(WGK[7]) * (f_center - mean).abs();
    for (j, &(f1, f2)) in values.iter().enumerate() {
        res_asc = res_asc + T::c(WGK[j]) * ((f1 - mean).abs() + (f2 - mean).abs());
    }
    let scale = half_len.abs();
    let value = res_kronrod * half_len;
    res_abs = res_abs * scale;
    res_asc = res_asc * scale;
    let mut error = ((res_kronrod - res_gauss) * half_len).abs();
    if res_asc != T::zero() && error != T::zero() {
        error = res_asc * T::one().min((T::c(200.0) * error / res_asc).powf(T::c(1.5)));
    }
    if res_abs > T::min_positive_value() / (T::c(50.0) * T::epsilon()) {
        error = error.max(T::c(50.0) * T::epsilon() * res_abs);
    }
    Panel { a, b, value, error }
}

struct Adaptive<T> {
    value: T,
    error: T,
    panels: usize,
}

/// Global adaptive refinement over the given breakpoints until the summed
/// error estimate drops below `rel_tol·|value| + extra_abs`.
fn refine<T: Scalar, F: Fn(T) -> T>(f: &F, breakpoints: &[T], rel_tol: T, max_panels: usize) -> Result<Adaptive<T>> {
    let mut heap: BinaryHeap<Panel<T>> = breakpoints.windows(2).map(|w| gauss_kronrod(f, w[0], w[1])).collect();
    loop {
        let (value, error) = heap
            .iter()
            .fold((T::zero(), T::zero()), |(v, e), p| (v + p.value, e + p.error));
        if !value.is_finite() || !error.is_finite() {
            return Err(Error::Overflow(
                "integrand is not finite on the integration range".into(),
            ));
        }
        if error <= rel_tol * value.abs() {
            return Ok(Adaptive {
                value,
                error,
                panels: heap.len(),
            });
        }
        if heap.len() >= max_panels {
            return Err(Error::ToleranceNotMet {
                estimate: (error / value.abs()).to_f64_lossy(),
                requested: rel_tol.to_f64_lossy(),
                panels: heap.len(),
            });
        }
        let worst = heap.pop().expect("at least one panel");
        let mid = T::c(0.5) * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            return Err(Error::ToleranceNotMet {
                estimate: (error / value.abs()).to_f64_lossy(),
                requested: rel_tol.to_f64_lossy(),
                panels: heap.len() + 1,
            });
        }
        heap.push(gauss_kronrod(f, worst.a, mid));
        heap.push(gauss_kronrod(f, mid, worst.b));
    }
}

fn check_tol<T: Scalar>(tol: T) -> Result<()> {
    let floor = tol_floor::<T>();
    if !(tol >= floor && tol <= T::c(TOL_CEIL)) {
        return Err(Error::domain(format!(
            "tolerance must lie in [{floor:e}, {TOL_CEIL:e}], got {tol:e}"
        )));
    }
    Ok(())
}

/// Adaptive integral of an arbitrary smooth integrand over [a, b] to
/// relative tolerance `tol`.
pub fn integrate_interval<T: Scalar, F: Fn(T) -> T>(f: F, a: T, b: T, tol: T) -> Result<QuadratureResult<T>> {
    check_tol(tol)?;
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(Error::domain(format!(
            "integration interval [{a}, {b}] is not a finite range"
        )));
    }
    let out = refine(&f, &[a, b], tol, MAX_PANELS)?;
    Ok(QuadratureResult {
        value: out.value,
        error_estimate: out.error,
        subdivisions: out.panels,
        truncation_point: b,
    })
}

/// ∫₀^∞ t^{s−1}/(eᵗ − 1) dt = Γ(s)ζ(s) for s > 1.
pub fn integrate_bose_moment<T: Scalar>(s: T, tol: T) -> Result<QuadratureResult<T>> {
    if !(s > T::one()) || !s.is_finite() {
        return Err(Error::domain(format!(
            "bose moment requires s > 1 (divergent at s = 1), got s = {s}"
        )));
    }
    check_tol(tol)?;
    kernel_moment(0, s - T::one(), tol)
}

/// ∫₀^∞ 𝓕ₖ(t) tˢ dt for s > k.
pub fn integrate_kernel_moment<T: Scalar>(k: usize, s: T, tol: T) -> Result<QuadratureResult<T>> {
    if k > KERNEL_KMAX {
        return Err(Error::Range(format!("kernel order k = {k} exceeds {KERNEL_KMAX}")));
    }
    if !(s > T::from_usize_lossy(k)) || !s.is_finite() {
        return Err(Error::domain(format!(
            "kernel moment of order {k} requires s > {k}, got s = {s}"
        )));
    }
    check_tol(tol)?;
    kernel_moment(k, s, tol)
}

/// Initial truncation point for the integrand 𝓕ₖ(t)·tᵉ.
pub fn truncation_point<T: Scalar>(exponent: T) -> T {
    T::c(50.0).max(T::c(3.0) * (exponent + T::one()) + T::c(40.0))
}

/// Upper bound of ∫_T^∞ 𝓕ₖ(t) tᵉ dt.
///
/// 𝓕₀(t) ≤ e^{−t}/(1 − e^{−T}) and 𝓕ₖ(t) ≤ (k+1)!·2^{k+1}·e^{−t} on t ≥ 1;
/// Γ(e+1, T) ≤ Tᵉ e^{−T}/(1 − e/T) for T > e.
pub fn tail_bound<T: Scalar>(k: usize, exponent: T, cutoff: T) -> T {
    let prefactor = if k == 0 {
        -(-(-cutoff).exp_m1()).ln()
    } else {
        let kp1 = T::from_usize_lossy(k + 1);
        (1..=k + 1)
            .map(T::from_usize_lossy)
            .fold(T::zero(), |acc, v| acc + v.ln())
            + kp1 * T::LN_2()
    };
    let shrink = if exponent > T::zero() {
        if cutoff <= exponent {
            return T::infinity();
        }
        (T::one() - exponent / cutoff).ln()
    } else {
        T::zero()
    };
    (prefactor + exponent * cutoff.ln() - cutoff - shrink).exp()
}

/// ∫₀^δ 𝓕ₖ(t) tᵉ dt from the Laurent series
/// 1/(eᵗ − 1) = Σ Bₙ t^{n−1}/n!, differentiated k times term by term.
/// Returns (value, size of the first dropped term).
fn near_zero_moment<T: Scalar>(k: usize, exponent: T, delta: T) -> (T, T) {
    let kf = T::from_usize_lossy(k);
    let lead_pow = exponent - kf;
    let k_fact = (1..=k).map(T::from_usize_lossy).fold(T::one(), |a, v| a * v);
    let mut sum = k_fact * delta.powf(lead_pow) / lead_pow;
    if k == 0 {
        // B₁ = −1/2
        sum = sum - delta.powf(exponent + T::one()) / (T::c(2.0) * (exponent + T::one()));
    }
    let sign = if k.is_multiple_of(2) { T::one() } else { -T::one() };
    let mut dropped = T::zero();
    for (j, &bern) in BERNOULLI_EVEN.iter().enumerate().skip(1) {
        let n = 2 * j;
        if n < k + 1 {
            continue;
        }
        let nf = T::from_usize_lossy(n);
        // (n−1)^{(k)} / n! = 1 / (n·(n−1−k)!)
        let tail_fact = (1..n - k).map(T::from_usize_lossy).fold(T::one(), |a, v| a * v);
        let power = nf + exponent - kf;
        let term = sign * T::c(bern) * delta.powf(power) / (nf * tail_fact * power);
        if term.abs() <= T::epsilon() * T::c(0.01) * sum.abs() {
            dropped = term.abs();
            break;
        }
        sum = sum + term;
        dropped = term.abs();
    }
    (sum, dropped)
}

fn kernel_moment<T: Scalar>(k: usize, exponent: T, tol: T) -> Result<QuadratureResult<T>> {
    let delta = T::c(NEAR_ZERO);
    let (head, head_err) = near_zero_moment(k, exponent, delta);
    let integrand = |t: T| match kernel(k, t) {
        Ok(v) => v * t.powf(exponent),
        Err(_) => T::nan(),
    };
    let half = T::c(0.5);
    let mut cutoff = truncation_point(exponent);
    for _ in 0..32 {
        let mut breakpoints = Vec::new();
        for j in 0..GRADED_PANELS {
            breakpoints.push(delta * T::c(2f64.powi(j as i32)));
        }
        breakpoints.push(T::one());
        let n_uniform = ((cutoff - T::one()) / T::c(INITIAL_WIDTH))
            .ceil()
            .to_usize()
            .unwrap_or(1)
            .max(1);
        let width = (cutoff - T::one()) / T::from_usize_lossy(n_uniform);
        for i in 1..n_uniform {
            breakpoints.push(T::one() + width * T::from_usize_lossy(i));
        }
        breakpoints.push(cutoff);

        let body = refine(&integrand, &breakpoints, tol * half, MAX_PANELS)?;
        let value = head + body.value;
        let tail = tail_bound(k, exponent, cutoff);
        if tail <= tol * half * value.abs() {
            let roundoff = T::c(50.0) * T::epsilon() * value.abs();
            return Ok(QuadratureResult {
                value,
                error_estimate: body.error + tail + head_err + roundoff,
                subdivisions: body.panels,
                truncation_point: cutoff,
            });
        }
        cutoff = cutoff * T::c(1.5);
    }
    Err(Error::ToleranceNotMet {
        estimate: f64::INFINITY,
        requested: tol.to_f64_lossy(),
        panels: 0,
    })
}
