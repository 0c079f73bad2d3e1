use crate::error::{Error, Result};
use crate::quad;
use crate::scalar::Scalar;

use super::{gamma, BERNOULLI_EVEN};

/// Term budget for any series evaluation.
pub const MAX_SERIES_TERMS: usize = 1_000_000;

const INITIAL_CUTOFF: usize = 8;

/// Evaluation route for ζ(x).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ZetaRoute {
    /// Σ k^{−x}, partial sum plus Euler–Maclaurin tail.
    DirectSeries,
    /// (1 − 2^{−x})^{−1} Σ (2k − 1)^{−x}, partial sum plus Euler–Maclaurin tail.
    OddSeries,
    /// (1 − 2^{1−x})^{−1} Σ (−1)^{k−1} k^{−x}, accelerated alternating summation.
    #[default]
    AlternatingSeries,
    /// Γ(x)^{−1} ∫₀^∞ t^{x−1}/(eᵗ − 1) dt by adaptive quadrature.
    IntegralRepresentation,
}

impl ZetaRoute {
    pub const ALL: [ZetaRoute; 4] = [
        ZetaRoute::DirectSeries,
        ZetaRoute::OddSeries,
        ZetaRoute::AlternatingSeries,
        ZetaRoute::IntegralRepresentation,
    ];

    pub const SERIES: [ZetaRoute; 3] = [
        ZetaRoute::DirectSeries,
        ZetaRoute::OddSeries,
        ZetaRoute::AlternatingSeries,
    ];
}

fn check_domain<T: Scalar>(name: &str, x: T) -> Result<()> {
    if x.is_nan() || x <= T::one() {
        return Err(Error::domain(format!(
            "{name} requires x > 1: pole at x = 1 (got x = {x})"
        )));
    }
    Ok(())
}

/// Riemann zeta function on (1, ∞) along the requested route.
pub fn zeta<T: Scalar>(x: T, route: ZetaRoute) -> Result<T> {
    check_domain("zeta", x)?;
    if x == T::infinity() {
        return Ok(T::one());
    }
    match route {
        ZetaRoute::DirectSeries => euler_maclaurin_sum(x, T::one(), T::zero()),
        ZetaRoute::OddSeries => {
            let odd = euler_maclaurin_sum(x, T::c(2.0), -T::one())?;
            // 1 − 2^{−x}
            let factor = -(-x * T::LN_2()).exp_m1();
            Ok(odd / factor)
        }
        ZetaRoute::AlternatingSeries => Ok(alternating_eta(x) / one_minus_two_pow(x)),
        ZetaRoute::IntegralRepresentation => {
            let tol = quad::tol_floor::<T>().max(T::c(1e-12));
            let moment = quad::integrate_bose_moment(x, tol)?;
            Ok(moment.value / gamma(x)?)
        }
    }
}

/// ζ(x) along the default (accelerated alternating) route.
pub fn riemann_zeta<T: Scalar>(x: T) -> Result<T> {
    zeta(x, ZetaRoute::AlternatingSeries)
}

/// Dirichlet eta function η(x) = (1 − 2^{1−x}) ζ(x), summed directly.
pub fn eta<T: Scalar>(x: T) -> Result<T> {
    check_domain("eta", x)?;
    if x == T::infinity() {
        return Ok(T::one());
    }
    Ok(alternating_eta(x))
}

/// Dirichlet lambda function λ(x) = (1 − 2^{−x}) ζ(x).
pub fn lambda<T: Scalar>(x: T) -> Result<T> {
    check_domain("lambda", x)?;
    if x == T::infinity() {
        return Ok(T::one());
    }
    let factor = -(-x * T::LN_2()).exp_m1();
    Ok(factor * riemann_zeta(x)?)
}

/// 1 − 2^{1−x} without cancellation near x = 1.
fn one_minus_two_pow<T: Scalar>(x: T) -> T {
    -((T::one() - x) * T::LN_2()).exp_m1()
}

fn cvz_terms<T: Scalar>() -> usize {
    // error ≤ 2 (3 + √8)^{−n} relative to the sum
    let rate = (T::c(3.0) + T::c(8.0).sqrt()).ln();
    let need = (T::c(16.0) / T::epsilon()).ln() / rate;
    need.ceil().to_usize().unwrap_or(64) + 1
}

/// Σ_{k≥0} (−1)^k (k + 1)^{−x} by the Cohen–Rodriguez Villegas–Zagier
/// acceleration. Valid for x > 0.
fn alternating_eta<T: Scalar>(x: T) -> T {
    let n = cvz_terms::<T>();
    let nf = T::from_usize_lossy(n);
    let mut d = (T::c(3.0) + T::c(8.0).sqrt()).powi(n as i32);
    d = (d + d.recip()) / T::c(2.0);
    let mut b = -T::one();
    let mut c = -d;
    // Neumaier-compensated sum of the weighted terms
    let mut sum = T::zero();
    let mut comp = T::zero();
    for k in 0..n {
        let kf = T::from_usize_lossy(k);
        c = b - c;
        let term = c * (kf + T::one()).powf(-x);
        let next = sum + term;
        comp = comp
            + if sum.abs() >= term.abs() {
                (sum - next) + term
            } else {
                (term - next) + sum
            };
        sum = next;
        b = (kf + nf) * (kf - nf) * b / ((kf + T::c(0.5)) * (kf + T::one()));
    }
    (sum + comp) / d
}

/// Σ_{k≥1} (a·k + b)^{−s} for s > 1: explicit partial sum below a cutoff N and
/// an Euler–Maclaurin tail from N on. N doubles until the tail corrections
/// converge to machine precision.
fn euler_maclaurin_sum<T: Scalar>(s: T, a: T, b: T) -> Result<T> {
    let mut cutoff = INITIAL_CUTOFF;
    while cutoff <= MAX_SERIES_TERMS {
        let mut partial = T::zero();
        for k in (1..cutoff).rev() {
            partial = partial + (a * T::from_usize_lossy(k) + b).powf(-s);
        }
        if let Some(tail) = euler_maclaurin_tail(s, a, b, cutoff, partial) {
            return Ok(partial + tail);
        }
        cutoff *= 2;
    }
    Err(Error::Convergence(format!(
        "series for s = {s} did not reach machine precision within {MAX_SERIES_TERMS} terms"
    )))
}

/// Σ_{k≥N} (a·k + b)^{−s}, or None when the asymptotic corrections stall
/// before reaching machine precision relative to `partial + tail`.
fn euler_maclaurin_tail<T: Scalar>(s: T, a: T, b: T, cutoff: usize, partial: T) -> Option<T> {
    let y = a * T::from_usize_lossy(cutoff) + b;
    let y_pow = y.powf(-s);
    let mut tail = y * y_pow / (a * (s - T::one())) + y_pow / T::c(2.0);
    let two = T::c(2.0);
    // a^{2j−1} (s)_{2j−1} y^{−s−2j+1} / (2j)!
    let mut factor = a * s * y_pow / (y * two);
    let mut last = T::infinity();
    for (j, &bern) in BERNOULLI_EVEN.iter().enumerate().skip(1) {
        let term = T::c(bern) * factor;
        if term.abs() > last {
            return None;
        }
        tail = tail + term;
        if term.abs() <= T::epsilon() * T::c(0.25) * (partial + tail).abs() {
            return Some(tail);
        }
        last = term.abs();
        let jf = T::from_usize_lossy(j);
        factor = factor * a * a * (s + two * jf - T::one()) * (s + two * jf)
            / ((two * jf + T::one()) * (two * jf + two) * y * y);
    }
    None
}
