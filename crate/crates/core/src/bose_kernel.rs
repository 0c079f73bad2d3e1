//! The kernels 𝓕ₖ(t) = (−1)ᵏ dᵏ/dtᵏ [1/(eᵗ − 1)] in closed form.
//!
//! The k-th derivative of 1/(ϑe^{θt} − 1) is
//! (−1)ᵏ θᵏ Σ_{p=1}^{k+1} (p−1)! S(k+1, p) x^p with x = 1/(ϑe^{θt} − 1),
//! so every kernel is a polynomial in x with exact integer coefficients.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::combinatorics::StirlingTable;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Largest derivative order evaluated in floating point.
pub const KERNEL_KMAX: usize = 30;

/// Exact coefficients (p−1)!·S(k+1, p) for p = 1..=k+1.
pub fn exact_coefficients(k: usize) -> Result<Vec<BigUint>> {
    let table = StirlingTable::shared();
    let mut fact = BigUint::from(1u32);
    let mut out = Vec::with_capacity(k + 1);
    for p in 1..=k + 1 {
        if p > 1 {
            fact *= BigUint::from(p - 1);
        }
        out.push(&fact * table.get(k + 1, p)?);
    }
    Ok(out)
}

/// Coefficient rows for k = 0..=KERNEL_KMAX+1, rounded once to f64.
fn coefficient_table() -> &'static [Vec<f64>] {
    static TABLE: OnceLock<Vec<Vec<f64>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..=KERNEL_KMAX + 1)
            .map(|k| {
                exact_coefficients(k)
                    .expect("rows within the shared Stirling table")
                    .iter()
                    .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
                    .collect()
            })
            .collect()
    })
}

fn check_order(k: usize) -> Result<()> {
    if k > KERNEL_KMAX {
        return Err(Error::Range(format!("kernel order k = {k} exceeds {KERNEL_KMAX}")));
    }
    Ok(())
}

/// Σ_{p=1}^{n} c_p x^p, Horner from the highest power.
fn poly_no_constant<T: Scalar>(coeffs: &[f64], x: T) -> T {
    let mut acc = T::zero();
    for &c in coeffs.iter().rev() {
        acc = acc * x + T::c(c);
    }
    acc * x
}

/// Σ_{p=1}^{n} c_p x^{p−1}
fn poly_shifted<T: Scalar>(coeffs: &[f64], x: T) -> T {
    coeffs.iter().rev().fold(T::zero(), |acc, &c| acc * x + T::c(c))
}

/// Σ_{p=1}^{n} c_p y^{n−p}
fn poly_reversed<T: Scalar>(coeffs: &[f64], y: T) -> T {
    coeffs.iter().fold(T::zero(), |acc, &c| acc * y + T::c(c))
}

/// Parameters of the generalized kernel dᵏ/dtᵏ [1/(ϑe^{θt} − 1)].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelParams<T> {
    pub vartheta: T,
    pub theta: T,
    pub k: usize,
}

impl<T: Scalar> KernelParams<T> {
    pub fn new(vartheta: T, theta: T, k: usize) -> Result<Self> {
        if !(vartheta.is_finite() && theta.is_finite()) || vartheta == T::zero() || theta == T::zero() {
            return Err(Error::domain(format!(
                "kernel parameters require finite nonzero vartheta and theta, got ({vartheta}, {theta})"
            )));
        }
        check_order(k)?;
        Ok(Self { vartheta, theta, k })
    }

    /// ϑ = θ = 1
    pub fn standard(k: usize) -> Result<Self> {
        Self::new(T::one(), T::one(), k)
    }

    /// The excluded point −ln(ϑ)/θ, present only when ϑ > 0.
    pub fn singular_point(&self) -> Option<T> {
        (self.vartheta > T::zero()).then(|| -self.vartheta.ln() / self.theta)
    }
}

/// 1/(eᵗ − 1) for t > 0, via expm1.
pub fn kernel_base<T: Scalar>(t: T) -> Result<T> {
    if !(t > T::zero()) {
        return Err(Error::domain(format!("kernel requires t > 0, got t = {t}")));
    }
    Ok(t.exp_m1().recip())
}

/// The signed derivative dᵏ/dtᵏ [1/(ϑe^{θt} − 1)].
pub fn general_derivative<T: Scalar>(params: KernelParams<T>, t: T) -> Result<T> {
    let KernelParams { vartheta, theta, k } = KernelParams::new(params.vartheta, params.theta, params.k)?;
    if !t.is_finite() {
        return Err(Error::domain(format!("kernel requires finite t, got {t}")));
    }
    let denom = if vartheta > T::zero() {
        (theta * t + vartheta.ln()).exp_m1()
    } else {
        vartheta * (theta * t).exp() - T::one()
    };
    if denom == T::zero() {
        return Err(Error::Singularity(format!(
            "vartheta·exp(theta·t) = 1 at t = {t} (vartheta = {vartheta}, theta = {theta})"
        )));
    }
    let x = denom.recip();
    let value = (-theta).powi(k as i32) * poly_no_constant(&coefficient_table()[k], x);
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow(format!("derivative of order {k} at t = {t}")))
    }
}

/// 𝓕ₖ(t) = (−1)ᵏ dᵏ/dtᵏ [1/(eᵗ − 1)] for t > 0. Strictly positive.
pub fn kernel<T: Scalar>(k: usize, t: T) -> Result<T> {
    check_order(k)?;
    let x = kernel_base(t)?;
    let value = poly_no_constant(&coefficient_table()[k], x);
    if !value.is_finite() {
        return Err(Error::Overflow(format!("kernel of order {k} at t = {t}")));
    }
    debug_assert!(value >= T::zero());
    Ok(value)
}

/// 𝓕ₖ₊₁(t)/𝓕ₖ(t) as one rational function of x = 1/(eᵗ − 1), with the
/// common power of x cancelled so small t does not overflow.
pub fn kernel_ratio<T: Scalar>(k: usize, t: T) -> Result<T> {
    check_order(k)?;
    let x = kernel_base(t)?;
    let table = coefficient_table();
    let (num, den) = (&table[k + 1], &table[k]);
    let ratio = if x <= T::one() {
        poly_shifted(num, x) / poly_shifted(den, x)
    } else {
        // divide by x^{k+2} and x^{k+1}; y = eᵗ − 1
        let y = t.exp_m1();
        poly_reversed(num, y) / (y * poly_reversed(den, y))
    };
    Ok(ratio)
}
