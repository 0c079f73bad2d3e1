//! Stirling numbers of the second kind, falling factorials and the six-case
//! extended binomial coefficient.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::specfun::ln_gamma_abs;

/// Default row limit of the shared Stirling table.
pub const DEFAULT_STIRLING_KMAX: usize = 64;

/// Exact triangle S(k, p) for 0 ≤ p ≤ k ≤ k_max.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    rows: Vec<Vec<BigUint>>,
}

impl StirlingTable {
    /// Builds the triangle from S(k+1, p) = p·S(k, p) + S(k, p−1).
    pub fn new(k_max: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(k_max + 1);
        rows.push(vec![BigUint::one()]);
        for k in 0..k_max {
            let prev = &rows[k];
            let mut row = vec![BigUint::zero(); k + 2];
            for p in 1..=k + 1 {
                let stay = if p <= k {
                    &prev[p] * BigUint::from(p)
                } else {
                    BigUint::zero()
                };
                row[p] = stay + &prev[p - 1];
            }
            rows.push(row);
        }
        Self { rows }
    }

    pub fn k_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, k: usize, p: usize) -> Result<&BigUint> {
        if k > self.k_max() {
            return Err(Error::Range(format!(
                "stirling2 row k = {k} exceeds k_max = {}",
                self.k_max()
            )));
        }
        if p > k {
            return Err(Error::Range(format!("stirling2 requires p ≤ k, got k = {k}, p = {p}")));
        }
        Ok(&self.rows[k][p])
    }

    pub fn row(&self, k: usize) -> Option<&[BigUint]> {
        self.rows.get(k).map(Vec::as_slice)
    }

    /// The shared table with k_max = [`DEFAULT_STIRLING_KMAX`].
    pub fn shared() -> &'static StirlingTable {
        static TABLE: OnceLock<StirlingTable> = OnceLock::new();
        TABLE.get_or_init(|| StirlingTable::new(DEFAULT_STIRLING_KMAX))
    }
}

/// Stirling number of the second kind S(k, p) from the shared table.
pub fn stirling2(k: usize, p: usize) -> Result<BigUint> {
    StirlingTable::shared().get(k, p).cloned()
}

/// S(k, p) by the explicit alternating sum
/// (1/p!) Σ_{q=1}^{p} (−1)^{p−q} C(p, q) q^k, in exact integer arithmetic.
pub fn stirling2_explicit(k: usize, p: usize) -> Result<BigUint> {
    if p > k {
        return Err(Error::Range(format!("stirling2 requires p ≤ k, got k = {k}, p = {p}")));
    }
    if p == 0 {
        return Ok(if k == 0 { BigUint::one() } else { BigUint::zero() });
    }
    let mut sum = BigInt::zero();
    let mut binom = BigInt::one(); // C(p, 0)
    for q in 1..=p {
        binom = binom * BigInt::from(p - q + 1) / BigInt::from(q);
        let term = &binom * BigInt::from(q).pow(k as u32);
        if (p - q).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let fact: BigInt = (1..=p).map(BigInt::from).product();
    debug_assert!((&sum % &fact).is_zero());
    (sum / fact)
        .to_biguint()
        .ok_or_else(|| Error::Range(format!("negative explicit sum at k = {k}, p = {p}")))
}

/// Falling factorial ⟨β⟩ₙ = β(β−1)⋯(β−n+1), with ⟨β⟩₀ = 1.
pub fn falling_factorial<T: Scalar>(beta: T, n: usize) -> T {
    let mut acc = T::one();
    let mut factor = beta;
    for _ in 0..n {
        acc = acc * factor;
        factor = factor - T::one();
    }
    acc
}

/// n! exactly through 20!, then Γ(n + 1) in floating point.
fn factorial<T: Scalar>(n: usize) -> T {
    if n <= 20 {
        let exact: u64 = (1..=n as u64).product();
        T::from_u64(exact).unwrap_or_else(T::infinity)
    } else {
        let (lg, _) = ln_gamma_abs(T::from_usize_lossy(n + 1)).unwrap_or((T::infinity(), T::one()));
        lg.exp()
    }
}

/// Branch of the extended binomial coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinomialCase {
    /// z ∉ ℕ₋ and w, z−w ∉ ℕ₋: Γ(z+1)/(Γ(w+1)Γ(z−w+1)).
    GammaRatio,
    /// z ∉ ℕ₋ and (w ∈ ℕ₋ or z−w ∈ ℕ₋).
    ZeroGeneric,
    /// z ∈ ℕ₋, w ∈ ℕ₀: ⟨z⟩_w / w!.
    FallingOverW,
    /// z, w ∈ ℕ₋, z−w ∈ ℕ₀: ⟨z⟩_{z−w} / (z−w)!.
    FallingOverZW,
    /// z, w ∈ ℕ₋, z−w ∈ ℕ₋.
    ZeroNegative,
    /// z ∈ ℕ₋, w ∉ ℤ.
    Infinite,
}

impl BinomialCase {
    pub fn is_zero(self) -> bool {
        matches!(self, BinomialCase::ZeroGeneric | BinomialCase::ZeroNegative)
    }
}

/// Value of the extended binomial coefficient: finite, or the divergent branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BinomValue<T> {
    Finite(T),
    Infinite,
}

impl<T: Scalar> BinomValue<T> {
    pub fn finite(self) -> Option<T> {
        match self {
            BinomValue::Finite(v) => Some(v),
            BinomValue::Infinite => None,
        }
    }

    /// Finite value, or +∞ for the divergent branch.
    pub fn to_scalar(self) -> T {
        self.finite().unwrap_or_else(T::infinity)
    }
}

/// n ∈ ℕ₋ = {−1, −2, …}
fn is_neg_natural<T: Scalar>(v: T) -> bool {
    v.is_integer() && v < T::zero()
}

/// n ∈ ℕ₀ = {0, 1, 2, …}
fn is_nonneg_integer<T: Scalar>(v: T) -> bool {
    v.is_integer() && v >= T::zero()
}

/// Classifies (z, w) into a branch, testing in the order the branches are
/// listed. Integrality is exact (no tolerance). Non-finite input falls
/// through to [`BinomialCase::GammaRatio`], whose evaluation then fails.
pub fn classify_binomial<T: Scalar>(z: T, w: T) -> BinomialCase {
    let d = z - w;
    if !is_neg_natural(z) {
        if !is_neg_natural(w) && !is_neg_natural(d) {
            BinomialCase::GammaRatio
        } else {
            BinomialCase::ZeroGeneric
        }
    } else if is_nonneg_integer(w) {
        BinomialCase::FallingOverW
    } else if is_neg_natural(w) {
        if is_nonneg_integer(d) {
            BinomialCase::FallingOverZW
        } else {
            BinomialCase::ZeroNegative
        }
    } else {
        BinomialCase::Infinite
    }
}

fn integer_index<T: Scalar>(v: T) -> Result<usize> {
    v.to_usize()
        .ok_or_else(|| Error::Range(format!("index {v} does not fit in usize")))
}

/// Extended binomial coefficient C(z, w) for finite real z, w.
pub fn binom<T: Scalar>(z: T, w: T) -> Result<BinomValue<T>> {
    if !z.is_finite() || !w.is_finite() {
        return Err(Error::domain(format!(
            "binom requires finite arguments, got ({z}, {w})"
        )));
    }
    let value = match classify_binomial(z, w) {
        BinomialCase::ZeroGeneric | BinomialCase::ZeroNegative => T::zero(),
        BinomialCase::Infinite => return Ok(BinomValue::Infinite),
        BinomialCase::FallingOverW => {
            let n = integer_index(w)?;
            falling_factorial(z, n) / factorial(n)
        }
        BinomialCase::FallingOverZW => {
            let n = integer_index(z - w)?;
            falling_factorial(z, n) / factorial(n)
        }
        BinomialCase::GammaRatio => gamma_ratio_binom(z, w)?,
    };
    Ok(BinomValue::Finite(value))
}

/// Largest order for which the falling-factorial product replaces the
/// log-gamma evaluation on the generic branch.
const SHORT_PRODUCT: usize = 30;

fn gamma_ratio_binom<T: Scalar>(z: T, w: T) -> Result<T> {
    let d = z - w;
    // Γ(z+1)/(Γ(w+1)Γ(z−w+1)) equals ⟨z⟩_n/n! whenever n = w or z−w is in ℕ₀.
    for n in [w, d] {
        if is_nonneg_integer(n) && n <= T::from_usize_lossy(SHORT_PRODUCT) {
            let n = integer_index(n)?;
            return Ok(falling_factorial(z, n) / factorial(n));
        }
    }
    let (lz, sz) = ln_gamma_abs(z + T::one())?;
    let (lw, sw) = ln_gamma_abs(w + T::one())?;
    let (ld, sd) = ln_gamma_abs(d + T::one())?;
    let value = sz * sw * sd * (lz - lw - ld).exp();
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow(format!(
            "binom({z}, {w}) exceeds the representable range"
        )))
    }
}
