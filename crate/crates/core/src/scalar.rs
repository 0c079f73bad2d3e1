//! Floating point abstraction for the numeric core.

use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point scalar: `f32` or `f64`.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + LowerExp + Send + Sync + 'static
{
    /// Converts an `f64` constant, rounding to the nearest representable value.
    #[inline]
    fn c(v: f64) -> Self {
        Self::from_f64(v).expect("f64 constant converts to every Scalar")
    }

    #[inline]
    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).unwrap_or_else(Self::infinity)
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// True when the value is a finite integer (no tolerance).
    #[inline]
    fn is_integer(self) -> bool {
        self.is_finite() && self.fract() == Self::zero()
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// sin(πx) with exact argument reduction, so it vanishes exactly at integers.
pub fn sin_pi<T: Scalar>(x: T) -> T {
    let two = T::c(2.0);
    // x mod 2 in [0, 2), exact in floating point
    let mut r = x - two * (x / two).floor();
    let mut sign = T::one();
    if r >= T::one() {
        r = r - T::one();
        sign = -sign;
    }
    if r == T::zero() {
        return T::zero();
    }
    if r > T::c(0.5) {
        r = T::one() - r;
    }
    sign * (T::PI() * r).sin()
}
