//! Special functions around the Riemann zeta function and numerical
//! certification of monotonicity and log-convexity results built on them.
//!
//! The numeric core ([`specfun`], [`combinatorics`], [`bose_kernel`], [`quad`])
//! is generic over [`Scalar`] (`f32` or `f64`). Stirling numbers are exact
//! big integers. The [`verify`] and [`cli`] layers work in [`Real`] (`f64`).

pub mod bose_kernel;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod quad;
pub mod scalar;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Scalar type used by the verification layer and the CLI.
pub type Real = f64;

/// Single precision variant of the numeric core.
pub type Real32 = f32;

pub type KernelParams64 = bose_kernel::KernelParams<Real>;
pub type QuadratureResult64 = quad::QuadratureResult<Real>;
pub type BinomValue64 = combinatorics::BinomValue<Real>;
