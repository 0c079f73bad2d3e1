//! Identities behind the zeta-ratio monotonicity argument: the integration
//! by parts between kernel moments, the gamma-ratio/binomial bridge, and the
//! two ratio-of-integrals forms.

use crate::combinatorics::binom;
use crate::error::{Error, Result};
use crate::quad::integrate_kernel_moment;
use crate::specfun::{gamma, riemann_zeta};

use super::grid::GridSpec;
use super::report::{MarginTracker, VerificationReport};

/// Relative residual bound of the quadrature-based identities, in units of tol.
pub const QUADRATURE_FACTOR: f64 = 5.0;
/// Relative residual bound of the binomial bridge.
pub const BRIDGE_TOL: f64 = 1e-11;

const RATIO_POINTS: [(f64, f64); 3] = [(2.0, 1.0), (3.0, 0.5), (5.0, 2.0)];
const RATIO_FORM_ELL: u32 = 2;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn moment(k: usize, s: f64, tol: f64) -> Result<f64> {
    Ok(integrate_kernel_moment(k, s, tol)?.value)
}

fn record(tracker: &mut MarginTracker, point: f64, bound: f64, residual: Result<f64>) {
    tracker.sample();
    match residual {
        Ok(r) => {
            tracker.residual(r);
            tracker.margin(point, bound - r);
        }
        Err(e) => tracker.error(point, &e),
    }
}

/// Γ(x+α+ℓ)/Γ(x+ℓ)·ζ(x+α)/ζ(x)
fn gamma_zeta_ratio(x: f64, alpha: f64, ell: u32) -> Result<f64> {
    let l = f64::from(ell);
    Ok(gamma(x + alpha + l)? / gamma(x + l)? * riemann_zeta(x + alpha)? / riemann_zeta(x)?)
}

/// Γ(x+α+1)/Γ(x+1)·ζ(x+α)/ζ(x) = ∫𝓕₁ t^{x+α} / ∫𝓕₁ tˣ.
pub fn check_ibp_ratio(tol: f64) -> VerificationReport {
    let bound = QUADRATURE_FACTOR * tol;
    let mut tracker = MarginTracker::new("identities.ibp_ratio").param("tol", tol);
    for (x, alpha) in RATIO_POINTS {
        let residual = (|| {
            let lhs = gamma_zeta_ratio(x, alpha, 1)?;
            let rhs = moment(1, x + alpha, tol)? / moment(1, x, tol)?;
            Ok(rel(rhs, lhs))
        })();
        record(&mut tracker, x, bound, residual);
    }
    tracker.finish(0.0)
}

/// Γ(x+α+1)/Γ(x+1) = Γ(α+1)·C(x+α, α) on a grid in (1, 20).
pub fn check_binomial_bridge() -> Result<VerificationReport> {
    let mut tracker = MarginTracker::new("identities.binomial_bridge").param("tolerance", BRIDGE_TOL);
    let grid = GridSpec::linear(1.05, 19.95, 40)?;
    for alpha in [0.5, 1.0, 2.5] {
        for x in grid.abscissae() {
            let residual = (|| {
                let lhs = gamma(x + alpha + 1.0)? / gamma(x + 1.0)?;
                let c = binom(x + alpha, alpha)?
                    .finite()
                    .ok_or_else(|| Error::Overflow("binomial diverged".into()))?;
                Ok(rel(gamma(alpha + 1.0)? * c, lhs))
            })();
            record(&mut tracker, x, BRIDGE_TOL, residual);
        }
    }
    Ok(tracker.finish(0.0))
}

/// ∫𝓕ₖ₊₁ t^{s+1} = (s+1)·∫𝓕ₖ tˢ (boundary terms vanish).
pub fn check_ibp_moments(tol: f64) -> VerificationReport {
    let bound = QUADRATURE_FACTOR * tol;
    let mut tracker = MarginTracker::new("identities.ibp_moment").param("tol", tol);
    for k in 0..=2usize {
        for s in [3.0, 4.5, 6.0, 9.0] {
            let residual = (|| {
                let lhs = moment(k + 1, s + 1.0, tol)?;
                let rhs = (s + 1.0) * moment(k, s, tol)?;
                Ok(rel(lhs, rhs))
            })();
            record(&mut tracker, s, bound, residual);
        }
    }
    tracker.finish(0.0)
}

/// Γ(x+α+ℓ)/Γ(x+ℓ)·ζ(x+α)/ζ(x) = ∫𝓕ℓ t^{x+α+ℓ−1} / ∫𝓕ℓ t^{x+ℓ−1}.
///
/// The moment ∫𝓕ℓ tˢ equals Γ(s+1)ζ(s−ℓ+1), which fixes the exponents.
pub fn check_ratio_form(tol: f64) -> VerificationReport {
    let bound = QUADRATURE_FACTOR * tol;
    let ell = RATIO_FORM_ELL;
    let l = f64::from(ell);
    let mut tracker = MarginTracker::new("identities.ratio_form")
        .param("tol", tol)
        .param("ell", l);
    for (x, alpha) in RATIO_POINTS {
        let residual = (|| {
            let lhs = gamma_zeta_ratio(x, alpha, ell)?;
            let k = ell as usize;
            let rhs = moment(k, x + alpha + l - 1.0, tol)? / moment(k, x + l - 1.0, tol)?;
            Ok(rel(rhs, lhs))
        })();
        record(&mut tracker, x, bound, residual);
    }
    tracker.finish(0.0)
}

/// All four identity reports.
pub fn check_proof_identities(tol: f64) -> Result<Vec<VerificationReport>> {
    if !(tol > 0.0) {
        return Err(Error::domain(format!("tolerance must be positive, got {tol}")));
    }
    Ok(vec![
        check_ibp_ratio(tol),
        check_binomial_bridge()?,
        check_ibp_moments(tol),
        check_ratio_form(tol),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{zeta, ZetaRoute};

    #[test]
    fn bridge_integer_case_is_exact() {
        let lhs = gamma(4.0).unwrap() / gamma(3.0).unwrap();
        let rhs = gamma(2.0).unwrap() * binom(3.0, 1.0).unwrap().finite().unwrap();
        assert_eq!(lhs, 3.0);
        assert_eq!(rhs, 3.0);
    }

    #[test]
    fn moment_identity_against_series() {
        // ∫𝓕₁t⁴ = 4·∫𝓕₀t³ = 4·Γ(4)ζ(4)
        let lhs = moment(1, 4.0, 1e-10).unwrap();
        let oracle = 4.0 * 6.0 * zeta(4.0, ZetaRoute::DirectSeries).unwrap();
        assert!(rel(lhs, oracle) < 5e-10);
    }

    #[test]
    fn all_identities_pass() {
        for r in check_proof_identities(1e-9).unwrap() {
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn unshifted_exponents_do_not_give_the_ratio() {
        // with exponents x+α+ℓ and x+ℓ the quotient is the same ratio at x+1
        let (x, alpha, ell) = (2.0, 1.0, 2u32);
        let lhs = gamma_zeta_ratio(x, alpha, ell).unwrap();
        let l = f64::from(ell);
        let unshifted = moment(2, x + alpha + l, 1e-10).unwrap() / moment(2, x + l, 1e-10).unwrap();
        assert!(rel(unshifted, lhs) > 0.1);
        assert!(rel(unshifted, gamma_zeta_ratio(x + 1.0, alpha, ell).unwrap()) < 1e-9);
    }
}
