//! Grid scans for the zeta-ratio monotonicity, the log-convexity of
//! Γ(x+ℓ)ζ(x), the decreasing kernel ratio, and kernel spot checks.

use crate::bose_kernel::{kernel, kernel_base, kernel_ratio};
use crate::error::{Error, Result};
use crate::specfun::{log_gamma, riemann_zeta};

use super::fd::{default_step, richardson_derivative};
use super::grid::GridSpec;
use super::report::{MarginTracker, Sample, Scan, VerificationReport};

/// Slack for strict monotonicity of log-space values.
pub const MONOTONE_SLACK: f64 = 1e-12;
/// Slack for second-difference convexity checks.
pub const CONVEXITY_SLACK: f64 = 1e-8;
/// Step of the second central difference.
pub const CONVEXITY_STEP: f64 = 1e-3;
/// Required distance of the kernel ratio from 1 at the right end of a
/// t-grid reaching [`RATIO_LIMIT_START`].
pub const RATIO_LIMIT_TOL: f64 = 1e-8;
pub const RATIO_LIMIT_START: f64 = 30.0;

/// ln[C(x+α+ℓ, α)·ζ(x+α)/ζ(x)] for x > 1, α > 0.
pub fn theorem1_log_ratio(x: f64, alpha: f64, ell: u32) -> Result<f64> {
    if !(x > 1.0) || !x.is_finite() {
        return Err(Error::domain(format!("zeta ratio requires x > 1, got x = {x}")));
    }
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::domain(format!(
            "zeta ratio requires alpha > 0, got alpha = {alpha}"
        )));
    }
    let l = f64::from(ell);
    let ln_binom = log_gamma(x + alpha + l + 1.0)? - log_gamma(alpha + 1.0)? - log_gamma(x + l + 1.0)?;
    Ok(ln_binom + riemann_zeta(x + alpha)?.ln() - riemann_zeta(x)?.ln())
}

/// C(x+α+ℓ, α)·ζ(x+α)/ζ(x), evaluated in log space.
pub fn theorem1_ratio(x: f64, alpha: f64, ell: u32) -> Result<f64> {
    let v = theorem1_log_ratio(x, alpha, ell)?.exp();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow(format!(
            "zeta ratio at x = {x}, alpha = {alpha}, ell = {ell}"
        )))
    }
}

/// Adjacent-pair scan asserting f(x_{i+1}) − f(x_i) ≥ −slack.
pub fn scan_increasing<F>(claim_id: &str, grid: &GridSpec, slack: f64, params: &[(&str, f64)], f: F) -> Scan
where
    F: Fn(f64) -> Result<f64>,
{
    let mut tracker = MarginTracker::new(claim_id);
    for &(k, v) in params {
        tracker.set_param(k, v);
    }
    let mut samples = Vec::with_capacity(grid.points);
    let mut prev: Option<(f64, f64)> = None;
    for x in grid.abscissae() {
        tracker.sample();
        match f(x) {
            Ok(v) => {
                let margin = prev.map(|(px, pv)| {
                    let m = v - pv;
                    tracker.margin(px, m);
                    tracker.residual((-m).max(0.0));
                    m
                });
                samples.push(Sample {
                    parameter: x,
                    value: v,
                    margin,
                });
                prev = Some((x, v));
            }
            Err(e) => {
                tracker.error(x, &e);
                samples.push(Sample {
                    parameter: x,
                    value: f64::NAN,
                    margin: None,
                });
                prev = None;
            }
        }
    }
    Scan {
        report: tracker.finish(slack),
        samples,
    }
}

/// Scan asserting Δ²g(x)/h² ≥ −slack at every grid point.
pub fn scan_convex<F>(claim_id: &str, grid: &GridSpec, h: f64, slack: f64, params: &[(&str, f64)], g: F) -> Scan
where
    F: Fn(f64) -> Result<f64>,
{
    let mut tracker = MarginTracker::new(claim_id).param("h", h);
    for &(k, v) in params {
        tracker.set_param(k, v);
    }
    let mut samples = Vec::with_capacity(grid.points);
    for x in grid.abscissae() {
        tracker.sample();
        let triple = [x - h, x, x + h].map(&g);
        match triple {
            [Ok(a), Ok(b), Ok(c)] => {
                let d2 = (c - 2.0 * b + a) / (h * h);
                tracker.margin(x, d2);
                tracker.residual((-d2).max(0.0));
                samples.push(Sample {
                    parameter: x,
                    value: b,
                    margin: Some(d2),
                });
            }
            [a, b, c] => {
                let err = [a, b, c].into_iter().find_map(|r| r.err()).expect("one side failed");
                tracker.error(x, &err);
                samples.push(Sample {
                    parameter: x,
                    value: f64::NAN,
                    margin: None,
                });
            }
        }
    }
    Scan {
        report: tracker.finish(slack),
        samples,
    }
}

fn require_grid_above(grid: &GridSpec, bound: f64, what: &str) -> Result<()> {
    if grid.start <= bound {
        return Err(Error::domain(format!(
            "{what} requires the grid inside ({bound}, ∞), got start = {}",
            grid.start
        )));
    }
    Ok(())
}

/// Increase of x ↦ C(x+α+ℓ, α)ζ(x+α)/ζ(x) on the grid, checked on logs.
pub fn scan_theorem1_monotone(alpha: f64, ell: u32, grid: &GridSpec, slack: f64) -> Result<Scan> {
    require_grid_above(grid, 1.0, "zeta ratio scan")?;
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::domain(format!(
            "zeta ratio requires alpha > 0, got alpha = {alpha}"
        )));
    }
    let id = format!("theorem1.increasing[alpha={alpha},ell={ell}]");
    Ok(scan_increasing(
        &id,
        grid,
        slack,
        &[("alpha", alpha), ("ell", f64::from(ell))],
        |x| theorem1_log_ratio(x, alpha, ell),
    ))
}

/// Endpoint shadows of the image (0, ∞): tiny just right of 1, large at 40.
pub fn check_theorem1_limits() -> VerificationReport {
    let mut tracker = MarginTracker::new("theorem1.onto")
        .param("alpha", 1.0)
        .param("ell", 0.0);
    type Margin = fn(f64) -> f64;
    let checks: [(f64, Margin); 2] = [(1.0001, |v| 1e-3 - v), (40.0, |v| v - 40.0)];
    for (x, margin) in checks {
        tracker.sample();
        match theorem1_ratio(x, 1.0, 0) {
            Ok(v) => {
                let m = margin(v);
                tracker.margin(x, m);
                tracker.residual((-m).max(0.0));
            }
            Err(e) => tracker.error(x, &e),
        }
    }
    tracker.finish(0.0)
}

/// ln Γ(x+ℓ) + ln ζ(x)
pub fn log_gamma_zeta(x: f64, ell: u32) -> Result<f64> {
    Ok(log_gamma(x + f64::from(ell))? + riemann_zeta(x)?.ln())
}

/// Convexity of ln[Γ(x+ℓ)ζ(x)] by second central differences.
pub fn scan_log_convexity(ell: u32, grid: &GridSpec, h: f64, slack: f64) -> Result<Scan> {
    if ell == 0 {
        return Err(Error::domain("log-convexity scan requires ell ≥ 1"));
    }
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::domain(format!("difference step must be positive, got h = {h}")));
    }
    require_grid_above(grid, 1.0 + h, "log-convexity scan")?;
    let id = format!("logconvex[ell={ell}]");
    Ok(scan_convex(&id, grid, h, slack, &[("ell", f64::from(ell))], |x| {
        log_gamma_zeta(x, ell)
    }))
}

/// Decrease of 𝓕ₖ₊₁/𝓕ₖ on the grid, values above 1, and the limit 1 at the
/// right end when the grid reaches t = 30.
///
/// Margins: ln r_i − ln r_{i+1} per adjacent pair, ln r_i per point, and
/// 1e−8 − |r_end − 1| for the limit.
pub fn scan_proposition_ratio(k: usize, grid: &GridSpec, slack: f64) -> Result<Scan> {
    require_grid_above(grid, 0.0, "kernel ratio scan")?;
    let mut tracker = MarginTracker::new(format!("prop1.decreasing[k={k}]")).param("k", k as f64);
    let mut samples = Vec::with_capacity(grid.points);
    let mut prev: Option<(f64, f64)> = None;
    let mut min_value = f64::INFINITY;
    for t in grid.abscissae() {
        tracker.sample();
        match kernel_ratio(k, t) {
            Ok(r) => {
                let ln_r = r.ln();
                min_value = min_value.min(r);
                tracker.margin(t, ln_r);
                let margin = prev.map(|(pt, pl)| {
                    let m = pl - ln_r;
                    tracker.margin(pt, m);
                    tracker.residual((-m).max(0.0));
                    m
                });
                samples.push(Sample {
                    parameter: t,
                    value: r,
                    margin,
                });
                prev = Some((t, ln_r));
            }
            Err(e) => {
                tracker.error(t, &e);
                samples.push(Sample {
                    parameter: t,
                    value: f64::NAN,
                    margin: None,
                });
                prev = None;
            }
        }
    }
    tracker.set_param("min_value", min_value);
    if grid.end >= RATIO_LIMIT_START {
        if let Some(last) = samples.last().filter(|s| s.value.is_finite()) {
            let resid = (last.value - 1.0).abs();
            tracker.set_param("limit_residual", resid);
            tracker.margin(last.parameter, RATIO_LIMIT_TOL - resid);
        }
    }
    Ok(Scan {
        report: tracker.finish(slack),
        samples,
    })
}

/// 𝓕ₖ(t) > 0 for all k ≤ k_max on the grid.
pub fn check_kernel_positivity(k_max: usize, grid: &GridSpec) -> Result<VerificationReport> {
    require_grid_above(grid, 0.0, "kernel positivity check")?;
    let mut tracker = MarginTracker::new("lemma4.positive").param("k_max", k_max as f64);
    for t in grid.abscissae() {
        for k in 0..=k_max {
            tracker.sample();
            match kernel(k, t) {
                // the margin is the kernel value itself; zero (underflow) fails
                Ok(v) => tracker.margin(t, if v > 0.0 { v } else { f64::NEG_INFINITY }),
                Err(e) => tracker.error(t, &e),
            }
        }
    }
    Ok(tracker.finish(0.0))
}

/// (−1)ⁿ dⁿ/dtⁿ [1/(eᵗ − 1)] ≥ 0 by Richardson finite differences.
pub fn check_complete_monotonicity(max_order: usize, points: &[f64]) -> VerificationReport {
    let mut tracker = MarginTracker::new("lemma4.completely_monotone").param("max_order", max_order as f64);
    let base = |t: f64| kernel_base(t).unwrap_or(f64::NAN);
    for &t in points {
        for n in 0..=max_order {
            tracker.sample();
            let d = richardson_derivative(&base, t, n, default_step(t, n), 4);
            let signed = if n % 2 == 0 { d } else { -d };
            tracker.margin(t, signed);
            tracker.residual((-signed).max(0.0));
        }
    }
    tracker.finish(0.0)
}

/// Closed-form 𝓕ₖ against Richardson differences of 1/(eᵗ − 1), relative.
pub fn check_kernel_derivatives(max_order: usize, points: &[f64], rel_tol: f64) -> VerificationReport {
    let mut tracker = MarginTracker::new("lemma2.derivatives").param("max_order", max_order as f64);
    tracker.set_param("tolerance", rel_tol);
    let base = |t: f64| kernel_base(t).unwrap_or(f64::NAN);
    for &t in points {
        for k in 1..=max_order {
            tracker.sample();
            match kernel(k, t) {
                Ok(exact) => {
                    let d = richardson_derivative(&base, t, k, default_step(t, k), 4);
                    let signed = if k % 2 == 0 { d } else { -d };
                    let resid = ((exact - signed) / exact).abs();
                    tracker.residual(resid);
                    tracker.margin(t, rel_tol - resid);
                }
                Err(e) => tracker.error(t, &e),
            }
        }
    }
    tracker.finish(0.0)
}
