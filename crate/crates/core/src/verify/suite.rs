//! Default scan configurations.

use crate::error::Result;

use super::grid::GridSpec;
use super::identities::check_proof_identities;
use super::lemma::{check_monotonicity_rule, Integrand};
use super::report::{Scan, VerificationReport};
use super::theorems::*;

pub const THEOREM1_ALPHAS: [f64; 3] = [0.5, 1.0, 2.5];
pub const THEOREM1_ELLS: [u32; 3] = [0, 1, 4];
pub const LOGCONVEX_ELLS: [u32; 3] = [1, 2, 5];
pub const PROP1_ORDERS: [usize; 4] = [0, 1, 2, 3];
pub const DEFAULT_TOL: f64 = 1e-9;

pub fn theorem1_grid() -> GridSpec {
    GridSpec::log(1.01, 40.0, 200).expect("static grid")
}

pub fn logconvex_grid() -> GridSpec {
    GridSpec::log(1.05, 30.0, 100).expect("static grid")
}

pub fn prop1_grid() -> GridSpec {
    GridSpec::log(0.01, 30.0, 300).expect("static grid")
}

pub fn positivity_grid() -> GridSpec {
    GridSpec::log(1e-4, 60.0, 200).expect("static grid")
}

fn lemma1_t_grid() -> GridSpec {
    GridSpec::log(0.05, 40.0, 80).expect("static grid")
}

/// Wraps a report that has no per-point samples.
pub fn unsampled(report: VerificationReport) -> Scan {
    Scan {
        report,
        samples: Vec::new(),
    }
}

pub fn theorem1_scans(alphas: &[f64], ells: &[u32], grid: &GridSpec, slack: f64) -> Result<Vec<Scan>> {
    let mut out = Vec::new();
    for &alpha in alphas {
        for &ell in ells {
            out.push(scan_theorem1_monotone(alpha, ell, grid, slack)?);
        }
    }
    out.push(unsampled(check_theorem1_limits()));
    Ok(out)
}

pub fn logconvex_scans(ells: &[u32], grid: &GridSpec, h: f64, slack: f64) -> Result<Vec<Scan>> {
    ells.iter()
        .map(|&ell| scan_log_convexity(ell, grid, h, slack))
        .collect()
}

pub fn prop1_scans(orders: &[usize], grid: &GridSpec, slack: f64) -> Result<Vec<Scan>> {
    orders.iter().map(|&k| scan_proposition_ratio(k, grid, slack)).collect()
}

/// Three instances of the monotonicity rule: U/V = t^α with α > 0, U/V = t^{−1}, and U = V.
pub fn lemma1_reports(alpha: f64, tol: f64) -> Vec<VerificationReport> {
    let xs = [2.0, 4.0, 8.0];
    let t_grid = lemma1_t_grid();
    let v = Integrand::bose_derivative(1.0);
    vec![
        check_monotonicity_rule(
            "lemma1.same_direction",
            Integrand::bose_derivative(alpha + 1.0),
            v,
            &xs,
            &t_grid,
            tol,
        ),
        check_monotonicity_rule(
            "lemma1.opposite_direction",
            Integrand::bose_derivative(0.0),
            v,
            &xs,
            &t_grid,
            tol,
        ),
        check_monotonicity_rule("lemma1.identical", v, v, &xs, &t_grid, tol),
    ]
}

pub fn lemma4_reports() -> Result<Vec<VerificationReport>> {
    Ok(vec![
        check_kernel_derivatives(5, &[0.5, 1.0, 2.0, 5.0], 1e-5),
        check_complete_monotonicity(4, &[0.5, 1.0, 3.0]),
        check_kernel_positivity(8, &positivity_grid())?,
    ])
}

/// Every default scan.
pub fn all_scans() -> Result<Vec<Scan>> {
    let mut out = theorem1_scans(&THEOREM1_ALPHAS, &THEOREM1_ELLS, &theorem1_grid(), MONOTONE_SLACK)?;
    out.extend(logconvex_scans(
        &LOGCONVEX_ELLS,
        &logconvex_grid(),
        CONVEXITY_STEP,
        CONVEXITY_SLACK,
    )?);
    out.extend(prop1_scans(&PROP1_ORDERS, &prop1_grid(), MONOTONE_SLACK)?);
    out.extend(lemma1_reports(1.0, DEFAULT_TOL).into_iter().map(unsampled));
    out.extend(check_proof_identities(DEFAULT_TOL)?.into_iter().map(unsampled));
    out.extend(lemma4_reports()?.into_iter().map(unsampled));
    Ok(out)
}
