//! Ratios of parametrized integrals R(x) = ∫ tˣ U(t) dt / ∫ tˣ V(t) dt and
//! the monotonicity rule relating the direction of R to those of U/V and
//! ∂ₓW/W for W(t, x) = tˣ.

use crate::bose_kernel::kernel;
use crate::error::Result;
use crate::quad::integrate_kernel_moment;

use super::grid::GridSpec;
use super::report::{MarginTracker, VerificationReport};

/// Integrand family 𝓕ₖ(t)·t^c. Order 1 is eᵗ/(eᵗ − 1)²·t^c.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integrand {
    pub order: usize,
    pub power: f64,
}

impl Integrand {
    pub fn kernel(order: usize, power: f64) -> Self {
        Self { order, power }
    }

    /// eᵗ/(eᵗ − 1)²·t^c
    pub fn bose_derivative(power: f64) -> Self {
        Self { order: 1, power }
    }

    pub fn eval(&self, t: f64) -> Result<f64> {
        Ok(kernel(self.order, t)? * t.powf(self.power))
    }

    /// ∫₀^∞ tˣ·𝓕ₖ(t)·t^c dt
    pub fn weighted_moment(&self, x: f64, tol: f64) -> Result<f64> {
        Ok(integrate_kernel_moment(self.order, x + self.power, tol)?.value)
    }
}

/// R(x) = ∫ tˣ U dt / ∫ tˣ V dt.
pub fn ratio_of_integrals(u: Integrand, v: Integrand, x: f64, tol: f64) -> Result<f64> {
    Ok(u.weighted_moment(x, tol)? / v.weighted_moment(x, tol)?)
}

/// ∂ₓW/W for W(t, x) = tˣ, by a central difference in x.
pub fn weight_log_derivative(t: f64, x: f64) -> f64 {
    let h = 1e-5;
    (t.powf(x + h) - t.powf(x - h)) / (2.0 * h * t.powf(x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Increasing,
    Decreasing,
    Constant,
}

impl Direction {
    fn sign(self) -> f64 {
        match self {
            Direction::Increasing => 1.0,
            Direction::Decreasing => -1.0,
            Direction::Constant => 0.0,
        }
    }
}

/// Direction of a sampled sequence up to `slack`, or None if it is not monotone.
pub fn classify_direction(values: &[f64], slack: f64) -> Option<Direction> {
    let diffs: Vec<f64> = values.windows(2).map(|w| w[1] - w[0]).collect();
    if diffs.iter().all(|d| d.abs() <= slack) {
        Some(Direction::Constant)
    } else if diffs.iter().all(|&d| d >= -slack) {
        Some(Direction::Increasing)
    } else if diffs.iter().all(|&d| d <= slack) {
        Some(Direction::Decreasing)
    } else {
        None
    }
}

const HYPOTHESIS_SLACK: f64 = 1e-12;

/// Certifies the hypotheses on `t_grid`, predicts the direction of R, then
/// checks R on the increasing sequence `xs`.
///
/// Margins are sign-adjusted adjacent differences of ln R; for a constant
/// prediction the margin is `slack − |ln R|`. A failed hypothesis fails the
/// report.
pub fn check_monotonicity_rule(
    claim_id: &str,
    u: Integrand,
    v: Integrand,
    xs: &[f64],
    t_grid: &GridSpec,
    tol: f64,
) -> VerificationReport {
    let slack = 4.0 * tol;
    let mut tracker = MarginTracker::new(claim_id)
        .param("u_order", u.order as f64)
        .param("u_power", u.power)
        .param("v_order", v.order as f64)
        .param("v_power", v.power)
        .param("tol", tol);

    let ts = t_grid.abscissae();
    let mut log_uv = Vec::with_capacity(ts.len());
    let mut weight = Vec::with_capacity(ts.len());
    for &t in &ts {
        match (u.eval(t), v.eval(t)) {
            (Ok(a), Ok(b)) => log_uv.push(a.ln() - b.ln()),
            (Err(e), _) | (_, Err(e)) => {
                tracker.error(t, &e);
                return tracker.finish(slack);
            }
        }
        weight.push(weight_log_derivative(t, xs.first().copied().unwrap_or(1.0)));
    }
    let uv_dir = classify_direction(&log_uv, HYPOTHESIS_SLACK);
    let w_dir = classify_direction(&weight, 1e-6);
    let predicted = match (uv_dir, w_dir) {
        (Some(Direction::Constant), _) => Direction::Constant,
        (Some(a), Some(b)) if a == b => Direction::Increasing,
        (Some(Direction::Increasing), Some(Direction::Decreasing))
        | (Some(Direction::Decreasing), Some(Direction::Increasing)) => Direction::Decreasing,
        _ => {
            tracker.margin(ts[0], f64::NEG_INFINITY);
            tracker.set_param("hypotheses_hold", 0.0);
            return tracker.finish(slack);
        }
    };
    tracker.set_param("hypotheses_hold", 1.0);
    tracker.set_param("predicted_direction", predicted.sign());

    let mut prev: Option<f64> = None;
    for &x in xs {
        tracker.sample();
        match ratio_of_integrals(u, v, x, tol) {
            Ok(r) => {
                let lr = r.ln();
                match predicted {
                    Direction::Constant => {
                        tracker.margin(x, slack - lr.abs());
                        tracker.residual(lr.abs());
                    }
                    dir => {
                        if let Some(p) = prev {
                            let m = dir.sign() * (lr - p);
                            tracker.margin(x, m);
                            tracker.residual((-m).max(0.0));
                        }
                    }
                }
                prev = Some(lr);
            }
            Err(e) => tracker.error(x, &e),
        }
    }
    // the constant case folds the slack into its margins
    match predicted {
        Direction::Constant => tracker.finish(0.0),
        _ => tracker.finish(slack),
    }
}
