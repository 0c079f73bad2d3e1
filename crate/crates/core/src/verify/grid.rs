use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Linear,
    Logarithmic,
}

/// Sampling grid for a scan. Abscissae are strictly increasing and hit both
/// endpoints exactly.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub start: f64,
    pub end: f64,
    pub points: usize,
    pub spacing: Spacing,
}

impl GridSpec {
    pub fn new(start: f64, end: f64, points: usize, spacing: Spacing) -> Result<Self> {
        if !(start.is_finite() && end.is_finite() && start < end) {
            return Err(Error::domain(format!(
                "grid requires start < end, got [{start}, {end}]"
            )));
        }
        if points < 2 {
            return Err(Error::domain(format!("grid requires at least 2 points, got {points}")));
        }
        if spacing == Spacing::Logarithmic && start <= 0.0 {
            return Err(Error::domain(format!(
                "logarithmic grid requires start > 0, got {start}"
            )));
        }
        let grid = Self {
            start,
            end,
            points,
            spacing,
        };
        let xs = grid.abscissae();
        if xs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::domain(format!(
                "{points} points do not resolve [{start}, {end}] into increasing abscissae"
            )));
        }
        Ok(grid)
    }

    pub fn linear(start: f64, end: f64, points: usize) -> Result<Self> {
        Self::new(start, end, points, Spacing::Linear)
    }

    pub fn log(start: f64, end: f64, points: usize) -> Result<Self> {
        Self::new(start, end, points, Spacing::Logarithmic)
    }

    pub fn abscissae(&self) -> Vec<f64> {
        let n = self.points - 1;
        let mut xs: Vec<f64> = match self.spacing {
            Spacing::Linear => {
                let step = (self.end - self.start) / n as f64;
                (0..=n).map(|i| self.start + step * i as f64).collect()
            }
            Spacing::Logarithmic => {
                let (la, lb) = (self.start.ln(), self.end.ln());
                let step = (lb - la) / n as f64;
                (0..=n).map(|i| (la + step * i as f64).exp()).collect()
            }
        };
        xs[0] = self.start;
        xs[n] = self.end;
        xs
    }

    /// Same range with the spacing halved (2n − 1 points).
    pub fn refined(&self) -> Self {
        Self {
            points: 2 * self.points - 1,
            ..*self
        }
    }
}
