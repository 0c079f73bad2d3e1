use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

/// Outcome of one scan or identity check.
///
/// `worst_margin` is the smallest signed margin seen: positive means the
/// claim held with room to spare. The verdict is `Pass` iff
/// `worst_margin ≥ −slack` and no evaluation failed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub verdict: Verdict,
    #[serde(with = "extended_real")]
    pub worst_margin: f64,
    #[serde(with = "extended_real")]
    pub worst_point: f64,
    pub samples: usize,
    #[serde(with = "extended_real")]
    pub residual_max: f64,
    pub parameters: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// `<claim_id> <PASS|FAIL> worst_margin=<v> at x=<p>`
    pub fn summary_line(&self) -> String {
        let mut line = format!(
            "{} {} worst_margin={:e} at x={}",
            self.claim_id, self.verdict, self.worst_margin, self.worst_point
        );
        if let Some(d) = &self.diagnostic {
            line.push_str(" (");
            line.push_str(d);
            line.push(')');
        }
        line
    }
}

/// One evaluated grid point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub parameter: f64,
    pub value: f64,
    /// Margin attributed to this point (for adjacent-pair checks, the pair
    /// ending here); `None` when the point carries no check of its own.
    pub margin: Option<f64>,
}

/// A report together with the samples it was computed from.
#[derive(Debug, Clone, PartialEq)]
pub struct Scan {
    pub report: VerificationReport,
    pub samples: Vec<Sample>,
}

/// Accumulates margins into a report.
#[derive(Debug, Clone)]
pub(crate) struct MarginTracker {
    claim_id: String,
    parameters: BTreeMap<String, f64>,
    worst_margin: f64,
    worst_point: f64,
    residual_max: f64,
    samples: usize,
    diagnostic: Option<String>,
}

impl MarginTracker {
    pub fn new(claim_id: impl Into<String>) -> Self {
        Self {
            claim_id: claim_id.into(),
            parameters: BTreeMap::new(),
            worst_margin: f64::INFINITY,
            worst_point: f64::NAN,
            residual_max: 0.0,
            samples: 0,
            diagnostic: None,
        }
    }

    pub fn param(mut self, key: &str, value: f64) -> Self {
        self.parameters.insert(key.to_owned(), value);
        self
    }

    pub fn set_param(&mut self, key: &str, value: f64) {
        self.parameters.insert(key.to_owned(), value);
    }

    pub fn sample(&mut self) {
        self.samples += 1;
    }

    pub fn margin(&mut self, point: f64, margin: f64) {
        // NaN margins count as failures
        let m = if margin.is_nan() { f64::NEG_INFINITY } else { margin };
        if m < self.worst_margin || self.worst_point.is_nan() && m == self.worst_margin {
            self.worst_margin = m;
            self.worst_point = point;
        }
    }

    pub fn residual(&mut self, r: f64) {
        let r = if r.is_nan() { f64::INFINITY } else { r };
        self.residual_max = self.residual_max.max(r);
    }

    pub fn error(&mut self, point: f64, err: &Error) {
        if self.diagnostic.is_none() {
            self.diagnostic = Some(format!("evaluation failed at {point}: {err}"));
        }
        self.worst_margin = f64::NEG_INFINITY;
        self.worst_point = point;
        self.residual_max = f64::INFINITY;
    }

    pub fn finish(self, slack: f64) -> VerificationReport {
        let mut parameters = self.parameters;
        parameters.insert("slack".into(), slack);
        let worst_point = if self.worst_point.is_nan() {
            0.0
        } else {
            self.worst_point
        };
        let worst_margin = if self.worst_margin == f64::INFINITY {
            0.0
        } else {
            self.worst_margin
        };
        let ok = self.diagnostic.is_none() && worst_margin >= -slack;
        VerificationReport {
            claim_id: self.claim_id,
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            worst_margin,
            worst_point,
            samples: self.samples,
            residual_max: self.residual_max,
            parameters,
            diagnostic: self.diagnostic,
        }
    }
}

/// Serializes non-finite floats as the strings "inf", "-inf" and "nan" so
/// JSON output round-trips exactly.
mod extended_real {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_f64(*v)
        } else if v.is_nan() {
            s.serialize_str("nan")
        } else if *v > 0.0 {
            s.serialize_str("inf")
        } else {
            s.serialize_str("-inf")
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Num(f64),
        Text(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(v),
            Repr::Text(t) => match t.as_str() {
                "inf" => Ok(f64::INFINITY),
                "-inf" => Ok(f64::NEG_INFINITY),
                "nan" => Ok(f64::NAN),
                other => Err(serde::de::Error::custom(format!("not a number: {other}"))),
            },
        }
    }
}
