//! Grid-based numerical evidence for the monotonicity, log-convexity and
//! kernel-ratio results, plus the identities used to derive them.
//!
//! Every check produces a [`VerificationReport`]. Monotonicity is asserted
//! only between adjacent grid points, never in between. Scans are
//! sequential and deterministic: the same inputs give bit-identical reports.

pub mod fd;
mod grid;
pub mod identities;
pub mod lemma;
mod report;
pub mod suite;
pub mod theorems;

pub use grid::{GridSpec, Spacing};
pub use identities::check_proof_identities;
pub use lemma::{ratio_of_integrals, Integrand};
pub use report::{Sample, Scan, Verdict, VerificationReport};
pub use theorems::{
    scan_log_convexity, scan_proposition_ratio, scan_theorem1_monotone, theorem1_log_ratio, theorem1_ratio,
};
