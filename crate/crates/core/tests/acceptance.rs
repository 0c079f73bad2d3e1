//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test --test acceptance`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use num_bigint::BigUint;

use zetacert::bose_kernel::{kernel, kernel_ratio};
use zetacert::combinatorics::{binom, stirling2, stirling2_explicit, BinomValue};
use zetacert::specfun::{zeta, ZetaRoute};
use zetacert::verify::theorems::{
    check_complete_monotonicity, check_kernel_derivatives, check_kernel_positivity, check_theorem1_limits,
};
use zetacert::verify::{
    check_proof_identities, scan_log_convexity, scan_proposition_ratio, scan_theorem1_monotone, theorem1_ratio,
    GridSpec, VerificationReport,
};

type Outcome = Result<String, String>;
type Criterion = fn() -> Outcome;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ensure_report(r: &VerificationReport) -> Result<(), String> {
    ensure(r.passed(), || r.summary_line())
}

fn finite_binom(z: f64, w: f64) -> Result<f64, String> {
    match binom(z, w).map_err(|e| e.to_string())? {
        BinomValue::Finite(v) => Ok(v),
        BinomValue::Infinite => Err(format!("binom({z}, {w}) diverged")),
    }
}

fn zeta_correctness() -> Outcome {
    let pi2_6 = std::f64::consts::PI.powi(2) / 6.0;
    let z2 = zeta(2.0, ZetaRoute::AlternatingSeries).map_err(|e| e.to_string())?;
    ensure(rel(z2, pi2_6) <= 1e-12, || format!("zeta(2) = {z2}"))?;
    let mut worst_routes = 0.0_f64;
    for x in GridSpec::linear(1.1, 30.0, 50).map_err(|e| e.to_string())?.abscissae() {
        let v: Vec<f64> = ZetaRoute::SERIES
            .iter()
            .map(|&r| zeta(x, r))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        for a in &v {
            for b in &v {
                worst_routes = worst_routes.max(rel(*a, *b));
            }
        }
    }
    ensure(worst_routes <= 1e-12, || format!("route deviation {worst_routes:e}"))?;
    let mut worst_integral = 0.0_f64;
    for x in [1.5, 2.0, 3.0, 10.0, 25.0] {
        let i = zeta(x, ZetaRoute::IntegralRepresentation).map_err(|e| e.to_string())?;
        let s = zeta(x, ZetaRoute::DirectSeries).map_err(|e| e.to_string())?;
        worst_integral = worst_integral.max(rel(i, s));
    }
    ensure(worst_integral <= 1e-8, || {
        format!("integral deviation {worst_integral:e}")
    })?;
    Ok(format!("routes {worst_routes:.1e}, integral {worst_integral:.1e}"))
}

fn kernel_derivatives() -> Outcome {
    let r = check_kernel_derivatives(5, &[0.5, 1.0, 2.0, 5.0], 1e-5);
    ensure_report(&r)?;
    let ln2 = std::f64::consts::LN_2;
    let f1: f64 = kernel(1, ln2).map_err(|e| e.to_string())?;
    let f2 = kernel(2, ln2).map_err(|e| e.to_string())?;
    ensure((f1 - 2.0).abs() <= 1e-13 && (f2 - 6.0).abs() <= 1e-13, || {
        format!("F(1, ln 2) = {f1}, F(2, ln 2) = {f2}")
    })?;
    Ok(format!("max FD residual {:.1e}", r.residual_max))
}

fn theorem1_monotone() -> Outcome {
    let g = GridSpec::log(1.01, 40.0, 200).map_err(|e| e.to_string())?;
    let mut worst = f64::INFINITY;
    for alpha in [0.5, 1.0, 2.5] {
        for ell in [0, 1, 4] {
            let scan = scan_theorem1_monotone(alpha, ell, &g, 1e-12).map_err(|e| e.to_string())?;
            ensure_report(&scan.report)?;
            worst = worst.min(scan.report.worst_margin);
        }
    }
    ensure_report(&check_theorem1_limits())?;
    let lo = theorem1_ratio(1.0001, 1.0, 0).map_err(|e| e.to_string())?;
    let hi = theorem1_ratio(40.0, 1.0, 0).map_err(|e| e.to_string())?;
    ensure(lo < 1e-3 && hi > 40.0, || format!("endpoints {lo:e}, {hi}"))?;
    Ok(format!("9 scans, worst margin {worst:.2e}"))
}

fn log_convexity() -> Outcome {
    let g = GridSpec::log(1.05, 30.0, 100).map_err(|e| e.to_string())?;
    let mut worst = f64::INFINITY;
    for ell in [1, 2, 5] {
        let scan = scan_log_convexity(ell, &g, 1e-3, 1e-8).map_err(|e| e.to_string())?;
        ensure_report(&scan.report)?;
        worst = worst.min(scan.report.worst_margin);
    }
    Ok(format!("3 scans, worst margin {worst:.2e}"))
}

fn proposition_ratio() -> Outcome {
    let g = GridSpec::log(0.01, 30.0, 300).map_err(|e| e.to_string())?;
    for k in 0..=3 {
        let scan = scan_proposition_ratio(k, &g, 1e-12).map_err(|e| e.to_string())?;
        ensure_report(&scan.report)?;
        ensure(scan.samples.iter().all(|s| s.value > 1.0), || {
            format!("k = {k}: value ≤ 1")
        })?;
        let end: f64 = kernel_ratio(k, 30.0).map_err(|e| e.to_string())?;
        ensure((end - 1.0).abs() <= 1e-8, || format!("F_ratio({k}, 30) = {end}"))?;
    }
    let near: f64 = kernel_ratio(1, 0.01).map_err(|e| e.to_string())?;
    ensure((150.0..=250.0).contains(&near), || format!("F_ratio(1, 0.01) = {near}"))?;
    Ok(format!("4 scans, F_ratio(1, 0.01) = {near:.4}"))
}

fn proof_identities() -> Outcome {
    let reports = check_proof_identities(1e-9).map_err(|e| e.to_string())?;
    ensure(reports.len() == 4, || format!("{} reports", reports.len()))?;
    for r in &reports {
        ensure_report(r)?;
    }
    let worst = reports.iter().map(|r| r.residual_max).fold(0.0, f64::max);
    Ok(format!("4 identities, max residual {worst:.1e}"))
}

fn extended_binomial() -> Outcome {
    let cases = [(5.0, 2.0, 10.0), (-3.0, 2.0, 6.0), (-2.0, -1.0, 0.0), (2.5, -1.0, 0.0)];
    for (z, w, want) in cases {
        let v = finite_binom(z, w)?;
        ensure(v == want, || format!("binom({z}, {w}) = {v}"))?;
    }
    ensure(matches!(binom(-1.0, 0.5), Ok(BinomValue::Infinite)), || {
        "binom(-1, 0.5) not infinite".into()
    })?;
    let mut worst = 0.0_f64;
    for w in [1.2, 2.5, 4.9] {
        let pascal = finite_binom(6.3, w)? + finite_binom(6.3, w - 1.0)?;
        worst = worst.max(rel(pascal, finite_binom(7.3, w)?));
    }
    for (z, w) in [(7.3, 1.2), (7.3, 2.5), (10.7, 3.3), (0.4, 0.15), (15.5, 6.25)] {
        worst = worst.max(rel(finite_binom(z, z - w)?, finite_binom(z, w)?));
    }
    ensure(worst <= 1e-10, || format!("Pascal/symmetry deviation {worst:e}"))?;
    Ok(format!("identity deviation {worst:.1e}"))
}

fn stirling_exactness() -> Outcome {
    for k in 0..=20 {
        for p in 0..=k {
            let a = stirling2(k, p).map_err(|e| e.to_string())?;
            let b = stirling2_explicit(k, p).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("S({k}, {p}): {a} vs {b}"))?;
        }
    }
    let bell: [u64; 11] = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975];
    for (k, &b) in bell.iter().enumerate() {
        let row: BigUint = (0..=k).map(|p| stirling2(k, p).unwrap()).sum();
        ensure(row == BigUint::from(b), || format!("row {k} sums to {row}"))?;
    }
    Ok("231 entries exact, Bell rows 0..=10".into())
}

fn kernel_spot_checks() -> Outcome {
    let cm = check_complete_monotonicity(4, &[0.5, 1.0, 3.0]);
    ensure_report(&cm)?;
    let g = GridSpec::log(1e-4, 60.0, 200).map_err(|e| e.to_string())?;
    let pos = check_kernel_positivity(8, &g).map_err(|e| e.to_string())?;
    ensure_report(&pos)?;
    Ok(format!("{} + {} samples", cm.samples, pos.samples))
}

fn cli_contract() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_zetacert");
    let run = |args: &[&str]| Command::new(bin).args(args).output().map_err(|e| e.to_string());
    let first = run(&["verify", "all"])?;
    ensure(first.status.code() == Some(0), || {
        format!("verify all exited {:?}", first.status.code())
    })?;
    let second = run(&["verify", "all"])?;
    ensure(first.stdout == second.stdout, || {
        "verify all stdout differs between runs".into()
    })?;
    let json = run(&["verify", "theorem1", "--alpha", "1", "--ell", "0", "--json"])?;
    let text = String::from_utf8(json.stdout).map_err(|e| e.to_string())?;
    let reports: Vec<VerificationReport> = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let again = serde_json::to_string_pretty(&reports).map_err(|e| e.to_string())? + "\n";
    ensure(again == text, || "JSON does not round-trip".into())?;
    let lines = String::from_utf8_lossy(&first.stdout).lines().count();
    Ok(format!("{lines} reports, JSON round-trip exact"))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 10] = [
        ("zeta correctness", zeta_correctness),
        ("kernel derivative identity", kernel_derivatives),
        ("zeta ratio monotonicity", theorem1_monotone),
        ("log-convexity of gamma-zeta", log_convexity),
        ("decreasing kernel ratio", proposition_ratio),
        ("integration identities", proof_identities),
        ("extended binomial", extended_binomial),
        ("Stirling exactness", stirling_exactness),
        ("kernel spot checks", kernel_spot_checks),
        ("CLI contract", cli_contract),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.2} s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
