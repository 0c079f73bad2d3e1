//! Command-line frontend: `eval`, `verify` and `report`.
//!
//! Exit codes: 0 success or all checks passed, 1 a check failed, 2 usage
//! error, 3 domain or evaluation error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bose_kernel::{kernel, kernel_ratio};
use crate::combinatorics::{binom, stirling2, BinomValue};
use crate::error::Error;
use crate::specfun::{eta, gamma, lambda, zeta, ZetaRoute};
use crate::verify::suite::{self, unsampled};
use crate::verify::theorems::{CONVEXITY_SLACK, CONVEXITY_STEP, MONOTONE_SLACK};
use crate::verify::{check_proof_identities, theorem1_ratio, GridSpec, Scan, VerificationReport};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "zetacert",
    version,
    about = "Zeta, gamma and Bose-kernel evaluation with numerical verification scans"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function and print its value.
    Eval(EvalArgs),
    /// Run verification scans and print one line per report.
    Verify(VerifyArgs),
    /// Summarize a saved JSON report array.
    Report(ReportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalTarget {
    Zeta,
    Gamma,
    Eta,
    Lambda,
    Binom,
    Stirling,
    Fk,
    Fratio,
    T1ratio,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Direct,
    Odd,
    Alternating,
    Integral,
}

impl From<RouteArg> for ZetaRoute {
    fn from(r: RouteArg) -> Self {
        match r {
            RouteArg::Direct => ZetaRoute::DirectSeries,
            RouteArg::Odd => ZetaRoute::OddSeries,
            RouteArg::Alternating => ZetaRoute::AlternatingSeries,
            RouteArg::Integral => ZetaRoute::IntegralRepresentation,
        }
    }
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct EvalArgs {
    pub target: EvalTarget,
    #[arg(long, value_parser = finite)]
    pub x: Option<f64>,
    #[arg(long, value_parser = finite)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub ell: Option<u32>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long, value_parser = finite)]
    pub z: Option<f64>,
    #[arg(long, value_parser = finite)]
    pub w: Option<f64>,
    #[arg(long, value_parser = finite)]
    pub t: Option<f64>,
    #[arg(long, value_enum, default_value = "alternating")]
    pub route: RouteArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Claim {
    Theorem1,
    Logconvex,
    Prop1,
    Lemma1,
    Lemma4,
    Identities,
    All,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct VerifyArgs {
    pub claim: Claim,
    #[arg(long, value_parser = finite)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub ell: Option<u32>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, value_parser = finite)]
    pub grid_start: Option<f64>,
    #[arg(long, value_parser = finite)]
    pub grid_end: Option<f64>,
    #[arg(long)]
    pub grid_points: Option<usize>,
    #[arg(long, value_parser = finite)]
    pub slack: Option<f64>,
    #[arg(long, value_parser = finite)]
    pub tol: Option<f64>,
    /// Step of the second difference in log-convexity scans.
    #[arg(long, value_parser = finite)]
    pub step: Option<f64>,
    /// Emit the full report array as JSON.
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    /// Emit grid samples as CSV.
    #[arg(long)]
    pub csv: bool,
    /// Write the JSON or CSV output to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// JSON file written by `verify --json --out`.
    pub input: PathBuf,
}

fn finite(s: &str) -> std::result::Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a decimal number"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("`{s}` is not finite"))
    }
}

/// Failure of a command, mapped onto the exit-code table.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Domain(_) => EXIT_DOMAIN,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn required<T>(v: Option<T>, flag: &str, target: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("`{target}` requires --{flag}")))
}

/// Shortest decimal that round-trips to the same f64.
pub fn format_value(v: f64) -> String {
    if v.is_nan() {
        "nan".into()
    } else if v.is_infinite() {
        if v > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        }
    } else {
        format!("{v}")
    }
}

pub fn run_eval(args: &EvalArgs) -> Result<String, CliError> {
    let name = format!("{:?}", args.target).to_lowercase();
    let name = name.as_str();
    let value = match args.target {
        EvalTarget::Zeta => zeta(required(args.x, "x", name)?, args.route.into())?,
        EvalTarget::Gamma => gamma(required(args.x, "x", name)?)?,
        EvalTarget::Eta => eta(required(args.x, "x", name)?)?,
        EvalTarget::Lambda => lambda(required(args.x, "x", name)?)?,
        EvalTarget::Binom => {
            let z = required(args.z, "z", name)?;
            let w = required(args.w, "w", name)?;
            match binom(z, w)? {
                BinomValue::Finite(v) => v,
                BinomValue::Infinite => f64::INFINITY,
            }
        }
        EvalTarget::Stirling => {
            let k = required(args.k, "k", name)?;
            let p = required(args.p, "p", name)?;
            return Ok(stirling2(k, p)?.to_string());
        }
        EvalTarget::Fk => kernel(required(args.k, "k", name)?, required(args.t, "t", name)?)?,
        EvalTarget::Fratio => kernel_ratio(required(args.k, "k", name)?, required(args.t, "t", name)?)?,
        EvalTarget::T1ratio => theorem1_ratio(
            required(args.x, "x", name)?,
            required(args.alpha, "alpha", name)?,
            required(args.ell, "ell", name)?,
        )?,
    };
    Ok(format_value(value))
}

fn grid_with_overrides(base: GridSpec, args: &VerifyArgs) -> Result<GridSpec, CliError> {
    Ok(GridSpec::new(
        args.grid_start.unwrap_or(base.start),
        args.grid_end.unwrap_or(base.end),
        args.grid_points.unwrap_or(base.points),
        base.spacing,
    )?)
}

fn one_or<T: Copy>(v: Option<T>, defaults: &[T]) -> Vec<T> {
    v.map_or_else(|| defaults.to_vec(), |v| vec![v])
}

fn scans_for(claim: Claim, args: &VerifyArgs) -> Result<Vec<Scan>, CliError> {
    let tol = args.tol.unwrap_or(suite::DEFAULT_TOL);
    let scans = match claim {
        Claim::Theorem1 => suite::theorem1_scans(
            &one_or(args.alpha, &suite::THEOREM1_ALPHAS),
            &one_or(args.ell, &suite::THEOREM1_ELLS),
            &grid_with_overrides(suite::theorem1_grid(), args)?,
            args.slack.unwrap_or(MONOTONE_SLACK),
        )?,
        Claim::Logconvex => suite::logconvex_scans(
            &one_or(args.ell, &suite::LOGCONVEX_ELLS),
            &grid_with_overrides(suite::logconvex_grid(), args)?,
            args.step.unwrap_or(CONVEXITY_STEP),
            args.slack.unwrap_or(CONVEXITY_SLACK),
        )?,
        Claim::Prop1 => suite::prop1_scans(
            &one_or(args.k, &suite::PROP1_ORDERS),
            &grid_with_overrides(suite::prop1_grid(), args)?,
            args.slack.unwrap_or(MONOTONE_SLACK),
        )?,
        Claim::Lemma1 => {
            let alpha = args.alpha.unwrap_or(1.0);
            if !(alpha > 0.0) {
                return Err(CliError::Domain(format!("lemma1 requires alpha > 0, got {alpha}")));
            }
            suite::lemma1_reports(alpha, tol).into_iter().map(unsampled).collect()
        }
        Claim::Lemma4 => suite::lemma4_reports()?.into_iter().map(unsampled).collect(),
        Claim::Identities => check_proof_identities(tol)?.into_iter().map(unsampled).collect(),
        Claim::All => {
            let mut out = Vec::new();
            for c in [
                Claim::Theorem1,
                Claim::Logconvex,
                Claim::Prop1,
                Claim::Lemma1,
                Claim::Identities,
                Claim::Lemma4,
            ] {
                out.extend(scans_for(c, args)?);
            }
            out
        }
    };
    Ok(scans)
}

pub fn reports_to_json(reports: &[VerificationReport]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
    s.push('\n');
    s
}

pub fn scans_to_csv(scans: &[Scan]) -> String {
    let mut s = String::from("parameter,value,margin,claim_id\n");
    for scan in scans {
        for p in &scan.samples {
            let margin = p.margin.map(format_value).unwrap_or_default();
            let _ = writeln!(
                s,
                "{},{},{},{}",
                format_value(p.parameter),
                format_value(p.value),
                margin,
                scan.report.claim_id
            );
        }
    }
    s
}

fn summary(reports: &[VerificationReport]) -> String {
    let mut s = String::new();
    for r in reports {
        s.push_str(&r.summary_line());
        s.push('\n');
    }
    s
}

fn verdict_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(VerificationReport::passed) {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn run_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if args.out.is_some() && !(args.json || args.csv) {
        return Err(CliError::Usage("--out requires --json or --csv".into()));
    }
    let scans = scans_for(args.claim, args)?;
    let reports: Vec<VerificationReport> = scans.iter().map(|s| s.report.clone()).collect();
    let payload = if args.json {
        Some(reports_to_json(&reports))
    } else if args.csv {
        Some(scans_to_csv(&scans))
    } else {
        None
    };
    match (payload, &args.out) {
        (Some(p), Some(path)) => {
            std::fs::write(path, p).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
            emit(out, &summary(&reports))?;
        }
        (Some(p), None) => emit(out, &p)?,
        (None, _) => emit(out, &summary(&reports))?,
    }
    Ok(verdict_code(&reports))
}

fn run_report(args: &ReportArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", args.input.display())))?;
    let reports: Vec<VerificationReport> = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("{} is not a report array: {e}", args.input.display())))?;
    emit(out, &summary(&reports))?;
    Ok(verdict_code(&reports))
}

fn emit(out: &mut dyn Write, s: &str) -> Result<(), CliError> {
    out.write_all(s.as_bytes())
        .map_err(|e| CliError::Usage(format!("cannot write output: {e}")))
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
                return EXIT_PASS;
            }
            let _ = err.write_all(rendered.as_bytes());
            return EXIT_USAGE;
        }
    };
    let result = match &cli.command {
        Command::Eval(a) => run_eval(a).and_then(|v| emit(out, &format!("{v}\n")).map(|()| EXIT_PASS)),
        Command::Verify(a) => run_verify(a, out),
        Command::Report(a) => run_report(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("zetacert").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn eval_examples() {
        assert_eq!(call(&["eval", "zeta", "--x", "2"]).1, "1.6449340668482264\n");
        assert_eq!(call(&["eval", "binom", "--z", "-3", "--w", "2"]).1, "6\n");
        assert_eq!(
            call(&["eval", "fratio", "--k", "0", "--t", "0.6931471805599453"]).1,
            "2\n"
        );
        assert_eq!(call(&["eval", "stirling", "--k", "5", "--p", "2"]).1, "15\n");
        assert_eq!(call(&["eval", "binom", "--z", "-1", "--w", "0.5"]).1, "inf\n");
    }

    #[test]
    fn eval_routes_agree() {
        let a = call(&["eval", "zeta", "--x", "3", "--route", "direct"]).1;
        let b = call(&["eval", "zeta", "--x", "3", "--route", "odd"]).1;
        let va: f64 = a.trim().parse().unwrap();
        let vb: f64 = b.trim().parse().unwrap();
        assert!((va - vb).abs() < 1e-14);
    }

    #[test]
    fn exit_codes() {
        let (code, _, err) = call(&["eval", "zeta", "--x", "1"]);
        assert_eq!(code, EXIT_DOMAIN);
        assert!(err.contains("zeta requires x > 1: pole at x = 1"), "{err}");
        assert_eq!(call(&["eval", "zeta"]).0, EXIT_USAGE);
        assert_eq!(call(&["eval", "nosuch", "--x", "2"]).0, EXIT_USAGE);
        assert_eq!(call(&["eval", "zeta", "--x", "abc"]).0, EXIT_USAGE);
        assert_eq!(call(&["eval", "zeta", "--x", "inf"]).0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "theorem1", "--alpha", "-1"]).0, EXIT_DOMAIN);
        assert_eq!(
            call(&["verify", "prop1", "--k", "2", "--grid-start", "5", "--grid-end", "1"]).0,
            EXIT_DOMAIN
        );
        assert_eq!(call(&["--help"]).0, EXIT_PASS);
    }

    #[test]
    fn verify_prop1_line() {
        let (code, out, _) = call(&["verify", "prop1", "--k", "2"]);
        assert_eq!(code, EXIT_PASS);
        assert!(out.starts_with("prop1.decreasing[k=2] PASS worst_margin="), "{out}");
        assert!(out.contains(" at x="));
    }

    #[test]
    fn loose_grid_failure_exits_one() {
        // a negative slack demands strict decrease by at least 1 per step
        let (code, out, _) = call(&["verify", "prop1", "--k", "0", "--slack", "-1"]);
        assert_eq!(code, EXIT_FAIL, "{out}");
        assert!(out.contains("FAIL"));
    }

    #[test]
    fn csv_header_and_rows() {
        let (code, out, _) = call(&["verify", "prop1", "--k", "1", "--grid-points", "10", "--csv"]);
        assert_eq!(code, EXIT_PASS);
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("parameter,value,margin,claim_id"));
        assert_eq!(lines.count(), 10);
    }
}
