//! Commands behind the `orelim` binary. Each returns the text to print and
//! the exit status, so they can be driven without spawning a process.

pub mod format;

use std::fmt;

use orelim::exactpoly::{parse_rational, rat, Rational};
use orelim::infmat::{self, catalog, lu_minor, minor, CatalogParams, InfMatError, MatrixName};
use orelim::oresystem::{self, eq_residual, parse_ore_poly, system_residual, OreError};
use orelim::report::{CheckReport, CheckStatus};
use orelim::{jacobi, report};
use thiserror::Error;

pub use format::{Format, LuJson, MinorJson};

pub const DEFAULT_MATRIX_DEPTH: usize = 8;
pub const DEFAULT_JACOBI_DEPTH: usize = 12;
pub const DEFAULT_ORE_DEPTH: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Failure = 1,
    Usage = 2,
    Precondition = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Precondition(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn status(&self) -> ExitStatus {
        match self {
            CliError::Usage(_) => ExitStatus::Usage,
            CliError::Precondition(_) => ExitStatus::Precondition,
            CliError::Io(_) => ExitStatus::Failure,
        }
    }
}

impl From<InfMatError> for CliError {
    fn from(e: InfMatError) -> Self {
        match e {
            InfMatError::UnknownName(_) | InfMatError::MissingParameter(_) => CliError::Usage(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<OreError> for CliError {
    fn from(e: OreError) -> Self {
        match e {
            OreError::Parse { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

/// Text to print on standard output, and how to exit.
#[derive(Debug)]
pub struct Output {
    pub stdout: String,
    pub status: ExitStatus,
}

fn rational_arg(flag: &str, s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| CliError::Usage(format!("--{flag}: {e}")))
}

fn matrix_arg(name: &str, n: usize, q: Option<&str>) -> Result<infmat::InfMatrix, CliError> {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let name: MatrixName = name.parse()?;
    let params = match q {
        Some(q) => CatalogParams::with_q(rational_arg("q", q)?),
        None => CatalogParams::default(),
    };
    Ok(catalog(name, &params)?)
}

/// `catalog`: the `n`-minor of a named matrix.
pub fn cmd_catalog(name: &str, n: usize, format: Format, q: Option<&str>) -> Result<Output, CliError> {
    let m = matrix_arg(name, n, q)?;
    Ok(Output { stdout: format::render_minor(name, &minor(&m, n), format), status: ExitStatus::Success })
}

/// `lu`: the LU factors of the `n`-minor of a named matrix.
pub fn cmd_lu(name: &str, n: usize, format: Format, q: Option<&str>) -> Result<Output, CliError> {
    let m = matrix_arg(name, n, q)?;
    let (l, u) = lu_minor(&m, n)?;
    Ok(Output { stdout: format::render_lu(name, &l, &u, format), status: ExitStatus::Success })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Matrix,
    Jacobi,
    Ore,
    Full,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Matrix => "matrix",
            Suite::Jacobi => "jacobi",
            Suite::Ore => "ore",
            Suite::Full => "full",
        })
    }
}

pub fn default_c_values() -> Vec<Rational> {
    oresystem::DEFAULT_C_VALUES.iter().map(|&(n, d)| rat(n, d)).collect()
}

/// Runs a suite. `depth` overrides each sub-suite's default depth; matrix
/// checks run at every size `1..=depth`.
pub fn run_suite(suite: Suite, depth: Option<usize>, c_values: &[Rational]) -> Result<Vec<CheckReport>, CliError> {
    if depth == Some(0) {
        return Err(CliError::Usage("--depth must be at least 1".into()));
    }
    let mut reports = Vec::new();
    if matches!(suite, Suite::Matrix | Suite::Full) {
        let d = depth.unwrap_or(DEFAULT_MATRIX_DEPTH);
        for n in 1..=d {
            reports.extend(infmat::check_all(n));
        }
    }
    if matches!(suite, Suite::Jacobi | Suite::Full) {
        let d = depth.unwrap_or(DEFAULT_JACOBI_DEPTH);
        reports.extend(jacobi::suite(d, d.min(jacobi::LEMMA_DEPTH)));
    }
    if matches!(suite, Suite::Ore | Suite::Full) {
        reports.extend(oresystem::suite(depth.unwrap_or(DEFAULT_ORE_DEPTH), c_values));
    }
    Ok(reports)
}

/// One line per status count, e.g. `412 checks: 402 pass, 0 fail, 10 skipped-degenerate`.
pub fn summary(reports: &[CheckReport]) -> String {
    let count = |s: CheckStatus| reports.iter().filter(|r| r.status == s).count();
    format!(
        "{} checks: {} pass, {} fail, {} hypothesis-not-met, {} skipped-degenerate",
        reports.len(),
        count(CheckStatus::Pass),
        count(CheckStatus::Fail),
        count(CheckStatus::HypothesisNotMet),
        count(CheckStatus::SkippedDegenerate),
    )
}

/// `verify`: the JSON report and exit status 1 if any check failed.
pub fn cmd_verify(
    suite: Suite,
    depth: Option<usize>,
    c_values: Option<&[String]>,
) -> Result<(Vec<CheckReport>, Output), CliError> {
    let cs = match c_values {
        Some(list) => list.iter().map(|s| rational_arg("c", s)).collect::<Result<Vec<_>, _>>()?,
        None => default_c_values(),
    };
    let reports = run_suite(suite, depth, &cs)?;
    let status =
        if reports.iter().any(report::CheckReport::failed) { ExitStatus::Failure } else { ExitStatus::Success };
    let mut stdout = serde_json::to_string_pretty(&reports).expect("reports serialize");
    stdout.push('\n');
    Ok((reports, Output { stdout, status }))
}

/// `ore-residual`: `eq_n^k` (or the plain `n`-th equation when `k` is
/// absent) evaluated on the parsed polynomial.
pub fn cmd_ore_residual(poly: &str, c: &str, n: usize, k: Option<usize>) -> Result<Output, CliError> {
    let c = rational_arg("c", c)?;
    let p = parse_ore_poly(poly, &c)?;
    let residual = match k {
        None | Some(0) if n == 0 => return Err(CliError::Precondition("the system starts at n = 1".into())),
        None => system_residual(&p, n),
        Some(k) => eq_residual(&p, n, k)?,
    };
    let status = if residual.is_zero() { ExitStatus::Success } else { ExitStatus::Failure };
    Ok(Output { stdout: format!("{residual}\n"), status })
}
