//! Command-line front end for exact weighted spanning tree enumeration.
//!
//! The binary is a thin wrapper around [`parse_args`] and [`run`]; both are
//! exposed so the commands can be driven in-process.

mod args;
pub mod expr;
pub mod graph_file;

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use spantree_core::enumerate::{count_spanning_trees, enumerate, lewis_count, merris_count, EnumerateError, Family};
use spantree_core::graphs::{GraphError, MultipartiteSpec, Partition, ThresholdSpec};
use spantree_core::{Monomial, Polynomial, Route, Variable, WeightedGraph};
use thiserror::Error;

pub use args::parse_args;
pub use expr::{parse_polynomial, parse_weight_expr, WeightExpr};
pub use graph_file::{parse_graph_file, parse_graph_str, render_graph};

/// Errors from weight expressions and graph files. Lines and columns are
/// 1-based; columns count characters.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}, column {column}: exponent must be a nonnegative integer")]
    ExponentNegative { line: usize, column: usize },
    #[error("expression is too large to expand")]
    TooLarge,
    #[error("line {line}: variable {variable} exceeds the vertex count {n}")]
    VariableOutOfRange { line: usize, variable: Variable, n: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Enumerate,
    Count,
    Verify,
    Bench,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Complete(usize),
    Multipartite(MultipartiteSpec),
    Ferrers(Partition),
    Threshold(ThresholdSpec),
    File(PathBuf),
}

impl Source {
    fn family(&self) -> Option<Family> {
        match self {
            Source::Complete(n) => Some(Family::Complete(*n)),
            Source::Multipartite(spec) => Some(Family::Multipartite(spec.clone())),
            Source::Ferrers(lambda) => Some(Family::Ferrers(lambda.clone())),
            Source::Threshold(spec) => Some(Family::Threshold(spec.clone())),
            Source::File(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Polynomial,
    Integer,
    Report,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JobError {
    #[error("--route is only accepted by enumerate and count")]
    RouteNotAccepted,
    #[error("the closed-form route needs a graph family, not a file")]
    ClosedFormNeedsFamily,
}

/// A validated command: one source, and a route only where it means something.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobSpec {
    command: Command,
    source: Source,
    route: Option<Route>,
}

impl JobSpec {
    pub fn new(command: Command, source: Source, route: Option<Route>) -> Result<Self, JobError> {
        if route.is_some() && !matches!(command, Command::Enumerate | Command::Count) {
            return Err(JobError::RouteNotAccepted);
        }
        if route == Some(Route::ClosedForm) && matches!(source, Source::File(_)) {
            return Err(JobError::ClosedFormNeedsFamily);
        }
        Ok(JobSpec { command, source, route })
    }

    pub fn command(&self) -> Command {
        self.command
    }

    pub fn source(&self) -> &Source {
        &self.source
    }

    pub fn route(&self) -> Option<Route> {
        self.route
    }

    pub fn output_format(&self) -> OutputFormat {
        match self.command {
            Command::Enumerate => OutputFormat::Polynomial,
            Command::Count => OutputFormat::Integer,
            Command::Verify | Command::Bench => OutputFormat::Report,
        }
    }
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Failure while executing a job, with the exit status it maps to.
#[derive(Debug)]
enum RunError {
    Input(String),
    Internal(String),
}

impl From<ParseError> for RunError {
    fn from(e: ParseError) -> Self {
        RunError::Input(e.to_string())
    }
}

impl From<EnumerateError> for RunError {
    fn from(e: EnumerateError) -> Self {
        match e {
            EnumerateError::Linalg(_) | EnumerateError::Poly(_) => RunError::Internal(e.to_string()),
            _ => RunError::Input(e.to_string()),
        }
    }
}

impl fmt::Display for RunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunError::Input(m) | RunError::Internal(m) => f.write_str(m),
        }
    }
}

fn load_graph(source: &Source) -> Result<WeightedGraph, RunError> {
    match source {
        Source::File(path) => Ok(parse_graph_file(path)?),
        _ => Ok(source.family().expect("family source").graph()?),
    }
}

/// Runs a job, writing results to `out` and diagnostics to `err`.
/// Returns the process exit status.
pub fn run<O: Write, E: Write>(spec: &JobSpec, out: &mut O, err: &mut E) -> i32 {
    let result = match spec.command {
        Command::Enumerate => run_enumerate(spec, out),
        Command::Count => run_count(spec, out),
        Command::Verify => run_verify(spec, out),
        Command::Bench => run_bench(spec, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                RunError::Input(_) => EXIT_USAGE,
                RunError::Internal(_) => EXIT_FAIL,
            }
        }
    }
}

fn run_enumerate<O: Write>(spec: &JobSpec, out: &mut O) -> Result<i32, RunError> {
    let g = load_graph(&spec.source)?;
    let family = spec.source.family();
    let route = spec.route.unwrap_or(Route::Cofactor);
    let result = enumerate(&g, route, family.as_ref())?;
    let _ = writeln!(out, "{}", result.tau);
    Ok(EXIT_OK)
}

fn run_count<O: Write>(spec: &JobSpec, out: &mut O) -> Result<i32, RunError> {
    let g = load_graph(&spec.source)?;
    let count = match spec.route {
        None => count_spanning_trees(&g),
        Some(route) => {
            let family = spec.source.family();
            let unit = g.unweighted();
            enumerate(&unit, route, family.as_ref())?.tau.evaluate_ones()
        }
    };
    let _ = writeln!(out, "{count}");
    Ok(EXIT_OK)
}

/// Routes worth running for this source, in report order.
fn applicable_routes(source: &Source) -> Vec<Route> {
    let mut routes = vec![Route::BruteForce, Route::Cofactor, Route::RankOne];
    if source.family().is_some() {
        routes.push(Route::RankOneSymbolic);
        routes.push(Route::ClosedForm);
    }
    routes
}

/// Route outcomes that mean "not applicable here" rather than a failure.
fn is_skip(e: &EnumerateError) -> bool {
    matches!(e, EnumerateError::TooLarge { .. } | EnumerateError::Disconnected)
}

/// First term, in canonical order, where `p` and `q` differ, with the two
/// coefficients (zero when absent).
pub fn first_difference(p: &Polynomial, q: &Polynomial) -> Option<(Monomial, BigInt, BigInt)> {
    let (a, b) = (p.terms(), q.terms());
    let (mut i, mut j) = (0, 0);
    let zero = BigInt::from(0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((m, c)), Some((n, d))) if m == n => {
                if c != d {
                    return Some((m.clone(), c.clone(), d.clone()));
                }
                i += 1;
                j += 1;
            }
            (Some((m, c)), Some((n, _))) if m > n => return Some((m.clone(), c.clone(), zero)),
            (Some((m, c)), None) => return Some((m.clone(), c.clone(), zero)),
            (_, Some((n, d))) => return Some((n.clone(), zero, d.clone())),
            (None, None) => unreachable!(),
        }
    }
    None
}

fn format_duration(d: Duration) -> String {
    format!("{:.3} ms", d.as_secs_f64() * 1e3)
}

struct RouteOutcome {
    route: Route,
    elapsed: Duration,
    result: Result<Polynomial, EnumerateError>,
}

fn run_routes(g: &WeightedGraph, source: &Source) -> Vec<RouteOutcome> {
    let family = source.family();
    applicable_routes(source)
        .into_iter()
        .map(|route| {
            let start = Instant::now();
            let result = enumerate(g, route, family.as_ref()).map(|r| r.tau);
            RouteOutcome {
                route,
                elapsed: start.elapsed(),
                result,
            }
        })
        .collect()
}

fn run_verify<O: Write>(spec: &JobSpec, out: &mut O) -> Result<i32, RunError> {
    let g = load_graph(&spec.source)?;
    let outcomes = run_routes(&g, &spec.source);
    let mut failed = false;
    let mut computed: Vec<(Route, &Polynomial)> = Vec::new();
    for outcome in &outcomes {
        match &outcome.result {
            Ok(tau) => computed.push((outcome.route, tau)),
            Err(e) if is_skip(e) => {
                let _ = writeln!(out, "SKIP {}: {e}", outcome.route);
            }
            Err(e) => {
                failed = true;
                let _ = writeln!(out, "FAIL {}: {e}", outcome.route);
            }
        }
    }
    for (k, (r1, p1)) in computed.iter().enumerate() {
        for (r2, p2) in &computed[k + 1..] {
            match first_difference(p1, p2) {
                None => {
                    let _ = writeln!(out, "PASS {r1} = {r2}");
                }
                Some((m, c, d)) => {
                    failed = true;
                    let _ = writeln!(out, "FAIL {r1} = {r2}: first difference at {m}: {c} vs {d}");
                }
            }
        }
    }
    let count = count_spanning_trees(&g);
    let specialized: Option<(&str, Result<BigInt, EnumerateError>)> = match &spec.source {
        Source::Complete(n) if *n >= 2 => Some(("n^(n-2)", Ok(BigInt::from(*n).pow(*n as u32 - 2)))),
        Source::Multipartite(m) => Some(("lewis-count", Ok(lewis_count(m)))),
        Source::Threshold(_) => Some(("merris-count", merris_count(&g))),
        _ => None,
    };
    match specialized {
        Some((name, Ok(value))) if value == count => {
            let _ = writeln!(out, "PASS count = {name} ({count})");
        }
        Some((name, Ok(value))) => {
            failed = true;
            let _ = writeln!(out, "FAIL count = {name}: {count} vs {value}");
        }
        Some((name, Err(e))) if is_skip(&e) => {
            let _ = writeln!(out, "SKIP {name}: {e}");
        }
        Some((name, Err(e))) => {
            failed = true;
            let _ = writeln!(out, "FAIL {name}: {e}");
        }
        None => {}
    }
    if computed.len() < 2 && !failed {
        let _ = writeln!(out, "FAIL fewer than two routes were applicable");
        failed = true;
    }
    let _ = writeln!(out, "{}", if failed { "FAIL" } else { "PASS" });
    Ok(if failed { EXIT_FAIL } else { EXIT_OK })
}

fn run_bench<O: Write>(spec: &JobSpec, out: &mut O) -> Result<i32, RunError> {
    let g = load_graph(&spec.source)?;
    let _ = writeln!(out, "{} vertices, {} edges", g.n(), g.num_edges());
    let mut code = EXIT_OK;
    for outcome in run_routes(&g, &spec.source) {
        let status = match &outcome.result {
            Ok(tau) => format!("{} terms", tau.num_terms()),
            Err(e) if is_skip(e) => format!("skipped: {e}"),
            Err(e) => {
                code = EXIT_FAIL;
                format!("error: {e}")
            }
        };
        let _ = writeln!(
            out,
            "{:<18} {:>12}  {status}",
            outcome.route.name(),
            format_duration(outcome.elapsed)
        );
    }
    let start = Instant::now();
    let count = count_spanning_trees(&g);
    let _ = writeln!(
        out,
        "{:<18} {:>12}  {count} trees",
        "count",
        format_duration(start.elapsed())
    );
    Ok(code)
}
