//! Command-line front end for `flagtoric-core`.
//!
//! [`run`] parses arguments, runs one command inside a thread pool sized by
//! `FLAGTORIC_THREADS` and writes the rendered report. Exit codes: 0 on
//! success, 1 on invalid input, 2 when a certificate or oracle check fails.

pub mod commands;
pub mod input;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use input::{
    parse_assignment, parse_degrees, parse_shape, parse_vector, ParseError, ShapeError,
};
pub use report::{Format, Report, SCHEMA};

#[derive(Debug, Parser)]
#[command(
    name = "flagtoric",
    version,
    about = "Toric degenerations, mirror series and CY census for partial flag manifolds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Write the report to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Run the independent oracles and exit 2 on a mismatch.
    #[arg(long, global = true)]
    pub check: bool,
    /// Accepted for compatibility; every enumeration order is fixed.
    #[arg(long, global = true)]
    pub seed_order: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ladder graph: vertices, edges, boxes, roofs and the dual graph.
    Graph { shape: String },
    /// Reflexive polytope with one facet per meander.
    Polytope {
        shape: String,
        /// Certify reflexivity; exit 2 on failure.
        #[arg(long)]
        check_reflexive: bool,
    },
    /// Maximal cones of the small resolution fan.
    Fan { shape: String },
    /// Conifold strata, one per box.
    Strata { shape: String },
    /// Positive paths of every roof.
    Paths { shape: String },
    /// Meanders and their facet functionals.
    Meanders { shape: String },
    /// Quadratic relations from incomparable pairs of paths.
    Relations { shape: String },
    /// Greedy path decomposition of a functional, or a Hilbert-basis report.
    Decompose {
        shape: String,
        /// Values on the edges, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        functional: Option<String>,
        /// Weight bound for the report; defaults to 2n.
        #[arg(long)]
        weight_bound: Option<i64>,
    },
    /// Coefficients of the flag manifold series.
    Series {
        shape: String,
        #[arg(long, default_value_t = 3)]
        max_deg: u32,
    },
    /// Coefficients of a complete intersection series.
    CiSeries {
        shape: String,
        /// Degree vectors, e.g. "1,0;1,2".
        #[arg(long)]
        degrees: String,
        #[arg(long, default_value_t = 3)]
        max_deg: u32,
    },
    /// Mirror equations for a splitting of the roofs.
    Mirror {
        shape: String,
        #[arg(long)]
        degrees: String,
        /// Per roof, the equation index of each edge, e.g. "0,1,0;1,1".
        #[arg(long)]
        assignment: Option<String>,
    },
    /// Calabi-Yau complete intersection 3-folds in flag manifolds.
    Census {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        #[arg(long)]
        modulo_duality: bool,
    },
}

/// Why a command did not succeed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Input(String),
    Certificate(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Input(_) => 1,
            Failure::Certificate(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Certificate(m) => m,
        }
    }
}

impl From<flagtoric_core::Error> for Failure {
    fn from(e: flagtoric_core::Error) -> Self {
        if e.is_certificate_failure() {
            Failure::Certificate(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<ShapeError> for Failure {
    fn from(e: ShapeError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Input(e.to_string())
    }
}

/// A report plus a certificate failure found after it was assembled.
/// The report is still written so the failing values can be inspected.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub failure: Option<Failure>,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome {
            report,
            failure: None,
        }
    }
}

/// Thread count from `FLAGTORIC_THREADS`; 0 lets rayon decide.
pub fn thread_limit() -> usize {
    std::env::var("FLAGTORIC_THREADS")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(0)
}

/// Runs a parsed command and renders it. Output is identical for any
/// thread count.
pub fn execute(cli: &Cli) -> Result<(String, Option<Failure>), Failure> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(thread_limit())
        .build()
        .map_err(|e| Failure::Input(format!("thread pool: {e}")))?;
    let outcome = pool.install(|| commands::dispatch(cli))?;
    let text = outcome
        .report
        .render(cli.format)
        .map_err(|e| Failure::Input(e.to_string()))?;
    Ok((text, outcome.failure))
}

/// Entry point shared by the binary and the tests; returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return 1;
            }
            let _ = write!(stdout, "{}", e.render());
            return 0;
        }
    };
    let (text, failure) = match execute(&cli) {
        Ok(r) => r,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message());
            return f.exit_code();
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return 1;
    }
    match failure {
        Some(f) => {
            let _ = writeln!(stderr, "error: {}", f.message());
            f.exit_code()
        }
        None => 0,
    }
}
