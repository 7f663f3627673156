//! `curvetop`: exact curve topology, multiple roots, root counting and
//! ellipsoid pencils from the command line.
//!
//! Exit status is 0 on success, 1 when the computation fails and 2 on bad
//! usage or unreadable input. Failures print a JSON object to stderr.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "curvetop", version, about = "Exact topology of real algebraic plane curves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Svg,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Topology graph of the curve P(x, y) = 0.
    Topology {
        /// Polynomial in x and y, e.g. "x^2+y^2-1".
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write to a file instead of stdout.
        #[arg(long, short)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 8)]
        max_shears: usize,
        /// Decimals in SVG coordinates.
        #[arg(long, env = "CURVETOP_PRECISION", default_value_t = 3)]
        precision: usize,
    },
    /// Closed-form multiple roots of a univariate polynomial.
    Multroot {
        /// Polynomial in T (or x), e.g. "(T-1)^3*(T-2)".
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Number of distinct real roots.
    Count {
        #[arg(long)]
        poly: String,
    },
    /// Signed subresultants of P and Q, deg P > deg Q.
    Subres {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Separated, externally touching or overlapping ellipsoids.
    ///
    /// Each file holds 16 rationals in row-major order (numbers or strings
    /// like "-3/2") for X A X^T = 0 with X = (x, y, z, 1). Matrices are
    /// rescaled so that the interior of each ellipsoid is negative.
    ClassifyQuadrics {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Index function of the pencil λA + B across the roots of det(λA + B).
    ///
    /// Matrix files and orientation as for classify-quadrics.
    IndexProfile {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let msg = e.render().to_string();
            let reason: Vec<&str> = msg
                .lines()
                .map(str::trim)
                .take_while(|l| !l.starts_with("Usage:"))
                .filter(|l| !l.is_empty())
                .collect();
            let reason = reason.join(" ");
            eprintln!("{}", serde_json::json!({"error": "Usage", "message": reason.trim_start_matches("error: ")}));
            return ExitCode::from(2);
        }
    };
    match commands::run(&cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code())
        }
    }
}
