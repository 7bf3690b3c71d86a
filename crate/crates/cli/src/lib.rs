//! Subcommand implementations behind the `pickroute` binary. Each `cmd_*`
//! function returns data; printing and exit codes live in `main.rs`.

mod bench;
mod verify;

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use pickroute::dp::{SolveError, VariantMismatch};
use pickroute::oracle::{check_tour_subgraph, oracle_tour_length, OracleError};
use pickroute::{
    euler_walk, generate_instance, parse_instance, serialize_instance, solve_one_pass, solve_original, GeneratorParams,
    Instance, InvalidParams, ParseError, Solution, Variant,
};

pub use bench::{cmd_bench, write_csv, BenchParams, BenchRow, CSV_HEADER};
pub use verify::{cmd_verify, verify_instance, verify_instance_with, Agreement, VerifySource, VerifySummary};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Parse(ParseError),
    #[error(transparent)]
    InvalidParams(#[from] InvalidParams),
    #[error(transparent)]
    VariantMismatch(#[from] VariantMismatch),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("solver failed: {0}")]
    Solver(SolveError),
    /// Carries the offending instance in canonical text form.
    #[error("mismatch: {detail}")]
    Mismatch { detail: String, instance: String },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::VariantMismatch(v) => CliError::VariantMismatch(v),
            other => CliError::Solver(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Csv(_) => 1,
            CliError::Parse(ParseError::Syntax { .. }) => 3,
            CliError::Parse(ParseError::Invalid(_)) | CliError::InvalidParams(_) => 4,
            CliError::Mismatch { .. } => 5,
            CliError::Oracle(_) => 6,
            CliError::VariantMismatch(_) => 7,
            CliError::Solver(_) => 8,
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_owned(),
        source,
    }
}

pub fn read_instance(path: &Path) -> Result<Instance, CliError> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    parse_instance(&text).map_err(CliError::Parse)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    OnePass,
    Original,
    Rectangular,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::OnePass => "one-pass",
            Algorithm::Original => "original",
            Algorithm::Rectangular => "rectangular",
        }
    }

    pub fn solve(self, inst: &Instance) -> Result<Solution, SolveError> {
        match self {
            Algorithm::OnePass => solve_one_pass(inst, Variant::General),
            Algorithm::Original => solve_original(inst),
            Algorithm::Rectangular => solve_one_pass(inst, Variant::Rectangular),
        }
    }
}

/// One solver run, printed as a single JSON line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub instance: String,
    pub algorithm: Algorithm,
    pub objective: u64,
    pub stages_executed: usize,
    pub decisions_examined: usize,
    pub micros: u128,
    /// Present when the oracle was asked for.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutput {
    pub report: RunReport,
    /// Points of the closed walk, as `aisle@offset`.
    pub walk: Option<Vec<String>>,
}

pub fn cmd_generate(params: &GeneratorParams, out_path: &Path) -> Result<String, CliError> {
    let inst = generate_instance(params)?;
    fs::write(out_path, serialize_instance(&inst)).map_err(io_err(out_path))?;
    Ok(format!(
        "wrote {}: {} aisles, {} items, seed {}",
        out_path.display(),
        inst.num_aisles,
        inst.items.len(),
        params.seed
    ))
}

pub fn cmd_solve(in_path: &Path, algorithm: Algorithm, emit_walk: bool, oracle: bool) -> Result<SolveOutput, CliError> {
    let inst = read_instance(in_path)?;
    let start = Instant::now();
    let sol = algorithm.solve(&inst)?;
    let micros = start.elapsed().as_micros();

    let verdict = if oracle {
        let check = check_tour_subgraph(&inst, &sol.subgraph);
        let exact = oracle_tour_length(&inst)?;
        Some(if !check.is_valid() {
            check.to_string()
        } else if exact != sol.objective {
            format!("mismatch: oracle {exact}")
        } else {
            "agree".to_owned()
        })
    } else {
        None
    };
    let walk = if emit_walk {
        let walk = euler_walk(&sol.subgraph, &inst).map_err(|e| CliError::Mismatch {
            detail: e.to_string(),
            instance: serialize_instance(&inst),
        })?;
        Some(walk.points.iter().map(ToString::to_string).collect())
    } else {
        None
    };
    Ok(SolveOutput {
        report: RunReport {
            instance: in_path.display().to_string(),
            algorithm,
            objective: sol.objective,
            stages_executed: sol.stages_executed,
            decisions_examined: sol.decisions_examined,
            micros,
            verdict,
        },
        walk,
    })
}
