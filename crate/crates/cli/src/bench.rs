use std::io::Write;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use pickroute::{generate_instance, GeneratorParams};

use crate::{Algorithm, CliError};

/// First line of every bench CSV.
pub const CSV_HEADER: &str = "# pickroute-bench v1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchParams {
    pub sizes: Vec<usize>,
    /// Items per aisle; `m = items_per_aisle * n`.
    pub items_per_aisle: usize,
    pub aisle_length: u64,
    pub reps: usize,
    pub seed: u64,
    /// Also runs the rectangular variant, on rectangular instances.
    pub rectangular: bool,
}

impl Default for BenchParams {
    fn default() -> Self {
        Self {
            sizes: vec![10, 100, 1000],
            items_per_aisle: 2,
            aisle_length: 100,
            reps: 11,
            seed: 1,
            rectangular: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub algorithm: String,
    pub objective: u64,
    pub stages: usize,
    pub decisions: usize,
    /// Median solve time over the repetitions, fractional microseconds.
    pub micros: f64,
}

fn median(mut xs: Vec<u128>) -> f64 {
    xs.sort_unstable();
    xs[xs.len() / 2] as f64 / 1000.0
}

pub fn cmd_bench(params: &BenchParams) -> Result<Vec<BenchRow>, CliError> {
    let reps = params.reps.max(1);
    let mut algorithms = vec![Algorithm::OnePass, Algorithm::Original];
    if params.rectangular {
        algorithms.push(Algorithm::Rectangular);
    }
    let mut rows = Vec::new();
    for &n in &params.sizes {
        let inst = generate_instance(&GeneratorParams {
            num_aisles: n,
            num_items: params.items_per_aisle * n,
            aisle_length: params.aisle_length,
            cross_min: 1,
            cross_max: 10,
            rectangular: params.rectangular,
            seed: params.seed,
        })?;
        // Repetitions alternate between algorithms so drift hits all of them alike.
        let mut times = vec![Vec::with_capacity(reps); algorithms.len()];
        let mut last = Vec::with_capacity(algorithms.len());
        for &algorithm in &algorithms {
            last.push(algorithm.solve(&inst)?);
        }
        for _ in 0..reps {
            for (k, &algorithm) in algorithms.iter().enumerate() {
                let start = Instant::now();
                let sol = algorithm.solve(&inst)?;
                times[k].push(start.elapsed().as_nanos());
                last[k] = sol;
            }
        }
        for ((&algorithm, sol), times) in algorithms.iter().zip(last).zip(times) {
            rows.push(BenchRow {
                seed: params.seed,
                n,
                m: inst.items.len(),
                algorithm: algorithm.name().to_owned(),
                objective: sol.objective,
                stages: sol.stages_executed,
                decisions: sol.decisions_examined,
                micros: median(times),
            });
        }
    }
    Ok(rows)
}

pub fn write_csv<W: Write>(mut out: W, rows: &[BenchRow]) -> Result<(), CliError> {
    let io = |source| CliError::Io {
        path: "<output>".into(),
        source,
    };
    writeln!(out, "{CSV_HEADER}").map_err(io)?;
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush().map_err(io)?;
    Ok(())
}
