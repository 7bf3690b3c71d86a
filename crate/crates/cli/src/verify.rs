use std::ops::RangeInclusive;
use std::path::PathBuf;

use pickroute::dp::{solve_one_pass_with, solve_original, OnePassTable, Variant};
use pickroute::oracle::{check_tour_subgraph, oracle_tour_length};
use pickroute::{euler_walk, serialize_instance, Distance, Instance, Solution, SolveError, SweepRanges};

use crate::{read_instance, CliError};

#[derive(Debug, Clone)]
pub enum VerifySource {
    File(PathBuf),
    Sweep {
        seeds: RangeInclusive<u64>,
        ranges: SweepRanges,
    },
}

/// Objectives reported by the three solvers on one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Agreement {
    pub one_pass: Distance,
    pub original: Distance,
    pub oracle: Distance,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifySummary {
    pub agreed: usize,
    pub total: usize,
}

impl std::fmt::Display for VerifySummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{} agree", self.agreed, self.total)
    }
}

pub fn verify_instance(inst: &Instance) -> Result<Agreement, CliError> {
    verify_instance_with(inst, &OnePassTable::standard())
}

/// Runs both dynamic programs and Held-Karp on `inst`, with the one-pass
/// solver reading `table`. Any disagreement, invalid subgraph or solver
/// failure comes back as [`CliError::Mismatch`].
pub fn verify_instance_with(inst: &Instance, table: &OnePassTable) -> Result<Agreement, CliError> {
    let oracle = oracle_tour_length(inst)?;
    let mismatch = |detail: String| CliError::Mismatch {
        detail,
        instance: serialize_instance(inst),
    };
    let checked = |name: &str, sol: Result<Solution, SolveError>| -> Result<Distance, CliError> {
        let sol = sol.map_err(|e| mismatch(format!("{name}: {e}")))?;
        let verdict = check_tour_subgraph(inst, &sol.subgraph);
        if !verdict.is_valid() {
            return Err(mismatch(format!("{name}: {verdict}")));
        }
        let walk = euler_walk(&sol.subgraph, inst).map_err(|e| mismatch(format!("{name}: {e}")))?;
        if walk.length(inst) != sol.objective {
            return Err(mismatch(format!("{name}: walk length differs from objective")));
        }
        Ok(sol.objective)
    };
    let agreement = Agreement {
        one_pass: checked("one-pass", solve_one_pass_with(inst, Variant::General, table))?,
        original: checked("original", solve_original(inst))?,
        oracle,
    };
    if agreement.one_pass != oracle || agreement.original != oracle {
        return Err(mismatch(format!(
            "one-pass {}, original {}, oracle {oracle}",
            agreement.one_pass, agreement.original
        )));
    }
    Ok(agreement)
}

/// Stops at the first disagreement.
pub fn cmd_verify(source: &VerifySource, table: &OnePassTable) -> Result<VerifySummary, CliError> {
    match source {
        VerifySource::File(path) => {
            verify_instance_with(&read_instance(path)?, table)?;
            Ok(VerifySummary { agreed: 1, total: 1 })
        }
        VerifySource::Sweep { seeds, ranges } => {
            let mut agreed = 0;
            for seed in seeds.clone() {
                verify_instance_with(&ranges.instance(seed), table).map_err(|e| match e {
                    CliError::Mismatch { detail, instance } => CliError::Mismatch {
                        detail: format!("seed {seed}: {detail}"),
                        instance,
                    },
                    other => other,
                })?;
                agreed += 1;
            }
            Ok(VerifySummary { agreed, total: agreed })
        }
    }
}
