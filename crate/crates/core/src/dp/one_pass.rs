//! The `n`-stage solver.
//!
//! Stage `j` holds the shortest `L_j^-` PTS per class: aisles `1..j-1` fully
//! decided plus the cross edges into aisle `j`. Choosing the cross edges from
//! aisle `j` to `j + 1` fixes the vertical configuration aisle `j` must take,
//! so one stage per aisle suffices. A dummy aisle `n + 1` behind a zero-length
//! gap closes the last aisle; the answer is the `001C` entry of stage `n + 1`.

use thiserror::Error;

use super::cost::CostCoefficients;
use super::tables::OnePassTable;
use super::{EquivalenceClass, HorizontalConfig, Solution, VerticalConfig};
use crate::model::{Distance, Instance, OccupiedSpan};
use crate::tour::TourSubgraph;

/// Which decision set the one-pass solver uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    General,
    /// Drops every decision that forces `2pass`, including the whole `22*`
    /// column. Exact when all cross segments share one length.
    Rectangular,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("rectangular variant requires one common length for every top and bottom cross segment")]
pub struct VariantMismatch;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    VariantMismatch(#[from] VariantMismatch),
    /// Only reachable with a non-standard transition table.
    #[error("no complete tour reached the final stage")]
    Infeasible,
    #[error("corrupt DP table: {0}")]
    CorruptTable(String),
}

/// How a stage entry was reached from the previous stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Backpointer {
    pub prev_class: EquivalenceClass,
    /// Configuration of the previous aisle.
    pub vertical: VerticalConfig,
    /// Cross edges from the previous aisle into this one.
    pub horizontal: HorizontalConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StageEntry {
    pub length: Distance,
    /// `None` only for the initial `000C` entry.
    pub back: Option<Backpointer>,
}

/// Stage maps for `j = 1..=n+1`, each holding at most one entry per class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpTable {
    stages: Vec<[Option<StageEntry>; 7]>,
    pub stages_executed: usize,
    pub decisions_examined: usize,
    pub max_decisions_per_class: usize,
}

impl DpTable {
    /// Number of stage maps (`n + 1`).
    pub fn len(&self) -> usize {
        self.stages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stages.is_empty()
    }

    /// Stage `j`, 1-based.
    pub fn stage(&self, j: usize) -> &[Option<StageEntry>; 7] {
        &self.stages[j - 1]
    }

    pub fn entry(&self, j: usize, class: EquivalenceClass) -> Option<&StageEntry> {
        self.stages.get(j.wrapping_sub(1))?[class.index()].as_ref()
    }

    pub fn classes(&self, j: usize) -> impl Iterator<Item = EquivalenceClass> + '_ {
        EquivalenceClass::ALL
            .into_iter()
            .filter(move |c| self.stage(j)[c.index()].is_some())
    }
}

fn check_variant(inst: &Instance, variant: Variant) -> Result<(), VariantMismatch> {
    if variant == Variant::Rectangular && !inst.is_rectangular() {
        return Err(VariantMismatch);
    }
    Ok(())
}

/// Runs the stage recursion with an arbitrary transition table.
pub fn build_dp_table(
    inst: &Instance,
    variant: Variant,
    transitions: &OnePassTable,
) -> Result<DpTable, VariantMismatch> {
    check_variant(inst, variant)?;
    debug_assert!(inst.validate().is_ok());
    let coeffs = CostCoefficients::new(inst);
    Ok(run(inst, &coeffs, variant, transitions))
}

fn run(inst: &Instance, coeffs: &CostCoefficients, variant: Variant, transitions: &OnePassTable) -> DpTable {
    use EquivalenceClass::{Closed, Empty};

    let n = inst.num_aisles;
    let span = OccupiedSpan::of(inst);
    let mut stages = Vec::with_capacity(n + 1);
    let mut first = [None; 7];
    first[Empty.index()] = Some(StageEntry { length: 0, back: None });
    stages.push(first);

    // Cells the variant may use; dashes and filtered cells are not decisions.
    let mut cells = [[None; 6]; 7];
    let mut row_decisions = [0; 7];
    for e in EquivalenceClass::ALL {
        for h in HorizontalConfig::ALL {
            let cell = transitions.get(e, h).filter(|&(_, v)| {
                variant == Variant::General || (h != HorizontalConfig::TwoTwoStar && v != VerticalConfig::TwoPass)
            });
            cells[e.index()][h.index()] = cell;
            row_decisions[e.index()] += usize::from(cell.is_some());
        }
    }

    let mut decisions = 0;
    let mut max_per_class = 0;
    for j in 1..=n {
        let aisle = coeffs.aisle(j);
        let vcost = VerticalConfig::ALL.map(|v| aisle.get(v));
        let hcost = HorizontalConfig::ALL.map(|h| coeffs.horizontal(j, h));
        let closes = span.nothing_from(j + 1);
        let mut next: [Option<StageEntry>; 7] = [None; 7];
        for e in EquivalenceClass::ALL {
            let Some(entry) = stages[j - 1][e.index()] else {
                continue;
            };
            decisions += row_decisions[e.index()];
            max_per_class = max_per_class.max(row_decisions[e.index()]);
            for h in HorizontalConfig::ALL {
                let Some((mut target, mut vertical)) = cells[e.index()][h.index()] else {
                    continue;
                };
                // `none` on an aisle with visits.
                let Some(v) = vcost[vertical.index()] else {
                    continue;
                };
                if target.is_detached() {
                    // Nothing built and nothing here: still nothing built.
                    if e == Empty && !aisle.occupied {
                        target = Empty;
                        vertical = VerticalConfig::Skip;
                    } else if closes {
                        target = Closed;
                    } else {
                        continue;
                    }
                }
                let length = entry.length + v + hcost[h.index()];
                let slot = &mut next[target.index()];
                if slot.is_none_or(|cur| length < cur.length) {
                    *slot = Some(StageEntry {
                        length,
                        back: Some(Backpointer {
                            prev_class: e,
                            vertical,
                            horizontal: h,
                        }),
                    });
                }
            }
        }
        stages.push(next);
    }

    DpTable {
        stages,
        stages_executed: n,
        decisions_examined: decisions,
        max_decisions_per_class: max_per_class,
    }
}

/// Walks backpointers from the final `001C` entry to the initial `000C` one.
pub fn reconstruct(table: &DpTable, inst: &Instance) -> Result<TourSubgraph, SolveError> {
    reconstruct_with(table, inst, &CostCoefficients::new(inst))
}

fn reconstruct_with(table: &DpTable, inst: &Instance, coeffs: &CostCoefficients) -> Result<TourSubgraph, SolveError> {
    let n = inst.num_aisles;
    if table.len() != n + 1 {
        return Err(SolveError::CorruptTable(format!(
            "{} stages for {n} aisles",
            table.len()
        )));
    }
    let mut verticals = vec![VerticalConfig::Skip; n];
    let mut horizontals = Vec::with_capacity(n.saturating_sub(1));
    let mut class = EquivalenceClass::Closed;
    let mut entry = *table.entry(n + 1, class).ok_or(SolveError::Infeasible)?;
    for j in (1..=n).rev() {
        let back = entry
            .back
            .ok_or_else(|| SolveError::CorruptTable(format!("stage {} {class} has no backpointer", j + 1)))?;
        let prev = *table
            .entry(j, back.prev_class)
            .ok_or_else(|| SolveError::CorruptTable(format!("stage {j} lacks {}", back.prev_class)))?;
        let step = coeffs.vertical(j, back.vertical).unwrap_or(Distance::MAX) + coeffs.horizontal(j, back.horizontal);
        if prev.length + step != entry.length {
            return Err(SolveError::CorruptTable(format!(
                "stage {} {class} length does not add up",
                j + 1
            )));
        }
        verticals[j - 1] = back.vertical;
        if j < n {
            horizontals.push(back.horizontal);
        }
        class = back.prev_class;
        entry = prev;
    }
    if class != EquivalenceClass::Empty || entry.length != 0 {
        return Err(SolveError::CorruptTable("chain does not start at 000C".into()));
    }
    horizontals.reverse();
    Ok(TourSubgraph::from_configs(inst, &verticals, &horizontals))
}

pub fn solve_one_pass(inst: &Instance, variant: Variant) -> Result<Solution, SolveError> {
    solve_one_pass_with(inst, variant, &OnePassTable::standard())
}

pub fn solve_one_pass_with(
    inst: &Instance,
    variant: Variant,
    transitions: &OnePassTable,
) -> Result<Solution, SolveError> {
    check_variant(inst, variant)?;
    debug_assert!(inst.validate().is_ok());
    let coeffs = CostCoefficients::new(inst);
    let table = run(inst, &coeffs, variant, transitions);
    let subgraph = reconstruct_with(&table, inst, &coeffs)?;
    let objective = table
        .entry(inst.num_aisles + 1, EquivalenceClass::Closed)
        .ok_or(SolveError::Infeasible)?
        .length;
    if objective != subgraph.total_length {
        return Err(SolveError::CorruptTable(format!(
            "objective {objective} but subgraph length {}",
            subgraph.total_length
        )));
    }
    Ok(Solution {
        objective,
        subgraph,
        stages_executed: table.stages_executed,
        decisions_examined: table.decisions_examined,
        max_decisions_per_class: table.max_decisions_per_class,
    })
}
