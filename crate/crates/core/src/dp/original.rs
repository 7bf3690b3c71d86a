//! The `2n - 1`-stage baseline: a vertical stage per aisle (`L_j^-` to
//! `L_j^+`) and a horizontal stage per gap (`L_j^+` to `L_{j+1}^-`).

use super::cost::CostCoefficients;
use super::one_pass::SolveError;
use super::tables::{transition_original_horizontal, transition_original_vertical};
use super::{EquivalenceClass, HorizontalConfig, Solution, VerticalConfig};
use crate::model::{Distance, Instance, OccupiedSpan};
use crate::tour::TourSubgraph;

#[derive(Debug, Clone, Copy)]
struct Entry<A> {
    length: Distance,
    back: Option<(EquivalenceClass, A)>,
}

type Stage<A> = [Option<Entry<A>>; 7];

fn relax<A: Copy>(stage: &mut Stage<A>, target: EquivalenceClass, length: Distance, back: (EquivalenceClass, A)) {
    let slot = &mut stage[target.index()];
    if slot.is_none_or(|cur| length < cur.length) {
        *slot = Some(Entry {
            length,
            back: Some(back),
        });
    }
}

/// Classes that may end the tour, in tie-break order.
const FINAL: [EquivalenceClass; 4] = [
    EquivalenceClass::EvenZero,
    EquivalenceClass::ZeroEven,
    EquivalenceClass::EvenEvenJoined,
    EquivalenceClass::Closed,
];

pub fn solve_original(inst: &Instance) -> Result<Solution, SolveError> {
    use EquivalenceClass::{Closed, Empty};

    debug_assert!(inst.validate().is_ok());
    let n = inst.num_aisles;
    let coeffs = CostCoefficients::new(inst);
    let span = OccupiedSpan::of(inst);

    let mut minus: Vec<Stage<HorizontalConfig>> = Vec::with_capacity(n);
    let mut plus: Vec<Stage<VerticalConfig>> = Vec::with_capacity(n);
    let mut start = [None; 7];
    start[Empty.index()] = Some(Entry { length: 0, back: None });
    minus.push(start);

    let mut stages = 0;
    let mut decisions = 0;
    let mut max_per_class = 0;
    for j in 1..=n {
        stages += 1;
        let vcost = VerticalConfig::ALL.map(|a| coeffs.vertical(j, a));
        let mut after: Stage<VerticalConfig> = [None; 7];
        for e in EquivalenceClass::ALL {
            let Some(entry) = minus[j - 1][e.index()] else {
                continue;
            };
            let mut examined = 0;
            for a in VerticalConfig::ALL {
                let Some(target) = transition_original_vertical(e, a) else {
                    continue;
                };
                examined += 1;
                let Some(cost) = vcost[a.index()] else {
                    continue;
                };
                // Adding no edges cannot change degrees or connectivity.
                if a == VerticalConfig::Skip && target != e {
                    continue;
                }
                let admissible = match target {
                    Empty => span.nothing_through(j),
                    Closed => span.nothing_from(j + 1),
                    _ => true,
                };
                if admissible {
                    relax(&mut after, target, entry.length + cost, (e, a));
                }
            }
            decisions += examined;
            max_per_class = max_per_class.max(examined);
        }
        plus.push(after);

        if j == n {
            break;
        }
        stages += 1;
        let hcost = HorizontalConfig::ALL.map(|h| coeffs.horizontal(j, h));
        let mut next: Stage<HorizontalConfig> = [None; 7];
        for e in EquivalenceClass::ALL {
            let Some(entry) = plus[j - 1][e.index()] else {
                continue;
            };
            let mut examined = 0;
            for h in HorizontalConfig::BASIC {
                let Some(mut target) = transition_original_horizontal(e, h) else {
                    continue;
                };
                examined += 1;
                if target.is_detached() {
                    // With nothing built yet the PTS stays empty.
                    target = if e == Empty { Empty } else { Closed };
                    let admissible = match target {
                        Empty => span.nothing_through(j),
                        _ => span.nothing_from(j + 1),
                    };
                    if !admissible {
                        continue;
                    }
                }
                relax(&mut next, target, entry.length + hcost[h.index()], (e, h));
            }
            decisions += examined;
            max_per_class = max_per_class.max(examined);
        }
        minus.push(next);
    }

    let (mut class, mut entry) = FINAL
        .into_iter()
        .filter_map(|c| plus[n - 1][c.index()].map(|e| (c, e)))
        .fold(
            None,
            |best: Option<(EquivalenceClass, Entry<VerticalConfig>)>, cand| match best {
                Some(b) if b.1.length <= cand.1.length => Some(b),
                _ => Some(cand),
            },
        )
        .ok_or(SolveError::Infeasible)?;
    let objective = entry.length;

    let mut verticals = vec![VerticalConfig::Skip; n];
    let mut horizontals = vec![HorizontalConfig::ZeroZero; n - 1];
    let corrupt = |what: String| SolveError::CorruptTable(what);
    for j in (1..=n).rev() {
        let (prev, a) = entry
            .back
            .ok_or_else(|| corrupt(format!("L_{j}^+ {class} has no backpointer")))?;
        verticals[j - 1] = a;
        let before = minus[j - 1][prev.index()].ok_or_else(|| corrupt(format!("L_{j}^- lacks {prev}")))?;
        class = prev;
        if j == 1 {
            break;
        }
        let (prev, h) = before
            .back
            .ok_or_else(|| corrupt(format!("L_{j}^- {class} has no backpointer")))?;
        horizontals[j - 2] = h;
        entry = plus[j - 2][prev.index()].ok_or_else(|| corrupt(format!("L_{}^+ lacks {prev}", j - 1)))?;
        class = prev;
    }

    let subgraph = TourSubgraph::from_configs(inst, &verticals, &horizontals);
    if subgraph.total_length != objective {
        return Err(corrupt(format!(
            "objective {objective} but subgraph length {}",
            subgraph.total_length
        )));
    }
    Ok(Solution {
        objective,
        subgraph,
        stages_executed: stages,
        decisions_examined: decisions,
        max_decisions_per_class: max_per_class,
    })
}
