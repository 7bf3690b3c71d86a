use thiserror::Error;

use super::graph::DistanceMatrix;
use crate::model::Distance;

/// Largest matrix [`held_karp`] accepts.
pub const HELD_KARP_LIMIT: usize = 16;
/// Largest matrix [`brute_force_tour`] accepts (depot plus eight items).
pub const BRUTE_FORCE_LIMIT: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{size} required vertices exceed the oracle limit of {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("depot index {0} out of range")]
    BadDepot(usize),
}

fn guard(d: &DistanceMatrix, depot: usize, limit: usize) -> Result<(), OracleError> {
    if d.len() > limit {
        return Err(OracleError::TooLarge { size: d.len(), limit });
    }
    if depot >= d.len() {
        return Err(OracleError::BadDepot(depot));
    }
    Ok(())
}

/// Exact shortest closed tour through every vertex of `d`, by dynamic
/// programming over subsets. Returns the length and the visiting order,
/// starting at the depot.
pub fn held_karp(d: &DistanceMatrix, depot: usize) -> Result<(Distance, Vec<usize>), OracleError> {
    guard(d, depot, HELD_KARP_LIMIT)?;
    let others: Vec<usize> = (0..d.len()).filter(|&v| v != depot).collect();
    let k = others.len();
    if k == 0 {
        return Ok((0, vec![depot]));
    }
    let full = (1usize << k) - 1;
    const INF: Distance = Distance::MAX;
    // best[mask][last]: shortest path from the depot through `mask`, ending at `others[last]`.
    let mut best = vec![vec![INF; k]; 1 << k];
    let mut parent = vec![vec![usize::MAX; k]; 1 << k];
    for (i, &v) in others.iter().enumerate() {
        best[1 << i][i] = d.get(depot, v);
    }
    for mask in 1..=full {
        for last in 0..k {
            let here = best[mask][last];
            if here == INF || mask & (1 << last) == 0 {
                continue;
            }
            for next in 0..k {
                if mask & (1 << next) != 0 {
                    continue;
                }
                let m = mask | (1 << next);
                let cand = here + d.get(others[last], others[next]);
                if cand < best[m][next] {
                    best[m][next] = cand;
                    parent[m][next] = last;
                }
            }
        }
    }
    let (mut last, length) = (0..k)
        .map(|i| (i, best[full][i] + d.get(others[i], depot)))
        .min_by_key(|&(_, len)| len)
        .unwrap();
    let mut order = Vec::with_capacity(k + 1);
    let mut mask = full;
    while last != usize::MAX {
        order.push(others[last]);
        let prev = parent[mask][last];
        mask &= !(1 << last);
        last = prev;
    }
    order.push(depot);
    order.reverse();
    Ok((length, order))
}

/// Enumerates every permutation of the non-depot vertices.
pub fn brute_force_tour(d: &DistanceMatrix, depot: usize) -> Result<Distance, OracleError> {
    guard(d, depot, BRUTE_FORCE_LIMIT)?;
    fn extend(
        d: &DistanceMatrix,
        depot: usize,
        at: usize,
        rest: &mut Vec<usize>,
        so_far: Distance,
        best: &mut Distance,
    ) {
        if rest.is_empty() {
            *best = (*best).min(so_far + d.get(at, depot));
            return;
        }
        for i in 0..rest.len() {
            let v = rest.swap_remove(i);
            extend(d, depot, v, rest, so_far + d.get(at, v), best);
            rest.push(v);
            let last = rest.len() - 1;
            rest.swap(i, last);
        }
    }
    let mut rest: Vec<usize> = (0..d.len()).filter(|&v| v != depot).collect();
    let mut best = Distance::MAX;
    extend(d, depot, depot, &mut rest, 0, &mut best);
    Ok(best)
}
