//! Edge configuration costs.
//!
//! For an aisle of length `L` with visit offsets `S` (the depot counts as a
//! visit at offset 0 of its aisle):
//!
//! | config  | cost                 |
//! |---------|----------------------|
//! | 1pass   | `L`                  |
//! | 2pass   | `2L`                 |
//! | top     | `2(L - min S)`       |
//! | bottom  | `2 max S`            |
//! | gap     | `2(L - g)`           |
//! | none    | `0`, only if `S = ∅` |
//!
//! where `g` is the largest gap between consecutive values of `0, S…, L`.
//! With `S` empty, top, bottom and gap cost nothing.

use thiserror::Error;

use super::{HorizontalConfig, VerticalConfig};
use crate::model::{AisleOutOfRange, Distance, Instance};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerticalCostError {
    #[error("`none` is not valid in aisle {0}, which holds visits")]
    Infeasible(usize),
    #[error(transparent)]
    OutOfRange(#[from] AisleOutOfRange),
}

/// Straightforward per-aisle evaluation; sorts the aisle's visits each call.
pub fn vertical_cost(inst: &Instance, j: usize, cfg: VerticalConfig) -> Result<Distance, VerticalCostError> {
    let visits = inst.items_in_aisle(j)?;
    let l = inst.aisle_length;
    let (Some(&lo), Some(&hi)) = (visits.first(), visits.last()) else {
        return Ok(match cfg {
            VerticalConfig::OnePass => l,
            VerticalConfig::TwoPass => 2 * l,
            _ => 0,
        });
    };
    let largest_gap = std::iter::once(0)
        .chain(visits.iter().copied())
        .chain(std::iter::once(l))
        .collect::<Vec<_>>()
        .windows(2)
        .map(|w| w[1] - w[0])
        .max()
        .unwrap_or(0);
    Ok(match cfg {
        VerticalConfig::OnePass => l,
        VerticalConfig::TwoPass => 2 * l,
        VerticalConfig::Top => 2 * (l - lo),
        VerticalConfig::Bottom => 2 * hi,
        VerticalConfig::Gap => 2 * (l - largest_gap),
        VerticalConfig::Skip => return Err(VerticalCostError::Infeasible(j)),
    })
}

/// Cost of the cross edges between aisle `j` and `j + 1`. `j = n` is the
/// zero-length gap to the dummy aisle.
pub fn horizontal_cost(inst: &Instance, j: usize, cfg: HorizontalConfig) -> Result<Distance, AisleOutOfRange> {
    if j == 0 || j > inst.num_aisles {
        return Err(AisleOutOfRange {
            aisle: j,
            num_aisles: inst.num_aisles,
        });
    }
    let (t, b) = cfg.edge_counts();
    Ok(t as Distance * inst.top_gap(j) + b as Distance * inst.bottom_gap(j))
}

/// Vertical costs of a single aisle; `None` means infeasible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AisleCosts {
    pub occupied: bool,
    pub one_pass: Distance,
    pub two_pass: Distance,
    pub top: Distance,
    pub bottom: Distance,
    pub gap: Distance,
}

impl AisleCosts {
    #[inline]
    pub fn get(&self, cfg: VerticalConfig) -> Option<Distance> {
        Some(match cfg {
            VerticalConfig::OnePass => self.one_pass,
            VerticalConfig::TwoPass => self.two_pass,
            VerticalConfig::Top => self.top,
            VerticalConfig::Bottom => self.bottom,
            VerticalConfig::Gap => self.gap,
            VerticalConfig::Skip if self.occupied => return None,
            VerticalConfig::Skip => 0,
        })
    }
}

/// All vertical and horizontal cost coefficients, computed in `O(m + n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostCoefficients {
    aisles: Vec<AisleCosts>,
    top: Vec<Distance>,
    bottom: Vec<Distance>,
}

impl CostCoefficients {
    pub fn new(inst: &Instance) -> Self {
        let n = inst.num_aisles;
        let l = inst.aisle_length;

        // Counting sort of visits by aisle.
        let mut start = vec![0usize; n + 2];
        for item in &inst.items {
            start[item.aisle + 1] += 1;
        }
        start[inst.depot_aisle + 1] += 1;
        for j in 1..start.len() {
            start[j] += start[j - 1];
        }
        let mut fill = start.clone();
        let mut offsets = vec![0; start[n + 1]];
        for item in &inst.items {
            offsets[fill[item.aisle]] = item.offset;
            fill[item.aisle] += 1;
        }
        offsets[fill[inst.depot_aisle]] = 0;

        let mut buckets = Vec::new();
        let aisles = (1..=n)
            .map(|j| {
                let visits = &offsets[start[j]..start[j + 1]];
                if visits.is_empty() {
                    return AisleCosts {
                        occupied: false,
                        one_pass: l,
                        two_pass: 2 * l,
                        top: 0,
                        bottom: 0,
                        gap: 0,
                    };
                }
                let lo = *visits.iter().min().unwrap();
                let hi = *visits.iter().max().unwrap();
                let g = largest_gap(visits, l, &mut buckets);
                AisleCosts {
                    occupied: true,
                    one_pass: l,
                    two_pass: 2 * l,
                    top: 2 * (l - lo),
                    bottom: 2 * hi,
                    gap: 2 * (l - g),
                }
            })
            .collect();

        let dummy = |v: &[Distance]| v.iter().copied().chain(std::iter::once(0)).collect();
        Self {
            aisles,
            top: dummy(&inst.top_cross),
            bottom: dummy(&inst.bottom_cross),
        }
    }

    pub fn num_aisles(&self) -> usize {
        self.aisles.len()
    }

    /// Aisle `j` (1-based).
    #[inline]
    pub fn aisle(&self, j: usize) -> &AisleCosts {
        &self.aisles[j - 1]
    }

    #[inline]
    pub fn vertical(&self, j: usize, cfg: VerticalConfig) -> Option<Distance> {
        self.aisles[j - 1].get(cfg)
    }

    /// Gap `j` to `j + 1`; `j = n` is the dummy gap.
    #[inline]
    pub fn horizontal(&self, j: usize, cfg: HorizontalConfig) -> Distance {
        let (t, b) = cfg.edge_counts();
        t as Distance * self.top[j - 1] + b as Distance * self.bottom[j - 1]
    }
}

/// Largest difference between consecutive values of `0, sorted(visits), len`
/// without sorting.
///
/// With `k` values spread over `[0, len]`, the maximum gap is at least
/// `len / (k - 1)`. Bucketing values into half-open intervals of exactly that
/// width means no gap inside a bucket can reach the maximum, so only the
/// boundaries between consecutive non-empty buckets need inspecting.
fn largest_gap(visits: &[Distance], len: Distance, buckets: &mut Vec<Option<(Distance, Distance)>>) -> Distance {
    if len == 0 {
        return 0;
    }
    let k = visits.len() as u128 + 2;
    buckets.clear();
    buckets.resize(k as usize, None);
    let mut put = |x: Distance| {
        let idx = (x as u128 * (k - 1) / len as u128) as usize;
        let slot = &mut buckets[idx];
        *slot = Some(match *slot {
            None => (x, x),
            Some((lo, hi)) => (lo.min(x), hi.max(x)),
        });
    };
    put(0);
    put(len);
    visits.iter().for_each(|&x| put(x));

    let mut best = 0;
    let mut prev_hi = 0;
    for &(lo, hi) in buckets.iter().flatten() {
        best = best.max(lo - prev_hi);
        prev_hi = hi;
    }
    best
}
