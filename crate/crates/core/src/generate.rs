//! Seeded random instances.

use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::model::{Distance, Instance, Item};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorParams {
    pub num_aisles: usize,
    pub num_items: usize,
    pub aisle_length: Distance,
    pub cross_min: Distance,
    pub cross_max: Distance,
    /// One common distance for every top and bottom cross segment.
    pub rectangular: bool,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvalidParams {
    #[error("num_aisles must be positive")]
    NoAisles,
    #[error("aisle_length must be positive")]
    ZeroLength,
    #[error("cross distance bounds must be positive, got [{0}, {1}]")]
    NonPositiveCross(Distance, Distance),
    #[error("cross_min {0} exceeds cross_max {1}")]
    EmptyCrossRange(Distance, Distance),
}

impl GeneratorParams {
    pub fn validate(&self) -> Result<(), InvalidParams> {
        if self.num_aisles == 0 {
            return Err(InvalidParams::NoAisles);
        }
        if self.aisle_length == 0 {
            return Err(InvalidParams::ZeroLength);
        }
        if self.cross_min == 0 || self.cross_max == 0 {
            return Err(InvalidParams::NonPositiveCross(self.cross_min, self.cross_max));
        }
        if self.cross_min > self.cross_max {
            return Err(InvalidParams::EmptyCrossRange(self.cross_min, self.cross_max));
        }
        Ok(())
    }
}

/// Draws an instance from ChaCha8 seeded with `params.seed`. The depot aisle is
/// drawn uniformly, as are item aisles and offsets (`[0, aisle_length]`).
pub fn generate_instance(params: &GeneratorParams) -> Result<Instance, InvalidParams> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let n = params.num_aisles;
    let gaps = n - 1;
    let (top_cross, bottom_cross) = if params.rectangular {
        let d = rng.gen_range(params.cross_min..=params.cross_max);
        (vec![d; gaps], vec![d; gaps])
    } else {
        let mut draw = || -> Vec<Distance> {
            (0..gaps)
                .map(|_| rng.gen_range(params.cross_min..=params.cross_max))
                .collect()
        };
        let top = draw();
        let bottom = draw();
        (top, bottom)
    };
    let depot_aisle = rng.gen_range(1..=n);
    let items = (0..params.num_items)
        .map(|_| Item::new(rng.gen_range(1..=n), rng.gen_range(0..=params.aisle_length)))
        .collect();
    let inst = Instance {
        num_aisles: n,
        aisle_length: params.aisle_length,
        top_cross,
        bottom_cross,
        depot_aisle,
        items,
    }
    .canonicalized();
    debug_assert!(inst.validate().is_ok());
    Ok(inst)
}

/// Parameter ranges for drawing many instances, one per seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRanges {
    pub aisles: RangeInclusive<usize>,
    pub items: RangeInclusive<usize>,
    pub aisle_length: RangeInclusive<Distance>,
    pub cross: RangeInclusive<Distance>,
    /// `None` mixes rectangular and general instances.
    pub rectangular: Option<bool>,
}

impl SweepRanges {
    /// Small instances that the exact oracle handles quickly.
    pub fn small() -> Self {
        Self {
            aisles: 1..=6,
            items: 0..=8,
            aisle_length: 1..=20,
            cross: 1..=10,
            rectangular: None,
        }
    }

    pub fn medium() -> Self {
        Self {
            aisles: 1..=40,
            items: 0..=60,
            aisle_length: 1..=50,
            cross: 1..=20,
            rectangular: None,
        }
    }

    /// Generator parameters for `seed`; the ranges are sampled with the same
    /// seed, so a sweep is reproducible from its seeds alone.
    pub fn params(&self, seed: u64) -> GeneratorParams {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_5eed_5eed_5eed);
        let cross_a = rng.gen_range(self.cross.clone());
        let cross_b = rng.gen_range(self.cross.clone());
        GeneratorParams {
            num_aisles: rng.gen_range(self.aisles.clone()),
            num_items: rng.gen_range(self.items.clone()),
            aisle_length: rng.gen_range(self.aisle_length.clone()),
            cross_min: cross_a.min(cross_b),
            cross_max: cross_a.max(cross_b),
            rectangular: self.rectangular.unwrap_or_else(|| rng.gen_bool(0.5)),
            seed,
        }
    }

    pub fn instance(&self, seed: u64) -> Instance {
        generate_instance(&self.params(seed)).expect("sweep ranges produce valid parameters")
    }
}
