#![allow(dead_code)]

use pickroute::{generate_instance, GeneratorParams, Instance, SweepRanges};

pub fn small(seed: u64) -> Instance {
    SweepRanges::small().instance(seed)
}

pub fn medium(seed: u64) -> Instance {
    SweepRanges::medium().instance(seed)
}

pub fn rectangular(seed: u64) -> Instance {
    SweepRanges {
        rectangular: Some(true),
        ..SweepRanges::medium()
    }
    .instance(seed)
}

pub fn sized(n: usize, m: usize, seed: u64) -> Instance {
    generate_instance(&GeneratorParams {
        num_aisles: n,
        num_items: m,
        aisle_length: 30,
        cross_min: 1,
        cross_max: 12,
        rectangular: false,
        seed,
    })
    .unwrap()
}
