//! Small hand-checked instances shared by tests, examples and the CLI.

use crate::model::{Instance, Item};

/// One aisle of length 10, items at offsets 2 and 5. Optimum 10.
pub fn single_aisle() -> Instance {
    Instance {
        num_aisles: 1,
        aisle_length: 10,
        top_cross: vec![],
        bottom_cross: vec![],
        depot_aisle: 1,
        items: vec![Item::new(1, 2), Item::new(1, 5)],
    }
}

/// Two aisles of length 10, cross distance 3, items at `(1, 4)` and `(2, 7)`.
/// Optimum 26.
pub fn two_aisle() -> Instance {
    Instance {
        num_aisles: 2,
        aisle_length: 10,
        top_cross: vec![3],
        bottom_cross: vec![3],
        depot_aisle: 1,
        items: vec![Item::new(1, 4), Item::new(2, 7)],
    }
}

/// Three aisles and nothing to pick. Optimum 0.
pub fn empty_three_aisles() -> Instance {
    Instance {
        num_aisles: 3,
        aisle_length: 10,
        top_cross: vec![2, 2],
        bottom_cross: vec![2, 2],
        depot_aisle: 1,
        items: vec![],
    }
}

/// Five aisles of length 11 with seven items; its warehouse graph has 17
/// vertices and 20 edges.
pub fn five_aisle() -> Instance {
    Instance {
        num_aisles: 5,
        aisle_length: 11,
        top_cross: vec![3; 4],
        bottom_cross: vec![3; 4],
        depot_aisle: 1,
        items: vec![
            Item::new(1, 3),
            Item::new(2, 3),
            Item::new(2, 9),
            Item::new(4, 7),
            Item::new(4, 8),
            Item::new(5, 2),
            Item::new(5, 10),
        ],
    }
}
