mod common;

use proptest::prelude::*;

use pickroute::{generate_instance, parse_instance, serialize_instance, GeneratorParams};

fn params() -> impl Strategy<Value = GeneratorParams> {
    (
        1usize..30,
        0usize..50,
        1u64..100,
        1u64..20,
        0u64..10,
        any::<bool>(),
        any::<u64>(),
    )
        .prop_map(|(n, m, l, lo, extra, rectangular, seed)| GeneratorParams {
            num_aisles: n,
            num_items: m,
            aisle_length: l,
            cross_min: lo,
            cross_max: lo + extra,
            rectangular,
            seed,
        })
}

proptest! {
    #[test]
    fn serialize_then_parse_is_identity(p in params()) {
        let inst = generate_instance(&p).unwrap();
        let text = serialize_instance(&inst);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(&back, &inst);
        prop_assert_eq!(serialize_instance(&back), text);
    }

    #[test]
    fn items_in_aisle_partitions_the_pick_list(p in params()) {
        let inst = generate_instance(&p).unwrap();
        let mut total = 0;
        for j in 1..=inst.num_aisles {
            let offsets = inst.items_in_aisle(j).unwrap();
            prop_assert!(offsets.windows(2).all(|w| w[0] <= w[1]));
            prop_assert!(offsets.iter().all(|&y| y <= inst.aisle_length));
            let own = inst.items.iter().filter(|i| i.aisle == j).count();
            let depot = usize::from(j == inst.depot_aisle);
            prop_assert_eq!(offsets.len(), own + depot);
            total += own;
        }
        prop_assert_eq!(total, inst.items.len());
        prop_assert!(inst.items_in_aisle(0).is_err());
        prop_assert!(inst.items_in_aisle(inst.num_aisles + 1).is_err());
    }
}
