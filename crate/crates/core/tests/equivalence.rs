mod common;

use pickroute::dp::{SolveError, VerticalConfig};
use pickroute::oracle::check_tour_subgraph;
use pickroute::{euler_walk, fixtures, solve_one_pass, solve_original, Variant};

#[test]
fn one_pass_matches_original() {
    for seed in 0..1500 {
        let inst = common::medium(seed);
        let a = solve_one_pass(&inst, Variant::General).unwrap();
        let b = solve_original(&inst).unwrap();
        assert_eq!(a.objective, b.objective, "seed {seed}");
        assert_eq!(a.stages_executed, inst.num_aisles);
        assert_eq!(b.stages_executed, 2 * inst.num_aisles - 1);
    }
}

#[test]
fn rectangular_variant_agrees_without_two_pass() {
    for seed in 0..800 {
        let inst = common::rectangular(seed);
        let rect = solve_one_pass(&inst, Variant::Rectangular).unwrap();
        let general = solve_one_pass(&inst, Variant::General).unwrap();
        assert_eq!(rect.objective, general.objective, "seed {seed}");
        assert!(!rect.subgraph.vertical_configs.contains(&VerticalConfig::TwoPass));
        assert!(rect.max_decisions_per_class <= 5);
    }
}

#[test]
fn rectangular_variant_rejects_general_instances() {
    let mut inst = fixtures::two_aisle();
    inst.top_cross = vec![4];
    assert!(matches!(
        solve_one_pass(&inst, Variant::Rectangular),
        Err(SolveError::VariantMismatch(_))
    ));
}

#[test]
fn subgraphs_are_tours() {
    for seed in 0..600 {
        let inst = common::medium(seed);
        for sol in [
            solve_one_pass(&inst, Variant::General).unwrap(),
            solve_original(&inst).unwrap(),
        ] {
            let verdict = check_tour_subgraph(&inst, &sol.subgraph);
            assert!(verdict.is_valid(), "seed {seed}: {verdict}");
            let walk = euler_walk(&sol.subgraph, &inst).unwrap();
            assert_eq!(walk.length(&inst), sol.objective, "seed {seed}");
            assert_eq!(walk.points.first(), Some(&inst.depot()));
            assert_eq!(walk.points.last(), Some(&inst.depot()));
        }
    }
}

#[test]
fn reversed_aisle_order_has_same_optimum() {
    for seed in 0..300 {
        let inst = common::medium(seed);
        let n = inst.num_aisles;
        let mut rev = inst.clone();
        rev.top_cross.reverse();
        rev.bottom_cross.reverse();
        rev.depot_aisle = n + 1 - inst.depot_aisle;
        for item in &mut rev.items {
            item.aisle = n + 1 - item.aisle;
        }
        rev.canonicalize();
        let a = solve_one_pass(&inst, Variant::General).unwrap().objective;
        let b = solve_one_pass(&rev, Variant::General).unwrap().objective;
        assert_eq!(a, b, "seed {seed}");
    }
}
