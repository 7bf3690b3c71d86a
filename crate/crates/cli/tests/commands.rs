use std::fs;
use std::process::Command;

use pickroute::dp::{EquivalenceClass, HorizontalConfig, OnePassTable, VerticalConfig};
use pickroute::{fixtures, parse_instance, serialize_instance, GeneratorParams, SweepRanges};
use pickroute_cli::{
    cmd_bench, cmd_generate, cmd_solve, cmd_verify, verify_instance, write_csv, Algorithm, BenchParams, BenchRow,
    CliError, VerifySource, CSV_HEADER,
};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pickroute"))
}

fn params(items: usize) -> GeneratorParams {
    GeneratorParams {
        num_aisles: 5,
        num_items: items,
        aisle_length: 10,
        cross_min: 1,
        cross_max: 10,
        rectangular: true,
        seed: 7,
    }
}

#[test]
fn generate_is_reparseable_and_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.txt"), dir.path().join("b.txt"));
    cmd_generate(&params(7), &a).unwrap();
    cmd_generate(&params(7), &b).unwrap();
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    let inst = parse_instance(&text).unwrap();
    assert_eq!(inst.items.len(), 7);
    assert!(inst.is_rectangular());

    cmd_generate(&params(0), &a).unwrap();
    assert!(parse_instance(&fs::read_to_string(&a).unwrap())
        .unwrap()
        .items
        .is_empty());
}

#[test]
fn solve_closed_forms() {
    let dir = tempfile::tempdir().unwrap();
    let one = dir.path().join("one.txt");
    fs::write(&one, serialize_instance(&fixtures::single_aisle())).unwrap();
    let r = cmd_solve(&one, Algorithm::OnePass, false, false).unwrap().report;
    assert_eq!((r.objective, r.stages_executed), (10, 1));
    let r = cmd_solve(&one, Algorithm::Original, false, false).unwrap().report;
    assert_eq!((r.objective, r.stages_executed), (10, 1));

    let two = dir.path().join("two.txt");
    fs::write(&two, serialize_instance(&fixtures::two_aisle())).unwrap();
    for algorithm in [Algorithm::OnePass, Algorithm::Original, Algorithm::Rectangular] {
        let out = cmd_solve(&two, algorithm, true, true).unwrap();
        assert_eq!(out.report.objective, 26);
        assert_eq!(out.report.verdict.as_deref(), Some("agree"));
        let walk = out.walk.unwrap();
        assert_eq!(walk.first().map(String::as_str), Some("1@0"));
        assert_eq!(walk.first(), walk.last());
    }
}

#[test]
fn rectangular_on_general_instance_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.txt");
    let mut inst = fixtures::two_aisle();
    inst.bottom_cross = vec![5];
    fs::write(&path, serialize_instance(&inst)).unwrap();
    let err = cmd_solve(&path, Algorithm::Rectangular, false, false).unwrap_err();
    assert!(matches!(err, CliError::VariantMismatch(_)));
    assert_eq!(err.exit_code(), 7);
}

#[test]
fn verify_sweep_agrees() {
    let source = VerifySource::Sweep {
        seeds: 1..=300,
        ranges: SweepRanges::small(),
    };
    let summary = cmd_verify(&source, &OnePassTable::standard()).unwrap();
    assert_eq!(summary.to_string(), "300/300 agree");
    let zero = verify_instance(&fixtures::empty_three_aisles()).unwrap();
    assert_eq!((zero.one_pass, zero.original, zero.oracle), (0, 0, 0));
}

#[test]
fn corrupted_table_is_caught() {
    let mut table = OnePassTable::standard();
    // Closing the tour without pulling the odd frontier back together.
    table.set(
        EquivalenceClass::OddOdd,
        HorizontalConfig::ZeroZero,
        Some((EquivalenceClass::Closed, VerticalConfig::Top)),
    );
    let source = VerifySource::Sweep {
        seeds: 1..=500,
        ranges: SweepRanges::small(),
    };
    match cmd_verify(&source, &table) {
        Err(CliError::Mismatch { detail, instance }) => {
            assert!(detail.starts_with("seed "), "{detail}");
            parse_instance(&instance).expect("dump is a canonical instance");
        }
        other => panic!("corruption went unnoticed: {other:?}"),
    }
}

#[test]
fn bench_csv_schema() {
    let rows = cmd_bench(&BenchParams {
        sizes: vec![10, 100, 1000],
        reps: 3,
        rectangular: true,
        ..BenchParams::default()
    })
    .unwrap();
    for row in &rows {
        let expected = if row.algorithm == "original" {
            2 * row.n - 1
        } else {
            row.n
        };
        assert_eq!(row.stages, expected);
        assert_eq!(row.m, 2 * row.n);
        if row.algorithm == "rectangular" {
            assert!(row.decisions <= 5 * 7 * row.n);
        }
    }
    let mut buf = Vec::new();
    write_csv(&mut buf, &rows).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let (first, rest) = text.split_once('\n').unwrap();
    assert_eq!(first, CSV_HEADER);
    let mut reader = csv::Reader::from_reader(rest.as_bytes());
    assert_eq!(
        reader.headers().unwrap().iter().collect::<Vec<_>>(),
        [
            "seed",
            "n",
            "m",
            "algorithm",
            "objective",
            "stages",
            "decisions",
            "micros"
        ]
    );
    let back: Vec<BenchRow> = reader.deserialize().collect::<Result<_, _>>().unwrap();
    assert_eq!(back.len(), rows.len());
    assert_eq!(back[0].objective, rows[0].objective);
}

#[test]
fn binary_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.txt");
    fs::write(&good, serialize_instance(&fixtures::five_aisle())).unwrap();
    let out = bin().arg("solve").arg(&good).arg("--oracle").output().unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["stages_executed"], 5);
    assert_eq!(report["verdict"], "agree");

    let code = |args: &[&str]| bin().args(args).output().unwrap().status.code();
    let broken = dir.path().join("broken.txt");
    fs::write(&broken, "aisles two\n").unwrap();
    let invalid = dir.path().join("invalid.txt");
    fs::write(
        &invalid,
        "aisles 2\naisle_length 5\ntop_cross 1\nbottom_cross 1\ndepot 3 bottom\n",
    )
    .unwrap();
    let big = dir.path().join("big.txt");
    let mut text = String::from("aisles 2\naisle_length 40\ntop_cross 1\nbottom_cross 1\ndepot 1 bottom\n");
    for y in 1..=20 {
        text.push_str(&format!("item 2 {y}\n"));
    }
    fs::write(&big, text).unwrap();

    assert_eq!(code(&["solve", dir.path().join("missing").to_str().unwrap()]), Some(1));
    assert_eq!(code(&["solve"]), Some(2));
    assert_eq!(code(&["solve", broken.to_str().unwrap()]), Some(3));
    assert_eq!(code(&["solve", invalid.to_str().unwrap()]), Some(4));
    assert_eq!(code(&["verify", big.to_str().unwrap()]), Some(6));
    assert_eq!(code(&["verify", good.to_str().unwrap()]), Some(0));
}
