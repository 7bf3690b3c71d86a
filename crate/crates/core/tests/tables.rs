//! Every cell of the three transition tables, pinned against the published
//! values.

use pickroute::dp::{
    transition_one_pass, transition_original_horizontal, transition_original_vertical, EquivalenceClass,
    HorizontalConfig, OnePassTable, VerticalConfig,
};

const EXPECTED: &str = include_str!("data/tables.txt");

fn section(name: &str) -> &'static str {
    let start = EXPECTED.find(&format!("[{name}]")).unwrap();
    let body = &EXPECTED[start..];
    let body = &body[body.find('\n').unwrap()..];
    body.find('[').map_or(body, |end| &body[..end])
}

fn rows(text: &str) -> Vec<(EquivalenceClass, Vec<&str>)> {
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (class, cells) = l.split_once('|').unwrap();
            (class.trim().parse().unwrap(), cells.split_whitespace().collect())
        })
        .collect()
}

fn class_or_dash(s: &str) -> Option<EquivalenceClass> {
    (s != "-").then(|| s.parse().unwrap())
}

#[test]
fn one_pass_table_all_42_cells() {
    let table = OnePassTable::standard();
    let mut checked = 0;
    for (e, cells) in rows(section("one-pass")) {
        assert_eq!(cells.len(), 6);
        for (h, cell) in HorizontalConfig::ALL.into_iter().zip(cells) {
            let expected = (cell != "-").then(|| {
                let (c, v) = cell.split_once('/').unwrap();
                (
                    c.parse::<EquivalenceClass>().unwrap(),
                    v.parse::<VerticalConfig>().unwrap(),
                )
            });
            assert_eq!(transition_one_pass(e, h), expected, "({e}, {h})");
            assert_eq!(table.get(e, h), expected, "({e}, {h})");
            checked += 1;
        }
    }
    assert_eq!(checked, 42);
}

#[test]
fn original_vertical_table_all_42_cells() {
    let mut checked = 0;
    for (e, cells) in rows(section("original-vertical")) {
        for (a, cell) in VerticalConfig::ALL.into_iter().zip(cells) {
            assert_eq!(transition_original_vertical(e, a), class_or_dash(cell), "({e}, {a})");
            checked += 1;
        }
    }
    assert_eq!(checked, 42);
}

#[test]
fn original_horizontal_table_all_35_cells() {
    let mut checked = 0;
    for (e, cells) in rows(section("original-horizontal")) {
        for (h, cell) in HorizontalConfig::BASIC.into_iter().zip(cells) {
            assert_eq!(transition_original_horizontal(e, h), class_or_dash(cell), "({e}, {h})");
            checked += 1;
        }
        assert_eq!(transition_original_horizontal(e, HorizontalConfig::TwoTwoStar), None);
    }
    assert_eq!(checked, 35);
}

#[test]
fn at_most_six_decisions_per_class() {
    for e in EquivalenceClass::ALL {
        let general = HorizontalConfig::ALL
            .into_iter()
            .filter(|&h| transition_one_pass(e, h).is_some())
            .count();
        let rectangular = HorizontalConfig::ALL
            .into_iter()
            .filter(|&h| h != HorizontalConfig::TwoTwoStar)
            .filter(|&h| transition_one_pass(e, h).is_some_and(|(_, v)| v != VerticalConfig::TwoPass))
            .count();
        assert!(general <= 6, "{e}: {general}");
        assert!(rectangular <= 5, "{e}: {rectangular}");
    }
}
