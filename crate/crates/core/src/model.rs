//! Warehouse instance data model.
//!
//! A single-block warehouse has `n` parallel pick aisles of common length `L`,
//! joined by a top and a bottom cross-aisle. Aisle `j` meets the top
//! cross-aisle at `a_j` and the bottom one at `b_j`. Positions inside an aisle
//! are measured as an offset from `b_j`, so `b_j` sits at offset `0` and `a_j`
//! at offset `L`. The depot is always at some `b_{j0}`; instances given with a
//! top depot are mirrored when parsed.

use std::fmt;

use thiserror::Error;

/// Distance unit. All geometry is integral so the solvers and the oracle agree
/// exactly.
pub type Distance = u64;

/// A location on the pick list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Item {
    /// 1-based aisle index.
    pub aisle: usize,
    /// Distance from the bottom end `b_j` of the aisle.
    pub offset: Distance,
}

impl Item {
    pub fn new(aisle: usize, offset: Distance) -> Self {
        Self { aisle, offset }
    }
}

/// A point of the warehouse graph, identified by aisle and offset.
///
/// `Point { aisle: j, offset: 0 }` is `b_j`; `Point { aisle: j, offset: L }`
/// is `a_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub aisle: usize,
    pub offset: Distance,
}

impl Point {
    pub fn new(aisle: usize, offset: Distance) -> Self {
        Self { aisle, offset }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.aisle, self.offset)
    }
}

/// One violated instance invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvalidInstance {
    #[error("aisle count must be at least 1")]
    NoAisles,
    #[error("cross list length mismatch: {field} has {found} entries, expected {expected}")]
    CrossLengthMismatch {
        field: &'static str,
        found: usize,
        expected: usize,
    },
    #[error("depot aisle out of range: {depot} not in [1, {num_aisles}]")]
    DepotOutOfRange { depot: usize, num_aisles: usize },
    #[error("item {index} aisle out of range: {aisle} not in [1, {num_aisles}]")]
    ItemAisleOutOfRange {
        index: usize,
        aisle: usize,
        num_aisles: usize,
    },
    #[error("item {index} offset out of range: {offset} not in [0, {aisle_length}]")]
    ItemOffsetOutOfRange {
        index: usize,
        offset: Distance,
        aisle_length: Distance,
    },
}

/// Every violation found by [`Instance::validate`], in field order.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid instance: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
pub struct ValidationErrors(pub Vec<InvalidInstance>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("aisle index {aisle} out of range [1, {num_aisles}]")]
pub struct AisleOutOfRange {
    pub aisle: usize,
    pub num_aisles: usize,
}

/// A single-block warehouse together with its pick list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Instance {
    pub num_aisles: usize,
    pub aisle_length: Distance,
    /// `top_cross[j - 1]` is the distance from `a_j` to `a_{j+1}`.
    pub top_cross: Vec<Distance>,
    /// `bottom_cross[j - 1]` is the distance from `b_j` to `b_{j+1}`.
    pub bottom_cross: Vec<Distance>,
    /// The depot sits at `b_{depot_aisle}`.
    pub depot_aisle: usize,
    pub items: Vec<Item>,
}

impl Instance {
    /// Checks every invariant and reports all violations at once.
    pub fn validate(&self) -> Result<(), ValidationErrors> {
        let mut errors = Vec::new();
        let n = self.num_aisles;
        if n == 0 {
            errors.push(InvalidInstance::NoAisles);
        }
        let expected = n.saturating_sub(1);
        for (field, list) in [("top_cross", &self.top_cross), ("bottom_cross", &self.bottom_cross)] {
            if list.len() != expected {
                errors.push(InvalidInstance::CrossLengthMismatch {
                    field,
                    found: list.len(),
                    expected,
                });
            }
        }
        if self.depot_aisle == 0 || self.depot_aisle > n {
            errors.push(InvalidInstance::DepotOutOfRange {
                depot: self.depot_aisle,
                num_aisles: n,
            });
        }
        for (index, item) in self.items.iter().enumerate() {
            if item.aisle == 0 || item.aisle > n {
                errors.push(InvalidInstance::ItemAisleOutOfRange {
                    index,
                    aisle: item.aisle,
                    num_aisles: n,
                });
            }
            if item.offset > self.aisle_length {
                errors.push(InvalidInstance::ItemOffsetOutOfRange {
                    index,
                    offset: item.offset,
                    aisle_length: self.aisle_length,
                });
            }
        }
        if errors.is_empty() {
            Ok(())
        } else {
            Err(ValidationErrors(errors))
        }
    }

    /// Sorts the pick list by `(aisle, offset)`.
    pub fn canonicalize(&mut self) {
        self.items.sort_unstable();
    }

    pub fn canonicalized(mut self) -> Self {
        self.canonicalize();
        self
    }

    pub fn depot(&self) -> Point {
        Point::new(self.depot_aisle, 0)
    }

    /// Distance from `a_j` to `a_{j+1}`; the dummy gap `j = n` has length zero.
    pub fn top_gap(&self, j: usize) -> Distance {
        self.top_cross.get(j.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// Distance from `b_j` to `b_{j+1}`; the dummy gap `j = n` has length zero.
    pub fn bottom_gap(&self, j: usize) -> Distance {
        self.bottom_cross.get(j.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// Ascending visit offsets in aisle `j`. The depot contributes offset `0`
    /// to its own aisle. Duplicates are kept.
    pub fn items_in_aisle(&self, j: usize) -> Result<Vec<Distance>, AisleOutOfRange> {
        if j == 0 || j > self.num_aisles {
            return Err(AisleOutOfRange {
                aisle: j,
                num_aisles: self.num_aisles,
            });
        }
        let mut offsets: Vec<Distance> = self
            .items
            .iter()
            .filter(|item| item.aisle == j)
            .map(|item| item.offset)
            .collect();
        if j == self.depot_aisle {
            offsets.push(0);
        }
        offsets.sort_unstable();
        Ok(offsets)
    }

    /// Every point that must be visited: the depot first, then the distinct
    /// item locations in canonical order.
    pub fn required_points(&self) -> Vec<Point> {
        let depot = self.depot();
        let mut points: Vec<Point> = self
            .items
            .iter()
            .map(|item| Point::new(item.aisle, item.offset))
            .filter(|p| *p != depot)
            .collect();
        points.sort_unstable();
        points.dedup();
        points.insert(0, depot);
        points
    }

    /// True when every top and bottom cross segment has one common length.
    pub fn is_rectangular(&self) -> bool {
        match self.top_cross.first() {
            None => true,
            Some(&d) => self.top_cross.iter().chain(&self.bottom_cross).all(|&x| x == d),
        }
    }

    /// Reflects the warehouse top-to-bottom: cross-aisles swap roles and
    /// every offset `y` becomes `L - y`. The depot aisle is untouched.
    pub fn mirrored(&self) -> Self {
        let mut out = Self {
            num_aisles: self.num_aisles,
            aisle_length: self.aisle_length,
            top_cross: self.bottom_cross.clone(),
            bottom_cross: self.top_cross.clone(),
            depot_aisle: self.depot_aisle,
            items: self
                .items
                .iter()
                .map(|i| Item::new(i.aisle, self.aisle_length.saturating_sub(i.offset)))
                .collect(),
        };
        out.canonicalize();
        out
    }
}

/// First and last aisle holding a visit (the depot aisle always counts).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OccupiedSpan {
    pub first: usize,
    pub last: usize,
}

impl OccupiedSpan {
    pub fn of(inst: &Instance) -> Self {
        let mut first = inst.depot_aisle;
        let mut last = inst.depot_aisle;
        for item in &inst.items {
            first = first.min(item.aisle);
            last = last.max(item.aisle);
        }
        Self { first, last }
    }

    /// No visits in aisles `1..=j`.
    pub fn nothing_through(&self, j: usize) -> bool {
        j < self.first
    }

    /// No visits in aisles `j..=n`.
    pub fn nothing_from(&self, j: usize) -> bool {
        j > self.last
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(n: usize, items: Vec<Item>) -> Instance {
        Instance {
            num_aisles: n,
            aisle_length: 10,
            top_cross: vec![3; n - 1],
            bottom_cross: vec![3; n - 1],
            depot_aisle: 1,
            items,
        }
    }

    #[test]
    fn five_aisle_layout_is_valid() {
        assert!(crate::fixtures::five_aisle().validate().is_ok());
    }

    #[test]
    fn offset_past_aisle_end_is_rejected() {
        let bad = inst(2, vec![Item::new(2, 11)]);
        let err = bad.validate().unwrap_err();
        assert!(matches!(
            err.0[..],
            [InvalidInstance::ItemOffsetOutOfRange { offset: 11, .. }]
        ));
        assert!(err.to_string().contains("offset out of range"));
    }

    #[test]
    fn depot_zero_is_rejected() {
        let mut bad = inst(2, vec![]);
        bad.depot_aisle = 0;
        let err = bad.validate().unwrap_err();
        assert!(err.to_string().contains("depot aisle out of range"));
    }

    #[test]
    fn all_violations_reported() {
        let bad = Instance {
            num_aisles: 2,
            aisle_length: 5,
            top_cross: vec![1, 2],
            bottom_cross: vec![],
            depot_aisle: 3,
            items: vec![Item::new(0, 1), Item::new(1, 9)],
        };
        assert_eq!(bad.validate().unwrap_err().0.len(), 5);
    }

    #[test]
    fn items_in_aisle_cases() {
        let i = inst(3, vec![Item::new(2, 5), Item::new(2, 2)]);
        assert_eq!(i.items_in_aisle(3).unwrap(), Vec::<Distance>::new());
        assert_eq!(i.items_in_aisle(1).unwrap(), vec![0]);
        assert_eq!(i.items_in_aisle(2).unwrap(), vec![2, 5]);
        assert!(i.items_in_aisle(0).is_err());
        assert!(i.items_in_aisle(4).is_err());
    }

    #[test]
    fn mirror_is_an_involution() {
        let mut i = inst(3, vec![Item::new(2, 7), Item::new(3, 0)]);
        i.top_cross = vec![1, 2];
        i.bottom_cross = vec![3, 4];
        i.canonicalize();
        let m = i.mirrored();
        assert_eq!(m.top_cross, vec![3, 4]);
        assert_eq!(m.items, vec![Item::new(2, 3), Item::new(3, 10)]);
        assert_eq!(m.mirrored(), i);
    }

    #[test]
    fn required_points_dedup_and_depot_first() {
        let i = inst(2, vec![Item::new(2, 4), Item::new(1, 0), Item::new(2, 4)]);
        assert_eq!(i.required_points(), vec![Point::new(1, 0), Point::new(2, 4)]);
    }

    #[test]
    fn span_tracks_depot_and_items() {
        let mut i = inst(5, vec![Item::new(4, 1)]);
        i.depot_aisle = 2;
        let span = OccupiedSpan::of(&i);
        assert_eq!(span, OccupiedSpan { first: 2, last: 4 });
        assert!(span.nothing_through(1));
        assert!(!span.nothing_through(2));
        assert!(span.nothing_from(5));
        assert!(!span.nothing_from(4));
    }
}
