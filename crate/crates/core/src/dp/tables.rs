//! Transition tables. `None` marks a dash (infeasible) cell.
//!
//! Side conditions printed as footnotes (which classes may occur given the
//! items left or right of an aisle, `none` on a non-empty aisle) are not part
//! of the tables; the solvers apply them.

use super::EquivalenceClass::{self, *};
use super::HorizontalConfig::{self, *};
use super::VerticalConfig::{self, *};

type Cell = Option<(EquivalenceClass, VerticalConfig)>;

const fn c(class: EquivalenceClass, vertical: VerticalConfig) -> Cell {
    Some((class, vertical))
}

/// Rows follow [`EquivalenceClass::ALL`], columns [`HorizontalConfig::ALL`].
#[rustfmt::skip]
const ONE_PASS: [[Cell; 6]; 7] = [
    // 11                 20                     02                     22                          22*                         00
    [c(OddOdd, Gap),     c(EvenZero, OnePass), c(ZeroEven, OnePass), c(EvenEvenJoined, OnePass), None,                       c(Closed, OnePass)],
    [c(OddOdd, OnePass), c(EvenZero, Top),     c(ZeroEven, TwoPass), c(EvenEvenSplit, Gap),      c(EvenEvenJoined, TwoPass), c(Closed, Top)],
    [c(OddOdd, OnePass), c(EvenZero, TwoPass), c(ZeroEven, Bottom),  c(EvenEvenSplit, Gap),      c(EvenEvenJoined, TwoPass), c(Closed, Bottom)],
    [c(OddOdd, OnePass), c(EvenZero, Gap),     c(ZeroEven, Gap),     c(EvenEvenJoined, Gap),     None,                       c(Closed, Gap)],
    [c(OddOdd, OnePass), c(EvenZero, TwoPass), c(ZeroEven, TwoPass), c(EvenEvenSplit, Gap),      c(EvenEvenJoined, TwoPass), c(Closed, TwoPass)],
    [c(OddOdd, OnePass), c(EvenZero, Top),     c(ZeroEven, Bottom),  c(EvenEvenSplit, Gap),      c(EvenEvenJoined, TwoPass), c(Closed, Bottom)],
    // A completed tour stays complete across an empty aisle.
    [None,               None,                 None,                 None,                       None,                       c(Closed, Skip)],
];

/// Rows follow [`EquivalenceClass::ALL`], columns [`VerticalConfig::ALL`].
#[rustfmt::skip]
const ORIGINAL_VERTICAL: [[Option<EquivalenceClass>; 6]; 7] = [
    // 1pass                top                   bottom                gap                   2pass                 none
    [Some(EvenEvenJoined), Some(OddOdd),         Some(OddOdd),         Some(OddOdd),         Some(OddOdd),         Some(OddOdd)],
    [Some(OddOdd),         Some(EvenZero),       Some(EvenEvenSplit),  Some(EvenEvenSplit),  Some(EvenEvenJoined), Some(EvenZero)],
    [Some(OddOdd),         Some(EvenEvenSplit),  Some(ZeroEven),       Some(EvenEvenSplit),  Some(EvenEvenJoined), Some(ZeroEven)],
    [Some(OddOdd),         Some(EvenEvenJoined), Some(EvenEvenJoined), Some(EvenEvenJoined), Some(EvenEvenJoined), Some(EvenEvenJoined)],
    [Some(OddOdd),         Some(EvenEvenSplit),  Some(EvenEvenSplit),  Some(EvenEvenSplit),  Some(EvenEvenJoined), Some(EvenEvenJoined)],
    [Some(OddOdd),         Some(EvenZero),       Some(ZeroEven),       Some(EvenEvenSplit),  Some(EvenEvenJoined), Some(Empty)],
    [None,                 None,                 None,                 None,                 None,                 Some(Closed)],
];

/// Rows follow [`EquivalenceClass::ALL`], columns [`HorizontalConfig::BASIC`].
#[rustfmt::skip]
const ORIGINAL_HORIZONTAL: [[Option<EquivalenceClass>; 5]; 7] = [
    // 11          20              02              22                    00
    [Some(OddOdd), None,           None,           None,                 None],
    [None,         Some(EvenZero), None,           Some(EvenEvenSplit),  Some(Closed)],
    [None,         None,           Some(ZeroEven), Some(EvenEvenSplit),  Some(Closed)],
    [None,         Some(EvenZero), Some(ZeroEven), Some(EvenEvenJoined), Some(Closed)],
    [None,         None,           None,           Some(EvenEvenSplit),  None],
    [None,         None,           None,           None,                 Some(Closed)],
    [None,         None,           None,           None,                 Some(Closed)],
];

/// One-pass transition table: the `L_{j+1}^-` class reached from an `L_j^-`
/// class by a horizontal configuration, plus the vertical configuration that
/// aisle `j` is then forced to take.
///
/// The solver reads transitions through this type so tests can run it on a
/// deliberately altered table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OnePassTable {
    cells: [[Cell; 6]; 7],
}

impl OnePassTable {
    pub const fn standard() -> Self {
        Self { cells: ONE_PASS }
    }

    #[inline]
    pub fn get(&self, e: EquivalenceClass, h: HorizontalConfig) -> Cell {
        self.cells[e.index()][h.index()]
    }

    pub fn set(&mut self, e: EquivalenceClass, h: HorizontalConfig, cell: Cell) {
        self.cells[e.index()][h.index()] = cell;
    }
}

impl Default for OnePassTable {
    fn default() -> Self {
        Self::standard()
    }
}

pub fn transition_one_pass(e: EquivalenceClass, h: HorizontalConfig) -> Cell {
    ONE_PASS[e.index()][h.index()]
}

pub fn transition_original_vertical(e: EquivalenceClass, a: VerticalConfig) -> Option<EquivalenceClass> {
    ORIGINAL_VERTICAL[e.index()][a.index()]
}

/// `22*` does not exist in the original algorithm and is always infeasible.
pub fn transition_original_horizontal(e: EquivalenceClass, h: HorizontalConfig) -> Option<EquivalenceClass> {
    let col = match h {
        OneOne => 0,
        TwoZero => 1,
        ZeroTwo => 2,
        TwoTwo => 3,
        ZeroZero => 4,
        TwoTwoStar => return None,
    };
    ORIGINAL_HORIZONTAL[e.index()][col]
}
