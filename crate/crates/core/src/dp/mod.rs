//! Dynamic programs over partial tour subgraph equivalence classes.
//!
//! A partial tour subgraph (PTS) covering aisles `1..j` is classified by the
//! degree parity of the frontier vertices `a_j`, `b_j` and by how many
//! connected components it has. Two PTSs in the same class admit exactly the
//! same completions, so a DP only needs to keep the shortest PTS of each class.
//!
//! Two solvers live here:
//! * [`solve_one_pass`] makes one decision per aisle: the horizontal
//!   configuration between aisles `j` and `j + 1` determines which vertical
//!   configuration aisle `j` needs, so there are `n` stages.
//! * [`solve_original`] alternates vertical and horizontal stages, `2n - 1`
//!   in total; it is kept as a baseline.

mod cost;
mod one_pass;
mod original;
mod tables;

use std::fmt;
use std::str::FromStr;

pub use cost::{horizontal_cost, vertical_cost, AisleCosts, CostCoefficients, VerticalCostError};
pub use one_pass::{
    build_dp_table, reconstruct, solve_one_pass, solve_one_pass_with, Backpointer, DpTable, SolveError, StageEntry,
    Variant, VariantMismatch,
};
pub use original::solve_original;
pub use tables::{transition_one_pass, transition_original_horizontal, transition_original_vertical, OnePassTable};

use crate::tour::TourSubgraph;

/// Degree parity of a frontier vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Zero,
    Even,
    Odd,
}

/// The seven PTS equivalence classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EquivalenceClass {
    /// `UU1C`: both frontier vertices odd, one component.
    OddOdd,
    /// `E01C`: top even, bottom untouched, one component.
    EvenZero,
    /// `0E1C`: top untouched, bottom even, one component.
    ZeroEven,
    /// `EE1C`: both even, one component.
    EvenEvenJoined,
    /// `EE2C`: both even, `a_j` and `b_j` in different components.
    EvenEvenSplit,
    /// `000C`: no edges yet.
    Empty,
    /// `001C`: a closed component away from the frontier; the tour is done.
    Closed,
}

impl EquivalenceClass {
    /// Table row order.
    pub const ALL: [EquivalenceClass; 7] = [
        Self::OddOdd,
        Self::EvenZero,
        Self::ZeroEven,
        Self::EvenEvenJoined,
        Self::EvenEvenSplit,
        Self::Empty,
        Self::Closed,
    ];

    pub const fn index(self) -> usize {
        self as usize
    }

    pub const fn tag(self) -> &'static str {
        match self {
            Self::OddOdd => "UU1C",
            Self::EvenZero => "E01C",
            Self::ZeroEven => "0E1C",
            Self::EvenEvenJoined => "EE1C",
            Self::EvenEvenSplit => "EE2C",
            Self::Empty => "000C",
            Self::Closed => "001C",
        }
    }

    /// `(parity of a_j, parity of b_j, components)`.
    pub const fn signature(self) -> (Parity, Parity, u8) {
        use Parity::*;
        match self {
            Self::OddOdd => (Odd, Odd, 1),
            Self::EvenZero => (Even, Zero, 1),
            Self::ZeroEven => (Zero, Even, 1),
            Self::EvenEvenJoined => (Even, Even, 1),
            Self::EvenEvenSplit => (Even, Even, 2),
            Self::Empty => (Zero, Zero, 0),
            Self::Closed => (Zero, Zero, 1),
        }
    }

    pub fn from_signature(a: Parity, b: Parity, components: u8) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.signature() == (a, b, components))
    }

    /// Both frontier vertices have degree zero.
    pub const fn is_detached(self) -> bool {
        matches!(self, Self::Empty | Self::Closed)
    }
}

/// Edge pattern inside one aisle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VerticalConfig {
    /// Traverse the whole aisle once.
    OnePass,
    /// Enter and leave through `a_j`.
    Top,
    /// Enter and leave through `b_j`.
    Bottom,
    /// Enter from both ends, leaving the largest gap between visits untraversed.
    Gap,
    /// Traverse the whole aisle twice.
    TwoPass,
    /// Do not enter the aisle (`none`).
    Skip,
}

impl VerticalConfig {
    pub const ALL: [VerticalConfig; 6] = [
        Self::OnePass,
        Self::Top,
        Self::Bottom,
        Self::Gap,
        Self::TwoPass,
        Self::Skip,
    ];

    pub const fn index(self) -> usize {
        self as usize
    }

    pub const fn name(self) -> &'static str {
        match self {
            Self::OnePass => "1pass",
            Self::Top => "top",
            Self::Bottom => "bottom",
            Self::Gap => "gap",
            Self::TwoPass => "2pass",
            Self::Skip => "none",
        }
    }
}

/// Cross-aisle edges between aisle `j` and `j + 1`, written as
/// `<top count><bottom count>`. `22*` is `22` with a forced `2pass` in aisle `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HorizontalConfig {
    OneOne,
    TwoZero,
    ZeroTwo,
    TwoTwo,
    TwoTwoStar,
    ZeroZero,
}

impl HorizontalConfig {
    /// Scan order of the one-pass solver.
    pub const ALL: [HorizontalConfig; 6] = [
        Self::OneOne,
        Self::TwoZero,
        Self::ZeroTwo,
        Self::TwoTwo,
        Self::TwoTwoStar,
        Self::ZeroZero,
    ];

    /// The configurations of the original algorithm (no `22*`).
    pub const BASIC: [HorizontalConfig; 5] = [Self::OneOne, Self::TwoZero, Self::ZeroTwo, Self::TwoTwo, Self::ZeroZero];

    pub const fn index(self) -> usize {
        self as usize
    }

    pub const fn name(self) -> &'static str {
        match self {
            Self::OneOne => "11",
            Self::TwoZero => "20",
            Self::ZeroTwo => "02",
            Self::TwoTwo => "22",
            Self::TwoTwoStar => "22*",
            Self::ZeroZero => "00",
        }
    }

    /// Number of top and bottom cross edges.
    pub const fn edge_counts(self) -> (u8, u8) {
        match self {
            Self::OneOne => (1, 1),
            Self::TwoZero => (2, 0),
            Self::ZeroTwo => (0, 2),
            Self::TwoTwo | Self::TwoTwoStar => (2, 2),
            Self::ZeroZero => (0, 0),
        }
    }

    /// `22*` folds into `22`; every other configuration is unchanged.
    pub const fn edges_only(self) -> Self {
        match self {
            Self::TwoTwoStar => Self::TwoTwo,
            other => other,
        }
    }
}

macro_rules! name_impls {
    ($ty:ty, $name:ident, $what:literal) => {
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.$name())
            }
        }

        impl FromStr for $ty {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                Self::ALL
                    .into_iter()
                    .find(|v| v.$name() == s)
                    .ok_or_else(|| format!(concat!("unknown ", $what, " `{}`"), s))
            }
        }
    };
}

name_impls!(EquivalenceClass, tag, "equivalence class");
name_impls!(VerticalConfig, name, "vertical configuration");
name_impls!(HorizontalConfig, name, "horizontal configuration");

/// Optimal route found by one of the solvers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub objective: u64,
    pub subgraph: TourSubgraph,
    pub stages_executed: usize,
    /// Non-dash `(class, configuration)` table entries evaluated.
    pub decisions_examined: usize,
    /// Largest number of decisions evaluated for a single class in one stage.
    pub max_decisions_per_class: usize,
}
