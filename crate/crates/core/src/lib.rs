//! Exact order-picker routing in single-block parallel-aisle warehouses.
//!
//! ```
//! use pickroute::{fixtures, solve_one_pass, Variant};
//!
//! let sol = solve_one_pass(&fixtures::two_aisle(), Variant::General).unwrap();
//! assert_eq!(sol.objective, 26);
//! ```

pub mod dp;
pub mod fixtures;
pub mod format;
pub mod generate;
pub mod model;
pub mod oracle;
pub mod tour;

pub use dp::{solve_one_pass, solve_original, Solution, SolveError, Variant};
pub use format::{parse_instance, serialize_instance, ParseError};
pub use generate::{generate_instance, GeneratorParams, InvalidParams, SweepRanges};
pub use model::{AisleOutOfRange, Distance, Instance, InvalidInstance, Item, Point, ValidationErrors};
pub use tour::{euler_walk, Edge, EulerWalk, Side, TourSubgraph, WalkError};
