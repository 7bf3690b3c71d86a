//! Independent reference solvers: the warehouse as an explicit graph, exact
//! TSP over its required vertices, and a structural checker for tour
//! subgraphs. Slow, but share no code with the dynamic programs.

mod check;
mod graph;
mod tsp;

pub use check::{check_tour_subgraph, Verdict};
pub use graph::{all_pairs_shortest, build_graph, DistanceMatrix, WarehouseGraph};
pub use tsp::{brute_force_tour, held_karp, OracleError, BRUTE_FORCE_LIMIT, HELD_KARP_LIMIT};

use crate::model::{Distance, Instance};

/// Optimal tour length by Held-Karp over the required vertices of `inst`.
pub fn oracle_tour_length(inst: &Instance) -> Result<Distance, OracleError> {
    let d = all_pairs_shortest(&build_graph(inst), inst);
    held_karp(&d, 0).map(|(len, _)| len)
}
