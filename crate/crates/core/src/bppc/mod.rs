//! Bin packing with conflicts: instances, feasibility, bounds, the
//! universal-vertex decomposition, a first-fit-decreasing heuristic, an exact
//! branch-and-bound solver and a brute-force oracle.

mod bounds;
mod colgen;
mod decompose;
mod exact;
mod ffd;
mod flow;
mod instance;
mod oracle;

use thiserror::Error;

pub use bounds::{lower_bound, weight_bound};
pub use decompose::{decompose_universal, Decomposition};
pub use exact::{solve_exact, solve_exact_with, SolveResult, SolverOptions};
pub use ffd::ffd_conflicts;
pub use instance::{verify_packing, BppcInstance, Packing, Violation};
pub use oracle::{brute_force_oracle, for_each_set_partition, ORACLE_MAX_ITEMS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BppcError {
    #[error("{weights} weights for {vertices} vertices")]
    WeightCount { weights: usize, vertices: usize },
    #[error("item {item} has weight {weight} above capacity {capacity}")]
    Oversized { item: usize, weight: u64, capacity: u64 },
    #[error("brute force limited to {max} items, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("clique hint is not a clique of the conflict graph")]
    NotAClique,
}

/// `ceil(total / capacity)`, with zero capacity meaning only empty items exist.
pub(crate) fn bins_for_volume(total: u64, capacity: u64) -> usize {
    if capacity == 0 {
        0
    } else {
        total.div_ceil(capacity) as usize
    }
}
