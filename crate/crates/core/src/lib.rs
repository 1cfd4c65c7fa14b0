//! Threshold conflict graphs and bin packing with conflicts.
//!
//! * [`graph`]: simple undirected graphs on vertices `1..=n`.
//! * [`threshold`]: recognition, certificates, interval models and weight
//!   realizations of threshold graphs.
//! * [`density`]: relation between the generator threshold `d` and the
//!   resulting edge density.
//! * [`generators`]: seeded threshold, Soriano-Gendreau, uniform and interval
//!   graph generators and instance assembly.
//! * [`bppc`]: instances, bounds, first-fit decreasing and an exact solver.
//! * [`format`], [`harness`]: instance files, tables and batch experiments.
//!
//! Real-valued code is generic over [`Scalar`] (`f32` or `f64`); the aliases
//! below fix the usual double-precision choice.

pub mod bppc;
pub mod density;
pub mod format;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod interval;
pub mod rng;
pub mod scalar;
pub mod threshold;

pub use bppc::{
    brute_force_oracle, decompose_universal, ffd_conflicts, lower_bound, solve_exact,
    solve_exact_with, verify_packing, BppcError, BppcInstance, Decomposition, Packing,
    SolveResult, SolverOptions, Violation,
};
pub use density::{
    approx_threshold_from_density, expected_bppc_lower_bound, expected_clique_size,
    expected_density_from_threshold, expected_universal_count, threshold_from_density,
    DensityError, Regime, ThresholdParam,
};
pub use format::{parse_instance, write_instance, ParseError};
pub use generators::{
    gen_bppc_instance, gen_interval, gen_soriano_gendreau, gen_threshold, gen_uniform_arbitrary,
    GeneratorError, GeneratorKind, GeneratorSpec, WeightRange,
};
pub use graph::{DensityReport, Graph, GraphError};
pub use interval::{Interval, IntervalError, IntervalModel};
pub use scalar::Scalar;
pub use threshold::{
    build_threshold_graph, recognize_threshold, Recognition, Rejection, ThresholdCertificate,
    VertexWeights,
};

pub type Threshold = ThresholdParam<f64>;
pub type Threshold32 = ThresholdParam<f32>;
pub type Weights = VertexWeights<f64>;
pub type Weights32 = VertexWeights<f32>;
pub type IntervalModel64 = IntervalModel<f64>;
pub type IntervalModel32 = IntervalModel<f32>;
