//! Seeded random conflict graphs and instances.
//!
//! Every generator is a pure function of its parameters and a 64-bit seed;
//! randomness comes from the streams in [`crate::rng`]. Graph generators draw
//! from the graph stream and item weights from the weight stream, so the
//! weights of an instance depend only on `(n, seed)` and not on the graph
//! parameters.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use thiserror::Error;

use crate::bppc::{BppcError, BppcInstance};
use crate::density::{DensityError, ThresholdParam};
use crate::graph::Graph;
use crate::interval::{Interval, IntervalModel};
use crate::rng::{stream_rng, Stream};
use crate::scalar::Scalar;
use crate::threshold::build_threshold_graph;
pub use crate::threshold::VertexWeights;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeneratorError {
    #[error("need at least {min} vertices, got {n}")]
    TooFewVertices { n: usize, min: usize },
    #[error(transparent)]
    Density(#[from] DensityError),
    #[error("interval generator cannot reach density 1; use a complete graph")]
    IntervalDensityOne,
    #[error("weight range [{lo}, {hi}] is empty")]
    EmptyWeightRange { lo: u64, hi: u64 },
    #[error("maximum weight {hi} exceeds capacity {capacity}")]
    WeightAboveCapacity { hi: u64, capacity: u64 },
    #[error(transparent)]
    Instance(#[from] BppcError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    /// Edge iff `(p_i + p_j)/2 <= d`, `p` uniform on `[0, 1]`.
    Threshold,
    /// Edge with probability `(p_i + p_j)/2`.
    SorianoGendreau,
    /// Uniform random pairs added until the target edge count is reached.
    UniformArbitrary,
    /// Intersection graph of fixed-length random intervals.
    Interval,
}

impl GeneratorKind {
    /// Short code used on the command line and in CSV output.
    pub fn code(self) -> &'static str {
        match self {
            GeneratorKind::Threshold => "T",
            GeneratorKind::SorianoGendreau => "SG",
            GeneratorKind::UniformArbitrary => "A",
            GeneratorKind::Interval => "I",
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown graph kind {0:?} (expected T, I, A or SG)")]
pub struct UnknownKind(pub String);

impl FromStr for GeneratorKind {
    type Err = UnknownKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "T" => Ok(GeneratorKind::Threshold),
            "SG" => Ok(GeneratorKind::SorianoGendreau),
            "A" => Ok(GeneratorKind::UniformArbitrary),
            "I" => Ok(GeneratorKind::Interval),
            other => Err(UnknownKind(other.to_string())),
        }
    }
}

/// What to generate. `param` is the threshold `d` for
/// [`GeneratorKind::Threshold`], the target density for the uniform and
/// interval generators, and ignored by the Soriano-Gendreau generator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub n: usize,
    pub param: f64,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<Graph, GeneratorError> {
        match self.kind {
            GeneratorKind::Threshold => {
                Ok(gen_threshold(self.n, ThresholdParam::new(self.param)?, self.seed).0)
            }
            GeneratorKind::SorianoGendreau => Ok(gen_soriano_gendreau(self.n, self.seed)),
            GeneratorKind::UniformArbitrary => gen_uniform_arbitrary(self.n, self.param, self.seed),
            GeneratorKind::Interval => Ok(gen_interval(self.n, self.param, self.seed)?.0),
        }
    }
}

fn uniform_weights<T: Scalar>(n: usize, seed: u64) -> Vec<T> {
    let mut rng = stream_rng(seed, Stream::Graph);
    (0..n).map(|_| T::lit(rng.gen::<f64>())).collect()
}

/// Weights `p_i` uniform on `[0, 1)`, edge iff `(p_i + p_j)/2 <= d`.
pub fn gen_threshold<T: Scalar>(
    n: usize,
    d: ThresholdParam<T>,
    seed: u64,
) -> (Graph, VertexWeights<T>) {
    let p = VertexWeights::new(uniform_weights(n, seed)).expect("uniform draws lie in [0, 1)");
    (build_threshold_graph(&p, d), p)
}

/// Weights `p_i` uniform on `[0, 1)`, then each pair `i < j` (in
/// lexicographic order) becomes an edge with probability `(p_i + p_j)/2`.
pub fn gen_soriano_gendreau(n: usize, seed: u64) -> Graph {
    let mut rng = stream_rng(seed, Stream::Graph);
    let p: Vec<f64> = (0..n).map(|_| rng.gen()).collect();
    let mut g = Graph::empty(n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen::<f64>() < (p[a] + p[b]) / 2.0 {
                g.link(a, b);
            }
        }
    }
    g
}

/// Edge count for density `delta` on `n` vertices, rounded half to even.
pub fn target_edge_count(n: usize, delta: f64) -> usize {
    let pairs = n * n.saturating_sub(1) / 2;
    (delta * pairs as f64).round_ties_even() as usize
}

/// Starts from the empty graph and repeatedly draws a uniform vertex pair,
/// adding it when absent, until the graph has
/// [`target_edge_count`]`(n, delta)` edges.
pub fn gen_uniform_arbitrary(n: usize, delta: f64, seed: u64) -> Result<Graph, GeneratorError> {
    if n < 2 {
        return Err(GeneratorError::TooFewVertices { n, min: 2 });
    }
    if !(0.0..=1.0).contains(&delta) {
        return Err(DensityError::DensityOutOfRange(delta).into());
    }
    let target = target_edge_count(n, delta);
    let mut rng = stream_rng(seed, Stream::Graph);
    let mut g = Graph::empty(n);
    while g.edge_count() < target {
        let a = rng.gen_range(0..n);
        let mut b = rng.gen_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        g.link(a, b);
    }
    Ok(g)
}

/// Interval length giving pairwise overlap probability `delta` for left ends
/// uniform on `[0, 1]`: solves `2L - L^2 = delta`.
pub fn interval_length<T: Scalar>(delta: T) -> T {
    T::one() - (T::one() - delta).sqrt()
}

/// `n` open intervals of common length `interval_length(delta)` with left
/// ends uniform on `[0, 1)`, and their intersection graph.
///
/// Two intervals meet with probability `delta`, so the expected density is
/// `delta`. Density 1 is rejected: it would need length 1 and is only reached
/// in the limit.
pub fn gen_interval<T: Scalar>(
    n: usize,
    delta: T,
    seed: u64,
) -> Result<(Graph, IntervalModel<T>), GeneratorError> {
    if n < 2 {
        return Err(GeneratorError::TooFewVertices { n, min: 2 });
    }
    if !(delta >= T::zero() && delta <= T::one()) {
        return Err(DensityError::DensityOutOfRange(delta.to_f64().unwrap_or(f64::NAN)).into());
    }
    if delta == T::one() {
        return Err(GeneratorError::IntervalDensityOne);
    }
    let len = interval_length(delta);
    let model = IntervalModel::new(
        uniform_weights::<T>(n, seed)
            .into_iter()
            .map(|l| Interval::new(l, l + len))
            .collect(),
    )
    .expect("nonnegative length");
    Ok((model.intersection_graph(), model))
}

/// Inclusive range of integer item weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightRange {
    pub lo: u64,
    pub hi: u64,
}

impl Default for WeightRange {
    fn default() -> Self {
        Self { lo: 20, hi: 100 }
    }
}

/// Item weights i.i.d. uniform on `range`, from the weight stream of `seed`.
pub fn gen_item_weights(n: usize, range: WeightRange, seed: u64) -> Vec<u64> {
    let mut rng = stream_rng(seed, Stream::Weights);
    (0..n).map(|_| rng.gen_range(range.lo..=range.hi)).collect()
}

/// Conflict graph from `spec` plus item weights drawn from the weight stream
/// of `spec.seed`.
pub fn gen_bppc_instance(
    spec: &GeneratorSpec,
    weights: WeightRange,
    capacity: u64,
) -> Result<BppcInstance, GeneratorError> {
    if weights.lo > weights.hi {
        return Err(GeneratorError::EmptyWeightRange {
            lo: weights.lo,
            hi: weights.hi,
        });
    }
    if weights.hi > capacity {
        return Err(GeneratorError::WeightAboveCapacity {
            hi: weights.hi,
            capacity,
        });
    }
    let graph = spec.generate()?;
    let w = gen_item_weights(spec.n, weights, spec.seed);
    Ok(BppcInstance::new(graph, w, capacity)?)
}
