//! Threshold graphs: construction from vertex weights, recognition, and the
//! structure read off the degree-ordered adjacency matrix.
//!
//! A graph is threshold when there are weights `p` in `[0, 1]` and a
//! threshold `d` with `{i, j}` an edge iff `(p_i + p_j)/2 <= d`. Sorting the
//! vertices by nonincreasing degree (ties by ascending id) turns the adjacency
//! matrix of such a graph into a staircase: row `i` holds ones exactly in
//! columns `1..=last_col(i)` (minus the diagonal) and `last_col` never
//! increases. Recognition checks that shape directly in `O(n + |E|)` row
//! operations.
//!
//! Positions in the ordering are 1-based in everything this module returns,
//! matching the matrix indices `m_{i,j}`.

use std::fmt;

use thiserror::Error;

use crate::density::ThresholdParam;
use crate::graph::Graph;
use crate::interval::{Interval, IntervalModel};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
#[error("vertex weight {value} at index {index} outside [0, 1]")]
pub struct WeightRangeError {
    pub index: usize,
    pub value: f64,
}

/// Per-vertex weights `p_v` in `[0, 1]`; entry `k` belongs to vertex `k + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexWeights<T>(Vec<T>);

impl<T: Scalar> VertexWeights<T> {
    pub fn new(p: Vec<T>) -> Result<Self, WeightRangeError> {
        match p.iter().position(|&x| !(x >= T::zero() && x <= T::one())) {
            Some(index) => Err(WeightRangeError {
                index,
                value: p[index].to_f64().unwrap_or(f64::NAN),
            }),
            None => Ok(Self(p)),
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }

    /// Weight of vertex `v` (1-based).
    pub fn get(&self, v: usize) -> T {
        self.0[v - 1]
    }
}

/// Threshold graph with an edge `{i, j}` iff `(p_i + p_j)/2 <= d`.
///
/// Ties count as edges.
pub fn build_threshold_graph<T: Scalar>(p: &VertexWeights<T>, d: ThresholdParam<T>) -> Graph {
    let p = p.as_slice();
    let d = d.value();
    let two = T::lit(2.0);
    let n = p.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| p[a].partial_cmp(&p[b]).expect("weights are not NaN").then(a.cmp(&b)));

    let mut g = Graph::empty(n);
    // Rounding is monotone, so the partners of each vertex form a prefix of
    // the ascending order; the prefix only shrinks as p grows.
    let mut reach = n;
    for (i, &a) in order.iter().enumerate() {
        while reach > 0 && (p[a] + p[order[reach - 1]]) / two > d {
            reach -= 1;
        }
        for &b in &order[..reach.min(i)] {
            g.link(a, b);
        }
    }
    g
}

/// Why a graph is not threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectReason {
    /// The row's neighbors are not the columns `1..=last_col` minus the diagonal.
    NotPrefix { last_col: usize, degree: usize },
    /// `last_col` increases from the previous row.
    StaircaseBroken { last_col: usize, previous: usize },
}

/// First row of the degree-ordered matrix that breaks the staircase.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rejection {
    /// 1-based position in the degree ordering.
    pub row: usize,
    pub vertex: usize,
    pub reason: RejectReason,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.reason {
            RejectReason::NotPrefix { last_col, degree } => write!(
                f,
                "row {} (vertex {}): degree {} but last column {}",
                self.row, self.vertex, degree, last_col
            ),
            RejectReason::StaircaseBroken { last_col, previous } => write!(
                f,
                "row {} (vertex {}): last column {} exceeds previous row's {}",
                self.row, self.vertex, last_col, previous
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Recognition {
    Threshold(ThresholdCertificate),
    NotThreshold(Rejection),
}

impl Recognition {
    pub fn is_threshold(&self) -> bool {
        matches!(self, Recognition::Threshold(_))
    }

    pub fn certificate(&self) -> Option<&ThresholdCertificate> {
        match self {
            Recognition::Threshold(c) => Some(c),
            Recognition::NotThreshold(_) => None,
        }
    }

    pub fn into_certificate(self) -> Option<ThresholdCertificate> {
        match self {
            Recognition::Threshold(c) => Some(c),
            Recognition::NotThreshold(_) => None,
        }
    }
}

/// Witness that a graph is threshold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdCertificate {
    ordering: Vec<usize>,
    degrees: Vec<usize>,
    last_col: Vec<usize>,
    t: usize,
    g: usize,
}

/// Vertices sorted by nonincreasing degree, ties by ascending id.
pub fn degree_ordering(graph: &Graph) -> Vec<usize> {
    let deg = graph.degree_sequence();
    let mut ordering: Vec<usize> = (1..=graph.n()).collect();
    ordering.sort_by(|&a, &b| deg[b - 1].cmp(&deg[a - 1]).then(a.cmp(&b)));
    ordering
}

/// `last_col` of every row of the adjacency matrix permuted by `ordering`.
///
/// Row `i` gets the largest column holding a one when its first off-diagonal
/// entry is a one, and 0 otherwise. The first off-diagonal entry is column 1,
/// except for row 1 where it is column 2.
pub fn compute_last_col(graph: &Graph, ordering: &[usize]) -> Vec<usize> {
    let n = graph.n();
    assert_eq!(ordering.len(), n, "ordering must list every vertex");
    let mut position = vec![0usize; n];
    for (pos, &v) in ordering.iter().enumerate() {
        position[v - 1] = pos;
    }
    ordering
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let first = usize::from(i == 0);
            if first >= n || !graph.adjacent0(v - 1, ordering[first] - 1) {
                0
            } else {
                graph
                    .row(v - 1)
                    .iter()
                    .map(|b| position[b] + 1)
                    .max()
                    .unwrap_or(0)
            }
        })
        .collect()
}

/// Accepts iff the degree-ordered adjacency matrix is a staircase.
pub fn recognize_threshold(graph: &Graph) -> Recognition {
    let n = graph.n();
    let ordering = degree_ordering(graph);
    let degrees: Vec<usize> = ordering.iter().map(|&v| graph.degree(v)).collect();
    let last_col = compute_last_col(graph, &ordering);

    for i in 0..n {
        let row = i + 1;
        let lc = last_col[i];
        // Every neighbor sits in a column <= lc, so equal counts mean the
        // neighborhood is the whole prefix.
        let prefix = lc - usize::from(row <= lc);
        if prefix != degrees[i] {
            return Recognition::NotThreshold(Rejection {
                row,
                vertex: ordering[i],
                reason: RejectReason::NotPrefix {
                    last_col: lc,
                    degree: degrees[i],
                },
            });
        }
        if i > 0 && lc > last_col[i - 1] {
            return Recognition::NotThreshold(Rejection {
                row,
                vertex: ordering[i],
                reason: RejectReason::StaircaseBroken {
                    last_col: lc,
                    previous: last_col[i - 1],
                },
            });
        }
    }

    let t = (0..n.saturating_sub(1))
        .find(|&j| !graph.adjacent0(ordering[j] - 1, ordering[j + 1] - 1))
        .map_or(n, |j| j + 1);
    let g = degrees.iter().filter(|&&d| d + 1 == n).count();

    Recognition::Threshold(ThresholdCertificate {
        ordering,
        degrees,
        last_col,
        t,
        g,
    })
}

impl ThresholdCertificate {
    pub fn n(&self) -> usize {
        self.ordering.len()
    }

    /// `ordering()[i]` is the vertex at position `i + 1`.
    pub fn ordering(&self) -> &[usize] {
        &self.ordering
    }

    /// Degrees along the ordering (nonincreasing).
    pub fn ordered_degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn last_col(&self) -> &[usize] {
        &self.last_col
    }

    /// `t = min{j : m_{j,j+1} = 0}`, or `n` when the graph is complete.
    /// Equals the clique number.
    pub fn clique_size(&self) -> usize {
        self.t
    }

    /// Number of vertices adjacent to every other vertex.
    pub fn universal_count(&self) -> usize {
        self.g
    }

    /// Positions `1..=t`: a maximum clique.
    pub fn max_clique(&self) -> Vec<usize> {
        self.ordering[..self.t].to_vec()
    }

    /// Positions `t..=n`: a maximum independent set of size `n - t + 1`.
    pub fn max_independent_set(&self) -> Vec<usize> {
        if self.t == 0 {
            return Vec::new();
        }
        self.ordering[self.t - 1..].to_vec()
    }

    /// Vertices of degree `n - 1`. They form a prefix of the ordering.
    pub fn universal_vertices(&self) -> Vec<usize> {
        self.ordering[..self.g].to_vec()
    }

    /// Interval model of the graph: position `j >= t` gets `(j-t, j-t+1)` and
    /// position `j < t` gets `(0, last_col(j) - t + 1)`.
    ///
    /// Interval `k` of the result belongs to vertex `k + 1`.
    pub fn derive_interval_model<T: Scalar>(&self) -> IntervalModel<T> {
        let n = self.n();
        let t = self.t;
        let mut intervals = vec![Interval::new(T::zero(), T::zero()); n];
        for (i, &v) in self.ordering.iter().enumerate() {
            let j = i + 1;
            intervals[v - 1] = if j >= t {
                let l = T::from_count(j - t);
                Interval::new(l, l + T::one())
            } else {
                Interval::new(T::zero(), T::from_count(self.last_col[i] + 1 - t))
            };
        }
        IntervalModel::new(intervals).expect("staircase intervals are well formed")
    }

    /// Whether positions `a < b` (1-based) are adjacent, read off the staircase.
    fn adjacent_positions(&self, a: usize, b: usize) -> bool {
        b <= self.last_col[a - 1]
    }

    /// Weights `p` and threshold `d` reproducing the graph under
    /// `(p_i + p_j)/2 <= d`.
    ///
    /// Positions `t..=n` (the independent set) get evenly spaced weights above
    /// one half. A clique position `j < t` gets one minus the weight of
    /// position `last_col(j)`, shifted down by half a gap, so it pairs with
    /// exactly the independent vertices up to `last_col(j)`. Weights are
    /// nondecreasing along the ordering. `d` sits midway between the largest
    /// adjacent pair mean and the smallest non-adjacent one.
    pub fn realize<T: Scalar>(&self) -> (VertexWeights<T>, ThresholdParam<T>) {
        let n = self.n();
        let t = self.t;
        let half = T::lit(0.5);
        let gap = half / T::from_count(n + 2 - t.min(n + 1));
        let indep = |j: usize| half + T::from_count(j + 1 - t) * gap;

        let mut by_pos = vec![T::zero(); n];
        for j in 1..=n {
            by_pos[j - 1] = if j >= t {
                indep(j)
            } else {
                T::one() - indep(self.last_col[j - 1]) - gap * half
            };
        }

        let two = T::lit(2.0);
        let mut lo = T::zero();
        let mut hi = T::one();
        for a in 1..=n {
            for b in a + 1..=n {
                let mean = (by_pos[a - 1] + by_pos[b - 1]) / two;
                if self.adjacent_positions(a, b) {
                    lo = lo.max(mean);
                } else {
                    hi = hi.min(mean);
                }
            }
        }
        let d = (lo + hi) / two;

        let mut p = vec![T::zero(); n];
        for (i, &v) in self.ordering.iter().enumerate() {
            p[v - 1] = by_pos[i];
        }
        (
            VertexWeights::new(p).expect("realized weights lie in [0, 1]"),
            ThresholdParam::new(d).expect("realized threshold lies in [0, 1]"),
        )
    }
}

pub fn max_clique(cert: &ThresholdCertificate) -> Vec<usize> {
    cert.max_clique()
}

pub fn max_independent_set(cert: &ThresholdCertificate) -> Vec<usize> {
    cert.max_independent_set()
}

pub fn universal_vertices(cert: &ThresholdCertificate) -> Vec<usize> {
    cert.universal_vertices()
}

pub fn derive_interval_model<T: Scalar>(cert: &ThresholdCertificate) -> IntervalModel<T> {
    cert.derive_interval_model()
}

pub fn realize_threshold_representation<T: Scalar>(
    cert: &ThresholdCertificate,
) -> (VertexWeights<T>, ThresholdParam<T>) {
    cert.realize()
}
