//! Open-interval models and their intersection graphs.

use thiserror::Error;

use crate::graph::Graph;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IntervalError {
    #[error("interval {index} has left end {left} after right end {right}")]
    Reversed { index: usize, left: f64, right: f64 },
}

/// Open interval `(left, right)`. `left == right` is the empty interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval<T> {
    pub left: T,
    pub right: T,
}

impl<T: Scalar> Interval<T> {
    pub fn new(left: T, right: T) -> Self {
        Self { left, right }
    }

    pub fn is_empty(&self) -> bool {
        self.left >= self.right
    }

    /// Open intervals meet iff each starts before the other ends.
    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_empty()
            && !other.is_empty()
            && self.left < other.right
            && other.left < self.right
    }
}

/// One open interval per vertex; interval `k` belongs to vertex `k + 1`.
///
/// Degenerate intervals (`left == right`) are allowed and intersect nothing.
/// The random interval generator produces them at density zero.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalModel<T> {
    intervals: Vec<Interval<T>>,
}

impl<T: Scalar> IntervalModel<T> {
    pub fn new(intervals: Vec<Interval<T>>) -> Result<Self, IntervalError> {
        for (index, iv) in intervals.iter().enumerate() {
            // NaN endpoints are incomparable and rejected too.
            if iv.left.partial_cmp(&iv.right).is_none_or(|o| o.is_gt()) {
                return Err(IntervalError::Reversed {
                    index,
                    left: iv.left.to_f64().unwrap_or(f64::NAN),
                    right: iv.right.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        Ok(Self { intervals })
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[Interval<T>] {
        &self.intervals
    }

    /// Interval of vertex `v` (1-based).
    pub fn interval(&self, v: usize) -> Interval<T> {
        self.intervals[v - 1]
    }

    /// Graph with an edge between every pair of intersecting intervals.
    ///
    /// Sweeps intervals by left end, so the cost is `O(n log n + |E|)`.
    pub fn intersection_graph(&self) -> Graph {
        let n = self.intervals.len();
        let mut order: Vec<usize> = (0..n)
            .filter(|&k| !self.intervals[k].is_empty())
            .collect();
        order.sort_by(|&a, &b| {
            self.intervals[a]
                .left
                .partial_cmp(&self.intervals[b].left)
                .expect("interval ends are not NaN")
                .then(a.cmp(&b))
        });
        let mut g = Graph::empty(n);
        for (pos, &a) in order.iter().enumerate() {
            let right = self.intervals[a].right;
            // Sorted by left end: later intervals meet `a` iff they start before it ends.
            for &b in &order[pos + 1..] {
                if self.intervals[b].left >= right {
                    break;
                }
                g.link(a, b);
            }
        }
        g
    }
}

pub fn intersection_graph<T: Scalar>(model: &IntervalModel<T>) -> Graph {
    model.intersection_graph()
}
