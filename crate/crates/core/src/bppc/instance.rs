use std::fmt;

use crate::graph::Graph;

use super::BppcError;

/// Items `1..=n` with integer weights, a bin capacity, and a conflict graph
/// whose edges forbid two items from sharing a bin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BppcInstance {
    graph: Graph,
    weights: Vec<u64>,
    capacity: u64,
}

impl BppcInstance {
    /// Rejects weight vectors of the wrong length and items heavier than the
    /// capacity (such an item fits no bin).
    pub fn new(graph: Graph, weights: Vec<u64>, capacity: u64) -> Result<Self, BppcError> {
        if weights.len() != graph.n() {
            return Err(BppcError::WeightCount {
                weights: weights.len(),
                vertices: graph.n(),
            });
        }
        if let Some(k) = weights.iter().position(|&w| w > capacity) {
            return Err(BppcError::Oversized {
                item: k + 1,
                weight: weights[k],
                capacity,
            });
        }
        Ok(Self {
            graph,
            weights,
            capacity,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// Weight of item `v` (1-based).
    pub fn weight(&self, v: usize) -> u64 {
        self.weights[v - 1]
    }

    pub fn capacity(&self) -> u64 {
        self.capacity
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().sum()
    }

    /// Instance restricted to `items` (1-based); item `items[k]` becomes `k + 1`.
    pub fn induced(&self, items: &[usize]) -> BppcInstance {
        BppcInstance {
            graph: self.graph.induced_subgraph(items),
            weights: items.iter().map(|&v| self.weights[v - 1]).collect(),
            capacity: self.capacity,
        }
    }
}

/// Assignment of items to bins. Bins hold 1-based item ids.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Packing {
    bins: Vec<Vec<usize>>,
}

impl Packing {
    pub fn new(bins: Vec<Vec<usize>>) -> Self {
        Self { bins }
    }

    pub fn bins(&self) -> &[Vec<usize>] {
        &self.bins
    }

    pub fn bin_count(&self) -> usize {
        self.bins.len()
    }

    pub fn into_bins(self) -> Vec<Vec<usize>> {
        self.bins
    }

    /// Sorts items inside each bin and orders bins by smallest item.
    pub fn normalized(mut self) -> Self {
        for b in &mut self.bins {
            b.sort_unstable();
        }
        self.bins.sort();
        self
    }
}

/// First constraint a packing breaks. Bin indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    UnknownItem { bin: usize, item: usize },
    Duplicate { bin: usize, item: usize },
    Missing { item: usize },
    EmptyBin { bin: usize },
    Capacity { bin: usize, load: u64, capacity: u64 },
    Conflict { bin: usize, a: usize, b: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::UnknownItem { bin, item } => write!(f, "bin {bin}: unknown item {item}"),
            Violation::Duplicate { bin, item } => {
                write!(f, "bin {bin}: item {item} already packed")
            }
            Violation::Missing { item } => write!(f, "item {item} not packed"),
            Violation::EmptyBin { bin } => write!(f, "bin {bin} is empty"),
            Violation::Capacity { bin, load, capacity } => {
                write!(f, "bin {bin}: load {load} exceeds capacity {capacity}")
            }
            Violation::Conflict { bin, a, b } => {
                write!(f, "bin {bin}: items {a} and {b} conflict")
            }
        }
    }
}

/// Checks that `packing` partitions the items into nonempty bins that respect
/// capacity and conflicts. Bins are checked in order; within a bin the
/// partition, capacity and conflict constraints are checked in that order.
pub fn verify_packing(inst: &BppcInstance, packing: &Packing) -> Result<(), Violation> {
    let n = inst.n();
    let mut seen = vec![false; n];
    for (k, items) in packing.bins().iter().enumerate() {
        let bin = k + 1;
        if items.is_empty() {
            return Err(Violation::EmptyBin { bin });
        }
        for &item in items {
            if item == 0 || item > n {
                return Err(Violation::UnknownItem { bin, item });
            }
            if std::mem::replace(&mut seen[item - 1], true) {
                return Err(Violation::Duplicate { bin, item });
            }
        }
        let load: u64 = items.iter().map(|&v| inst.weight(v)).sum();
        if load > inst.capacity() {
            return Err(Violation::Capacity {
                bin,
                load,
                capacity: inst.capacity(),
            });
        }
        for (i, &a) in items.iter().enumerate() {
            if let Some(&b) = items[i + 1..].iter().find(|&&b| inst.graph().has_edge(a, b)) {
                return Err(Violation::Conflict { bin, a, b });
            }
        }
    }
    match seen.iter().position(|&s| !s) {
        Some(k) => Err(Violation::Missing { item: k + 1 }),
        None => Ok(()),
    }
}
