//! Simple undirected graph stored as one adjacency bitset per vertex.
//!
//! Vertices are numbered `1..=n` in the public API. Rows are stored
//! 0-based internally.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 1..={n}")]
    OutOfRange { u: usize, v: usize, n: usize },
}

/// Fixed-size bitset over `0..len`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub(crate) fn new(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    #[inline]
    pub(crate) fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub(crate) fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub(crate) fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] &= !(1 << (i & 63));
    }

    pub(crate) fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn intersects(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .any(|(a, b)| a & b != 0)
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Immutable simple undirected graph on vertices `1..=n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<BitSet>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from 1-based edges. Repeated edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if u == 0 || v == 0 || u > n || v > n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            g.link(u - 1, v - 1);
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Self {
            rows: (0..n).map(|_| BitSet::new(n)).collect(),
            edge_count: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for a in 0..n {
            for b in a + 1..n {
                g.link(a, b);
            }
        }
        g
    }

    /// Path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for a in 1..n {
            g.link(a - 1, a);
        }
        g
    }

    /// Cycle `1 - 2 - ... - n - 1`, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.link(n - 1, 0);
        }
        g
    }

    /// Star with center 1 and leaves `2..=n`.
    pub fn star(n: usize) -> Self {
        let mut g = Self::empty(n);
        for leaf in 1..n {
            g.link(0, leaf);
        }
        g
    }

    /// Inserts the 0-based edge `{a, b}`; construction-time only.
    pub(crate) fn link(&mut self, a: usize, b: usize) {
        debug_assert!(a != b);
        if !self.rows[a].contains(b) {
            self.rows[a].insert(b);
            self.rows[b].insert(a);
            self.edge_count += 1;
        }
    }

    #[inline]
    pub(crate) fn row(&self, a: usize) -> &BitSet {
        &self.rows[a]
    }

    #[inline]
    pub(crate) fn adjacent0(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Whether `{u, v}` is an edge. Out-of-range or equal endpoints give `false`.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && (1..=self.n()).contains(&u) && (1..=self.n()).contains(&v) && {
            self.adjacent0(u - 1, v - 1)
        }
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v - 1].iter().map(|b| b + 1)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v - 1].count()
    }

    /// `deg(v)` for `v = 1..=n`.
    pub fn degree_sequence(&self) -> Vec<usize> {
        self.rows.iter().map(BitSet::count).collect()
    }

    /// All edges `(u, v)` with `u < v`, lexicographically ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (a, row) in self.rows.iter().enumerate() {
            out.extend(row.iter().filter(|&b| b > a).map(|b| (a + 1, b + 1)));
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Self::empty(n);
        for a in 0..n {
            for b in a + 1..n {
                if !self.adjacent0(a, b) {
                    g.link(a, b);
                }
            }
        }
        g
    }

    /// Subgraph induced by `vertices` (1-based). Vertex `vertices[k]` becomes
    /// vertex `k + 1` of the result.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut g = Self::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.adjacent0(u - 1, v - 1) {
                    g.link(i, j);
                }
            }
        }
        g
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..].iter().all(|&v| self.has_edge(u, v))
        })
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..].iter().all(|&v| !self.has_edge(u, v))
        })
    }

    pub fn density(&self) -> DensityReport {
        DensityReport::new(self.n(), self.edge_count)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

/// Edge count and density `2|E| / (n(n-1))` of a graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityReport {
    pub n: usize,
    pub edge_count: usize,
    pub density: f64,
}

impl DensityReport {
    pub fn new(n: usize, edge_count: usize) -> Self {
        let density = if n < 2 {
            0.0
        } else {
            2.0 * edge_count as f64 / (n as f64 * (n as f64 - 1.0))
        };
        Self {
            n,
            edge_count,
            density,
        }
    }
}

pub fn edge_density(g: &Graph) -> DensityReport {
    g.density()
}

pub fn complement(g: &Graph) -> Graph {
    g.complement()
}

pub fn degree_sequence(g: &Graph) -> Vec<usize> {
    g.degree_sequence()
}
