// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Dense undirected simple graphs stored as bit rows.
//!
//! Every vertex owns `words` consecutive `u64` words of the row buffer. Graphs
//! with at most 64 vertices use a single word per row, which is the layout the
//! search kernels (canonical labeling, enumeration, containment) are tuned for.
//! Larger graphs, up to roughly ten thousand vertices, keep the same contracts
//! and are used to validate the big constructions.

use std::fmt;

use thiserror::Error;

/// Largest order handled by the single-word kernels.
pub const SMALL_ORDER: usize = 64;

/// Upper bound accepted by the constructors and decoders.
pub const MAX_ORDER: usize = 1 << 14;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph order {0} is not supported")]
    UnsupportedOrder(usize),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("malformed edge list at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
}

/// An undirected simple graph on vertices `0..n`.
///
/// Values are immutable once built through the public constructors; the
/// mutating helpers are crate-internal and used only while building.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "graph order {n} exceeds {MAX_ORDER}");
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    /// Builds a graph with exactly the given edges. Repeated edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::UnsupportedOrder(n));
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        let twice: usize = self.rows.iter().map(|w| w.count_ones() as usize).sum();
        twice / 2
    }

    /// Words per adjacency row.
    #[inline]
    pub fn row_words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn is_small(&self) -> bool {
        self.n <= SMALL_ORDER
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Adjacency row of `v` as a single word. Only meaningful for small graphs.
    #[inline]
    pub fn row_word(&self, v: usize) -> u64 {
        debug_assert!(self.is_small());
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// The common degree when the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let d = self.degree(0);
        (0..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn neighbors(&self, v: usize) -> Bits<'_> {
        Bits::new(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Number of common neighbours of `u` and `v`.
    #[inline]
    pub fn common_count(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for (i, w) in self.row(u).iter().enumerate() {
                g.rows[u * self.words + i] = !w;
            }
            g.clear_tail(u);
            g.rows[u * self.words + u / 64] &= !(1u64 << (u % 64));
        }
        g
    }

    /// Graph with vertex `v` relabelled to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in the given order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Same graph with one extra vertex adjacent to the vertices in `nbrs`.
    /// Small graphs only; `nbrs` is a bit mask over the existing vertices.
    pub(crate) fn with_vertex_mask(&self, nbrs: u64) -> Graph {
        debug_assert!(self.n < SMALL_ORDER);
        let n = self.n + 1;
        let mut rows = Vec::with_capacity(n);
        for v in 0..self.n {
            rows.push(self.rows[v] | ((nbrs >> v & 1) << self.n));
        }
        rows.push(nbrs);
        Graph { n, words: 1, rows }
    }

    pub(crate) fn small_rows(&self) -> &[u64] {
        debug_assert!(self.is_small());
        &self.rows
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] &= !(1 << (v % 64));
        self.rows[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    fn clear_tail(&mut self, u: usize) {
        let rem = self.n % 64;
        if rem != 0 {
            self.rows[u * self.words + self.words - 1] &= (1u64 << rem) - 1;
        }
    }

    /// Checks the structural invariants: symmetric rows, empty diagonal, no
    /// bits beyond the order.
    pub fn is_well_formed(&self) -> bool {
        for u in 0..self.n {
            if self.has_edge(u, u) {
                return false;
            }
            let rem = self.n % 64;
            if rem != 0 && self.row(u)[self.words - 1] >> rem != 0 {
                return false;
            }
            if self.neighbors(u).any(|v| !self.has_edge(v, u)) {
                return false;
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Iterator over the set bits of a multi-word row.
pub struct Bits<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> Bits<'a> {
    pub fn new(words: &'a [u64]) -> Self {
        Bits {
            words,
            idx: 0,
            cur: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Bits<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + b);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

/// Iterates the set bits of a single word.
#[inline]
pub(crate) fn bits64(mut w: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if w == 0 {
            None
        } else {
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(b)
        }
    })
}
