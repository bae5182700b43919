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
//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualize each vertex of the first smallest
//! non-singleton cell, recurse. Leaves are compared by the relabelled
//! adjacency matrix and the largest one is canonical. Automorphisms found
//! at equivalent leaves prune the tree in two ways: orbit pruning of
//! children under the pointwise stabilizer of the current path, and a
//! backjump to the divergence point whenever a leaf matches the first leaf.
//! The generators collected that way generate the full automorphism group.

use std::fmt;

use crate::graph::{bits64, Graph, SMALL_ORDER};
use crate::graph6;

/// Canonical certificate of an isomorphism class: the graph6 string of the
/// canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalLabel(Vec<u8>);

impl CanonicalLabel {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    /// The canonical representative this label encodes.
    pub fn to_graph(&self) -> Graph {
        graph6::decode(self.as_str()).expect("labels hold valid graph6")
    }
}

impl fmt::Debug for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalLabel({})", self.as_str())
    }
}

impl fmt::Display for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of a canonical labeling run.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// `order[i]` is the vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    /// Generators of the automorphism group, as vertex maps.
    pub generators: Vec<Vec<usize>>,
}

impl Labeling {
    /// `position[v]` is the canonical position of vertex `v`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Orbit representative (smallest vertex) for every vertex.
    pub fn orbits(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.order.len());
        for g in &self.generators {
            for (v, &w) in g.iter().enumerate() {
                uf.union(v, w);
            }
        }
        (0..self.order.len()).map(|v| uf.min_of(v)).collect()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    // Keeps the smaller index as root so roots are orbit minima.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    fn min_of(&mut self, v: usize) -> usize {
        self.find(v)
    }
}

/// Refines an ordered partition (cells as vertex masks) until it is
/// equitable. Each pass splits every cell by neighbour counts into one
/// splitter cell, sub-cells ordered by increasing count; the first splitter
/// that changes anything restarts the pass. Only cell order and adjacency
/// counts are consulted, so the result commutes with relabelling.
fn refine(rows: &[u64], cells: &mut Vec<u64>) {
    let n = rows.len();
    let mut buckets = [0u64; SMALL_ORDER + 1];
    let mut next: Vec<u64> = Vec::with_capacity(n);
    'outer: loop {
        if cells.len() == n {
            return;
        }
        for s in 0..cells.len() {
            let w = cells[s];
            next.clear();
            let mut split = false;
            for &x in cells.iter() {
                if x & (x - 1) == 0 {
                    next.push(x);
                    continue;
                }
                let mut lo = usize::MAX;
                let mut hi = 0;
                for v in bits64(x) {
                    let c = (rows[v] & w).count_ones() as usize;
                    buckets[c] |= 1 << v;
                    lo = lo.min(c);
                    hi = hi.max(c);
                }
                if lo == hi {
                    buckets[lo] = 0;
                    next.push(x);
                    continue;
                }
                split = true;
                for b in &mut buckets[lo..=hi] {
                    if *b != 0 {
                        next.push(*b);
                        *b = 0;
                    }
                }
            }
            if split {
                std::mem::swap(cells, &mut next);
                continue 'outer;
            }
        }
        return;
    }
}

struct Leaf {
    order: Vec<u8>,
    cert: Vec<u64>,
}

struct Search<'a> {
    rows: &'a [u64],
    first: Option<Leaf>,
    best: Option<Leaf>,
    first_path: Vec<u8>,
    gens: Vec<Vec<u8>>,
    cert: Vec<u64>,
}

impl Search<'_> {
    fn certificate(&mut self, order: &[u8]) {
        let n = order.len();
        let mut pos = [0u8; SMALL_ORDER];
        for (i, &v) in order.iter().enumerate() {
            pos[v as usize] = i as u8;
        }
        self.cert.clear();
        for &v in order.iter().take(n) {
            let mut row = 0u64;
            for u in bits64(self.rows[v as usize]) {
                row |= 1 << pos[u];
            }
            self.cert.push(row);
        }
    }

    fn leaf(&mut self, cells: &[u64], path: &[u8]) -> Option<usize> {
        let order: Vec<u8> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
        self.certificate(&order);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                order,
                cert: self.cert.clone(),
            };
            self.best = Some(Leaf {
                order: leaf.order.clone(),
                cert: leaf.cert.clone(),
            });
            self.first = Some(leaf);
            self.first_path = path.to_vec();
            return None;
        };
        if self.cert == first.cert {
            let gen = map_between(&first.order, &order);
            self.gens.push(gen);
            let d = path
                .iter()
                .zip(&self.first_path)
                .take_while(|(a, b)| a == b)
                .count();
            return Some(d);
        }
        let best = self.best.as_mut().expect("best set with first");
        match self.cert.cmp(&best.cert) {
            std::cmp::Ordering::Greater => {
                best.order = order;
                best.cert.clone_from(&self.cert);
            }
            std::cmp::Ordering::Equal => {
                let gen = map_between(&best.order, &order);
                self.gens.push(gen);
            }
            std::cmp::Ordering::Less => {}
        }
        None
    }

    fn node(&mut self, cells: Vec<u64>, path: &mut Vec<u8>) -> Option<usize> {
        let n = self.rows.len();
        if cells.len() == n {
            return self.leaf(&cells, path);
        }
        let (t, &x) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .expect("non-discrete partition has a non-singleton cell");
        let level = path.len();
        let mut explored = 0u64;
        let mut orbit_cache: Option<(usize, Vec<u8>)> = None;
        for v in bits64(x) {
            if explored != 0 && !self.gens.is_empty() {
                let stale = orbit_cache.as_ref().is_none_or(|(k, _)| *k != self.gens.len());
                if stale {
                    orbit_cache = Some((self.gens.len(), self.stabilizer_orbits(path)));
                }
                let orb = &orbit_cache.as_ref().unwrap().1;
                if bits64(explored).any(|u| orb[u] == orb[v]) {
                    continue;
                }
            }
            explored |= 1 << v;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(1 << v);
            child.push(x & !(1 << v));
            child.extend_from_slice(&cells[t + 1..]);
            refine(self.rows, &mut child);
            path.push(v as u8);
            let r = self.node(child, path);
            path.pop();
            if let Some(d) = r {
                if d < level {
                    return Some(d);
                }
            }
        }
        None
    }

    /// Orbits of the group generated by the known automorphisms that fix
    /// every vertex of `path`.
    fn stabilizer_orbits(&self, path: &[u8]) -> Vec<u8> {
        let n = self.rows.len();
        let mut uf = UnionFind::new(n);
        for g in &self.gens {
            if path.iter().all(|&p| g[p as usize] == p) {
                for (v, &w) in g.iter().enumerate() {
                    uf.union(v, w as usize);
                }
            }
        }
        (0..n).map(|v| uf.find(v) as u8).collect()
    }
}

/// The automorphism sending `from[i]` to `to[i]` for every position.
fn map_between(from: &[u8], to: &[u8]) -> Vec<u8> {
    let mut g = vec![0u8; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        g[a as usize] = b;
    }
    g
}

/// Canonical labeling of a graph with at most 64 vertices.
///
/// # Panics
///
/// Panics if the graph has more than 64 vertices.
pub fn canonical_labeling(g: &Graph) -> Labeling {
    let n = g.order();
    assert!(n <= SMALL_ORDER, "canonical labeling supports at most {SMALL_ORDER} vertices");
    if n == 0 {
        return Labeling {
            order: vec![],
            generators: vec![],
        };
    }
    let rows = g.small_rows();
    let mut cells = vec![if n == 64 { u64::MAX } else { (1u64 << n) - 1 }];
    refine(rows, &mut cells);
    let mut search = Search {
        rows,
        first: None,
        best: None,
        first_path: Vec::new(),
        gens: Vec::new(),
        cert: Vec::with_capacity(n),
    };
    search.node(cells, &mut Vec::with_capacity(n));
    let best = search.best.expect("search reaches at least one leaf");
    Labeling {
        order: best.order.iter().map(|&v| v as usize).collect(),
        generators: search
            .gens
            .into_iter()
            .map(|g| g.into_iter().map(usize::from).collect())
            .collect(),
    }
}

/// Relabels `g` according to a labeling so vertex `order[i]` becomes `i`.
pub fn apply_labeling(g: &Graph, lab: &Labeling) -> Graph {
    g.relabel(&lab.positions())
}

pub fn canonical_form(g: &Graph) -> Graph {
    apply_labeling(g, &canonical_labeling(g))
}

pub fn canonical_label(g: &Graph) -> CanonicalLabel {
    CanonicalLabel(graph6::encode(&canonical_form(g)).into_bytes())
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    da == db && canonical_form(a) == canonical_form(b)
}
