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
//! Oracles shared by the integration tests. They are deliberately naive
//! and share no code with the library beyond the graph type.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use turan_reg::Graph;

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).unwrap()
}

/// Upper-triangle adjacency bits of `g` after relabelling by `perm`.
fn code_under(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.order();
    let mut code = 0u64;
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(perm[i], perm[j]) {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Smallest adjacency code over all vertex orders; at most 8 vertices.
pub fn brute_code(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n <= 8);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        best = best.min(code_under(g, &perm));
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

/// Canonical codes of all labelled graphs on `n` vertices.
pub fn brute_classes(n: usize) -> BTreeSet<u64> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
            brute_code(&graph(n, &edges))
        })
        .collect()
}

/// `k_t` by checking every `t`-subset.
pub fn naive_cliques(g: &Graph, t: usize) -> u64 {
    let n = g.order();
    let mut count = 0;
    let mut pick = Vec::with_capacity(t);
    fn rec(g: &Graph, start: usize, t: usize, pick: &mut Vec<usize>, count: &mut u64) {
        if pick.len() == t {
            *count += 1;
            return;
        }
        for v in start..g.order() {
            if pick.iter().all(|&u| g.has_edge(u, v)) {
                pick.push(v);
                rec(g, v + 1, t, pick, count);
                pick.pop();
            }
        }
    }
    let _ = n;
    rec(g, 0, t, &mut pick, &mut count);
    count
}

/// Cycles of length `len` by listing closed vertex sequences with distinct
/// vertices and dividing by the `2 len` rotations and reflections.
pub fn naive_cycles(g: &Graph, len: usize) -> u64 {
    fn rec(g: &Graph, path: &mut Vec<usize>, len: usize, total: &mut u64) {
        let last = *path.last().unwrap();
        if path.len() == len {
            if g.has_edge(last, path[0]) {
                *total += 1;
            }
            return;
        }
        for w in 0..g.order() {
            if g.has_edge(last, w) && !path.contains(&w) {
                path.push(w);
                rec(g, path, len, total);
                path.pop();
            }
        }
    }
    let mut total = 0;
    for s in 0..g.order() {
        rec(g, &mut vec![s], len, &mut total);
    }
    total / (2 * len as u64)
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    graph(n, &edges)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Figure graph with the most triangles for `(n, m, r) = (8, 18, 5)`: a
/// 4-cycle `0..4`, vertices 4, 5, 6 joined to all of it, the edge 4–5 and
/// a pendant vertex 7 on 6.
pub fn figure_k3_maximiser() -> Graph {
    let mut e = vec![(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (6, 7)];
    for x in 4..7 {
        for c in 0..4 {
            e.push((x, c));
        }
    }
    graph(8, &e)
}

/// Figure graph with the most cliques for `(8, 18, 5)`: `K5` on `0..5`, a
/// triangle 5–6–7, vertex 5 joined to 0, 1, 2 and vertex 7 joined to 3, 4.
pub fn figure_clique_maximiser() -> Graph {
    let mut e = vec![(5, 6), (6, 7), (5, 7), (5, 0), (5, 1), (5, 2), (7, 3), (7, 4)];
    for i in 0..5 {
        for j in i + 1..5 {
            e.push((i, j));
        }
    }
    graph(8, &e)
}

pub fn complete(n: usize) -> Graph {
    let e: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    graph(n, &e)
}

/// Integer partitions of `n` into parts of size at least `min`, non-increasing.
pub fn partitions(n: usize, min: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, max: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (min..=max.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, min, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, min, &mut Vec::new(), &mut out);
    out
}
