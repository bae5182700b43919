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
//! Subgraph containment (not induced) by backtracking.
//!
//! Pattern vertices are placed in a connectivity-first order: each next
//! vertex is the one with the most already-placed neighbours, ties broken by
//! degree. Candidates for a vertex are the common neighbours of the images of
//! its placed neighbours, restricted to host vertices of sufficient degree.

use crate::graph::{Bits, Graph};

struct Plan {
    order: Vec<usize>,
    /// For each position, the earlier positions adjacent to it.
    back: Vec<Vec<usize>>,
    need: Vec<usize>,
}

fn plan(h: &Graph, first: Option<usize>) -> Plan {
    let k = h.order();
    let deg = h.degrees();
    let mut placed = vec![false; k];
    let mut order = Vec::with_capacity(k);
    let mut links = vec![0usize; k];
    for step in 0..k {
        let next = match (step, first) {
            (0, Some(p)) => p,
            _ => (0..k)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| (links[v], deg[v], std::cmp::Reverse(v)))
                .expect("unplaced vertex remains"),
        };
        placed[next] = true;
        order.push(next);
        for w in h.neighbors(next) {
            links[w] += 1;
        }
    }
    let mut pos = vec![0; k];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let back = order
        .iter()
        .map(|&v| {
            let mut b: Vec<usize> = h.neighbors(v).map(|w| pos[w]).filter(|&j| j < pos[v]).collect();
            b.sort_unstable();
            b
        })
        .collect();
    let need = order.iter().map(|&v| deg[v]).collect();
    Plan { order, back, need }
}

struct Matcher<'a> {
    g: &'a Graph,
    plan: Plan,
    image: Vec<usize>,
    used: Vec<u64>,
    scratch: Vec<Vec<u64>>,
    gdeg: Vec<usize>,
    count_all: bool,
    count: u64,
}

impl Matcher<'_> {
    /// Returns true to stop the search.
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.plan.order.len() {
            self.count += 1;
            return !self.count_all;
        }
        let words = self.g.row_words();
        let n = self.g.order();
        {
            let cand = &mut self.scratch[depth];
            let back = &self.plan.back[depth];
            if back.is_empty() {
                for (i, w) in cand.iter_mut().enumerate() {
                    let lo = i * 64;
                    *w = if lo + 64 <= n {
                        u64::MAX
                    } else if lo < n {
                        (1u64 << (n - lo)) - 1
                    } else {
                        0
                    };
                }
            } else {
                cand.copy_from_slice(self.g.row(self.image[back[0]]));
                for &j in &back[1..] {
                    for (c, r) in cand.iter_mut().zip(self.g.row(self.image[j])) {
                        *c &= r;
                    }
                }
            }
            for (c, u) in cand.iter_mut().zip(&self.used) {
                *c &= !u;
            }
        }
        let need = self.plan.need[depth];
        let cand = std::mem::take(&mut self.scratch[depth]);
        let mut stop = false;
        for t in Bits::new(&cand) {
            if self.gdeg[t] < need {
                continue;
            }
            self.image[depth] = t;
            self.used[t / 64] |= 1 << (t % 64);
            stop = self.extend(depth + 1);
            self.used[t / 64] &= !(1 << (t % 64));
            if stop {
                break;
            }
        }
        self.scratch[depth] = cand;
        debug_assert_eq!(self.scratch[depth].len(), words);
        stop
    }
}

fn degree_dominated(g: &Graph, h: &Graph) -> bool {
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable_by(|a, b| b.cmp(a));
    dh.sort_unstable_by(|a, b| b.cmp(a));
    dh.iter().zip(&dg).all(|(a, b)| a <= b)
}

fn matcher<'a>(g: &'a Graph, h: &Graph, first: Option<usize>, count_all: bool) -> Matcher<'a> {
    let words = g.row_words();
    Matcher {
        g,
        plan: plan(h, first),
        image: vec![0; h.order()],
        used: vec![0; words],
        scratch: vec![vec![0; words]; h.order()],
        gdeg: g.degrees(),
        count_all,
        count: 0,
    }
}

fn feasible(g: &Graph, h: &Graph) -> bool {
    h.order() <= g.order() && h.size() <= g.size() && degree_dominated(g, h)
}

/// Whether `h` is isomorphic to a (not necessarily induced) subgraph of `g`.
pub fn contains_subgraph(g: &Graph, h: &Graph) -> bool {
    find_embedding(g, h).is_some()
}

/// An injective, edge-preserving map from `h` into `g`, indexed by the
/// vertices of `h`.
pub fn find_embedding(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if !feasible(g, h) {
        return None;
    }
    let mut m = matcher(g, h, None, false);
    m.extend(0);
    (m.count > 0).then(|| {
        let mut map = vec![0; h.order()];
        for (i, &p) in m.plan.order.iter().enumerate() {
            map[p] = m.image[i];
        }
        map
    })
}

/// Whether some copy of `h` in `g` uses vertex `v`.
pub fn contains_subgraph_through(g: &Graph, h: &Graph, v: usize) -> bool {
    if !feasible(g, h) {
        return false;
    }
    let reps: Vec<usize> = if h.is_small() && h.order() > 0 {
        let orbits = crate::canon::canonical_labeling(h).orbits();
        (0..h.order()).filter(|&p| orbits[p] == p).collect()
    } else {
        (0..h.order()).collect()
    };
    let dv = g.degree(v);
    for p in reps {
        if h.degree(p) > dv {
            continue;
        }
        let mut m = matcher(g, h, Some(p), false);
        // position 0 is pinned to v
        m.image[0] = v;
        m.used[v / 64] |= 1 << (v % 64);
        if m.extend(1) {
            return true;
        }
    }
    false
}

/// Number of injective edge-preserving maps from `h` into `g`.
pub fn count_embeddings(g: &Graph, h: &Graph) -> u64 {
    if !feasible(g, h) {
        return 0;
    }
    let mut m = matcher(g, h, None, true);
    m.extend(0);
    m.count
}
