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
//! Odd girth and bipartiteness by breadth-first layer parity.

use std::collections::VecDeque;

use crate::graph::Graph;

/// A proper 2-colouring, if one exists. Colours are 0 and 1; every
/// component's smallest vertex gets colour 0.
pub fn bipartition(g: &Graph) -> Option<Vec<u8>> {
    let n = g.order();
    let mut colour = vec![u8::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if colour[w] == u8::MAX {
                    colour[w] = colour[u] ^ 1;
                    queue.push_back(w);
                } else if colour[w] == colour[u] {
                    return None;
                }
            }
        }
    }
    Some(colour)
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

/// Length of a shortest odd cycle, or `None` when the graph is bipartite.
///
/// A breadth-first search from `s` that meets an edge inside layer `d`
/// closes an odd walk of length `2d + 1` through `s`, and a shortest odd
/// cycle is found exactly from any of its own vertices.
pub fn odd_girth(g: &Graph) -> Option<usize> {
    odd_girth_below(g, usize::MAX)
}

/// Odd girth if it is smaller than `limit`, else `None`. Searching stops at
/// depth `limit / 2`, which makes short-cycle tests cheap.
pub fn odd_girth_below(g: &Graph, limit: usize) -> Option<usize> {
    let n = g.order();
    let mut best = limit;
    let mut dist = vec![u32::MAX; n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        if g.degree(s) < 2 {
            continue;
        }
        dist.iter_mut().for_each(|d| *d = u32::MAX);
        dist[s] = 0;
        queue.clear();
        queue.push_back(s);
        'bfs: while let Some(u) = queue.pop_front() {
            let du = dist[u] as usize;
            // an edge inside layer du closes a walk of length 2du+1
            if 2 * du + 1 >= best {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == u32::MAX {
                    dist[w] = du as u32 + 1;
                    queue.push_back(w);
                } else if dist[w] as usize == du {
                    best = 2 * du + 1;
                    break 'bfs;
                }
            }
        }
        if best == 3 {
            break;
        }
    }
    (best < limit).then_some(best)
}
