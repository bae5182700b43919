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
//! Small named graphs used as patterns and test fixtures.

use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// The cycle `0-1-…-(n-1)-0`. Requires `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    let mut g = Graph::empty(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    g
}

/// The path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    g
}

/// The star `K_{1,s}` with centre 0.
pub fn star(s: usize) -> Graph {
    let mut g = Graph::empty(s + 1);
    for i in 1..=s {
        g.add_edge(0, i);
    }
    g
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    g
}

/// The (8, 18, 5) graph maximising the number of triangles: a 4-cycle
/// `a b c d` whose vertices are all joined to `e f g`, the edge `e f`,
/// and a pendant vertex `h` on `g`.
pub fn triangle_maximiser_8_18() -> Graph {
    let (a, b, c, d, e, f, g, h) = (0, 1, 2, 3, 4, 5, 6, 7);
    let mut edges = vec![(a, b), (b, c), (c, d), (d, a), (e, f), (g, h)];
    for x in [e, f, g] {
        for y in [a, b, c, d] {
            edges.push((x, y));
        }
    }
    Graph::from_edges(8, &edges).expect("fixed edge list")
}

/// The (8, 18, 5) graph maximising the total clique count: a `K5` on
/// `0..5`, a triangle `5 6 7`, with `5` joined to `0 1 2` and `7` joined
/// to `3 4`.
pub fn clique_maximiser_8_18() -> Graph {
    let mut edges = vec![(5, 6), (6, 7), (5, 7), (5, 0), (5, 1), (5, 2), (7, 3), (7, 4)];
    for u in 0..5 {
        for v in u + 1..5 {
            edges.push((u, v));
        }
    }
    Graph::from_edges(8, &edges).expect("fixed edge list")
}
