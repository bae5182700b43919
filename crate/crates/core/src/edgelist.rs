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
//! Plain-text edge lists.
//!
//! One edge `u v` per line. An optional first data line holding a single
//! integer gives the order, which is the only way to keep trailing isolated
//! vertices; without it the order is one more than the largest vertex.
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write;

use crate::graph::{Graph, GraphError, MAX_ORDER};

pub fn write(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{}", g.order()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse(text: &str) -> Result<Graph, GraphError> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_data = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |reason: &str| GraphError::EdgeList {
            line: idx + 1,
            reason: reason.to_string(),
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad("expected a non-negative integer"));
        match fields.as_slice() {
            [n] if !seen_data => {
                let n = num(n)?;
                if n > MAX_ORDER {
                    return Err(GraphError::UnsupportedOrder(n));
                }
                order = Some(n);
            }
            [u, v] => edges.push((num(u)?, num(v)?)),
            _ => return Err(bad("expected two vertex indices")),
        }
        seen_data = true;
    }
    let n = match order {
        Some(n) => n,
        None => edges.iter().map(|&(u, v)| u.max(v).saturating_add(1)).max().unwrap_or(0),
    };
    if n > MAX_ORDER {
        return Err(GraphError::UnsupportedOrder(n));
    }
    Graph::from_edges(n, &edges)
}
