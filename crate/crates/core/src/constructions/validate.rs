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
//! Certificate checking. Every claimed property is recomputed from the graph
//! and the certificate alone; the generic odd-girth search is only used as a
//! cross-check on small orders.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Construction, HostEmbedding, OddGirth};
use crate::girth;
use crate::graph::Graph;

/// Orders up to which the breadth-first odd-girth search is run as well.
pub const GENERIC_GIRTH_LIMIT: usize = 300;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub property: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub name: String,
    pub triangles: u64,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, property: &str, ok: bool, detail: String) {
        self.0.push(Check {
            property: property.to_string(),
            ok,
            detail,
        });
    }
}

/// Triangle count as a third of the common-neighbour counts over all edges.
pub fn triangle_count(g: &Graph) -> u64 {
    let twice: u64 = (0..g.order())
        .into_par_iter()
        .map(|u| g.neighbors(u).filter(|&w| w > u).map(|w| g.common_count(u, w) as u64).sum::<u64>())
        .sum();
    twice / 3
}

fn edges_inside(g: &Graph, set: &[usize]) -> u64 {
    set.iter()
        .enumerate()
        .map(|(i, &u)| set[i + 1..].iter().filter(|&&w| g.has_edge(u, w)).count() as u64)
        .sum()
}

fn check_cycle_map(g: &Graph, map: &[usize], m: usize) -> Result<(), String> {
    if map.len() != g.order() {
        return Err(format!("map has {} entries for {} vertices", map.len(), g.order()));
    }
    if let Some(v) = map.iter().position(|&p| p >= m) {
        return Err(format!("vertex {v} maps outside C{m}"));
    }
    for (u, w) in g.edges() {
        let d = (map[u] + m - map[w]) % m;
        if d != 1 && d != m - 1 {
            return Err(format!("edge ({u}, {w}) is not mapped to an edge of C{m}"));
        }
    }
    Ok(())
}

fn check_cycle(g: &Graph, cycle: &[usize], m: usize) -> Result<(), String> {
    if cycle.len() != m {
        return Err(format!("cycle has length {}, expected {m}", cycle.len()));
    }
    let mut seen = std::collections::HashSet::new();
    if !cycle.iter().all(|&v| v < g.order() && seen.insert(v)) {
        return Err("cycle repeats or leaves the vertex set".into());
    }
    for i in 0..m {
        let (u, w) = (cycle[i], cycle[(i + 1) % m]);
        if !g.has_edge(u, w) {
            return Err(format!("cycle uses non-edge ({u}, {w})"));
        }
    }
    Ok(())
}

fn check_host(g: &Graph, host: &HostEmbedding) -> Result<(), String> {
    let big = 2 * host.a;
    let total = big + host.b;
    if host.map.len() != g.order() {
        return Err("embedding does not cover every vertex".into());
    }
    let mut used = vec![false; total];
    for &t in &host.map {
        if t >= total || std::mem::replace(&mut used[t], true) {
            return Err(format!("embedding is not injective into {total} host vertices"));
        }
    }
    for (u, w) in g.edges() {
        let (s, t) = (host.map[u].min(host.map[w]), host.map[u].max(host.map[w]));
        let ok = (s < big && t >= big) || (t < big && s / 2 == t / 2);
        if !ok {
            return Err(format!("edge ({u}, {w}) has no image in the host"));
        }
    }
    Ok(())
}

fn outcome(r: Result<(), String>) -> (bool, String) {
    match r {
        Ok(()) => (true, String::new()),
        Err(e) => (false, e),
    }
}

/// Checks every expected property against the graph and its certificate.
pub fn validate(c: &Construction) -> ValidationReport {
    let g = &c.graph;
    let exp = &c.recipe.expected;
    let cert = &c.certificate;
    let n = g.order();
    let mut out = Checks(Vec::new());

    out.push("order", n == exp.order, format!("{n} vertices"));
    out.push("well-formed", g.is_well_formed(), String::new());
    if let Some(k) = exp.degree {
        let (lo, hi) = (g.min_degree(), g.max_degree());
        out.push("regular", lo == k && hi == k, format!("degrees in [{lo}, {hi}], expected {k}"));
    }
    if let Some(k) = exp.max_degree {
        out.push("max-degree", g.max_degree() <= k, format!("{} <= {k}", g.max_degree()));
    }
    if let Some(labels) = &cert.partition {
        let r = (|| {
            if labels.len() != n {
                return Err("partition does not cover the vertex set".to_string());
            }
            if let Some((u, w)) = g.edges().find(|&(u, w)| labels[u] == labels[w]) {
                return Err(format!("edge ({u}, {w}) inside part {}", labels[u]));
            }
            let mut sizes = vec![0; labels.iter().max().map_or(0, |m| m + 1)];
            labels.iter().for_each(|&p| sizes[p] += 1);
            if !exp.part_sizes.is_empty() && sizes != exp.part_sizes {
                return Err(format!("part sizes {sizes:?}, expected {:?}", exp.part_sizes));
            }
            Ok(())
        })();
        let (ok, detail) = outcome(r);
        out.push("partition", ok, detail);
    }

    let triangles = triangle_count(g);
    if let Some(t) = exp.triangles {
        out.push("triangles", triangles == t, format!("{triangles} triangles, expected {t}"));
    }

    match exp.odd_girth {
        Some(OddGirth::Exactly(m)) => {
            let lower = match &cert.cycle_map {
                Some(map) => check_cycle_map(g, map, m),
                None if n <= GENERIC_GIRTH_LIMIT => match girth::odd_girth_below(g, m) {
                    Some(s) => Err(format!("odd cycle of length {s}")),
                    None => Ok(()),
                },
                None => Err("no homomorphism certificate for a large order".into()),
            };
            let (ok, detail) = outcome(lower);
            out.push("odd-girth-lower", ok, detail);
            let upper = match &cert.odd_cycle {
                Some(cycle) => check_cycle(g, cycle, m),
                None => Err("no odd cycle given".into()),
            };
            let (ok, detail) = outcome(upper);
            out.push("odd-girth-attained", ok, detail);
            if n <= GENERIC_GIRTH_LIMIT {
                let og = girth::odd_girth(g);
                out.push("odd-girth-search", og == Some(m), format!("search gives {og:?}"));
            }
        }
        Some(OddGirth::Bipartite) => {
            out.push("bipartite", girth::is_bipartite(g), String::new());
        }
        None => {}
    }

    if let Some(v) = cert.apex {
        let ok = v < n;
        out.push("apex-in-range", ok, format!("apex {v}"));
        if ok {
            let rest = g.remove_vertex(v);
            out.push("apex-removal-bipartite", girth::is_bipartite(&rest), String::new());
            let nbrs: Vec<usize> = g.neighbors(v).collect();
            let inside = edges_inside(g, &nbrs);
            out.push(
                "triangles-through-apex",
                inside == triangles,
                format!("{inside} edges in the apex neighbourhood, {triangles} triangles"),
            );
        }
    }

    if let Some(host) = &cert.host {
        let (ok, detail) = outcome(check_host(g, host));
        out.push("host-embedding", ok, detail);
    }

    ValidationReport {
        name: c.recipe.name.clone(),
        triangles,
        checks: out.0,
    }
}
