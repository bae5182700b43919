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
//! Small-order data for open conjectures and questions. A probe reports
//! what the exhaustive search finds next to what the statement predicts;
//! it never treats the prediction as true.

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::canon::is_isomorphic;
use crate::census;
use crate::formulas::{conj55_bound, gls_critical_range, in_supersaturation_window};
use crate::girth::{is_bipartite, odd_girth};
use crate::graph::Graph;
use crate::named;
use crate::search::{self, HSpec, SearchError, SearchOptions};

#[derive(Debug, Clone, PartialEq)]
pub enum Probe {
    /// Extremal graphs in the critical regime split off `a - 1` copies of `K_{r+1}`.
    GlsCritical { r: usize, n: RangeInclusive<usize> },
    /// Minimum triangle count of regular graphs in the supersaturation window.
    Conj55 { n: RangeInclusive<usize> },
    /// Regular Turán number of `h` against `2⌊n/(g+2)⌋`, `g` the odd girth.
    OddGirthQuestion { h: Graph, n: RangeInclusive<usize> },
    /// Copies of `C_len` per vertex under maximum degree `r`, against `K_{r,r}`
    /// (even length) or `K_{r+1}` (odd length).
    CycleQuestion { len: usize, r: RangeInclusive<usize>, n_max: usize },
}

impl Probe {
    pub fn name(&self) -> &'static str {
        match self {
            Probe::GlsCritical { .. } => "gls-critical",
            Probe::Conj55 { .. } => "conj55",
            Probe::OddGirthQuestion { .. } => "odd-girth-question",
            Probe::CycleQuestion { .. } => "cycle-question",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeRow {
    pub instance: String,
    pub predicted: String,
    pub observed: String,
    /// `None` when the statement makes no claim at this size.
    pub consistent: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeReport {
    pub probe: String,
    pub rows: Vec<ProbeRow>,
    pub discrepancies: usize,
}

/// `C5` with a pendant edge, the default graph for the odd-girth question.
pub fn pentagon_with_pendant() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]).expect("valid edges")
}

/// Whether `h` is a subgraph of `K^=_{2|h|,|h|}`: some stable set leaves a
/// graph of maximum degree at most one.
pub fn fits_kbe(h: &Graph) -> bool {
    let n = h.order();
    assert!(n <= 24, "subset scan supports at most 24 vertices");
    (0u32..1 << n).any(|y| {
        let inside = |v: usize| y >> v & 1 == 1;
        h.edges().all(|(u, v)| !(inside(u) && inside(v)))
            && (0..n).filter(|&v| !inside(v)).all(|v| h.neighbors(v).filter(|&w| !inside(w)).count() <= 1)
    })
}

/// Hypotheses of the odd-girth question: chromatic number 3, a vertex
/// whose removal leaves a bipartite graph, and `h ⊆ K^=_{2|h|,|h|}`.
pub fn odd_girth_question_applies(h: &Graph) -> bool {
    !is_bipartite(h) && (0..h.order()).any(|v| is_bipartite(&h.remove_vertex(v))) && fits_kbe(h)
}

fn components_isomorphic_to(g: &Graph, target: &Graph) -> usize {
    let n = g.order();
    let mut comp = vec![usize::MAX; n];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = groups.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut i = 0;
        while i < members.len() {
            let u = members[i];
            for w in g.neighbors(u) {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                }
            }
            i += 1;
        }
        groups.push(members);
    }
    groups.iter().filter(|m| is_isomorphic(&g.induced(m), target)).count()
}

fn push(rows: &mut Vec<ProbeRow>, instance: String, predicted: String, observed: String, consistent: Option<bool>) {
    rows.push(ProbeRow {
        instance,
        predicted,
        observed,
        consistent,
    });
}

fn show(v: Option<u64>) -> String {
    v.map_or_else(|| "none".to_string(), |v| v.to_string())
}

pub fn probe_conjecture(probe: &Probe, opts: &SearchOptions) -> Result<ProbeReport, SearchError> {
    let mut rows = Vec::new();
    let every = SearchOptions {
        witness_cap: usize::MAX,
        all_witnesses: true,
        ..*opts
    };
    match probe {
        Probe::GlsCritical { r, n } => {
            for n in n.clone() {
                let (lo, hi) = gls_critical_range(n, *r);
                let a = n / (r + 1);
                let cliques = a.saturating_sub(1);
                for m in lo + 1..=hi {
                    for (what, res) in [
                        ("k3", search::max_kt(n, m, *r, 3, &every)?),
                        ("k", search::max_k_total(n, m, *r, &every)?),
                    ] {
                        let ws = res.witness_graphs();
                        let split = ws
                            .iter()
                            .filter(|g| components_isomorphic_to(g, &named::complete(r + 1)) >= cliques)
                            .count();
                        push(
                            &mut rows,
                            format!("max {what} (n,m,r)=({n},{m},{r})"),
                            format!("every extremal graph contains {cliques} components K{}", r + 1),
                            format!("value {}, {split} of {} extremal classes split", show(res.objective), ws.len()),
                            Some(split == ws.len()),
                        );
                    }
                }
            }
        }
        Probe::Conj55 { n } => {
            for n in n.clone() {
                for k in (0..n).filter(|&k| in_supersaturation_window(n, k)) {
                    let bound = conj55_bound(n, k).expect("window checked");
                    let res = search::min_triangles_regular(n, k, opts)?;
                    let consistent = res.objective.map(|v| v as i64 >= bound);
                    push(
                        &mut rows,
                        format!("(n,k)=({n},{k})"),
                        format!("k3 >= {bound}"),
                        format!("min k3 = {}", show(res.objective)),
                        consistent,
                    );
                }
            }
        }
        Probe::OddGirthQuestion { h, n } => {
            let applies = odd_girth_question_applies(h);
            let g = odd_girth(h);
            for n in n.clone() {
                let res = search::exr_exact(n, &HSpec::Graph(h.clone()), opts)?;
                let predicted = match g {
                    Some(g) => format!("2*floor(n/{}) = {} up to o(n)", g + 2, 2 * (n / (g + 2))),
                    None => "no prediction for bipartite H".to_string(),
                };
                let note = if applies { "" } else { " (hypotheses fail)" };
                push(
                    &mut rows,
                    format!("n={n}{note}"),
                    predicted,
                    format!("ex_r = {}", show(res.objective)),
                    None,
                );
            }
        }
        Probe::CycleQuestion { len, r, n_max } => {
            for r in r.clone() {
                let candidate = if len % 2 == 0 {
                    named::complete_bipartite(r, r)
                } else {
                    named::complete(r + 1)
                };
                let pattern = named::cycle(*len);
                let counter = search::PatternCounter::for_pattern(&pattern);
                let ratio = |c: u64, n: usize| c as f64 / n as f64;
                let cand = ratio(counter.count(&candidate), candidate.order());
                let mut best = (0.0f64, 0usize);
                for n in (*len).max(r + 1)..=*n_max {
                    let res = search::max_copies_free(n, &pattern, r, opts)?;
                    let v = ratio(res.objective.unwrap_or(0), n);
                    if v > best.0 {
                        best = (v, n);
                    }
                }
                push(
                    &mut rows,
                    format!("C{len}, r={r}, n<={n_max}"),
                    format!("{} per vertex from {}", cand, if len % 2 == 0 { "K_{r,r}" } else { "K_{r+1}" }),
                    format!("best {:.4} per vertex at n={}", best.0, best.1),
                    Some(best.0 <= cand + 1e-9),
                );
            }
        }
    }
    let discrepancies = rows.iter().filter(|r| r.consistent == Some(false)).count();
    Ok(ProbeReport {
        probe: probe.name().to_string(),
        rows,
        discrepancies,
    })
}

/// Triangle count of each witness complement, sorted descending.
pub fn complement_triangle_counts(ws: &[Graph]) -> Vec<u64> {
    let mut v: Vec<u64> = ws.iter().map(|g| census::count_cliques(&g.complement(), 3)).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}
