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
//! Exact extremal searches over the generated classes.

use std::ops::ControlFlow;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::canon::{canonical_label, CanonicalLabel};
use crate::census;
use crate::enumeration::{enumerate_fold, is_connected, EnumerationError, GenFilter, GenOptions, GenStats};
use crate::formulas::FamilySpec;
use crate::graph::Graph;

pub const DEFAULT_WITNESS_CAP: usize = 16;

/// A forbidden graph, named or explicit.
#[derive(Debug, Clone, PartialEq)]
pub enum HSpec {
    Family(FamilySpec),
    Graph(Graph),
}

impl HSpec {
    pub fn members(&self) -> Vec<Graph> {
        match self {
            HSpec::Family(f) => f.members(),
            HSpec::Graph(h) => vec![h.clone()],
        }
    }

    pub fn name(&self) -> String {
        match self {
            HSpec::Family(f) => f.name(),
            HSpec::Graph(h) => crate::graph6::encode(h),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("forbidden graph must have at least one edge")]
    EdgelessForbidden,
    #[error("{0}")]
    Family(#[from] crate::formulas::FormulaError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Most witnesses kept per result; class counts stay exact.
    pub witness_cap: usize,
    /// For `exr_exact`: enumerate every class at the extremal degree instead
    /// of stopping at the first witness.
    pub all_witnesses: bool,
    pub gen: GenOptions,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            witness_cap: DEFAULT_WITNESS_CAP,
            all_witnesses: false,
            gen: GenOptions::default(),
        }
    }
}

fn labels_as_strings<S: Serializer>(ws: &[CanonicalLabel], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(ws.iter().map(|w| w.as_str()))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchResult {
    /// `None` when no graph satisfies the constraints.
    pub objective: Option<u64>,
    /// Canonical graph6 strings of extremal classes, sorted.
    #[serde(serialize_with = "labels_as_strings")]
    pub witnesses: Vec<CanonicalLabel>,
    /// Number of extremal classes; `None` when the search stopped at the
    /// first witness.
    pub classes: Option<u64>,
    pub stats: GenStats,
    /// True when the value comes from a complete enumeration.
    pub exact: bool,
}

impl SearchResult {
    pub fn witness_graphs(&self) -> Vec<Graph> {
        self.witnesses.iter().map(CanonicalLabel::to_graph).collect()
    }
}

/// Running optimum: value, number of classes attaining it and the first
/// few of them in generation order.
#[derive(Debug, Clone, Default)]
struct Best {
    value: Option<u64>,
    classes: u64,
    witnesses: Vec<Graph>,
}

impl Best {
    fn offer(&mut self, value: u64, g: &Graph, cap: usize, maximise: bool) {
        let better = match self.value {
            None => true,
            Some(v) => (maximise && value > v) || (!maximise && value < v),
        };
        if better {
            self.value = Some(value);
            self.classes = 0;
            self.witnesses.clear();
        }
        if self.value == Some(value) {
            self.classes += 1;
            if self.witnesses.len() < cap {
                self.witnesses.push(g.clone());
            }
        }
    }

    fn merge(mut self, other: Best, cap: usize, maximise: bool) -> Best {
        let Some(ov) = other.value else { return self };
        let take_other = match self.value {
            None => true,
            Some(v) => (maximise && ov > v) || (!maximise && ov < v),
        };
        if take_other {
            return other;
        }
        if self.value == Some(ov) {
            self.classes += other.classes;
            let room = cap - self.witnesses.len().min(cap);
            self.witnesses.extend(other.witnesses.into_iter().take(room));
        }
        self
    }

    fn into_result(self, stats: GenStats, classes_known: bool) -> SearchResult {
        let mut witnesses: Vec<CanonicalLabel> = self.witnesses.iter().map(canonical_label).collect();
        witnesses.sort();
        SearchResult {
            objective: self.value,
            witnesses,
            classes: classes_known.then_some(self.classes),
            stats,
            exact: true,
        }
    }
}

/// Optimises `objective` over all classes passing `filter`.
fn optimise<O>(filter: &GenFilter, opts: &SearchOptions, maximise: bool, objective: O) -> Result<SearchResult, SearchError>
where
    O: Fn(&Graph) -> u64 + Sync,
{
    let cap = opts.witness_cap;
    let (best, stats) = enumerate_fold(
        filter,
        opts.gen,
        Best::default,
        |acc, g| {
            acc.offer(objective(g), g, cap, maximise);
            ControlFlow::Continue(())
        },
        |a, b| a.merge(b, cap, maximise),
    )?;
    Ok(best.into_result(stats, true))
}

fn add_stats(total: &mut GenStats, s: &GenStats) {
    total.classes += s.classes;
    total.nodes += s.nodes;
    total.pruned += s.pruned;
    total.rejected += s.rejected;
    total.wall_time += s.wall_time;
}

/// Largest `k` such that some `k`-regular graph on `n` vertices avoids
/// every member of `h`. Degrees are tried from `n - 1` downwards.
pub fn exr_exact(n: usize, h: &HSpec, opts: &SearchOptions) -> Result<SearchResult, SearchError> {
    if let HSpec::Family(f) = h {
        f.validate()?;
    }
    let members = h.members();
    if members.iter().any(|g| g.size() == 0) {
        return Err(SearchError::EdgelessForbidden);
    }
    let mut total = GenStats::default();
    for k in (0..n.max(1)).rev() {
        if n * k % 2 == 1 {
            continue;
        }
        let mut filter = GenFilter::order(n).with_regular(k);
        filter.forbidden = members.clone();
        let cap = opts.witness_cap;
        let first_only = !opts.all_witnesses;
        let (best, stats) = enumerate_fold(
            &filter,
            opts.gen,
            Best::default,
            |acc, g| {
                acc.offer(k as u64, g, cap, true);
                if first_only {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            },
            |a, b| a.merge(b, cap, true),
        )?;
        add_stats(&mut total, &stats);
        total.stopped_early |= stats.stopped_early;
        if best.value.is_some() {
            return Ok(best.into_result(total, !first_only));
        }
    }
    // n = 0: the empty graph
    Ok(SearchResult {
        objective: Some(0),
        witnesses: vec![canonical_label(&Graph::empty(n))],
        classes: Some(1),
        stats: total,
        exact: true,
    })
}

/// Fewest triangles over `k`-regular graphs on `n` vertices.
pub fn min_triangles_regular(n: usize, k: usize, opts: &SearchOptions) -> Result<SearchResult, SearchError> {
    let filter = GenFilter::order(n).with_regular(k);
    optimise(&filter, opts, false, |g| census::count_cliques(g, 3))
}

/// Most `t`-cliques over graphs with `n` vertices, `m` edges and maximum degree at most `r`.
pub fn max_kt(n: usize, m: usize, r: usize, t: usize, opts: &SearchOptions) -> Result<SearchResult, SearchError> {
    let filter = GenFilter::order(n).with_edges(m).with_max_degree(r);
    optimise(&filter, opts, true, |g| census::count_cliques(g, t))
}

/// Most cliques on at least three vertices, same constraints as [`max_kt`].
pub fn max_k_total(n: usize, m: usize, r: usize, opts: &SearchOptions) -> Result<SearchResult, SearchError> {
    let filter = GenFilter::order(n).with_edges(m).with_max_degree(r);
    optimise(&filter, opts, true, census::total_cliques)
}

/// How copies of a pattern are counted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternCounter {
    Cycle(usize),
    Star(usize),
    Clique(usize),
    Biclique(usize, usize),
    Generic(Graph),
}

impl PatternCounter {
    /// Picks a specialised counter when the pattern is a cycle, star,
    /// clique or complete bipartite graph with no isolated vertices.
    pub fn for_pattern(p: &Graph) -> PatternCounter {
        let n = p.order();
        let m = p.size();
        let degs = p.degrees();
        if n >= 2 && m == n * (n - 1) / 2 {
            return PatternCounter::Clique(n);
        }
        if n >= 3
            && census::CYCLE_LENGTHS.contains(&n)
            && p.regular_degree() == Some(2)
            && is_connected(p)
        {
            return PatternCounter::Cycle(n);
        }
        if n >= 2 && degs.iter().all(|&d| d >= 1) {
            if let Some(sides) = crate::girth::bipartition(p) {
                let a = sides.iter().filter(|&&c| c == 0).count();
                let b = n - a;
                if m == a * b {
                    return if a.min(b) == 1 {
                        PatternCounter::Star(a.max(b))
                    } else {
                        PatternCounter::Biclique(a, b)
                    };
                }
            }
        }
        PatternCounter::Generic(p.clone())
    }

    pub fn count(&self, g: &Graph) -> u64 {
        match self {
            PatternCounter::Cycle(l) => census::count_cycles(g, *l).expect("length checked"),
            PatternCounter::Star(s) => census::count_stars(g, *s),
            PatternCounter::Clique(t) => census::count_cliques(g, *t),
            PatternCounter::Biclique(a, b) => census::count_complete_bipartite(g, *a, *b),
            PatternCounter::Generic(p) => census::count_copies(g, p),
        }
    }
}

/// Most copies of `pattern` over graphs on `n` vertices with maximum degree
/// at most `r`, that is, without `K_{1,r+1}`.
pub fn max_copies_free(n: usize, pattern: &Graph, r: usize, opts: &SearchOptions) -> Result<SearchResult, SearchError> {
    let counter = PatternCounter::for_pattern(pattern);
    let filter = GenFilter::order(n).with_max_degree(r);
    optimise(&filter, opts, true, |g| counter.count(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn opts() -> SearchOptions {
        SearchOptions::default()
    }

    #[test]
    fn exr_triangle_examples() {
        let k3 = HSpec::Family(FamilySpec::Triangle);
        assert_eq!(exr_exact(7, &k3, &opts()).unwrap().objective, Some(2));
        assert_eq!(exr_exact(10, &k3, &opts()).unwrap().objective, Some(5));
        let all = SearchOptions {
            all_witnesses: true,
            ..opts()
        };
        let r = exr_exact(11, &k3, &all).unwrap();
        assert_eq!(r.objective, Some(4));
        let circ = crate::constructions::circulant_small_odd(11).unwrap().graph;
        assert!(r.witnesses.contains(&canonical_label(&circ)));
        assert!(r.classes.unwrap() >= r.witnesses.len() as u64);
    }

    #[test]
    fn exr_first_witness_leaves_class_count_open() {
        let r = exr_exact(8, &HSpec::Family(FamilySpec::Triangle), &opts()).unwrap();
        assert_eq!(r.objective, Some(4));
        assert_eq!(r.classes, None);
        assert_eq!(r.witnesses.len(), 1);
    }

    #[test]
    fn exr_explicit_graph() {
        let r = exr_exact(6, &HSpec::Graph(named::complete(4)), &opts()).unwrap();
        assert_eq!(r.objective, Some(4)); // K_{2,2,2}
        assert_eq!(exr_exact(6, &HSpec::Graph(Graph::empty(2)), &opts()), Err(SearchError::EdgelessForbidden));
    }

    #[test]
    fn min_triangles_examples() {
        let r = min_triangles_regular(9, 4, &opts()).unwrap();
        assert_eq!(r.objective, Some(2));
        assert_eq!(r.classes, Some(1));
        let r = min_triangles_regular(5, 2, &opts()).unwrap();
        assert_eq!(r.objective, Some(0));
        let r = min_triangles_regular(7, 3, &opts()).unwrap();
        assert_eq!(r.objective, None);
        assert!(r.stats.infeasible.is_some());
    }

    #[test]
    fn witnesses_attain_the_objective() {
        let r = max_kt(7, 12, 4, 3, &opts()).unwrap();
        assert_eq!(r.objective, Some(8));
        for g in r.witness_graphs() {
            assert_eq!(census::count_cliques(&g, 3), 8);
            assert_eq!(g.size(), 12);
            assert!(g.max_degree() <= 4);
        }
        let mut ws = r.witnesses.clone();
        ws.dedup();
        assert_eq!(ws.len(), r.witnesses.len());
    }

    #[test]
    fn infeasible_size() {
        let r = max_kt(6, 13, 4, 3, &opts()).unwrap();
        assert_eq!(r.objective, None);
        assert!(r.stats.infeasible.is_some());
    }

    #[test]
    fn pattern_dispatch_agrees_with_generic_count() {
        let patterns = [
            named::cycle(5),
            named::cycle(4),
            named::star(2),
            named::star(3),
            named::complete(3),
            named::complete_bipartite(2, 3),
            named::path(4),
        ];
        let hosts = [named::petersen(), named::complete(6), named::complete_bipartite(3, 4)];
        for p in &patterns {
            let c = PatternCounter::for_pattern(p);
            for g in &hosts {
                assert_eq!(c.count(g), census::count_copies(g, p), "{c:?}");
            }
        }
        assert_eq!(PatternCounter::for_pattern(&named::star(2)), PatternCounter::Star(2));
        assert_eq!(PatternCounter::for_pattern(&named::cycle(4)), PatternCounter::Cycle(4));
        assert!(matches!(PatternCounter::for_pattern(&named::path(4)), PatternCounter::Generic(_)));
    }

    #[test]
    fn cherries_maximised_by_regular_graphs() {
        let r = max_copies_free(6, &named::star(2), 3, &opts()).unwrap();
        assert_eq!(r.objective, Some(18));
        assert!(r.witness_graphs().iter().all(|g| g.regular_degree() == Some(3)));
        assert_eq!(r.classes, Some(2));
    }
}
