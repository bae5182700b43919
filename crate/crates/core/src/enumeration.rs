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
//! Isomorph-free generation by canonical augmentation.
//!
//! The main generator adds one vertex at a time. A child `G + v` (with `v`
//! joined to a vertex set `S` of the parent) is kept when `v` lies in the
//! automorphism orbit of the child's canonical deletion vertex, and `S` is
//! the smallest set in its orbit under the parent's automorphism group.
//! Every class is then produced exactly once, from the class of its
//! canonical vertex-deleted subgraph, without a global table.
//!
//! Conditions that survive passing to induced subgraphs (maximum degree,
//! forbidden subgraphs, edge budget, degree deficits for regular targets)
//! are tested on every intermediate graph.
//!
//! A second generator adds one edge at a time on a fixed vertex set. It
//! exists to cross-check the first.

use std::collections::HashSet;
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_labeling, Labeling};
use crate::containment::contains_subgraph_through;
use crate::girth::odd_girth_below;
use crate::graph::{bits64, Graph};

/// Largest order accepted without `GenOptions::allow_large`.
pub const DEFAULT_MAX_ORDER: usize = 11;
/// Largest order accepted at all.
pub const HARD_MAX_ORDER: usize = 16;

/// Frontier size at which the tree is split into parallel subtrees.
const SPLIT_TARGET: usize = 256;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct GenFilter {
    pub n: usize,
    pub max_degree: Option<usize>,
    /// Exact number of edges.
    pub edge_count: Option<usize>,
    pub regular_k: Option<usize>,
    /// Keep connected graphs only.
    pub connected: bool,
    /// Graphs that must not occur as (not necessarily induced) subgraphs.
    #[serde(skip)]
    pub forbidden: Vec<Graph>,
}

impl GenFilter {
    pub fn order(n: usize) -> Self {
        GenFilter {
            n,
            ..GenFilter::default()
        }
    }

    pub fn with_max_degree(mut self, r: usize) -> Self {
        self.max_degree = Some(r);
        self
    }

    pub fn with_edges(mut self, m: usize) -> Self {
        self.edge_count = Some(m);
        self
    }

    pub fn with_regular(mut self, k: usize) -> Self {
        self.regular_k = Some(k);
        self
    }

    pub fn with_connected(mut self) -> Self {
        self.connected = true;
        self
    }

    pub fn forbidding(mut self, h: Graph) -> Self {
        self.forbidden.push(h);
        self
    }

    /// Reason why no graph can pass, when that is evident from the
    /// parameters alone.
    pub fn infeasibility(&self) -> Option<String> {
        let n = self.n;
        let r = self.degree_cap();
        if let Some(k) = self.regular_k {
            if n > 0 && k >= n {
                return Some(format!("degree {k} needs more than {n} vertices"));
            }
            if n * k % 2 == 1 {
                return Some(format!("n*k = {} is odd", n * k));
            }
            if let Some(m) = self.edge_count {
                if 2 * m != n * k {
                    return Some(format!("{m} edges cannot be {k}-regular on {n} vertices"));
                }
            }
        }
        if let Some(m) = self.edge_count {
            if 2 * m > n * r || m > n * n.saturating_sub(1) / 2 {
                return Some(format!("{m} edges exceed the degree bound"));
            }
        }
        if self.forbidden.iter().any(|h| h.order() == 0 || (h.size() == 0 && h.order() <= n)) {
            return Some("an edgeless forbidden graph excludes every graph of this order".into());
        }
        None
    }

    fn degree_cap(&self) -> usize {
        let mut r = self.n.saturating_sub(1);
        if let Some(d) = self.max_degree {
            r = r.min(d);
        }
        if let Some(k) = self.regular_k {
            r = r.min(k);
        }
        r
    }

    /// Whether a complete graph on `n` vertices satisfies the filter.
    pub fn accepts(&self, g: &Graph) -> bool {
        if g.order() != self.n || g.max_degree() > self.degree_cap() && g.order() > 0 {
            return false;
        }
        if self.edge_count.is_some_and(|m| g.size() != m) {
            return false;
        }
        if let Some(k) = self.regular_k {
            if g.order() > 0 && g.regular_degree() != Some(k) {
                return false;
            }
        }
        if self.connected && !is_connected(g) {
            return false;
        }
        !self.forbidden.iter().any(|h| crate::containment::contains_subgraph(g, h))
    }
}

pub fn is_connected(g: &Graph) -> bool {
    let n = g.order();
    if n <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenOptions {
    /// Lift the default order cap up to `HARD_MAX_ORDER`.
    pub allow_large: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct GenStats {
    /// Classes handed to the visitor.
    pub classes: u64,
    /// Intermediate graphs that were expanded.
    pub nodes: u64,
    /// Candidate extensions rejected by a filter condition.
    pub pruned: u64,
    /// Candidate extensions rejected as non-canonical.
    pub rejected: u64,
    /// Seconds of wall-clock time.
    pub wall_time: f64,
    /// Set when the filter admits no graph; nothing was generated.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub infeasible: Option<String>,
    /// Set when the visitor stopped the run.
    pub stopped_early: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerationError {
    #[error("order {n} exceeds the cap {cap}; set allow_large to go up to {HARD_MAX_ORDER}")]
    OrderCap { n: usize, cap: usize },
}

fn check_cap(n: usize, opts: GenOptions) -> Result<(), EnumerationError> {
    let cap = if opts.allow_large { HARD_MAX_ORDER } else { DEFAULT_MAX_ORDER };
    if n > cap {
        return Err(EnumerationError::OrderCap { n, cap });
    }
    Ok(())
}

#[derive(Default)]
struct Counters {
    nodes: AtomicU64,
    pruned: AtomicU64,
    rejected: AtomicU64,
    classes: AtomicU64,
    stop: AtomicBool,
}

enum Forbidden {
    /// `K3`: the new vertex's neighbourhood must be a stable set.
    Triangle,
    /// An odd cycle: graphs with no odd cycle up to its length are skipped.
    OddCycle(Graph),
    Other(Graph),
}

impl Forbidden {
    fn classify(h: &Graph) -> Forbidden {
        let n = h.order();
        if n == 3 && h.size() == 3 {
            Forbidden::Triangle
        } else if n % 2 == 1 && n >= 3 && h.regular_degree() == Some(2) && is_connected(h) {
            Forbidden::OddCycle(h.clone())
        } else {
            Forbidden::Other(h.clone())
        }
    }
}

/// Everything the recursion needs, shared by all subtrees.
struct Plan<'a> {
    n: usize,
    cap: usize,
    filter: &'a GenFilter,
    forbidden: Vec<Forbidden>,
    counters: Counters,
}

/// Result of one candidate extension.
enum Step {
    Pruned,
    Rejected,
    Child(Graph),
}

impl<'a> Plan<'a> {
    fn new(filter: &'a GenFilter) -> Self {
        Plan {
            n: filter.n,
            cap: filter.degree_cap(),
            filter,
            forbidden: filter.forbidden.iter().map(Forbidden::classify).collect(),
            counters: Counters::default(),
        }
    }

    /// Necessary conditions on an induced subgraph of a graph that passes
    /// the filter. `g` has just received vertex `g.order() - 1`.
    fn hereditary_ok(&self, g: &Graph) -> bool {
        let j = g.order();
        let left = self.n - j;
        let e = g.size();
        if let Some(m) = self.filter.edge_count {
            if e > m {
                return false;
            }
            let slack: usize = g.degrees().iter().map(|&d| self.cap - d).sum();
            let to_old = slack.min(left * self.cap);
            let among_new = (left * left.saturating_sub(1) / 2).min(left * self.cap / 2);
            if m - e > to_old + among_new {
                return false;
            }
        }
        if let Some(k) = self.filter.regular_k {
            let mut total = 0;
            for d in g.degrees() {
                if k - d > left {
                    return false;
                }
                total += k - d;
            }
            let need = left * k;
            if total > need || total + left * left.saturating_sub(1) < need || (need - total) % 2 == 1 {
                return false;
            }
        }
        let v = j - 1;
        for f in &self.forbidden {
            let hit = match f {
                Forbidden::Triangle => false, // checked on the neighbour set
                Forbidden::OddCycle(h) => {
                    odd_girth_below(g, h.order() + 1).is_some() && contains_subgraph_through(g, h, v)
                }
                Forbidden::Other(h) => contains_subgraph_through(g, h, v),
            };
            if hit {
                return false;
            }
        }
        true
    }

    fn final_ok(&self, g: &Graph) -> bool {
        if self.filter.edge_count.is_some_and(|m| g.size() != m) {
            return false;
        }
        if self.filter.regular_k.is_some_and(|k| g.regular_degree() != Some(k)) {
            return false;
        }
        !self.filter.connected || is_connected(g)
    }

    /// Children of `g` in canonical-augmentation order (by neighbour mask).
    fn children(&self, g: &Graph) -> Vec<Graph> {
        self.counters.nodes.fetch_add(1, Ordering::Relaxed);
        let j = g.order();
        let rows = g.small_rows();
        let degs: Vec<usize> = rows.iter().map(|r| r.count_ones() as usize).collect();
        let left_after = self.n - j - 1;
        let mut allowed = 0u64;
        let mut required = 0u64;
        for (v, &d) in degs.iter().enumerate() {
            if d < self.cap {
                allowed |= 1 << v;
            }
            if let Some(k) = self.filter.regular_k {
                if k - d > left_after {
                    required |= 1 << v;
                }
            }
        }
        if required & !allowed != 0 {
            return Vec::new();
        }
        let min_size = self.filter.regular_k.map_or(0, |k| k.saturating_sub(left_after));
        let triangle_free = self.forbidden.iter().any(|f| matches!(f, Forbidden::Triangle));
        let lab = canonical_labeling(g);
        let free = allowed & !required;
        let mut out = Vec::new();
        // submasks of `free` in increasing order, each joined with `required`
        let mut sub = 0u64;
        loop {
            let s = sub | required;
            let size = s.count_ones() as usize;
            match self.extend(g, &lab, s, size, min_size, triangle_free) {
                Step::Pruned => {
                    self.counters.pruned.fetch_add(1, Ordering::Relaxed);
                }
                Step::Rejected => {
                    self.counters.rejected.fetch_add(1, Ordering::Relaxed);
                }
                Step::Child(c) => out.push(c),
            }
            if sub == free {
                break;
            }
            sub = (sub.wrapping_sub(free)) & free;
        }
        out
    }

    fn extend(&self, g: &Graph, lab: &Labeling, s: u64, size: usize, min_size: usize, triangle_free: bool) -> Step {
        if size > self.cap || size < min_size {
            return Step::Pruned;
        }
        if let Some(m) = self.filter.edge_count {
            if g.size() + size > m {
                return Step::Pruned;
            }
        }
        if triangle_free && bits64(s).any(|v| g.small_rows()[v] & s != 0) {
            return Step::Pruned;
        }
        if !is_orbit_minimal(s, &lab.generators) {
            return Step::Rejected;
        }
        let child = g.with_vertex_mask(s);
        if !self.hereditary_ok(&child) {
            return Step::Pruned;
        }
        if is_canonical_extension(&child) {
            Step::Child(child)
        } else {
            Step::Rejected
        }
    }

    /// Depth-first walk below `g`, feeding completed graphs to `leaf`.
    fn walk(&self, g: Graph, leaf: &mut dyn FnMut(&Graph) -> ControlFlow<()>) -> ControlFlow<()> {
        if self.counters.stop.load(Ordering::Relaxed) {
            return ControlFlow::Break(());
        }
        if g.order() == self.n {
            return self.emit(&g, leaf);
        }
        for c in self.children(&g) {
            self.walk(c, leaf)?;
        }
        ControlFlow::Continue(())
    }

    fn emit(&self, g: &Graph, leaf: &mut dyn FnMut(&Graph) -> ControlFlow<()>) -> ControlFlow<()> {
        if !self.final_ok(g) {
            return ControlFlow::Continue(());
        }
        self.counters.classes.fetch_add(1, Ordering::Relaxed);
        let flow = leaf(g);
        if flow.is_break() {
            self.counters.stop.store(true, Ordering::Relaxed);
        }
        flow
    }

    fn root(&self) -> Option<Graph> {
        let g = Graph::empty(1);
        self.hereditary_ok(&g).then_some(g)
    }

    fn stats(&self, start: Instant, infeasible: Option<String>) -> GenStats {
        let c = &self.counters;
        GenStats {
            classes: c.classes.load(Ordering::Relaxed),
            nodes: c.nodes.load(Ordering::Relaxed),
            pruned: c.pruned.load(Ordering::Relaxed),
            rejected: c.rejected.load(Ordering::Relaxed),
            wall_time: start.elapsed().as_secs_f64(),
            infeasible,
            stopped_early: c.stop.load(Ordering::Relaxed),
        }
    }
}

/// Whether `s` is the smallest mask in its orbit under the group generated by `gens`.
fn is_orbit_minimal(s: u64, gens: &[Vec<usize>]) -> bool {
    if gens.is_empty() {
        return true;
    }
    let image = |p: &[usize], m: u64| bits64(m).fold(0u64, |acc, v| acc | 1 << p[v]);
    let mut seen = HashSet::from([s]);
    let mut stack = vec![s];
    while let Some(m) = stack.pop() {
        for p in gens {
            let t = image(p, m);
            if t < s {
                return false;
            }
            if seen.insert(t) {
                stack.push(t);
            }
        }
    }
    true
}

/// Invariant used to narrow down the canonical deletion vertex: degree,
/// then the sum of the neighbours' degrees.
fn vertex_invariant(rows: &[u64], v: usize) -> (u32, u32) {
    let r = rows[v];
    (r.count_ones(), bits64(r).map(|w| rows[w].count_ones()).sum())
}

/// Whether the last vertex lies in the orbit of the canonical deletion
/// vertex: among the vertices with the largest invariant, the one placed
/// last by the canonical labeling.
fn is_canonical_extension(g: &Graph) -> bool {
    let rows = g.small_rows();
    let last = g.order() - 1;
    let inv: Vec<_> = (0..=last).map(|v| vertex_invariant(rows, v)).collect();
    let best = *inv.iter().max().expect("non-empty");
    if inv[last] != best {
        return false;
    }
    if inv.iter().filter(|&&i| i == best).count() == 1 {
        return true;
    }
    let lab = canonical_labeling(g);
    let chosen = *lab.order.iter().rev().find(|&&v| inv[v] == best).expect("a maximiser exists");
    let orbits = lab.orbits();
    orbits[chosen] == orbits[last]
}

/// Calls `visitor` once per isomorphism class passing `filter`; calls may
/// come from several threads. Returning `Break` stops the run early.
pub fn enumerate_graphs<V>(filter: &GenFilter, opts: GenOptions, visitor: V) -> Result<GenStats, EnumerationError>
where
    V: Fn(&Graph) -> ControlFlow<()> + Sync,
{
    let (_, stats) = enumerate_fold(
        filter,
        opts,
        || (),
        |(), g| match visitor(g) {
            ControlFlow::Continue(()) => ControlFlow::Continue(()),
            ControlFlow::Break(()) => ControlFlow::Break(()),
        },
        |(), ()| (),
    )?;
    Ok(stats)
}

/// Deterministic parallel fold over all classes passing `filter`.
///
/// Each subtree of the generation tree is folded from `identity()` in
/// generation order and the partial results are merged left to right, so
/// the result does not depend on the thread count. `fold` may return
/// `Break` to stop generation everywhere; results gathered so far are
/// still merged.
pub fn enumerate_fold<A, I, F, M>(
    filter: &GenFilter,
    opts: GenOptions,
    identity: I,
    fold: F,
    merge: M,
) -> Result<(A, GenStats), EnumerationError>
where
    A: Send,
    I: Fn() -> A + Sync,
    F: Fn(&mut A, &Graph) -> ControlFlow<()> + Sync,
    M: Fn(A, A) -> A + Sync,
{
    check_cap(filter.n, opts)?;
    let start = Instant::now();
    let plan = Plan::new(filter);
    if let Some(why) = filter.infeasibility() {
        return Ok((identity(), plan.stats(start, Some(why))));
    }
    if filter.n == 0 {
        let mut acc = identity();
        let g = Graph::empty(0);
        let _ = plan.emit(&g, &mut |g| fold(&mut acc, g));
        return Ok((acc, plan.stats(start, None)));
    }
    let Some(root) = plan.root() else {
        return Ok((identity(), plan.stats(start, None)));
    };

    // breadth-first until the frontier is wide enough to split
    let mut frontier = vec![root];
    while frontier.len() < SPLIT_TARGET && frontier[0].order() < filter.n {
        frontier = frontier.iter().flat_map(|g| plan.children(g)).collect();
        if frontier.is_empty() {
            return Ok((identity(), plan.stats(start, None)));
        }
    }

    let parts: Vec<A> = frontier
        .into_par_iter()
        .map(|g| {
            let mut acc = identity();
            let _ = plan.walk(g, &mut |g| fold(&mut acc, g));
            acc
        })
        .collect();
    let acc = parts.into_iter().reduce(&merge).unwrap_or_else(&identity);
    Ok((acc, plan.stats(start, None)))
}

/// Calls `sink` on every class passing `filter`, in generation order and
/// from the calling thread. Subtrees are generated in parallel a batch at a
/// time, so memory stays bounded by the batch rather than the whole output.
pub fn enumerate_in_order<S>(filter: &GenFilter, opts: GenOptions, mut sink: S) -> Result<GenStats, EnumerationError>
where
    S: FnMut(&Graph) -> ControlFlow<()>,
{
    check_cap(filter.n, opts)?;
    let start = Instant::now();
    let plan = Plan::new(filter);
    if let Some(why) = filter.infeasibility() {
        return Ok(plan.stats(start, Some(why)));
    }
    if filter.n == 0 {
        let _ = plan.emit(&Graph::empty(0), &mut sink);
        return Ok(plan.stats(start, None));
    }
    let Some(root) = plan.root() else {
        return Ok(plan.stats(start, None));
    };
    let mut frontier = vec![root];
    while frontier.len() < SPLIT_TARGET && frontier[0].order() < filter.n {
        frontier = frontier.iter().flat_map(|g| plan.children(g)).collect();
        if frontier.is_empty() {
            return Ok(plan.stats(start, None));
        }
    }
    let batch = 4 * rayon::current_num_threads().max(1);
    for chunk in frontier.chunks(batch) {
        let found: Vec<Vec<Graph>> = chunk
            .par_iter()
            .map(|g| {
                let mut acc = Vec::new();
                let _ = plan.walk(g.clone(), &mut |g| {
                    acc.push(g.clone());
                    ControlFlow::Continue(())
                });
                acc
            })
            .collect();
        for g in found.iter().flatten() {
            if sink(g).is_break() {
                plan.counters.stop.store(true, Ordering::Relaxed);
                return Ok(plan.stats(start, None));
            }
        }
    }
    Ok(plan.stats(start, None))
}

/// All classes passing `filter`, in generation order.
pub fn enumerate_collect(filter: &GenFilter, opts: GenOptions) -> Result<(Vec<Graph>, GenStats), EnumerationError> {
    enumerate_fold(
        filter,
        opts,
        Vec::new,
        |acc, g| {
            acc.push(g.clone());
            ControlFlow::Continue(())
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )
}

/// `k`-regular graphs on `n` vertices, one per class.
pub fn enumerate_regular<V>(n: usize, k: usize, opts: GenOptions, visitor: V) -> Result<GenStats, EnumerationError>
where
    V: Fn(&Graph) -> ControlFlow<()> + Sync,
{
    enumerate_graphs(&GenFilter::order(n).with_regular(k), opts, visitor)
}

/// Orbit of the edge `e` under the group generated by `gens`.
fn edge_orbit(e: (usize, usize), gens: &[Vec<usize>]) -> HashSet<(usize, usize)> {
    let mut seen = HashSet::from([e]);
    let mut stack = vec![e];
    while let Some((u, v)) = stack.pop() {
        for p in gens {
            let (a, b) = (p[u], p[v]);
            let t = (a.min(b), a.max(b));
            if seen.insert(t) {
                stack.push(t);
            }
        }
    }
    seen
}

/// Generation by edge addition on `filter.n` fixed vertices. A child
/// `G + e` is kept when `e` is the smallest non-edge in its orbit under
/// `Aut(G)` and lies in the orbit of the child's canonical edge (the edge
/// whose ends come last in the canonical labeling). Sequential; meant as an
/// independent check on [`enumerate_collect`].
pub fn enumerate_by_edges(filter: &GenFilter, opts: GenOptions) -> Result<(Vec<Graph>, GenStats), EnumerationError> {
    check_cap(filter.n, opts)?;
    let start = Instant::now();
    let n = filter.n;
    let cap = filter.degree_cap();
    let max_edges = filter.edge_count.unwrap_or(n * n.saturating_sub(1) / 2);
    let mut stats = GenStats::default();
    if let Some(why) = filter.infeasibility() {
        stats.infeasible = Some(why);
        return Ok((Vec::new(), stats));
    }
    let mut out = Vec::new();
    let mut level = vec![Graph::empty(n)];
    loop {
        let mut next = Vec::new();
        for g in &level {
            if filter.accepts(g) {
                out.push(g.clone());
            }
            if g.size() == max_edges {
                continue;
            }
            stats.nodes += 1;
            let lab = canonical_labeling(g);
            for u in 0..n {
                for v in u + 1..n {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    if g.degree(u) >= cap || g.degree(v) >= cap {
                        stats.pruned += 1;
                        continue;
                    }
                    let orbit = edge_orbit((u, v), &lab.generators);
                    if orbit.iter().any(|&f| f < (u, v)) {
                        stats.rejected += 1;
                        continue;
                    }
                    let mut c = g.clone();
                    c.add_edge(u, v);
                    if filter.forbidden.iter().any(|h| crate::containment::contains_subgraph(&c, h)) {
                        stats.pruned += 1;
                        continue;
                    }
                    let clab = canonical_labeling(&c);
                    let pos = clab.positions();
                    let canon_edge = c
                        .edges()
                        .max_by_key(|&(a, b)| (pos[a].max(pos[b]), pos[a].min(pos[b])))
                        .expect("child has an edge");
                    if edge_orbit(canon_edge, &clab.generators).contains(&(u, v)) {
                        next.push(c);
                    } else {
                        stats.rejected += 1;
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
    }
    stats.classes = out.len() as u64;
    stats.wall_time = start.elapsed().as_secs_f64();
    Ok((out, stats))
}

/// Wall time of a stats record as a `Duration`.
pub fn wall_duration(stats: &GenStats) -> Duration {
    Duration::from_secs_f64(stats.wall_time)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_label;
    use crate::census::count_cliques;
    use crate::named;

    fn count(filter: &GenFilter) -> u64 {
        enumerate_collect(filter, GenOptions::default()).unwrap().1.classes
    }

    fn labels(gs: &[Graph]) -> HashSet<crate::CanonicalLabel> {
        gs.iter().map(canonical_label).collect()
    }

    #[test]
    fn small_orders() {
        let expected = [1, 1, 2, 4, 11, 34, 156, 1044];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(count(&GenFilter::order(n)), e, "n = {n}");
        }
    }

    #[test]
    fn no_duplicates_and_orders_agree() {
        for n in 1..=7 {
            let f = GenFilter::order(n);
            let (a, _) = enumerate_collect(&f, GenOptions::default()).unwrap();
            let (b, _) = enumerate_by_edges(&f, GenOptions::default()).unwrap();
            let la = labels(&a);
            assert_eq!(la.len(), a.len());
            assert_eq!(la, labels(&b));
        }
    }

    #[test]
    fn pushdown_matches_post_filter() {
        let all = enumerate_collect(&GenFilter::order(7), GenOptions::default()).unwrap().0;
        let filters = [
            GenFilter::order(7).with_max_degree(3),
            GenFilter::order(7).with_edges(9),
            GenFilter::order(7).with_edges(9).with_max_degree(4),
            GenFilter::order(7).with_regular(4),
            GenFilter::order(7).with_connected(),
            GenFilter::order(7).forbidding(named::complete(3)),
            GenFilter::order(7).forbidding(named::cycle(5)).with_max_degree(4),
            GenFilter::order(7).forbidding(named::complete_bipartite(2, 2)),
        ];
        for f in filters {
            let (got, _) = enumerate_collect(&f, GenOptions::default()).unwrap();
            let expect: Vec<Graph> = all.iter().filter(|g| f.accepts(g)).cloned().collect();
            assert_eq!(labels(&got), labels(&expect), "{f:?}");
            assert_eq!(got.len(), expect.len());
        }
    }

    #[test]
    fn regular_examples() {
        let (gs, _) = enumerate_collect(&GenFilter::order(5).with_regular(2), GenOptions::default()).unwrap();
        assert_eq!(gs.len(), 1);
        assert_eq!(canonical_label(&gs[0]), canonical_label(&named::cycle(5)));
        let stats = enumerate_regular(7, 3, GenOptions::default(), |_| ControlFlow::Continue(())).unwrap();
        assert_eq!(stats.classes, 0);
        assert!(stats.infeasible.is_some());
        // cubic graphs on 8 and 10 vertices, 4-regular on 9; all and connected
        let c = |n, k| enumerate_regular(n, k, GenOptions::default(), |_| ControlFlow::Continue(())).unwrap().classes;
        let cc = |n, k| count(&GenFilter::order(n).with_regular(k).with_connected());
        assert_eq!((c(8, 3), cc(8, 3)), (6, 5));
        assert_eq!((c(10, 3), cc(10, 3)), (21, 19));
        assert_eq!((c(9, 4), cc(9, 4)), (16, 16));
    }

    #[test]
    fn min_triangles_on_nine_vertices() {
        let (gs, _) = enumerate_collect(&GenFilter::order(9).with_regular(4), GenOptions::default()).unwrap();
        let min = gs.iter().map(|g| count_cliques(g, 3)).min();
        assert_eq!(min, Some(2));
    }

    #[test]
    fn deterministic_order() {
        let f = GenFilter::order(7).with_max_degree(4);
        let a = enumerate_collect(&f, GenOptions::default()).unwrap().0;
        let b = enumerate_collect(&f, GenOptions::default()).unwrap().0;
        assert_eq!(a, b);
    }

    #[test]
    fn in_order_matches_collect() {
        let f = GenFilter::order(7).with_max_degree(4);
        let a = enumerate_collect(&f, GenOptions::default()).unwrap().0;
        let mut b = Vec::new();
        let stats = enumerate_in_order(&f, GenOptions::default(), |g| {
            b.push(g.clone());
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(stats.classes as usize, b.len());
    }

    #[test]
    fn early_stop() {
        let seen = AtomicU64::new(0);
        let stats = enumerate_graphs(&GenFilter::order(8), GenOptions::default(), |_| {
            seen.fetch_add(1, Ordering::Relaxed);
            ControlFlow::Break(())
        })
        .unwrap();
        assert!(stats.stopped_early);
        assert!(seen.load(Ordering::Relaxed) < 12346);
    }

    #[test]
    fn order_cap() {
        assert!(matches!(
            enumerate_collect(&GenFilter::order(12), GenOptions::default()),
            Err(EnumerationError::OrderCap { n: 12, cap: 11 })
        ));
    }

    #[test]
    fn orbit_minimal_masks() {
        // the swap (0 1) identifies {0} and {1}
        let gens = vec![vec![1, 0, 2]];
        assert!(is_orbit_minimal(0b001, &gens));
        assert!(!is_orbit_minimal(0b010, &gens));
        assert!(is_orbit_minimal(0b100, &gens));
    }
}
