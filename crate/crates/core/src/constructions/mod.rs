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
//! Deterministic builders for the extremal and equality graphs. Each
//! builder returns the graph together with a recipe of claimed properties
//! and a certificate that the validator checks without trusting the builder.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formulas::{self, in_supersaturation_window};
use crate::graph::{Graph, MAX_ORDER};

mod validate;

pub use validate::{validate, Check, ValidationReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("order {0} must be odd")]
    EvenOrder(usize),
    #[error("n = {n} = {m}*{x} + {y} needs x > y")]
    Decomposition { n: usize, m: usize, x: usize, y: usize },
    #[error("{0}")]
    OutOfRange(String),
    #[error("(n, k) = ({n}, {k}) outside the window: n odd, k even, 2*floor(n/5) < k <= 2*floor(n/4)")]
    Window { n: usize, k: usize },
    #[error("degree {0} must be even and at least 4")]
    Degree(usize),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("stars cover {covered} vertices but n = {n}")]
    ForestOrder { n: usize, covered: usize },
    #[error("star sizes must be at least 1")]
    EmptyStar,
    #[error("{name}: {property} failed ({detail})")]
    Validation { name: String, property: String, detail: String },
}

/// Odd girth claim: exactly the given value, or none (bipartite).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OddGirth {
    Exactly(usize),
    Bipartite,
}

/// Machine-checkable properties claimed for a construction.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub odd_girth: Option<OddGirth>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triangles: Option<u64>,
    /// Sizes of the stable sets listed in the partition certificate.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub part_sizes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionRecipe {
    pub name: String,
    pub params: BTreeMap<String, usize>,
    pub expected: Expected,
}

/// Embedding into `K^=_{2a,b}`: the host has vertices `0..2a` on the side
/// carrying the matching `{2i, 2i+1}` and `2a..2a+b` on the other side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HostEmbedding {
    pub a: usize,
    pub b: usize,
    pub map: Vec<usize>,
}

/// Evidence for the claimed properties.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    /// Part index of every vertex; each part must be a stable set.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<usize>>,
    /// Position on an odd cycle `C_M` for every vertex, a homomorphism.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle_map: Option<Vec<usize>>,
    /// An explicit odd cycle of the claimed odd girth.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub odd_cycle: Option<Vec<usize>>,
    /// Vertex whose removal leaves a bipartite graph and which lies on every triangle.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub apex: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub host: Option<HostEmbedding>,
}

fn check_order(n: usize) -> Result<(), ConstructionError> {
    if n > MAX_ORDER {
        return Err(ConstructionError::OutOfRange(format!("order {n} exceeds {MAX_ORDER}")));
    }
    Ok(())
}

fn blank(n: usize) -> Result<Graph, ConstructionError> {
    check_order(n)?;
    Ok(Graph::empty(n))
}

#[derive(Debug, Clone)]
pub struct Construction {
    pub graph: Graph,
    pub recipe: ConstructionRecipe,
    pub certificate: Certificate,
}

impl Construction {
    /// Runs the validator and fails on the first violated property.
    pub fn certify(self) -> Result<Self, ConstructionError> {
        let report = validate(&self);
        match report.checks.iter().find(|c| !c.ok) {
            Some(c) => Err(ConstructionError::Validation {
                name: self.recipe.name.clone(),
                property: c.property.clone(),
                detail: c.detail.clone(),
            }),
            None => Ok(self),
        }
    }
}

fn params(pairs: &[(&str, usize)]) -> BTreeMap<String, usize> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

/// Consecutive blocks of the given sizes; returns the first vertex of each.
fn block_starts(sizes: &[usize]) -> Vec<usize> {
    sizes
        .iter()
        .scan(0, |acc, &s| {
            let start = *acc;
            *acc += s;
            Some(start)
        })
        .collect()
}

fn part_labels(sizes: &[usize]) -> Vec<usize> {
    sizes.iter().enumerate().flat_map(|(i, &s)| std::iter::repeat_n(i, s)).collect()
}

/// Blow-up of the cycle `C_M` with the given part sizes, consecutive parts
/// completely joined, and `removed` rotational perfect matchings taken out
/// between the first and the last part (which must then have equal sizes).
fn cycle_blowup(sizes: &[usize], removed: usize) -> (Graph, Vec<usize>) {
    let m = sizes.len();
    let n = sizes.iter().sum();
    let starts = block_starts(sizes);
    let mut g = Graph::empty(n);
    for i in 0..m {
        let j = (i + 1) % m;
        for u in 0..sizes[i] {
            for w in 0..sizes[j] {
                if j == 0 {
                    // pair S_M (i) and S_1 (j): skip the removed shifts
                    let s = sizes[0];
                    if (w + s - u % s) % s < removed {
                        continue;
                    }
                }
                g.add_edge(starts[i] + u, starts[j] + w);
            }
        }
    }
    // a vertex of S_1 and a vertex of S_M that stay adjacent close the cycle
    let cycle = (0..m)
        .map(|i| if i == m - 1 { starts[i] + (sizes[i] - removed) % sizes[i] } else { starts[i] })
        .collect();
    (g, cycle)
}

/// Blow-up of `C5` with parts `(x+y, x, x-y, x, x+y)` for `n = 5x + y`.
pub fn pentagon_blowup(n: usize) -> Result<Construction, ConstructionError> {
    let c = odd_girth_blowup(n, 2)?;
    Ok(Construction {
        recipe: ConstructionRecipe {
            name: "pentagon-blowup".into(),
            ..c.recipe
        },
        ..c
    })
}

/// Part sizes around the cycle `C_{2ℓ+1}` for `n = (2ℓ+1)x + y`. The sizes
/// `x+y` and `x-y` alternate between the parts that are not of size `x`,
/// so that consecutive pairs sum to `2x` except across the closing pair.
fn odd_girth_part_sizes(ell: usize, x: usize, y: usize) -> Vec<usize> {
    (1..=2 * ell + 1)
        .map(|i| {
            if ell % 2 == 1 {
                match i % 4 {
                    1 | 3 => x,
                    2 => x + y,
                    _ => x - y,
                }
            } else {
                match i % 4 {
                    0 | 2 => x,
                    1 => x + y,
                    _ => x - y,
                }
            }
        })
        .collect()
}

/// `2x`-regular graph on `n = (2ℓ+1)x + y` vertices with odd girth `2ℓ+1`.
pub fn odd_girth_blowup(n: usize, ell: usize) -> Result<Construction, ConstructionError> {
    if ell < 2 {
        return Err(ConstructionError::OutOfRange(format!("half-length {ell} must be at least 2")));
    }
    check_order(n)?;
    check_order(ell)?;
    if n.is_multiple_of(2) {
        return Err(ConstructionError::EvenOrder(n));
    }
    let m = 2 * ell + 1;
    let (x, y) = (n / m, n % m);
    if x <= y {
        return Err(ConstructionError::Decomposition { n, m, x, y });
    }
    let sizes = odd_girth_part_sizes(ell, x, y);
    debug_assert_eq!(sizes[0], sizes[m - 1]);
    let (graph, cycle) = cycle_blowup(&sizes, y);
    let labels = part_labels(&sizes);
    Ok(Construction {
        graph,
        recipe: ConstructionRecipe {
            name: "odd-girth-blowup".into(),
            params: params(&[("n", n), ("ell", ell), ("x", x), ("y", y)]),
            expected: Expected {
                order: n,
                degree: Some(2 * x),
                odd_girth: Some(OddGirth::Exactly(m)),
                triangles: Some(0),
                part_sizes: sizes,
                ..Expected::default()
            },
        },
        certificate: Certificate {
            partition: Some(labels.clone()),
            cycle_map: Some(labels),
            odd_cycle: Some(cycle),
            ..Certificate::default()
        },
    })
}

/// Circulant on `Z_n` with differences `±1, ±3, …, ±(2⌊n/5⌋ - 1)`, for odd
/// `5 <= n <= 19`, `n != 15`.
pub fn circulant_small_odd(n: usize) -> Result<Construction, ConstructionError> {
    if n.is_multiple_of(2) || !(5..=19).contains(&n) || n == 15 {
        return Err(ConstructionError::OutOfRange(format!(
            "circulant needs odd 5 <= n <= 19 with n != 15, got {n}"
        )));
    }
    let h = n / 5;
    let mut g = blank(n)?;
    for i in 0..n {
        for d in (1..2 * h).step_by(2) {
            g.add_edge(i, (i + d) % n);
        }
    }
    Ok(Construction {
        graph: g,
        recipe: ConstructionRecipe {
            name: "circulant-small-odd".into(),
            params: params(&[("n", n)]),
            expected: Expected {
                order: n,
                degree: Some(2 * h),
                triangles: Some(0),
                ..Expected::default()
            },
        },
        certificate: Certificate::default(),
    })
}

/// `K_{x,x}` (sides `a_i = i`, `b_i = x + i`) with `y` disjoint perfect
/// matchings and one further `k/2`-matching removed, `k = x - y`, plus an
/// apex joined to the ends of the last matching.
///
/// The matchings are rotational inside two blocks: `A' × B'` on the first
/// `k/2` vertices of each side loses shifts `0..=y`, and `A'' × B''` on
/// the rest loses shifts `0..y`. Only the `(k/2)(k/2 - y - 1)` edges left
/// inside `A' ∪ B'` close triangles with the apex.
fn apex_graph(x: usize, k: usize) -> Result<Graph, ConstructionError> {
    let y = x - k;
    let h = k / 2;
    if y + 1 > h {
        return Err(ConstructionError::Infeasible(format!(
            "block of size {h} cannot hold {} disjoint matchings",
            y + 1
        )));
    }
    let rest = x - h;
    let mut g = blank(2 * x + 1)?;
    for i in 0..x {
        for j in 0..x {
            let removed = match (i < h, j < h) {
                (true, true) => (j + h - i) % h <= y,
                (false, false) => (j - h + rest - (i - h)) % rest < y,
                _ => false,
            };
            if !removed {
                g.add_edge(i, x + j);
            }
        }
    }
    for i in 0..h {
        g.add_edge(2 * x, i);
        g.add_edge(2 * x, x + i);
    }
    Ok(g)
}

fn bipartite_with_apex_labels(x: usize) -> Vec<usize> {
    (0..2 * x + 1).map(|v| if v < x { 0 } else if v < 2 * x { 1 } else { 2 }).collect()
}

/// `k`-regular graph on odd `n` whose triangles all pass through one apex.
pub fn apex_construction(n: usize, k: usize) -> Result<Construction, ConstructionError> {
    if !in_supersaturation_window(n, k) {
        return Err(ConstructionError::Window { n, k });
    }
    let x = (n - 1) / 2;
    let graph = apex_graph(x, k)?;
    let h = (k / 2) as u64;
    let y = (x - k) as u64;
    Ok(Construction {
        graph,
        recipe: ConstructionRecipe {
            name: "apex-construction".into(),
            params: params(&[("n", n), ("k", k), ("x", x), ("y", x - k)]),
            expected: Expected {
                order: n,
                degree: Some(k),
                triangles: Some(h * (h - y - 1)),
                part_sizes: vec![x, x, 1],
                ..Expected::default()
            },
        },
        certificate: Certificate {
            partition: Some(bipartite_with_apex_labels(x)),
            apex: Some(2 * x),
            ..Certificate::default()
        },
    })
}

/// `K_{k,k}` minus a `k/2`-matching, with an apex joined to the matched vertices.
pub fn prop56_extremal(k: usize) -> Result<Construction, ConstructionError> {
    if k % 2 == 1 || k < 4 {
        return Err(ConstructionError::Degree(k));
    }
    check_order(k)?;
    let graph = apex_graph(k, k)?;
    let h = (k / 2) as u64;
    Ok(Construction {
        graph,
        recipe: ConstructionRecipe {
            name: "prop56-extremal".into(),
            params: params(&[("k", k)]),
            expected: Expected {
                order: 2 * k + 1,
                degree: Some(k),
                triangles: Some(h * (h - 1)),
                part_sizes: vec![k, k, 1],
                ..Expected::default()
            },
        },
        certificate: Certificate {
            partition: Some(bipartite_with_apex_labels(k)),
            apex: Some(2 * k),
            ..Certificate::default()
        },
    })
}

/// Removes a `t`-regular spanning subgraph from the complete bipartite
/// block `left × right`, always deleting at the left vertex of largest
/// remaining excess towards the right vertex of largest remaining excess
/// (lowest index on ties).
fn greedy_block_deletion(g: &mut Graph, left: &[usize], right: &[usize], t: usize) -> Result<(), ConstructionError> {
    let mut el = vec![t; left.len()];
    let mut er = vec![t; right.len()];
    loop {
        let Some((i, &e)) = el.iter().enumerate().max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0))) else {
            return Ok(());
        };
        if e == 0 {
            return Ok(());
        }
        let u = left[i];
        let pick = (0..right.len())
            .filter(|&j| er[j] > 0 && g.has_edge(u, right[j]))
            .max_by(|&a, &b| er[a].cmp(&er[b]).then(b.cmp(&a)));
        let Some(j) = pick else {
            return Err(ConstructionError::Infeasible(format!(
                "greedy deletion stalls at vertex {u} with excess {e}"
            )));
        };
        g.remove_edge(u, right[j]);
        el[i] -= 1;
        er[j] -= 1;
    }
}

/// `K_{p,p}` plus a vertex joined to `k/2` vertices of each side, made
/// `k`-regular by greedy deletions inside the neighbourhood and inside the
/// non-neighbourhood of the added vertex.
pub fn conj55_equality(n: usize, k: usize) -> Result<Construction, ConstructionError> {
    if !in_supersaturation_window(n, k) {
        return Err(ConstructionError::Window { n, k });
    }
    let p = (n - 1) / 2;
    let h = k / 2;
    let q = p - k;
    let mut g = blank(n)?;
    for i in 0..p {
        for j in 0..p {
            g.add_edge(i, p + j);
        }
    }
    for i in 0..h {
        g.add_edge(2 * p, i);
        g.add_edge(2 * p, p + i);
    }
    let a1: Vec<usize> = (0..h).collect();
    let b1: Vec<usize> = (p..p + h).collect();
    let a2: Vec<usize> = (h..p).collect();
    let b2: Vec<usize> = (p + h..2 * p).collect();
    greedy_block_deletion(&mut g, &a1, &b1, q + 1)?;
    greedy_block_deletion(&mut g, &a2, &b2, q)?;
    let bound = formulas::conj55_bound(n, k).expect("window checked above");
    Ok(Construction {
        graph: g,
        recipe: ConstructionRecipe {
            name: "conj55-equality".into(),
            params: params(&[("n", n), ("k", k), ("p", p), ("q", q)]),
            expected: Expected {
                order: n,
                degree: Some(k),
                triangles: Some(bound as u64),
                part_sizes: vec![p, p, 1],
                ..Expected::default()
            },
        },
        certificate: Certificate {
            partition: Some(bipartite_with_apex_labels(p)),
            apex: Some(2 * p),
            ..Certificate::default()
        },
    })
}

/// Difference classes of the circulant `y`-factor on `N = (r-2)x`
/// vertices: `⌊y/2⌋` differences `d < N/2` with `d ≢ 0 (mod r-2)`, skipping
/// `d = 1` when `y` is odd because the matching `{2t, 2t+1}` is used then.
fn factor_differences(core: usize, parts: usize, y: usize) -> Option<Vec<usize>> {
    let first = if y % 2 == 1 { 2 } else { 1 };
    let ds: Vec<usize> = (first..)
        .take_while(|&d| 2 * d < core)
        .filter(|d| d % parts != 0)
        .take(y / 2)
        .collect();
    (ds.len() == y / 2).then_some(ds)
}

/// `(r-2)x`-regular `(r-1)`-partite graph on `n = (r-1)x + y` vertices
/// with `x = 2⌊n/(2(r-1))⌋`: a complete `(r-2)`-partite core with parts of
/// size `x` minus a `y`-factor, joined to a stable set of size `x + y`.
pub fn multipartite_regular(n: usize, r: usize) -> Result<Construction, ConstructionError> {
    if r < 4 {
        return Err(ConstructionError::OutOfRange(format!("r = {r} must be at least 4")));
    }
    check_order(n)?;
    check_order(r)?;
    let x = 2 * (n / (2 * (r - 1)));
    let y = n - (r - 1) * x;
    let parts = r - 2;
    if x < 2 || y > (r - 3) * x {
        return Err(ConstructionError::Infeasible(format!(
            "n = {n}, r = {r}: x = {x}, y = {y} needs even x >= 2 and y <= (r-3)x"
        )));
    }
    let core = parts * x;
    let ds = factor_differences(core, parts, y).ok_or_else(|| {
        ConstructionError::Infeasible(format!("too few difference classes for a {y}-factor on {core} vertices"))
    })?;
    let mut g = blank(n)?;
    for u in 0..core {
        for w in u + 1..core {
            if u % parts != w % parts {
                g.add_edge(u, w);
            }
        }
        for w in core..n {
            g.add_edge(u, w);
        }
    }
    for &d in &ds {
        for u in 0..core {
            g.remove_edge(u, (u + d) % core);
        }
    }
    if y % 2 == 1 {
        for t in 0..core / 2 {
            g.remove_edge(2 * t, 2 * t + 1);
        }
    }
    let labels = (0..n).map(|v| if v < core { v % parts } else { parts }).collect();
    let mut sizes = vec![x; parts];
    sizes.push(x + y);
    Ok(Construction {
        graph: g,
        recipe: ConstructionRecipe {
            name: "multipartite-regular".into(),
            params: params(&[("n", n), ("r", r), ("x", x), ("y", y)]),
            expected: Expected {
                order: n,
                degree: Some(core),
                part_sizes: sizes,
                ..Expected::default()
            },
        },
        certificate: Certificate {
            partition: Some(labels),
            ..Certificate::default()
        },
    })
}

/// Host graph `K^=_{2a,b}`: `K_{2a,b}` with a perfect matching `{2i, 2i+1}`
/// added inside the side of size `2a`.
fn host_graph(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(2 * a + b);
    for i in 0..a {
        g.add_edge(2 * i, 2 * i + 1);
    }
    for u in 0..2 * a {
        for w in 0..b {
            g.add_edge(u, 2 * a + w);
        }
    }
    g
}

/// `K_{2x,y}` with an `x`-edge matching inside the side of size `2x`.
pub fn kbe_graph(x: usize, y: usize) -> Result<Construction, ConstructionError> {
    if x == 0 {
        return Err(ConstructionError::OutOfRange("kbe_graph needs x >= 1".into()));
    }
    check_order(x.saturating_mul(2).saturating_add(y))?;
    let graph = host_graph(x, y);
    let n = 2 * x + y;
    Ok(Construction {
        graph,
        recipe: ConstructionRecipe {
            name: "kbe".into(),
            params: params(&[("x", x), ("y", y)]),
            expected: Expected {
                order: n,
                max_degree: Some((y + 1).max(if y > 0 { 2 * x } else { 0 })),
                ..Expected::default()
            },
        },
        certificate: Certificate {
            host: Some(HostEmbedding { a: x, b: y, map: (0..n).collect() }),
            ..Certificate::default()
        },
    })
}

/// For `n = 2x + 1`: `K_{x+1,x}` plus `⌊(x+1)/2⌋` disjoint edges in the side of
/// size `x+1`. For even `x` a perfect matching between the matched vertices
/// and the side of size `x` is removed, leaving an `x`-regular graph.
pub fn odd_half_construction(n: usize) -> Result<Construction, ConstructionError> {
    if n.is_multiple_of(2) || n < 5 {
        return Err(ConstructionError::OutOfRange(format!("odd_half_construction needs odd n >= 5, got {n}")));
    }
    let x = (n - 1) / 2;
    let mut g = blank(n)?;
    for i in 0..x.div_ceil(2) {
        g.add_edge(2 * i, 2 * i + 1);
    }
    for u in 0..=x {
        for w in x + 1..n {
            g.add_edge(u, w);
        }
    }
    if x.is_multiple_of(2) {
        for i in 0..x {
            g.remove_edge(i, x + 1 + i);
        }
    }
    let a = x + 1;
    let map = (0..n).map(|v| if v <= x { v } else { 2 * a + (v - x - 1) }).collect();
    Ok(Construction {
        graph: g,
        recipe: ConstructionRecipe {
            name: "odd-half".into(),
            params: params(&[("n", n), ("x", x)]),
            expected: Expected {
                order: n,
                degree: Some(if x % 2 == 1 { x + 1 } else { x }),
                ..Expected::default()
            },
        },
        certificate: Certificate {
            host: Some(HostEmbedding { a, b: a, map }),
            ..Certificate::default()
        },
    })
}

/// Complement of the disjoint union of the stars `K_{1,a_i}`; each star is
/// laid out as its centre followed by its leaves.
pub fn star_forest_complement(n: usize, parts: &[usize]) -> Result<Construction, ConstructionError> {
    if parts.contains(&0) {
        return Err(ConstructionError::EmptyStar);
    }
    let covered: usize = parts.iter().map(|a| a + 1).sum();
    if covered != n {
        return Err(ConstructionError::ForestOrder { n, covered });
    }
    let mut forest = blank(n)?;
    let mut centre = 0;
    for &a in parts {
        for leaf in 1..=a {
            forest.add_edge(centre, centre + leaf);
        }
        centre += a + 1;
    }
    let all_single = parts.iter().all(|&a| a == 1);
    let mut p = params(&[("n", n)]);
    for (i, &a) in parts.iter().enumerate() {
        p.insert(format!("a{i}"), a);
    }
    Ok(Construction {
        graph: forest.complement(),
        recipe: ConstructionRecipe {
            name: "star-forest-complement".into(),
            params: p,
            expected: Expected {
                order: n,
                degree: all_single.then(|| n - 2),
                max_degree: Some(n.saturating_sub(2)),
                ..Expected::default()
            },
        },
        certificate: Certificate::default(),
    })
}
