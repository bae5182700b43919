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
//! Subgraph counts: cliques, cycles, stars and complete bipartite graphs.
//!
//! Every count is an unlabeled copy count: each subgraph is counted once,
//! regardless of how many automorphisms it has.

use crate::containment;
use crate::formulas::binomial;
use crate::graph::{bits64, Graph};

#[inline]
fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        !((2u64 << v) - 1)
    }
}

fn cliques_small(rows: &[u64], cand: u64, t: usize) -> u64 {
    match t {
        0 => 1,
        1 => cand.count_ones() as u64,
        2 => bits64(cand).map(|v| (cand & rows[v] & above(v)).count_ones() as u64).sum(),
        _ => bits64(cand)
            .map(|v| cliques_small(rows, cand & rows[v] & above(v), t - 1))
            .sum(),
    }
}

fn cliques_wide(g: &Graph, cand: &[u64], t: usize) -> u64 {
    let ones = |c: &[u64]| c.iter().map(|w| w.count_ones() as u64).sum::<u64>();
    match t {
        0 => 1,
        1 => ones(cand),
        _ => {
            let mut total = 0;
            let mut next = vec![0u64; cand.len()];
            for v in crate::graph::Bits::new(cand) {
                let row = g.row(v);
                let mut any = false;
                for (i, w) in next.iter_mut().enumerate() {
                    let mask = match (v / 64).cmp(&i) {
                        std::cmp::Ordering::Less => u64::MAX,
                        std::cmp::Ordering::Equal => above(v % 64),
                        std::cmp::Ordering::Greater => 0,
                    };
                    *w = cand[i] & row[i] & mask;
                    any |= *w != 0;
                }
                if any {
                    total += cliques_wide(g, &next, t - 1);
                }
            }
            total
        }
    }
}

fn all_vertices(g: &Graph) -> Vec<u64> {
    let n = g.order();
    let mut words = vec![u64::MAX; g.row_words()];
    if !n.is_multiple_of(64) {
        *words.last_mut().unwrap() = (1u64 << (n % 64)) - 1;
    }
    if n == 0 {
        words.iter_mut().for_each(|w| *w = 0);
    }
    words
}

/// `k_t(G)`, the number of `t`-vertex cliques.
pub fn count_cliques(g: &Graph, t: usize) -> u64 {
    match t {
        0 => 1,
        1 => g.order() as u64,
        2 => g.size() as u64,
        _ if g.is_small() => cliques_small(g.small_rows(), all_vertices(g)[0], t),
        _ => cliques_wide(g, &all_vertices(g), t),
    }
}

/// Clique counts by size: entry `t` is `k_t(G)` for `t` up to the clique number.
pub fn clique_profile(g: &Graph) -> Vec<u64> {
    let mut profile = vec![1u64];
    if g.is_small() {
        fn walk(rows: &[u64], cand: u64, depth: usize, profile: &mut Vec<u64>) {
            for v in bits64(cand) {
                if profile.len() <= depth + 1 {
                    profile.push(0);
                }
                profile[depth + 1] += 1;
                walk(rows, cand & rows[v] & above(v), depth + 1, profile);
            }
        }
        walk(g.small_rows(), all_vertices(g)[0], 0, &mut profile);
    } else {
        let mut t = 1;
        loop {
            let c = count_cliques(g, t);
            if c == 0 {
                break;
            }
            profile.push(c);
            t += 1;
        }
    }
    profile
}

/// `k(G)`: the number of cliques on at least three vertices. For a fixed
/// size this differs from the count including edges by a constant.
pub fn total_cliques(g: &Graph) -> u64 {
    clique_profile(g).iter().skip(3).sum()
}

/// Common neighbours of `u` and `v`; for an edge `uv` its size is the
/// number of triangles on that edge.
pub fn common_neighbors(g: &Graph, u: usize, v: usize) -> Vec<usize> {
    g.row(u)
        .iter()
        .zip(g.row(v))
        .enumerate()
        .flat_map(|(i, (a, b))| bits64(a & b).map(move |x| i * 64 + x))
        .collect()
}

/// Shortest supported and longest supported cycle length for [`count_cycles`].
pub const CYCLE_LENGTHS: std::ops::RangeInclusive<usize> = 3..=8;

/// Number of cycles of length `len` (3 ≤ len ≤ 8), each counted once.
pub fn count_cycles(g: &Graph, len: usize) -> Result<u64, CycleLengthError> {
    if !CYCLE_LENGTHS.contains(&len) {
        return Err(CycleLengthError(len));
    }
    if len == 3 {
        return Ok(count_cliques(g, 3));
    }
    let n = g.order();
    let mut total = 0u64;
    let mut path = vec![0usize; len];
    let mut used = vec![false; n];
    for s in 0..n {
        path[0] = s;
        used[s] = true;
        total += extend_cycles(g, s, &mut path, &mut used, 1, len);
        used[s] = false;
    }
    // each cycle is seen from its smallest vertex in both directions
    Ok(total / 2)
}

fn extend_cycles(g: &Graph, s: usize, path: &mut [usize], used: &mut [bool], depth: usize, len: usize) -> u64 {
    let last = path[depth - 1];
    if depth == len {
        return g.has_edge(last, s) as u64;
    }
    let mut total = 0;
    for w in g.neighbors(last) {
        if w <= s || used[w] {
            continue;
        }
        path[depth] = w;
        used[w] = true;
        total += extend_cycles(g, s, path, used, depth + 1, len);
        used[w] = false;
    }
    total
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("cycle length {0} outside the supported range 3..=8")]
pub struct CycleLengthError(pub usize);

/// Copies of the star `K_{1,s}`. For `s = 1` this is the edge count.
pub fn count_stars(g: &Graph, s: usize) -> u64 {
    assert!(s >= 1, "a star needs at least one leaf");
    if s == 1 {
        return g.size() as u64;
    }
    (0..g.order()).map(|v| binomial(g.degree(v) as u64, s as u64)).sum()
}

/// Copies of `K_{a,b}`.
pub fn count_complete_bipartite(g: &Graph, a: usize, b: usize) -> u64 {
    assert!(a >= 1 && b >= 1, "both sides need at least one vertex");
    let (a, b) = (a.min(b), a.max(b));
    let mut total = 0u64;
    let all = all_vertices(g);
    biclique_walk(g, 0, a, b, &all, &mut total);
    if a == b {
        total /= 2;
    }
    total
}

// Chooses the a-side in increasing vertex order; `common` holds the vertices
// adjacent to every chosen vertex.
fn biclique_walk(g: &Graph, start: usize, left: usize, b: usize, common: &[u64], total: &mut u64) {
    let size = |c: &[u64]| c.iter().map(|w| w.count_ones() as u64).sum::<u64>();
    if left == 0 {
        *total += binomial(size(common), b as u64);
        return;
    }
    let mut next = vec![0u64; common.len()];
    for v in start..g.order() {
        for (i, w) in next.iter_mut().enumerate() {
            *w = common[i] & g.row(v)[i];
        }
        if size(&next) >= b as u64 {
            biclique_walk(g, v + 1, left - 1, b, &next, total);
        }
    }
}

/// Copies of an arbitrary pattern: injective homomorphisms divided by the
/// pattern's automorphism count.
pub fn count_copies(g: &Graph, pattern: &Graph) -> u64 {
    let aut = containment::count_embeddings(pattern, pattern);
    containment::count_embeddings(g, pattern) / aut
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn k33() -> Graph {
        named::complete_bipartite(3, 3)
    }

    #[test]
    fn clique_examples() {
        assert_eq!(count_cliques(&named::complete(5), 3), 10);
        assert_eq!(count_cliques(&named::cycle(5), 3), 0);
        let fig_b = named::clique_maximiser_8_18();
        assert_eq!(
            (count_cliques(&fig_b, 3), count_cliques(&fig_b, 4), count_cliques(&fig_b, 5)),
            (15, 6, 1)
        );
        let fig_a = named::triangle_maximiser_8_18();
        assert_eq!(
            (count_cliques(&fig_a, 3), count_cliques(&fig_a, 4), count_cliques(&fig_a, 5)),
            (16, 4, 0)
        );
    }

    #[test]
    fn total_clique_examples() {
        assert_eq!(total_cliques(&named::clique_maximiser_8_18()), 22);
        assert_eq!(total_cliques(&named::triangle_maximiser_8_18()), 20);
        assert_eq!(total_cliques(&named::complete(3)), 1);
        assert_eq!(clique_profile(&named::complete(4)), vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn wide_rows_match_small_rows() {
        // K_{12} straddling the first word boundary
        let g = Graph::empty(60).disjoint_union(&named::complete(12));
        assert!(!g.is_small());
        for t in 3..=12 {
            assert_eq!(count_cliques(&g, t), binomial(12, t as u64));
        }
        let profile = clique_profile(&g);
        assert_eq!(profile.len(), 13);
        assert_eq!(profile[5], binomial(12, 5));
    }

    #[test]
    fn common_neighbor_examples() {
        assert_eq!(common_neighbors(&named::complete(4), 0, 1).len(), 2);
        assert!(common_neighbors(&named::cycle(5), 0, 1).is_empty());
        assert_eq!(common_neighbors(&k33(), 0, 1), vec![3, 4, 5]);
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(count_cycles(&named::complete(5), 5).unwrap(), 12);
        assert_eq!(count_cycles(&named::cycle(6), 5).unwrap(), 0);
        assert_eq!(count_cycles(&k33(), 4).unwrap(), 9);
        assert_eq!(count_cycles(&named::petersen(), 5).unwrap(), 12);
        assert_eq!(count_cycles(&named::cycle(8), 8).unwrap(), 1);
        assert_eq!(count_cycles(&k33(), 9), Err(CycleLengthError(9)));
        assert_eq!(count_cycles(&k33(), 2), Err(CycleLengthError(2)));
    }

    #[test]
    fn star_examples() {
        assert_eq!(count_stars(&named::cycle(5), 2), 5);
        assert_eq!(count_stars(&named::complete(4), 2), 12);
        assert_eq!(count_stars(&named::star(4), 3), 4);
        assert_eq!(count_stars(&named::star(4), 1), 4);
    }

    #[test]
    fn biclique_examples() {
        assert_eq!(count_complete_bipartite(&named::complete_bipartite(2, 2), 2, 2), 1);
        assert_eq!(count_complete_bipartite(&named::complete(4), 1, 1), 6);
        assert_eq!(count_complete_bipartite(&k33(), 2, 2), 9);
        assert_eq!(count_complete_bipartite(&k33(), 2, 2), count_cycles(&k33(), 4).unwrap());
        assert_eq!(count_complete_bipartite(&named::star(4), 1, 3), 4);
        assert_eq!(count_complete_bipartite(&named::complete(4), 1, 2), count_stars(&named::complete(4), 2));
    }

    #[test]
    fn generic_copies_match_specialised_counts() {
        let g = named::petersen();
        assert_eq!(count_copies(&g, &named::cycle(5)), 12);
        assert_eq!(count_copies(&g, &named::star(3)), count_stars(&g, 3));
        assert_eq!(count_copies(&k33(), &named::cycle(4)), 9);
        assert_eq!(count_copies(&named::complete(5), &named::cycle(5)), 12);
    }
}
