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
mod common;

use common::*;
use turan_reg::canon::{canonical_label, is_isomorphic};
use turan_reg::census::{
    clique_profile, count_cliques, count_complete_bipartite, count_copies, count_cycles, count_stars, total_cliques,
};
use turan_reg::containment::contains_subgraph;
use turan_reg::girth::{is_bipartite, odd_girth};
use turan_reg::{named, Graph};

/// Edge-preserving injections of `h` into `g`, by plain backtracking.
fn injections(g: &Graph, h: &Graph) -> u64 {
    fn rec(g: &Graph, h: &Graph, map: &mut Vec<usize>, total: &mut u64) {
        let i = map.len();
        if i == h.order() {
            *total += 1;
            return;
        }
        for v in 0..g.order() {
            if map.contains(&v) {
                continue;
            }
            if (0..i).all(|j| !h.has_edge(i, j) || g.has_edge(v, map[j])) {
                map.push(v);
                rec(g, h, map, total);
                map.pop();
            }
        }
    }
    let mut total = 0;
    rec(g, h, &mut Vec::new(), &mut total);
    total
}

fn naive_copies(g: &Graph, h: &Graph) -> u64 {
    injections(g, h) / injections(h, h)
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn shuffled(g: &Graph, rng: &mut rand_chacha::ChaCha8Rng) -> Graph {
    use rand::seq::SliceRandom;
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    graph(g.order(), &edges)
}

#[test]
fn counts_match_naive_oracles() {
    let mut rng = rng(7);
    for i in 0..120 {
        let n = 3 + i % 8;
        let g = random_graph(&mut rng, n, [0.3, 0.5, 0.8][i % 3]);
        for t in 1..=n.min(6) {
            assert_eq!(count_cliques(&g, t), naive_cliques(&g, t), "k{t} on {:?}", g.edges().collect::<Vec<_>>());
        }
        let profile = clique_profile(&g);
        assert_eq!(total_cliques(&g), profile.iter().skip(3).sum::<u64>());
        for len in 3..=n.min(8) {
            assert_eq!(count_cycles(&g, len).unwrap(), naive_cycles(&g, len), "C{len}");
        }
        for s in 1..=4 {
            let want: u64 = g.degrees().iter().map(|&d| binom(d as u64, s as u64)).sum();
            let want = if s == 1 { g.size() as u64 } else { want };
            assert_eq!(count_stars(&g, s), want, "S{s}");
        }
        if n <= 8 {
            for (a, b) in [(1, 2), (2, 2), (2, 3)] {
                let kab = named::complete_bipartite(a, b);
                assert_eq!(count_complete_bipartite(&g, a, b), naive_copies(&g, &kab), "K{a},{b}");
            }
            for p in [named::path(4), named::cycle(5), named::petersen().induced(&[0, 1, 2, 5, 6])] {
                assert_eq!(count_copies(&g, &p), naive_copies(&g, &p));
                assert_eq!(contains_subgraph(&g, &p), injections(&g, &p) > 0);
            }
        }
    }
}

#[test]
fn named_counts() {
    assert_eq!(count_cliques(&complete(5), 3), 10);
    assert_eq!(count_cliques(&named::cycle(5), 3), 0);
    assert_eq!(count_cycles(&complete(5), 5).unwrap(), 12);
    assert_eq!(count_cycles(&named::petersen(), 5).unwrap(), 12);
    assert_eq!(odd_girth(&named::petersen()), Some(5));
    assert!(is_bipartite(&named::complete_bipartite(3, 4)));
    assert_eq!(count_complete_bipartite(&named::complete_bipartite(3, 3), 2, 2), 9);
}

#[test]
fn canonical_labels_are_invariant() {
    let mut rng = rng(11);
    for i in 0..200 {
        let n = 1 + i % 8;
        let g = random_graph(&mut rng, n, 0.5);
        let h = shuffled(&g, &mut rng);
        assert_eq!(canonical_label(&g), canonical_label(&h));
        assert!(is_isomorphic(&g, &h));
        assert_eq!(brute_code(&g), brute_code(&h));
        let other = random_graph(&mut rng, n, 0.5);
        assert_eq!(
            canonical_label(&g) == canonical_label(&other),
            brute_code(&g) == brute_code(&other),
            "labels and brute-force codes disagree"
        );
    }
}

#[test]
fn canonical_labels_on_larger_symmetric_graphs() {
    let mut rng = rng(13);
    let p = named::petersen();
    let prism = graph(10, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6), (6, 7), (7, 8), (8, 9), (9, 5), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)]);
    assert!(!is_isomorphic(&p, &prism));
    let k = named::complete_bipartite(12, 12).disjoint_union(&named::cycle(40));
    for _ in 0..5 {
        assert_eq!(canonical_label(&shuffled(&p, &mut rng)), canonical_label(&p));
        assert_eq!(canonical_label(&shuffled(&k, &mut rng)), canonical_label(&k));
    }
}
