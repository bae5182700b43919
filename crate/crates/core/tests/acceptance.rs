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
//! Acceptance criteria, one line per criterion. Runs without the libtest
//! harness so the report is printed in order; exits non-zero on failure.

mod common;

use std::collections::{BTreeSet, HashSet};
use std::ops::ControlFlow;
use std::process::ExitCode;
use std::time::Instant;

use turan_reg::canon::{canonical_label, is_isomorphic};
use turan_reg::census::{clique_profile, count_cliques, count_cycles, total_cliques};
use turan_reg::constructions::{
    apex_construction, odd_girth_blowup, pentagon_blowup, prop56_extremal, validate, Construction,
};
use turan_reg::enumeration::{enumerate_by_edges, enumerate_collect, enumerate_graphs, GenFilter, GenOptions};
use turan_reg::formulas::{
    c5_star_forest_count, ex_c5_closed_form, exr_closed_form, gls_critical_range, goodman_defect, FamilySpec,
};
use turan_reg::search::{exr_exact, max_copies_free, max_k_total, max_kt, min_triangles_regular, HSpec, SearchOptions};
use turan_reg::Graph;

use common::*;

const SEED: u64 = 0x7572_616e;

/// Collects failed expectations for one criterion.
#[derive(Default)]
struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }
}

fn opts() -> SearchOptions {
    SearchOptions::default()
}

fn mantel() -> Outcome {
    let mut out = Outcome::default();
    let k3 = HSpec::Family(FamilySpec::Triangle);
    for n in 4..=11 {
        let expected = if n % 2 == 0 { n / 2 } else { 2 * (n / 5) };
        let got = exr_exact(n, &k3, &opts()).unwrap();
        out.expect(got.objective == Some(expected as u64), format!("n={n}: got {:?}, want {expected}", got.objective));
        let closed = exr_closed_form(n, FamilySpec::Triangle).unwrap();
        out.expect(closed.exact && closed.value == expected, format!("closed form at n={n}"));
        if let Some(w) = got.witness_graphs().first() {
            out.expect(
                w.regular_degree() == Some(expected) && count_cliques(w, 3) == 0,
                format!("witness at n={n} is not a triangle-free {expected}-regular graph"),
            );
        }
    }
    out.note("n = 4..=11");
    out
}

fn table() -> Outcome {
    let mut out = Outcome::default();
    // rows n = 6, 7, 8; columns m = 11..=16; None where the table is blank
    let table: [(usize, [Option<u64>; 6]); 3] = [
        (6, [Some(7), Some(8), None, None, None, None]),
        (7, [None, Some(8), Some(7), Some(7), None, None]),
        (8, [None, None, None, Some(8), Some(8), Some(8)]),
    ];
    let mut checked = 0;
    for (n, row) in table {
        let (lo, hi) = gls_critical_range(n, 4);
        for (i, cell) in row.iter().enumerate() {
            let m = 11 + i;
            let critical = lo < m && m <= hi;
            out.expect(critical == cell.is_some(), format!("blank pattern differs at (n,m)=({n},{m})"));
            if let Some(v) = cell {
                let got = max_kt(n, m, 4, 3, &opts()).unwrap();
                out.expect(got.objective == Some(*v), format!("({n},{m}): got {:?}, want {v}", got.objective));
                checked += 1;
            }
        }
    }
    out.note(format!("{checked} cells"));
    out
}

fn examples() -> Outcome {
    let mut out = Outcome::default();
    let all = SearchOptions {
        witness_cap: usize::MAX,
        ..opts()
    };
    let k3 = max_kt(8, 18, 5, 3, &all).unwrap();
    out.expect(k3.objective == Some(16) && k3.classes == Some(1), format!("(8,18,5) k3: {:?} / {:?}", k3.objective, k3.classes));
    out.expect(
        k3.witness_graphs().iter().any(|w| is_isomorphic(w, &figure_k3_maximiser())),
        "k3 maximiser is not the figure graph",
    );
    let fig = figure_k3_maximiser();
    out.expect(clique_profile(&fig)[3..] == [16, 4], "figure k3 maximiser profile");
    out.expect(total_cliques(&fig) == 20, "figure k3 maximiser has k = 20");

    let k = max_k_total(8, 18, 5, &all).unwrap();
    out.expect(k.objective == Some(22) && k.classes == Some(1), format!("(8,18,5) k: {:?} / {:?}", k.objective, k.classes));
    if let Some(w) = k.witness_graphs().first() {
        let p = clique_profile(w);
        out.expect(p[3..] == [15, 6, 1], format!("k maximiser profile {:?}", &p[3..]));
        out.expect(is_isomorphic(w, &figure_clique_maximiser()), "k maximiser is not the figure graph");
    }
    for (t, classes, value) in [(4, 2, 6), (5, 3, 1)] {
        let r = max_kt(8, 18, 5, t, &all).unwrap();
        out.expect(
            r.classes == Some(classes) && r.objective == Some(value),
            format!("t={t}: {:?} classes, value {:?}", r.classes, r.objective),
        );
    }
    let r = max_kt(8, 17, 5, 3, &all).unwrap();
    out.expect(r.objective == Some(16) && r.classes == Some(3), format!("(8,17,5): {:?} / {:?}", r.objective, r.classes));
    let comp: BTreeSet<u64> = r.witness_graphs().iter().map(|g| count_cliques(&g.complement(), 3)).collect();
    out.expect(comp == BTreeSet::from([0, 1, 4]), format!("complement triangles {comp:?}"));
    out
}

fn supersaturation() -> Outcome {
    let mut out = Outcome::default();
    let r = min_triangles_regular(9, 4, &opts()).unwrap();
    out.expect(r.objective == Some(2) && r.classes == Some(1), format!("{:?} / {:?}", r.objective, r.classes));
    let target = canonical_label(&prop56_extremal(4).unwrap().graph);
    out.expect(r.witnesses == vec![target], "witness differs from the equality graph");
    out
}

fn c5_props() -> Outcome {
    let mut out = Outcome::default();
    let c5 = common::graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
    let k8k1 = complete(8).disjoint_union(&Graph::empty(1));
    let r = max_copies_free(9, &c5, 7, &opts()).unwrap();
    out.expect(r.objective == Some(672) && ex_c5_closed_form(7) == Ok(672), format!("n=9: {:?}", r.objective));
    out.expect(r.witnesses.contains(&canonical_label(&k8k1)), "K8 + K1 is not a witness");
    out.note(format!("n=9: {} extremal classes, {:.1}s", r.classes.unwrap_or(0), r.stats.wall_time));

    let pm: Vec<_> = (0..4).map(|i| (2 * i, 2 * i + 1)).collect();
    let k8m = graph(8, &complete(8).edges().filter(|e| !pm.contains(e)).collect::<Vec<_>>());
    let r = max_copies_free(8, &c5, 6, &opts()).unwrap();
    out.expect(r.objective == Some(288) && ex_c5_closed_form(6) == Ok(288), format!("n=8: {:?}", r.objective));
    out.expect(r.witnesses.contains(&canonical_label(&k8m)), "K8 minus a perfect matching is not a witness");
    out
}

fn identities() -> Outcome {
    let mut out = Outcome::default();
    // Goodman on every class up to order 8
    let mut classes = 0u64;
    for n in 0..=8 {
        let stats = enumerate_graphs(&GenFilter::order(n), GenOptions::default(), |g| {
            if goodman_defect(g) != 0 {
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        })
        .unwrap();
        out.expect(!stats.stopped_early, format!("Goodman defect on some graph of order {n}"));
        classes += stats.classes;
    }
    let mut rng = rng(SEED);
    for i in 0..10_000 {
        let n = 1 + i % 40;
        let p = [0.1, 0.3, 0.5, 0.7, 0.9][i % 5];
        let g = random_graph(&mut rng, n, p);
        out.expect(goodman_defect(&g) == 0, format!("Goodman defect on random graph #{i}"));
    }
    out.note(format!("Goodman: {classes} classes, 10000 random graphs, seed {SEED:#x}"));

    // C5 counts in complements of star forests
    let mut forests = 0;
    for n in 2..=10 {
        for parts in partitions(n, 2) {
            let stars: Vec<usize> = parts.iter().map(|p| p - 1).collect();
            let mut edges = Vec::new();
            let mut c = 0;
            for &a in &stars {
                edges.extend((1..=a).map(|l| (c, c + l)));
                c += a + 1;
            }
            let g = graph(n, &edges).complement();
            let formula = c5_star_forest_count(n, &stars).unwrap();
            let counted = count_cycles(&g, 5).unwrap();
            out.expect(formula == counted, format!("stars {stars:?}: formula {formula}, count {counted}"));
            if n <= 8 {
                out.expect(counted == naive_cycles(&g, 5), format!("stars {stars:?}: naive cycle count differs"));
            }
            forests += 1;
        }
    }
    out.note(format!("{forests} star forests"));

    // constructions
    let mut built = 0;
    let mut check = |c: Construction, out: &mut Outcome| {
        let report = validate(&c);
        if let Some(f) = report.failures().next() {
            out.failures.push(format!("{} {:?}: {} ({})", c.recipe.name, c.recipe.params, f.property, f.detail));
        }
        built += 1;
    };
    for n in (1..=2000).step_by(2) {
        if let Ok(c) = pentagon_blowup(n) {
            out.expect(c.graph.regular_degree() == Some(2 * (n / 5)), format!("pentagon n={n} degree"));
            out.expect(c.recipe.expected.triangles == Some(0), "pentagon claims triangle-freeness");
            check(c, &mut out);
        }
    }
    for ell in 3..=8 {
        for n in (1..=2000).step_by(2) {
            if let Ok(c) = odd_girth_blowup(n, ell) {
                check(c, &mut out);
            }
        }
    }
    for ell in 9.. {
        if 2 * ell + 1 > 2000 {
            break;
        }
        for n in (2 * ell + 1..=2000).step_by(2) {
            if let Ok(c) = odd_girth_blowup(n, ell) {
                check(c, &mut out);
            }
        }
    }
    for n in (9..=2000).step_by(2) {
        let k = 2 * (n / 5) + 2;
        if let Ok(c) = apex_construction(n, k) {
            check(c, &mut out);
        }
    }
    for n in (9..=201).step_by(2) {
        for k in (2..n).step_by(2) {
            if let Ok(c) = apex_construction(n, k) {
                check(c, &mut out);
            }
        }
    }
    for n in [101usize, 501, 1001] {
        let k = 2 * (n / 5) + 2;
        let c = apex_construction(n, k).unwrap();
        let t = validate(&c).triangles as f64;
        let nn = (n * n) as f64;
        out.expect(nn / 75.0 <= t && t <= nn / 40.0, format!("apex n={n}: {t} triangles outside [n²/75, n²/40]"));
        out.note(format!("apex n={n}: {t} triangles"));
    }
    out.note(format!("{built} constructions validated"));
    out
}

fn enumeration() -> Outcome {
    let mut out = Outcome::default();
    for n in 0..=6 {
        let (gs, _) = enumerate_collect(&GenFilter::order(n), GenOptions::default()).unwrap();
        let brute = brute_classes(n);
        let ours: BTreeSet<u64> = gs.iter().map(brute_code).collect();
        out.expect(gs.len() == brute.len(), format!("n={n}: {} classes, brute force {}", gs.len(), brute.len()));
        out.expect(ours == brute, format!("n={n}: class sets differ"));
    }
    for n in 0..=8 {
        let (a, _) = enumerate_collect(&GenFilter::order(n), GenOptions::default()).unwrap();
        let (b, _) = enumerate_by_edges(&GenFilter::order(n), GenOptions::default()).unwrap();
        let la: HashSet<_> = a.iter().map(canonical_label).collect();
        let lb: HashSet<_> = b.iter().map(canonical_label).collect();
        out.expect(la.len() == a.len() && lb.len() == b.len(), format!("n={n}: duplicate classes"));
        out.expect(la == lb, format!("n={n}: vertex and edge augmentation disagree ({} vs {})", a.len(), b.len()));
        if n == 8 {
            out.note(format!("n=8: {} classes", a.len()));
        }
    }
    out
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 regular Mantel exactness", mantel),
        ("2 clique table reproduction", table),
        ("3 (8,18,5) and (8,17,5) examples", examples),
        ("4 supersaturation equality (9,4)", supersaturation),
        ("5 C5 propositions", c5_props),
        ("6 identity suites", identities),
        ("7 enumeration correctness", enumeration),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let out = run();
        let secs = start.elapsed().as_secs_f64();
        let status = if out.failures.is_empty() { "PASS" } else { "FAIL" };
        let mut line = format!("{status} criterion {name} [{secs:.1}s]");
        if !out.notes.is_empty() {
            line.push_str(&format!(" ({})", out.notes.join("; ")));
        }
        println!("{line}");
        for f in out.failures.iter().take(20) {
            println!("    {f}");
        }
        if !out.failures.is_empty() {
            failed += 1;
        }
    }
    println!("INFO criterion 8 asymptotic statements (large-n exactness for odd cycles, regular Erdős–Stone, the 1/300 constant) are not tested as limits");
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
