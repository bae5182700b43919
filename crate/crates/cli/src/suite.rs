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
//! Suite execution: every check runs its operation, compares the outcome
//! with the manifest and reports one line with its provenance tag.

use std::ops::ControlFlow;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use turan_reg::canon::canonical_label;
use turan_reg::census::{clique_profile, count_cliques, count_cycles};
use turan_reg::constructions::validate;
use turan_reg::enumeration::{enumerate_graphs, GenFilter, GenOptions};
use turan_reg::formulas::{self, FamilySpec};
use turan_reg::search::{self, HSpec, SearchOptions, SearchResult};
use turan_reg::{graph6, Graph};

use crate::build::construct;
use crate::manifest::{CheckSpec, Expect, Manifest, Op};
use crate::{parse, CliError};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub provenance: String,
    pub passed: bool,
    pub expected: Expect,
    pub observed: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub mismatches: Vec<String>,
}

impl CheckResult {
    pub fn log_line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut line = format!("{} {status} {}: {}", self.provenance, self.name, self.observed);
        if !self.mismatches.is_empty() {
            line.push_str(&format!(" [{}]", self.mismatches.join("; ")));
        }
        line
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

/// What an operation produced.
#[derive(Debug, Default)]
struct Observed {
    value: Option<u64>,
    classes: Option<u64>,
    witnesses: Vec<Graph>,
    error: Option<String>,
    note: String,
}

impl Observed {
    fn value(v: u64) -> Self {
        Observed {
            value: Some(v),
            ..Observed::default()
        }
    }

    fn from_search(r: SearchResult) -> Self {
        Observed {
            value: r.objective,
            classes: r.classes,
            witnesses: r.witness_graphs(),
            error: r.stats.infeasible.clone(),
            note: format!("{} nodes", r.stats.nodes),
        }
    }

    fn failed(e: impl ToString) -> Self {
        Observed {
            error: Some(e.to_string()),
            ..Observed::default()
        }
    }

    fn describe(&self) -> String {
        let mut s = match (self.value, &self.error) {
            (Some(v), _) => format!("value {v}"),
            (None, Some(e)) => format!("none ({e})"),
            (None, None) => "none".to_string(),
        };
        if let Some(c) = self.classes {
            s.push_str(&format!(", {c} classes"));
        }
        if !self.note.is_empty() {
            s.push_str(&format!(", {}", self.note));
        }
        s
    }
}

fn family(h: &str) -> Result<FamilySpec, CliError> {
    match parse::forbidden(h)? {
        HSpec::Family(f) => Ok(f),
        HSpec::Graph(_) => Err(CliError::Parse(format!("{h:?} is not a named family"))),
    }
}

fn goodman_exhaustive(n_max: usize) -> Observed {
    let mut bad = 0;
    let mut classes = 0;
    for n in 0..=n_max {
        let stats = enumerate_graphs(&GenFilter::order(n), GenOptions::default(), |g| {
            if formulas::goodman_defect(g) != 0 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        match stats {
            Ok(s) => {
                bad += u64::from(s.stopped_early);
                classes += s.classes;
            }
            Err(e) => return Observed::failed(e),
        }
    }
    Observed {
        value: Some(bad),
        note: format!("{classes} classes checked"),
        ..Observed::default()
    }
}

fn goodman_random(count: usize, n_max: usize, seed: u64) -> Observed {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0;
    for _ in 0..count {
        let n = rng.gen_range(1..=n_max.max(1));
        let p: f64 = rng.gen();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).expect("edges in range");
        bad += u64::from(formulas::goodman_defect(&g) != 0);
    }
    Observed {
        value: Some(bad),
        note: format!("{count} graphs, seed {seed}"),
        ..Observed::default()
    }
}

/// Star forests with at least one star, as star sizes, for every order up to `n_max`.
fn star_forests(n_max: usize) -> Vec<(usize, Vec<usize>)> {
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (2..=max.min(left)).rev() {
            cur.push(p - 1);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    for n in 2..=n_max {
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        all.extend(out.into_iter().map(|p| (n, p)));
    }
    all
}

fn c5_star_forests(n_max: usize) -> Observed {
    let forests = star_forests(n_max);
    let mut bad = 0;
    for (n, parts) in &forests {
        let g = match construct(
            "star-forest-complement",
            &crate::build::Params {
                n: Some(*n),
                parts: parts.clone(),
                ..Default::default()
            },
        ) {
            Ok(c) => c.graph,
            Err(e) => return Observed::failed(e),
        };
        let formula = formulas::c5_star_forest_count(*n, parts);
        bad += u64::from(formula.ok() != count_cycles(&g, 5).ok());
    }
    Observed {
        value: Some(bad),
        note: format!("{} forests", forests.len()),
        ..Observed::default()
    }
}

fn run_op(op: &Op, seed: u64) -> Observed {
    let opts = SearchOptions {
        witness_cap: usize::MAX,
        ..SearchOptions::default()
    };
    let search = |r: Result<SearchResult, search::SearchError>| match r {
        Ok(r) => Observed::from_search(r),
        Err(e) => Observed::failed(e),
    };
    match op {
        Op::Exr { n, h } => match parse::forbidden(h) {
            Ok(h) => search(search::exr_exact(*n, &h, &opts)),
            Err(e) => Observed::failed(e),
        },
        Op::ExrClosedForm { n, h } => match family(h).map(|f| formulas::exr_closed_form(*n, f)) {
            Ok(Ok(c)) => Observed {
                value: Some(c.value as u64),
                note: if c.exact { "exact".into() } else { "large-n value".into() },
                ..Observed::default()
            },
            Ok(Err(e)) => Observed::failed(e),
            Err(e) => Observed::failed(e),
        },
        Op::MaxKt { n, m, r, t } => search(search::max_kt(*n, *m, *r, *t, &opts)),
        Op::MaxKTotal { n, m, r } => search(search::max_k_total(*n, *m, *r, &opts)),
        Op::MinTriangles { n, k } => search(search::min_triangles_regular(*n, *k, &opts)),
        Op::MaxCopies { n, pattern, r } => match parse::pattern(pattern) {
            Ok(p) => search(search::max_copies_free(*n, &p, *r, &opts)),
            Err(e) => Observed::failed(e),
        },
        Op::ExC5 { r } => match formulas::ex_c5_closed_form(*r) {
            Ok(v) => Observed::value(v),
            Err(e) => Observed::failed(e),
        },
        Op::Conj55Bound { n, k } => match formulas::conj55_bound(*n, *k) {
            Ok(v) if v >= 0 => Observed::value(v as u64),
            Ok(v) => Observed::failed(format!("negative bound {v}")),
            Err(e) => Observed::failed(e),
        },
        Op::RPlusTwo { r, m } => match formulas::r_plus_two_max_triangles(*r, *m) {
            Ok(v) => Observed::value(v),
            Err(e) => Observed::failed(e),
        },
        Op::CriticalWidth { n, r } => {
            let (lo, hi) = formulas::gls_critical_range(*n, *r);
            Observed {
                value: Some(hi.saturating_sub(lo) as u64),
                note: format!("{lo} < m <= {hi}"),
                ..Observed::default()
            }
        }
        Op::GoodmanExhaustive { n_max } => goodman_exhaustive(*n_max),
        Op::GoodmanRandom { count, n_max } => goodman_random(*count, *n_max, seed),
        Op::C5StarForests { n_max } => c5_star_forests(*n_max),
        Op::Construct { name, params } => match construct(name, params) {
            Ok(c) => {
                let report = validate(&c);
                let failed: Vec<String> = report.failures().map(|f| format!("{}: {}", f.property, f.detail)).collect();
                Observed {
                    value: Some(failed.len() as u64),
                    note: if failed.is_empty() {
                        format!("{} checks, {} triangles", report.checks.len(), report.triangles)
                    } else {
                        failed.join("; ")
                    },
                    witnesses: vec![c.graph],
                    ..Observed::default()
                }
            }
            Err(e) => Observed::failed(e),
        },
        Op::ConstructTriangles { name, params } => match construct(name, params) {
            Ok(c) => Observed {
                value: Some(count_cliques(&c.graph, 3)),
                witnesses: vec![c.graph],
                ..Observed::default()
            },
            Err(e) => Observed::failed(e),
        },
    }
}

fn compare(exp: &Expect, obs: &Observed) -> Vec<String> {
    let mut bad = Vec::new();
    if exp.none == Some(true) {
        if obs.value.is_some() {
            bad.push("expected no value".to_string());
        }
        return bad;
    }
    if obs.value.is_none() {
        bad.push(format!("no value: {}", obs.error.clone().unwrap_or_default()));
        return bad;
    }
    if let Some(v) = exp.value {
        if obs.value != Some(v) {
            bad.push(format!("value {:?} != {v}", obs.value));
        }
    }
    if let Some(c) = exp.classes {
        if obs.classes != Some(c) {
            bad.push(format!("classes {:?} != {c}", obs.classes));
        }
    }
    if let Some(p) = &exp.profile {
        let got = obs.witnesses.first().map(|g| clique_profile(g).into_iter().skip(3).collect::<Vec<_>>());
        if got.as_ref() != Some(p) {
            bad.push(format!("profile {got:?} != {p:?}"));
        }
    }
    if let Some(ct) = &exp.complement_triangles {
        let mut got: Vec<u64> = obs.witnesses.iter().map(|g| count_cliques(&g.complement(), 3)).collect();
        let mut want = ct.clone();
        got.sort_unstable();
        want.sort_unstable();
        if got != want {
            bad.push(format!("complement triangles {got:?} != {want:?}"));
        }
    }
    let has_witness = |g: &Graph| {
        let label = canonical_label(g);
        obs.witnesses.iter().any(|w| w.order() == g.order() && canonical_label(w) == label)
    };
    if let Some(w) = &exp.witness {
        match graph6::decode(w) {
            Ok(g) if has_witness(&g) => {}
            Ok(_) => bad.push(format!("no witness isomorphic to {w}")),
            Err(e) => bad.push(format!("bad witness graph6 {w:?}: {e}")),
        }
    }
    if let Some(wc) = &exp.witness_construction {
        match construct(&wc.name, &wc.params) {
            Ok(c) if has_witness(&c.graph) => {}
            Ok(_) => bad.push(format!("no witness isomorphic to {}", wc.name)),
            Err(e) => bad.push(format!("witness construction failed: {e}")),
        }
    }
    bad
}

pub fn run_check(check: &CheckSpec, seed: u64) -> CheckResult {
    let obs = run_op(&check.op, seed);
    let mismatches = compare(&check.expect, &obs);
    CheckResult {
        name: check.name.clone(),
        provenance: check.provenance.tag().to_string(),
        passed: mismatches.is_empty(),
        expected: check.expect.clone(),
        observed: obs.describe(),
        mismatches,
    }
}

/// Runs every check of a suite in parallel; the report keeps manifest order.
pub fn run_suite(manifest: &Manifest, id: &str, seed: u64) -> Result<SuiteReport, CliError> {
    let suite = manifest.suite(id)?;
    let checks: Vec<CheckResult> = suite.checks.par_iter().map(|c| run_check(c, seed)).collect();
    Ok(SuiteReport {
        suite: id.to_string(),
        seed,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}
