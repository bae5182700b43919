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
//! Critical-regime triangle tables: the maximum number of triangles over
//! graphs of order `n`, size `m` and maximum degree at most `r`.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use serde::Serialize;

use turan_reg::census::count_cliques;
use turan_reg::enumeration::{enumerate_fold, GenFilter, GenOptions, DEFAULT_MAX_ORDER};
use turan_reg::formulas::gls_critical_range;

use crate::CliError;

/// The one table with published values: `r = 4`, `n = 6..=8`.
const REFERENCE: (usize, usize, usize) = (4, 6, 8);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub n: usize,
    pub m: usize,
    pub max_k3: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub r: usize,
    pub columns: Vec<usize>,
    /// Rows in order of `n`; `None` outside the critical range.
    #[serde(skip)]
    pub rows: Vec<(usize, Vec<Option<u64>>)>,
    pub cells: Vec<Cell>,
    pub has_reference: bool,
}

/// Maximum triangle count for every size, from one pass over all classes.
fn max_k3_by_size(n: usize, r: usize) -> Result<BTreeMap<usize, u64>, CliError> {
    let filter = GenFilter::order(n).with_max_degree(r);
    let (best, _) = enumerate_fold(
        &filter,
        GenOptions::default(),
        BTreeMap::new,
        |acc: &mut BTreeMap<usize, u64>, g| {
            let t = count_cliques(g, 3);
            let e = acc.entry(g.size()).or_insert(t);
            *e = (*e).max(t);
            ControlFlow::Continue(())
        },
        |mut a, b| {
            for (m, t) in b {
                let e = a.entry(m).or_insert(t);
                *e = (*e).max(t);
            }
            a
        },
    )?;
    Ok(best)
}

pub fn compute_table(r: usize, ns: std::ops::RangeInclusive<usize>) -> Result<Table, CliError> {
    if ns.is_empty() {
        return Err(CliError::Parse("empty order range".into()));
    }
    if *ns.end() > DEFAULT_MAX_ORDER {
        return Err(CliError::Parse(format!(
            "order {} exceeds the enumeration cap {DEFAULT_MAX_ORDER}",
            ns.end()
        )));
    }
    let ranges: Vec<(usize, (usize, usize))> = ns.clone().map(|n| (n, gls_critical_range(n, r))).collect();
    let lo = ranges.iter().filter(|(_, (l, h))| l < h).map(|(_, (l, _))| l + 1).min();
    let hi = ranges.iter().map(|(_, (_, h))| *h).max();
    let columns: Vec<usize> = match (lo, hi) {
        (Some(lo), Some(hi)) => (lo..=hi).collect(),
        _ => Vec::new(),
    };
    let mut rows = Vec::new();
    let mut cells = Vec::new();
    for (n, (l, h)) in ranges {
        let best = if l < h { max_k3_by_size(n, r)? } else { BTreeMap::new() };
        let row = columns
            .iter()
            .map(|&m| if l < m && m <= h { best.get(&m).copied() } else { None })
            .collect::<Vec<_>>();
        for (&m, v) in columns.iter().zip(&row) {
            if let Some(v) = v {
                cells.push(Cell { n, m, max_k3: *v });
            }
        }
        rows.push((n, row));
    }
    let has_reference = (r, *ns.start(), *ns.end()) == REFERENCE;
    Ok(Table {
        r,
        columns,
        rows,
        cells,
        has_reference,
    })
}

impl Table {
    /// CSV with an `n\m` corner, one column per size and blank cells
    /// outside the critical range.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n\\m");
        for m in &self.columns {
            out.push_str(&format!(",{m}"));
        }
        out.push('\n');
        for (n, row) in &self.rows {
            out.push_str(&n.to_string());
            for v in row {
                out.push(',');
                if let Some(v) = v {
                    out.push_str(&v.to_string());
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("table serializes");
        if !self.has_reference {
            v["note"] = "no paper reference".into();
        }
        serde_json::to_string_pretty(&v).expect("json value serializes")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_layout() {
        let t = compute_table(4, 6..=8).unwrap();
        assert!(t.has_reference);
        assert_eq!(t.to_csv(), "n\\m,11,12,13,14,15,16\n6,7,8,,,,\n7,,8,7,7,,\n8,,,,8,8,8\n");
        assert_eq!(t.cells.len(), 8);
    }

    #[test]
    fn other_tables_are_flagged() {
        let t = compute_table(5, 7..=8).unwrap();
        assert!(!t.has_reference);
        assert!(t.to_json().contains("no paper reference"));
        assert!(compute_table(4, 6..=12).is_err());
    }
}
