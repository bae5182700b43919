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
//! Names for patterns and forbidden families on the command line and in
//! suite manifests.

use turan_reg::formulas::FamilySpec;
use turan_reg::search::HSpec;
use turan_reg::{graph6, named, Graph};

use crate::CliError;

fn number(s: &str, what: &str) -> Result<usize, CliError> {
    s.parse().map_err(|_| CliError::Parse(format!("bad {what} in {s:?}")))
}

/// `Kt`, `Cl`, `Pl`, `Ss` (star with `s` leaves), `Ka,b`, or a graph6 string.
pub fn pattern(s: &str) -> Result<Graph, CliError> {
    let s = s.trim();
    let rest = |p: char| s.strip_prefix(p).filter(|r| !r.is_empty() && r.chars().all(|c| c.is_ascii_digit() || c == ','));
    if let Some(r) = rest('K') {
        if let Some((a, b)) = r.split_once(',') {
            return Ok(named::complete_bipartite(number(a, "side")?, number(b, "side")?));
        }
        return Ok(named::complete(number(r, "clique order")?));
    }
    if let Some(r) = rest('C') {
        let l = number(r, "cycle length")?;
        if l < 3 {
            return Err(CliError::Parse(format!("cycle length {l} is below 3")));
        }
        return Ok(named::cycle(l));
    }
    if let Some(r) = rest('P') {
        return Ok(named::path(number(r, "path order")?));
    }
    if let Some(r) = rest('S') {
        return Ok(named::star(number(r, "star size")?));
    }
    graph6::decode(s).map_err(|e| CliError::Parse(format!("{s:?} is neither a pattern name nor graph6: {e}")))
}

/// `K3`, `C<odd>` (a single odd cycle), `C3..C<odd>` (all odd cycles up to
/// that length), or any pattern accepted by [`pattern`].
pub fn forbidden(s: &str) -> Result<HSpec, CliError> {
    let s = s.trim();
    if s == "K3" || s == "C3" {
        return Ok(HSpec::Family(FamilySpec::Triangle));
    }
    if let Some(top) = s.strip_prefix("C3..C") {
        let l = number(top, "cycle length")?;
        if l % 2 == 0 || l < 3 {
            return Err(CliError::Parse(format!("C3..C{l} needs an odd upper length")));
        }
        return Ok(HSpec::Family(FamilySpec::OddCyclePrefix { ell: l.div_ceil(2) }));
    }
    if let Some(r) = s.strip_prefix('C') {
        if let Ok(l) = r.parse::<usize>() {
            if l % 2 == 1 && l >= 5 {
                return Ok(HSpec::Family(FamilySpec::OddCycle { ell: l.div_ceil(2) }));
            }
        }
    }
    Ok(HSpec::Graph(pattern(s)?))
}
