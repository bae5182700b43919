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
//! Verification suites as data. A manifest lists suites; each check names
//! one operation, its arguments and the expected outcome with a provenance
//! tag.

use serde::{Deserialize, Serialize};

use crate::build::Params;
use crate::CliError;

/// The manifest compiled into the binary.
pub const BUILTIN: &str = include_str!("../suites.toml");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    #[serde(rename = "PAPER")]
    Paper,
    #[serde(rename = "DERIVED")]
    Derived,
    #[serde(rename = "TRIVIAL")]
    Trivial,
}

impl Provenance {
    pub fn tag(&self) -> &'static str {
        match self {
            Provenance::Paper => "[PAPER]",
            Provenance::Derived => "[DERIVED]",
            Provenance::Trivial => "[TRIVIAL]",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Op {
    /// Exhaustive regular Turán number.
    Exr { n: usize, h: String },
    /// Closed-form regular Turán number.
    ExrClosedForm { n: usize, h: String },
    MaxKt { n: usize, m: usize, r: usize, t: usize },
    MaxKTotal { n: usize, m: usize, r: usize },
    MinTriangles { n: usize, k: usize },
    MaxCopies { n: usize, pattern: String, r: usize },
    ExC5 { r: usize },
    Conj55Bound { n: usize, k: usize },
    RPlusTwo { r: usize, m: usize },
    /// Value: number of `m` in `lo < m <= hi` of the critical range.
    CriticalWidth { n: usize, r: usize },
    /// Value: number of classes of order at most `n_max` with non-zero Goodman defect.
    GoodmanExhaustive { n_max: usize },
    /// Value: number of seeded random graphs with non-zero Goodman defect.
    GoodmanRandom { count: usize, n_max: usize },
    /// Value: number of star forests where the C5 formula and the count differ.
    C5StarForests { n_max: usize },
    /// Value: number of failed validator checks.
    Construct {
        name: String,
        #[serde(default)]
        params: Params,
    },
    /// Triangle count of a construction.
    ConstructTriangles {
        name: String,
        #[serde(default)]
        params: Params,
    },
}

/// Expected outcome; only the fields present are compared.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expect {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<u64>,
    /// The operation must fail (no graph, infeasible parameters, or an error).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub none: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<u64>,
    /// Clique counts `k_3, k_4, …` of the first witness.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<Vec<u64>>,
    /// Triangle counts of the witness complements, as a multiset.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complement_triangles: Option<Vec<u64>>,
    /// A witness isomorphic to this graph6 string must be present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// A witness isomorphic to this construction must be present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_construction: Option<WitnessConstruction>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessConstruction {
    pub name: String,
    #[serde(default)]
    pub params: Params,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckSpec {
    pub name: String,
    pub provenance: Provenance,
    pub op: Op,
    pub expect: Expect,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteSpec {
    pub id: String,
    #[serde(default)]
    pub description: String,
    #[serde(rename = "check", default)]
    pub checks: Vec<CheckSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    #[serde(rename = "suite", default)]
    pub suites: Vec<SuiteSpec>,
}

impl Manifest {
    pub fn suite(&self, id: &str) -> Result<&SuiteSpec, CliError> {
        self.suites.iter().find(|s| s.id == id).ok_or_else(|| {
            let known: Vec<&str> = self.suites.iter().map(|s| s.id.as_str()).collect();
            CliError::UnknownSuite(id.to_string(), known.join(", "))
        })
    }
}

/// Parses a manifest and rejects duplicate suite ids.
pub fn parse_manifest(text: &str) -> Result<Manifest, CliError> {
    let m: Manifest = toml::from_str(text).map_err(|e| CliError::Manifest(e.to_string()))?;
    let mut seen = std::collections::HashSet::new();
    for s in &m.suites {
        if !seen.insert(s.id.as_str()) {
            return Err(CliError::Manifest(format!("duplicate suite id {:?}", s.id)));
        }
    }
    Ok(m)
}
