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
//! Construction lookup by name.

use turan_reg::constructions::{self as c, Construction};

use crate::CliError;

pub const NAMES: &[&str] = &[
    "pentagon-blowup",
    "circulant-small-odd",
    "odd-girth-blowup",
    "apex-construction",
    "multipartite-regular",
    "kbe",
    "odd-half",
    "prop56-extremal",
    "conj55-equality",
    "star-forest-complement",
];

/// Parameters of a construction; each builder reads the ones it needs.
#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Deserialize, serde::Serialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub ell: Option<usize>,
    pub r: Option<usize>,
    pub x: Option<usize>,
    pub y: Option<usize>,
    /// Star sizes for a star forest.
    #[serde(default)]
    pub parts: Vec<usize>,
}

impl Params {
    fn get(&self, key: &str, name: &str) -> Result<usize, CliError> {
        let v = match key {
            "n" => self.n,
            "k" => self.k,
            "ell" => self.ell,
            "r" => self.r,
            "x" => self.x,
            _ => self.y,
        };
        v.ok_or_else(|| CliError::Parse(format!("{name} needs parameter {key}")))
    }
}

pub fn construct(name: &str, p: &Params) -> Result<Construction, CliError> {
    let built = match name {
        "pentagon-blowup" => c::pentagon_blowup(p.get("n", name)?),
        "circulant-small-odd" => c::circulant_small_odd(p.get("n", name)?),
        "odd-girth-blowup" => c::odd_girth_blowup(p.get("n", name)?, p.get("ell", name)?),
        "apex-construction" => c::apex_construction(p.get("n", name)?, p.get("k", name)?),
        "multipartite-regular" => c::multipartite_regular(p.get("n", name)?, p.get("r", name)?),
        "kbe" => c::kbe_graph(p.get("x", name)?, p.get("y", name)?),
        "odd-half" => c::odd_half_construction(p.get("n", name)?),
        "prop56-extremal" => c::prop56_extremal(p.get("k", name)?),
        "conj55-equality" => c::conj55_equality(p.get("n", name)?, p.get("k", name)?),
        "star-forest-complement" => c::star_forest_complement(p.get("n", name)?, &p.parts),
        _ => return Err(CliError::Parse(format!("unknown construction {name:?}; known: {}", NAMES.join(", ")))),
    };
    Ok(built?)
}
