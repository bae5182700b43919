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
//! Command-line layer: name parsing, construction lookup, suite manifests,
//! suite execution and table output.

pub mod build;
pub mod manifest;
pub mod parse;
pub mod suite;
pub mod table;

use turan_reg::constructions::ConstructionError;
use turan_reg::enumeration::EnumerationError;
use turan_reg::formulas::FormulaError;
use turan_reg::search::SearchError;
use turan_reg::GraphError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("unknown suite {0:?}; known suites: {1}")]
    UnknownSuite(String, String),
    #[error("manifest: {0}")]
    Manifest(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
