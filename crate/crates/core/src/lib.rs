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
//! Regular Turán numbers and clique-maximisation values at small scale.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`], [`graph6`], [`edgelist`], [`named`]: the graph value type and its I/O.
//! * [`census`], [`girth`], [`containment`], [`canon`]: counting, odd girth,
//!   subgraph containment and canonical labeling.
//! * [`formulas`]: closed forms and counting identities.
//! * [`constructions`]: the extremal and equality constructions, each with a
//!   machine-checkable certificate.
//! * [`enumeration`]: isomorph-free generation by canonical augmentation.
//! * [`search`], [`probe`]: exact extremal searches and conjecture probes.

pub mod canon;
pub mod census;
pub mod constructions;
pub mod containment;
pub mod edgelist;
pub mod enumeration;
pub mod formulas;
pub mod girth;
pub mod graph;
pub mod graph6;
pub mod named;
pub mod probe;
pub mod search;

pub use canon::{canonical_label, CanonicalLabel};
pub use graph::{Graph, GraphError};
