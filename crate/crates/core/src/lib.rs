// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Curling numbers of integer sequences and of graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`sequence`]: curling number of a sequence, run decomposition, and the
//!   append-the-curling-number process.
//! * [`graph`]: simple undirected graphs, family generators and the graph
//!   operations (power, Cartesian product, join, corona, disjoint union).
//! * [`invariants`]: graph-level invariants `cn`, `cnc`, `ic` and `vartheta`.
//! * [`registry`]: closed-form predictions for graph families, one strategy
//!   object per formula, looked up by id.
//! * [`audit`]: parameter sweeps comparing predictions with values computed
//!   from explicitly constructed graphs, plus report rendering.

pub mod audit;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod registry;
pub mod sequence;

pub use error::{Error, Result};
