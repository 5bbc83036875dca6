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

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("undefined on empty sequence")]
    EmptySequence,
    #[error("undefined on empty decomposition")]
    EmptyDecomposition,
    #[error("undefined on empty graph")]
    EmptyGraph,
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("unknown formula `{0}`")]
    UnknownFormula(String),
    #[error("unknown strategy `{0}`")]
    UnknownStrategy(String),
    #[error("missing parameter `{0}`")]
    MissingParameter(String),
    #[error("sweep has {points} points, exceeding the cap of {cap}")]
    CapExceeded { points: usize, cap: usize },
    #[error("malformed edge list: {0}")]
    EdgeList(String),
    #[error("malformed generator spec `{spec}`: {reason}")]
    GeneratorSpec { spec: String, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }
}
