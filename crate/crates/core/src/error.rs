// Copyright 2026 The qovp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid basis label {label:?}: {reason}")]
    InvalidLabel { label: String, reason: &'static str },

    #[error("a register needs at least one qubit")]
    ZeroQubits,

    #[error("{requested} qubits exceeds the limit of {max}")]
    TooManyQubits { requested: usize, max: usize },

    #[error("qubit {index} is out of range for a {num_qubits}-qubit register")]
    QubitOutOfRange { index: usize, num_qubits: usize },

    #[error("qubit {0} appears more than once in a single gate")]
    DuplicateQubit(usize),

    #[error("qubit count mismatch: expected {expected}, got {found}")]
    QubitCountMismatch { expected: usize, found: usize },

    #[error("state is not normalized (squared norm {0})")]
    NotNormalized(f64),

    #[error("amplitude count {0} is not a power of two")]
    BadDimension(usize),

    #[error("shots must be at least 1")]
    ZeroShots,

    #[error("singular constraint system")]
    Singular,

    #[error("invalid winner set: {0}")]
    InvalidWinners(String),

    #[error("{0}")]
    InvalidArgument(String),
}
