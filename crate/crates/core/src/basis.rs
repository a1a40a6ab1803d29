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

//! Bitstring labels for computational basis states.
//!
//! The leftmost character is qubit 0 and carries the highest weight in the
//! amplitude index: `index = sum_i bit_i * 2^(n-1-i)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A computational basis state written as a `'0'`/`'1'` string.
///
/// Labels of equal length order lexicographically, which coincides with
/// their amplitude index order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisLabel(String);

impl BasisLabel {
    pub fn new(bits: &str) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::InvalidLabel {
                label: String::new(),
                reason: "empty bitstring",
            });
        }
        if bits.chars().any(|c| c != '0' && c != '1') {
            return Err(Error::InvalidLabel {
                label: bits.to_string(),
                reason: "only '0' and '1' are allowed",
            });
        }
        if bits.len() > 64 {
            return Err(Error::InvalidLabel {
                label: bits.to_string(),
                reason: "longer than 64 bits",
            });
        }
        Ok(BasisLabel(bits.to_string()))
    }

    /// Label of amplitude `index` in an `num_qubits` register.
    pub fn from_index(index: usize, num_qubits: usize) -> Self {
        debug_assert!((1..=64).contains(&num_qubits));
        let bits = (0..num_qubits)
            .map(|q| {
                if (index >> (num_qubits - 1 - q)) & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect();
        BasisLabel(bits)
    }

    pub fn index(&self) -> usize {
        self.0
            .bytes()
            .fold(0usize, |acc, b| (acc << 1) | usize::from(b == b'1'))
    }

    pub fn num_qubits(&self) -> usize {
        self.0.len()
    }

    pub fn bit(&self, qubit: usize) -> bool {
        self.0.as_bytes()[qubit] == b'1'
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        self.0.bytes().map(|b| b == b'1')
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Bitwise NOT of the label.
    pub fn complement(&self) -> Self {
        BasisLabel(
            self.0
                .chars()
                .map(|c| if c == '0' { '1' } else { '0' })
                .collect(),
        )
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for BasisLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BasisLabel::new(s)
    }
}
