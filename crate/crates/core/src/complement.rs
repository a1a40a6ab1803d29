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

//! Constant-depth one's-complement circuit.
//!
//! Layout for an `n`-bit reference and `k` copies: output register `c`
//! occupies qubits `c*n .. (c+1)*n`, the reference register sits last at
//! `k*n .. (k+1)*n`. Every output qubit starts in `|+>`; the reference
//! register is loaded with the complement of the reference bits (X on each
//! zero bit), so the CZ from reference qubit `i` turns output qubit `i` into
//! `|->` exactly when bit `i` is 0. A final H layer maps `|+>`/`|->` to
//! `|0>`/`|1>`.

use std::collections::BTreeSet;

use crate::basis::BasisLabel;
use crate::error::{Error, Result};
use crate::gate::{Circuit, GateOp};
use crate::measure::{probabilities, MeasurementDistribution};
use crate::state::StateVector;
use crate::MAX_QUBITS;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementSpec {
    reference: BasisLabel,
    mixed: BTreeSet<usize>,
    copies: usize,
}

impl ComplementSpec {
    /// `mixed` names reference positions put into superposition with an H
    /// after loading.
    pub fn new(
        reference: BasisLabel,
        mixed: impl IntoIterator<Item = usize>,
        copies: usize,
    ) -> Result<Self> {
        let n = reference.num_qubits();
        if copies == 0 {
            return Err(Error::InvalidArgument("copies must be at least 1".into()));
        }
        let total = n * (copies + 1);
        if total > MAX_QUBITS {
            return Err(Error::TooManyQubits {
                requested: total,
                max: MAX_QUBITS,
            });
        }
        let mixed: BTreeSet<usize> = mixed.into_iter().collect();
        if let Some(&q) = mixed.iter().find(|&&q| q >= n) {
            return Err(Error::QubitOutOfRange {
                index: q,
                num_qubits: n,
            });
        }
        Ok(ComplementSpec {
            reference,
            mixed,
            copies,
        })
    }

    /// Pure reference, one copy.
    pub fn pure(reference: BasisLabel) -> Self {
        ComplementSpec::new(reference, [], 1).expect("one copy of a valid label")
    }

    pub fn width(&self) -> usize {
        self.reference.num_qubits()
    }

    pub fn total_qubits(&self) -> usize {
        self.width() * (self.copies + 1)
    }

    pub fn reference(&self) -> &BasisLabel {
        &self.reference
    }

    pub fn mixed(&self) -> &BTreeSet<usize> {
        &self.mixed
    }

    pub fn copies(&self) -> usize {
        self.copies
    }

    pub fn output_qubit(&self, copy: usize, bit: usize) -> usize {
        copy * self.width() + bit
    }

    pub fn reference_qubit(&self, bit: usize) -> usize {
        self.copies * self.width() + bit
    }

    /// Qubits of output register `copy`.
    pub fn output_register(&self, copy: usize) -> Vec<usize> {
        (0..self.width())
            .map(|i| self.output_qubit(copy, i))
            .collect()
    }
}

/// Preparation, CZ fan-out and final Hadamard layer as separate circuits.
pub fn complement_stages(spec: &ComplementSpec) -> Result<[Circuit; 3]> {
    let n = spec.width();
    let total = spec.total_qubits();

    let mut prep = Circuit::new(total)?;
    for copy in 0..spec.copies {
        for i in 0..n {
            prep.push(GateOp::H(spec.output_qubit(copy, i)))?;
        }
    }
    for (i, bit) in spec.reference.bits().enumerate() {
        if !bit {
            prep.push(GateOp::X(spec.reference_qubit(i)))?;
        }
    }
    for &i in &spec.mixed {
        prep.push(GateOp::H(spec.reference_qubit(i)))?;
    }

    let mut fanout = Circuit::new(total)?;
    for copy in 0..spec.copies {
        for i in 0..n {
            fanout.push(GateOp::cz(
                spec.reference_qubit(i),
                spec.output_qubit(copy, i),
            ))?;
        }
    }

    let mut finish = Circuit::new(total)?;
    for copy in 0..spec.copies {
        for i in 0..n {
            finish.push(GateOp::H(spec.output_qubit(copy, i)))?;
        }
    }
    Ok([prep, fanout, finish])
}

pub fn build_ones_complement(spec: &ComplementSpec) -> Result<Circuit> {
    let mut c = Circuit::new(spec.total_qubits())?;
    for stage in complement_stages(spec)? {
        c.append(&stage)?;
    }
    Ok(c)
}

/// Final joint state over all registers.
pub fn simulate_ones_complement(spec: &ComplementSpec) -> Result<StateVector> {
    StateVector::simulate(&build_ones_complement(spec)?)
}

/// Distribution of the first output register.
pub fn run_ones_complement(spec: &ComplementSpec) -> Result<MeasurementDistribution> {
    probabilities(&simulate_ones_complement(spec)?).marginalize(&spec.output_register(0))
}

/// `(n, depth)` for a single-copy, all-zeros reference of each width.
pub fn complement_depth_profile(widths: &[usize]) -> Result<Vec<(usize, usize)>> {
    if widths.is_empty() {
        return Err(Error::InvalidArgument("no widths given".into()));
    }
    widths
        .iter()
        .map(|&n| {
            if n == 0 || n > 10 {
                return Err(Error::InvalidArgument(format!(
                    "width must be in 1..=10, got {n}"
                )));
            }
            let spec = ComplementSpec::pure(BasisLabel::from_index(0, n));
            Ok((n, build_ones_complement(&spec)?.depth()))
        })
        .collect()
}
