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

//! Dense statevectors and single-qubit states.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::basis::BasisLabel;
use crate::error::{Error, Result};
use crate::gate::{Circuit, GateOp};
use crate::kernels::{self, Execution};
use crate::MAX_QUBITS;

/// Tolerance on `sum |a|^2 - 1` accepted for a state to count as normalized.
pub const NORM_TOL: f64 = 1e-10;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A normalized single-qubit pure state `alpha|0> + beta|1>`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QubitState {
    amps: [Complex64; 2],
}

impl QubitState {
    pub const ZERO: QubitState = QubitState { amps: [ONE, ZERO] };
    pub const ONE: QubitState = QubitState { amps: [ZERO, ONE] };
    pub const PLUS: QubitState = QubitState {
        amps: [
            Complex64::new(FRAC_1_SQRT_2, 0.0),
            Complex64::new(FRAC_1_SQRT_2, 0.0),
        ],
    };
    pub const MINUS: QubitState = QubitState {
        amps: [
            Complex64::new(FRAC_1_SQRT_2, 0.0),
            Complex64::new(-FRAC_1_SQRT_2, 0.0),
        ],
    };

    /// Fails unless `|alpha|^2 + |beta|^2 = 1` within `1e-12`.
    pub fn new(alpha: Complex64, beta: Complex64) -> Result<Self> {
        let norm = alpha.norm_sqr() + beta.norm_sqr();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::NotNormalized(norm));
        }
        Ok(QubitState {
            amps: [alpha, beta],
        })
    }

    /// Rescales `(alpha, beta)` to unit norm.
    pub fn normalized(alpha: Complex64, beta: Complex64) -> Result<Self> {
        let norm = (alpha.norm_sqr() + beta.norm_sqr()).sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NotNormalized(norm * norm));
        }
        Ok(QubitState {
            amps: [alpha / norm, beta / norm],
        })
    }

    pub fn amplitudes(&self) -> [Complex64; 2] {
        self.amps
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &QubitState) -> Complex64 {
        self.amps[0].conj() * other.amps[0] + self.amps[1].conj() * other.amps[1]
    }
}

/// The full `2^n` amplitude vector of an `n`-qubit register.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amps: Vec<Complex64>,
}

fn check_qubits(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroQubits);
    }
    if n > MAX_QUBITS {
        return Err(Error::TooManyQubits {
            requested: n,
            max: MAX_QUBITS,
        });
    }
    Ok(())
}

impl StateVector {
    /// `|0...0>` on `n` qubits.
    pub fn zero(num_qubits: usize) -> Result<Self> {
        check_qubits(num_qubits)?;
        let mut amps = vec![ZERO; 1 << num_qubits];
        amps[0] = ONE;
        Ok(StateVector { num_qubits, amps })
    }

    /// The computational basis state named by `label`.
    pub fn new_basis(label: &BasisLabel) -> Result<Self> {
        let mut s = StateVector::zero(label.num_qubits())?;
        s.amps[0] = ZERO;
        s.amps[label.index()] = ONE;
        Ok(s)
    }

    /// The equal superposition `2^{-n/2} sum_i |i>`.
    pub fn new_uniform(num_qubits: usize) -> Result<Self> {
        check_qubits(num_qubits)?;
        let len = 1usize << num_qubits;
        let a = Complex64::new(1.0 / (len as f64).sqrt(), 0.0);
        Ok(StateVector {
            num_qubits,
            amps: vec![a; len],
        })
    }

    /// Wraps raw amplitudes; the length must be a power of two and the
    /// vector normalized within [`NORM_TOL`].
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::BadDimension(len));
        }
        let num_qubits = len.trailing_zeros() as usize;
        check_qubits(num_qubits)?;
        let s = StateVector { num_qubits, amps };
        let norm = s.norm_sqr();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm));
        }
        Ok(s)
    }

    /// Real amplitudes scaled by `scale`, e.g. `from_real(&[1., 0., 1., 0.], FRAC_1_SQRT_2)`.
    pub fn from_real(values: &[f64], scale: f64) -> Result<Self> {
        StateVector::from_amplitudes(
            values
                .iter()
                .map(|&v| Complex64::new(v * scale, 0.0))
                .collect(),
        )
    }

    /// Tensor product; `qubits[0]` becomes qubit 0.
    pub fn product(qubits: &[QubitState]) -> Result<Self> {
        check_qubits(qubits.len())?;
        let mut amps = vec![ONE];
        for q in qubits {
            amps = amps
                .iter()
                .flat_map(|&a| [a * q.amps[0], a * q.amps[1]])
                .collect();
        }
        Ok(StateVector {
            num_qubits: qubits.len(),
            amps,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitude(&self, label: &BasisLabel) -> Complex64 {
        self.amps[label.index()]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(Complex64::norm_sqr).sum()
    }

    pub fn apply_op(&mut self, op: &GateOp) -> Result<()> {
        self.apply_op_with(op, Execution::auto(self.amps.len()))
    }

    /// Applies `op` with an explicit execution mode.
    pub fn apply_op_with(&mut self, op: &GateOp, exec: Execution) -> Result<()> {
        op.validate(self.num_qubits)?;
        kernels::apply(&mut self.amps, self.num_qubits, op, exec);
        Ok(())
    }

    pub fn apply_circuit(&mut self, circuit: &Circuit) -> Result<()> {
        self.apply_circuit_with(circuit, Execution::auto(self.amps.len()))
    }

    pub fn apply_circuit_with(&mut self, circuit: &Circuit, exec: Execution) -> Result<()> {
        if circuit.num_qubits() != self.num_qubits {
            return Err(Error::QubitCountMismatch {
                expected: self.num_qubits,
                found: circuit.num_qubits(),
            });
        }
        for op in circuit.ops() {
            kernels::apply(&mut self.amps, self.num_qubits, op, exec);
        }
        Ok(())
    }

    /// Returns the evolved state, leaving `self` untouched.
    pub fn evolved(&self, circuit: &Circuit) -> Result<Self> {
        let mut out = self.clone();
        out.apply_circuit(circuit)?;
        Ok(out)
    }

    /// Runs `circuit` on `|0...0>`.
    pub fn simulate(circuit: &Circuit) -> Result<Self> {
        let mut s = StateVector::zero(circuit.num_qubits())?;
        s.apply_circuit(circuit)?;
        Ok(s)
    }

    /// Largest entrywise `|a_i - b_i|`.
    pub fn max_abs_diff(&self, other: &StateVector) -> Result<f64> {
        self.same_size(other)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    fn same_size(&self, other: &StateVector) -> Result<()> {
        if self.num_qubits != other.num_qubits {
            return Err(Error::QubitCountMismatch {
                expected: self.num_qubits,
                found: other.num_qubits,
            });
        }
        Ok(())
    }
}

/// True when `a = c * b` entrywise within `tol` for some unit complex `c`.
///
/// `c` is the phase of `a_j / b_j` at the index `j` where `|b_j|` is largest.
pub fn equal_up_to_global_phase(a: &StateVector, b: &StateVector, tol: f64) -> Result<bool> {
    a.same_size(b)?;
    let (j, bj) = b.amps.iter().enumerate().fold((0, 0.0), |best, (i, x)| {
        if x.norm() > best.1 {
            (i, x.norm())
        } else {
            best
        }
    });
    let phase = if bj == 0.0 {
        ONE
    } else {
        let ratio = a.amps[j] / b.amps[j];
        if ratio.norm() == 0.0 {
            return Ok(false);
        }
        ratio / ratio.norm()
    };
    Ok(a.amps
        .iter()
        .zip(&b.amps)
        .all(|(x, y)| (x - phase * y).norm() <= tol))
}
