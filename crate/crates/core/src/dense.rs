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

//! Brute-force dense unitaries, built entry by entry from each gate's
//! definition. Shares no code with the amplitude kernels, which makes it a
//! usable cross-check for them.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gate::{Circuit, GateOp};
use crate::state::StateVector;

/// Largest register [`dense_matrix`] will expand.
pub const MAX_DENSE_QUBITS: usize = 10;

pub type Unitary = DMatrix<Complex64>;

fn bit(index: usize, num_qubits: usize, qubit: usize) -> usize {
    (index >> (num_qubits - 1 - qubit)) & 1
}

fn single_qubit_entry(g: &[[f64; 2]; 2], n: usize, q: usize, r: usize, c: usize) -> Complex64 {
    let others = !(1usize << (n - 1 - q));
    if r & others != c & others {
        return Complex64::new(0.0, 0.0);
    }
    Complex64::new(g[bit(r, n, q)][bit(c, n, q)], 0.0)
}

fn swapped(index: usize, n: usize, a: usize, b: usize) -> usize {
    let (ba, bb) = (bit(index, n, a), bit(index, n, b));
    let mut out = index;
    out &= !(1 << (n - 1 - a)) & !(1 << (n - 1 - b));
    out | (bb << (n - 1 - a)) | (ba << (n - 1 - b))
}

/// The `2^n x 2^n` matrix of a single gate.
pub fn op_matrix(op: &GateOp, num_qubits: usize) -> Result<Unitary> {
    op.validate(num_qubits)?;
    let n = num_qubits;
    let dim = 1usize << n;
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let m = match op {
        GateOp::H(q) => DMatrix::from_fn(dim, dim, |r, c| {
            single_qubit_entry(&[[h, h], [h, -h]], n, *q, r, c)
        }),
        GateOp::X(q) => DMatrix::from_fn(dim, dim, |r, c| {
            single_qubit_entry(&[[0.0, 1.0], [1.0, 0.0]], n, *q, r, c)
        }),
        GateOp::Z(q) => DMatrix::from_fn(dim, dim, |r, c| {
            single_qubit_entry(&[[1.0, 0.0], [0.0, -1.0]], n, *q, r, c)
        }),
        GateOp::Mcz { controls, target } => DMatrix::from_fn(dim, dim, |r, c| {
            if r != c {
                zero
            } else if bit(r, n, *target) == 1 && controls.iter().all(|&q| bit(r, n, q) == 1) {
                -one
            } else {
                one
            }
        }),
        GateOp::Swap(a, b) => DMatrix::from_fn(dim, dim, |r, c| {
            if r == swapped(c, n, *a, *b) {
                one
            } else {
                zero
            }
        }),
        GateOp::Cswap { control, a, b } => DMatrix::from_fn(dim, dim, |r, c| {
            let image = if bit(c, n, *control) == 1 {
                swapped(c, n, *a, *b)
            } else {
                c
            };
            if r == image {
                one
            } else {
                zero
            }
        }),
    };
    Ok(m)
}

/// Product of the per-gate matrices, later gates on the left.
pub fn dense_matrix(circuit: &Circuit) -> Result<Unitary> {
    let n = circuit.num_qubits();
    if n > MAX_DENSE_QUBITS {
        return Err(Error::TooManyQubits {
            requested: n,
            max: MAX_DENSE_QUBITS,
        });
    }
    let mut u = Unitary::identity(1 << n, 1 << n);
    for op in circuit.ops() {
        u = op_matrix(op, n)? * u;
    }
    Ok(u)
}

/// `u * |state>` as a new statevector (normalization is not re-checked).
pub fn apply_dense(u: &Unitary, state: &StateVector) -> Result<StateVector> {
    if u.nrows() != state.amplitudes().len() {
        return Err(Error::QubitCountMismatch {
            expected: u.nrows().trailing_zeros() as usize,
            found: state.num_qubits(),
        });
    }
    let v = DVector::from_column_slice(state.amplitudes());
    StateVector::from_amplitudes((u * v).iter().copied().collect())
}

/// Largest entry of `|U^dagger U - I|`.
pub fn unitarity_defect(u: &Unitary) -> f64 {
    let prod = u.adjoint() * u;
    prod.iter()
        .enumerate()
        .map(|(k, z)| {
            let (r, c) = (k % prod.nrows(), k / prod.nrows());
            let target = if r == c { 1.0 } else { 0.0 };
            (z - target).norm()
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_hadamard() {
        let c = Circuit::from_ops(1, [GateOp::H(0)]).unwrap();
        let u = dense_matrix(&c).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert_eq!(u[(0, 0)].re, h);
        assert_eq!(u[(0, 1)].re, h);
        assert_eq!(u[(1, 0)].re, h);
        assert_eq!(u[(1, 1)].re, -h);
    }

    #[test]
    fn qubit_zero_is_most_significant() {
        let c = Circuit::from_ops(2, [GateOp::X(0)]).unwrap();
        let u = dense_matrix(&c).unwrap();
        // |00> -> |10> (index 2)
        assert_eq!(u[(2, 0)].re, 1.0);
    }

    #[test]
    fn gates_are_unitary() {
        let ops = [
            GateOp::H(1),
            GateOp::mcz([0, 2], 1),
            GateOp::Swap(0, 2),
            GateOp::cswap(2, 1, 0),
        ];
        for op in ops {
            let c = Circuit::from_ops(3, [op]).unwrap();
            assert!(unitarity_defect(&dense_matrix(&c).unwrap()) < 1e-12);
        }
    }

    #[test]
    fn refuses_large_registers() {
        let c = Circuit::new(11).unwrap();
        assert!(matches!(dense_matrix(&c), Err(Error::TooManyQubits { .. })));
    }
}
