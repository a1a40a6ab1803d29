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

//! Amplitude kernels for each gate kind.
//!
//! Every kernel performs the same floating-point operations per amplitude in
//! both execution modes, so sequential and parallel runs agree bit for bit.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::gate::GateOp;

/// How a kernel walks the amplitude array.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Execution {
    /// Registers with at least this many amplitudes use rayon in [`Execution::auto`].
    pub const PARALLEL_THRESHOLD: usize = 1 << 14;

    /// Parallel for large registers when the feature is enabled, sequential otherwise.
    pub fn auto(len: usize) -> Self {
        #[cfg(feature = "parallel")]
        if len >= Self::PARALLEL_THRESHOLD {
            return Execution::Parallel;
        }
        let _ = len;
        Execution::Sequential
    }
}

#[cfg(feature = "parallel")]
const MIN_TASK_LEN: usize = 1 << 10;

#[inline]
fn mask(num_qubits: usize, qubit: usize) -> usize {
    1 << (num_qubits - 1 - qubit)
}

/// Applies `op` to `amps`. The caller has already validated the gate.
pub(crate) fn apply(amps: &mut [Complex64], num_qubits: usize, op: &GateOp, exec: Execution) {
    match op {
        GateOp::H(q) => for_each_pair(amps, mask(num_qubits, *q), exec, |a, b| {
            let (x, y) = (*a, *b);
            *a = (x + y) * FRAC_1_SQRT_2;
            *b = (x - y) * FRAC_1_SQRT_2;
        }),
        GateOp::X(q) => for_each_pair(amps, mask(num_qubits, *q), exec, std::mem::swap),
        GateOp::Z(q) => negate_where(amps, mask(num_qubits, *q), exec),
        GateOp::Mcz { controls, target } => {
            let m = controls
                .iter()
                .fold(mask(num_qubits, *target), |m, &c| m | mask(num_qubits, c));
            negate_where(amps, m, exec);
        }
        GateOp::Swap(a, b) => {
            let (ma, mb) = (mask(num_qubits, *a), mask(num_qubits, *b));
            permute(amps, exec, move |i| {
                if ((i & ma) == 0) != ((i & mb) == 0) {
                    i ^ ma ^ mb
                } else {
                    i
                }
            });
        }
        GateOp::Cswap { control, a, b } => {
            let mc = mask(num_qubits, *control);
            let (ma, mb) = (mask(num_qubits, *a), mask(num_qubits, *b));
            permute(amps, exec, move |i| {
                if i & mc != 0 && ((i & ma) == 0) != ((i & mb) == 0) {
                    i ^ ma ^ mb
                } else {
                    i
                }
            });
        }
    }
}

/// Calls `f(lo, hi)` for every index pair differing only in bit `m`.
fn for_each_pair<F>(amps: &mut [Complex64], m: usize, exec: Execution, f: F)
where
    F: Fn(&mut Complex64, &mut Complex64) + Sync + Send,
{
    match exec {
        Execution::Sequential => {
            for chunk in amps.chunks_mut(2 * m) {
                let (lo, hi) = chunk.split_at_mut(m);
                lo.iter_mut().zip(hi.iter_mut()).for_each(|(a, b)| f(a, b));
            }
        }
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            if m >= MIN_TASK_LEN {
                // few wide blocks: split inside each block
                for chunk in amps.chunks_mut(2 * m) {
                    let (lo, hi) = chunk.split_at_mut(m);
                    lo.par_iter_mut()
                        .zip(hi.par_iter_mut())
                        .with_min_len(MIN_TASK_LEN)
                        .for_each(|(a, b)| f(a, b));
                }
            } else {
                amps.par_chunks_mut(2 * m)
                    .with_min_len((MIN_TASK_LEN / (2 * m)).max(1))
                    .for_each(|chunk| {
                        let (lo, hi) = chunk.split_at_mut(m);
                        lo.iter_mut().zip(hi.iter_mut()).for_each(|(a, b)| f(a, b));
                    });
            }
        }
    }
}

/// Negates every amplitude whose index has all bits of `m` set.
fn negate_where(amps: &mut [Complex64], m: usize, exec: Execution) {
    let flip = move |(i, a): (usize, &mut Complex64)| {
        if i & m == m {
            *a = -*a;
        }
    };
    match exec {
        Execution::Sequential => amps.iter_mut().enumerate().for_each(flip),
        #[cfg(feature = "parallel")]
        Execution::Parallel => amps
            .par_iter_mut()
            .enumerate()
            .with_min_len(MIN_TASK_LEN)
            .for_each(flip),
    }
}

/// Applies an involutive index permutation `perm` to the amplitudes.
fn permute<P>(amps: &mut [Complex64], exec: Execution, perm: P)
where
    P: Fn(usize) -> usize + Sync + Send,
{
    match exec {
        Execution::Sequential => {
            for i in 0..amps.len() {
                let j = perm(i);
                if j > i {
                    amps.swap(i, j);
                }
            }
        }
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            let src = amps.to_vec();
            amps.par_iter_mut()
                .enumerate()
                .with_min_len(MIN_TASK_LEN)
                .for_each(|(i, a)| *a = src[perm(i)]);
        }
    }
}
