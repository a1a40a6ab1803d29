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

//! Exact statevector simulation of small search and orthogonality circuits.
//!
//! The crate is organised bottom-up:
//!
//! * [`state`], [`gate`], [`measure`] and [`dense`] form the simulation
//!   substrate: a dense amplitude vector, gate kernels, measurement
//!   distributions with seeded sampling, and a brute-force unitary builder
//!   used to cross-check the kernels.
//! * [`grover`] builds phase and ancilla oracles, the standard diffuser and
//!   the string-detection experiments.
//! * [`swap_test`] covers the controlled-SWAP orthogonality test and the
//!   search-based orthogonal-vector circuit built on top of it.
//! * [`mgsa`] implements the real-amplitude recurrence for searching from an
//!   arbitrary initial distribution, including the support-flipping variant.
//! * [`complement`] builds the constant-depth one's-complement circuit.
//! * [`dsl`] parses and prints the line-oriented `.qc` circuit format.
//!
//! Gate kernels run on rayon when the `parallel` feature is enabled (the
//! default) and the register is large enough; results are bit-identical to
//! the sequential path.

pub mod basis;
pub mod complement;
pub mod dense;
pub mod dsl;
pub mod error;
pub mod gate;
pub mod grover;
mod kernels;
pub mod measure;
pub mod mgsa;
pub mod state;

pub use basis::BasisLabel;
pub use error::{Error, Result};
pub use gate::{Circuit, GateOp};
pub use kernels::Execution;
pub use measure::{MeasurementDistribution, SampleHistogram};
pub use state::{QubitState, StateVector};

pub use num_complex::Complex64;

/// Largest register the simulator accepts.
pub const MAX_QUBITS: usize = 24;
