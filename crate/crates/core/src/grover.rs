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

//! Grover search on a register of `n` data qubits.
//!
//! Two oracle styles are provided. The direct phase oracle sandwiches one
//! multi-controlled Z per winner between X gates on that winner's zero bits.
//! The ancilla oracle does the same but targets an extra qubit `n`, which
//! the experiment prepares in `|1>` so the Z imprints the phase kickback.

use std::collections::BTreeSet;
use std::f64::consts::FRAC_PI_4;

use crate::basis::BasisLabel;
use crate::error::{Error, Result};
use crate::gate::{Circuit, GateOp};
use crate::measure::{probabilities, MeasurementDistribution};
use crate::state::StateVector;

/// The marked bitstrings of a search instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WinnerSet {
    num_qubits: usize,
    winners: BTreeSet<BasisLabel>,
}

impl WinnerSet {
    pub fn new(num_qubits: usize, winners: impl IntoIterator<Item = BasisLabel>) -> Result<Self> {
        if num_qubits == 0 {
            return Err(Error::ZeroQubits);
        }
        let mut set = BTreeSet::new();
        for w in winners {
            if w.num_qubits() != num_qubits {
                return Err(Error::InvalidWinners(format!(
                    "{w} has {} bits, expected {num_qubits}",
                    w.num_qubits()
                )));
            }
            if !set.insert(w.clone()) {
                return Err(Error::InvalidWinners(format!("{w} listed twice")));
            }
        }
        if set.is_empty() {
            return Err(Error::InvalidWinners("no winners given".into()));
        }
        if num_qubits < usize::BITS as usize && set.len() >= 1 << num_qubits {
            return Err(Error::InvalidWinners("every basis state is marked".into()));
        }
        Ok(WinnerSet {
            num_qubits,
            winners: set,
        })
    }

    /// Parses bitstrings; the register width is taken from the first one.
    pub fn from_strs<S: AsRef<str>>(bits: &[S]) -> Result<Self> {
        let labels = bits
            .iter()
            .map(|b| BasisLabel::new(b.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let n = labels
            .first()
            .map(BasisLabel::num_qubits)
            .ok_or_else(|| Error::InvalidWinners("no winners given".into()))?;
        WinnerSet::new(n, labels)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn len(&self) -> usize {
        self.winners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.winners.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &BasisLabel> {
        self.winners.iter()
    }

    pub fn contains(&self, label: &BasisLabel) -> bool {
        self.winners.contains(label)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OracleStyle {
    /// Phase flips applied directly on the data register.
    DirectPhase,
    /// Multi-controlled Z onto an ancilla held in `|1>`.
    AncillaMcmt,
}

/// Oracle style and iteration count for one search run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroverPlan {
    pub oracle_style: OracleStyle,
    pub iterations: usize,
}

impl GroverPlan {
    /// Uses [`recommended_iterations`] for the given winner set.
    pub fn recommended(ws: &WinnerSet, oracle_style: OracleStyle) -> Result<Self> {
        Ok(GroverPlan {
            oracle_style,
            iterations: recommended_iterations(1 << ws.num_qubits(), ws.len())?,
        })
    }

    pub fn run(&self, ws: &WinnerSet) -> Result<MeasurementDistribution> {
        run_sdp(ws, self.iterations, self.oracle_style)
    }
}

fn sandwich(c: &mut Circuit, winner: &BasisLabel, mcz: GateOp) -> Result<()> {
    let zeros: Vec<usize> = winner
        .bits()
        .enumerate()
        .filter(|(_, b)| !b)
        .map(|(q, _)| q)
        .collect();
    for &q in &zeros {
        c.push(GateOp::X(q))?;
    }
    c.push(mcz)?;
    for &q in &zeros {
        c.push(GateOp::X(q))?;
    }
    Ok(())
}

/// Circuit on `n` qubits mapping `|x>` to `(-1)^{[x in ws]} |x>`.
pub fn build_phase_oracle(ws: &WinnerSet) -> Result<Circuit> {
    let n = ws.num_qubits();
    let mut c = Circuit::new(n)?;
    for w in ws.iter() {
        sandwich(&mut c, w, GateOp::mcz(0..n - 1, n - 1))?;
    }
    Ok(c)
}

/// Circuit on `n + 1` qubits; qubit `n` is the ancilla.
pub fn build_ancilla_oracle(ws: &WinnerSet) -> Result<Circuit> {
    let n = ws.num_qubits();
    let mut c = Circuit::new(n + 1)?;
    for w in ws.iter() {
        sandwich(&mut c, w, GateOp::mcz(0..n, n))?;
    }
    Ok(c)
}

/// The oracle that only checks two qubits with a bare CZ. For the 4-qubit
/// winner `0110` on qubits (1, 2) this marks all four `|i11j>` states.
pub fn build_naive_cz_oracle(num_qubits: usize, a: usize, b: usize) -> Result<Circuit> {
    Circuit::from_ops(num_qubits, [GateOp::cz(a, b)])
}

/// The five layers of the diffuser: H, X, MCZ, X, H.
pub fn diffuser_stages(num_qubits: usize) -> Result<[Circuit; 5]> {
    let n = num_qubits;
    let layer = |make: fn(usize) -> GateOp| Circuit::from_ops(n, (0..n).map(make));
    Ok([
        layer(GateOp::H)?,
        layer(GateOp::X)?,
        Circuit::from_ops(
            n,
            [GateOp::mcz(0..n.saturating_sub(1), n.saturating_sub(1))],
        )?,
        layer(GateOp::X)?,
        layer(GateOp::H)?,
    ])
}

/// Reflection about the uniform state, equal to `-(2|s><s| - I)`.
pub fn build_diffuser(num_qubits: usize) -> Result<Circuit> {
    let mut c = Circuit::new(num_qubits)?;
    for stage in diffuser_stages(num_qubits)? {
        c.append(&stage)?;
    }
    Ok(c)
}

/// `floor(pi/4 * sqrt(N/k))`, at least 1.
pub fn recommended_iterations(num_states: usize, num_winners: usize) -> Result<usize> {
    if num_winners == 0 || num_winners >= num_states {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= k < N, got k = {num_winners}, N = {num_states}"
        )));
    }
    let t = (FRAC_PI_4 * (num_states as f64 / num_winners as f64).sqrt()).floor() as usize;
    Ok(t.max(1))
}

/// Full string-detection circuit from `|0...0>`: register preparation, then
/// `iterations` rounds of oracle and diffuser on the data qubits.
pub fn sdp_circuit(ws: &WinnerSet, iterations: usize, style: OracleStyle) -> Result<Circuit> {
    let n = ws.num_qubits();
    match style {
        OracleStyle::DirectPhase => search_circuit(n, &build_phase_oracle(ws)?, iterations),
        OracleStyle::AncillaMcmt => {
            let mut c = Circuit::new(n + 1)?;
            c.push(GateOp::X(n))?;
            for q in 0..n {
                c.push(GateOp::H(q))?;
            }
            let data: Vec<usize> = (0..n).collect();
            let oracle = build_ancilla_oracle(ws)?;
            let diffuser = build_diffuser(n)?;
            for _ in 0..iterations {
                c.append(&oracle)?;
                c.append_mapped(&diffuser, &data)?;
            }
            Ok(c)
        }
    }
}

/// Hadamard layer followed by `iterations` rounds of `oracle` + diffuser,
/// all on an `n`-qubit register.
pub fn search_circuit(num_qubits: usize, oracle: &Circuit, iterations: usize) -> Result<Circuit> {
    let mut c = Circuit::from_ops(num_qubits, (0..num_qubits).map(GateOp::H))?;
    let diffuser = build_diffuser(num_qubits)?;
    for _ in 0..iterations {
        c.append(oracle)?;
        c.append(&diffuser)?;
    }
    Ok(c)
}

/// Runs a string-detection experiment and reports the data-register distribution.
pub fn run_sdp(
    ws: &WinnerSet,
    iterations: usize,
    style: OracleStyle,
) -> Result<MeasurementDistribution> {
    let c = sdp_circuit(ws, iterations, style)?;
    let dist = probabilities(&StateVector::simulate(&c)?);
    match style {
        OracleStyle::DirectPhase => Ok(dist),
        OracleStyle::AncillaMcmt => dist.marginalize(&(0..ws.num_qubits()).collect::<Vec<_>>()),
    }
}

/// `sin^2((2t + 1) theta)` with `sin theta = sqrt(k / N)`.
pub fn closed_form_success_probability(
    num_states: usize,
    num_winners: usize,
    iterations: usize,
) -> Result<f64> {
    if num_winners == 0 || 2 * num_winners > num_states {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= k <= N/2, got k = {num_winners}, N = {num_states}"
        )));
    }
    let theta = (num_winners as f64 / num_states as f64).sqrt().asin();
    Ok(((2 * iterations + 1) as f64 * theta).sin().powi(2))
}

/// Total probability assigned to the winners.
pub fn success_probability(dist: &MeasurementDistribution, ws: &WinnerSet) -> f64 {
    ws.iter().map(|w| dist.get(w)).sum()
}
