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

//! Real-amplitude search recurrence for arbitrary initial distributions.
//!
//! With `d(t) = 2/N * (sum_j l_j(t) - sum_i k_i(t))` over unmarked
//! amplitudes `l_j` and marked amplitudes `k_i`, one step is
//!
//! ```text
//! k_i(t+1) = d(t) + k_i(t)
//! l_j(t+1) = d(t) - l_j(t)
//! ```
//!
//! which is a phase flip of the marked states followed by inversion about
//! the mean. No Hadamard layer is applied: the caller supplies the
//! starting amplitudes directly.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Per-entry tolerance when comparing amplitude vectors for periodicity.
pub const PERIOD_TOL: f64 = 1e-10;

/// Amplitudes at iteration `t`, split into marked and unmarked indices.
#[derive(Clone, Debug, PartialEq)]
pub struct MgsaState {
    num_states: usize,
    marked: BTreeSet<usize>,
    amplitudes: Vec<f64>,
    iteration: usize,
}

impl MgsaState {
    /// `amplitudes.len()` must be a power of two `N >= 2`, the vector must be
    /// normalized within `1e-10`, and at most `N/2` indices may be marked.
    pub fn new(amplitudes: Vec<f64>, marked: impl IntoIterator<Item = usize>) -> Result<Self> {
        let n = amplitudes.len();
        if n < 2 || !n.is_power_of_two() {
            return Err(Error::BadDimension(n));
        }
        let norm: f64 = amplitudes.iter().map(|a| a * a).sum();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::NotNormalized(norm));
        }
        let marked: BTreeSet<usize> = marked.into_iter().collect();
        if let Some(&i) = marked.iter().find(|&&i| i >= n) {
            return Err(Error::InvalidArgument(format!(
                "marked index {i} out of range for {n} states"
            )));
        }
        if 2 * marked.len() > n {
            return Err(Error::InvalidArgument(format!(
                "{} marked states exceeds N/2 = {}",
                marked.len(),
                n / 2
            )));
        }
        Ok(MgsaState {
            num_states: n,
            marked,
            amplitudes,
            iteration: 0,
        })
    }

    /// Equal amplitudes on every state.
    pub fn uniform(num_states: usize, marked: impl IntoIterator<Item = usize>) -> Result<Self> {
        let a = 1.0 / (num_states as f64).sqrt();
        MgsaState::new(vec![a; num_states], marked)
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn marked(&self) -> &BTreeSet<usize> {
        &self.marked
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.amplitudes
    }

    pub fn iteration(&self) -> usize {
        self.iteration
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a * a).collect()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a * a).sum()
    }

    /// Indices with nonzero amplitude.
    pub fn support(&self) -> BTreeSet<usize> {
        self.amplitudes
            .iter()
            .enumerate()
            .filter(|(_, a)| a.abs() > 1e-12)
            .map(|(i, _)| i)
            .collect()
    }

    /// True when every amplitude matches `other` within `tol`.
    pub fn approx_eq(&self, other: &MgsaState, tol: f64) -> bool {
        self.amplitudes.len() == other.amplitudes.len()
            && self
                .amplitudes
                .iter()
                .zip(&other.amplitudes)
                .all(|(a, b)| (a - b).abs() <= tol)
    }

    fn successor(&self, amplitudes: Vec<f64>) -> MgsaState {
        MgsaState {
            num_states: self.num_states,
            marked: self.marked.clone(),
            amplitudes,
            iteration: self.iteration + 1,
        }
    }
}

/// Negates the amplitudes at `indices`.
pub fn phase_flip(amplitudes: &[f64], indices: &BTreeSet<usize>) -> Vec<f64> {
    amplitudes
        .iter()
        .enumerate()
        .map(|(i, &a)| if indices.contains(&i) { -a } else { a })
        .collect()
}

/// `a_i -> 2 * mean(a) - a_i`.
pub fn invert_about_mean(amplitudes: &[f64]) -> Vec<f64> {
    let mean = amplitudes.iter().sum::<f64>() / amplitudes.len() as f64;
    amplitudes.iter().map(|a| 2.0 * mean - a).collect()
}

/// One iteration of the marked/unmarked recurrence.
pub fn mgsa_step(s: &MgsaState) -> MgsaState {
    let (marked_sum, unmarked_sum) =
        s.amplitudes
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(k, l), (i, a)| {
                if s.marked.contains(&i) {
                    (k + a, l)
                } else {
                    (k, l + a)
                }
            });
    let d = 2.0 / s.num_states as f64 * (unmarked_sum - marked_sum);
    let next = s
        .amplitudes
        .iter()
        .enumerate()
        .map(|(i, &a)| if s.marked.contains(&i) { d + a } else { d - a })
        .collect();
    s.successor(next)
}

/// `T` standard steps; the trace has `T + 1` entries starting with `initial`.
pub fn mgsa_run(initial: &MgsaState, iterations: usize) -> Vec<MgsaState> {
    let mut trace = Vec::with_capacity(iterations + 1);
    trace.push(initial.clone());
    for _ in 0..iterations {
        let next = mgsa_step(trace.last().unwrap());
        trace.push(next);
    }
    trace
}

/// Support-flipping step: negate the marked states and every index in
/// `initial_support` (each index once), then reflect with `a -> a - 2 mean(a)`.
///
/// The reflection has the opposite sign to [`mgsa_step`]'s, i.e. it is the
/// `I - 2|s><s|` form that an H-X-MCZ-X-H diffuser realizes. With an empty
/// support this is [`mgsa_step`] up to a global sign.
pub fn ventura_step(s: &MgsaState, initial_support: &BTreeSet<usize>) -> MgsaState {
    let flags: BTreeSet<usize> = s.marked.union(initial_support).copied().collect();
    let flipped = phase_flip(&s.amplitudes, &flags);
    let mean = flipped.iter().sum::<f64>() / flipped.len() as f64;
    s.successor(flipped.iter().map(|a| a - 2.0 * mean).collect())
}

/// Which update rule a run uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepKind {
    Standard,
    /// First step standard, every later step a [`ventura_step`] over the
    /// initial support.
    Ventura,
}

impl StepKind {
    /// First iteration from which the update map no longer changes.
    fn steady_from(self) -> usize {
        match self {
            StepKind::Standard => 0,
            StepKind::Ventura => 1,
        }
    }
}

/// Trace of `iterations` steps under `kind`, `iterations + 1` entries long.
pub fn run(initial: &MgsaState, kind: StepKind, iterations: usize) -> Vec<MgsaState> {
    match kind {
        StepKind::Standard => mgsa_run(initial, iterations),
        StepKind::Ventura => {
            let support = initial.support();
            let mut trace = Vec::with_capacity(iterations + 1);
            trace.push(initial.clone());
            for t in 0..iterations {
                let cur = trace.last().unwrap();
                let next = if t == 0 {
                    mgsa_step(cur)
                } else {
                    ventura_step(cur, &support)
                };
                trace.push(next);
            }
            trace
        }
    }
}

/// Smallest `p <= max_t` after which the amplitudes repeat within
/// [`PERIOD_TOL`] per entry.
///
/// Periods are measured from the first state after which the update map is
/// fixed: the initial state for [`StepKind::Standard`], the state after the
/// first (standard) step for [`StepKind::Ventura`].
pub fn detect_period(initial: &MgsaState, kind: StepKind, max_t: usize) -> Option<usize> {
    let start = kind.steady_from();
    let trace = run(initial, kind, start + max_t);
    let anchor = &trace[start];
    (1..=max_t).find(|&p| trace[start + p].approx_eq(anchor, PERIOD_TOL))
}

/// A starting configuration covered by the 0-or-2/N result: `|W| = |S \ W| = N/4`,
/// `W` inside `S`, equal amplitudes on `S` and zero elsewhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarterSplit {
    num_qubits: usize,
    marked: BTreeSet<usize>,
    support: BTreeSet<usize>,
}

impl QuarterSplit {
    pub fn new(
        num_qubits: usize,
        marked: impl IntoIterator<Item = usize>,
        support: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        if !(2..=crate::MAX_QUBITS).contains(&num_qubits) {
            return Err(Error::InvalidArgument(format!(
                "need 2 <= n <= {}, got {num_qubits}",
                crate::MAX_QUBITS
            )));
        }
        let n_states = 1usize << num_qubits;
        let marked: BTreeSet<usize> = marked.into_iter().collect();
        let support: BTreeSet<usize> = support.into_iter().collect();
        if support.iter().any(|&i| i >= n_states) {
            return Err(Error::InvalidArgument("support index out of range".into()));
        }
        if !marked.is_subset(&support) {
            return Err(Error::InvalidArgument(
                "marked states must lie in the support".into(),
            ));
        }
        let quarter = n_states / 4;
        if marked.len() != quarter || support.len() - marked.len() != quarter {
            return Err(Error::InvalidArgument(format!(
                "need |W| = |S \\ W| = {quarter}, got |W| = {}, |S \\ W| = {}",
                marked.len(),
                support.len() - marked.len()
            )));
        }
        Ok(QuarterSplit {
            num_qubits,
            marked,
            support,
        })
    }

    /// The smallest case: `N = 4`, `W = {2}`, `S = {0, 2}`.
    pub fn canonical() -> Self {
        QuarterSplit::new(2, [2], [0, 2]).expect("valid instance")
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn num_states(&self) -> usize {
        1 << self.num_qubits
    }

    pub fn marked(&self) -> &BTreeSet<usize> {
        &self.marked
    }

    pub fn support(&self) -> &BTreeSet<usize> {
        &self.support
    }

    /// Amplitude `1/sqrt(|S|)` on the support, zero elsewhere.
    pub fn initial_state(&self) -> MgsaState {
        let a = 1.0 / (self.support.len() as f64).sqrt();
        let amps = (0..self.num_states())
            .map(|i| if self.support.contains(&i) { a } else { 0.0 })
            .collect();
        MgsaState::new(amps, self.marked.iter().copied()).expect("valid instance")
    }

    /// Probability of the lowest-indexed marked state at `t = 0..=T`.
    pub fn marked_probability_trace(&self, iterations: usize) -> Vec<f64> {
        let probe = *self.marked.iter().next().expect("nonempty W");
        mgsa_run(&self.initial_state(), iterations)
            .iter()
            .map(|s| s.amplitudes()[probe].powi(2))
            .collect()
    }
}

/// Checks that for every `t` in `2..=T` each marked state's probability is
/// within `1e-9` of `0` or of `2/N`.
pub fn check_two_valued(inst: &QuarterSplit, iterations: usize) -> Result<bool> {
    if iterations < 2 {
        return Err(Error::InvalidArgument(format!(
            "need T >= 2, got {iterations}"
        )));
    }
    let high = 2.0 / inst.num_states() as f64;
    let trace = mgsa_run(&inst.initial_state(), iterations);
    Ok(trace[2..].iter().all(|s| {
        inst.marked.iter().all(|&i| {
            let p = s.amplitudes[i] * s.amplitudes[i];
            p.abs() <= 1e-9 || (p - high).abs() <= 1e-9
        })
    }))
}

/// [`check_two_valued`] over many instances, in parallel when enabled.
pub fn check_two_valued_batch(instances: &[QuarterSplit], iterations: usize) -> Result<Vec<bool>> {
    #[cfg(feature = "parallel")]
    let it = instances.par_iter();
    #[cfg(not(feature = "parallel"))]
    let it = instances.iter();
    it.map(|inst| check_two_valued(inst, iterations)).collect()
}

/// Draws disjoint `W` and `S \ W` of size `N/4` each, uniformly for the seed.
pub fn sample_quarter_split(num_qubits: usize, seed: u64) -> Result<QuarterSplit> {
    if !(2..=crate::MAX_QUBITS).contains(&num_qubits) {
        return Err(Error::InvalidArgument(format!(
            "need 2 <= n <= {}, got {num_qubits}",
            crate::MAX_QUBITS
        )));
    }
    let n_states = 1usize << num_qubits;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n_states).collect();
    order.shuffle(&mut rng);
    let quarter = n_states / 4;
    let marked = order[..quarter].to_vec();
    let support = order[..2 * quarter].to_vec();
    QuarterSplit::new(num_qubits, marked, support)
}
