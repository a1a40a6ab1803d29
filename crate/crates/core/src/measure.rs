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

//! Exact measurement distributions and seeded shot sampling.
//!
//! Sampling draws from `ChaCha8Rng::seed_from_u64(seed)` and maps each
//! uniform variate through the cumulative distribution over labels in
//! lexicographic order, so a `(distribution, shots, seed)` triple always
//! yields the same histogram.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::basis::BasisLabel;
use crate::error::{Error, Result};
use crate::state::StateVector;

/// Registers up to this size keep zero-probability entries.
pub const DENSE_REPORT_QUBITS: usize = 6;

/// Entries below this are dropped for registers wider than [`DENSE_REPORT_QUBITS`].
pub const PRUNE_BELOW: f64 = 1e-15;

/// Probability per basis label.
#[derive(Clone, Debug, PartialEq)]
pub struct MeasurementDistribution {
    num_qubits: usize,
    entries: BTreeMap<BasisLabel, f64>,
}

impl MeasurementDistribution {
    /// Builds a distribution from `probs[index]`, applying the retention rule.
    pub fn from_probabilities(num_qubits: usize, probs: &[f64]) -> Self {
        debug_assert_eq!(probs.len(), 1 << num_qubits);
        let keep_all = num_qubits <= DENSE_REPORT_QUBITS;
        let entries = probs
            .iter()
            .enumerate()
            .filter(|(_, &p)| keep_all || p.abs() >= PRUNE_BELOW)
            .map(|(i, &p)| (BasisLabel::from_index(i, num_qubits), p))
            .collect();
        MeasurementDistribution {
            num_qubits,
            entries,
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    /// Probability of `label`; zero when absent.
    pub fn get(&self, label: &BasisLabel) -> f64 {
        self.entries.get(label).copied().unwrap_or(0.0)
    }

    /// Probability of the label spelled `bits`; zero for malformed input.
    pub fn prob(&self, bits: &str) -> f64 {
        BasisLabel::new(bits).map(|l| self.get(&l)).unwrap_or(0.0)
    }

    pub fn entries(&self) -> &BTreeMap<BasisLabel, f64> {
        &self.entries
    }

    pub fn total(&self) -> f64 {
        self.entries.values().sum()
    }

    /// Labels with probability above `threshold`.
    pub fn support(&self, threshold: f64) -> Vec<BasisLabel> {
        self.entries
            .iter()
            .filter(|(_, &p)| p > threshold)
            .map(|(l, _)| l.clone())
            .collect()
    }

    /// Entries by descending probability, ties broken lexicographically.
    pub fn ranked(&self) -> Vec<(BasisLabel, f64)> {
        let mut v: Vec<_> = self.entries.iter().map(|(l, &p)| (l.clone(), p)).collect();
        v.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        v
    }

    /// The most likely outcome.
    pub fn top(&self) -> Option<BasisLabel> {
        self.ranked().into_iter().next().map(|(l, _)| l)
    }

    /// Sums out every qubit not in `keep`. Kept qubits appear in ascending order.
    pub fn marginalize(&self, keep: &[usize]) -> Result<MeasurementDistribution> {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if keep.is_empty() {
            return Err(Error::InvalidArgument(
                "marginal must keep at least one qubit".into(),
            ));
        }
        if let Some(&q) = keep.iter().find(|&&q| q >= self.num_qubits) {
            return Err(Error::QubitOutOfRange {
                index: q,
                num_qubits: self.num_qubits,
            });
        }
        let k = keep.len();
        let mut probs = vec![0.0; 1 << k];
        for (label, &p) in &self.entries {
            let idx = keep
                .iter()
                .fold(0usize, |acc, &q| (acc << 1) | usize::from(label.bit(q)));
            probs[idx] += p;
        }
        Ok(MeasurementDistribution::from_probabilities(k, &probs))
    }
}

/// `|amplitude|^2` for every basis state of `state`.
pub fn probabilities(state: &StateVector) -> MeasurementDistribution {
    let probs: Vec<f64> = state.amplitudes().iter().map(|a| a.norm_sqr()).collect();
    MeasurementDistribution::from_probabilities(state.num_qubits(), &probs)
}

/// Seeded shot counts drawn from a distribution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleHistogram {
    pub shots: u64,
    pub seed: u64,
    /// Only labels that were drawn at least once.
    pub counts: BTreeMap<BasisLabel, u64>,
}

impl SampleHistogram {
    pub fn count(&self, label: &BasisLabel) -> u64 {
        self.counts.get(label).copied().unwrap_or(0)
    }
}

/// Inverse-CDF sampling of `shots` outcomes.
pub fn sample(dist: &MeasurementDistribution, shots: u64, seed: u64) -> Result<SampleHistogram> {
    if shots == 0 {
        return Err(Error::ZeroShots);
    }
    let labels: Vec<&BasisLabel> = dist.entries.keys().collect();
    let mut cdf = Vec::with_capacity(labels.len());
    let mut acc = 0.0;
    for p in dist.entries.values() {
        acc += p.max(0.0);
        cdf.push(acc);
    }
    if acc <= 0.0 {
        return Err(Error::InvalidArgument(
            "distribution has no probability mass".into(),
        ));
    }
    let last_nonzero = dist
        .entries
        .values()
        .rposition(|&p| p > 0.0)
        .expect("positive total mass");

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = BTreeMap::new();
    for _ in 0..shots {
        let u: f64 = rng.gen::<f64>() * acc;
        let idx = cdf.partition_point(|&c| c <= u).min(last_nonzero);
        *counts.entry(labels[idx].clone()).or_insert(0) += 1;
    }
    Ok(SampleHistogram {
        shots,
        seed,
        counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gate::GateOp;

    fn dist(pairs: &[(&str, f64)]) -> MeasurementDistribution {
        let n = pairs[0].0.len();
        let mut probs = vec![0.0; 1 << n];
        for (l, p) in pairs {
            probs[BasisLabel::new(l).unwrap().index()] = *p;
        }
        MeasurementDistribution::from_probabilities(n, &probs)
    }

    #[test]
    fn probabilities_of_plus() {
        let mut s = StateVector::zero(1).unwrap();
        s.apply_op(&GateOp::H(0)).unwrap();
        let d = probabilities(&s);
        assert!((d.prob("0") - 0.5).abs() < 1e-15);
        assert!((d.prob("1") - 0.5).abs() < 1e-15);
        assert!((d.total() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn basis_round_trip_exhaustive() {
        for n in 1..=6 {
            for i in 0..(1usize << n) {
                let label = BasisLabel::from_index(i, n);
                let d = probabilities(&StateVector::new_basis(&label).unwrap());
                assert_eq!(d.get(&label), 1.0);
                assert_eq!(d.support(0.0), vec![label]);
                assert_eq!(d.entries().len(), 1 << n);
            }
        }
    }

    #[test]
    fn wide_registers_prune_zeros() {
        let d = probabilities(&StateVector::zero(8).unwrap());
        assert_eq!(d.entries().len(), 1);
    }

    #[test]
    fn marginal_examples() {
        let d = dist(&[("00", 0.5), ("01", 0.5)]);
        let m = d.marginalize(&[0]).unwrap();
        assert_eq!(m.prob("0"), 1.0);
        assert_eq!(m.prob("1"), 0.0);
        assert_eq!(d.marginalize(&[1, 0]).unwrap(), d);
        assert!(d.marginalize(&[]).is_err());
        assert!(d.marginalize(&[2]).is_err());
    }

    #[test]
    fn ranked_breaks_ties_lexicographically() {
        let d = dist(&[("00", 0.25), ("01", 0.25), ("10", 0.4), ("11", 0.1)]);
        let r: Vec<_> = d.ranked().into_iter().map(|(l, _)| l.to_string()).collect();
        assert_eq!(r, ["10", "00", "01", "11"]);
        assert_eq!(d.top().unwrap().as_str(), "10");
    }

    #[test]
    fn point_mass_sampling() {
        let d = dist(&[("010", 1.0)]);
        let h = sample(&d, 100, 3).unwrap();
        assert_eq!(h.count(&BasisLabel::new("010").unwrap()), 100);
        assert_eq!(h.counts.len(), 1);
    }

    #[test]
    fn fair_coin_within_five_sigma() {
        let d = dist(&[("0", 0.5), ("1", 0.5)]);
        let h = sample(&d, 4096, 7).unwrap();
        let f = h.count(&BasisLabel::new("0").unwrap()) as f64 / 4096.0;
        assert!((f - 0.5).abs() < 5.0 * (0.25f64 / 4096.0).sqrt());
        assert_eq!(h.counts.values().sum::<u64>(), 4096);
    }

    #[test]
    fn sampling_is_deterministic() {
        let d = dist(&[("00", 0.1), ("01", 0.2), ("10", 0.3), ("11", 0.4)]);
        assert_eq!(sample(&d, 1000, 42).unwrap(), sample(&d, 1000, 42).unwrap());
        assert_ne!(sample(&d, 1000, 42).unwrap(), sample(&d, 1000, 43).unwrap());
        assert_eq!(sample(&d, 0, 1), Err(Error::ZeroShots));
    }
}
