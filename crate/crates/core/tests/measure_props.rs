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

use proptest::prelude::*;
use qovp_core::measure::{probabilities, sample};
use qovp_core::{BasisLabel, Circuit, Complex64, GateOp, MeasurementDistribution, StateVector};

fn arb_state() -> impl Strategy<Value = StateVector> {
    (1usize..=5)
        .prop_flat_map(|n| prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1 << n))
        .prop_filter_map("zero vector", |v| {
            let norm = v.iter().map(|(a, b)| a * a + b * b).sum::<f64>().sqrt();
            (norm > 1e-3).then(|| {
                StateVector::from_amplitudes(
                    v.iter()
                        .map(|(a, b)| Complex64::new(a / norm, b / norm))
                        .collect(),
                )
                .unwrap()
            })
        })
}

proptest! {
    #[test]
    fn gates_preserve_norm(s in arb_state(), q in 0usize..5, which in 0u8..4) {
        let n = s.num_qubits();
        let q = q % n;
        let op = match which {
            0 => GateOp::H(q),
            1 => GateOp::X(q),
            2 => GateOp::Z(q),
            _ => GateOp::mcz((0..n).filter(|&c| c != q), q),
        };
        let out = s.evolved(&Circuit::from_ops(n, [op]).unwrap()).unwrap();
        prop_assert!((out.norm_sqr() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn marginals_keep_total_mass(s in arb_state(), mask in 1u32..32) {
        let n = s.num_qubits();
        let keep: Vec<usize> = (0..n).filter(|q| mask >> q & 1 == 1).collect();
        prop_assume!(!keep.is_empty());
        let d = probabilities(&s);
        let m = d.marginalize(&keep).unwrap();
        prop_assert_eq!(m.num_qubits(), keep.len());
        prop_assert!((m.total() - d.total()).abs() < 1e-12);
        let all: Vec<usize> = (0..n).collect();
        let same = d.marginalize(&all).unwrap();
        for (l, p) in d.entries() {
            prop_assert!((same.get(l) - p).abs() < 1e-15);
        }
    }

    #[test]
    fn marginals_compose(s in arb_state()) {
        let n = s.num_qubits();
        prop_assume!(n >= 3);
        let d = probabilities(&s);
        let direct = d.marginalize(&[0, n - 1]).unwrap();
        let staged = d.marginalize(&(0..n).filter(|&q| q != 1).collect::<Vec<_>>()).unwrap()
            .marginalize(&[0, n - 2]).unwrap();
        for i in 0..4 {
            let l = BasisLabel::from_index(i, 2);
            prop_assert!((direct.get(&l) - staged.get(&l)).abs() < 1e-12);
        }
    }

    #[test]
    fn sampling_is_seeded(s in arb_state(), seed in any::<u64>(), shots in 1u64..2000) {
        let d = probabilities(&s);
        let a = sample(&d, shots, seed).unwrap();
        let b = sample(&d, shots, seed).unwrap();
        prop_assert_eq!(&a.counts, &b.counts);
        prop_assert_eq!(a.counts.values().sum::<u64>(), shots);
        for l in a.counts.keys() {
            prop_assert!(d.get(l) > 0.0);
        }
    }
}

#[test]
fn sample_frequencies_converge() {
    let d = MeasurementDistribution::from_probabilities(2, &[0.1, 0.2, 0.3, 0.4]);
    let h = sample(&d, 200_000, 5).unwrap();
    for (i, p) in [0.1, 0.2, 0.3, 0.4].iter().enumerate() {
        let f = h.count(&BasisLabel::from_index(i, 2)) as f64 / 200_000.0;
        assert!((f - p).abs() < 0.01);
    }
}
