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

use qovp_core::complement::{
    build_ones_complement, complement_depth_profile, run_ones_complement, ComplementSpec,
};
use qovp_core::BasisLabel;

#[test]
fn exhaustive_pure_references() {
    for n in 1..=6 {
        for i in 0..1usize << n {
            let reference = BasisLabel::from_index(i, n);
            let d = run_ones_complement(&ComplementSpec::pure(reference.clone())).unwrap();
            // bitwise NOT computed on the index, not via the label helper
            let expected = BasisLabel::from_index(!i & ((1 << n) - 1), n);
            assert!((d.get(&expected) - 1.0).abs() < 1e-12, "{reference}");
        }
    }
}

#[test]
fn mixed_first_bit_splits_evenly() {
    let spec = ComplementSpec::new(BasisLabel::new("101").unwrap(), [0], 1).unwrap();
    let d = run_ones_complement(&spec).unwrap();
    let support: Vec<String> = d.support(1e-12).iter().map(|l| l.to_string()).collect();
    assert_eq!(support, ["010", "110"]);
    assert!((d.prob("010") - 0.5).abs() < 1e-12);
    assert!((d.prob("110") - 0.5).abs() < 1e-12);
}

/// A reference with mixed positions is a uniform mixture of its pure
/// settings, so the output is the average of their complements.
#[test]
fn mixed_positions_act_linearly() {
    for n in 1..=4 {
        for i in 0..1usize << n {
            for mask in 1..1usize << n {
                let reference = BasisLabel::from_index(i, n);
                let mixed: Vec<usize> = (0..n).filter(|q| mask >> (n - 1 - q) & 1 == 1).collect();
                let got =
                    run_ones_complement(&ComplementSpec::new(reference, mixed.clone(), 1).unwrap())
                        .unwrap();
                let settings = 1usize << mixed.len();
                let mut expected = vec![0.0; 1 << n];
                for bits in 0..settings {
                    let mut r = i;
                    for (j, q) in mixed.iter().enumerate() {
                        let m = 1 << (n - 1 - q);
                        r = if bits >> j & 1 == 1 { r | m } else { r & !m };
                    }
                    expected[!r & ((1 << n) - 1)] += 1.0 / settings as f64;
                }
                for (idx, e) in expected.iter().enumerate() {
                    assert!((got.get(&BasisLabel::from_index(idx, n)) - e).abs() < 1e-12);
                }
            }
        }
    }
}

#[test]
fn depth_is_flat_in_width() {
    let profile = complement_depth_profile(&(1..=10).collect::<Vec<_>>()).unwrap();
    let depths: Vec<usize> = profile.iter().map(|&(_, d)| d).collect();
    assert!(depths.iter().all(|&d| d == depths[0]), "{profile:?}");
}

#[test]
fn depth_depends_only_on_copies() {
    for copies in 1..=3 {
        let mut seen = None;
        for n in 1..=24 / (copies + 1) {
            for i in [0, (1 << n) - 1, 0b1010_1010 & ((1 << n) - 1)] {
                let spec = ComplementSpec::new(BasisLabel::from_index(i, n), [], copies).unwrap();
                let d = build_ones_complement(&spec).unwrap().depth();
                assert_eq!(*seen.get_or_insert(d), d, "n={n} copies={copies}");
            }
        }
    }
}

#[test]
fn every_copy_holds_the_complement() {
    let spec = ComplementSpec::new(BasisLabel::new("1100").unwrap(), [], 3).unwrap();
    let state = qovp_core::complement::simulate_ones_complement(&spec).unwrap();
    let dist = qovp_core::measure::probabilities(&state);
    for copy in 0..3 {
        let d = dist.marginalize(&spec.output_register(copy)).unwrap();
        assert!((d.prob("0011") - 1.0).abs() < 1e-12);
    }
}
