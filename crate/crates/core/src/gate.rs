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

//! Gate operations and ordered circuits.

use crate::error::{Error, Result};
use crate::MAX_QUBITS;

/// A single gate acting on qubits of a register.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GateOp {
    H(usize),
    X(usize),
    Z(usize),
    /// Multi-controlled Z. Negates every amplitude whose control and target
    /// bits are all 1; with no controls it is a plain Z.
    Mcz {
        controls: Vec<usize>,
        target: usize,
    },
    Swap(usize, usize),
    /// Controlled SWAP (Fredkin) with qubit order (control, a, b).
    Cswap {
        control: usize,
        a: usize,
        b: usize,
    },
}

impl GateOp {
    /// Two-qubit controlled Z.
    pub fn cz(control: usize, target: usize) -> Self {
        GateOp::Mcz {
            controls: vec![control],
            target,
        }
    }

    pub fn mcz(controls: impl IntoIterator<Item = usize>, target: usize) -> Self {
        GateOp::Mcz {
            controls: controls.into_iter().collect(),
            target,
        }
    }

    pub fn cswap(control: usize, a: usize, b: usize) -> Self {
        GateOp::Cswap { control, a, b }
    }

    /// Every qubit the gate touches, in operand order.
    pub fn qubits(&self) -> Vec<usize> {
        match self {
            GateOp::H(q) | GateOp::X(q) | GateOp::Z(q) => vec![*q],
            GateOp::Mcz { controls, target } => {
                let mut qs = controls.clone();
                qs.push(*target);
                qs
            }
            GateOp::Swap(a, b) => vec![*a, *b],
            GateOp::Cswap { control, a, b } => vec![*control, *a, *b],
        }
    }

    /// Checks that all indices are distinct and below `num_qubits`.
    pub fn validate(&self, num_qubits: usize) -> Result<()> {
        let qubits = self.qubits();
        for (i, &q) in qubits.iter().enumerate() {
            if q >= num_qubits {
                return Err(Error::QubitOutOfRange {
                    index: q,
                    num_qubits,
                });
            }
            if qubits[..i].contains(&q) {
                return Err(Error::DuplicateQubit(q));
            }
        }
        Ok(())
    }

    /// Same gate with every qubit index sent through `map`.
    pub fn remap(&self, map: impl Fn(usize) -> usize) -> GateOp {
        match self {
            GateOp::H(q) => GateOp::H(map(*q)),
            GateOp::X(q) => GateOp::X(map(*q)),
            GateOp::Z(q) => GateOp::Z(map(*q)),
            GateOp::Mcz { controls, target } => GateOp::Mcz {
                controls: controls.iter().map(|&c| map(c)).collect(),
                target: map(*target),
            },
            GateOp::Swap(a, b) => GateOp::Swap(map(*a), map(*b)),
            GateOp::Cswap { control, a, b } => GateOp::Cswap {
                control: map(*control),
                a: map(*a),
                b: map(*b),
            },
        }
    }
}

/// An ordered gate program on a fixed number of qubits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    num_qubits: usize,
    ops: Vec<GateOp>,
}

impl Circuit {
    pub fn new(num_qubits: usize) -> Result<Self> {
        if num_qubits == 0 {
            return Err(Error::ZeroQubits);
        }
        if num_qubits > MAX_QUBITS {
            return Err(Error::TooManyQubits {
                requested: num_qubits,
                max: MAX_QUBITS,
            });
        }
        Ok(Circuit {
            num_qubits,
            ops: Vec::new(),
        })
    }

    pub fn from_ops(num_qubits: usize, ops: impl IntoIterator<Item = GateOp>) -> Result<Self> {
        let mut c = Circuit::new(num_qubits)?;
        for op in ops {
            c.push(op)?;
        }
        Ok(c)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn ops(&self) -> &[GateOp] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn push(&mut self, op: GateOp) -> Result<()> {
        op.validate(self.num_qubits)?;
        self.ops.push(op);
        Ok(())
    }

    /// Appends `other`, which must act on the same register size.
    pub fn append(&mut self, other: &Circuit) -> Result<()> {
        if other.num_qubits != self.num_qubits {
            return Err(Error::QubitCountMismatch {
                expected: self.num_qubits,
                found: other.num_qubits,
            });
        }
        self.ops.extend_from_slice(&other.ops);
        Ok(())
    }

    /// Appends `other` with its qubit `i` wired to `mapping[i]` of `self`.
    pub fn append_mapped(&mut self, other: &Circuit, mapping: &[usize]) -> Result<()> {
        if mapping.len() != other.num_qubits {
            return Err(Error::QubitCountMismatch {
                expected: other.num_qubits,
                found: mapping.len(),
            });
        }
        for op in &other.ops {
            self.push(op.remap(|q| mapping[q]))?;
        }
        Ok(())
    }

    /// Number of layers when every gate is packed into the earliest layer
    /// after the last gate touching any of its qubits.
    pub fn depth(&self) -> usize {
        let mut frontier = vec![0usize; self.num_qubits];
        let mut depth = 0;
        for op in &self.ops {
            let qubits = op.qubits();
            let layer = qubits.iter().map(|&q| frontier[q]).max().unwrap_or(0) + 1;
            for q in qubits {
                frontier[q] = layer;
            }
            depth = depth.max(layer);
        }
        depth
    }
}

/// Layer count of `c`; see [`Circuit::depth`].
pub fn circuit_depth(c: &Circuit) -> usize {
    c.depth()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_catches_range_and_duplicates() {
        assert_eq!(
            GateOp::H(3).validate(3),
            Err(Error::QubitOutOfRange {
                index: 3,
                num_qubits: 3
            })
        );
        assert_eq!(GateOp::cz(1, 1).validate(3), Err(Error::DuplicateQubit(1)));
        assert_eq!(
            GateOp::cswap(0, 2, 0).validate(3),
            Err(Error::DuplicateQubit(0))
        );
        assert!(GateOp::mcz([], 2).validate(3).is_ok());
    }

    #[test]
    fn push_rejects_invalid_ops() {
        let mut c = Circuit::new(2).unwrap();
        assert!(c.push(GateOp::Swap(0, 2)).is_err());
        assert!(c.is_empty());
        assert!(Circuit::new(0).is_err());
    }

    #[test]
    fn depth_examples() {
        assert_eq!(Circuit::new(3).unwrap().depth(), 0);
        let layer = Circuit::from_ops(3, [GateOp::H(0), GateOp::H(1), GateOp::H(2)]).unwrap();
        assert_eq!(layer.depth(), 1);
        let chain = Circuit::from_ops(
            3,
            [
                GateOp::H(0),
                GateOp::cz(0, 1),
                GateOp::H(2),
                GateOp::cz(1, 2),
            ],
        )
        .unwrap();
        assert_eq!(chain.depth(), 3);
    }

    #[test]
    fn append_mapped_rewires() {
        let inner = Circuit::from_ops(2, [GateOp::cz(0, 1), GateOp::H(1)]).unwrap();
        let mut outer = Circuit::new(4).unwrap();
        outer.append_mapped(&inner, &[3, 1]).unwrap();
        assert_eq!(outer.ops(), &[GateOp::cz(3, 1), GateOp::H(1)]);
        assert!(outer.append(&inner).is_err());
    }
}
