// Copyright contributors to the icm-transpiler project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use thiserror::Error;

use super::gate::{Gate, Qubit};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircuitError {
    #[error("gate #{index} ({gate}) uses qubit {qubit} but the circuit has {num_qubits} qubits")]
    OperandOutOfRange {
        index: usize,
        gate: Gate,
        qubit: Qubit,
        num_qubits: usize,
    },
    #[error("gate #{index} ({gate}) repeats an operand")]
    DuplicateOperand { index: usize, gate: Gate },
    #[error("expected {expected} qubit names, got {got}")]
    NameCount { expected: usize, got: usize },
}

/// Source-level circuit: an ordered gate list over named qubits.
///
/// `constants[i]` is `Some(bit)` when line `i` starts in a fixed classical
/// value rather than carrying input data. `garbage[i]` marks outputs whose
/// value is not part of the computed function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    num_qubits: usize,
    gates: Vec<Gate>,
    qubit_names: Vec<String>,
    constants: Vec<Option<bool>>,
    garbage: Vec<bool>,
}

impl Circuit {
    /// Empty circuit with qubits named `q0`, `q1`, ...
    pub fn new(num_qubits: usize) -> Self {
        let names = (0..num_qubits).map(|i| format!("q{i}")).collect();
        Self::with_names(names)
    }

    pub fn with_names(qubit_names: Vec<String>) -> Self {
        let n = qubit_names.len();
        Circuit {
            num_qubits: n,
            gates: Vec::new(),
            qubit_names,
            constants: vec![None; n],
            garbage: vec![false; n],
        }
    }

    /// Builds a circuit from a whole gate list, checking every gate.
    pub fn from_gates(num_qubits: usize, gates: impl IntoIterator<Item = Gate>) -> Result<Self, CircuitError> {
        let mut c = Circuit::new(num_qubits);
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn push(&mut self, gate: Gate) -> Result<(), CircuitError> {
        let index = self.gates.len();
        if let Some(&qubit) = gate.qubits().iter().find(|&&q| q >= self.num_qubits) {
            return Err(CircuitError::OperandOutOfRange {
                index,
                gate,
                qubit,
                num_qubits: self.num_qubits,
            });
        }
        if !gate.has_distinct_operands() {
            return Err(CircuitError::DuplicateOperand { index, gate });
        }
        self.gates.push(gate);
        Ok(())
    }

    pub fn set_constants(&mut self, constants: Vec<Option<bool>>) -> Result<(), CircuitError> {
        if constants.len() != self.num_qubits {
            return Err(CircuitError::NameCount {
                expected: self.num_qubits,
                got: constants.len(),
            });
        }
        self.constants = constants;
        Ok(())
    }

    pub fn set_garbage(&mut self, garbage: Vec<bool>) -> Result<(), CircuitError> {
        if garbage.len() != self.num_qubits {
            return Err(CircuitError::NameCount {
                expected: self.num_qubits,
                got: garbage.len(),
            });
        }
        self.garbage = garbage;
        Ok(())
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn qubit_names(&self) -> &[String] {
        &self.qubit_names
    }

    pub fn constants(&self) -> &[Option<bool>] {
        &self.constants
    }

    pub fn garbage(&self) -> &[bool] {
        &self.garbage
    }

    /// Same qubits and metadata, different gate list.
    ///
    /// Used by rewrite passes; the gates are assumed to be valid for this
    /// register, which holds for every pass in this crate.
    pub(crate) fn with_gates(&self, gates: Vec<Gate>) -> Circuit {
        debug_assert!(gates
            .iter()
            .all(|g| g.has_distinct_operands() && g.qubits().iter().all(|&q| q < self.num_qubits)));
        Circuit { gates, ..self.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range_operand() {
        let mut c = Circuit::new(2);
        let err = c.push(Gate::Cnot { control: 0, target: 2 }).unwrap_err();
        assert!(matches!(err, CircuitError::OperandOutOfRange { qubit: 2, .. }));
        assert!(c.gates().is_empty());
    }

    #[test]
    fn rejects_repeated_operand() {
        let mut c = Circuit::new(3);
        c.push(Gate::T(0)).unwrap();
        let err = c.push(Gate::CV { control: 1, target: 1 }).unwrap_err();
        assert_eq!(
            err,
            CircuitError::DuplicateOperand {
                index: 1,
                gate: Gate::CV { control: 1, target: 1 }
            }
        );
    }

    #[test]
    fn preserves_gate_order() {
        let gates = [Gate::H(0), Gate::Cnot { control: 0, target: 1 }, Gate::T(1)];
        let c = Circuit::from_gates(2, gates).unwrap();
        assert_eq!(c.gates(), &gates);
        assert_eq!(c.qubit_names(), &["q0".to_string(), "q1".to_string()]);
    }
}
