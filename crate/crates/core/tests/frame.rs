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

use icm_core::ir::{Gate, Pauli, PauliFrame};
use icm_core::verify::{phase_distance, Unitary};

/// Two-qubit Pauli `p0 ⊗ p1` as a matrix on qubits 0 and 1.
fn pauli_matrix(p0: Pauli, p1: Pauli) -> Unitary {
    let mut gates = Vec::new();
    for (q, p) in [(0, p0), (1, p1)] {
        if p.z {
            gates.push(Gate::Z(q));
        }
        if p.x {
            gates.push(Gate::X(q));
        }
    }
    Unitary::of_gates(2, &gates).unwrap()
}

fn mul(a: &Unitary, b: &Unitary) -> Unitary {
    let d = a.dim();
    let rows: Vec<Vec<_>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| (0..d).map(|k| a.get(i, k) * b.get(k, j)).sum())
                .collect()
        })
        .collect();
    Unitary::from_rows(&rows)
}

#[test]
fn cnot_tracking_matches_conjugation_on_all_sixteen_frames() {
    let all = [Pauli::I, Pauli::X, Pauli::Z, Pauli::XZ];
    for (control, target) in [(0, 1), (1, 0)] {
        let cnot = Unitary::of_gates(2, &[Gate::Cnot { control, target }]).unwrap();
        for p0 in all {
            for p1 in all {
                let conj = mul(&mul(&cnot, &pauli_matrix(p0, p1)), &cnot);
                let tracked = PauliFrame::from_paulis(vec![p0, p1]).track_cnot(control, target);
                let want = pauli_matrix(tracked.get(0), tracked.get(1));
                assert!(
                    phase_distance(&conj, &want) < 1e-12,
                    "{p0}⊗{p1} through cnot({control},{target})"
                );
            }
        }
    }
}

#[test]
fn named_cases() {
    let f = PauliFrame::from_paulis(vec![Pauli::X, Pauli::I]).track_cnot(0, 1);
    assert_eq!(f.paulis(), &[Pauli::X, Pauli::X]);
    let f = PauliFrame::from_paulis(vec![Pauli::I, Pauli::Z]).track_cnot(0, 1);
    assert_eq!(f.paulis(), &[Pauli::Z, Pauli::Z]);
    let f = PauliFrame::from_paulis(vec![Pauli::Z, Pauli::I]).track_cnot(0, 1);
    assert_eq!(f.paulis(), &[Pauli::Z, Pauli::I]);
}
