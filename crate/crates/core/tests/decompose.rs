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

use std::f64::consts::FRAC_PI_2;

use icm_core::decompose::{
    decompose_cv, decompose_cvdg, decompose_h, decompose_toffoli_quantum, decompose_toffoli_reversible, lower_to_ugs,
    ToffoliMode,
};
use icm_core::ir::{Circuit, Gate};
use icm_core::random::random_circuit;
use icm_core::verify::{assert_matrix_equiv, controlled, gate_matrix_1q, rx, toffoli_unitary, StateVector, Unitary};
use rand::rngs::StdRng;
use rand::SeedableRng;

const TOL: f64 = 1e-10;

fn one(g: Gate) -> Unitary {
    Unitary::from_mat2(&gate_matrix_1q(&g).unwrap())
}

#[test]
fn quantum_toffoli_equals_toffoli() {
    let seq = decompose_toffoli_quantum(0, 1, 2).unwrap();
    assert_matrix_equiv(3, &seq, &toffoli_unitary(0, 1, 2), TOL).unwrap();
}

#[test]
fn reversible_toffoli_equals_toffoli() {
    let seq = decompose_toffoli_reversible(0, 1, 2).unwrap();
    assert_matrix_equiv(3, &seq, &toffoli_unitary(0, 1, 2), TOL).unwrap();
    // and after lowering the controlled-V gates
    let c = Circuit::from_gates(3, seq).unwrap();
    let low = lower_to_ugs(&c, ToffoliMode::Reversible);
    assert_matrix_equiv(3, low.gates(), &toffoli_unitary(0, 1, 2), TOL).unwrap();
}

#[test]
fn toffoli_truth_table() {
    let seq = decompose_toffoli_quantum(0, 1, 2).unwrap();
    for (input, output) in [(0b011, 0b111), (0b101, 0b101), (0b111, 0b011), (0b000, 0b000)] {
        let mut s = StateVector::basis(3, input);
        for g in &seq {
            s.apply_gate(g).unwrap();
        }
        assert!((s.fidelity(&StateVector::basis(3, output)) - 1.0).abs() < TOL);
    }
}

#[test]
fn controlled_v_decomposition() {
    let v = gate_matrix_1q(&Gate::V(0)).unwrap();
    let vdg = gate_matrix_1q(&Gate::Vdg(0)).unwrap();
    assert_matrix_equiv(2, &decompose_cv(0, 1).unwrap(), &controlled(&v, 0, 1), TOL).unwrap();
    assert_matrix_equiv(2, &decompose_cvdg(0, 1).unwrap(), &controlled(&vdg, 0, 1), TOL).unwrap();
    // V is Rx(π/2) up to phase, so C-V is controlled Rx(π/2) up to a phase on the control
    let crx = controlled(&rx(FRAC_PI_2), 0, 1);
    let with_phase = [decompose_cv(0, 1).unwrap(), vec![Gate::Tdg(0)]].concat();
    assert_matrix_equiv(2, &with_phase, &crx, TOL).unwrap();
}

#[test]
fn controlled_v_squared_is_cnot() {
    let seq = [decompose_cv(0, 1).unwrap(), decompose_cv(0, 1).unwrap()].concat();
    let cnot = Unitary::of_gates(2, &[Gate::Cnot { control: 0, target: 1 }]).unwrap();
    assert_matrix_equiv(2, &seq, &cnot, TOL).unwrap();
}

#[test]
fn single_qubit_identities() {
    assert_matrix_equiv(1, &decompose_h(0), &one(Gate::H(0)), TOL).unwrap();
    let hh = [decompose_h(0), decompose_h(0)].concat();
    assert_matrix_equiv(1, &hh, &Unitary::identity(2), TOL).unwrap();
    assert_matrix_equiv(1, &[Gate::T(0), Gate::T(0)], &one(Gate::P(0)), 1e-12).unwrap();
    assert_matrix_equiv(1, &[Gate::P(0), Gate::P(0)], &one(Gate::Z(0)), 1e-12).unwrap();
    assert_matrix_equiv(1, &[Gate::V(0), Gate::V(0)], &one(Gate::X(0)), 1e-12).unwrap();
    assert_matrix_equiv(1, &[Gate::V(0)], &Unitary::from_mat2(&rx(FRAC_PI_2)), 1e-12).unwrap();
}

#[test]
fn lowering_preserves_random_circuits() {
    let mut rng = StdRng::seed_from_u64(2024);
    for _ in 0..40 {
        let c = random_circuit(&mut rng, 3, 6, &icm_core::ir::GateTag::ALL);
        let want = Unitary::of_gates(3, c.gates()).unwrap();
        for mode in [ToffoliMode::Quantum, ToffoliMode::Reversible] {
            let low = lower_to_ugs(&c, mode);
            assert_matrix_equiv(3, low.gates(), &want, TOL).unwrap();
        }
    }
}
