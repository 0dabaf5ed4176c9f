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

use icm_core::decompose::ToffoliMode;
use icm_core::ir::{Circuit, Gate, GateTag};
use icm_core::random::random_circuit;
use icm_core::transform::{gadget_circuit, transform_to_icm, GadgetKind};
use icm_core::verify::{enumerate_branches, random_state, verify_circuit, FrameMode, DEFAULT_CAP};
use rand::rngs::StdRng;
use rand::SeedableRng;

const TOL: f64 = 1e-10;

fn check(c: &Circuit, seed: u64) {
    let icm = transform_to_icm(c, ToffoliMode::Quantum).unwrap();
    assert!(icm.num_qubits <= DEFAULT_CAP);
    let r = verify_circuit(c, &icm, 20, TOL, seed, DEFAULT_CAP).unwrap();
    assert!(r.passed(), "{r}");
    assert!(r.min_fidelity >= 1.0 - TOL);
    assert!(r.max_total_deviation < 1e-10);
}

#[test]
fn single_t() {
    check(&Circuit::from_gates(1, [Gate::T(0)]).unwrap(), 1);
}

#[test]
fn single_h() {
    check(&Circuit::from_gates(1, [Gate::H(0)]).unwrap(), 2);
}

#[test]
fn t_then_cnot() {
    check(
        &Circuit::from_gates(2, [Gate::T(0), Gate::Cnot { control: 0, target: 1 }]).unwrap(),
        3,
    );
}

#[test]
fn constant_lines() {
    let mut c = Circuit::from_gates(2, [Gate::Cnot { control: 1, target: 0 }, Gate::T(0)]).unwrap();
    c.set_constants(vec![None, Some(true)]).unwrap();
    check(&c, 4);
}

#[test]
fn random_small_circuits() {
    let tags = [
        GateTag::X,
        GateTag::Z,
        GateTag::Cnot,
        GateTag::H,
        GateTag::P,
        GateTag::V,
        GateTag::T,
    ];
    let mut rng = StdRng::seed_from_u64(99);
    let mut checked = 0;
    while checked < 12 {
        let c = random_circuit(&mut rng, 2, 3, &tags);
        let icm = transform_to_icm(&c, ToffoliMode::Quantum).unwrap();
        if icm.num_qubits > 9 {
            continue;
        }
        let r = verify_circuit(&c, &icm, 5, TOL, checked, DEFAULT_CAP).unwrap();
        assert!(r.passed(), "{:?}: {r}", c.gates());
        checked += 1;
    }
}

#[test]
fn applying_the_frame_matches_reinterpreting_it() {
    let mut circuits: Vec<_> = GadgetKind::ALL.iter().map(|&k| gadget_circuit(k)).collect();
    let c = Circuit::from_gates(
        2,
        [Gate::X(0), Gate::T(0), Gate::Cnot { control: 0, target: 1 }, Gate::Z(1)],
    )
    .unwrap();
    circuits.push(transform_to_icm(&c, ToffoliMode::Quantum).unwrap());
    let mut rng = StdRng::seed_from_u64(17);
    for icm in &circuits {
        let input = random_state(icm.num_inputs(), &mut rng);
        let a = enumerate_branches(icm, &input, DEFAULT_CAP, FrameMode::Reinterpret).unwrap();
        let b = enumerate_branches(icm, &input, DEFAULT_CAP, FrameMode::Apply).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert!((x.probability - y.probability).abs() < 1e-12);
            assert!((x.state.fidelity(&y.state) - 1.0).abs() < TOL);
        }
    }
}
