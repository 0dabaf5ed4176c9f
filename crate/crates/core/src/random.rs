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

//! Seeded random source circuits for property tests.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

use crate::ir::{Circuit, Gate, GateTag};

/// `num_gates` gates drawn uniformly from the tags in `tags` that fit on
/// `num_qubits` wires, with distinct random operands.
pub fn random_circuit(rng: &mut impl Rng, num_qubits: usize, num_gates: usize, tags: &[GateTag]) -> Circuit {
    let usable: Vec<GateTag> = tags.iter().copied().filter(|t| t.arity() <= num_qubits).collect();
    let mut c = Circuit::new(num_qubits);
    if usable.is_empty() {
        return c;
    }
    let mut wires: Vec<usize> = (0..num_qubits).collect();
    for _ in 0..num_gates {
        let tag = *usable.choose(rng).expect("non-empty");
        wires.shuffle(rng);
        let g = Gate::from_parts(tag, &wires[..tag.arity()]).expect("arity matches");
        c.push(g).expect("operands are distinct and in range");
    }
    c
}

/// Random circuit over every source gate kind, 3 to 6 wires and up to
/// `max_gates` gates.
pub fn random_source_circuit(rng: &mut impl Rng, max_gates: usize) -> Circuit {
    let n = rng.random_range(3..=6);
    let len = rng.random_range(0..=max_gates);
    random_circuit(rng, n, len, &GateTag::ALL)
}
