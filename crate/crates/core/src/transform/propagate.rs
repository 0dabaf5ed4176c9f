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

//! Carries sparse Pauli operators through the tail of a CNOT network.

use std::collections::{BTreeMap, BTreeSet};

use crate::ir::{Pauli, Qubit};

/// Per-qubit index of the CNOTs touching it, for skipping straight to the
/// next gate that matters.
pub(crate) struct CnotIndex<'a> {
    cnots: &'a [(Qubit, Qubit)],
    touching: Vec<Vec<usize>>,
}

impl<'a> CnotIndex<'a> {
    pub(crate) fn new(num_qubits: usize, cnots: &'a [(Qubit, Qubit)]) -> Self {
        let mut touching = vec![Vec::new(); num_qubits];
        for (i, &(c, t)) in cnots.iter().enumerate() {
            touching[c].push(i);
            touching[t].push(i);
        }
        CnotIndex { cnots, touching }
    }

    fn next_on(&self, q: Qubit, from: usize) -> Option<usize> {
        let list = &self.touching[q];
        let at = list.partition_point(|&i| i < from);
        list.get(at).copied()
    }

    /// Conjugates `start`, which sits just before CNOT number `from`, through
    /// every later CNOT. Returns the non-identity support, sorted by qubit.
    pub(crate) fn propagate(&self, from: usize, start: &[(Qubit, Pauli)]) -> Vec<(Qubit, Pauli)> {
        let mut support: BTreeMap<Qubit, Pauli> = BTreeMap::new();
        for &(q, p) in start {
            *support.entry(q).or_insert(Pauli::I) ^= p;
        }
        support.retain(|_, p| !p.is_identity());

        let mut pending = BTreeSet::new();
        for &q in support.keys() {
            if let Some(i) = self.next_on(q, from) {
                pending.insert(i);
            }
        }

        while let Some(i) = pending.pop_first() {
            let (c, t) = self.cnots[i];
            let pc = support.get(&c).copied().unwrap_or(Pauli::I);
            let pt = support.get(&t).copied().unwrap_or(Pauli::I);
            let new_t = Pauli {
                x: pt.x ^ pc.x,
                z: pt.z,
            };
            let new_c = Pauli {
                x: pc.x,
                z: pc.z ^ pt.z,
            };
            for (q, p) in [(c, new_c), (t, new_t)] {
                if p.is_identity() {
                    support.remove(&q);
                } else {
                    support.insert(q, p);
                    if let Some(j) = self.next_on(q, i + 1) {
                        pending.insert(j);
                    }
                }
            }
        }
        support.into_iter().collect()
    }
}
