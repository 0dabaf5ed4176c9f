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

//! Rewrites a source circuit into ICM form.
//!
//! After lowering, gates are walked in order. CNOTs are copied onto the
//! current physical wires; X and Z become frame entries; every other gate is
//! replaced by its teleportation gadget, whose output ancilla then carries the
//! logical wire. Byproducts are recorded at the CNOT position where they
//! appear and are pushed through the rest of the network once it is complete.

mod gadget;
mod propagate;

use thiserror::Error;

pub use gadget::{
    build_gadget, gadget_p, gadget_pdg, gadget_t, gadget_tdg, gadget_v, gadget_vdg, GadgetInstance, GadgetKind,
    GadgetMeasurement, LocalSelector, LocalUpdate,
};

use crate::decompose::{lower_to_ugs, ToffoliMode};
use crate::ir::{
    validate_icm, Basis, Circuit, ConditionalMeasurement, FrameUpdate, Gate, IcmCircuit, InitState, MeasId, Output,
    Pauli, PauliFrame, Qubit, Selector, Violation,
};
use propagate::CnotIndex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("transform produced an invalid ICM circuit: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
}

struct PendingUpdate {
    measurement: usize,
    basis: Option<Basis>,
    at: usize,
    target: Qubit,
    pauli: Pauli,
}

#[derive(Default)]
struct Builder {
    inits: Vec<InitState>,
    cnots: Vec<(Qubit, Qubit)>,
    measurements: Vec<(Qubit, Selector)>,
    updates: Vec<PendingUpdate>,
    fixed: Vec<(usize, Qubit, Pauli)>,
}

impl Builder {
    fn fresh(&self) -> Qubit {
        self.inits.len()
    }

    fn byproduct(&mut self, q: Qubit, p: Pauli) {
        self.fixed.push((self.cnots.len(), q, p));
    }

    /// Appends a gadget on physical qubit `q`; returns the new physical wire.
    fn gadget(&mut self, kind: GadgetKind, q: Qubit) -> Qubit {
        let g = build_gadget(kind, q, self.fresh());
        for &(a, init) in &g.ancillae {
            debug_assert_eq!(a, self.inits.len());
            self.inits.push(init);
        }
        self.cnots.extend_from_slice(&g.cnots);
        let base = self.measurements.len();
        let end = self.cnots.len();
        for (k, m) in g.measurements.iter().enumerate() {
            let selector = match m.selector {
                LocalSelector::Static(b) => Selector::Static(b),
                LocalSelector::Conditioned { on, if_zero, if_one } => Selector::Conditioned {
                    on: MeasId(base + on),
                    if_zero,
                    if_one,
                },
            };
            self.measurements.push((m.qubit, selector));
            for u in &m.updates {
                self.updates.push(PendingUpdate {
                    measurement: base + k,
                    basis: u.basis,
                    at: end,
                    target: u.target,
                    pauli: u.pauli,
                });
            }
        }
        for &(a, p) in &g.fixed_frame {
            self.byproduct(a, p);
        }
        g.output
    }

    fn finish(self, outputs: Vec<Output>) -> IcmCircuit {
        let n = self.inits.len();
        let index = CnotIndex::new(n, &self.cnots);

        // bits that cannot change a statically chosen outcome are dropped
        let mut irrelevant = vec![Pauli::I; n];
        for &(q, sel) in &self.measurements {
            if let Selector::Static(b) = sel {
                irrelevant[q] = match b {
                    Basis::Z => Pauli::Z,
                    Basis::X => Pauli::X,
                };
            }
        }
        let prune = |q: Qubit, p: Pauli| Pauli {
            x: p.x && !irrelevant[q].x,
            z: p.z && !irrelevant[q].z,
        };

        let mut final_frame = PauliFrame::identity(n);
        for &(at, q, p) in &self.fixed {
            for (t, tp) in index.propagate(at, &[(q, p)]) {
                final_frame.toggle(t, prune(t, tp));
            }
        }

        let mut measurements: Vec<ConditionalMeasurement> = self
            .measurements
            .iter()
            .enumerate()
            .map(|(k, &(qubit, selector))| ConditionalMeasurement {
                id: MeasId(k),
                qubit,
                selector,
                frame_updates: Vec::new(),
            })
            .collect();
        for u in &self.updates {
            for (target, p) in index.propagate(u.at, &[(u.target, u.pauli)]) {
                let pauli = prune(target, p);
                if !pauli.is_identity() {
                    measurements[u.measurement].frame_updates.push(FrameUpdate {
                        condition: MeasId(u.measurement),
                        basis: u.basis,
                        target,
                        pauli,
                    });
                }
            }
        }

        IcmCircuit {
            num_qubits: n,
            inits: self.inits,
            cnots: self.cnots,
            measurements,
            outputs,
            final_frame,
        }
    }
}

/// Lowers `c` and rebuilds it as an ICM circuit.
pub fn transform_to_icm(c: &Circuit, mode: ToffoliMode) -> Result<IcmCircuit, TransformError> {
    let lowered = lower_to_ugs(c, mode);
    let mut b = Builder::default();
    for (q, constant) in c.constants().iter().enumerate() {
        match constant {
            None => b.inits.push(InitState::Input),
            Some(bit) => {
                b.inits.push(InitState::Zero);
                if *bit {
                    b.byproduct(q, Pauli::X);
                }
            }
        }
    }

    let mut wire: Vec<Qubit> = (0..c.num_qubits()).collect();
    for g in lowered.gates() {
        match *g {
            Gate::Cnot { control, target } => b.cnots.push((wire[control], wire[target])),
            Gate::X(q) => b.byproduct(wire[q], Pauli::X),
            Gate::Z(q) => b.byproduct(wire[q], Pauli::Z),
            ref other => {
                let (kind, q) = GadgetKind::for_gate(other).expect("lowered circuits only hold teleportable gates");
                wire[q] = b.gadget(kind, wire[q]);
            }
        }
    }

    let outputs = c
        .qubit_names()
        .iter()
        .zip(&wire)
        .map(|(label, &qubit)| Output {
            label: label.clone(),
            qubit,
        })
        .collect();
    let icm = b.finish(outputs);
    let violations = validate_icm(&icm);
    if violations.is_empty() {
        Ok(icm)
    } else {
        Err(TransformError::Invalid(violations))
    }
}

/// ICM circuit of a lone gadget on a single input wire (qubit 0).
pub fn gadget_circuit(kind: GadgetKind) -> IcmCircuit {
    let mut c = Circuit::new(1);
    c.push(kind.gate(0)).expect("qubit 0 exists");
    transform_to_icm(&c, ToffoliMode::default()).expect("gadget circuits are valid")
}
