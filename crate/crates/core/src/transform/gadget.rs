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

//! Teleportation gadgets for P, V and T (and their adjoints).
//!
//! Correction tables below were obtained by exhaustive branch enumeration
//! and are checked by the verifier tests. Each update is written relative to
//! the end of the gadget's own CNOTs; the transform carries them through the
//! rest of the network.

use std::fmt;

use crate::ir::{Basis, Gate, InitState, Pauli, Qubit};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GadgetKind {
    TeleportP,
    TeleportPdg,
    TeleportV,
    TeleportVdg,
    TeleportT,
    TeleportTdg,
}

impl GadgetKind {
    pub const ALL: [GadgetKind; 6] = [
        GadgetKind::TeleportP,
        GadgetKind::TeleportPdg,
        GadgetKind::TeleportV,
        GadgetKind::TeleportVdg,
        GadgetKind::TeleportT,
        GadgetKind::TeleportTdg,
    ];

    /// Gadget replacing a lowered single-qubit gate, if it is teleported.
    pub fn for_gate(g: &Gate) -> Option<(GadgetKind, Qubit)> {
        Some(match *g {
            Gate::P(q) => (GadgetKind::TeleportP, q),
            Gate::Pdg(q) => (GadgetKind::TeleportPdg, q),
            Gate::V(q) => (GadgetKind::TeleportV, q),
            Gate::Vdg(q) => (GadgetKind::TeleportVdg, q),
            Gate::T(q) => (GadgetKind::TeleportT, q),
            Gate::Tdg(q) => (GadgetKind::TeleportTdg, q),
            _ => return None,
        })
    }

    /// The single-qubit gate this gadget implements.
    pub fn gate(self, q: Qubit) -> Gate {
        match self {
            GadgetKind::TeleportP => Gate::P(q),
            GadgetKind::TeleportPdg => Gate::Pdg(q),
            GadgetKind::TeleportV => Gate::V(q),
            GadgetKind::TeleportVdg => Gate::Vdg(q),
            GadgetKind::TeleportT => Gate::T(q),
            GadgetKind::TeleportTdg => Gate::Tdg(q),
        }
    }

    pub fn ancilla_count(self) -> usize {
        match self {
            GadgetKind::TeleportT | GadgetKind::TeleportTdg => 5,
            _ => 1,
        }
    }

    pub fn is_t_type(self) -> bool {
        matches!(self, GadgetKind::TeleportT | GadgetKind::TeleportTdg)
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GadgetKind::TeleportP => "P",
            GadgetKind::TeleportPdg => "P†",
            GadgetKind::TeleportV => "V",
            GadgetKind::TeleportVdg => "V†",
            GadgetKind::TeleportT => "T",
            GadgetKind::TeleportTdg => "T†",
        })
    }
}

/// Basis choice of a gadget measurement; `Conditioned` refers to another
/// measurement of the same gadget by its position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalSelector {
    Static(Basis),
    Conditioned { on: usize, if_zero: Basis, if_one: Basis },
}

/// Correction triggered by a gadget measurement's own outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalUpdate {
    /// Only applies when the measurement was done in this basis.
    pub basis: Option<Basis>,
    pub target: Qubit,
    pub pauli: Pauli,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetMeasurement {
    pub qubit: Qubit,
    pub selector: LocalSelector,
    pub updates: Vec<LocalUpdate>,
}

/// One placed gadget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetInstance {
    pub kind: GadgetKind,
    pub input: Qubit,
    /// Fresh qubits with their initial states, in allocation order.
    pub ancillae: Vec<(Qubit, InitState)>,
    pub cnots: Vec<(Qubit, Qubit)>,
    pub measurements: Vec<GadgetMeasurement>,
    /// Outcome-independent byproducts present once the gadget has run.
    pub fixed_frame: Vec<(Qubit, Pauli)>,
    pub output: Qubit,
}

fn update(basis: Option<Basis>, target: Qubit, pauli: Pauli) -> LocalUpdate {
    LocalUpdate { basis, target, pauli }
}

/// Teleported P: |Y⟩ ancilla controls a CNOT onto the data, data measured in Z.
pub fn gadget_p(q: Qubit, first_ancilla: Qubit) -> GadgetInstance {
    one_ancilla(GadgetKind::TeleportP, q, first_ancilla)
}

/// Teleported P†: the P circuit with an extra fixed Z on the output.
pub fn gadget_pdg(q: Qubit, first_ancilla: Qubit) -> GadgetInstance {
    one_ancilla(GadgetKind::TeleportPdg, q, first_ancilla)
}

/// Teleported V: data controls a CNOT onto a |Y⟩ ancilla, data measured in X.
/// Without correction this circuit yields V†, so V carries a fixed X.
pub fn gadget_v(q: Qubit, first_ancilla: Qubit) -> GadgetInstance {
    one_ancilla(GadgetKind::TeleportV, q, first_ancilla)
}

pub fn gadget_vdg(q: Qubit, first_ancilla: Qubit) -> GadgetInstance {
    one_ancilla(GadgetKind::TeleportVdg, q, first_ancilla)
}

fn one_ancilla(kind: GadgetKind, q: Qubit, a: Qubit) -> GadgetInstance {
    let (cnot, basis, fixed) = match kind {
        GadgetKind::TeleportP => ((a, q), Basis::Z, None),
        GadgetKind::TeleportPdg => ((a, q), Basis::Z, Some(Pauli::Z)),
        GadgetKind::TeleportV => ((q, a), Basis::X, Some(Pauli::X)),
        GadgetKind::TeleportVdg => ((q, a), Basis::X, None),
        _ => unreachable!("T gadgets use five ancillae"),
    };
    GadgetInstance {
        kind,
        input: q,
        ancillae: vec![(a, InitState::Y)],
        cnots: vec![cnot],
        measurements: vec![GadgetMeasurement {
            qubit: q,
            selector: LocalSelector::Static(basis),
            updates: vec![update(None, a, Pauli::XZ)],
        }],
        fixed_frame: fixed.map(|p| vec![(a, p)]).unwrap_or_default(),
        output: a,
    }
}

/// Teleported T with selective destination and selective source blocks.
///
/// Layout: `a1 = |A⟩` receives the teleported state; `a2 = |0⟩` pairs with
/// it; `a3 = |Y⟩` is the destination that applies P; `a4 = |+⟩` is the
/// destination that applies the identity; `a5 = |0⟩` collects whichever
/// branch was taken. The data measurement picks the branch: outcome 1 needs
/// the P correction (pattern Z(a1) X(a2), then X(a3) Z(a4)), outcome 0 does
/// not (X(a1) Z(a2), then Z(a3) X(a4)).
pub fn gadget_t(q: Qubit, first_ancilla: Qubit) -> GadgetInstance {
    t_family(GadgetKind::TeleportT, q, first_ancilla)
}

/// T† reuses the T circuit; the P branch is taken on data outcome 0 instead.
pub fn gadget_tdg(q: Qubit, first_ancilla: Qubit) -> GadgetInstance {
    t_family(GadgetKind::TeleportTdg, q, first_ancilla)
}

fn t_family(kind: GadgetKind, q: Qubit, first: Qubit) -> GadgetInstance {
    let [a1, a2, a3, a4, a5] = [first, first + 1, first + 2, first + 3, first + 4];
    use Basis::{X, Z};

    // (basis on P path, basis on identity path) for a1..a4
    let patterns = [(Z, X), (X, Z), (X, Z), (Z, X)];
    let p_branch_on_one = kind == GadgetKind::TeleportT;
    let sel = |(on_p, on_id): (Basis, Basis)| {
        let (if_zero, if_one) = if p_branch_on_one { (on_id, on_p) } else { (on_p, on_id) };
        LocalSelector::Conditioned { on: 0, if_zero, if_one }
    };
    let s = Some;

    let measurements = vec![
        GadgetMeasurement {
            qubit: q,
            selector: LocalSelector::Static(Z),
            updates: vec![update(None, a5, Pauli::XZ)],
        },
        GadgetMeasurement {
            qubit: a1,
            selector: sel(patterns[0]),
            updates: vec![
                update(s(X), a2, Pauli::Z),
                update(s(X), a5, Pauli::Z),
                update(s(Z), a3, Pauli::XZ),
                update(s(Z), a5, Pauli::X),
            ],
        },
        GadgetMeasurement {
            qubit: a2,
            selector: sel(patterns[1]),
            updates: vec![
                update(s(Z), a4, Pauli::X),
                update(s(Z), a5, Pauli::X),
                update(s(X), a5, Pauli::Z),
            ],
        },
        GadgetMeasurement {
            qubit: a3,
            selector: sel(patterns[2]),
            updates: vec![
                update(s(Z), a5, Pauli::X),
                update(s(X), a4, Pauli::Z),
                update(s(X), a5, Pauli::Z),
            ],
        },
        GadgetMeasurement {
            qubit: a4,
            selector: sel(patterns[3]),
            updates: vec![update(s(X), a5, Pauli::Z), update(s(Z), a5, Pauli::X)],
        },
    ];

    GadgetInstance {
        kind,
        input: q,
        ancillae: vec![
            (a1, InitState::A),
            (a2, InitState::Zero),
            (a3, InitState::Y),
            (a4, InitState::Plus),
            (a5, InitState::Zero),
        ],
        cnots: vec![(a1, q), (a1, a2), (a3, a1), (a4, a2), (a3, a5), (a4, a5)],
        measurements,
        fixed_frame: if kind == GadgetKind::TeleportTdg {
            vec![(a5, Pauli::Z)]
        } else {
            Vec::new()
        },
        output: a5,
    }
}

/// Places a gadget of `kind` on qubit `q`, numbering ancillae from `first_ancilla`.
pub fn build_gadget(kind: GadgetKind, q: Qubit, first_ancilla: Qubit) -> GadgetInstance {
    match kind {
        GadgetKind::TeleportP => gadget_p(q, first_ancilla),
        GadgetKind::TeleportPdg => gadget_pdg(q, first_ancilla),
        GadgetKind::TeleportV => gadget_v(q, first_ancilla),
        GadgetKind::TeleportVdg => gadget_vdg(q, first_ancilla),
        GadgetKind::TeleportT => gadget_t(q, first_ancilla),
        GadgetKind::TeleportTdg => gadget_tdg(q, first_ancilla),
    }
}
