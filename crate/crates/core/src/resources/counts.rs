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

//! Closed-form ancilla and CNOT counts.

use serde::{Deserialize, Serialize};

use crate::decompose::ToffoliMode;
use crate::ir::{Circuit, Gate};

/// Per-kind gate counts of a source circuit. `p`, `v` and `t` include their
/// adjoints; `cv` and `cvdg` are kept apart as in the report columns.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GateTally {
    pub x: usize,
    pub z: usize,
    pub cnot: usize,
    pub toffoli: usize,
    pub cv: usize,
    pub cvdg: usize,
    pub h: usize,
    pub p: usize,
    pub v: usize,
    pub t: usize,
}

impl GateTally {
    pub fn of(c: &Circuit) -> Self {
        Self::of_gates(c.gates())
    }

    pub fn of_gates(gates: &[Gate]) -> Self {
        let mut t = GateTally::default();
        for g in gates {
            match g {
                Gate::X(_) => t.x += 1,
                Gate::Z(_) => t.z += 1,
                Gate::Cnot { .. } => t.cnot += 1,
                Gate::Toffoli { .. } => t.toffoli += 1,
                Gate::CV { .. } => t.cv += 1,
                Gate::CVdg { .. } => t.cvdg += 1,
                Gate::H(_) => t.h += 1,
                Gate::P(_) | Gate::Pdg(_) => t.p += 1,
                Gate::V(_) | Gate::Vdg(_) => t.v += 1,
                Gate::T(_) | Gate::Tdg(_) => t.t += 1,
            }
        }
        t
    }

    /// Controlled-V gates of either orientation.
    pub fn n_cv(&self) -> usize {
        self.cv + self.cvdg
    }

    /// T-type gates left once everything is lowered.
    pub fn lowered_t_count(&self, mode: ToffoliMode) -> usize {
        self.t + 3 * self.n_cv() + toffoli_t_count(mode) * self.toffoli
    }
}

fn toffoli_t_count(mode: ToffoliMode) -> usize {
    match mode {
        ToffoliMode::Quantum => 7,
        ToffoliMode::Reversible => 9,
    }
}

/// Ancilla and CNOT cost of one gate kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GateCost {
    pub ancilla: usize,
    pub cnot: usize,
}

impl GateCost {
    pub const fn new(ancilla: usize, cnot: usize) -> Self {
        GateCost { ancilla, cnot }
    }
}

/// Costs in ICM form, per gate: T 5/6, P and V 1/1, H 3/3, CV 21/26,
/// Toffoli 42/55 or, built from CV gates, 63/80.
pub fn icm_gate_costs(mode: ToffoliMode) -> [GateCost; 5] {
    let t = GateCost::new(5, 6);
    let pv = GateCost::new(1, 1);
    let h = GateCost::new(3 * pv.ancilla, 3 * pv.cnot);
    let cv = GateCost::new(2 * h.ancilla + 3 * t.ancilla, 2 * h.cnot + 3 * t.cnot + 2);
    let tof = match mode {
        ToffoliMode::Quantum => GateCost::new(
            7 * t.ancilla + 2 * h.ancilla + pv.ancilla,
            7 * t.cnot + 2 * h.cnot + pv.cnot + 6,
        ),
        ToffoliMode::Reversible => GateCost::new(3 * cv.ancilla, 3 * cv.cnot + 2),
    };
    [t, pv, h, cv, tof]
}

fn weighted(t: &GateTally, [tc, pv, h, cv, tof]: [GateCost; 5]) -> (usize, usize) {
    let ancilla =
        tc.ancilla * t.t + pv.ancilla * (t.p + t.v) + h.ancilla * t.h + cv.ancilla * t.n_cv() + tof.ancilla * t.toffoli;
    let cnot = tc.cnot * t.t + pv.cnot * (t.p + t.v) + h.cnot * t.h + cv.cnot * t.n_cv() + tof.cnot * t.toffoli;
    (ancilla, cnot)
}

/// `(ancillae, added CNOTs)` of the ICM form.
pub fn theorem_counts(t: &GateTally, mode: ToffoliMode) -> (usize, usize) {
    weighted(t, icm_gate_costs(mode))
}

/// Ancilla and CNOT totals of one representation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Counts {
    pub ancilla: usize,
    pub cnot: usize,
}

/// Options for the non-ICM estimators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NonIcmOptions {
    /// Charge one extra ancilla per T-type gate in the worst case, for the
    /// qubit each P correction teleports into.
    pub correction_ancilla: bool,
}

/// Best and worst totals for the teleportation-based circuit without
/// selective teleportation. Every teleported gate costs one ancilla and one
/// CNOT; the worst case adds a P correction, one more CNOT, per T-type gate.
pub fn nonicm_estimates(t: &GateTally, mode: ToffoliMode, opts: NonIcmOptions) -> (Counts, Counts) {
    let one = GateCost::new(1, 1);
    let h = GateCost::new(3, 3);
    let cv = GateCost::new(2 * h.ancilla + 3, 2 * h.cnot + 3 + 2);
    let tof = match mode {
        ToffoliMode::Quantum => GateCost::new(7 + 2 * h.ancilla + 1, 7 + 2 * h.cnot + 1 + 6),
        ToffoliMode::Reversible => GateCost::new(3 * cv.ancilla, 3 * cv.cnot + 2),
    };
    let (ancilla, added) = weighted(t, [one, one, h, cv, tof]);
    let best = Counts {
        ancilla,
        cnot: t.cnot + added,
    };
    let ts = t.lowered_t_count(mode);
    let worst = Counts {
        ancilla: best.ancilla + if opts.correction_ancilla { ts } else { 0 },
        cnot: best.cnot + ts,
    };
    (best, worst)
}
