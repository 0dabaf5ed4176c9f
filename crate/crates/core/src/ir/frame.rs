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

//! Pauli byproducts and their classical tracking.

use std::fmt;
use std::ops::{BitXor, BitXorAssign};
use std::str::FromStr;

use thiserror::Error;

use super::gate::Qubit;
use super::icm::Basis;

/// Single-qubit Pauli up to phase, stored as `X^x Z^z`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Pauli {
    pub x: bool,
    pub z: bool,
}

impl Pauli {
    pub const I: Pauli = Pauli { x: false, z: false };
    pub const X: Pauli = Pauli { x: true, z: false };
    pub const Z: Pauli = Pauli { x: false, z: true };
    pub const XZ: Pauli = Pauli { x: true, z: true };

    pub fn is_identity(self) -> bool {
        !self.x && !self.z
    }

    /// Whether this byproduct flips the outcome of a measurement in `basis`.
    pub fn flips(self, basis: Basis) -> bool {
        match basis {
            Basis::Z => self.x,
            Basis::X => self.z,
        }
    }
}

impl BitXor for Pauli {
    type Output = Pauli;

    fn bitxor(self, rhs: Pauli) -> Pauli {
        Pauli {
            x: self.x ^ rhs.x,
            z: self.z ^ rhs.z,
        }
    }
}

impl BitXorAssign for Pauli {
    fn bitxor_assign(&mut self, rhs: Pauli) {
        *self = *self ^ rhs;
    }
}

impl fmt::Display for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match (self.x, self.z) {
            (false, false) => "I",
            (true, false) => "X",
            (false, true) => "Z",
            (true, true) => "XZ",
        })
    }
}

impl FromStr for Pauli {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "I" => Ok(Pauli::I),
            "X" => Ok(Pauli::X),
            "Z" => Ok(Pauli::Z),
            "XZ" => Ok(Pauli::XZ),
            _ => Err(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("frame sizes differ: {left} vs {right} qubits")]
pub struct FrameSizeMismatch {
    pub left: usize,
    pub right: usize,
}

/// Pending `X^x Z^z` byproduct on every qubit of a register.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliFrame {
    entries: Vec<Pauli>,
}

impl PauliFrame {
    pub fn identity(num_qubits: usize) -> Self {
        PauliFrame {
            entries: vec![Pauli::I; num_qubits],
        }
    }

    pub fn from_paulis(entries: Vec<Pauli>) -> Self {
        PauliFrame { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, q: Qubit) -> Pauli {
        self.entries[q]
    }

    pub fn toggle(&mut self, q: Qubit, p: Pauli) {
        self.entries[q] ^= p;
    }

    pub fn set(&mut self, q: Qubit, p: Pauli) {
        self.entries[q] = p;
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().all(|p| p.is_identity())
    }

    pub fn paulis(&self) -> &[Pauli] {
        &self.entries
    }

    /// Non-identity entries in qubit order.
    pub fn support(&self) -> impl Iterator<Item = (Qubit, Pauli)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_identity())
            .map(|(q, &p)| (q, p))
    }

    pub fn resize(&mut self, num_qubits: usize) {
        self.entries.resize(num_qubits, Pauli::I);
    }

    /// Product of two frames; Paulis commute up to phase, so this is XOR.
    pub fn compose(&self, other: &PauliFrame) -> Result<PauliFrame, FrameSizeMismatch> {
        if self.len() != other.len() {
            return Err(FrameSizeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(PauliFrame {
            entries: self.entries.iter().zip(&other.entries).map(|(&a, &b)| a ^ b).collect(),
        })
    }

    /// Conjugates the frame through `CNOT(control, target)`: an X on the
    /// control spreads to the target, a Z on the target spreads to the control.
    pub fn track_cnot(&self, control: Qubit, target: Qubit) -> PauliFrame {
        let mut out = self.clone();
        out.track_cnot_in_place(control, target);
        out
    }

    pub fn track_cnot_in_place(&mut self, control: Qubit, target: Qubit) {
        debug_assert_ne!(control, target);
        let c = self.entries[control];
        let t = self.entries[target];
        self.entries[target].x ^= c.x;
        self.entries[control].z ^= t.z;
    }
}
