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

use std::fmt;

/// Index of a qubit inside a circuit. Indices are dense, `0..num_qubits`.
pub type Qubit = usize;

/// Source-level gate set.
///
/// Controlled gates name their control(s) first and the target last.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    X(Qubit),
    Z(Qubit),
    H(Qubit),
    P(Qubit),
    Pdg(Qubit),
    T(Qubit),
    Tdg(Qubit),
    V(Qubit),
    Vdg(Qubit),
    Cnot { control: Qubit, target: Qubit },
    CV { control: Qubit, target: Qubit },
    CVdg { control: Qubit, target: Qubit },
    Toffoli { c1: Qubit, c2: Qubit, target: Qubit },
}

/// Tag of a [`Gate`] without its operands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateTag {
    X,
    Z,
    H,
    P,
    Pdg,
    T,
    Tdg,
    V,
    Vdg,
    Cnot,
    CV,
    CVdg,
    Toffoli,
}

impl GateTag {
    pub const ALL: [GateTag; 13] = [
        GateTag::X,
        GateTag::Z,
        GateTag::H,
        GateTag::P,
        GateTag::Pdg,
        GateTag::T,
        GateTag::Tdg,
        GateTag::V,
        GateTag::Vdg,
        GateTag::Cnot,
        GateTag::CV,
        GateTag::CVdg,
        GateTag::Toffoli,
    ];

    pub fn arity(self) -> usize {
        match self {
            GateTag::Cnot | GateTag::CV | GateTag::CVdg => 2,
            GateTag::Toffoli => 3,
            _ => 1,
        }
    }

    /// Lower-case mnemonic used by the native circuit text format.
    pub fn mnemonic(self) -> &'static str {
        match self {
            GateTag::X => "x",
            GateTag::Z => "z",
            GateTag::H => "h",
            GateTag::P => "p",
            GateTag::Pdg => "pdg",
            GateTag::T => "t",
            GateTag::Tdg => "tdg",
            GateTag::V => "v",
            GateTag::Vdg => "vdg",
            GateTag::Cnot => "cnot",
            GateTag::CV => "cv",
            GateTag::CVdg => "cvdg",
            GateTag::Toffoli => "toffoli",
        }
    }

    pub fn from_mnemonic(s: &str) -> Option<GateTag> {
        GateTag::ALL
            .into_iter()
            .find(|tag| tag.mnemonic().eq_ignore_ascii_case(s))
    }
}

impl Gate {
    /// Builds a gate from a tag and operand list (controls first, target last).
    pub fn from_parts(tag: GateTag, ops: &[Qubit]) -> Option<Gate> {
        if ops.len() != tag.arity() {
            return None;
        }
        Some(match tag {
            GateTag::X => Gate::X(ops[0]),
            GateTag::Z => Gate::Z(ops[0]),
            GateTag::H => Gate::H(ops[0]),
            GateTag::P => Gate::P(ops[0]),
            GateTag::Pdg => Gate::Pdg(ops[0]),
            GateTag::T => Gate::T(ops[0]),
            GateTag::Tdg => Gate::Tdg(ops[0]),
            GateTag::V => Gate::V(ops[0]),
            GateTag::Vdg => Gate::Vdg(ops[0]),
            GateTag::Cnot => Gate::Cnot {
                control: ops[0],
                target: ops[1],
            },
            GateTag::CV => Gate::CV {
                control: ops[0],
                target: ops[1],
            },
            GateTag::CVdg => Gate::CVdg {
                control: ops[0],
                target: ops[1],
            },
            GateTag::Toffoli => Gate::Toffoli {
                c1: ops[0],
                c2: ops[1],
                target: ops[2],
            },
        })
    }

    pub fn tag(&self) -> GateTag {
        match self {
            Gate::X(_) => GateTag::X,
            Gate::Z(_) => GateTag::Z,
            Gate::H(_) => GateTag::H,
            Gate::P(_) => GateTag::P,
            Gate::Pdg(_) => GateTag::Pdg,
            Gate::T(_) => GateTag::T,
            Gate::Tdg(_) => GateTag::Tdg,
            Gate::V(_) => GateTag::V,
            Gate::Vdg(_) => GateTag::Vdg,
            Gate::Cnot { .. } => GateTag::Cnot,
            Gate::CV { .. } => GateTag::CV,
            Gate::CVdg { .. } => GateTag::CVdg,
            Gate::Toffoli { .. } => GateTag::Toffoli,
        }
    }

    /// Operands in declaration order: controls first, target last.
    pub fn qubits(&self) -> Vec<Qubit> {
        match *self {
            Gate::X(q)
            | Gate::Z(q)
            | Gate::H(q)
            | Gate::P(q)
            | Gate::Pdg(q)
            | Gate::T(q)
            | Gate::Tdg(q)
            | Gate::V(q)
            | Gate::Vdg(q) => vec![q],
            Gate::Cnot { control, target } | Gate::CV { control, target } | Gate::CVdg { control, target } => {
                vec![control, target]
            }
            Gate::Toffoli { c1, c2, target } => vec![c1, c2, target],
        }
    }

    /// Same gate with every operand passed through `f`.
    pub fn map_qubits(&self, mut f: impl FnMut(Qubit) -> Qubit) -> Gate {
        let ops: Vec<Qubit> = self.qubits().into_iter().map(&mut f).collect();
        Gate::from_parts(self.tag(), &ops).expect("arity preserved")
    }

    pub fn has_distinct_operands(&self) -> bool {
        let ops = self.qubits();
        ops.iter().enumerate().all(|(i, a)| ops[i + 1..].iter().all(|b| a != b))
    }

    /// Adjoint gate. X, Z, H, CNOT and Toffoli are self-inverse.
    pub fn adjoint(&self) -> Gate {
        match *self {
            Gate::P(q) => Gate::Pdg(q),
            Gate::Pdg(q) => Gate::P(q),
            Gate::T(q) => Gate::Tdg(q),
            Gate::Tdg(q) => Gate::T(q),
            Gate::V(q) => Gate::Vdg(q),
            Gate::Vdg(q) => Gate::V(q),
            Gate::CV { control, target } => Gate::CVdg { control, target },
            Gate::CVdg { control, target } => Gate::CV { control, target },
            g => g,
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag().mnemonic())?;
        for q in self.qubits() {
            write!(f, " q{q}")?;
        }
        Ok(())
    }
}
