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

//! Rewrites Toffoli, controlled-V and Hadamard gates into the teleportable
//! set {CNOT, P, P†, T, T†, V, V†} (plus X and Z, which end up in the frame).
//!
//! V is the square root of X, `V = H·P·H`, so `V² = X` holds exactly and the
//! controlled versions compose without relative phases.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::ir::{Circuit, Gate, Qubit};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("decomposition needs distinct qubits, got {0:?}")]
pub struct DuplicateQubits(pub Vec<Qubit>);

/// Which Toffoli decomposition [`lower_to_ugs`] uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ToffoliMode {
    /// Six CNOTs with T, T†, H and P.
    Quantum,
    /// Two CNOTs and three controlled-V gates.
    #[default]
    Reversible,
}

impl fmt::Display for ToffoliMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ToffoliMode::Quantum => "quantum",
            ToffoliMode::Reversible => "reversible",
        })
    }
}

impl FromStr for ToffoliMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "quantum" => Ok(ToffoliMode::Quantum),
            "reversible" => Ok(ToffoliMode::Reversible),
            other => Err(format!(
                "unknown toffoli mode `{other}` (expected quantum or reversible)"
            )),
        }
    }
}

fn distinct(qs: &[Qubit]) -> Result<(), DuplicateQubits> {
    for (i, a) in qs.iter().enumerate() {
        if qs[i + 1..].contains(a) {
            return Err(DuplicateQubits(qs.to_vec()));
        }
    }
    Ok(())
}

fn cnot(control: Qubit, target: Qubit) -> Gate {
    Gate::Cnot { control, target }
}

/// Toffoli from six CNOTs, seven T-type gates, two H and one P.
pub fn decompose_toffoli_quantum(c1: Qubit, c2: Qubit, t: Qubit) -> Result<Vec<Gate>, DuplicateQubits> {
    distinct(&[c1, c2, t])?;
    Ok(vec![
        Gate::H(t),
        cnot(c2, t),
        Gate::Tdg(t),
        cnot(c1, t),
        Gate::T(t),
        cnot(c2, t),
        Gate::Tdg(t),
        cnot(c1, t),
        Gate::T(t),
        Gate::Tdg(c2),
        Gate::H(t),
        cnot(c1, c2),
        Gate::Tdg(c2),
        cnot(c1, c2),
        Gate::T(c1),
        Gate::P(c2),
    ])
}

/// Toffoli from two CNOTs and three controlled-V gates.
pub fn decompose_toffoli_reversible(c1: Qubit, c2: Qubit, t: Qubit) -> Result<Vec<Gate>, DuplicateQubits> {
    distinct(&[c1, c2, t])?;
    Ok(vec![
        Gate::CV { control: c2, target: t },
        cnot(c1, c2),
        Gate::CVdg { control: c2, target: t },
        cnot(c1, c2),
        Gate::CV { control: c1, target: t },
    ])
}

/// Controlled-V as `H(t) · CS(c, t) · H(t)`, with the controlled phase built
/// from two CNOTs pointing from the target wire into the control wire.
pub fn decompose_cv(ctrl: Qubit, tgt: Qubit) -> Result<Vec<Gate>, DuplicateQubits> {
    distinct(&[ctrl, tgt])?;
    Ok(vec![
        Gate::H(tgt),
        Gate::T(ctrl),
        cnot(tgt, ctrl),
        Gate::Tdg(ctrl),
        Gate::T(tgt),
        cnot(tgt, ctrl),
        Gate::H(tgt),
    ])
}

/// Controlled-V†: the same network with every T-type gate inverted.
pub fn decompose_cvdg(ctrl: Qubit, tgt: Qubit) -> Result<Vec<Gate>, DuplicateQubits> {
    Ok(decompose_cv(ctrl, tgt)?.iter().map(Gate::adjoint).collect())
}

/// `H = P·V·P` up to a global phase. Returned in application order.
pub fn decompose_h(q: Qubit) -> Vec<Gate> {
    vec![Gate::P(q), Gate::V(q), Gate::P(q)]
}

fn push_lowered(out: &mut Vec<Gate>, g: Gate, mode: ToffoliMode) -> Result<(), DuplicateQubits> {
    match g {
        Gate::Toffoli { c1, c2, target } => {
            let seq = match mode {
                ToffoliMode::Quantum => decompose_toffoli_quantum(c1, c2, target)?,
                ToffoliMode::Reversible => decompose_toffoli_reversible(c1, c2, target)?,
            };
            for inner in seq {
                push_lowered(out, inner, mode)?;
            }
        }
        Gate::CV { control, target } => {
            for inner in decompose_cv(control, target)? {
                push_lowered(out, inner, mode)?;
            }
        }
        Gate::CVdg { control, target } => {
            for inner in decompose_cvdg(control, target)? {
                push_lowered(out, inner, mode)?;
            }
        }
        Gate::H(q) => out.extend(decompose_h(q)),
        other => out.push(other),
    }
    Ok(())
}

/// Rewrites a whole circuit so it only uses CNOT, P, P†, T, T†, V, V†, X and Z.
pub fn lower_to_ugs(c: &Circuit, mode: ToffoliMode) -> Circuit {
    let mut gates = Vec::with_capacity(c.gates().len() * 4);
    for &g in c.gates() {
        // circuits validate operand distinctness on construction
        push_lowered(&mut gates, g, mode).expect("circuit gates have distinct operands");
    }
    c.with_gates(gates)
}

/// Whether `g` survives [`lower_to_ugs`] unchanged.
pub fn is_lowered(g: &Gate) -> bool {
    !matches!(
        g,
        Gate::Toffoli { .. } | Gate::CV { .. } | Gate::CVdg { .. } | Gate::H(_)
    )
}
