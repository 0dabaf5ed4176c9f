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

//! ICM-form circuits: initialisations, then a CNOT network, then a
//! feedforward-scheduled list of single-qubit measurements.
//!
//! Frame semantics: `final_frame` and every frame update describe Pauli
//! byproducts sitting after the whole CNOT network. Before a qubit is
//! measured, the byproduct currently recorded on it is either applied
//! physically or, equivalently, used to reinterpret the raw outcome. The
//! reinterpreted ("corrected") outcome is the one that selectors and frame
//! update conditions read.

use std::fmt;

use super::frame::{Pauli, PauliFrame};
use super::gate::Qubit;

/// Initial state of an ICM qubit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InitState {
    /// |0⟩
    Zero,
    /// |+⟩
    Plus,
    /// (|0⟩ + i|1⟩)/√2
    Y,
    /// (|0⟩ + e^{iπ/4}|1⟩)/√2
    A,
    /// Data wire carrying a circuit input.
    Input,
}

impl InitState {
    pub fn keyword(self) -> &'static str {
        match self {
            InitState::Zero => "zero",
            InitState::Plus => "plus",
            InitState::Y => "Y",
            InitState::A => "A",
            InitState::Input => "input",
        }
    }

    pub fn from_keyword(s: &str) -> Option<InitState> {
        [
            InitState::Zero,
            InitState::Plus,
            InitState::Y,
            InitState::A,
            InitState::Input,
        ]
        .into_iter()
        .find(|i| i.keyword() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    X,
    Z,
}

impl Basis {
    pub fn from_letter(s: &str) -> Option<Basis> {
        match s {
            "X" => Some(Basis::X),
            "Z" => Some(Basis::Z),
            _ => None,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::X => "X",
            Basis::Z => "Z",
        })
    }
}

/// Position of a measurement in the schedule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MeasId(pub usize);

impl fmt::Display for MeasId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{}", self.0)
    }
}

/// How the basis of a measurement is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Selector {
    Static(Basis),
    /// Basis picked by the corrected outcome of an earlier measurement.
    Conditioned {
        on: MeasId,
        if_zero: Basis,
        if_one: Basis,
    },
}

impl Selector {
    pub fn choose(&self, outcome_of: impl Fn(MeasId) -> bool) -> Basis {
        match *self {
            Selector::Static(b) => b,
            Selector::Conditioned { on, if_zero, if_one } => {
                if outcome_of(on) {
                    if_one
                } else {
                    if_zero
                }
            }
        }
    }

    /// Every basis this selector can produce.
    pub fn bases(&self) -> Vec<Basis> {
        match *self {
            Selector::Static(b) => vec![b],
            Selector::Conditioned { if_zero, if_one, .. } if if_zero == if_one => vec![if_zero],
            Selector::Conditioned { if_zero, if_one, .. } => vec![if_zero, if_one],
        }
    }
}

/// Byproduct `pauli` on `target`, applied when measurement `condition` has
/// corrected outcome 1 and, if `basis` is set, was performed in that basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FrameUpdate {
    pub condition: MeasId,
    pub basis: Option<Basis>,
    pub target: Qubit,
    pub pauli: Pauli,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConditionalMeasurement {
    pub id: MeasId,
    pub qubit: Qubit,
    pub selector: Selector,
    /// Processed right after this measurement, in order.
    pub frame_updates: Vec<FrameUpdate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Output {
    pub label: String,
    pub qubit: Qubit,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IcmCircuit {
    pub num_qubits: usize,
    pub inits: Vec<InitState>,
    pub cnots: Vec<(Qubit, Qubit)>,
    pub measurements: Vec<ConditionalMeasurement>,
    pub outputs: Vec<Output>,
    /// Outcome-independent byproducts: absorbed X/Z gates and fixed gadget
    /// corrections, already carried through the CNOT network.
    pub final_frame: PauliFrame,
}

impl IcmCircuit {
    pub fn empty() -> Self {
        IcmCircuit {
            num_qubits: 0,
            inits: Vec::new(),
            cnots: Vec::new(),
            measurements: Vec::new(),
            outputs: Vec::new(),
            final_frame: PauliFrame::identity(0),
        }
    }

    /// Qubits that do not carry a logical output.
    pub fn num_ancillae(&self) -> usize {
        self.num_qubits.saturating_sub(self.outputs.len())
    }

    pub fn num_inputs(&self) -> usize {
        self.inits.iter().filter(|&&i| i == InitState::Input).count()
    }

    pub fn output_qubits(&self) -> Vec<Qubit> {
        self.outputs.iter().map(|o| o.qubit).collect()
    }

    /// Measurement that consumes `q`, if any.
    pub fn measurement_of(&self, q: Qubit) -> Option<&ConditionalMeasurement> {
        self.measurements.iter().find(|m| m.qubit == q)
    }
}
