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

use std::collections::HashSet;
use std::fmt;

use super::gate::Qubit;
use super::icm::{IcmCircuit, MeasId, Selector};

/// A broken structural invariant of an [`IcmCircuit`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    InitCount {
        expected: usize,
        got: usize,
    },
    FrameSize {
        expected: usize,
        got: usize,
    },
    CnotOutOfRange {
        index: usize,
        qubit: Qubit,
    },
    CnotSameQubit {
        index: usize,
        qubit: Qubit,
    },
    MeasurementIdOrder {
        position: usize,
        id: MeasId,
    },
    MeasuredOutOfRange {
        id: MeasId,
        qubit: Qubit,
    },
    MeasuredTwice {
        qubit: Qubit,
        first: MeasId,
        second: MeasId,
    },
    OutputMeasured {
        qubit: Qubit,
        id: MeasId,
    },
    Unmeasured {
        qubit: Qubit,
    },
    ForwardSelector {
        id: MeasId,
        on: MeasId,
    },
    ForwardFrameCondition {
        id: MeasId,
        condition: MeasId,
    },
    FrameTargetOutOfRange {
        id: MeasId,
        target: Qubit,
    },
    FrameTargetAlreadyMeasured {
        id: MeasId,
        target: Qubit,
    },
    OutputOutOfRange {
        label: String,
        qubit: Qubit,
    },
    DuplicateOutputQubit {
        qubit: Qubit,
    },
    DuplicateOutputLabel {
        label: String,
    },
    InputsExceedOutputs {
        inputs: usize,
        outputs: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::InitCount { expected, got } => {
                write!(f, "expected {expected} initialisations, found {got}")
            }
            Violation::FrameSize { expected, got } => {
                write!(f, "frame covers {got} qubits, circuit has {expected}")
            }
            Violation::CnotOutOfRange { index, qubit } => {
                write!(f, "cnot #{index} uses out-of-range qubit q{qubit}")
            }
            Violation::CnotSameQubit { index, qubit } => {
                write!(f, "cnot #{index} has q{qubit} as both control and target")
            }
            Violation::MeasurementIdOrder { position, id } => {
                write!(f, "measurement at position {position} is labelled {id}")
            }
            Violation::MeasuredOutOfRange { id, qubit } => {
                write!(f, "{id} measures out-of-range qubit q{qubit}")
            }
            Violation::MeasuredTwice { qubit, first, second } => {
                write!(f, "q{qubit} measured by both {first} and {second}")
            }
            Violation::OutputMeasured { qubit, id } => {
                write!(f, "output qubit q{qubit} is measured by {id}")
            }
            Violation::Unmeasured { qubit } => write!(f, "non-output qubit q{qubit} is never measured"),
            Violation::ForwardSelector { id, on } => {
                write!(f, "{id} selects its basis from later measurement {on}")
            }
            Violation::ForwardFrameCondition { id, condition } => {
                write!(
                    f,
                    "{id} carries a frame update conditioned on later measurement {condition}"
                )
            }
            Violation::FrameTargetOutOfRange { id, target } => {
                write!(f, "{id} updates out-of-range qubit q{target}")
            }
            Violation::FrameTargetAlreadyMeasured { id, target } => {
                write!(f, "{id} updates q{target}, which is already measured")
            }
            Violation::OutputOutOfRange { label, qubit } => {
                write!(f, "output {label} points at out-of-range qubit q{qubit}")
            }
            Violation::DuplicateOutputQubit { qubit } => write!(f, "q{qubit} is listed as two outputs"),
            Violation::DuplicateOutputLabel { label } => write!(f, "output label {label} is repeated"),
            Violation::InputsExceedOutputs { inputs, outputs } => {
                write!(f, "{inputs} input wires but only {outputs} outputs")
            }
        }
    }
}

/// Lists every violated invariant; an empty list means the circuit is
/// well-formed ICM.
pub fn validate_icm(c: &IcmCircuit) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = c.num_qubits;

    if c.inits.len() != n {
        out.push(Violation::InitCount {
            expected: n,
            got: c.inits.len(),
        });
    }
    if c.final_frame.len() != n {
        out.push(Violation::FrameSize {
            expected: n,
            got: c.final_frame.len(),
        });
    }

    for (index, &(ctl, tgt)) in c.cnots.iter().enumerate() {
        for q in [ctl, tgt] {
            if q >= n {
                out.push(Violation::CnotOutOfRange { index, qubit: q });
            }
        }
        if ctl == tgt {
            out.push(Violation::CnotSameQubit { index, qubit: ctl });
        }
    }

    let mut is_output = vec![false; n];
    let mut labels = HashSet::new();
    for o in &c.outputs {
        if o.qubit >= n {
            out.push(Violation::OutputOutOfRange {
                label: o.label.clone(),
                qubit: o.qubit,
            });
            continue;
        }
        if is_output[o.qubit] {
            out.push(Violation::DuplicateOutputQubit { qubit: o.qubit });
        }
        is_output[o.qubit] = true;
        if !labels.insert(o.label.as_str()) {
            out.push(Violation::DuplicateOutputLabel { label: o.label.clone() });
        }
    }
    let inputs = c.num_inputs();
    if inputs > c.outputs.len() {
        out.push(Violation::InputsExceedOutputs {
            inputs,
            outputs: c.outputs.len(),
        });
    }

    // measured_by[q] = schedule position that consumed q
    let mut measured_by: Vec<Option<MeasId>> = vec![None; n];
    for (position, m) in c.measurements.iter().enumerate() {
        if m.id != MeasId(position) {
            out.push(Violation::MeasurementIdOrder { position, id: m.id });
        }
        let me = MeasId(position);
        if let Selector::Conditioned { on, .. } = m.selector {
            if on >= me {
                out.push(Violation::ForwardSelector { id: me, on });
            }
        }
        if m.qubit >= n {
            out.push(Violation::MeasuredOutOfRange { id: me, qubit: m.qubit });
        } else {
            if let Some(first) = measured_by[m.qubit] {
                out.push(Violation::MeasuredTwice {
                    qubit: m.qubit,
                    first,
                    second: me,
                });
            } else {
                measured_by[m.qubit] = Some(me);
            }
            if is_output[m.qubit] {
                out.push(Violation::OutputMeasured { qubit: m.qubit, id: me });
            }
        }
        for u in &m.frame_updates {
            if u.condition > me {
                out.push(Violation::ForwardFrameCondition {
                    id: me,
                    condition: u.condition,
                });
            }
            if u.target >= n {
                out.push(Violation::FrameTargetOutOfRange {
                    id: me,
                    target: u.target,
                });
            } else if measured_by[u.target].is_some() {
                out.push(Violation::FrameTargetAlreadyMeasured {
                    id: me,
                    target: u.target,
                });
            }
        }
    }

    for q in 0..n {
        if !is_output[q] && measured_by[q].is_none() {
            out.push(Violation::Unmeasured { qubit: q });
        }
    }
    out
}
