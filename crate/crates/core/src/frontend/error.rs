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

use thiserror::Error;

/// Parse failure with the 1-based line it was found on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub fn new(line: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, kind }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnknownGate(String),
    MultiControl(String),
    NegativeControl(String),
    UndeclaredVariable(String),
    Arity { gate: String, expected: usize, got: usize },
    DuplicateOperand(String),
    MissingBegin,
    MissingEnd,
    MissingDirective(&'static str),
    DuplicateDirective(String),
    VariableCount { declared: usize, listed: usize },
    BadFlags { directive: &'static str, value: String },
    Malformed(String),
    OutOfRange { qubit: usize, num_qubits: usize },
    ForwardReference { id: usize, on: usize },
    DuplicateMeasurement { qubit: usize },
    Misordered(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnknownGate(g) => write!(f, "unknown gate `{g}`"),
            ParseErrorKind::MultiControl(g) => {
                write!(
                    f,
                    "gate `{g}` has more than two controls; only t1, t2, t3, v and v+ are supported"
                )
            }
            ParseErrorKind::NegativeControl(v) => write!(f, "negative control `{v}` is not supported"),
            ParseErrorKind::UndeclaredVariable(v) => write!(f, "undeclared variable `{v}`"),
            ParseErrorKind::Arity { gate, expected, got } => {
                write!(f, "`{gate}` takes {expected} operands, found {got}")
            }
            ParseErrorKind::DuplicateOperand(g) => write!(f, "`{g}` repeats an operand"),
            ParseErrorKind::MissingBegin => f.write_str("gate listed before `.begin`"),
            ParseErrorKind::MissingEnd => f.write_str("missing `.end`"),
            ParseErrorKind::MissingDirective(d) => write!(f, "missing `{d}`"),
            ParseErrorKind::DuplicateDirective(d) => write!(f, "`{d}` given twice"),
            ParseErrorKind::VariableCount { declared, listed } => {
                write!(f, ".numvars says {declared} but {listed} variables are listed")
            }
            ParseErrorKind::BadFlags { directive, value } => write!(f, "bad `{directive}` value `{value}`"),
            ParseErrorKind::Malformed(l) => write!(f, "malformed line `{l}`"),
            ParseErrorKind::OutOfRange { qubit, num_qubits } => {
                write!(f, "qubit q{qubit} out of range for {num_qubits} qubits")
            }
            ParseErrorKind::ForwardReference { id, on } => {
                write!(f, "m{id} refers to m{on}, which is not measured yet")
            }
            ParseErrorKind::DuplicateMeasurement { qubit } => write!(f, "q{qubit} is measured twice"),
            ParseErrorKind::Misordered(l) => write!(f, "`{l}` is out of place"),
        }
    }
}

/// Drops a trailing `#` comment and surrounding whitespace.
pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => line[..i].trim(),
        None => line.trim(),
    }
}
