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

//! Plain-text source circuits over the full gate set.
//!
//! ```text
//! .qubits a b c
//! .constants --0
//! .garbage ---
//! h a
//! toffoli a b c
//! cv b c
//! ```
//!
//! Operands are qubit names; for controlled gates the target comes last.
//! `.constants` and `.garbage` are optional and use the `.real` flag strings.

use std::collections::HashMap;
use std::fmt::Write;

use super::error::{strip_comment, ParseError, ParseErrorKind};
use crate::ir::{Circuit, Gate, GateTag};

pub fn emit_circ(c: &Circuit) -> String {
    let mut s = String::new();
    writeln!(s, ".qubits {}", c.qubit_names().join(" ")).unwrap();
    if c.constants().iter().any(Option::is_some) {
        let flags: String = c
            .constants()
            .iter()
            .map(|b| match b {
                Some(false) => '0',
                Some(true) => '1',
                None => '-',
            })
            .collect();
        writeln!(s, ".constants {flags}").unwrap();
    }
    if c.garbage().iter().any(|&g| g) {
        let flags: String = c.garbage().iter().map(|&g| if g { '1' } else { '-' }).collect();
        writeln!(s, ".garbage {flags}").unwrap();
    }
    for g in c.gates() {
        let names: Vec<&str> = g.qubits().iter().map(|&q| c.qubit_names()[q].as_str()).collect();
        writeln!(s, "{} {}", g.tag().mnemonic(), names.join(" ")).unwrap();
    }
    s
}

pub fn parse_circ(text: &str) -> Result<Circuit, ParseError> {
    let mut circuit: Option<Circuit> = None;
    let mut names: HashMap<String, usize> = HashMap::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = strip_comment(raw);
        if content.is_empty() {
            continue;
        }
        let err = |kind| ParseError::new(line, kind);
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let (head, rest) = (tokens[0], &tokens[1..]);

        if head == ".qubits" {
            if circuit.is_some() {
                return Err(err(ParseErrorKind::DuplicateDirective(".qubits".into())));
            }
            for (i, n) in rest.iter().enumerate() {
                if names.insert(n.to_string(), i).is_some() {
                    return Err(err(ParseErrorKind::DuplicateDirective(format!("qubit {n}"))));
                }
            }
            circuit = Some(Circuit::with_names(rest.iter().map(|s| s.to_string()).collect()));
            continue;
        }
        let c = circuit
            .as_mut()
            .ok_or(err(ParseErrorKind::MissingDirective(".qubits")))?;
        let n = c.num_qubits();
        match head {
            ".constants" | ".garbage" => {
                let value = rest.concat();
                let directive = if head == ".constants" { ".constants" } else { ".garbage" };
                let allowed = if head == ".constants" { "01-" } else { "1-" };
                if value.chars().count() != n || !value.chars().all(|ch| allowed.contains(ch)) {
                    return Err(err(ParseErrorKind::BadFlags { directive, value }));
                }
                if head == ".constants" {
                    let bits = value
                        .chars()
                        .map(|ch| match ch {
                            '0' => Some(false),
                            '1' => Some(true),
                            _ => None,
                        })
                        .collect();
                    c.set_constants(bits).expect("length checked");
                } else {
                    c.set_garbage(value.chars().map(|ch| ch == '1').collect())
                        .expect("length checked");
                }
            }
            _ => {
                let tag = GateTag::from_mnemonic(head).ok_or(err(ParseErrorKind::UnknownGate(head.into())))?;
                if rest.len() != tag.arity() {
                    return Err(err(ParseErrorKind::Arity {
                        gate: head.into(),
                        expected: tag.arity(),
                        got: rest.len(),
                    }));
                }
                let mut ops = Vec::with_capacity(rest.len());
                for &name in rest {
                    ops.push(
                        *names
                            .get(name)
                            .ok_or(err(ParseErrorKind::UndeclaredVariable(name.into())))?,
                    );
                }
                let gate = Gate::from_parts(tag, &ops).expect("arity checked");
                if !gate.has_distinct_operands() {
                    return Err(err(ParseErrorKind::DuplicateOperand(content.into())));
                }
                c.push(gate).expect("operands resolved from declared qubits");
            }
        }
    }
    circuit.ok_or(ParseError::new(
        last_line + 1,
        ParseErrorKind::MissingDirective(".qubits"),
    ))
}
