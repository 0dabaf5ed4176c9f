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

//! Reader for the RevLib `.real` format, restricted to NOT, CNOT, Toffoli
//! and controlled-V/V† gates.

use std::collections::HashMap;

use super::error::{strip_comment, ParseError, ParseErrorKind};
use crate::ir::{Circuit, Gate};

/// Header directives of a `.real` file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RealHeader {
    pub version: Option<String>,
    pub numvars: usize,
    pub variables: Vec<String>,
    /// One of `0`, `1`, `-` per variable.
    pub constants: Option<String>,
    /// One of `1`, `-` per variable.
    pub garbage: Option<String>,
}

impl RealHeader {
    fn constant_bits(&self) -> Vec<Option<bool>> {
        match &self.constants {
            None => vec![None; self.numvars],
            Some(s) => s
                .chars()
                .map(|c| match c {
                    '0' => Some(false),
                    '1' => Some(true),
                    _ => None,
                })
                .collect(),
        }
    }

    fn garbage_bits(&self) -> Vec<bool> {
        match &self.garbage {
            None => vec![false; self.numvars],
            Some(s) => s.chars().map(|c| c == '1').collect(),
        }
    }
}

fn flags(line: usize, directive: &'static str, value: &str, allowed: &str, n: usize) -> Result<String, ParseError> {
    if value.chars().count() != n || !value.chars().all(|c| allowed.contains(c)) {
        return Err(ParseError::new(
            line,
            ParseErrorKind::BadFlags {
                directive,
                value: value.to_string(),
            },
        ));
    }
    Ok(value.to_string())
}

fn parse_gate(line: usize, tokens: &[&str], vars: &HashMap<&str, usize>) -> Result<Gate, ParseError> {
    let err = |kind| ParseError::new(line, kind);
    let mnemonic = tokens[0].to_ascii_lowercase();
    let operands = &tokens[1..];
    let arity = match mnemonic.as_str() {
        "v" | "v+" => 2,
        m if m.starts_with('t') && m.len() > 1 && m[1..].chars().all(|c| c.is_ascii_digit()) => {
            let n: usize = m[1..]
                .parse()
                .map_err(|_| err(ParseErrorKind::UnknownGate(tokens[0].into())))?;
            match n {
                1..=3 => n,
                0 => return Err(err(ParseErrorKind::UnknownGate(tokens[0].into()))),
                _ => return Err(err(ParseErrorKind::MultiControl(tokens[0].into()))),
            }
        }
        _ => return Err(err(ParseErrorKind::UnknownGate(tokens[0].into()))),
    };
    if operands.len() != arity {
        return Err(err(ParseErrorKind::Arity {
            gate: tokens[0].into(),
            expected: arity,
            got: operands.len(),
        }));
    }
    let mut qs = Vec::with_capacity(arity);
    for &op in operands {
        if op.starts_with('-') {
            return Err(err(ParseErrorKind::NegativeControl(op.into())));
        }
        match vars.get(op) {
            Some(&q) => qs.push(q),
            None => return Err(err(ParseErrorKind::UndeclaredVariable(op.into()))),
        }
    }
    let gate = match (mnemonic.as_str(), qs.as_slice()) {
        ("t1", &[q]) => Gate::X(q),
        ("t2", &[control, target]) => Gate::Cnot { control, target },
        ("t3", &[c1, c2, target]) => Gate::Toffoli { c1, c2, target },
        ("v", &[control, target]) => Gate::CV { control, target },
        ("v+", &[control, target]) => Gate::CVdg { control, target },
        _ => unreachable!("arity checked above"),
    };
    if !gate.has_distinct_operands() {
        return Err(err(ParseErrorKind::DuplicateOperand(tokens.join(" "))));
    }
    Ok(gate)
}

/// Parses a `.real` file into its header and circuit.
pub fn parse_real_with_header(text: &str) -> Result<(RealHeader, Circuit), ParseError> {
    let mut header = RealHeader::default();
    let mut numvars: Option<usize> = None;
    let mut variables: Option<Vec<String>> = None;
    let mut raw_constants: Option<(usize, String)> = None;
    let mut raw_garbage: Option<(usize, String)> = None;
    let mut gates: Vec<(usize, Vec<&str>)> = Vec::new();
    let mut begun = false;
    let mut ended = false;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = strip_comment(raw);
        if content.is_empty() || ended {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let head = tokens[0];
        if !head.starts_with('.') {
            if !begun {
                return Err(ParseError::new(line, ParseErrorKind::MissingBegin));
            }
            gates.push((line, tokens));
            continue;
        }
        let rest = &tokens[1..];
        match head.to_ascii_lowercase().as_str() {
            ".begin" => begun = true,
            ".end" => {
                if !begun {
                    return Err(ParseError::new(line, ParseErrorKind::MissingBegin));
                }
                ended = true;
            }
            _ if begun => return Err(ParseError::new(line, ParseErrorKind::Misordered(content.into()))),
            ".version" => header.version = Some(rest.join(" ")),
            ".numvars" => {
                let n = match rest {
                    [n] => n.parse().ok(),
                    _ => None,
                };
                numvars = Some(n.ok_or_else(|| ParseError::new(line, ParseErrorKind::Malformed(content.into())))?);
            }
            ".variables" => {
                if variables.is_some() {
                    return Err(ParseError::new(
                        line,
                        ParseErrorKind::DuplicateDirective(".variables".into()),
                    ));
                }
                variables = Some(rest.iter().map(|s| s.to_string()).collect());
            }
            ".constants" => raw_constants = Some((line, rest.concat())),
            ".garbage" => raw_garbage = Some((line, rest.concat())),
            // .inputs, .outputs, .define and friends carry nothing we need
            _ => {}
        }
    }
    if !begun {
        return Err(ParseError::new(last_line + 1, ParseErrorKind::MissingBegin));
    }
    if !ended {
        return Err(ParseError::new(last_line + 1, ParseErrorKind::MissingEnd));
    }
    let numvars = numvars.ok_or(ParseError::new(1, ParseErrorKind::MissingDirective(".numvars")))?;
    let variables = variables.ok_or(ParseError::new(1, ParseErrorKind::MissingDirective(".variables")))?;
    if variables.len() != numvars {
        return Err(ParseError::new(
            1,
            ParseErrorKind::VariableCount {
                declared: numvars,
                listed: variables.len(),
            },
        ));
    }
    header.numvars = numvars;
    if let Some((line, s)) = raw_constants {
        header.constants = Some(flags(line, ".constants", &s, "01-", numvars)?);
    }
    if let Some((line, s)) = raw_garbage {
        header.garbage = Some(flags(line, ".garbage", &s, "1-", numvars)?);
    }

    let mut vars = HashMap::new();
    for (i, v) in variables.iter().enumerate() {
        if vars.insert(v.as_str(), i).is_some() {
            return Err(ParseError::new(
                1,
                ParseErrorKind::DuplicateDirective(format!("variable {v}")),
            ));
        }
    }
    let mut circuit = Circuit::with_names(variables.clone());
    for (line, tokens) in &gates {
        let g = parse_gate(*line, tokens, &vars)?;
        circuit.push(g).expect("operands resolved from declared variables");
    }
    circuit
        .set_constants(header.constant_bits())
        .expect("length checked against numvars");
    circuit
        .set_garbage(header.garbage_bits())
        .expect("length checked against numvars");
    header.variables = variables;
    Ok((header, circuit))
}

pub fn parse_real(text: &str) -> Result<Circuit, ParseError> {
    parse_real_with_header(text).map(|(_, c)| c)
}
