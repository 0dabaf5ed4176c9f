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

//! Line-oriented text form of [`IcmCircuit`].
//!
//! ```text
//! .icm v1
//! .qubits <n>
//! .init q<i> <input|zero|plus|Y|A>
//! .cnot q<c> q<t>
//! .measure m<k> q<i> <X|Z|cond(m<j>:B0,B1)>
//! .frame m<k>=1 -> <X|Z|XZ> q<i>
//! .frame m<k>[B]=1 -> <X|Z|XZ> q<i>
//! .output <label> q<i>
//! .pauli q<i> <X|Z|XZ>
//! ```
//!
//! `.frame` lines belong to the `.measure` above them. The bracketed form
//! only fires when measurement `m<k>` used basis `B`. `.pauli` lines list
//! the outcome-independent frame and are omitted when it is the identity.

use std::collections::HashSet;
use std::fmt::Write;

use super::error::{strip_comment, ParseError, ParseErrorKind};
use crate::ir::{
    Basis, ConditionalMeasurement, FrameUpdate, IcmCircuit, InitState, MeasId, Output, Pauli, PauliFrame, Qubit,
    Selector,
};

pub fn emit_icm(c: &IcmCircuit) -> String {
    let mut s = String::new();
    writeln!(s, ".icm v1").unwrap();
    writeln!(s, ".qubits {}", c.num_qubits).unwrap();
    for (q, init) in c.inits.iter().enumerate() {
        writeln!(s, ".init q{q} {}", init.keyword()).unwrap();
    }
    for &(ctl, tgt) in &c.cnots {
        writeln!(s, ".cnot q{ctl} q{tgt}").unwrap();
    }
    for m in &c.measurements {
        let sel = match m.selector {
            Selector::Static(b) => b.to_string(),
            Selector::Conditioned { on, if_zero, if_one } => format!("cond({on}:{if_zero},{if_one})"),
        };
        writeln!(s, ".measure {} q{} {sel}", m.id, m.qubit).unwrap();
        for u in &m.frame_updates {
            match u.basis {
                None => writeln!(s, ".frame {}=1 -> {} q{}", u.condition, u.pauli, u.target).unwrap(),
                Some(b) => writeln!(s, ".frame {}[{b}]=1 -> {} q{}", u.condition, u.pauli, u.target).unwrap(),
            }
        }
    }
    for o in &c.outputs {
        writeln!(s, ".output {} q{}", o.label, o.qubit).unwrap();
    }
    for (q, p) in c.final_frame.support() {
        writeln!(s, ".pauli q{q} {p}").unwrap();
    }
    s
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Section {
    Start,
    Header,
    Qubits,
    Inits,
    Cnots,
    Measures,
    Outputs,
    Paulis,
}

struct Reader {
    line: usize,
    n: usize,
}

impl Reader {
    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError::new(self.line, kind)
    }

    fn malformed(&self, text: &str) -> ParseError {
        self.err(ParseErrorKind::Malformed(text.to_string()))
    }

    fn index(&self, tok: &str, prefix: char, text: &str) -> Result<usize, ParseError> {
        tok.strip_prefix(prefix)
            .filter(|d| !d.is_empty() && d.chars().all(|c| c.is_ascii_digit()))
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| self.malformed(text))
    }

    fn qubit(&self, tok: &str, text: &str) -> Result<Qubit, ParseError> {
        let q = self.index(tok, 'q', text)?;
        if q >= self.n {
            return Err(self.err(ParseErrorKind::OutOfRange {
                qubit: q,
                num_qubits: self.n,
            }));
        }
        Ok(q)
    }

    fn basis(&self, tok: &str, text: &str) -> Result<Basis, ParseError> {
        Basis::from_letter(tok).ok_or_else(|| self.malformed(text))
    }

    fn selector(&self, tok: &str, id: usize, text: &str) -> Result<Selector, ParseError> {
        if let Some(inner) = tok.strip_prefix("cond(").and_then(|t| t.strip_suffix(')')) {
            let (on, bases) = inner.split_once(':').ok_or_else(|| self.malformed(text))?;
            let (b0, b1) = bases.split_once(',').ok_or_else(|| self.malformed(text))?;
            let on = self.index(on, 'm', text)?;
            if on >= id {
                return Err(self.err(ParseErrorKind::ForwardReference { id, on }));
            }
            return Ok(Selector::Conditioned {
                on: MeasId(on),
                if_zero: self.basis(b0, text)?,
                if_one: self.basis(b1, text)?,
            });
        }
        Ok(Selector::Static(self.basis(tok, text)?))
    }
}

pub fn parse_icm(text: &str) -> Result<IcmCircuit, ParseError> {
    let mut r = Reader { line: 0, n: 0 };
    let mut section = Section::Start;
    let mut c = IcmCircuit::empty();
    let mut measured = HashSet::new();
    let mut paulis_seen = HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        r.line = idx + 1;
        let content = strip_comment(raw);
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let here = match tokens[0] {
            ".icm" => Section::Header,
            ".qubits" => Section::Qubits,
            ".init" => Section::Inits,
            ".cnot" => Section::Cnots,
            ".measure" | ".frame" => Section::Measures,
            ".output" => Section::Outputs,
            ".pauli" => Section::Paulis,
            _ => return Err(r.malformed(content)),
        };
        let repeatable = !matches!(here, Section::Header | Section::Qubits);
        let in_order = here > section || (here == section && repeatable);
        let skipped_header = (section == Section::Start && here != Section::Header)
            || (section < Section::Qubits && here > Section::Qubits);
        let inits_short = here > Section::Inits && c.inits.len() != r.n;
        if !in_order || skipped_header || inits_short {
            return Err(r.err(ParseErrorKind::Misordered(content.into())));
        }
        section = here;

        match (tokens[0], &tokens[1..]) {
            (".icm", ["v1"]) => {}
            (".qubits", [n]) => {
                r.n = n.parse().map_err(|_| r.malformed(content))?;
                c.num_qubits = r.n;
                c.final_frame = PauliFrame::identity(r.n);
            }
            (".init", [q, kw]) => {
                let q = r.index(q, 'q', content)?;
                if q != c.inits.len() {
                    return Err(r.err(ParseErrorKind::Misordered(content.into())));
                }
                r.qubit(&format!("q{q}"), content)?;
                c.inits
                    .push(InitState::from_keyword(kw).ok_or_else(|| r.malformed(content))?);
            }
            (".cnot", [ctl, tgt]) => {
                c.cnots.push((r.qubit(ctl, content)?, r.qubit(tgt, content)?));
            }
            (".measure", [id, q, sel]) => {
                let id = r.index(id, 'm', content)?;
                if id != c.measurements.len() {
                    return Err(r.err(ParseErrorKind::Misordered(content.into())));
                }
                let qubit = r.qubit(q, content)?;
                if !measured.insert(qubit) {
                    return Err(r.err(ParseErrorKind::DuplicateMeasurement { qubit }));
                }
                c.measurements.push(ConditionalMeasurement {
                    id: MeasId(id),
                    qubit,
                    selector: r.selector(sel, id, content)?,
                    frame_updates: Vec::new(),
                });
            }
            (".frame", [cond, "->", pauli, target]) => {
                let owner = c
                    .measurements
                    .len()
                    .checked_sub(1)
                    .ok_or_else(|| r.err(ParseErrorKind::Misordered(content.into())))?;
                let cond = cond.strip_suffix("=1").ok_or_else(|| r.malformed(content))?;
                let (id, basis) = match cond.split_once('[') {
                    None => (cond, None),
                    Some((id, rest)) => {
                        let b = rest.strip_suffix(']').ok_or_else(|| r.malformed(content))?;
                        (id, Some(r.basis(b, content)?))
                    }
                };
                let condition = r.index(id, 'm', content)?;
                if condition > owner {
                    return Err(r.err(ParseErrorKind::ForwardReference {
                        id: owner,
                        on: condition,
                    }));
                }
                let pauli: Pauli = pauli.parse().map_err(|_| r.malformed(content))?;
                if pauli.is_identity() {
                    return Err(r.malformed(content));
                }
                let target = r.qubit(target, content)?;
                c.measurements[owner].frame_updates.push(FrameUpdate {
                    condition: MeasId(condition),
                    basis,
                    target,
                    pauli,
                });
            }
            (".output", [label, q]) => {
                let qubit = r.qubit(q, content)?;
                c.outputs.push(Output {
                    label: label.to_string(),
                    qubit,
                });
            }
            (".pauli", [q, p]) => {
                let q = r.qubit(q, content)?;
                let p: Pauli = p.parse().map_err(|_| r.malformed(content))?;
                if p.is_identity() || !paulis_seen.insert(q) {
                    return Err(r.malformed(content));
                }
                c.final_frame.set(q, p);
            }
            _ => return Err(r.malformed(content)),
        }
    }
    if section < Section::Qubits {
        return Err(ParseError::new(r.line + 1, ParseErrorKind::MissingDirective(".qubits")));
    }
    if c.inits.len() != r.n {
        return Err(ParseError::new(r.line + 1, ParseErrorKind::MissingDirective(".init")));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transform::{gadget_circuit, GadgetKind};

    #[test]
    fn t_gadget_line_counts() {
        let text = emit_icm(&gadget_circuit(GadgetKind::TeleportT));
        let count = |p: &str| text.lines().filter(|l| l.starts_with(p)).count();
        assert_eq!(count(".init "), 6);
        assert_eq!(count(".cnot "), 6);
        assert_eq!(count(".measure "), 5);
        assert_eq!(count(".output "), 1);
        assert!(text.contains(".measure m1 q1 cond(m0:X,Z)\n"));
    }

    #[test]
    fn empty_circuit_is_header_only() {
        let text = emit_icm(&IcmCircuit::empty());
        assert_eq!(text, ".icm v1\n.qubits 0\n");
        assert_eq!(parse_icm(&text).unwrap(), IcmCircuit::empty());
    }

    #[test]
    fn gadgets_round_trip() {
        for kind in GadgetKind::ALL {
            let c = gadget_circuit(kind);
            assert_eq!(parse_icm(&emit_icm(&c)).unwrap(), c, "{kind}");
        }
    }

    const BASE: &str = ".icm v1\n.qubits 2\n.init q0 input\n.init q1 plus\n.cnot q1 q0\n";

    #[test]
    fn forward_condition_rejected() {
        let text = format!("{BASE}.measure m0 q0 Z\n.frame m1=1 -> X q1\n");
        let e = parse_icm(&text).unwrap_err();
        assert_eq!(e, ParseError::new(7, ParseErrorKind::ForwardReference { id: 0, on: 1 }));
        let text = format!("{BASE}.measure m0 q0 cond(m0:X,Z)\n");
        assert!(matches!(
            parse_icm(&text).unwrap_err().kind,
            ParseErrorKind::ForwardReference { id: 0, on: 0 }
        ));
    }

    #[test]
    fn duplicate_measurement_rejected() {
        let text = format!("{BASE}.measure m0 q0 Z\n.measure m1 q0 X\n");
        assert_eq!(
            parse_icm(&text).unwrap_err(),
            ParseError::new(7, ParseErrorKind::DuplicateMeasurement { qubit: 0 })
        );
    }

    #[test]
    fn malformed_and_misordered_lines() {
        let e = parse_icm(&format!("{BASE}.measure m0 q0 Y\n")).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Malformed(_)));
        let e = parse_icm(".icm v1\n.qubits 1\n.cnot q0 q0\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Misordered(_)));
        let e = parse_icm(".qubits 1\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Misordered(_)));
        let e = parse_icm(&format!("{BASE}.cnot q0 q7\n")).unwrap_err();
        assert_eq!(
            e.kind,
            ParseErrorKind::OutOfRange {
                qubit: 7,
                num_qubits: 2
            }
        );
    }
}
