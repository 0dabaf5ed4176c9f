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

//! Report rows comparing the plain teleportation circuit with the ICM form.

use std::fmt::Write;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::counts::{nonicm_estimates, theorem_counts, GateTally, NonIcmOptions};
use super::timing::{icm_time, nonicm_time, CycleDetected};
use crate::decompose::{lower_to_ugs, ToffoliMode};
use crate::ir::{Circuit, Gate};
use crate::transform::{transform_to_icm, TransformError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResourceError {
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error(transparent)]
    Cycle(#[from] CycleDetected),
    #[error("{what}: formula gives {formula}, circuit has {structural}")]
    Mismatch {
        what: &'static str,
        formula: usize,
        structural: usize,
    },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Cost {
    pub ancilla: usize,
    pub cnot: usize,
    pub time: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResourceReport {
    pub circuit: String,
    pub qubits: usize,
    pub tally: GateTally,
    pub best: Cost,
    pub worst: Cost,
    pub icm: Cost,
}

fn agree(what: &'static str, formula: usize, structural: usize) -> Result<(), ResourceError> {
    if formula == structural {
        Ok(())
    } else {
        Err(ResourceError::Mismatch {
            what,
            formula,
            structural,
        })
    }
}

/// Builds the report row for `c`, checking every closed-form count against
/// the transformed and lowered circuits.
pub fn report(
    name: &str,
    c: &Circuit,
    mode: ToffoliMode,
    opts: NonIcmOptions,
) -> Result<ResourceReport, ResourceError> {
    let tally = GateTally::of(c);
    let (ancilla, added) = theorem_counts(&tally, mode);
    let icm = transform_to_icm(c, mode)?;
    agree("ICM ancillae", ancilla, icm.num_ancillae())?;
    agree("ICM CNOTs", tally.cnot + added, icm.cnots.len())?;

    let (best, worst) = nonicm_estimates(&tally, mode, opts);
    let lowered = lower_to_ugs(c, mode);
    let teleported = lowered
        .gates()
        .iter()
        .filter(|g| !matches!(g, Gate::Cnot { .. } | Gate::X(_) | Gate::Z(_)))
        .count();
    let lowered_cnots = lowered
        .gates()
        .iter()
        .filter(|g| matches!(g, Gate::Cnot { .. }))
        .count();
    agree("best-case ancillae", best.ancilla, teleported)?;
    agree("best-case CNOTs", best.cnot, lowered_cnots + teleported)?;

    Ok(ResourceReport {
        circuit: name.to_string(),
        qubits: c.num_qubits(),
        tally,
        best: Cost {
            ancilla: best.ancilla,
            cnot: best.cnot,
            time: nonicm_time(c, mode, false)?,
        },
        worst: Cost {
            ancilla: worst.ancilla,
            cnot: worst.cnot,
            time: nonicm_time(c, mode, true)?,
        },
        icm: Cost {
            ancilla: icm.num_ancillae(),
            cnot: icm.cnots.len(),
            time: icm_time(&icm)?,
        },
    })
}

/// Flat CSV form of a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub circuit: String,
    #[serde(rename = "Qub.")]
    pub qubits: usize,
    #[serde(rename = "X")]
    pub x: usize,
    #[serde(rename = "C-X")]
    pub cnot: usize,
    #[serde(rename = "Toff.")]
    pub toffoli: usize,
    #[serde(rename = "C-V")]
    pub cv: usize,
    #[serde(rename = "C-V†")]
    pub cvdg: usize,
    pub best_ancilla: usize,
    pub best_cnot: usize,
    pub best_time: u64,
    pub worst_ancilla: usize,
    pub worst_cnot: usize,
    pub worst_time: u64,
    pub icm_ancilla: usize,
    pub icm_cnot: usize,
    pub icm_time: u64,
}

impl From<&ResourceReport> for ReportRow {
    fn from(r: &ResourceReport) -> Self {
        ReportRow {
            circuit: r.circuit.clone(),
            qubits: r.qubits,
            x: r.tally.x,
            cnot: r.tally.cnot,
            toffoli: r.tally.toffoli,
            cv: r.tally.cv,
            cvdg: r.tally.cvdg,
            best_ancilla: r.best.ancilla,
            best_cnot: r.best.cnot,
            best_time: r.best.time,
            worst_ancilla: r.worst.ancilla,
            worst_cnot: r.worst.cnot,
            worst_time: r.worst.time,
            icm_ancilla: r.icm.ancilla,
            icm_cnot: r.icm.cnot,
            icm_time: r.icm.time,
        }
    }
}

impl ReportRow {
    fn cells(&self) -> Vec<String> {
        let mut v = vec![self.circuit.clone()];
        v.extend(
            [
                self.qubits,
                self.x,
                self.cnot,
                self.toffoli,
                self.cv,
                self.cvdg,
                self.best_ancilla,
                self.best_cnot,
                self.best_time as usize,
                self.worst_ancilla,
                self.worst_cnot,
                self.worst_time as usize,
                self.icm_ancilla,
                self.icm_cnot,
                self.icm_time as usize,
            ]
            .iter()
            .map(|n| n.to_string()),
        );
        v
    }

    /// Names and values of every numeric column.
    fn fields(&self) -> [(&'static str, u64); 15] {
        [
            ("qubits", self.qubits as u64),
            ("X", self.x as u64),
            ("C-X", self.cnot as u64),
            ("Toff.", self.toffoli as u64),
            ("C-V", self.cv as u64),
            ("C-V†", self.cvdg as u64),
            ("best ancilla", self.best_ancilla as u64),
            ("best CNOT", self.best_cnot as u64),
            ("best time", self.best_time),
            ("worst ancilla", self.worst_ancilla as u64),
            ("worst CNOT", self.worst_cnot as u64),
            ("worst time", self.worst_time),
            ("ICM ancilla", self.icm_ancilla as u64),
            ("ICM CNOT", self.icm_cnot as u64),
            ("ICM time", self.icm_time),
        ]
    }
}

const TABLE_HEADER: [&str; 16] = [
    "Circuit", "Qub.", "X", "C-X", "Toff.", "C-V", "C-V†", "Ancilla", "CNOT", "Time", "Ancilla", "CNOT", "Time",
    "Ancilla", "CNOT", "Time",
];

pub fn to_csv(reports: &[ResourceReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in reports {
        w.serialize(ReportRow::from(r)).expect("in-memory CSV write");
    }
    if reports.is_empty() {
        w.write_record(csv_header()).expect("in-memory CSV write");
    }
    String::from_utf8(w.into_inner().expect("in-memory CSV flush")).expect("CSV output is UTF-8")
}

fn csv_header() -> [&'static str; 16] {
    [
        "circuit",
        "Qub.",
        "X",
        "C-X",
        "Toff.",
        "C-V",
        "C-V†",
        "best_ancilla",
        "best_cnot",
        "best_time",
        "worst_ancilla",
        "worst_cnot",
        "worst_time",
        "icm_ancilla",
        "icm_cnot",
        "icm_time",
    ]
}

/// Aligned plain-text table with the three cost groups side by side.
pub fn to_table(reports: &[ResourceReport]) -> String {
    let rows: Vec<Vec<String>> = reports.iter().map(|r| ReportRow::from(r).cells()).collect();
    let mut widths: Vec<usize> = TABLE_HEADER.iter().map(|h| h.chars().count()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let group = |from: usize| widths[from..from + 3].iter().sum::<usize>() + 4;
    let lead: usize = widths[..7].iter().sum::<usize>() + 2 * 6;
    let mut s = String::new();
    writeln!(
        s,
        "{:lead$} | {:^b$} | {:^w$} | {:^i$}",
        "",
        "Best-case non-ICM",
        "Worst-case non-ICM",
        "ICM",
        b = group(7),
        w = group(10),
        i = group(13),
    )
    .unwrap();
    let line = |cells: &[String]| {
        let mut out = String::new();
        for (k, cell) in cells.iter().enumerate() {
            let w = widths[k];
            if k == 0 {
                write!(out, "{cell:<w$}").unwrap();
            } else {
                let sep = if matches!(k, 7 | 10 | 13) { " | " } else { "  " };
                let pad = w - cell.chars().count();
                write!(out, "{sep}{}{cell}", " ".repeat(pad)).unwrap();
            }
        }
        out
    };
    let header: Vec<String> = TABLE_HEADER.iter().map(|h| h.to_string()).collect();
    writeln!(s, "{}", line(&header)).unwrap();
    for row in &rows {
        writeln!(s, "{}", line(row)).unwrap();
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GoldenMismatch {
    Missing {
        circuit: String,
    },
    Value {
        circuit: String,
        column: &'static str,
        expected: u64,
        got: u64,
    },
}

impl std::fmt::Display for GoldenMismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GoldenMismatch::Missing { circuit } => write!(f, "{circuit}: no golden row"),
            GoldenMismatch::Value {
                circuit,
                column,
                expected,
                got,
            } => write!(f, "{circuit}: {column} expected {expected}, got {got}"),
        }
    }
}

pub fn parse_golden(text: &str) -> Result<Vec<ReportRow>, csv::Error> {
    csv::Reader::from_reader(text.as_bytes()).deserialize().collect()
}

/// Every difference between `reports` and the golden rows of the same name.
pub fn compare_golden(reports: &[ResourceReport], golden: &[ReportRow]) -> Vec<GoldenMismatch> {
    let mut out = Vec::new();
    for r in reports {
        let row = ReportRow::from(r);
        let Some(want) = golden.iter().find(|g| g.circuit == row.circuit) else {
            out.push(GoldenMismatch::Missing { circuit: row.circuit });
            continue;
        };
        for ((column, got), (_, expected)) in row.fields().into_iter().zip(want.fields()) {
            if got != expected {
                out.push(GoldenMismatch::Value {
                    circuit: row.circuit.clone(),
                    column,
                    expected,
                    got,
                });
            }
        }
    }
    out
}
