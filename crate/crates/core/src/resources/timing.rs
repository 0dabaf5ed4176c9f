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

//! Critical-path timing: initialisation 10, CNOT 1, measurement 1, and a
//! final readout of 1 on every output wire.

use petgraph::algo::toposort;
use petgraph::graph::{DiGraph, NodeIndex};
use thiserror::Error;

use crate::decompose::{lower_to_ugs, ToffoliMode};
use crate::ir::{Circuit, Gate, IcmCircuit, Selector};

pub const INIT_COST: u64 = 10;
pub const CNOT_COST: u64 = 1;
pub const MEASURE_COST: u64 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("timing graph has a cycle")]
pub struct CycleDetected;

/// Weighted dependency graph; a node's finish time is its weight plus the
/// latest finish among its predecessors.
#[derive(Default)]
pub struct TimingDag {
    graph: DiGraph<u64, ()>,
}

impl TimingDag {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn node(&mut self, weight: u64, preds: &[NodeIndex]) -> NodeIndex {
        let n = self.graph.add_node(weight);
        for &p in preds {
            self.graph.add_edge(p, n, ());
        }
        n
    }

    pub fn edge(&mut self, from: NodeIndex, to: NodeIndex) {
        self.graph.add_edge(from, to, ());
    }

    pub fn len(&self) -> usize {
        self.graph.node_count()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.node_count() == 0
    }

    /// Heaviest path weight.
    pub fn longest_path(&self) -> Result<u64, CycleDetected> {
        let order = toposort(&self.graph, None).map_err(|_| CycleDetected)?;
        let mut finish = vec![0u64; self.graph.node_count()];
        let mut best = 0;
        for n in order {
            let start = self
                .graph
                .neighbors_directed(n, petgraph::Direction::Incoming)
                .map(|p| finish[p.index()])
                .max()
                .unwrap_or(0);
            finish[n.index()] = start + self.graph[n];
            best = best.max(finish[n.index()]);
        }
        Ok(best)
    }
}

/// Time of an ICM circuit. A measurement whose basis depends on `m` waits
/// until `m`'s corrected outcome is known, which in turn needs every earlier
/// outcome that can flip it through the frame.
pub fn icm_time(c: &IcmCircuit) -> Result<u64, CycleDetected> {
    let mut dag = TimingDag::new();
    let mut last: Vec<NodeIndex> = (0..c.num_qubits).map(|_| dag.node(INIT_COST, &[])).collect();
    for &(ctl, tgt) in &c.cnots {
        let n = dag.node(CNOT_COST, &[last[ctl], last[tgt]]);
        last[ctl] = n;
        last[tgt] = n;
    }

    let mut measured_in = vec![None; c.num_qubits];
    for m in &c.measurements {
        measured_in[m.qubit] = Some(m.selector.bases());
    }

    // readiness of each corrected outcome
    let mut ready: Vec<NodeIndex> = Vec::with_capacity(c.measurements.len());
    let mut influences: Vec<Vec<usize>> = vec![Vec::new(); c.num_qubits];
    for (k, m) in c.measurements.iter().enumerate() {
        let mut preds = vec![last[m.qubit]];
        if let Selector::Conditioned { on, .. } = m.selector {
            preds.push(ready[on.0]);
        }
        let meas = dag.node(MEASURE_COST, &preds);
        let r = dag.node(0, &[meas]);
        for &u in &influences[m.qubit] {
            dag.edge(ready[u], r);
        }
        ready.push(r);
        for u in &m.frame_updates {
            let matters = measured_in[u.target]
                .as_ref()
                .is_some_and(|bs| bs.iter().any(|&b| u.pauli.flips(b)));
            if matters {
                influences[u.target].push(k);
                if u.condition.0 != k {
                    influences[u.target].push(u.condition.0);
                }
            }
        }
    }
    for q in c.output_qubits() {
        dag.node(MEASURE_COST, &[last[q]]);
    }
    dag.longest_path()
}

/// Time of the teleportation-based circuit with ordinary feedforward.
///
/// Each teleported gate prepares its ancilla up front, entangles it with
/// the wire by one CNOT, and measures the old wire; the ancilla carries on.
/// With `worst` set, every T-type gate is followed by a teleported P
/// correction whose ancilla can only be prepared once the T measurement has
/// reported.
pub fn nonicm_time(c: &Circuit, mode: ToffoliMode, worst: bool) -> Result<u64, CycleDetected> {
    let lowered = lower_to_ugs(c, mode);
    let mut dag = TimingDag::new();
    let mut last: Vec<NodeIndex> = (0..c.num_qubits()).map(|_| dag.node(INIT_COST, &[])).collect();
    for g in lowered.gates() {
        match *g {
            Gate::Cnot { control, target } => {
                let n = dag.node(CNOT_COST, &[last[control], last[target]]);
                last[control] = n;
                last[target] = n;
            }
            Gate::X(_) | Gate::Z(_) => {}
            ref other => {
                let q = other.qubits()[0];
                let anc = dag.node(INIT_COST, &[]);
                let cnot = dag.node(CNOT_COST, &[last[q], anc]);
                let meas = dag.node(MEASURE_COST, &[cnot]);
                last[q] = cnot;
                if worst && matches!(other, Gate::T(_) | Gate::Tdg(_)) {
                    let fix = dag.node(INIT_COST, &[meas]);
                    let cnot = dag.node(CNOT_COST, &[last[q], fix]);
                    dag.node(MEASURE_COST, &[cnot]);
                    last[q] = cnot;
                }
            }
        }
    }
    for &n in &last {
        dag.node(MEASURE_COST, &[n]);
    }
    dag.longest_path()
}
