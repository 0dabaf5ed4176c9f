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

//! Exhaustive simulation of every measurement branch of an ICM circuit.

use std::fmt;

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::SeedableRng;
use thiserror::Error;

use super::matrix::{gate_matrix_1q, Unitary};
use super::state::{init_amplitudes, random_state, StateVector};
use crate::ir::{Basis, Circuit, Gate, IcmCircuit, InitState, MeasId, PauliFrame};
use crate::transform::{gadget_circuit, GadgetKind};

pub const DEFAULT_CAP: usize = 16;

/// Branches whose probability falls below this are dropped.
pub const PRUNE_BELOW: f64 = 1e-12;

/// How pending byproducts reach a measured qubit.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FrameMode {
    /// Leave the state alone and flip the recorded outcome.
    #[default]
    Reinterpret,
    /// Undo the byproduct with a physical Pauli just before measuring.
    Apply,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("circuit has {qubits} qubits, simulation cap is {cap}")]
    CapExceeded { qubits: usize, cap: usize },
    #[error("input state has {got} qubits, circuit has {expected} input wires")]
    InputSize { expected: usize, got: usize },
}

#[derive(Clone, Debug)]
pub struct BranchOutcome {
    /// Corrected outcome per measurement id.
    pub outcomes: Vec<bool>,
    pub bases: Vec<Basis>,
    pub probability: f64,
    /// Probability of each outcome given the ones before it.
    pub conditional: Vec<f64>,
    /// State of the output qubits, in output order, with the frame applied.
    pub state: StateVector,
    /// Byproducts recorded by the end of the branch.
    pub frame: PauliFrame,
}

/// Full initial register: the data state on the input wires, in ascending
/// qubit order, and every ancilla in its prepared state.
pub fn initial_state(c: &IcmCircuit, input: &StateVector) -> Result<StateVector, VerifyError> {
    let inputs: Vec<usize> = (0..c.num_qubits).filter(|&q| c.inits[q] == InitState::Input).collect();
    if input.num_qubits() != inputs.len() {
        return Err(VerifyError::InputSize {
            expected: inputs.len(),
            got: input.num_qubits(),
        });
    }
    let amps = (0..1usize << c.num_qubits)
        .map(|i| {
            let mut data = 0;
            for (k, &q) in inputs.iter().enumerate() {
                data |= ((i >> q) & 1) << k;
            }
            let mut a = input.amplitudes()[data];
            for q in 0..c.num_qubits {
                if let Some(v) = init_amplitudes(c.inits[q]) {
                    a *= v[(i >> q) & 1];
                }
            }
            a
        })
        .collect();
    Ok(StateVector::from_amplitudes(amps))
}

struct Walk<'a> {
    c: &'a IcmCircuit,
    mode: FrameMode,
    out: Vec<BranchOutcome>,
    outcomes: Vec<bool>,
    bases: Vec<Basis>,
    conditional: Vec<f64>,
}

impl Walk<'_> {
    fn step(&mut self, k: usize, state: StateVector, frame: PauliFrame, probability: f64) {
        let c = self.c;
        if k == c.measurements.len() {
            let result = self.finish(state, frame.clone(), &self.bases);
            self.out.push(BranchOutcome {
                outcomes: self.outcomes.clone(),
                bases: self.bases.clone(),
                probability,
                conditional: self.conditional.clone(),
                state: result,
                frame,
            });
            return;
        }
        let m = &c.measurements[k];
        let basis = m.selector.choose(|MeasId(j)| self.outcomes[j]);
        let pending = frame.get(m.qubit);
        let mut base_state = state;
        let mut base_frame = frame;
        if self.mode == FrameMode::Apply {
            base_state.apply_pauli(m.qubit, pending);
            base_frame.set(m.qubit, crate::ir::Pauli::I);
        }
        let flip = self.mode == FrameMode::Reinterpret && pending.flips(basis);

        for raw in [false, true] {
            let (p, collapsed) = base_state.measure_branch(m.qubit, basis, raw);
            if probability * p < PRUNE_BELOW {
                continue;
            }
            let corrected = raw ^ flip;
            let mut f = base_frame.clone();
            self.outcomes.push(corrected);
            for u in &m.frame_updates {
                let fired = self.outcomes[u.condition.0] && u.basis.is_none_or(|b| b == basis);
                if fired {
                    f.toggle(u.target, u.pauli);
                }
            }
            self.bases.push(basis);
            self.conditional.push(p);
            self.step(k + 1, collapsed, f, probability * p);
            self.outcomes.pop();
            self.bases.pop();
            self.conditional.pop();
        }
    }

    /// Strips the measured qubits and applies the remaining frame to the outputs.
    fn finish(&self, mut state: StateVector, frame: PauliFrame, bases: &[Basis]) -> StateVector {
        let h = gate_matrix_1q(&Gate::H(0)).unwrap();
        let mut fixed_mask = 0usize;
        let mut fixed_bits = 0usize;
        for (m, &b) in self.c.measurements.iter().zip(bases) {
            if b == Basis::X {
                state.apply_1q(&h, m.qubit);
            }
            fixed_mask |= 1 << m.qubit;
        }
        // collapsed qubits are now computational basis states; find them
        let amps = state.amplitudes();
        if let Some((i, _)) = amps
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.norm_sqr().total_cmp(&b.1.norm_sqr()))
        {
            fixed_bits = i & fixed_mask;
        }
        for (q, p) in frame.support() {
            if fixed_mask & (1 << q) == 0 {
                state.apply_pauli(q, p);
            }
        }
        let outs = self.c.output_qubits();
        let reduced: Vec<Complex64> = (0..1usize << outs.len())
            .map(|j| {
                let mut i = fixed_bits;
                for (k, &q) in outs.iter().enumerate() {
                    i |= ((j >> k) & 1) << q;
                }
                state.amplitudes()[i]
            })
            .collect();
        let mut s = StateVector::from_amplitudes(reduced);
        s.normalize();
        s
    }
}

/// Every surviving measurement branch of `c` on data state `input`.
pub fn enumerate_branches(
    c: &IcmCircuit,
    input: &StateVector,
    cap: usize,
    mode: FrameMode,
) -> Result<Vec<BranchOutcome>, VerifyError> {
    if c.num_qubits > cap {
        return Err(VerifyError::CapExceeded {
            qubits: c.num_qubits,
            cap,
        });
    }
    let mut start = initial_state(c, input)?;
    for &(ctl, tgt) in &c.cnots {
        start.apply_cnot(ctl, tgt);
    }
    let mut walk = Walk {
        c,
        mode,
        out: Vec::new(),
        outcomes: Vec::new(),
        bases: Vec::new(),
        conditional: Vec::new(),
    };
    walk.step(0, start, c.final_frame.clone(), 1.0);
    Ok(walk.out)
}

/// A branch whose corrected output missed the expected state.
#[derive(Clone, Debug, PartialEq)]
pub struct Failure {
    pub trial: usize,
    pub outcomes: Vec<bool>,
    pub fidelity: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EquivReport {
    pub trials: usize,
    pub branches: usize,
    pub min_fidelity: f64,
    /// Largest |p − ½| over every single measurement of every branch.
    pub max_split_deviation: f64,
    /// Largest |Σp − 1| over the trials.
    pub max_total_deviation: f64,
    pub first_failure: Option<Failure>,
}

impl EquivReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

impl fmt::Display for EquivReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} trials, {} branches, min fidelity {:.12}, max |p-1/2| {:.2e}",
            self.trials, self.branches, self.min_fidelity, self.max_split_deviation
        )?;
        if let Some(fail) = &self.first_failure {
            let bits: String = fail.outcomes.iter().map(|&b| if b { '1' } else { '0' }).collect();
            write!(
                f,
                "; first failure: trial {} branch {} fidelity {:.6}",
                fail.trial, bits, fail.fidelity
            )?;
        }
        Ok(())
    }
}

/// Runs `c` on `trials` random data states and compares every branch's
/// corrected output with `expected(input)`.
pub fn check_equivalence(
    c: &IcmCircuit,
    expected: impl Fn(&StateVector) -> StateVector,
    trials: usize,
    tol: f64,
    seed: u64,
    cap: usize,
) -> Result<EquivReport, VerifyError> {
    if c.num_qubits > cap {
        return Err(VerifyError::CapExceeded {
            qubits: c.num_qubits,
            cap,
        });
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut report = EquivReport {
        trials,
        branches: 0,
        min_fidelity: 1.0,
        max_split_deviation: 0.0,
        max_total_deviation: 0.0,
        first_failure: None,
    };
    for trial in 0..trials {
        let input = random_state(c.num_inputs(), &mut rng);
        let want = expected(&input);
        let branches = enumerate_branches(c, &input, cap, FrameMode::Reinterpret)?;
        let total: f64 = branches.iter().map(|b| b.probability).sum();
        report.max_total_deviation = report.max_total_deviation.max((total - 1.0).abs());
        report.branches += branches.len();
        for b in &branches {
            for p in &b.conditional {
                report.max_split_deviation = report.max_split_deviation.max((p - 0.5).abs());
            }
            let fid = b.state.fidelity(&want);
            report.min_fidelity = report.min_fidelity.min(fid);
            if fid < 1.0 - tol && report.first_failure.is_none() {
                report.first_failure = Some(Failure {
                    trial,
                    outcomes: b.outcomes.clone(),
                    fidelity: fid,
                });
            }
        }
    }
    Ok(report)
}

/// Checks a lone gadget against a 2×2 target.
pub fn assert_gadget_equiv(
    kind: GadgetKind,
    target: &Unitary,
    trials: usize,
    tol: f64,
    seed: u64,
) -> Result<EquivReport, VerifyError> {
    let c = gadget_circuit(kind);
    check_equivalence(&c, |s| target.apply(s), trials, tol, seed, DEFAULT_CAP)
}

/// The source circuit's action on a data state over its non-constant lines.
pub fn simulate_source(source: &Circuit, input: &StateVector) -> StateVector {
    let n = source.num_qubits();
    let data: Vec<usize> = (0..n).filter(|&q| source.constants()[q].is_none()).collect();
    let mut fixed = 0usize;
    for (q, c) in source.constants().iter().enumerate() {
        if *c == Some(true) {
            fixed |= 1 << q;
        }
    }
    let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
    for (j, a) in input.amplitudes().iter().enumerate() {
        let mut i = fixed;
        for (k, &q) in data.iter().enumerate() {
            i |= ((j >> k) & 1) << q;
        }
        amps[i] = *a;
    }
    let mut s = StateVector::from_amplitudes(amps);
    for g in source.gates() {
        s.apply_gate(g).expect("circuit operands are in range");
    }
    s
}

/// Whole-pipeline check of an ICM circuit against the source it came from.
pub fn verify_circuit(
    source: &Circuit,
    icm: &IcmCircuit,
    trials: usize,
    tol: f64,
    seed: u64,
    cap: usize,
) -> Result<EquivReport, VerifyError> {
    check_equivalence(icm, |s| simulate_source(source, s), trials, tol, seed, cap)
}
