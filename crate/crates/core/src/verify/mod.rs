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

//! Dense state-vector simulation used as the correctness oracle.

mod branch;
mod matrix;
mod state;

pub use branch::{
    assert_gadget_equiv, check_equivalence, enumerate_branches, initial_state, simulate_source, verify_circuit,
    BranchOutcome, EquivReport, Failure, FrameMode, VerifyError, DEFAULT_CAP, PRUNE_BELOW,
};
pub use matrix::{
    assert_matrix_equiv, controlled, gate_matrix_1q, phase_distance, rx, toffoli_unitary, Mat2, MatrixMismatch, Unitary,
};
pub use state::{apply_gate, init_amplitudes, measure_branch, random_state, OperandOutOfRange, StateVector};
