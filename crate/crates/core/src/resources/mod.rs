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

//! Resource accounting: closed-form counts, critical-path timing and
//! report rows.

mod counts;
mod report;
mod timing;

pub use counts::{icm_gate_costs, nonicm_estimates, theorem_counts, Counts, GateCost, GateTally, NonIcmOptions};
pub use report::{
    compare_golden, parse_golden, report, to_csv, to_table, Cost, GoldenMismatch, ReportRow, ResourceError,
    ResourceReport,
};
pub use timing::{icm_time, nonicm_time, CycleDetected, TimingDag, CNOT_COST, INIT_COST, MEASURE_COST};
