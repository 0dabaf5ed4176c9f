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

//! Circuit representations shared by every pass.

mod circuit;
mod frame;
mod gate;
mod icm;
mod validate;

pub use circuit::{Circuit, CircuitError};
pub use frame::{FrameSizeMismatch, Pauli, PauliFrame};
pub use gate::{Gate, GateTag, Qubit};
pub use icm::{Basis, ConditionalMeasurement, FrameUpdate, IcmCircuit, InitState, MeasId, Output, Selector};
pub use validate::{validate_icm, Violation};
