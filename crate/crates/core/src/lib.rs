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

//! Transpiles reversible and Clifford+T circuits into ICM form: qubit
//! initialisations, a CNOT-only network, and measurements whose bases are
//! chosen by earlier outcomes.

pub mod decompose;
pub mod frontend;
pub mod ir;
pub mod random;
pub mod resources;
pub mod transform;
pub mod verify;
