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

//! Readers and writers for circuit files.

mod circ_text;
mod error;
mod icm_text;
mod real;

use std::path::Path;

pub use circ_text::{emit_circ, parse_circ};
pub use error::{ParseError, ParseErrorKind};
pub use icm_text::{emit_icm, parse_icm};
pub use real::{parse_real, parse_real_with_header, RealHeader};

use crate::ir::Circuit;

/// Source formats accepted by [`parse_source`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SourceFormat {
    Real,
    Circ,
}

impl SourceFormat {
    /// Picks the format from a file extension; anything but `.circ` is `.real`.
    pub fn from_path(path: &Path) -> SourceFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("circ") => SourceFormat::Circ,
            _ => SourceFormat::Real,
        }
    }
}

pub fn parse_source(text: &str, format: SourceFormat) -> Result<Circuit, ParseError> {
    match format {
        SourceFormat::Real => parse_real(text),
        SourceFormat::Circ => parse_circ(text),
    }
}
