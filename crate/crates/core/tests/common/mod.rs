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

#![allow(dead_code)]

use std::path::{Path, PathBuf};

use icm_core::frontend::parse_real;
use icm_core::ir::Circuit;
use icm_core::resources::{parse_golden, ReportRow};

pub fn benchmarks_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("benchmarks")
}

/// Every bundled `.real` file as `(library/name, circuit)`, EQ first.
pub fn corpus() -> Vec<(String, Circuit)> {
    let mut out = Vec::new();
    for lib in ["EQ", "NCT"] {
        let mut files: Vec<PathBuf> = std::fs::read_dir(benchmarks_dir().join(lib))
            .unwrap()
            .map(|e| e.unwrap().path())
            .filter(|p| p.extension().is_some_and(|e| e == "real"))
            .collect();
        files.sort();
        for f in files {
            let text = std::fs::read_to_string(&f).unwrap();
            let c = parse_real(&text).unwrap_or_else(|e| panic!("{}: {e}", f.display()));
            out.push((format!("{lib}/{}", f.file_stem().unwrap().to_string_lossy()), c));
        }
    }
    out
}

pub fn golden() -> Vec<ReportRow> {
    parse_golden(&std::fs::read_to_string(benchmarks_dir().join("golden.csv")).unwrap()).unwrap()
}
