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

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bench(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/benchmarks")
        .join(rel)
}

fn icm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_icm"))
        .args(args)
        .env_remove("ICM_SEED")
        .output()
        .unwrap()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = icm(args);
    (
        out.status.code().unwrap(),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn transform_toffoli_one() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("t.icm");
    let (code, stdout, _) = run(&[
        "transform",
        bench("EQ/toffoli_1.real").to_str().unwrap(),
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "EQ/toffoli_1: 66 qubits, 63 ancillae, 80 CNOTs");
    assert!(fs::read_to_string(out).unwrap().starts_with(".icm v1\n.qubits 66\n"));
}

#[test]
fn transform_graycode_needs_no_ancillae() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("g.icm");
    let (code, stdout, _) = run(&[
        "transform",
        bench("EQ/graycode6_48.real").to_str().unwrap(),
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("0 ancillae, 5 CNOTs"), "{stdout}");
}

#[test]
fn malformed_source_reports_its_line() {
    let dir = TempDir::new().unwrap();
    let src = write(
        &dir,
        "bad.real",
        ".version 1.0\n.numvars 2\n.variables a b\n.begin\nt2 a c\n.end\n",
    );
    let (code, _, stderr) = run(&["transform", &src, dir.path().join("o.icm").to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stderr.contains("line 5"), "{stderr}");
}

#[test]
fn report_matches_golden() {
    let (code, stdout, stderr) = run(&[
        "report",
        bench("EQ").to_str().unwrap(),
        bench("NCT").to_str().unwrap(),
        "--golden",
        bench("golden.csv").to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{stderr}");
    assert!(stdout.contains("golden: 26 rows match"));
}

#[test]
fn tampered_golden_exits_3() {
    let dir = TempDir::new().unwrap();
    let text = fs::read_to_string(bench("golden.csv")).unwrap();
    let tampered = text.replacen("EQ/toffoli_1,3,0,2,0,2,1,", "EQ/toffoli_1,3,0,2,0,2,1,9", 1);
    assert_ne!(text, tampered);
    let golden = write(&dir, "golden.csv", &tampered);
    let (code, _, stderr) = run(&[
        "report",
        bench("EQ/toffoli_1.real").to_str().unwrap(),
        "--golden",
        &golden,
    ]);
    assert_eq!(code, 3);
    assert!(stderr.contains("EQ/toffoli_1"), "{stderr}");
}

#[test]
fn csv_report_has_header() {
    let (code, stdout, _) = run(&[
        "report",
        bench("EQ/graycode6_48.real").to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    let mut lines = stdout.lines();
    assert!(lines.next().unwrap().starts_with("circuit,Qub.,X,C-X,Toff.,C-V,C-V†,"));
    assert!(lines.next().unwrap().ends_with(",0,5,16"));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(run(&["report"]).0, 64);
    assert_eq!(run(&["frobnicate"]).0, 64);
    assert_eq!(run(&["verify"]).0, 64);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn gadget_library_verifies() {
    let (code, stdout, _) = run(&["verify", "--gadgets"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().filter(|l| l.contains(": pass")).count(), 6);
}

#[test]
fn single_t_verifies() {
    let dir = TempDir::new().unwrap();
    let src = write(&dir, "t.circ", ".qubits a b\nt a\ncnot a b\n");
    let (code, stdout, _) = run(&["verify", &src]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains(": pass"));
}

#[test]
fn corrupted_icm_fails_equivalence() {
    let dir = TempDir::new().unwrap();
    let src = write(&dir, "t.circ", ".qubits a\nt a\n");
    let out = dir.path().join("t.icm");
    assert_eq!(run(&["transform", &src, out.to_str().unwrap()]).0, 0);
    let text = fs::read_to_string(&out).unwrap();
    let flipped = text.replacen(".cnot q1 q0", ".cnot q0 q1", 1);
    assert_ne!(text, flipped);
    let bad = write(&dir, "bad.icm", &flipped);
    let (code, stdout, _) = run(&["verify", &src, "--icm", &bad]);
    assert_eq!(code, 4, "{stdout}");
    assert_eq!(run(&["verify", &src, "--icm", out.to_str().unwrap()]).0, 0);
}

#[test]
fn cap_exceeded_exits_5() {
    let (code, _, stderr) = run(&["verify", bench("EQ/toffoli_1.real").to_str().unwrap()]);
    assert_eq!(code, 5, "{stderr}");
}

#[test]
fn seed_from_environment() {
    let dir = TempDir::new().unwrap();
    let src = write(&dir, "h.circ", ".qubits a\nh a\n");
    let with = |seed: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_icm"));
        cmd.args(["verify", &src, "--trials", "3"]).env_remove("ICM_SEED");
        if let Some(s) = seed {
            cmd.env("ICM_SEED", s);
        }
        cmd.output().unwrap()
    };
    let a = with(Some("42"));
    assert!(a.status.success());
    assert_eq!(a.stdout, with(Some("42")).stdout);
    assert_eq!(with(Some("nope")).status.code(), Some(64));
    assert_eq!(icm(&["verify", &src]).stdout, icm(&["verify", &src]).stdout);
}
