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
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use icm_core::decompose::ToffoliMode;
use icm_core::frontend::{emit_icm, parse_icm, parse_source, SourceFormat};
use icm_core::ir::{validate_icm, Circuit, IcmCircuit};
use icm_core::resources::{compare_golden, parse_golden, report, to_csv, to_table, NonIcmOptions, ResourceReport};
use icm_core::transform::{transform_to_icm, GadgetKind};
use icm_core::verify::{assert_gadget_equiv, gate_matrix_1q, verify_circuit, Unitary, VerifyError};

const EXIT_PARSE: u8 = 1;
const EXIT_INTERNAL: u8 = 2;
const EXIT_GOLDEN: u8 = 3;
const EXIT_EQUIV: u8 = 4;
const EXIT_CAP: u8 = 5;
const EXIT_USAGE: u8 = 64;

const EXIT_CODES: &str = "\
Exit codes:
  0   success
  1   input could not be parsed
  2   internal invariant failure
  3   report differs from the golden file
  4   equivalence check failed
  5   circuit exceeds the simulation cap
  64  usage error";

#[derive(Parser)]
#[command(name = "icm", version, about = "Transpile circuits into ICM form and account for their cost", after_help = EXIT_CODES)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Reversible,
    Quantum,
}

impl From<Mode> for ToffoliMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Reversible => ToffoliMode::Reversible,
            Mode::Quantum => ToffoliMode::Quantum,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Write the ICM form of a `.real` or `.circ` circuit.
    Transform {
        input: PathBuf,
        output: PathBuf,
        #[arg(long, value_enum, default_value = "reversible")]
        toffoli: Mode,
    },
    /// Print cost rows for circuit files or directories of them.
    Report {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long, value_enum, default_value = "reversible")]
        toffoli: Mode,
        /// Compare against a CSV of expected rows.
        #[arg(long)]
        golden: Option<PathBuf>,
        /// Count one ancilla per P correction in the worst case.
        #[arg(long)]
        correction_ancilla: bool,
    },
    /// Check a transformed circuit, or the gadget library, by simulation.
    Verify {
        /// Source circuit the ICM form must reproduce.
        input: Option<PathBuf>,
        /// Check this ICM file instead of transforming the source.
        #[arg(long)]
        icm: Option<PathBuf>,
        /// Check every teleportation gadget against its gate.
        #[arg(long)]
        gadgets: bool,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Random seed; the ICM_SEED environment variable takes precedence.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 16)]
        cap: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, value_enum, default_value = "reversible")]
        toffoli: Mode,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn load_source(path: &Path) -> Result<Circuit, Failure> {
    let text = read(path)?;
    parse_source(&text, SourceFormat::from_path(path))
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

/// `<parent dir>/<file stem>`, the row label used in reports.
fn circuit_name(path: &Path) -> String {
    let stem = path.file_stem().map(|s| s.to_string_lossy()).unwrap_or_default();
    match path.parent().and_then(|p| p.file_name()) {
        Some(dir) => format!("{}/{stem}", dir.to_string_lossy()),
        None => stem.into_owned(),
    }
}

fn transformed(c: &Circuit, mode: ToffoliMode) -> Result<IcmCircuit, Failure> {
    transform_to_icm(c, mode).map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))
}

fn cmd_transform(input: &Path, output: &Path, mode: ToffoliMode) -> CmdResult {
    let c = load_source(input)?;
    let icm = transformed(&c, mode)?;
    fs::write(output, emit_icm(&icm)).map_err(|e| Failure::new(EXIT_INTERNAL, format!("{}: {e}", output.display())))?;
    println!(
        "{}: {} qubits, {} ancillae, {} CNOTs",
        circuit_name(input),
        icm.num_qubits,
        icm.num_ancillae(),
        icm.cnots.len()
    );
    Ok(())
}

fn expand(paths: &[PathBuf]) -> Result<Vec<PathBuf>, Failure> {
    let mut out = Vec::new();
    for p in paths {
        if p.is_dir() {
            let mut files: Vec<PathBuf> = fs::read_dir(p)
                .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", p.display())))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|f| matches!(f.extension().and_then(|e| e.to_str()), Some("real" | "circ")))
                .collect();
            files.sort();
            out.extend(files);
        } else {
            out.push(p.clone());
        }
    }
    Ok(out)
}

fn cmd_report(
    paths: &[PathBuf],
    format: Format,
    mode: ToffoliMode,
    golden: Option<&Path>,
    opts: NonIcmOptions,
) -> CmdResult {
    let mut reports: Vec<ResourceReport> = Vec::new();
    for path in expand(paths)? {
        let c = load_source(&path)?;
        let r = report(&circuit_name(&path), &c, mode, opts).map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))?;
        reports.push(r);
    }
    match format {
        Format::Table => print!("{}", to_table(&reports)),
        Format::Csv => print!("{}", to_csv(&reports)),
    }
    if let Some(g) = golden {
        let rows = parse_golden(&read(g)?).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", g.display())))?;
        let diffs = compare_golden(&reports, &rows);
        if !diffs.is_empty() {
            let lines: Vec<String> = diffs.iter().map(|d| d.to_string()).collect();
            return Err(Failure::new(
                EXIT_GOLDEN,
                format!("golden mismatch:\n  {}", lines.join("\n  ")),
            ));
        }
        println!("golden: {} rows match", reports.len());
    }
    Ok(())
}

fn verify_failure(e: VerifyError) -> Failure {
    match e {
        VerifyError::CapExceeded { .. } => Failure::new(EXIT_CAP, e.to_string()),
        VerifyError::InputSize { .. } => Failure::new(EXIT_EQUIV, e.to_string()),
    }
}

fn cmd_gadgets(trials: usize, seed: u64, tol: f64) -> CmdResult {
    let mut failed = Vec::new();
    for kind in GadgetKind::ALL {
        let target = Unitary::from_mat2(&gate_matrix_1q(&kind.gate(0)).expect("single-qubit gate"));
        let r = assert_gadget_equiv(kind, &target, trials, tol, seed).map_err(verify_failure)?;
        let even = r.max_split_deviation <= tol;
        let ok = r.passed() && even;
        println!("gadget {kind}: {} ({r})", if ok { "pass" } else { "FAIL" });
        if !ok {
            failed.push(kind.to_string());
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::new(
            EXIT_EQUIV,
            format!("gadgets failed: {}", failed.join(", ")),
        ))
    }
}

fn cmd_verify(
    source: &Path,
    icm_path: Option<&Path>,
    mode: ToffoliMode,
    trials: usize,
    seed: u64,
    cap: usize,
    tol: f64,
) -> CmdResult {
    let c = load_source(source)?;
    let icm = match icm_path {
        Some(p) => parse_icm(&read(p)?).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", p.display())))?,
        None => transformed(&c, mode)?,
    };
    let violations = validate_icm(&icm);
    if !violations.is_empty() {
        let lines: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        return Err(Failure::new(
            EXIT_EQUIV,
            format!("not a valid ICM circuit:\n  {}", lines.join("\n  ")),
        ));
    }
    if icm.outputs.len() != c.num_qubits() {
        return Err(Failure::new(
            EXIT_EQUIV,
            format!(
                "ICM circuit has {} outputs, source has {} qubits",
                icm.outputs.len(),
                c.num_qubits()
            ),
        ));
    }
    let r = verify_circuit(&c, &icm, trials, tol, seed, cap).map_err(verify_failure)?;
    let ok = r.passed() && r.max_total_deviation <= tol;
    println!("{}: {} ({r})", circuit_name(source), if ok { "pass" } else { "FAIL" });
    if ok {
        Ok(())
    } else {
        Err(Failure::new(
            EXIT_EQUIV,
            "corrected outputs differ from the source circuit",
        ))
    }
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Transform { input, output, toffoli } => cmd_transform(&input, &output, toffoli.into()),
        Command::Report {
            paths,
            format,
            toffoli,
            golden,
            correction_ancilla,
        } => cmd_report(
            &paths,
            format,
            toffoli.into(),
            golden.as_deref(),
            NonIcmOptions { correction_ancilla },
        ),
        Command::Verify {
            input,
            icm,
            gadgets,
            trials,
            seed,
            cap,
            tol,
            toffoli,
        } => {
            let seed = match std::env::var("ICM_SEED") {
                Ok(s) => s
                    .trim()
                    .parse()
                    .map_err(|_| Failure::new(EXIT_USAGE, format!("ICM_SEED is not an integer: `{s}`")))?,
                Err(_) => seed,
            };
            if gadgets {
                cmd_gadgets(trials, seed, tol)?;
            }
            match input {
                Some(src) => cmd_verify(&src, icm.as_deref(), toffoli.into(), trials, seed, cap, tol),
                None if gadgets => Ok(()),
                None => Err(Failure::new(EXIT_USAGE, "verify needs a source circuit or --gadgets")),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = run(cli);
    let _ = std::io::stdout().flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
