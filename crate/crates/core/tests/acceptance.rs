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

//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

mod common;

use std::f64::consts::FRAC_PI_2;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use icm_core::decompose::{
    decompose_cv, decompose_h, decompose_toffoli_quantum, decompose_toffoli_reversible, ToffoliMode,
};
use icm_core::ir::{validate_icm, Circuit, Gate};
use icm_core::random::random_source_circuit;
use icm_core::resources::{icm_gate_costs, report, theorem_counts, GateCost, GateTally, NonIcmOptions, ResourceReport};
use icm_core::transform::{transform_to_icm, GadgetKind};
use icm_core::verify::{
    assert_gadget_equiv, assert_matrix_equiv, controlled, gate_matrix_1q, rx, toffoli_unitary, verify_circuit, Unitary,
    DEFAULT_CAP,
};
use rand::rngs::StdRng;
use rand::SeedableRng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.2?}, limit {limit:?}"))
}

fn reports() -> Result<Vec<ResourceReport>, String> {
    common::corpus()
        .iter()
        .map(|(name, c)| {
            report(name, c, ToffoliMode::Reversible, NonIcmOptions::default()).map_err(|e| format!("{name}: {e}"))
        })
        .collect()
}

fn find<'a>(rs: &'a [ResourceReport], name: &str) -> Result<&'a ResourceReport, String> {
    rs.iter()
        .find(|r| r.circuit == name)
        .ok_or_else(|| format!("{name} missing"))
}

fn icm_counts() -> Outcome {
    let start = Instant::now();
    let rs = reports()?;
    let golden = common::golden();
    ensure(rs.len() == golden.len(), || {
        format!("{} circuits, {} reference rows", rs.len(), golden.len())
    })?;
    for g in &golden {
        let r = find(&rs, &g.circuit)?;
        ensure((r.icm.ancilla, r.icm.cnot) == (g.icm_ancilla, g.icm_cnot), || {
            format!(
                "{}: {}/{} expected {}/{}",
                g.circuit, r.icm.ancilla, r.icm.cnot, g.icm_ancilla, g.icm_cnot
            )
        })?;
    }
    for (name, anc, cnot) in [
        ("EQ/toffoli_1", 63, 80),
        ("EQ/3_17_15", 126, 159),
        ("EQ/add16_175", 1344, 1696),
        ("NCT/ham7_106", 378, 499),
        ("NCT/add8_172", 1008, 1296),
        ("EQ/graycode6_48", 0, 5),
    ] {
        let r = find(&rs, name)?;
        ensure((r.icm.ancilla, r.icm.cnot) == (anc, cnot), || {
            format!("{name}: {}/{}", r.icm.ancilla, r.icm.cnot)
        })?;
    }
    within(Duration::from_secs(5), start)?;
    Ok(format!("{} rows exact in {:.2?}", rs.len(), start.elapsed()))
}

fn nonicm_estimates() -> Outcome {
    let rs = reports()?;
    let golden = common::golden();
    for g in &golden {
        let r = find(&rs, &g.circuit)?;
        let got = (r.best.ancilla, r.best.cnot, r.worst.ancilla, r.worst.cnot);
        let want = (g.best_ancilla, g.best_cnot, g.worst_ancilla, g.worst_cnot);
        ensure(got == want, || format!("{}: {got:?} expected {want:?}", g.circuit))?;
    }
    for (name, want) in [("EQ/3_17_15", (54, 69, 54, 87)), ("NCT/ham7_106", (162, 229, 162, 283))] {
        let r = find(&rs, name)?;
        let got = (r.best.ancilla, r.best.cnot, r.worst.ancilla, r.worst.cnot);
        ensure(got == want, || format!("{name}: {got:?}"))?;
    }
    Ok(format!("{} rows exact", golden.len()))
}

fn theorem_cross_check() -> Outcome {
    let start = Instant::now();
    let rev = icm_gate_costs(ToffoliMode::Reversible);
    ensure(rev[3] == GateCost::new(21, 26), || format!("C-V cost {:?}", rev[3]))?;
    ensure(rev[4] == GateCost::new(63, 80), || format!("Toffoli cost {:?}", rev[4]))?;
    let mut rng = StdRng::seed_from_u64(0x1c4);
    for mode in [ToffoliMode::Quantum, ToffoliMode::Reversible] {
        for i in 0..200 {
            let c = random_source_circuit(&mut rng, 40);
            let t = GateTally::of(&c);
            let icm = transform_to_icm(&c, mode).map_err(|e| e.to_string())?;
            let (anc, added) = theorem_counts(&t, mode);
            ensure(icm.num_ancillae() == anc && icm.cnots.len() == t.cnot + added, || {
                format!(
                    "{mode:?} circuit {i}: structure {}/{}, formula {anc}/{}",
                    icm.num_ancillae(),
                    icm.cnots.len(),
                    t.cnot + added
                )
            })?;
        }
    }
    within(Duration::from_secs(30), start)?;
    Ok(format!("400 circuits exact in {:.2?}", start.elapsed()))
}

fn timing_pin() -> Outcome {
    let rs = reports()?;
    let r = find(&rs, "EQ/graycode6_48")?;
    let times = (r.best.time, r.worst.time, r.icm.time);
    ensure(times == (16, 16, 16), || format!("graycode6 times {times:?}"))?;
    for g in common::golden() {
        let r = find(&rs, &g.circuit)?;
        let got = (r.best.time, r.worst.time, r.icm.time);
        let want = (g.best_time, g.worst_time, g.icm_time);
        ensure(got == want, || format!("{}: {got:?} frozen {want:?}", g.circuit))?;
    }
    Ok("graycode6 16/16/16, other rows match frozen values".into())
}

fn gadget_equivalence() -> Outcome {
    let start = Instant::now();
    let tol = 1e-10;
    let mut worst_fid: f64 = 1.0;
    let mut worst_split: f64 = 0.0;
    for kind in GadgetKind::ALL {
        let target = Unitary::from_mat2(&gate_matrix_1q(&kind.gate(0)).expect("gadget gates are single-qubit"));
        let r = assert_gadget_equiv(kind, &target, 20, tol, 5).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{kind}: {r}"))?;
        ensure(r.max_split_deviation <= tol, || format!("{kind}: {r}"))?;
        worst_fid = worst_fid.min(r.min_fidelity);
        worst_split = worst_split.max(r.max_split_deviation);
    }
    within(Duration::from_secs(10), start)?;
    Ok(format!(
        "6 gadgets, min fidelity {worst_fid:.12}, max |p-1/2| {worst_split:.1e}"
    ))
}

fn decomposition_oracles() -> Outcome {
    let tol = 1e-10;
    let one = |g: Gate| Unitary::from_mat2(&gate_matrix_1q(&g).expect("single-qubit gate"));
    let check = |what: &str, n: usize, gates: &[Gate], target: &Unitary, tol: f64| {
        assert_matrix_equiv(n, gates, target, tol)
            .map(|_| ())
            .map_err(|e| format!("{what}: {e}"))
    };
    let tof = toffoli_unitary(0, 1, 2);
    check(
        "quantum Toffoli",
        3,
        &decompose_toffoli_quantum(0, 1, 2).map_err(|e| e.to_string())?,
        &tof,
        tol,
    )?;
    check(
        "reversible Toffoli",
        3,
        &decompose_toffoli_reversible(0, 1, 2).map_err(|e| e.to_string())?,
        &tof,
        tol,
    )?;
    let v = gate_matrix_1q(&Gate::V(0)).expect("V is single-qubit");
    check(
        "C-V",
        2,
        &decompose_cv(0, 1).map_err(|e| e.to_string())?,
        &controlled(&v, 0, 1),
        tol,
    )?;
    check("PVP", 1, &decompose_h(0), &one(Gate::H(0)), tol)?;
    check("T^2", 1, &[Gate::T(0), Gate::T(0)], &one(Gate::P(0)), 1e-12)?;
    check("P^2", 1, &[Gate::P(0), Gate::P(0)], &one(Gate::Z(0)), 1e-12)?;
    check("V^2", 1, &[Gate::V(0), Gate::V(0)], &one(Gate::X(0)), 1e-12)?;
    check("V vs Rx", 1, &[Gate::V(0)], &Unitary::from_mat2(&rx(FRAC_PI_2)), 1e-12)?;
    Ok("Toffoli x2, C-V, PVP, T², P², V² within tolerance".into())
}

fn end_to_end() -> Outcome {
    let start = Instant::now();
    let cases = [
        ("T", Circuit::from_gates(1, [Gate::T(0)])),
        ("H", Circuit::from_gates(1, [Gate::H(0)])),
        (
            "T;CNOT",
            Circuit::from_gates(2, [Gate::T(0), Gate::Cnot { control: 0, target: 1 }]),
        ),
    ];
    let mut min_fid: f64 = 1.0;
    for (name, c) in cases {
        let c = c.map_err(|e| e.to_string())?;
        let icm = transform_to_icm(&c, ToffoliMode::Quantum).map_err(|e| e.to_string())?;
        ensure(icm.num_qubits <= DEFAULT_CAP, || {
            format!("{name}: {} qubits", icm.num_qubits)
        })?;
        let r = verify_circuit(&c, &icm, 20, 1e-10, 7, DEFAULT_CAP).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{name}: {r}"))?;
        min_fid = min_fid.min(r.min_fidelity);
    }
    within(Duration::from_secs(60), start)?;
    Ok(format!(
        "3 circuits x 20 inputs, min fidelity {min_fid:.12}, {:.2?}",
        start.elapsed()
    ))
}

fn structural_canon() -> Outcome {
    let mut circuits: Vec<(String, Circuit)> = common::corpus();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for i in 0..200 {
        circuits.push((format!("random {i}"), random_source_circuit(&mut rng, 40)));
    }
    let mut checked = 0;
    for (name, c) in &circuits {
        for mode in [ToffoliMode::Reversible, ToffoliMode::Quantum] {
            let icm = transform_to_icm(c, mode).map_err(|e| format!("{name}: {e}"))?;
            let v = validate_icm(&icm);
            ensure(v.is_empty(), || format!("{name}: {:?}", v))?;
            let outputs = icm.output_qubits();
            for q in 0..icm.num_qubits {
                let n = icm.measurements.iter().filter(|m| m.qubit == q).count();
                ensure(n == usize::from(!outputs.contains(&q)), || {
                    format!("{name}: qubit {q} measured {n} times")
                })?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} transforms valid"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("ICM counts", icm_counts),
        ("non-ICM estimates", nonicm_estimates),
        ("count formulas", theorem_cross_check),
        ("timing", timing_pin),
        ("gadget equivalence", gadget_equivalence),
        ("decomposition oracles", decomposition_oracles),
        ("end-to-end equivalence", end_to_end),
        ("structural canon", structural_canon),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
