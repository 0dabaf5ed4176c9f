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

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use thiserror::Error;

use super::matrix::{gate_matrix_1q, Mat2};
use crate::ir::{Basis, Gate, InitState, Pauli, Qubit};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{gate} touches qubit {qubit} of a {num_qubits}-qubit state")]
pub struct OperandOutOfRange {
    pub gate: String,
    pub qubit: Qubit,
    pub num_qubits: usize,
}

/// Dense `2^n` amplitude vector; qubit `k` is bit `k` of the basis index.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// |0…0⟩
    pub fn zero(num_qubits: usize) -> Self {
        Self::basis(num_qubits, 0)
    }

    pub fn basis(num_qubits: usize, index: usize) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << num_qubits];
        amps[index] = Complex64::new(1.0, 0.0);
        StateVector { num_qubits, amps }
    }

    /// Panics unless `amps.len()` is a power of two.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Self {
        assert!(amps.len().is_power_of_two(), "amplitude count must be a power of two");
        StateVector {
            num_qubits: amps.len().trailing_zeros() as usize,
            amps,
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn normalize(&mut self) {
        let n = self.norm();
        if n > 0.0 {
            for a in &mut self.amps {
                *a /= n;
            }
        }
    }

    pub fn inner(&self, other: &StateVector) -> Complex64 {
        assert_eq!(self.num_qubits, other.num_qubits, "state sizes differ");
        self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum()
    }

    /// |⟨self|other⟩|², insensitive to global phase.
    pub fn fidelity(&self, other: &StateVector) -> f64 {
        self.inner(other).norm_sqr()
    }

    fn check(&self, gate: &dyn std::fmt::Display, qubits: &[Qubit]) -> Result<(), OperandOutOfRange> {
        match qubits.iter().find(|&&q| q >= self.num_qubits) {
            Some(&qubit) => Err(OperandOutOfRange {
                gate: gate.to_string(),
                qubit,
                num_qubits: self.num_qubits,
            }),
            None => Ok(()),
        }
    }

    pub fn apply_1q(&mut self, m: &Mat2, q: Qubit) {
        let bit = 1 << q;
        for i in 0..self.amps.len() {
            if i & bit == 0 {
                let (a0, a1) = (self.amps[i], self.amps[i | bit]);
                self.amps[i] = m[0][0] * a0 + m[0][1] * a1;
                self.amps[i | bit] = m[1][0] * a0 + m[1][1] * a1;
            }
        }
    }

    /// Applies `m` to `target` on the subspace where `control` is 1.
    pub fn apply_controlled_1q(&mut self, m: &Mat2, control: Qubit, target: Qubit) {
        let (cb, tb) = (1 << control, 1 << target);
        for i in 0..self.amps.len() {
            if i & cb != 0 && i & tb == 0 {
                let (a0, a1) = (self.amps[i], self.amps[i | tb]);
                self.amps[i] = m[0][0] * a0 + m[0][1] * a1;
                self.amps[i | tb] = m[1][0] * a0 + m[1][1] * a1;
            }
        }
    }

    pub fn apply_cnot(&mut self, control: Qubit, target: Qubit) {
        let (cb, tb) = (1 << control, 1 << target);
        for i in 0..self.amps.len() {
            if i & cb != 0 && i & tb == 0 {
                self.amps.swap(i, i | tb);
            }
        }
    }

    pub fn apply_toffoli(&mut self, c1: Qubit, c2: Qubit, target: Qubit) {
        let (c, tb) = ((1 << c1) | (1 << c2), 1 << target);
        for i in 0..self.amps.len() {
            if i & c == c && i & tb == 0 {
                self.amps.swap(i, i | tb);
            }
        }
    }

    pub fn apply_pauli(&mut self, q: Qubit, p: Pauli) {
        let bit = 1 << q;
        if p.z {
            for (i, a) in self.amps.iter_mut().enumerate() {
                if i & bit != 0 {
                    *a = -*a;
                }
            }
        }
        if p.x {
            for i in 0..self.amps.len() {
                if i & bit == 0 {
                    self.amps.swap(i, i | bit);
                }
            }
        }
    }

    pub fn apply_gate(&mut self, g: &Gate) -> Result<(), OperandOutOfRange> {
        self.check(g, &g.qubits())?;
        match *g {
            Gate::Cnot { control, target } => self.apply_cnot(control, target),
            Gate::Toffoli { c1, c2, target } => self.apply_toffoli(c1, c2, target),
            Gate::CV { control, target } => {
                self.apply_controlled_1q(&gate_matrix_1q(&Gate::V(0)).unwrap(), control, target)
            }
            Gate::CVdg { control, target } => {
                self.apply_controlled_1q(&gate_matrix_1q(&Gate::Vdg(0)).unwrap(), control, target)
            }
            ref single => {
                let m = gate_matrix_1q(single).expect("remaining gates act on one qubit");
                self.apply_1q(&m, single.qubits()[0]);
            }
        }
        Ok(())
    }

    /// Projects `qubit` onto outcome `outcome` of a `basis` measurement.
    /// Returns the outcome probability and the renormalised state; the
    /// measured qubit stays in the register in its collapsed state.
    pub fn measure_branch(&self, qubit: Qubit, basis: Basis, outcome: bool) -> (f64, StateVector) {
        let h = gate_matrix_1q(&Gate::H(0)).unwrap();
        let mut s = self.clone();
        if basis == Basis::X {
            s.apply_1q(&h, qubit);
        }
        let bit = 1 << qubit;
        let mut prob = 0.0;
        for (i, a) in s.amps.iter_mut().enumerate() {
            if (i & bit != 0) != outcome {
                *a = Complex64::new(0.0, 0.0);
            } else {
                prob += a.norm_sqr();
            }
        }
        s.normalize();
        if basis == Basis::X {
            s.apply_1q(&h, qubit);
        }
        (prob, s)
    }

    /// `self ⊗ other`, with `other`'s qubits numbered after `self`'s.
    pub fn tensor(&self, other: &StateVector) -> StateVector {
        let mut amps = Vec::with_capacity(self.amps.len() * other.amps.len());
        for b in &other.amps {
            for a in &self.amps {
                amps.push(a * b);
            }
        }
        StateVector {
            num_qubits: self.num_qubits + other.num_qubits,
            amps,
        }
    }
}

/// Free-function form of [`StateVector::apply_gate`].
pub fn apply_gate(s: &StateVector, g: &Gate) -> Result<StateVector, OperandOutOfRange> {
    let mut out = s.clone();
    out.apply_gate(g)?;
    Ok(out)
}

/// Free-function form of [`StateVector::measure_branch`].
pub fn measure_branch(s: &StateVector, qubit: Qubit, basis: Basis, outcome: bool) -> (f64, StateVector) {
    s.measure_branch(qubit, basis, outcome)
}

/// Single-qubit amplitudes of an ICM initial state; `None` for data wires.
pub fn init_amplitudes(init: InitState) -> Option<[Complex64; 2]> {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    Some(match init {
        InitState::Zero => [one, zero],
        InitState::Plus => [one * r, one * r],
        InitState::Y => [one * r, Complex64::new(0.0, r)],
        InitState::A => [one * r, Complex64::from_polar(r, std::f64::consts::FRAC_PI_4)],
        InitState::Input => return None,
    })
}

/// Random pure state with i.i.d. Gaussian real and imaginary parts, normalised.
pub fn random_state(num_qubits: usize, rng: &mut impl Rng) -> StateVector {
    let amps = (0..1usize << num_qubits)
        .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect();
    let mut s = StateVector::from_amplitudes(amps);
    s.normalize();
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn x_flips_zero_to_one() {
        let s = apply_gate(&StateVector::zero(1), &Gate::X(0)).unwrap();
        assert_eq!(s, StateVector::basis(1, 1));
    }

    #[test]
    fn z_negates_the_one_amplitude() {
        let s = StateVector::from_amplitudes(vec![Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)]);
        let out = apply_gate(&s, &Gate::Z(0)).unwrap();
        assert!(close(out.amplitudes()[0], Complex64::new(0.6, 0.0)));
        assert!(close(out.amplitudes()[1], Complex64::new(0.0, -0.8)));
    }

    #[test]
    fn cnot_on_one_zero() {
        // |10⟩ with the control (qubit 0) set
        let s = apply_gate(&StateVector::basis(2, 0b01), &Gate::Cnot { control: 0, target: 1 }).unwrap();
        assert_eq!(s, StateVector::basis(2, 0b11));
    }

    #[test]
    fn out_of_range_operand() {
        let err = apply_gate(&StateVector::zero(2), &Gate::T(2)).unwrap_err();
        assert_eq!(err.qubit, 2);
    }

    #[test]
    fn z_measure_plus() {
        let plus = apply_gate(&StateVector::zero(1), &Gate::H(0)).unwrap();
        let (p, s) = plus.measure_branch(0, Basis::Z, false);
        assert!((p - 0.5).abs() < 1e-12);
        assert!((s.fidelity(&StateVector::zero(1)) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn x_measure_zero_gives_minus() {
        let (p, s) = StateVector::zero(1).measure_branch(0, Basis::X, true);
        assert!((p - 0.5).abs() < 1e-12);
        let minus = apply_gate(&StateVector::basis(1, 1), &Gate::H(0)).unwrap();
        assert!((s.fidelity(&minus) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn z_measure_one_forced_zero() {
        let (p, _) = StateVector::basis(1, 1).measure_branch(0, Basis::Z, false);
        assert_eq!(p, 0.0);
    }

    #[test]
    fn magic_states_are_normalised() {
        for init in [InitState::Zero, InitState::Plus, InitState::Y, InitState::A] {
            let [a, b] = init_amplitudes(init).unwrap();
            assert!((a.norm_sqr() + b.norm_sqr() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn random_states_have_unit_norm() {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for n in 0..5 {
            assert!((random_state(n, &mut rng).norm() - 1.0).abs() < 1e-12);
        }
    }
}
