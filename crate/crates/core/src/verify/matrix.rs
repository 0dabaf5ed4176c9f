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

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};

use num_complex::Complex64;
use thiserror::Error;

use super::state::{OperandOutOfRange, StateVector};
use crate::ir::Gate;

pub type Mat2 = [[Complex64; 2]; 2];

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Matrix of a single-qubit gate; `None` for multi-qubit gates.
pub fn gate_matrix_1q(g: &Gate) -> Option<Mat2> {
    let r = FRAC_1_SQRT_2;
    let o = c(0.0, 0.0);
    let l = c(1.0, 0.0);
    Some(match g {
        Gate::X(_) => [[o, l], [l, o]],
        Gate::Z(_) => [[l, o], [o, -l]],
        Gate::H(_) => [[c(r, 0.0), c(r, 0.0)], [c(r, 0.0), c(-r, 0.0)]],
        Gate::P(_) => [[l, o], [o, c(0.0, 1.0)]],
        Gate::Pdg(_) => [[l, o], [o, c(0.0, -1.0)]],
        Gate::T(_) => [[l, o], [o, Complex64::from_polar(1.0, FRAC_PI_4)]],
        Gate::Tdg(_) => [[l, o], [o, Complex64::from_polar(1.0, -FRAC_PI_4)]],
        // V = HPH, the principal square root of X
        Gate::V(_) => [[c(0.5, 0.5), c(0.5, -0.5)], [c(0.5, -0.5), c(0.5, 0.5)]],
        Gate::Vdg(_) => [[c(0.5, -0.5), c(0.5, 0.5)], [c(0.5, 0.5), c(0.5, -0.5)]],
        _ => return None,
    })
}

/// Rotation about the X axis, `cos(θ/2) I − i sin(θ/2) X`.
pub fn rx(theta: f64) -> Mat2 {
    let (s, co) = (theta / 2.0).sin_cos();
    [[c(co, 0.0), c(0.0, -s)], [c(0.0, -s), c(co, 0.0)]]
}

/// Dense square matrix, row-major, acting on `log2(dim)` qubits with the
/// same bit ordering as [`StateVector`].
#[derive(Clone, Debug, PartialEq)]
pub struct Unitary {
    dim: usize,
    data: Vec<Complex64>,
}

impl Unitary {
    pub fn identity(dim: usize) -> Self {
        let mut data = vec![c(0.0, 0.0); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = c(1.0, 0.0);
        }
        Unitary { dim, data }
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Unitary {
            dim,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn from_mat2(m: &Mat2) -> Self {
        Self::from_rows(&[m[0].to_vec(), m[1].to_vec()])
    }

    /// Permutation matrix sending basis index `i` to `f(i)`.
    pub fn permutation(dim: usize, f: impl Fn(usize) -> usize) -> Self {
        let mut data = vec![c(0.0, 0.0); dim * dim];
        for i in 0..dim {
            data[f(i) * dim + i] = c(1.0, 0.0);
        }
        Unitary { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    /// Composes a gate list (first gate applied first) on `num_qubits` qubits.
    pub fn of_gates(num_qubits: usize, gates: &[Gate]) -> Result<Self, OperandOutOfRange> {
        let dim = 1 << num_qubits;
        let mut data = vec![c(0.0, 0.0); dim * dim];
        for col in 0..dim {
            let mut s = StateVector::basis(num_qubits, col);
            for g in gates {
                s.apply_gate(g)?;
            }
            for (row, a) in s.amplitudes().iter().enumerate() {
                data[row * dim + col] = *a;
            }
        }
        Ok(Unitary { dim, data })
    }

    /// `self` applied to `s`.
    pub fn apply(&self, s: &StateVector) -> StateVector {
        assert_eq!(self.dim, s.amplitudes().len(), "dimension mismatch");
        let amps = (0..self.dim)
            .map(|r| (0..self.dim).map(|k| self.get(r, k) * s.amplitudes()[k]).sum())
            .collect();
        StateVector::from_amplitudes(amps)
    }
}

/// Toffoli on three qubits: flips bit `t` when bits `c1` and `c2` are set.
pub fn toffoli_unitary(c1: usize, c2: usize, t: usize) -> Unitary {
    let mask = (1 << c1) | (1 << c2);
    Unitary::permutation(8, |i| if i & mask == mask { i ^ (1 << t) } else { i })
}

/// `u` on `target` conditioned on `control`, as a 4×4 matrix.
pub fn controlled(u: &Mat2, control: usize, target: usize) -> Unitary {
    let mut m = Unitary::identity(4);
    let (cb, tb) = (1 << control, 1 << target);
    for i in 0..4 {
        if i & cb == 0 {
            continue;
        }
        for j in 0..4 {
            if j & cb == 0 || (i & !tb) != (j & !tb) {
                continue;
            }
            let (ri, rj) = (usize::from(i & tb != 0), usize::from(j & tb != 0));
            m.data[i * 4 + j] = u[ri][rj];
        }
    }
    m
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MatrixMismatch {
    #[error("dimension mismatch: composed {composed}, target {target}")]
    Dimension { composed: usize, target: usize },
    #[error(transparent)]
    Operand(#[from] OperandOutOfRange),
    #[error("matrices differ beyond global phase (max deviation {deviation:.3e})")]
    NotEquivalent { deviation: f64 },
}

/// Largest entrywise deviation between `w` and `t` after removing the best
/// global phase, `λ = tr(t† w) / d`.
pub fn phase_distance(w: &Unitary, t: &Unitary) -> f64 {
    let d = w.dim;
    let lambda: Complex64 = (0..d * d).map(|k| t.data[k].conj() * w.data[k]).sum::<Complex64>() / d as f64;
    if lambda.norm() < 1e-9 {
        return f64::INFINITY;
    }
    let lambda = lambda / lambda.norm();
    w.data
        .iter()
        .zip(&t.data)
        .map(|(a, b)| (a - lambda * b).norm())
        .fold(0.0, f64::max)
}

/// Checks that `gates` compose to `target` up to global phase. Returns the
/// deviation on success.
pub fn assert_matrix_equiv(
    num_qubits: usize,
    gates: &[Gate],
    target: &Unitary,
    tol: f64,
) -> Result<f64, MatrixMismatch> {
    if target.dim != 1 << num_qubits {
        return Err(MatrixMismatch::Dimension {
            composed: 1 << num_qubits,
            target: target.dim,
        });
    }
    let w = Unitary::of_gates(num_qubits, gates)?;
    let deviation = phase_distance(&w, target);
    if deviation <= tol {
        Ok(deviation)
    } else {
        Err(MatrixMismatch::NotEquivalent { deviation })
    }
}
