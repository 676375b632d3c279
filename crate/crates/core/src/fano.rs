//! Fano-Bloch coefficients `R[α][β] = Tr m (σ_α ⊗ σ_β)`.
//!
//! Row index α belongs to qubit A, column index β to qubit B. `R[i][0]` and
//! `R[0][j]` are the local Bloch vectors, `R[i][j]` (i, j ≥ 1) the correlation
//! tensor.

use nalgebra::Matrix4;

use crate::error::{Error, Result};
use crate::matcore::{BlochVector, HermitianOp4, C64};

/// Largest imaginary part of a Fano coefficient accepted before rejection.
pub const FANO_IMAG_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FanoTensor(pub [[f64; 4]; 4]);

impl FanoTensor {
    pub fn zero() -> Self {
        Self([[0.0; 4]; 4])
    }

    /// Coefficients of the maximally mixed state.
    pub fn identity_state() -> Self {
        let mut r = Self::zero();
        r.0[0][0] = 1.0;
        r
    }

    pub fn get(&self, alpha: usize, beta: usize) -> f64 {
        self.0[alpha][beta]
    }

    pub fn set(&mut self, alpha: usize, beta: usize, v: f64) {
        self.0[alpha][beta] = v;
    }

    pub fn local_a(&self) -> [f64; 3] {
        [self.0[1][0], self.0[2][0], self.0[3][0]]
    }

    pub fn local_b(&self) -> [f64; 3] {
        [self.0[0][1], self.0[0][2], self.0[0][3]]
    }

    /// Coefficients of `ρ_a ⊗ ρ_b`: `[1, b; a, a bᵀ]`.
    pub fn product(a: &BlochVector, b: &BlochVector) -> Self {
        Self::product_from(a.components(), b.components())
    }

    pub(crate) fn product_from(a: [f64; 3], b: [f64; 3]) -> Self {
        let mut r = Self::identity_state();
        for i in 0..3 {
            r.0[i + 1][0] = a[i];
            r.0[0][i + 1] = b[i];
            for j in 0..3 {
                r.0[i + 1][j + 1] = a[i] * b[j];
            }
        }
        r
    }

    /// Largest `|R_ij - R_i0 R_0j|`; zero for product operators.
    pub fn product_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 1..4 {
            for j in 1..4 {
                worst = worst.max((self.0[i][j] - self.0[i][0] * self.0[0][j]).abs());
            }
        }
        worst
    }

    /// Largest coefficient that must vanish for an operator commuting with `σ_3 ⊗ σ_3`.
    pub fn parity_defect(&self) -> f64 {
        [(1, 0), (2, 0), (0, 1), (0, 2), (1, 3), (2, 3), (3, 1), (3, 2)]
            .iter()
            .map(|&(a, b)| self.0[a][b].abs())
            .fold(0.0, f64::max)
    }

    /// Largest `|R_αβ - R_βα|`.
    pub fn exchange_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for a in 0..4 {
            for b in 0..4 {
                worst = worst.max((self.0[a][b] - self.0[b][a]).abs());
            }
        }
        worst
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst: f64 = 0.0;
        for a in 0..4 {
            for b in 0..4 {
                worst = worst.max((self.0[a][b] - other.0[a][b]).abs());
            }
        }
        worst
    }
}

/// Expands `m` in the Pauli product basis.
pub fn to_fano(m: &HermitianOp4) -> Result<FanoTensor> {
    to_fano_matrix(m.matrix())
}

/// [`to_fano`] for an unchecked matrix; fails if any coefficient is not real.
pub fn to_fano_matrix(m: &Matrix4<C64>) -> Result<FanoTensor> {
    let mut r = FanoTensor::zero();
    for alpha in 0..4 {
        for beta in 0..4 {
            let p = HermitianOp4::pauli_product(alpha, beta);
            let mut acc = C64::new(0.0, 0.0);
            for i in 0..4 {
                for j in 0..4 {
                    acc += m[(i, j)] * p.get(j, i);
                }
            }
            if acc.im.abs() > FANO_IMAG_TOL {
                return Err(Error::NonHermitianCoefficient {
                    alpha,
                    beta,
                    residue: acc.im.abs(),
                });
            }
            r.0[alpha][beta] = acc.re;
        }
    }
    Ok(r)
}

/// `(1/4) Σ R[α][β] σ_α ⊗ σ_β`.
pub fn from_fano(r: &FanoTensor) -> HermitianOp4 {
    let mut m = HermitianOp4::zero();
    for alpha in 0..4 {
        for beta in 0..4 {
            let v = r.0[alpha][beta];
            if v != 0.0 {
                m = m + HermitianOp4::pauli_product(alpha, beta) * (0.25 * v);
            }
        }
    }
    // Re-symmetrize to drop rounding in the imaginary σ_2 entries.
    HermitianOp4::symmetrize(*m.matrix()).0
}

/// `(1/4) Σ (R - R')²`, the squared Hilbert-Schmidt distance.
pub fn fano_distance_sq(r: &FanoTensor, rp: &FanoTensor) -> f64 {
    let mut acc = 0.0;
    for a in 0..4 {
        for b in 0..4 {
            let d = r.0[a][b] - rp.0[a][b];
            acc += d * d;
        }
    }
    0.25 * acc
}
