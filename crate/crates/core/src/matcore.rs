//! Small exact complex linear algebra for one- and two-qubit Hermitian operators.
//!
//! Basis order for two-qubit operators is `|00>, |01>, |10>, |11>` everywhere;
//! the first tensor factor is qubit A and indexes the high bit.

use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{Complex, Matrix2, Matrix4, SymmetricEigen};

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;

/// Largest tolerated `max |m - m†|` entry before an operator is rejected.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Largest tolerated `|Tr ρ - 1|` for a density.
pub const TRACE_TOL: f64 = 1e-12;
/// Most negative eigenvalue accepted for a density.
pub const PSD_TOL: f64 = 1e-10;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Selects which subsystem survives a partial trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// A 2×2 Hermitian operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianOp2(Matrix2<C64>);

/// A 4×4 Hermitian operator on two qubits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianOp4(Matrix4<C64>);

macro_rules! hermitian_common {
    ($ty:ident, $mat:ident, $n:expr) => {
        impl $ty {
            /// Accepts `m` if it is Hermitian within [`HERMITIAN_TOL`], storing
            /// the symmetrized part `(m + m†)/2`.
            pub fn new(m: $mat<C64>) -> Result<Self> {
                let (op, asymmetry) = Self::symmetrize(m);
                if asymmetry > HERMITIAN_TOL {
                    return Err(Error::NotHermitian {
                        asymmetry,
                        tolerance: HERMITIAN_TOL,
                    });
                }
                Ok(op)
            }

            /// Hermitian part of an arbitrary matrix, with the largest entry of
            /// `|m - m†|`.
            pub fn symmetrize(m: $mat<C64>) -> (Self, f64) {
                let adj = m.adjoint();
                let asymmetry = (m - adj).iter().map(|z| z.norm()).fold(0.0, f64::max);
                (Self((m + adj) * c(0.5, 0.0)), asymmetry)
            }

            pub fn from_real_diagonal(d: [f64; $n]) -> Self {
                let mut m = $mat::<C64>::zeros();
                for (i, v) in d.iter().enumerate() {
                    m[(i, i)] = c(*v, 0.0);
                }
                Self(m)
            }

            pub fn zero() -> Self {
                Self($mat::zeros())
            }

            pub fn identity() -> Self {
                Self($mat::identity())
            }

            pub fn matrix(&self) -> &$mat<C64> {
                &self.0
            }

            pub fn get(&self, row: usize, col: usize) -> C64 {
                self.0[(row, col)]
            }

            pub fn trace(&self) -> f64 {
                self.0.trace().re
            }

            /// Real eigenvalues in ascending order.
            pub fn eigenvalues(&self) -> Vec<f64> {
                let mut ev: Vec<f64> = SymmetricEigen::new(self.0).eigenvalues.iter().copied().collect();
                ev.sort_by(f64::total_cmp);
                ev
            }

            /// `Tr(self · other)`, real for Hermitian arguments.
            pub fn hs_inner(&self, other: &Self) -> f64 {
                let mut acc = 0.0;
                for i in 0..$n {
                    for j in 0..$n {
                        // Tr(AB) = Σ A_ij B_ji = Σ A_ij conj(B_ij)
                        acc += (self.0[(i, j)] * other.0[(i, j)].conj()).re;
                    }
                }
                acc
            }

            /// Largest entrywise modulus of `self - other`.
            pub fn max_abs_diff(&self, other: &Self) -> f64 {
                (self.0 - other.0).iter().map(|z| z.norm()).fold(0.0, f64::max)
            }

            /// `k · self · k†`; Hermitian for any `k`.
            pub fn sandwich(&self, k: &$mat<C64>) -> Self {
                Self::symmetrize(k * self.0 * k.adjoint()).0
            }

            /// `self · other - other · self`.
            pub fn commutator(&self, other: &Self) -> $mat<C64> {
                self.0 * other.0 - other.0 * self.0
            }
        }

        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                $ty(self.0 + rhs.0)
            }
        }

        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                $ty(self.0 - rhs.0)
            }
        }

        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty(-self.0)
            }
        }

        impl Mul<f64> for $ty {
            type Output = $ty;
            fn mul(self, rhs: f64) -> $ty {
                $ty(self.0 * c(rhs, 0.0))
            }
        }

        impl Mul<$ty> for f64 {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                rhs * self
            }
        }
    };
}

hermitian_common!(HermitianOp2, Matrix2, 2);
hermitian_common!(HermitianOp4, Matrix4, 4);

impl HermitianOp2 {
    /// Pauli matrix `σ_k`, with `σ_0` the identity.
    ///
    /// # Panics
    /// If `k > 3`.
    pub fn pauli(k: usize) -> Self {
        let z = c(0.0, 0.0);
        let one = c(1.0, 0.0);
        let i = c(0.0, 1.0);
        let m = match k {
            0 => Matrix2::new(one, z, z, one),
            1 => Matrix2::new(z, one, one, z),
            2 => Matrix2::new(z, -i, i, z),
            3 => Matrix2::new(one, z, z, -one),
            _ => panic!("Pauli index {k} out of range 0..=3"),
        };
        Self(m)
    }

    /// Projector onto computational basis state `|bit>`.
    pub fn basis_projector(bit: usize) -> Self {
        let mut d = [0.0; 2];
        d[bit] = 1.0;
        Self::from_real_diagonal(d)
    }
}

impl HermitianOp4 {
    /// `σ_α ⊗ σ_β`.
    pub fn pauli_product(alpha: usize, beta: usize) -> Self {
        tensor(&HermitianOp2::pauli(alpha), &HermitianOp2::pauli(beta))
    }

    /// `|ψ><ψ|` for an arbitrary (not necessarily normalized) ket.
    pub fn outer(ket: [C64; 4]) -> Self {
        let mut m = Matrix4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                m[(i, j)] = ket[i] * ket[j].conj();
            }
        }
        Self(m)
    }
}

/// Kronecker product `a ⊗ b`, row-major, first factor on the high bit.
pub fn tensor(a: &HermitianOp2, b: &HermitianOp2) -> HermitianOp4 {
    let mut m = Matrix4::zeros();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    m[(2 * i + k, 2 * j + l)] = a.0[(i, j)] * b.0[(k, l)];
                }
            }
        }
    }
    HermitianOp4(m)
}

/// Reduced operator on `keep`, tracing out the other qubit.
pub fn partial_trace(m: &HermitianOp4, keep: Subsystem) -> HermitianOp2 {
    let mut out = Matrix2::zeros();
    for i in 0..2 {
        for j in 0..2 {
            let mut acc = c(0.0, 0.0);
            for k in 0..2 {
                acc += match keep {
                    Subsystem::A => m.0[(2 * i + k, 2 * j + k)],
                    Subsystem::B => m.0[(2 * k + i, 2 * k + j)],
                };
            }
            out[(i, j)] = acc;
        }
    }
    HermitianOp2(out)
}

/// Ascending eigenvalues of a raw 4×4 matrix, rejecting non-Hermitian input.
pub fn hermitian_eigenvalues(m: Matrix4<C64>) -> Result<Vec<f64>> {
    Ok(HermitianOp4::new(m)?.eigenvalues())
}

/// Free-function form of [`HermitianOp4::hs_inner`].
pub fn hs_inner(a: &HermitianOp4, b: &HermitianOp4) -> f64 {
    a.hs_inner(b)
}

/// Squared Hilbert-Schmidt norm `Tr (a-b)²`.
pub fn hs_distance_sq(a: &HermitianOp4, b: &HermitianOp4) -> f64 {
    let d = *a - *b;
    d.hs_inner(&d)
}

/// A validated two-qubit density: Hermitian, unit trace, positive semidefinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitPairDensity(HermitianOp4);

impl QubitPairDensity {
    pub fn op(&self) -> &HermitianOp4 {
        &self.0
    }

    pub fn into_op(self) -> HermitianOp4 {
        self.0
    }

    /// Checks Hermiticity, trace and positivity of a raw matrix.
    pub fn from_matrix(m: Matrix4<C64>) -> Result<Self> {
        validate_density(HermitianOp4::new(m)?)
    }

    pub fn maximally_mixed() -> Self {
        Self(HermitianOp4::identity() * 0.25)
    }

    /// Builds a state the caller already knows to be valid (closed-form constructions).
    pub(crate) fn trusted(op: HermitianOp4) -> Self {
        debug_assert!(validate_density(op).is_ok(), "trusted density failed validation");
        Self(op)
    }

    pub fn marginal(&self, keep: Subsystem) -> HermitianOp2 {
        partial_trace(&self.0, keep)
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        self.0.eigenvalues()
    }
}

impl From<QubitPairDensity> for HermitianOp4 {
    fn from(d: QubitPairDensity) -> Self {
        d.0
    }
}

impl AsRef<HermitianOp4> for QubitPairDensity {
    fn as_ref(&self) -> &HermitianOp4 {
        &self.0
    }
}

/// Wraps `m` as a density if its trace is one and its spectrum is nonnegative.
pub fn validate_density(m: HermitianOp4) -> Result<QubitPairDensity> {
    let trace = m.trace();
    let deviation = (trace - 1.0).abs();
    if deviation > TRACE_TOL {
        return Err(Error::TraceNotOne { trace, deviation });
    }
    let min_eigenvalue = m.eigenvalues()[0];
    if min_eigenvalue < -PSD_TOL {
        return Err(Error::NotPositive { min_eigenvalue });
    }
    Ok(QubitPairDensity(m))
}

/// Single-qubit Bloch vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
}

impl BlochVector {
    pub fn new(a1: f64, a2: f64, a3: f64) -> Result<Self> {
        let v = Self { a1, a2, a3 };
        let norm = v.norm();
        if norm * norm > 1.0 + 1e-12 {
            return Err(Error::InvalidBlochVector { norm });
        }
        Ok(v)
    }

    pub fn z(a3: f64) -> Result<Self> {
        Self::new(0.0, 0.0, a3)
    }

    pub fn components(&self) -> [f64; 3] {
        [self.a1, self.a2, self.a3]
    }

    pub fn norm(&self) -> f64 {
        (self.a1 * self.a1 + self.a2 * self.a2 + self.a3 * self.a3).sqrt()
    }

    /// `(σ_0 + a·σ)/2`.
    pub fn to_state(&self) -> HermitianOp2 {
        let mut s = HermitianOp2::pauli(0);
        for (k, a) in self.components().iter().enumerate() {
            s = s + HermitianOp2::pauli(k + 1) * *a;
        }
        s * 0.5
    }

    /// Bloch vector `Tr(ρ σ_k)` of a single-qubit operator.
    pub fn of(rho: &HermitianOp2) -> Self {
        let comp = |k| rho.hs_inner(&HermitianOp2::pauli(k));
        Self {
            a1: comp(1),
            a2: comp(2),
            a3: comp(3),
        }
    }
}

/// Product density `ρ_a ⊗ ρ_b` of two Bloch vectors.
pub fn product_state(a: &BlochVector, b: &BlochVector) -> QubitPairDensity {
    QubitPairDensity::trusted(tensor(&a.to_state(), &b.to_state()))
}

/// Swap operator `|ij> -> |ji>`.
pub fn swap_matrix() -> Matrix4<C64> {
    let mut m = Matrix4::zeros();
    for i in 0..2 {
        for j in 0..2 {
            m[(2 * j + i, 2 * i + j)] = c(1.0, 0.0);
        }
    }
    m
}
