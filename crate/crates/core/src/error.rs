use thiserror::Error;

/// Errors raised while constructing or analysing two-qubit operators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("operator is not Hermitian: asymmetry norm {asymmetry:e} exceeds {tolerance:e}")]
    NotHermitian { asymmetry: f64, tolerance: f64 },

    #[error("density must have unit trace: trace is {trace} (deviation {deviation:e})")]
    TraceNotOne { trace: f64, deviation: f64 },

    #[error("density must be positive semidefinite: minimum eigenvalue is {min_eigenvalue:e}")]
    NotPositive { min_eigenvalue: f64 },

    #[error("Fano coefficient R[{alpha}][{beta}] has imaginary residue {residue:e}")]
    NonHermitianCoefficient {
        alpha: usize,
        beta: usize,
        residue: f64,
    },

    #[error("Bloch vector norm {norm} exceeds 1")]
    InvalidBlochVector { norm: f64 },

    #[error("{0}")]
    InvalidParams(String),

    #[error("cubic is defined only for r33 <= 1, got r33 = {r33}")]
    Domain { r33: f64 },

    #[error("operation requires the plus branch (lambda1 > lambda3)")]
    Branch,

    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
