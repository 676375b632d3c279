//! Linear entropy, linear relative entropy and its symmetric/antisymmetric
//! parts, the order-2 quantum Jensen-Shannon divergence, and the von Neumann
//! quantities used for mutual information.
//!
//! The linear functionals take arbitrary Hermitian operators: several
//! identities are stated for traceless differences of states. Von Neumann
//! entropies are in bits.

use crate::matcore::{HermitianOp2, HermitianOp4, QubitPairDensity, Subsystem};

pub fn purity(rho: &QubitPairDensity) -> f64 {
    rho.op().hs_inner(rho.op())
}

/// `1 - Tr m²`.
pub fn linear_entropy(m: &HermitianOp4) -> f64 {
    1.0 - m.hs_inner(m)
}

/// `S_l(r1‖r2) = Tr r1 (r1 - r2)`.
pub fn lin_rel_entropy(r1: &HermitianOp4, r2: &HermitianOp4) -> f64 {
    r1.hs_inner(r1) - r1.hs_inner(r2)
}

/// `S_l(r1‖r2) + S_l(r2‖r1)`, the squared Hilbert-Schmidt distance.
pub fn sym_lre(r1: &HermitianOp4, r2: &HermitianOp4) -> f64 {
    lin_rel_entropy(r1, r2) + lin_rel_entropy(r2, r1)
}

/// `S_l(r1‖r2) - S_l(r2‖r1) = S₂(r2) - S₂(r1)`.
pub fn asym_lre(r1: &HermitianOp4, r2: &HermitianOp4) -> f64 {
    linear_entropy(r2) - linear_entropy(r1)
}

/// Order-2 Jensen-Shannon divergence `S₂((a+b)/2) - S₂(a)/2 - S₂(b)/2`.
pub fn jsd2(a: &HermitianOp4, b: &HermitianOp4) -> f64 {
    let mid = (*a + *b) * 0.5;
    // summed first so that swapping the arguments is bit-exact
    linear_entropy(&mid) - 0.5 * (linear_entropy(a) + linear_entropy(b))
}

fn entropy_of_spectrum(ev: &[f64]) -> f64 {
    ev.iter()
        .map(|&l| l.clamp(0.0, 1.0))
        .filter(|&l| l > 0.0)
        .map(|l| -l * l.log2())
        .sum()
}

/// `-Tr ρ log₂ ρ` of a two-qubit density.
pub fn von_neumann(rho: &QubitPairDensity) -> f64 {
    entropy_of_spectrum(&rho.eigenvalues())
}

/// `-Tr ρ log₂ ρ` of a single-qubit density.
pub fn von_neumann_qubit(rho: &HermitianOp2) -> f64 {
    entropy_of_spectrum(&rho.eigenvalues())
}

/// `S(ρ_A) + S(ρ_B) - S(ρ)`, the relative entropy to the product of marginals.
pub fn mutual_information(rho: &QubitPairDensity) -> f64 {
    von_neumann_qubit(&rho.marginal(Subsystem::A)) + von_neumann_qubit(&rho.marginal(Subsystem::B))
        - von_neumann(rho)
}
