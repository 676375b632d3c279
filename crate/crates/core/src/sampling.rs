//! Seeded random operators and parameter points for invariant checks.

use nalgebra::Matrix4;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::matcore::{validate_density, HermitianOp4, QubitPairDensity, C64};
use crate::xfamily::XParams;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian_matrix<R: Rng + ?Sized>(rng: &mut R) -> Matrix4<C64> {
    Matrix4::from_fn(|_, _| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
}

/// Hermitian part of a complex Gaussian matrix; not unit trace.
pub fn random_hermitian<R: Rng + ?Sized>(rng: &mut R) -> HermitianOp4 {
    HermitianOp4::symmetrize(gaussian_matrix(rng)).0
}

/// Hilbert-Schmidt-random density `G G† / Tr(G G†)`.
pub fn random_density<R: Rng + ?Sized>(rng: &mut R) -> QubitPairDensity {
    let g = gaussian_matrix(rng);
    let w = g * g.adjoint();
    let t = w.trace().re;
    let op = HermitianOp4::symmetrize(w / C64::new(t, 0.0)).0;
    validate_density(op).expect("Wishart matrix normalized to unit trace is a density")
}

/// Uniform point on the admissible triangle `c1, c2 ≥ 0, c1 + c2 ≤ 1`.
pub fn random_params<R: Rng + ?Sized>(rng: &mut R) -> XParams {
    let (mut u, mut v): (f64, f64) = (rng.random(), rng.random());
    if u + v > 1.0 {
        u = 1.0 - u;
        v = 1.0 - v;
    }
    XParams::new(u, v).expect("reflected point lies in the triangle")
}

/// Grid `(i/(n-1), j/(n-1))` with `i + j ≤ n - 1`, in row-major order.
pub fn triangle_grid(n: usize) -> Vec<XParams> {
    let m = n.max(2) - 1;
    let step = 1.0 / m as f64;
    let mut out = Vec::with_capacity((m + 1) * (m + 2) / 2);
    for i in 0..=m {
        for j in 0..=(m - i) {
            let c1 = i as f64 * step;
            let c2 = if i + j == m { 1.0 - c1 } else { j as f64 * step };
            out.push(XParams::new(c1, c2).expect("grid point lies in the triangle"));
        }
    }
    out
}
