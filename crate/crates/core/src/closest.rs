//! Closed-form closest states for the X family: the closest product state
//! `π_ρ`, the closest classical state `χ±` and its closest product state
//! `π_χ±`.
//!
//! By exchange and parity symmetry the closest product state has both Bloch
//! vectors equal to `(0, 0, a3)`, where `a3` is the unique real root of
//! `a3³ + a3 (1 - R33) - R30 = 0`.

use crate::error::{Error, Result};
use crate::fano::{from_fano, FanoTensor};
use crate::matcore::{tensor, BlochVector, HermitianOp2, QubitPairDensity};
use crate::xfamily::{classify_branch, coeffs, Branch, BranchTag, XParams, DEFAULT_TIE_TOL};

/// `R30² + (4/27)(1 - R33)³`.
pub fn cubic_discriminant(r30: f64, r33: f64) -> f64 {
    let p = 1.0 - r33;
    r30 * r30 + 4.0 / 27.0 * p * p * p
}

/// `a³ + a (1 - R33) - R30`.
pub fn cubic_residual(a3: f64, r30: f64, r33: f64) -> f64 {
    a3 * a3 * a3 + a3 * (1.0 - r33) - r30
}

/// Unique real root of `a³ + a (1 - r33) - r30 = 0`.
///
/// Cardano's form `∛((√Δ + r30)/2) - ∛((√Δ - r30)/2)` is evaluated as
/// `r30 / (u² + uv + v²)` to avoid cancelling the two cube roots, then polished
/// with one Newton step.
pub fn solve_a3(r30: f64, r33: f64) -> Result<f64> {
    if r33.is_nan() || r33 > 1.0 + 1e-12 {
        return Err(Error::Domain { r33 });
    }
    let p = (1.0 - r33).max(0.0);
    let q = r30;
    if q == 0.0 {
        return Ok(0.0);
    }
    let sqrt_disc = (q * q + 4.0 / 27.0 * p * p * p).sqrt();
    let u = (0.5 * (sqrt_disc + q)).max(0.0).cbrt();
    let v = (0.5 * (sqrt_disc - q)).max(0.0).cbrt();
    let mut a = q / (u * u + u * v + v * v);
    let slope = 3.0 * a * a + p;
    if slope > 0.0 {
        a -= (a * a * a + p * a - q) / slope;
    }
    Ok(a)
}

/// Squared distance from the family state to the symmetric product state with
/// Bloch vectors `(0, 0, a3)`: `(1/4)[2(R30-a)² + R11² + R22² + (R33-a²)²]`.
pub fn symmetric_product_distance_sq(p: XParams, a3: f64) -> f64 {
    let k = coeffs(p);
    0.25 * (2.0 * (k.r30 - a3).powi(2) + k.r11 * k.r11 + k.r22 * k.r22 + (k.r33 - a3 * a3).powi(2))
}

/// `a3` of the closest product state at `p`.
pub fn closest_a3(p: XParams) -> f64 {
    let k = coeffs(p);
    // r33 = 2α - 1 ≤ 1 on the admissible triangle
    solve_a3(k.r30, k.r33).expect("family parameters keep r33 <= 1")
}

fn z_state(z: f64) -> HermitianOp2 {
    BlochVector::z(z.clamp(-1.0, 1.0))
        .expect("clamped z component is a valid Bloch vector")
        .to_state()
}

/// `(1/4)[σ0⊗σ0 + a3(σ3⊗σ0 + σ0⊗σ3) + a3² σ3⊗σ3]`.
pub fn closest_product(p: XParams) -> QubitPairDensity {
    let a3 = closest_a3(p);
    let s = z_state(a3);
    QubitPairDensity::trusted(tensor(&s, &s))
}

/// Closest classical state on an explicitly chosen branch.
pub fn closest_classical_on(p: XParams, tag: BranchTag) -> QubitPairDensity {
    let k = coeffs(p);
    let mut r = FanoTensor::identity_state();
    match tag {
        BranchTag::Minus => {
            r.set(3, 0, k.r30);
            r.set(0, 3, k.r30);
            r.set(3, 3, k.r33);
        }
        BranchTag::Plus => {
            r.set(0, 3, k.r03);
            r.set(1, 1, k.r11);
        }
    }
    QubitPairDensity::trusted(from_fano(&r))
}

/// Closest classical state `χ∓` and the branch that selected it.
pub fn closest_classical(p: XParams) -> (QubitPairDensity, Branch) {
    let branch = classify_branch(p, DEFAULT_TIE_TOL);
    (closest_classical_on(p, branch.tag), branch)
}

/// Closest product state to `χ∓` on an explicitly chosen branch.
pub fn closest_classical_product_on(p: XParams, tag: BranchTag) -> QubitPairDensity {
    match tag {
        BranchTag::Minus => closest_product(p),
        BranchTag::Plus => {
            let k = coeffs(p);
            QubitPairDensity::trusted(tensor(&z_state(0.0), &z_state(k.r03)))
        }
    }
}

pub fn closest_classical_product(p: XParams) -> QubitPairDensity {
    closest_classical_product_on(p, classify_branch(p, DEFAULT_TIE_TOL).tag)
}

/// All closest states for one parameter point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosestSet {
    pub a3: f64,
    pub pi_rho: QubitPairDensity,
    pub chi: QubitPairDensity,
    pub pi_chi: QubitPairDensity,
    pub branch: Branch,
}

pub fn closest_set(p: XParams) -> ClosestSet {
    closest_set_with(p, DEFAULT_TIE_TOL)
}

pub fn closest_set_with(p: XParams, tie_tol: f64) -> ClosestSet {
    let branch = classify_branch(p, tie_tol);
    closest_set_on(p, branch)
}

/// Closest states with the branch forced; used to inspect both sides of a tie.
pub fn closest_set_on(p: XParams, branch: Branch) -> ClosestSet {
    ClosestSet {
        a3: closest_a3(p),
        pi_rho: closest_product(p),
        chi: closest_classical_on(p, branch.tag),
        pi_chi: closest_classical_product_on(p, branch.tag),
        branch,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fano::to_fano;
    use crate::matcore::{hs_inner, HermitianOp4};
    use crate::xfamily::make_state;

    fn p(c1: f64, c2: f64) -> XParams {
        XParams::new(c1, c2).unwrap()
    }

    /// Bisection on the monotone cubic, independent of the closed form.
    fn bisect_root(r30: f64, r33: f64) -> f64 {
        let (mut lo, mut hi) = (-2.0f64, 2.0f64);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if cubic_residual(mid, r30, r33) > 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn cubic_examples() {
        assert_eq!(solve_a3(0.0, 0.3).unwrap(), 0.0);
        assert!((solve_a3(1.0, 1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((solve_a3(-1.0, 1.0).unwrap() + 1.0).abs() < 1e-15);
        let a = solve_a3(0.2, -0.2).unwrap();
        assert!((a - bisect_root(0.2, -0.2)).abs() < 1e-14);
        // High-precision root of a³ + 1.2a - 0.2.
        assert!((a - 0.163_054_115_174_667_7).abs() < 1e-14);
        assert_eq!(solve_a3(0.0, 1.0).unwrap(), 0.0);
        assert!(matches!(solve_a3(0.1, 1.5), Err(Error::Domain { .. })));
    }

    #[test]
    fn cubic_tiny_r30_has_no_cancellation() {
        for &q in &[1e-14, 1e-10, -3e-8] {
            let a = solve_a3(q, -1.0).unwrap();
            // Linear regime: a ≈ q / (1 - r33).
            assert!((a / (q / 2.0) - 1.0).abs() < 1e-12, "q={q} a={a}");
        }
    }

    #[test]
    fn product_state_examples() {
        let s = closest_product(p(0.2, 0.2));
        assert!(s.op().max_abs_diff(&(HermitianOp4::identity() * 0.25)) < 1e-15);
        let s = closest_product(p(1.0, 0.0));
        assert!(s.op().max_abs_diff(make_state(p(1.0, 0.0)).op()) < 1e-15);
        let r = to_fano(closest_product(p(0.3, 0.1)).op()).unwrap();
        let a = closest_a3(p(0.3, 0.1));
        assert!((r.get(3, 0) - a).abs() < 1e-15 && (r.get(0, 3) - a).abs() < 1e-15);
        assert!((r.get(3, 3) - a * a).abs() < 1e-15);
        assert!(r.product_defect() < 1e-15);
    }

    #[test]
    fn classical_state_examples() {
        let (chi, b) = closest_classical(p(0.7, 0.05));
        assert_eq!(b.tag, BranchTag::Minus);
        let r = to_fano(chi.op()).unwrap();
        assert!((r.get(3, 0) - 0.65).abs() < 1e-12 && (r.get(3, 3) - 0.5).abs() < 1e-12);
        let (chi, b) = closest_classical(p(0.3, 0.1));
        assert_eq!(b.tag, BranchTag::Plus);
        let r = to_fano(chi.op()).unwrap();
        assert!((r.get(0, 3) - 0.2).abs() < 1e-12 && (r.get(1, 1) - 0.946410).abs() < 1e-6);
        assert!(r.get(3, 0).abs() < 1e-15);
    }

    #[test]
    fn bell_diagonal_minus_state_drops_coherences() {
        let rho = make_state(p(0.35, 0.35));
        let chi = closest_classical_on(p(0.35, 0.35), BranchTag::Minus);
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j { rho.op().get(i, j) } else { Default::default() };
                assert!((chi.op().get(i, j) - expect).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn classical_product_examples() {
        let a = closest_classical_product(p(0.7, 0.05));
        assert!(a.op().max_abs_diff(closest_product(p(0.7, 0.05)).op()) < 1e-15);
        let r = to_fano(closest_classical_product(p(0.3, 0.1)).op()).unwrap();
        let mut expect = FanoTensor::identity_state();
        expect.set(0, 3, 0.2);
        assert!(r.max_abs_diff(&expect) < 1e-15);
        let s = closest_classical_product_on(p(0.15, 0.15), BranchTag::Plus);
        assert!(s.op().max_abs_diff(&(HermitianOp4::identity() * 0.25)) < 1e-15);
    }

    #[test]
    fn set_at_tie_and_corner() {
        let set = closest_set(p(0.5, 0.5));
        let mixed = HermitianOp4::identity() * 0.25;
        assert_eq!(set.a3, 0.0);
        assert!(set.branch.tie && set.branch.tag == BranchTag::Minus);
        assert!(set.pi_rho.op().max_abs_diff(&mixed) < 1e-15);
        assert!(set.pi_chi.op().max_abs_diff(&mixed) < 1e-15);
        assert!((to_fano(set.chi.op()).unwrap().get(3, 3) - 1.0).abs() < 1e-15);

        let set = closest_set(p(1.0, 0.0));
        let pure = make_state(p(1.0, 0.0));
        for s in [set.pi_rho, set.chi, set.pi_chi] {
            assert!(s.op().max_abs_diff(pure.op()) < 1e-15);
        }
    }

    #[test]
    fn classical_state_is_orthogonal_projection() {
        for &(c1, c2) in &[(0.3, 0.1), (0.7, 0.05), (0.5, 0.5), (0.1, 0.6)] {
            let set = closest_set(p(c1, c2));
            let rho = make_state(p(c1, c2));
            let lhs = hs_inner(rho.op(), set.chi.op());
            let rhs = hs_inner(set.chi.op(), set.chi.op());
            assert!((lhs - rhs).abs() < 1e-12);
        }
    }
}
