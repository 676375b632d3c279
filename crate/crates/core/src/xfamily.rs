//! The two-parameter X-state family with parity and exchange symmetry.
//!
//! In the basis `|00>, |01>, |10>, |11>`:
//!
//! ```text
//!     ⎡ c1      0  0  √(c1c2) ⎤
//! ρ = ⎢ 0       w  w  0       ⎥      w = (1 - c1 - c2)/2
//!     ⎢ 0       w  w  0       ⎥
//!     ⎣ √(c1c2) 0  0  c2      ⎦
//! ```

use nalgebra::Matrix4;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matcore::{HermitianOp4, QubitPairDensity, C64};

/// Default width of the `λ1 = λ3` tie band.
pub const DEFAULT_TIE_TOL: f64 = 1e-12;

/// Slack allowed on the parameter constraints before rejecting; accepted values
/// are clamped back into range.
const PARAM_SLACK: f64 = 1e-12;

/// Parameters `(c1, c2)` with `c1, c2 ≥ 0` and `c1 + c2 ≤ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct XParams {
    c1: f64,
    c2: f64,
}

impl XParams {
    pub fn new(c1: f64, c2: f64) -> Result<Self> {
        let in_unit = |v: f64| v.is_finite() && (-PARAM_SLACK..=1.0 + PARAM_SLACK).contains(&v);
        if !in_unit(c1) {
            return Err(Error::InvalidParams(format!("c1 must lie in [0, 1], got {c1}")));
        }
        if !in_unit(c2) {
            return Err(Error::InvalidParams(format!("c2 must lie in [0, 1], got {c2}")));
        }
        if !in_unit(c1 + c2) {
            return Err(Error::InvalidParams(format!(
                "c1 + c2 must lie in [0, 1], got {}",
                c1 + c2
            )));
        }
        let c1 = c1.clamp(0.0, 1.0);
        let c2 = c2.clamp(0.0, 1.0 - c1);
        Ok(Self { c1, c2 })
    }

    /// Point `(c1, alpha - c1)` on the line of fixed `alpha`.
    pub fn on_line(alpha: f64, c1: f64) -> Result<Self> {
        Self::new(c1, (alpha - c1).max(0.0))
    }

    pub fn c1(&self) -> f64 {
        self.c1
    }

    pub fn c2(&self) -> f64 {
        self.c2
    }

    pub fn alpha(&self) -> f64 {
        self.c1 + self.c2
    }
}

/// Non-vanishing Fano coefficients of the family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct XCoeffs {
    pub r30: f64,
    pub r03: f64,
    pub r33: f64,
    pub r11: f64,
    pub r22: f64,
}

/// Eigenvalues of `K = diag(R11², R22², R33² + R03²)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LambdaTriple {
    pub l1: f64,
    pub l2: f64,
    pub l3: f64,
    pub lmax: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BranchTag {
    /// `λ1 ≤ λ3`: closest classical state is dephased in the σ3 basis.
    Minus,
    /// `λ1 > λ3`: closest classical state is dephased in the σ1 basis.
    Plus,
}

impl BranchTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            BranchTag::Minus => "minus",
            BranchTag::Plus => "plus",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Branch {
    pub tag: BranchTag,
    /// `|λ1 - λ3|` fell inside the tie band; `tag` is then `Minus`.
    pub tie: bool,
}

impl Branch {
    pub fn is_plus(&self) -> bool {
        self.tag == BranchTag::Plus
    }
}

/// The density matrix of the family at `p`.
pub fn make_state(p: XParams) -> QubitPairDensity {
    let w = 0.5 * (1.0 - p.c1 - p.c2);
    let off = (p.c1 * p.c2).sqrt();
    let r = |v: f64| C64::new(v, 0.0);
    let z = r(0.0);
    #[rustfmt::skip]
    let m = Matrix4::new(
        r(p.c1), z,    z,    r(off),
        z,       r(w), r(w), z,
        z,       r(w), r(w), z,
        r(off),  z,    z,    r(p.c2),
    );
    QubitPairDensity::trusted(HermitianOp4::symmetrize(m).0)
}

pub fn coeffs(p: XParams) -> XCoeffs {
    let (s1, s2) = (p.c1.sqrt(), p.c2.sqrt());
    let r3 = p.c1 - p.c2;
    XCoeffs {
        r30: r3,
        r03: r3,
        r33: 2.0 * (p.c1 + p.c2) - 1.0,
        r11: 1.0 - (s1 - s2).powi(2),
        r22: 1.0 - (s1 + s2).powi(2),
    }
}

pub fn lambdas(p: XParams) -> LambdaTriple {
    let (s1, s2) = (p.c1.sqrt(), p.c2.sqrt());
    let l1 = (1.0 - (s1 - s2).powi(2)).powi(2);
    let l2 = (1.0 - (s1 + s2).powi(2)).powi(2);
    let l3 = 0.5 * ((3.0 * p.c1 + p.c2 - 1.0).powi(2) + (p.c1 + 3.0 * p.c2 - 1.0).powi(2));
    LambdaTriple {
        l1,
        l2,
        l3,
        lmax: l1.max(l2).max(l3),
    }
}

/// Minus when `λ3 ≥ λ1` (ties within `tie_tol` included), Plus otherwise.
pub fn classify_branch(p: XParams, tie_tol: f64) -> Branch {
    let l = lambdas(p);
    let tie = (l.l1 - l.l3).abs() <= tie_tol;
    let tag = if tie || l.l1 <= l.l3 {
        BranchTag::Minus
    } else {
        BranchTag::Plus
    };
    Branch { tag, tie }
}

/// `√c1 (2c1 - 1) + √c2 (2c2 - 1) ≥ 0`, equivalent to `λ3 ≥ λ1`.
pub fn minus_condition(p: XParams) -> bool {
    p.c1.sqrt() * (2.0 * p.c1 - 1.0) + p.c2.sqrt() * (2.0 * p.c2 - 1.0) >= 0.0
}

/// `c1 + c2 - √(c1 c2) ≥ 1/2`, the same condition in product form.
pub fn minus_condition_product_form(p: XParams) -> bool {
    p.c1 + p.c2 - (p.c1 * p.c2).sqrt() >= 0.5
}

/// Roots `α/2 ± √((1-α)(3α-1))/2` bounding the plus-branch interval of `c1`
/// on the line `c1 + c2 = alpha`. Absent for `alpha < 1/3`.
///
/// The interval is only a branch boundary for `alpha ≥ 1/2`; below that the
/// whole line is on the plus branch.
pub fn alpha_boundaries(alpha: f64) -> Option<(f64, f64)> {
    let disc = (1.0 - alpha) * (3.0 * alpha - 1.0);
    if disc < 0.0 {
        // exact 1/3 can land a rounding error below zero
        if disc > -1e-15 {
            return Some((alpha / 2.0, alpha / 2.0));
        }
        return None;
    }
    let h = 0.5 * disc.sqrt();
    Some((alpha / 2.0 - h, alpha / 2.0 + h))
}

/// Named states of the family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpecialState {
    /// `|ψ0> = (|01> + |10>)/√2`.
    Psi0,
    /// `|ψ1> = (|00> + |11>)/√2`.
    Psi1,
    /// `α|11><11| + (1-α)|ψ0><ψ0|`, the `c1 = 0` end of the line.
    EndpointLow(f64),
    /// `α|00><00| + (1-α)|ψ0><ψ0|`, the `c1 = α` end of the line.
    EndpointHigh(f64),
    /// `α|ψ1><ψ1| + (1-α)|ψ0><ψ0|`, the Bell-diagonal midpoint `c1 = c2 = α/2`.
    Midpoint(f64),
}

fn bell_projector(odd: bool) -> HermitianOp4 {
    let s = C64::new(0.5f64.sqrt(), 0.0);
    let z = C64::new(0.0, 0.0);
    let ket = if odd { [z, s, s, z] } else { [s, z, z, s] };
    HermitianOp4::outer(ket)
}

fn basis_projector(k: usize) -> HermitianOp4 {
    let mut d = [0.0; 4];
    d[k] = 1.0;
    HermitianOp4::from_real_diagonal(d)
}

pub fn special_state(tag: SpecialState) -> Result<QubitPairDensity> {
    let check = |a: f64| {
        if (0.0..=1.0).contains(&a) {
            Ok(a)
        } else {
            Err(Error::InvalidParams(format!("alpha must lie in [0, 1], got {a}")))
        }
    };
    let psi0 = bell_projector(true);
    let psi1 = bell_projector(false);
    let op = match tag {
        SpecialState::Psi0 => psi0,
        SpecialState::Psi1 => psi1,
        SpecialState::EndpointLow(a) => {
            let a = check(a)?;
            basis_projector(3) * a + psi0 * (1.0 - a)
        }
        SpecialState::EndpointHigh(a) => {
            let a = check(a)?;
            basis_projector(0) * a + psi0 * (1.0 - a)
        }
        SpecialState::Midpoint(a) => {
            let a = check(a)?;
            psi1 * a + psi0 * (1.0 - a)
        }
    };
    Ok(QubitPairDensity::trusted(op))
}
