//! Correlation quantifiers for the X family.
//!
//! Linear quantifiers are antisymmetric linear relative entropies between the
//! closest-state chain `ρ → π_ρ`, `ρ → χ`, `χ → π_χ`, `π_ρ → π_χ`:
//!
//! ```text
//! T2 = S₂(π_ρ) - S₂(ρ)    D2 = S₂(χ) - S₂(ρ)
//! C2 = S₂(π_χ) - S₂(χ)    L2 = S₂(π_χ) - S₂(π_ρ)
//! ```
//!
//! so `T2 - D2 - C2 + L2 = 0` identically. Geometric quantifiers are the
//! squared Hilbert-Schmidt distances along the same chain; they satisfy
//! `Tg - Dg - Cg + Lg = Δg` with
//! `Δg = 2[Tr π_ρ(π_ρ - ρ) + Tr π_χ(χ - π_ρ)]`.
//!
//! Geometric values are always computed from the constructed states. The
//! closed forms here are checked against them, never substituted for them.

use serde::Serialize;

use crate::closest::{closest_set, closest_set_on, ClosestSet};
use crate::error::{Error, Result};
use crate::lentropy::{asym_lre, mutual_information};
use crate::matcore::{hs_distance_sq, hs_inner, HermitianOp4};
use crate::xfamily::{coeffs, lambdas, make_state, Branch, BranchTag, LambdaTriple, XParams};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LinearCorrelations {
    pub t2: f64,
    pub d2: f64,
    pub c2: f64,
    pub l2: f64,
}

impl LinearCorrelations {
    /// `T2 - D2 - C2 + L2`.
    pub fn additivity_residual(&self) -> f64 {
        self.t2 - self.d2 - self.c2 + self.l2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GeometricCorrelations {
    pub tg: f64,
    pub dg: f64,
    pub cg: f64,
    pub lg: f64,
    /// From the trace form `2[Tr π_ρ(π_ρ - ρ) + Tr π_χ(χ - π_ρ)]`.
    pub delta_g: f64,
}

impl GeometricCorrelations {
    /// `Tg - Dg - Cg + Lg - Δg`.
    pub fn additivity_residual(&self) -> f64 {
        self.tg - self.dg - self.cg + self.lg - self.delta_g
    }

    /// `Tg - Dg - Cg + Lg`, the additivity defect computed from the distances.
    pub fn defect_from_distances(&self) -> f64 {
        self.tg - self.dg - self.cg + self.lg
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CorrelationReport {
    pub params: XParams,
    pub alpha: f64,
    pub t2: f64,
    pub d2: f64,
    pub c2: f64,
    pub l2: f64,
    pub tg: f64,
    pub dg: f64,
    pub cg: f64,
    pub lg: f64,
    pub delta_g: f64,
    /// Mutual information in bits.
    pub mutual_info: f64,
    pub a3: f64,
    pub lambdas: LambdaTriple,
    pub branch: Branch,
}

impl CorrelationReport {
    pub fn linear(&self) -> LinearCorrelations {
        LinearCorrelations {
            t2: self.t2,
            d2: self.d2,
            c2: self.c2,
            l2: self.l2,
        }
    }

    pub fn geometric(&self) -> GeometricCorrelations {
        GeometricCorrelations {
            tg: self.tg,
            dg: self.dg,
            cg: self.cg,
            lg: self.lg,
            delta_g: self.delta_g,
        }
    }
}

/// Closed-form linear quantifiers on a forced branch.
pub fn linear_closed_form_on(p: XParams, tag: BranchTag) -> LinearCorrelations {
    let k = coeffs(p);
    let l = lambdas(p);
    let a = crate::closest::closest_a3(p);
    let a2 = a * a;
    let a4 = a2 * a2;
    let r03_2 = k.r03 * k.r03;
    let t2 = 0.25 * (2.0 * (r03_2 - a2) + k.r11 * k.r11 + k.r22 * k.r22 + (k.r33 * k.r33 - a4));
    match tag {
        BranchTag::Minus => LinearCorrelations {
            t2,
            d2: 0.25 * (l.l1 + l.l2),
            c2: 0.25 * (2.0 * (r03_2 - a2) + (k.r33 * k.r33 - a4)),
            l2: 0.0,
        },
        BranchTag::Plus => LinearCorrelations {
            t2,
            d2: 0.25 * (l.l2 + l.l3),
            c2: 0.25 * k.r11 * k.r11,
            l2: 0.25 * (2.0 * a2 + a4 - r03_2),
        },
    }
}

/// Linear quantifiers from the closed forms on the selected branch.
pub fn linear_report(p: XParams) -> LinearCorrelations {
    let set = closest_set(p);
    linear_closed_form_on(p, set.branch.tag)
}

/// Linear quantifiers evaluated as linear-entropy differences of the states in `set`.
pub fn linear_from_states(rho: &HermitianOp4, set: &ClosestSet) -> LinearCorrelations {
    LinearCorrelations {
        t2: asym_lre(rho, set.pi_rho.op()),
        d2: asym_lre(rho, set.chi.op()),
        c2: asym_lre(set.chi.op(), set.pi_chi.op()),
        l2: asym_lre(set.pi_rho.op(), set.pi_chi.op()),
    }
}

/// `2[Tr π_ρ(π_ρ - ρ) + Tr π_χ(χ - π_ρ)]`.
pub fn delta_g_trace_form(rho: &HermitianOp4, set: &ClosestSet) -> f64 {
    let pi = set.pi_rho.op();
    let pic = set.pi_chi.op();
    2.0 * (hs_inner(pi, &(*pi - *rho)) + hs_inner(pic, &(*set.chi.op() - *pi)))
}

/// Geometric quantifiers as squared distances between the states in `set`.
pub fn geometric_from_states(rho: &HermitianOp4, set: &ClosestSet) -> GeometricCorrelations {
    GeometricCorrelations {
        tg: hs_distance_sq(rho, set.pi_rho.op()),
        dg: hs_distance_sq(rho, set.chi.op()),
        cg: hs_distance_sq(set.chi.op(), set.pi_chi.op()),
        lg: hs_distance_sq(set.pi_rho.op(), set.pi_chi.op()),
        delta_g: delta_g_trace_form(rho, set),
    }
}

pub fn geometric_report(p: XParams) -> GeometricCorrelations {
    let rho = make_state(p);
    geometric_from_states(rho.op(), &closest_set(p))
}

/// Closed forms for `Tg`, `Dg` and `Cg` on a forced branch.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GeometricClosedForms {
    pub tg: f64,
    pub dg: f64,
    pub cg: f64,
}

pub fn geometric_closed_forms_on(p: XParams, tag: BranchTag) -> GeometricClosedForms {
    let k = coeffs(p);
    let l = lambdas(p);
    let a = crate::closest::closest_a3(p);
    let tg = 0.25 * (2.0 * (k.r30 - a).powi(2) + k.r11 * k.r11 + k.r22 * k.r22 + (k.r33 - a * a).powi(2));
    let dg = 0.25 * (l.l1 + l.l2 + l.l3 - l.lmax);
    let cg = match tag {
        BranchTag::Minus => 0.25 * (2.0 * (k.r30 - a).powi(2) + (k.r33 - a * a).powi(2)),
        BranchTag::Plus => 0.25 * l.l1,
    };
    GeometricClosedForms { tg, dg, cg }
}

/// Plus-branch closed forms for `L_g` and `Δ_g` whose derivation drops terms,
/// next to the definitional values. Nonzero gaps are expected.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClosedFormGaps {
    /// `(a3²/4)(1 + a3² + a3(a3² - R33)²)`.
    pub lg_closed_form: f64,
    /// `‖π_ρ - π_χ‖²` from the constructed states.
    pub lg_definitional: f64,
    /// `(1/2) a3² (R33 - a3²)`, missing the `(1/2) R03 (R03 - a3)` contribution.
    pub delta_g_closed_form: f64,
    pub delta_g_definitional: f64,
}

impl ClosedFormGaps {
    pub fn lg_gap(&self) -> f64 {
        self.lg_closed_form - self.lg_definitional
    }

    pub fn delta_g_gap(&self) -> f64 {
        self.delta_g_closed_form - self.delta_g_definitional
    }
}

/// Compares the plus-branch `L_g`/`Δ_g` closed forms with the definitions.
/// Evaluated on the plus branch regardless of where `p` falls.
pub fn closed_form_gaps(p: XParams) -> ClosedFormGaps {
    let k = coeffs(p);
    let rho = make_state(p);
    let branch = Branch { tag: BranchTag::Plus, tie: false };
    let set = closest_set_on(p, branch);
    let g = geometric_from_states(rho.op(), &set);
    let a = set.a3;
    let a2 = a * a;
    ClosedFormGaps {
        lg_closed_form: a2 / 4.0 * (1.0 + a2 + a * (a2 - k.r33).powi(2)),
        lg_definitional: g.lg,
        delta_g_closed_form: 0.5 * a2 * (k.r33 - a2),
        delta_g_definitional: g.delta_g,
    }
}

/// Named residual of one identity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Residual {
    pub name: &'static str,
    pub value: f64,
}

/// Residuals of the linear↔geometric conversion `x2 = xg + 2 Tr σ(ρ' - σ)` for
/// each pair `(ρ', σ)` in the chain, and of the trace identities entering `Δg`.
pub fn conversion_check(p: XParams) -> Vec<Residual> {
    let rho = make_state(p);
    let set = closest_set(p);
    let k = coeffs(p);
    let a = set.a3;
    let a2 = a * a;
    let lin = linear_closed_form_on(p, set.branch.tag);
    let g = geometric_from_states(rho.op(), &set);
    let (r, pi, chi, pic) = (rho.op(), set.pi_rho.op(), set.chi.op(), set.pi_chi.op());
    let conv = |x2: f64, xg: f64, upper: &HermitianOp4, lower: &HermitianOp4| {
        x2 - (xg + 2.0 * hs_inner(lower, &(*upper - *lower)))
    };
    let mut out = vec![
        Residual { name: "T2 = Tg + 2Tr(pi_rho(rho - pi_rho))", value: conv(lin.t2, g.tg, r, pi) },
        Residual { name: "D2 = Dg + 2Tr(chi(rho - chi))", value: conv(lin.d2, g.dg, r, chi) },
        Residual { name: "C2 = Cg + 2Tr(pi_chi(chi - pi_chi))", value: conv(lin.c2, g.cg, chi, pic) },
        Residual { name: "L2 = Lg + 2Tr(pi_chi(pi_rho - pi_chi))", value: conv(lin.l2, g.lg, pi, pic) },
        Residual {
            name: "Tr(pi_rho(pi_rho - rho)) = a3^2 (R33 - a3^2)/4",
            value: hs_inner(pi, &(*pi - *r)) - 0.25 * a2 * (k.r33 - a2),
        },
    ];
    let chain = hs_inner(pic, &(*chi - *pi));
    out.push(match set.branch.tag {
        BranchTag::Minus => Residual {
            name: "Tr(pi_chi(chi - pi_rho)) = a3^2 (a3^2 - R33)/4",
            value: chain - 0.25 * a2 * (a2 - k.r33),
        },
        BranchTag::Plus => Residual {
            name: "Tr(pi_chi(chi - pi_rho)) = R03 (R03 - a3)/4",
            value: chain - 0.25 * k.r03 * (k.r03 - a),
        },
    });
    out
}

/// `Tg - Dg - Cg` on the plus branch; nonpositive, zero only at `a3 = 0`.
pub fn plus_branch_inequality(p: XParams) -> Result<f64> {
    let set = closest_set(p);
    if !set.branch.is_plus() {
        return Err(Error::Branch);
    }
    let rho = make_state(p);
    let g = geometric_from_states(rho.op(), &set);
    Ok(g.tg - g.dg - g.cg)
}

fn assemble(p: XParams, set: &ClosestSet) -> CorrelationReport {
    let rho = make_state(p);
    let lin = linear_closed_form_on(p, set.branch.tag);
    let g = geometric_from_states(rho.op(), set);
    CorrelationReport {
        params: p,
        alpha: p.alpha(),
        t2: lin.t2,
        d2: lin.d2,
        c2: lin.c2,
        l2: lin.l2,
        tg: g.tg,
        dg: g.dg,
        cg: g.cg,
        lg: g.lg,
        delta_g: g.delta_g,
        mutual_info: mutual_information(&rho),
        a3: set.a3,
        lambdas: lambdas(p),
        branch: set.branch,
    }
}

pub fn full_report(p: XParams) -> CorrelationReport {
    assemble(p, &closest_set(p))
}

/// Reports on both branches, for inspecting the ambiguity at `λ1 = λ3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchPair {
    pub minus: LinearCorrelations,
    pub plus: LinearCorrelations,
}

pub fn both_branches(p: XParams) -> BranchPair {
    BranchPair {
        minus: linear_closed_form_on(p, BranchTag::Minus),
        plus: linear_closed_form_on(p, BranchTag::Plus),
    }
}
