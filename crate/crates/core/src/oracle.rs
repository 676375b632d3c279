//! Brute-force closest-state searches for arbitrary two-qubit densities.
//!
//! Every search is a coarse grid scan followed by derivative-free cyclic
//! coordinate descent from the best grid cells and from seeded random starts.
//! Nothing here uses the closed forms of [`crate::closest`]; the searches work
//! directly from the definitions:
//!
//! * products: `min ‖ρ - ρ_a ⊗ ρ_b‖²` over two Bloch balls, each parameterized by
//!   `(r, θ, φ)`;
//! * classical states: `min ‖ρ - Σ_k (Π_k ⊗ 1) ρ (Π_k ⊗ 1)‖²` over projective
//!   measurements `{Π_±}` of qubit A along `n(θ, φ)`.
//!
//! Grid reductions break ties by lowest linear index, so results are
//! bit-identical for a fixed configuration regardless of thread count.

use std::f64::consts::PI;

use nalgebra::Matrix4;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::closest::closest_set;
use crate::correlations::full_report;
use crate::error::{Error, Result};
use crate::fano::{fano_distance_sq, to_fano, FanoTensor};
use crate::lentropy::asym_lre;
use crate::matcore::{hs_distance_sq, product_state, tensor, BlochVector, HermitianOp2, QubitPairDensity, C64};
use crate::sampling::seeded_rng;
use crate::xfamily::{make_state, XParams};

/// Smallest coordinate step taken during refinement.
pub const STEP_FLOOR: f64 = 1e-9;
/// Largest closed-form/oracle gap accepted by [`compare_reports`].
pub const ORACLE_AGREEMENT_TOL: f64 = 1e-6;
/// Best grid cells refined in addition to the random restarts.
const GRID_SEEDS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SearchConfig {
    /// Points per angle for the measurement grid over `(θ, φ)`, and per axis for
    /// the two-variable product ansatz.
    pub coarse_grid: usize,
    /// Points per coordinate for the six-dimensional product grid.
    pub product_grid: usize,
    pub refine_tol: f64,
    /// Maximum coordinate-descent sweeps per start.
    pub max_refine_iters: usize,
    pub seed: u64,
    /// Seeded random starts per search.
    pub restarts: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            coarse_grid: 24,
            product_grid: 12,
            refine_tol: 1e-10,
            max_refine_iters: 10_000,
            seed: 0x5eed,
            restarts: 32,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.coarse_grid < 8 {
            return Err(Error::InvalidConfig(format!("coarse_grid must be >= 8, got {}", self.coarse_grid)));
        }
        if self.product_grid < 8 {
            return Err(Error::InvalidConfig(format!("product_grid must be >= 8, got {}", self.product_grid)));
        }
        if self.refine_tol.is_nan() || self.refine_tol <= 0.0 {
            return Err(Error::InvalidConfig(format!("refine_tol must be > 0, got {}", self.refine_tol)));
        }
        if self.restarts < 1 {
            return Err(Error::InvalidConfig("restarts must be >= 1".into()));
        }
        if self.max_refine_iters < 1 {
            return Err(Error::InvalidConfig("max_refine_iters must be >= 1".into()));
        }
        Ok(())
    }
}

/// Outcome of one search.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleResult {
    pub min_distance_sq: f64,
    /// Bloch vectors `[a1, a2, a3, b1, b2, b3]` for product searches,
    /// `[θ, φ]` for measurement searches, `[α3, β3]` for the z-axis ansatz.
    pub argmin_params: Vec<f64>,
    pub evaluations: u64,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy)]
enum Coord {
    Clamped(f64, f64),
    Periodic(f64),
}

impl Coord {
    fn wrap(self, v: f64) -> f64 {
        match self {
            Coord::Clamped(lo, hi) => v.clamp(lo, hi),
            Coord::Periodic(period) => v.rem_euclid(period),
        }
    }
}

struct Refined {
    x: Vec<f64>,
    value: f64,
    evaluations: u64,
    converged: bool,
}

/// Cyclic coordinate descent with per-coordinate step halving on failure and
/// doubling (capped at the initial step) on success.
fn refine<F: Fn(&[f64]) -> f64>(f: &F, x0: &[f64], step0: &[f64], coords: &[Coord], cfg: &SearchConfig) -> Refined {
    let mut x = x0.to_vec();
    let mut fx = f(&x);
    let mut evaluations = 1u64;
    let mut h = step0.to_vec();
    let mut last_improvement = 0.0;
    let mut floor_reached = false;
    for _ in 0..cfg.max_refine_iters {
        if h.iter().all(|&s| s < STEP_FLOOR) {
            floor_reached = true;
            break;
        }
        for i in 0..x.len() {
            if h[i] < STEP_FLOOR {
                continue;
            }
            let mut moved = false;
            for dir in [1.0, -1.0] {
                let mut y = x.clone();
                y[i] = coords[i].wrap(x[i] + dir * h[i]);
                if y[i] == x[i] {
                    continue;
                }
                let fy = f(&y);
                evaluations += 1;
                if fy < fx {
                    last_improvement = fx - fy;
                    x = y;
                    fx = fy;
                    moved = true;
                    break;
                }
            }
            h[i] = if moved { (h[i] * 2.0).min(step0[i]) } else { h[i] * 0.5 };
        }
    }
    if !floor_reached && h.iter().all(|&s| s < STEP_FLOOR) {
        floor_reached = true;
    }
    Refined {
        x,
        value: fx,
        evaluations,
        converged: floor_reached && last_improvement < cfg.refine_tol,
    }
}

/// The `k` smallest `(value, index)` pairs, ordered.
#[derive(Clone)]
struct TopK {
    k: usize,
    items: Vec<(f64, usize)>,
}

impl TopK {
    fn new(k: usize) -> Self {
        Self { k, items: Vec::with_capacity(k + 1) }
    }

    fn push(&mut self, v: f64, idx: usize) {
        if self.items.len() == self.k {
            let worst = self.items[self.k - 1];
            if (v, idx) >= worst {
                return;
            }
        }
        let pos = self
            .items
            .partition_point(|&(w, j)| w.total_cmp(&v).then(j.cmp(&idx)).is_lt());
        self.items.insert(pos, (v, idx));
        self.items.truncate(self.k);
    }

    fn merge(mut self, other: TopK) -> TopK {
        for (v, i) in other.items {
            self.push(v, i);
        }
        self
    }
}

fn grid_top_k<F: Fn(usize) -> f64 + Sync>(total: usize, k: usize, f: F) -> Vec<(f64, usize)> {
    (0..total)
        .into_par_iter()
        .fold(
            || TopK::new(k),
            |mut t, i| {
                t.push(f(i), i);
                t
            },
        )
        .reduce(|| TopK::new(k), TopK::merge)
        .items
}

/// Refines each start and keeps the deterministic best.
fn refine_all<F: Fn(&[f64]) -> f64 + Sync>(
    f: &F,
    starts: &[Vec<f64>],
    step0: &[f64],
    coords: &[Coord],
    cfg: &SearchConfig,
) -> (Refined, u64) {
    let runs: Vec<Refined> = starts.par_iter().map(|s| refine(f, s, step0, coords, cfg)).collect();
    let total: u64 = runs.iter().map(|r| r.evaluations).sum();
    let best = runs
        .into_iter()
        .reduce(|a, b| if b.value < a.value { b } else { a })
        .expect("at least one start");
    (best, total)
}

fn spherical(r: f64, theta: f64, phi: f64) -> [f64; 3] {
    [r * theta.sin() * phi.cos(), r * theta.sin() * phi.sin(), r * theta.cos()]
}

/// `(1/4)‖R - R(a ⊗ b)‖²` without materializing the product tensor.
fn product_distance(target: &FanoTensor, a: &[f64; 3], b: &[f64; 3]) -> f64 {
    let r = &target.0;
    let mut acc = (r[0][0] - 1.0).powi(2);
    for i in 0..3 {
        acc += (r[i + 1][0] - a[i]).powi(2) + (r[0][i + 1] - b[i]).powi(2);
        for j in 0..3 {
            acc += (r[i + 1][j + 1] - a[i] * b[j]).powi(2);
        }
    }
    0.25 * acc
}

fn product_from_spherical(x: &[f64]) -> ([f64; 3], [f64; 3]) {
    (spherical(x[0], x[1], x[2]), spherical(x[3], x[4], x[5]))
}

fn random_ball_point<R: Rng>(rng: &mut R) -> [f64; 3] {
    [rng.random::<f64>(), rng.random::<f64>() * PI, rng.random::<f64>() * 2.0 * PI]
}

/// Minimum of `‖ρ - ρ_a ⊗ ρ_b‖²` over all product states.
pub fn oracle_closest_product(rho: &QubitPairDensity, cfg: &SearchConfig) -> Result<OracleResult> {
    cfg.validate()?;
    let target = to_fano(rho.op())?;
    Ok(product_search(&target, cfg))
}

fn product_search(target: &FanoTensor, cfg: &SearchConfig) -> OracleResult {
    let n = cfg.product_grid;
    let radial = |k: usize| k as f64 / (n - 1) as f64;
    let polar = |k: usize| PI * k as f64 / (n - 1) as f64;
    let azimuth = |k: usize| 2.0 * PI * k as f64 / n as f64;
    let ball: Vec<([f64; 3], [f64; 3])> = (0..n * n * n)
        .map(|idx| {
            let (ir, it, ip) = (idx / (n * n), (idx / n) % n, idx % n);
            let s = [radial(ir), polar(it), azimuth(ip)];
            (s, spherical(s[0], s[1], s[2]))
        })
        .collect();
    let m = ball.len();
    let top = grid_top_k(m * m, GRID_SEEDS, |idx| product_distance(target, &ball[idx / m].1, &ball[idx % m].1));

    let mut starts: Vec<Vec<f64>> = top
        .iter()
        .map(|&(_, idx)| {
            let (a, b) = (ball[idx / m].0, ball[idx % m].0);
            vec![a[0], a[1], a[2], b[0], b[1], b[2]]
        })
        .collect();
    let mut rng = seeded_rng(cfg.seed);
    for _ in 0..cfg.restarts {
        let (a, b) = (random_ball_point(&mut rng), random_ball_point(&mut rng));
        starts.push(vec![a[0], a[1], a[2], b[0], b[1], b[2]]);
    }
    let coords = [
        Coord::Clamped(0.0, 1.0),
        Coord::Clamped(0.0, PI),
        Coord::Periodic(2.0 * PI),
        Coord::Clamped(0.0, 1.0),
        Coord::Clamped(0.0, PI),
        Coord::Periodic(2.0 * PI),
    ];
    let step = {
        let (dr, dt, dp) = (radial(1), polar(1), azimuth(1));
        [dr, dt, dp, dr, dt, dp]
    };
    let f = |x: &[f64]| {
        let (a, b) = product_from_spherical(x);
        product_distance(target, &a, &b)
    };
    let (best, refine_evals) = refine_all(&f, &starts, &step, &coords, cfg);
    let (a, b) = product_from_spherical(&best.x);
    OracleResult {
        min_distance_sq: best.value,
        argmin_params: vec![a[0], a[1], a[2], b[0], b[1], b[2]],
        evaluations: (m * m) as u64 + refine_evals,
        converged: best.converged,
    }
}

/// Product state for a product-search argmin `[a1, a2, a3, b1, b2, b3]`.
pub fn product_from_params(params: &[f64]) -> Result<QubitPairDensity> {
    let a = BlochVector::new(params[0], params[1], params[2])?;
    let b = BlochVector::new(params[3], params[4], params[5])?;
    Ok(product_state(&a, &b))
}

/// Unit vector `(sin θ cos φ, sin θ sin φ, cos θ)`.
pub fn measurement_axis(theta: f64, phi: f64) -> [f64; 3] {
    spherical(1.0, theta, phi)
}

fn measurement_kraus(theta: f64, phi: f64) -> [Matrix4<C64>; 2] {
    let n = measurement_axis(theta, phi);
    let mut ns = HermitianOp2::zero();
    for (k, v) in n.iter().enumerate() {
        ns = ns + HermitianOp2::pauli(k + 1) * *v;
    }
    let id = HermitianOp2::identity();
    let plus = (id + ns) * 0.5;
    let minus = (id - ns) * 0.5;
    [*tensor(&plus, &id).matrix(), *tensor(&minus, &id).matrix()]
}

/// `Σ_k (Π_k ⊗ 1) ρ (Π_k ⊗ 1)` for the projective measurement of qubit A along
/// `n(θ, φ)`.
pub fn dephase_first(rho: &QubitPairDensity, theta: f64, phi: f64) -> QubitPairDensity {
    let [kp, km] = measurement_kraus(theta, phi);
    let op = rho.op().sandwich(&kp) + rho.op().sandwich(&km);
    // Unital, trace-preserving channel: output stays a density.
    crate::matcore::validate_density(op).expect("dephasing preserves densities")
}

/// Maps `(θ, φ)` to the representative with `φ ∈ [0, π)`, using
/// `(θ, φ) ~ (π - θ, φ + π)`.
pub fn canonical_angles(theta: f64, phi: f64) -> (f64, f64) {
    let phi = phi.rem_euclid(2.0 * PI);
    if phi >= PI {
        (PI - theta, phi - PI)
    } else {
        (theta, phi)
    }
}

/// Minimum of `‖ρ - χ‖²` over classical-quantum states obtained by measuring
/// qubit A.
pub fn oracle_closest_classical(rho: &QubitPairDensity, cfg: &SearchConfig) -> Result<OracleResult> {
    cfg.validate()?;
    let n = cfg.coarse_grid;
    let f = |x: &[f64]| hs_distance_sq(rho.op(), dephase_first(rho, x[0], x[1]).op());
    // φ ∈ [0, π) suffices: the opposite axis gives the same basis.
    let polar = |k: usize| PI * k as f64 / (n - 1) as f64;
    let azimuth = |k: usize| PI * k as f64 / n as f64;
    let top = grid_top_k(n * n, GRID_SEEDS, |idx| f(&[polar(idx / n), azimuth(idx % n)]));
    let mut starts: Vec<Vec<f64>> = top.iter().map(|&(_, idx)| vec![polar(idx / n), azimuth(idx % n)]).collect();
    let mut rng = seeded_rng(cfg.seed ^ 0x9e37_79b9_7f4a_7c15);
    for _ in 0..cfg.restarts {
        starts.push(vec![rng.random::<f64>() * PI, rng.random::<f64>() * 2.0 * PI]);
    }
    let coords = [Coord::Clamped(0.0, PI), Coord::Periodic(2.0 * PI)];
    let step = [polar(1), azimuth(1)];
    let (best, refine_evals) = refine_all(&f, &starts, &step, &coords, cfg);
    let (theta, phi) = canonical_angles(best.x[0], best.x[1]);
    Ok(OracleResult {
        min_distance_sq: best.value,
        argmin_params: vec![theta, phi],
        evaluations: (n * n) as u64 + refine_evals,
        converged: best.converged,
    })
}

/// Minimum over the z-axis product ansatz `(1/4)[1 + α3 σ3⊗1 + β3 1⊗σ3 + α3β3 σ3⊗σ3]`.
pub fn oracle_parity_product(chi: &QubitPairDensity, cfg: &SearchConfig) -> Result<OracleResult> {
    cfg.validate()?;
    let target = to_fano(chi.op())?;
    let n = cfg.coarse_grid;
    let axis = |k: usize| -1.0 + 2.0 * k as f64 / (n - 1) as f64;
    let f = |x: &[f64]| product_distance(&target, &[0.0, 0.0, x[0]], &[0.0, 0.0, x[1]]);
    let top = grid_top_k(n * n, GRID_SEEDS, |idx| f(&[axis(idx / n), axis(idx % n)]));
    let mut starts: Vec<Vec<f64>> = top.iter().map(|&(_, idx)| vec![axis(idx / n), axis(idx % n)]).collect();
    let mut rng = seeded_rng(cfg.seed ^ 0x51ab_1e5e);
    for _ in 0..cfg.restarts {
        starts.push(vec![rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0)]);
    }
    let coords = [Coord::Clamped(-1.0, 1.0), Coord::Clamped(-1.0, 1.0)];
    let step = [2.0 / (n - 1) as f64; 2];
    let (best, refine_evals) = refine_all(&f, &starts, &step, &coords, cfg);
    Ok(OracleResult {
        min_distance_sq: best.value,
        argmin_params: best.x,
        evaluations: (n * n) as u64 + refine_evals,
        converged: best.converged,
    })
}

/// Minimum over symmetric z-axis products `a = b = (0, 0, t)`.
pub fn oracle_symmetric_product(rho: &QubitPairDensity, cfg: &SearchConfig) -> Result<OracleResult> {
    cfg.validate()?;
    let target = to_fano(rho.op())?;
    let n = 4 * cfg.coarse_grid;
    let axis = |k: usize| -1.0 + 2.0 * k as f64 / (n - 1) as f64;
    let f = |x: &[f64]| product_distance(&target, &[0.0, 0.0, x[0]], &[0.0, 0.0, x[0]]);
    let top = grid_top_k(n, GRID_SEEDS, |idx| f(&[axis(idx)]));
    let starts: Vec<Vec<f64>> = top.iter().map(|&(_, idx)| vec![axis(idx)]).collect();
    let (best, refine_evals) = refine_all(&f, &starts, &[2.0 / (n - 1) as f64], &[Coord::Clamped(-1.0, 1.0)], cfg);
    Ok(OracleResult {
        min_distance_sq: best.value,
        argmin_params: best.x,
        evaluations: n as u64 + refine_evals,
        converged: best.converged,
    })
}

/// Agreement required between the full and ansatz product searches on
/// parity-symmetric input.
const ANSATZ_AGREEMENT_TOL: f64 = 1e-9;

/// Closest product state to `chi` by the full six-parameter search. For
/// parity-symmetric input the z-axis ansatz is searched as well; disagreement
/// between the two clears `converged`.
pub fn oracle_closest_classical_product(chi: &QubitPairDensity, cfg: &SearchConfig) -> Result<OracleResult> {
    let mut full = oracle_closest_product(chi, cfg)?;
    if to_fano(chi.op())?.parity_defect() < 1e-12 {
        let ansatz = oracle_parity_product(chi, cfg)?;
        full.evaluations += ansatz.evaluations;
        let agree = (ansatz.min_distance_sq - full.min_distance_sq).abs() <= ANSATZ_AGREEMENT_TOL.max(cfg.refine_tol);
        full.converged &= ansatz.converged && agree;
    }
    Ok(full)
}

/// One quantity compared between the closed forms and the oracle chain.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Discrepancy {
    pub quantity: &'static str,
    pub closed_form: f64,
    pub oracle: f64,
    pub abs_diff: f64,
    pub flagged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiscrepancyTable {
    pub params: XParams,
    pub rows: Vec<Discrepancy>,
    pub converged: bool,
    pub evaluations: u64,
}

impl DiscrepancyTable {
    pub fn max_abs_diff(&self) -> f64 {
        self.rows.iter().map(|r| r.abs_diff).fold(0.0, f64::max)
    }

    pub fn any_flagged(&self) -> bool {
        self.rows.iter().any(|r| r.flagged)
    }
}

/// Rebuilds the closest-state chain purely by search and compares T2, D2, C2,
/// Tg, Dg and Cg with the closed-form report.
pub fn compare_reports(p: XParams, cfg: &SearchConfig) -> Result<DiscrepancyTable> {
    let rho = make_state(p);
    let report = full_report(p);

    let prod = oracle_closest_product(&rho, cfg)?;
    let pi_rho = product_from_params(&prod.argmin_params)?;
    let cls = oracle_closest_classical(&rho, cfg)?;
    let chi = dephase_first(&rho, cls.argmin_params[0], cls.argmin_params[1]);
    let cprod = oracle_closest_classical_product(&chi, cfg)?;
    let pi_chi = product_from_params(&cprod.argmin_params)?;

    let pairs = [
        ("T2", report.t2, asym_lre(rho.op(), pi_rho.op())),
        ("D2", report.d2, asym_lre(rho.op(), chi.op())),
        ("C2", report.c2, asym_lre(chi.op(), pi_chi.op())),
        ("Tg", report.tg, prod.min_distance_sq),
        ("Dg", report.dg, cls.min_distance_sq),
        ("Cg", report.cg, cprod.min_distance_sq),
    ];
    let rows = pairs
        .iter()
        .map(|&(quantity, closed_form, oracle)| {
            let abs_diff = (closed_form - oracle).abs();
            Discrepancy {
                quantity,
                closed_form,
                oracle,
                abs_diff,
                flagged: abs_diff > ORACLE_AGREEMENT_TOL,
            }
        })
        .collect();
    Ok(DiscrepancyTable {
        params: p,
        rows,
        converged: prod.converged && cls.converged && cprod.converged,
        evaluations: prod.evaluations + cls.evaluations + cprod.evaluations,
    })
}

/// Squared distances from the closed-form closest states and the matching
/// oracle minima, `(closed, oracle)` for `π_ρ`, `χ` and `π_χ`.
pub fn closed_form_vs_oracle_distances(p: XParams, cfg: &SearchConfig) -> Result<[(f64, f64); 3]> {
    let rho = make_state(p);
    let set = closest_set(p);
    let r = to_fano(rho.op())?;
    let d_pi = fano_distance_sq(&r, &to_fano(set.pi_rho.op())?);
    let d_chi = fano_distance_sq(&r, &to_fano(set.chi.op())?);
    let d_pichi = fano_distance_sq(&to_fano(set.chi.op())?, &to_fano(set.pi_chi.op())?);
    Ok([
        (d_pi, oracle_closest_product(&rho, cfg)?.min_distance_sq),
        (d_chi, oracle_closest_classical(&rho, cfg)?.min_distance_sq),
        (d_pichi, oracle_closest_classical_product(&set.chi, cfg)?.min_distance_sq),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closest::closest_classical_on;
    use crate::xfamily::BranchTag;

    fn p(c1: f64, c2: f64) -> XParams {
        XParams::new(c1, c2).unwrap()
    }

    fn fast() -> SearchConfig {
        SearchConfig { product_grid: 8, restarts: 4, ..SearchConfig::default() }
    }

    #[test]
    fn config_validation() {
        assert!(SearchConfig::default().validate().is_ok());
        let bad = SearchConfig { coarse_grid: 4, ..SearchConfig::default() };
        assert!(matches!(bad.validate(), Err(Error::InvalidConfig(_))));
        let bad = SearchConfig { refine_tol: 0.0, ..SearchConfig::default() };
        assert!(bad.validate().is_err());
        let bad = SearchConfig { restarts: 0, ..SearchConfig::default() };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn top_k_is_order_independent() {
        let vals = [3.0, 1.0, 2.0, 1.0, 0.5, 7.0];
        let mut fwd = TopK::new(3);
        vals.iter().enumerate().for_each(|(i, &v)| fwd.push(v, i));
        let mut rev = TopK::new(3);
        vals.iter().enumerate().rev().for_each(|(i, &v)| rev.push(v, i));
        assert_eq!(fwd.items, rev.items);
        assert_eq!(fwd.items, vec![(0.5, 4), (1.0, 1), (1.0, 3)]);
    }

    #[test]
    fn product_input_has_zero_distance() {
        let a = BlochVector::new(0.2, -0.3, 0.4).unwrap();
        let b = BlochVector::new(0.0, 0.5, -0.5).unwrap();
        let rho = product_state(&a, &b);
        let res = oracle_closest_product(&rho, &fast()).unwrap();
        assert!(res.min_distance_sq < 1e-12, "{res:?}");
        let found = &res.argmin_params;
        for (x, y) in found.iter().zip(a.components().iter().chain(b.components().iter())) {
            assert!((x - y).abs() < 1e-5);
        }
    }

    #[test]
    fn bell_state_product_minimum() {
        let res = oracle_closest_product(&make_state(p(0.5, 0.5)), &fast()).unwrap();
        assert!((res.min_distance_sq - 0.75).abs() < 1e-9);
        assert!(res.argmin_params.iter().all(|v| v.abs() < 1e-3));
    }

    #[test]
    fn classical_fixed_point() {
        let chi = closest_classical_on(p(0.7, 0.05), BranchTag::Minus);
        let res = oracle_closest_classical(&chi, &fast()).unwrap();
        assert!(res.min_distance_sq < 1e-14);
    }

    #[test]
    fn measurement_axes_for_both_branches() {
        let res = oracle_closest_classical(&make_state(p(0.3, 0.1)), &fast()).unwrap();
        assert!((res.min_distance_sq - 0.036077).abs() < 1e-5);
        let n = measurement_axis(res.argmin_params[0], res.argmin_params[1]);
        assert!((n[0].abs() - 1.0).abs() < 1e-6, "{n:?}");

        let res = oracle_closest_classical(&make_state(p(0.7, 0.05)), &fast()).unwrap();
        let n = measurement_axis(res.argmin_params[0], res.argmin_params[1]);
        assert!((n[2].abs() - 1.0).abs() < 1e-6, "{n:?}");
    }

    #[test]
    fn relabeled_basis_gives_same_dephasing() {
        let rho = crate::sampling::random_density(&mut seeded_rng(11));
        for &(t, f) in &[(0.3, 0.2), (1.2, 2.5), (2.9, 5.0)] {
            let a = dephase_first(&rho, t, f);
            let b = dephase_first(&rho, PI - t, f + PI);
            assert!(a.op().max_abs_diff(b.op()) < 1e-14);
        }
    }

    #[test]
    fn searches_are_deterministic() {
        let rho = crate::sampling::random_density(&mut seeded_rng(3));
        let a = oracle_closest_product(&rho, &fast()).unwrap();
        let b = oracle_closest_product(&rho, &fast()).unwrap();
        assert_eq!(a, b);
        let a = oracle_closest_classical(&rho, &fast()).unwrap();
        let b = oracle_closest_classical(&rho, &fast()).unwrap();
        assert_eq!(a, b);
    }
}
