//! The cubic for the closest product state, and how far each closed-form
//! closest state is from the state it approximates.

use lincorr::closest::{cubic_discriminant, cubic_residual, symmetric_product_distance_sq};
use lincorr::xfamily::coeffs;
use lincorr::{closest_set, fano_distance_sq, make_state, solve_a3, to_fano, XParams};

/// `(a3, cubic residual, distance gain over the neighbours a3 ± 1e-3)`.
pub fn run_example(c1: f64, c2: f64) -> (f64, f64, f64) {
    let p = XParams::new(c1, c2).unwrap();
    let k = coeffs(p);
    let a = solve_a3(k.r30, k.r33).unwrap();
    let here = symmetric_product_distance_sq(p, a);
    let gain = [a - 1e-3, a + 1e-3]
        .iter()
        .map(|&b| symmetric_product_distance_sq(p, b) - here)
        .fold(f64::INFINITY, f64::min);
    (a, cubic_residual(a, k.r30, k.r33), gain)
}

fn main() {
    for &(c1, c2) in &[(0.3, 0.1), (0.7, 0.05), (0.5, 0.5), (0.05, 0.6)] {
        let (a, res, gain) = run_example(c1, c2);
        let p = XParams::new(c1, c2).unwrap();
        let k = coeffs(p);
        let rho = to_fano(make_state(p).op()).unwrap();
        let set = closest_set(p);
        let d = |s: &lincorr::QubitPairDensity| fano_distance_sq(&rho, &to_fano(s.op()).unwrap());
        println!(
            "({c1}, {c2}) a3 = {a:.9} residual {res:.1e} disc {:.4} gain {gain:.2e} | {} |rho-pi| {:.6} |rho-chi| {:.6}",
            cubic_discriminant(k.r30, k.r33),
            set.branch.tag.as_str(),
            d(&set.pi_rho),
            d(&set.chi),
        );
    }
}
