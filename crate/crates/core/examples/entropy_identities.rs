//! The linear-entropy calculus on random states: the symmetric part of the
//! linear relative entropy is the squared Hilbert-Schmidt distance, and the
//! antisymmetric part is a difference of Jensen-Shannon divergences.

use lincorr::lentropy::{asym_lre, jsd2, lin_rel_entropy, linear_entropy, mutual_information, sym_lre};
use lincorr::sampling::{random_density, seeded_rng};
use lincorr::{make_state, XParams};

/// Largest residuals `(norm identity, JS identity)` over `n` random pairs.
pub fn run_example(n: usize) -> (f64, f64) {
    let mut rng = seeded_rng(2024);
    let (mut norm, mut js) = (0.0f64, 0.0f64);
    for _ in 0..n {
        let a = random_density(&mut rng).into_op();
        let b = random_density(&mut rng).into_op();
        let d = a - b;
        norm = norm.max((sym_lre(&a, &b) - d.hs_inner(&d)).abs());
        let s = a + b;
        js = js.max((jsd2(&s, &(b - a)) - jsd2(&s, &(a - b)) - asym_lre(&a, &b)).abs());
        assert!((2.0 * lin_rel_entropy(&a, &b) - sym_lre(&a, &b) - asym_lre(&a, &b)).abs() < 1e-12);
    }
    (norm, js)
}

fn main() {
    let (norm, js) = run_example(1000);
    println!("max |S+(a||b) - ||a-b||^2|   = {norm:e}");
    println!("max |JS difference - S-(a||b)| = {js:e}");
    let bell = make_state(XParams::new(0.5, 0.5).unwrap());
    println!("Bell state: linear entropy {}, mutual information {} bits", linear_entropy(bell.op()), mutual_information(&bell));
}
