//! Where the closest classical state switches from the sigma3-dephased to the
//! sigma1-dephased form, compared with the analytic boundaries.

use lincorr::xfamily::{alpha_boundaries, classify_branch, DEFAULT_TIE_TOL};
use lincorr::{BranchTag, XParams};

/// Branch-switch locations in c1 found by scanning the line `c1 + c2 = alpha`.
pub fn run_example(alpha: f64, steps: usize) -> Vec<f64> {
    let mut switches = Vec::new();
    let mut prev: Option<BranchTag> = None;
    for k in 0..steps {
        let c1 = alpha * k as f64 / (steps - 1) as f64;
        let tag = classify_branch(XParams::on_line(alpha, c1).unwrap(), DEFAULT_TIE_TOL).tag;
        if prev.is_some_and(|p| p != tag) {
            switches.push(c1);
        }
        prev = Some(tag);
    }
    switches
}

fn main() {
    for &alpha in &[0.2, 0.4, 0.7, 0.9, 1.0] {
        let found = run_example(alpha, 10_001);
        let exact = alpha_boundaries(alpha);
        println!("alpha {alpha}: scan {found:.4?}, analytic {exact:.4?}");
    }
}
