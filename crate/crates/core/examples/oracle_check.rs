//! Brute-force searches over product and classical states, set against the
//! closed forms.

use lincorr::oracle::{compare_reports, DiscrepancyTable};
use lincorr::{SearchConfig, XParams};

pub fn run_example(points: &[(f64, f64)]) -> Vec<DiscrepancyTable> {
    let cfg = SearchConfig::default();
    points
        .iter()
        .map(|&(c1, c2)| compare_reports(XParams::new(c1, c2).unwrap(), &cfg).unwrap())
        .collect()
}

fn main() {
    for t in run_example(&[(0.3, 0.1), (0.7, 0.05), (0.5, 0.5), (0.15, 0.45)]) {
        println!("({}, {}) converged {} evals {}", t.params.c1(), t.params.c2(), t.converged, t.evaluations);
        for r in &t.rows {
            println!("  {:<3} closed {:>12.9} oracle {:>12.9} diff {:.1e}", r.quantity, r.closed_form, r.oracle, r.abs_diff);
        }
    }
}
