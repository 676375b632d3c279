//! Every correlation quantifier at one point of the family, with the closest
//! states that produce them.
//!
//! cargo run --example report_point -- 0.3 0.1

use std::fmt::Write as _;

use lincorr::{closest_set, full_report, to_fano, XParams};

pub fn run_example(c1: f64, c2: f64) -> lincorr::Result<String> {
    let p = XParams::new(c1, c2)?;
    let r = full_report(p);
    let set = closest_set(p);
    let mut out = String::new();
    writeln!(out, "rho({c1}, {c2}), alpha = {}", r.alpha).unwrap();
    writeln!(out, "branch {} (tie: {}), a3 = {:.6}", r.branch.tag.as_str(), r.branch.tie, r.a3).unwrap();
    writeln!(out, "linear     T2 {:.6}  D2 {:.6}  C2 {:.6}  L2 {:.6}", r.t2, r.d2, r.c2, r.l2).unwrap();
    writeln!(out, "geometric  Tg {:.6}  Dg {:.6}  Cg {:.6}  Lg {:.6}  dg {:.6}", r.tg, r.dg, r.cg, r.lg, r.delta_g).unwrap();
    writeln!(out, "mutual information {:.6} bits", r.mutual_info).unwrap();
    writeln!(out, "T2 - D2 - C2 + L2 = {:e}", r.linear().additivity_residual()).unwrap();
    for (name, s) in [("pi_rho", set.pi_rho), ("chi", set.chi), ("pi_chi", set.pi_chi)] {
        let f = to_fano(s.op())?;
        let nz: Vec<String> = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .filter(|&(i, j)| (i, j) != (0, 0) && f.get(i, j).abs() > 1e-12)
            .map(|(i, j)| format!("R{i}{j}={:.4}", f.get(i, j)))
            .collect();
        writeln!(out, "{name:<7} {}", nz.join(" ")).unwrap();
    }
    Ok(out)
}

fn main() {
    let args: Vec<f64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (c1, c2) = match args[..] {
        [c1, c2, ..] => (c1, c2),
        _ => (0.3, 0.1),
    };
    match run_example(c1, c2) {
        Ok(s) => print!("{s}"),
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    }
}
