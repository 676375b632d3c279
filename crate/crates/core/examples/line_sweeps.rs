//! CSV sweeps along lines of constant alpha, the data behind plots of each
//! correlation quantifier against c1.
//!
//! cargo run --example line_sweeps -- 0.9 out.csv

use lincorr::cli::{sweep_csv, SweepSpec};

/// CSV text plus the c1 of the row where T2 peaks.
pub fn run_example(alpha: f64, steps: usize) -> (String, f64) {
    let spec = SweepSpec { alpha, steps, include_geometric: true, output_path: None };
    let csv = sweep_csv(&spec).unwrap();
    let peak = csv
        .lines()
        .skip(1)
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (f[0].parse::<f64>().unwrap(), f[6].parse::<f64>().unwrap())
        })
        .fold((0.0, f64::NEG_INFINITY), |best, x| if x.1 > best.1 { x } else { best });
    (csv, peak.0)
}

fn main() {
    let mut args = std::env::args().skip(1);
    let alpha = args.next().and_then(|a| a.parse().ok()).unwrap_or(0.4);
    let (csv, peak) = run_example(alpha, 1001);
    match args.next() {
        Some(path) => {
            std::fs::write(&path, &csv).expect("writable output path");
            println!("wrote {} rows to {path}; T2 peaks at c1 = {peak}", csv.lines().count() - 1);
        }
        None => {
            for line in csv.lines().step_by(100) {
                println!("{line}");
            }
            println!("T2 peaks at c1 = {peak}");
        }
    }
}
