//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

use std::time::{Duration, Instant};

use lincorr::cli::{cmd_verify, sweep_csv, SweepSpec, GAP_POINTS};
use lincorr::closest::{closest_a3, cubic_discriminant, cubic_residual};
use lincorr::correlations::{closed_form_gaps, full_report, geometric_report, linear_report};
use lincorr::lentropy::{asym_lre, jsd2, sym_lre};
use lincorr::matcore::hs_inner;
use lincorr::oracle::closed_form_vs_oracle_distances;
use lincorr::sampling::{random_density, random_hermitian, random_params, seeded_rng, triangle_grid};
use lincorr::xfamily::{alpha_boundaries, coeffs, lambdas};
use lincorr::{closest_set, fano_distance_sq, make_state, to_fano, BranchTag, SearchConfig, XParams};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn grid_500() -> Vec<XParams> {
    triangle_grid(500)
}

fn additivity() -> Outcome {
    let start = Instant::now();
    let pts = grid_500();
    let worst = pts.iter().map(|&p| linear_report(p).additivity_residual().abs()).fold(0.0, f64::max);
    let took = start.elapsed();
    check(
        worst <= 1e-12 && took < Duration::from_secs(10),
        format!("{} points, max |T2-D2-C2+L2| = {worst:.2e}, {:.2} s", pts.len(), took.as_secs_f64()),
    )
}

fn norm_identity() -> Outcome {
    let mut rng = seeded_rng(1);
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let (a, b) = (random_hermitian(&mut rng), random_hermitian(&mut rng));
        let d = a - b;
        let norm = d.hs_inner(&d);
        worst = worst.max((sym_lre(&a, &b) - norm).abs());
        let fano = fano_distance_sq(&to_fano(&a).unwrap(), &to_fano(&b).unwrap());
        worst = worst.max((fano - norm).abs());
    }
    check(worst <= 1e-12, format!("10^4 Hermitian pairs, max residual {worst:.2e}"))
}

fn jensen_shannon() -> Outcome {
    let mut rng = seeded_rng(2);
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let (r1, r2) = (random_density(&mut rng).into_op(), random_density(&mut rng).into_op());
        let s = r1 + r2;
        let lhs = jsd2(&s, &(r2 - r1)) - jsd2(&s, &(r1 - r2));
        worst = worst.max((lhs - asym_lre(&r1, &r2)).abs());
    }
    check(worst <= 1e-12, format!("10^4 density pairs, max residual {worst:.2e}"))
}

/// `d(a+h) - d(a)` for `d(a) = (1/4)[2(R30-a)² + (R33-a²)²]`, written without
/// subtracting nearly equal distances.
fn distance_increment(r30: f64, r33: f64, a: f64, h: f64) -> f64 {
    let (x, y) = (r30 - a, r33 - a * a);
    let delta = h * (2.0 * a + h);
    0.25 * (2.0 * h * (h - 2.0 * x) + delta * (delta - 2.0 * y))
}

fn cubic() -> Outcome {
    let pts = triangle_grid(1000);
    let (mut res, mut min_disc, mut min_curv, mut min_inc) = (0.0f64, f64::INFINITY, f64::INFINITY, f64::INFINITY);
    for &p in &pts {
        let k = coeffs(p);
        let a = closest_a3(p);
        res = res.max(cubic_residual(a, k.r30, k.r33).abs());
        min_disc = min_disc.min(cubic_discriminant(k.r30, k.r33));
        min_curv = min_curv.min(1.0 - k.r33 + 3.0 * a * a);
        for h in [1e-3, -1e-3, 1e-6, -1e-6] {
            min_inc = min_inc.min(distance_increment(k.r30, k.r33, a, h));
        }
    }
    check(
        res <= 1e-12 && min_disc >= 0.0 && min_curv >= 0.0 && min_inc >= -1e-15,
        format!(
            "{} points, max residual {res:.2e}, min discriminant {min_disc:.2e}, min curvature {min_curv:.2e}, min increment {min_inc:.2e}",
            pts.len()
        ),
    )
}

fn oracle_points() -> Vec<XParams> {
    let mut rng = seeded_rng(5);
    let mut pts: Vec<XParams> = (0..150).map(|_| random_params(&mut rng)).collect();
    // tie line c1 = c2, including the pure Bell corner
    pts.extend((0..=24).map(|k| {
        let c = 0.5 * k as f64 / 24.0;
        XParams::new(c, c).unwrap()
    }));
    // Minus-branch points beyond the plus interval at large alpha
    pts.extend((0..25).map(|k| {
        let alpha = 0.6 + 0.4 * k as f64 / 24.0;
        let (lo, _) = alpha_boundaries(alpha).unwrap();
        XParams::on_line(alpha, 0.5 * lo).unwrap()
    }));
    pts
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let cfg = SearchConfig::default();
    let pts = oracle_points();
    let (mut minus, mut plus) = (0, 0);
    let mut worst = 0.0f64;
    let mut below = 0.0f64;
    for &p in &pts {
        match closest_set(p).branch.tag {
            BranchTag::Minus => minus += 1,
            BranchTag::Plus => plus += 1,
        }
        for (closed, oracle) in closed_form_vs_oracle_distances(p, &cfg).map_err(|e| e.to_string())? {
            worst = worst.max((closed - oracle).abs());
            below = below.max(closed - oracle - cfg.refine_tol);
        }
    }
    let took = start.elapsed();
    check(
        worst <= 1e-6 && below <= 0.0 && minus > 0 && plus > 0 && took < Duration::from_secs(300),
        format!(
            "{} points ({minus} minus, {plus} plus), max |closed - oracle| {worst:.2e}, {:.1} s",
            pts.len(),
            took.as_secs_f64()
        ),
    )
}

fn discord_closed_form() -> Outcome {
    let (mut worst, mut proj) = (0.0f64, 0.0f64);
    for p in grid_500() {
        let l = lambdas(p);
        let closed = 0.25 * (l.l1 + l.l2).min(l.l1 + l.l3).min(l.l2 + l.l3);
        let d2 = linear_report(p).d2;
        let dg = geometric_report(p).dg;
        worst = worst.max((d2 - closed).abs()).max((dg - closed).abs());
        let set = closest_set(p);
        let rho = make_state(p);
        proj = proj.max((hs_inner(rho.op(), set.chi.op()) - hs_inner(set.chi.op(), set.chi.op())).abs());
    }
    check(worst <= 1e-12 && proj <= 1e-10, format!("max |D - min/4| {worst:.2e}, max |Tr rho chi - Tr chi^2| {proj:.2e}"))
}

fn anchors() -> Outcome {
    let r = full_report(XParams::new(0.5, 0.5).unwrap());
    let bell = [(r.t2, 0.75), (r.d2, 0.5), (r.c2, 0.25), (r.l2, 0.0), (r.mutual_info, 2.0)];
    let bell_err = bell.iter().map(|(v, e)| (v - e).abs()).fold(0.0, f64::max);
    let z = full_report(XParams::new(1.0, 0.0).unwrap());
    let zero_err = [z.t2, z.d2, z.c2, z.l2, z.tg, z.dg, z.cg, z.lg, z.delta_g, z.mutual_info]
        .iter()
        .fold(0.0f64, |m, v| m.max(v.abs()));
    check(
        bell_err <= 1e-12 && zero_err <= 1e-12,
        format!("(1/2,1/2) max error {bell_err:.2e}; (1,0) max |value| {zero_err:.2e}"),
    )
}

struct Row {
    c1: f64,
    branch: String,
    t2: f64,
    c2: f64,
    l2: f64,
}

fn sweep_rows(alpha: f64, steps: usize) -> Vec<Row> {
    let csv = sweep_csv(&SweepSpec { alpha, steps, include_geometric: true, output_path: None }).unwrap();
    csv.lines()
        .skip(1)
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            Row {
                c1: f[0].parse().unwrap(),
                branch: f[3].to_string(),
                t2: f[6].parse().unwrap(),
                c2: f[8].parse().unwrap(),
                l2: f[9].parse().unwrap(),
            }
        })
        .collect()
}

fn argmax_argmin(rows: &[Row], key: impl Fn(&Row) -> f64) -> (usize, usize) {
    let mut imax = 0;
    let mut imin = 0;
    for (i, r) in rows.iter().enumerate() {
        if key(r) > key(&rows[imax]) {
            imax = i;
        }
        if key(r) < key(&rows[imin]) {
            imin = i;
        }
    }
    (imax, imin)
}

fn sweep_shapes() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;

    let alpha = 0.4;
    let rows = sweep_rows(alpha, 1000);
    let step = alpha / 999.0;
    let last = rows.len() - 1;
    for (name, key) in [("T2", (|r: &Row| r.t2) as fn(&Row) -> f64), ("C2", |r: &Row| r.c2)] {
        let (imax, imin) = argmax_argmin(&rows, key);
        let peak_ok = (rows[imax].c1 - alpha / 2.0).abs() <= step;
        let ends = key(&rows[0]).min(key(&rows[last]));
        let min_ok = imin == 0 || imin == last || key(&rows[imin]) >= ends;
        ok &= peak_ok && min_ok;
        notes.push(format!("{name} max at c1={:.4}", rows[imax].c1));
    }

    let alpha = 0.9;
    let rows = sweep_rows(alpha, 1000);
    let step = alpha / 999.0;
    let (lo, hi) = alpha_boundaries(alpha).unwrap();
    let switches: Vec<usize> = (1..rows.len()).filter(|&i| rows[i].branch != rows[i - 1].branch).collect();
    let near = |x: f64| switches.iter().any(|&i| (rows[i].c1 - x).abs() <= step || (rows[i - 1].c1 - x).abs() <= step);
    ok &= switches.len() == 2 && near(lo) && near(hi);
    let smooth_jump = (1..rows.len())
        .filter(|i| !switches.contains(i))
        .map(|i| (rows[i].c2 - rows[i - 1].c2).abs())
        .fold(0.0, f64::max);
    let switch_jump = switches
        .iter()
        .map(|&i| (rows[i].c2 - rows[i - 1].c2).abs())
        .fold(f64::INFINITY, f64::min);
    ok &= switch_jump > 10.0 * smooth_jump;
    notes.push(format!(
        "alpha 0.9 switches at c1={:?}, C2 jump {switch_jump:.3e} vs smooth step {smooth_jump:.3e}",
        switches.iter().map(|&i| format!("{:.4}", rows[i].c1)).collect::<Vec<_>>()
    ));

    let bell_l2 = (0..=100)
        .map(|k| {
            let c = 0.5 * k as f64 / 100.0;
            linear_report(XParams::new(c, c).unwrap()).l2.abs()
        })
        .fold(0.0, f64::max);
    let sweep_l2 = sweep_rows(0.6, 3)[1].l2.abs();
    ok &= bell_l2 <= 1e-12 && sweep_l2 <= 1e-12;
    notes.push(format!("max |L2| on c1=c2 {bell_l2:.2e}"));
    check(ok, notes.join("; "))
}

fn geometric_additivity() -> Outcome {
    let (mut add, mut minus_dev, mut plus_max) = (0.0f64, 0.0f64, f64::NEG_INFINITY);
    let (mut strict_fail, mut equality_dev) = (0usize, 0.0f64);
    for p in grid_500() {
        let g = geometric_report(p);
        add = add.max(g.additivity_residual().abs());
        let gap = g.tg - g.dg - g.cg;
        let set = closest_set(p);
        match set.branch.tag {
            BranchTag::Minus => minus_dev = minus_dev.max(g.delta_g.abs()).max(gap.abs()),
            BranchTag::Plus => {
                plus_max = plus_max.max(gap);
                if set.a3 == 0.0 {
                    equality_dev = equality_dev.max(gap.abs());
                } else if set.a3.abs() > 1e-4 && gap >= 0.0 {
                    strict_fail += 1;
                }
            }
        }
    }
    check(
        add <= 1e-12 && minus_dev <= 1e-12 && plus_max <= 1e-12 && strict_fail == 0 && equality_dev <= 1e-12,
        format!(
            "max additivity {add:.2e}, minus max(|dg|,|Tg-Dg-Cg|) {minus_dev:.2e}, plus max Tg-Dg-Cg {plus_max:.2e}, equality at a3=0 {equality_dev:.2e}"
        ),
    )
}

fn discrepancy_detection() -> Outcome {
    let out = cmd_verify(50, 42, 1e-9);
    let reported = out.stdout.lines().filter(|l| l.contains("lg gap") && l.contains("detected yes")).count();
    let mut notes = Vec::new();
    let mut ok = out.code == 0 && reported == GAP_POINTS.len();
    for &(c1, c2) in &GAP_POINTS {
        let p = XParams::new(c1, c2).unwrap();
        let g = closed_form_gaps(p);
        ok &= closest_set(p).branch.tag == BranchTag::Plus && g.lg_gap().abs() > 1e-9 && g.delta_g_gap().abs() > 1e-9;
        notes.push(format!("({c1},{c2}) lg gap {:.3e} delta_g gap {:.3e}", g.lg_gap(), g.delta_g_gap()));
    }
    check(ok, notes.join("; "))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("linear additivity on the triangle grid", additivity),
        ("symmetric linear relative entropy is the HS norm", norm_identity),
        ("Jensen-Shannon identity", jensen_shannon),
        ("cubic root, local minimum, discriminant", cubic),
        ("closed-form closest states match brute force", oracle_equivalence),
        ("discord equals the eigenvalue closed form", discord_closed_form),
        ("anchor points", anchors),
        ("sweep shapes", sweep_shapes),
        ("geometric additivity and the plus-branch inequality", geometric_additivity),
        ("closed-form gap detection", discrepancy_detection),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (status, detail) = match f() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {:>2} {status}: {name} [{:.1}s] {detail}", i + 1, start.elapsed().as_secs_f64());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
