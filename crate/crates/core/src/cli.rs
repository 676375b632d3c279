//! Command implementations behind the `lincorr` binary.
//!
//! Each command renders into an [`Outcome`] instead of printing, so the same
//! code paths are exercised by the binary, the examples and the tests.

use std::fmt::Write as _;
use std::path::PathBuf;

use rand::Rng;
use rayon::prelude::*;

use crate::closest::{closest_a3, closest_set, cubic_discriminant, cubic_residual};
use crate::correlations::{
    closed_form_gaps, conversion_check, full_report, geometric_report, linear_from_states, linear_report,
    plus_branch_inequality, ClosedFormGaps, CorrelationReport,
};
use crate::error::{Error, Result};
use crate::lentropy::{asym_lre, jsd2, sym_lre};
use crate::fano::{fano_distance_sq, to_fano};
use crate::matcore::hs_inner;
use crate::oracle::{compare_reports, SearchConfig};
use crate::sampling::{random_density, random_hermitian, random_params, seeded_rng};
use crate::xfamily::{coeffs, lambdas, make_state, XParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_NONCONVERGENT: i32 = 4;

/// Rendered output and process exit code of one command.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Self {
        Self { code, stdout: String::new(), stderr: stderr.into() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ReportFormat {
    Text,
    #[value(name = "json-lines", alias = "jsonl")]
    JsonLines,
}

/// Shortest round-trip decimal, with `-0` printed as `0`.
pub fn fmt_num(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:?}")
}

fn params_or_usage(c1: f64, c2: f64) -> std::result::Result<XParams, Outcome> {
    XParams::new(c1, c2).map_err(|e| Outcome::fail(EXIT_USAGE, format!("error: {e}\n")))
}

pub fn cmd_report(c1: f64, c2: f64, format: ReportFormat) -> Outcome {
    let p = match params_or_usage(c1, c2) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let report = full_report(p);
    let gaps = closed_form_gaps(p);
    match format {
        ReportFormat::Text => Outcome::ok(render_report_text(&report, &gaps)),
        ReportFormat::JsonLines => {
            let line = serde_json::json!({ "report": report, "closed_form_gaps": gaps });
            Outcome::ok(format!("{line}\n"))
        }
    }
}

fn render_report_text(r: &CorrelationReport, g: &ClosedFormGaps) -> String {
    let mut s = String::new();
    let branch = if r.branch.tie {
        format!("{} (tie)", r.branch.tag.as_str())
    } else {
        r.branch.tag.as_str().to_string()
    };
    let rows: [(&str, String); 17] = [
        ("c1", fmt_num(r.params.c1())),
        ("c2", fmt_num(r.params.c2())),
        ("alpha", fmt_num(r.alpha)),
        ("branch", branch),
        ("a3", fmt_num(r.a3)),
        ("lambda", format!("{} {} {}", fmt_num(r.lambdas.l1), fmt_num(r.lambdas.l2), fmt_num(r.lambdas.l3))),
        ("t2", fmt_num(r.t2)),
        ("d2", fmt_num(r.d2)),
        ("c2_corr", fmt_num(r.c2)),
        ("l2", fmt_num(r.l2)),
        ("tg", fmt_num(r.tg)),
        ("dg", fmt_num(r.dg)),
        ("cg", fmt_num(r.cg)),
        ("lg", fmt_num(r.lg)),
        ("delta_g", fmt_num(r.delta_g)),
        ("mutual_info", fmt_num(r.mutual_info)),
        ("additivity", fmt_num(r.linear().additivity_residual())),
    ];
    for (k, v) in rows {
        let _ = writeln!(s, "{k:<12} {v}");
    }
    let _ = writeln!(s, "plus-branch closed forms vs definitions:");
    let _ = writeln!(
        s,
        "  lg       closed {} definitional {} gap {}",
        fmt_num(g.lg_closed_form),
        fmt_num(g.lg_definitional),
        fmt_num(g.lg_gap())
    );
    let _ = writeln!(
        s,
        "  delta_g  closed {} definitional {} gap {}",
        fmt_num(g.delta_g_closed_form),
        fmt_num(g.delta_g_definitional),
        fmt_num(g.delta_g_gap())
    );
    s
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub alpha: f64,
    pub steps: usize,
    pub include_geometric: bool,
    /// `None` writes to standard output.
    pub output_path: Option<PathBuf>,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.alpha) {
            return Err(Error::InvalidParams(format!("alpha must lie in [0, 1], got {}", self.alpha)));
        }
        if self.steps < 2 {
            return Err(Error::InvalidParams(format!("steps must be >= 2, got {}", self.steps)));
        }
        Ok(())
    }

    /// Grid points `c1 = k·alpha/(steps-1)`, `c2 = alpha - c1`.
    pub fn points(&self) -> Result<Vec<XParams>> {
        self.validate()?;
        let last = self.steps - 1;
        (0..self.steps)
            .map(|k| {
                let c1 = if k == last { self.alpha } else { k as f64 * self.alpha / last as f64 };
                XParams::on_line(self.alpha, c1)
            })
            .collect()
    }
}

pub const SWEEP_HEADER: &str = "c1,c2,alpha,branch,tie,a3,T2,D2,C2,L2,Tg,Dg,Cg,Lg,Delta_g,mutual_info";

fn sweep_row(r: &CorrelationReport, include_geometric: bool) -> String {
    let mut cols = vec![
        fmt_num(r.params.c1()),
        fmt_num(r.params.c2()),
        fmt_num(r.alpha),
        r.branch.tag.as_str().to_string(),
        (r.branch.tie as u8).to_string(),
        fmt_num(r.a3),
        fmt_num(r.t2),
        fmt_num(r.d2),
        fmt_num(r.c2),
        fmt_num(r.l2),
    ];
    let geo = [r.tg, r.dg, r.cg, r.lg, r.delta_g];
    cols.extend(geo.iter().map(|&v| if include_geometric { fmt_num(v) } else { String::new() }));
    cols.push(fmt_num(r.mutual_info));
    cols.join(",")
}

/// The sweep as CSV text; rows are computed in parallel and emitted in grid order.
pub fn sweep_csv(spec: &SweepSpec) -> Result<String> {
    let rows: Vec<String> = spec
        .points()?
        .par_iter()
        .map(|&p| sweep_row(&full_report(p), spec.include_geometric))
        .collect();
    let mut out = String::with_capacity(rows.len() * 200);
    out.push_str(SWEEP_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row);
        out.push('\n');
    }
    Ok(out)
}

pub fn cmd_sweep(spec: &SweepSpec) -> Outcome {
    let csv = match sweep_csv(spec) {
        Ok(csv) => csv,
        Err(e) => return Outcome::fail(EXIT_USAGE, format!("error: {e}\n")),
    };
    match &spec.output_path {
        None => Outcome::ok(csv),
        Some(path) => match std::fs::write(path, csv) {
            Ok(()) => Outcome::ok(String::new()),
            Err(e) => Outcome::fail(EXIT_IO, format!("error: cannot write {}: {e}\n", path.display())),
        },
    }
}

/// Largest residual of one identity over a verification run.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckSummary {
    pub name: &'static str,
    pub count: usize,
    pub max_residual: f64,
    /// Where the largest residual occurred.
    pub worst_at: String,
}

impl CheckSummary {
    fn new(name: &'static str) -> Self {
        Self { name, count: 0, max_residual: 0.0, worst_at: String::new() }
    }

    fn record(&mut self, residual: f64, at: impl FnOnce() -> String) {
        self.count += 1;
        let r = if residual.is_nan() { f64::INFINITY } else { residual.abs() };
        if r > self.max_residual || self.count == 1 {
            self.max_residual = r;
            self.worst_at = at();
        }
    }
}

/// Plus-branch points at which the `L_g`/`Δ_g` closed-form gaps are reported.
pub const GAP_POINTS: [(f64, f64); 3] = [(0.3, 0.1), (0.2, 0.05), (0.4, 0.3)];

fn at_params(p: XParams) -> String {
    format!("c1={} c2={}", fmt_num(p.c1()), fmt_num(p.c2()))
}

/// Runs every identity check on `samples` random parameter points and random
/// operator pairs.
pub fn verify_checks(samples: usize, seed: u64) -> Vec<CheckSummary> {
    let mut rng = seeded_rng(seed);
    let mut additivity = CheckSummary::new("linear additivity T2-D2-C2+L2");
    let mut linear_states = CheckSummary::new("linear closed forms vs states");
    let mut norm = CheckSummary::new("S+(a||b) = ||a-b||^2");
    let mut js = CheckSummary::new("Jensen-Shannon difference = S-");
    let mut geometric = CheckSummary::new("geometric additivity Tg-Dg-Cg+Lg-Delta_g");
    let mut conversion = CheckSummary::new("linear/geometric conversions");
    let mut discord = CheckSummary::new("D2 = Dg = min pair of lambdas / 4");
    let mut projection = CheckSummary::new("Tr(rho chi) = Tr(chi^2)");
    let mut cubic = CheckSummary::new("cubic residual and discriminant");
    let mut bell_line = CheckSummary::new("L2 = 0 on c1 = c2");
    let mut plus_sign = CheckSummary::new("plus branch Tg-Dg-Cg <= 0");

    for _ in 0..samples {
        let p = random_params(&mut rng);
        let at = || at_params(p);
        let lin = linear_report(p);
        additivity.record(lin.additivity_residual(), at);

        let rho = make_state(p);
        let set = closest_set(p);
        let from_states = linear_from_states(rho.op(), &set);
        let dev = [lin.t2 - from_states.t2, lin.d2 - from_states.d2, lin.c2 - from_states.c2, lin.l2 - from_states.l2]
            .iter()
            .fold(0.0f64, |m, v| m.max(v.abs()));
        linear_states.record(dev, at);

        let g = geometric_report(p);
        geometric.record(g.additivity_residual(), at);
        let worst_conv = conversion_check(p).iter().fold(0.0f64, |m, r| m.max(r.value.abs()));
        conversion.record(worst_conv, at);

        let l = lambdas(p);
        let closed = 0.25 * (l.l1 + l.l2 + l.l3 - l.lmax);
        discord.record((lin.d2 - closed).abs().max((g.dg - closed).abs()), at);
        projection.record(hs_inner(rho.op(), set.chi.op()) - hs_inner(set.chi.op(), set.chi.op()), at);

        let k = coeffs(p);
        let a = closest_a3(p);
        let disc_violation = (-cubic_discriminant(k.r30, k.r33)).max(0.0);
        cubic.record(cubic_residual(a, k.r30, k.r33).abs().max(disc_violation), at);

        let diag = XParams::new(0.5 * p.alpha(), 0.5 * p.alpha()).expect("diagonal point is admissible");
        bell_line.record(linear_report(diag).l2, || at_params(diag));

        if let Ok(v) = plus_branch_inequality(p) {
            plus_sign.record(v.max(0.0), at);
        }

        let (h1, h2) = (random_hermitian(&mut rng), random_hermitian(&mut rng));
        let hs = (h1 - h2).hs_inner(&(h1 - h2));
        norm.record(sym_lre(&h1, &h2) - hs, || "random Hermitian pair".into());
        // Same Hermitian pair through the Fano route.
        let fano = fano_distance_sq(&to_fano(&h1).expect("Hermitian"), &to_fano(&h2).expect("Hermitian"));
        norm.record(fano - hs, || "random Hermitian pair (Fano)".into());

        let (r1, r2) = (random_density(&mut rng), random_density(&mut rng));
        let (r1, r2) = (r1.op(), r2.op());
        let sum = *r1 + *r2;
        let lhs = jsd2(&sum, &(*r2 - *r1)) - jsd2(&sum, &(*r1 - *r2));
        js.record(lhs - asym_lre(r1, r2), || "random density pair".into());
    }
    vec![
        additivity,
        linear_states,
        norm,
        js,
        geometric,
        conversion,
        discord,
        projection,
        cubic,
        bell_line,
        plus_sign,
    ]
}

pub fn cmd_verify(samples: usize, seed: u64, tol: f64) -> Outcome {
    if samples == 0 {
        return Outcome::fail(EXIT_USAGE, "error: samples must be >= 1\n");
    }
    if tol.is_nan() || tol < 0.0 {
        return Outcome::fail(EXIT_USAGE, format!("error: tol must be >= 0, got {tol}\n"));
    }
    let checks = verify_checks(samples, seed);
    let mut s = String::new();
    let _ = writeln!(s, "{:<45} {:>8} {:>24}  worst at", "check", "count", "max residual");
    let mut worst: Option<&CheckSummary> = None;
    for c in &checks {
        let status = if c.max_residual <= tol { "ok" } else { "FAIL" };
        let _ = writeln!(s, "{:<45} {:>8} {:>24}  {} [{status}]", c.name, c.count, fmt_num(c.max_residual), c.worst_at);
        if c.max_residual > tol && worst.is_none_or(|w| c.max_residual > w.max_residual) {
            worst = Some(c);
        }
    }
    let _ = writeln!(s, "plus-branch closed-form gaps (detection, not pass/fail):");
    for &(c1, c2) in &GAP_POINTS {
        let g = closed_form_gaps(XParams::new(c1, c2).expect("gap points are admissible"));
        let detected = g.lg_gap().abs() > 1e-9 || g.delta_g_gap().abs() > 1e-9;
        let _ = writeln!(
            s,
            "  c1={c1} c2={c2}: lg gap {} delta_g gap {} detected {}",
            fmt_num(g.lg_gap()),
            fmt_num(g.delta_g_gap()),
            if detected { "yes" } else { "no" }
        );
    }
    match worst {
        None => {
            let _ = writeln!(s, "all checks within tol {}", fmt_num(tol));
            Outcome::ok(s)
        }
        Some(w) => Outcome {
            code: EXIT_VERIFY_FAILED,
            stdout: s,
            stderr: format!(
                "verification failed: {} residual {} exceeds tol {} at {}\n",
                w.name,
                fmt_num(w.max_residual),
                fmt_num(tol),
                w.worst_at
            ),
        },
    }
}

pub fn cmd_oracle(c1: f64, c2: f64, cfg: &SearchConfig) -> Outcome {
    let p = match params_or_usage(c1, c2) {
        Ok(p) => p,
        Err(o) => return o,
    };
    if let Err(e) = cfg.validate() {
        return Outcome::fail(EXIT_USAGE, format!("error: {e}\n"));
    }
    let table = match compare_reports(p, cfg) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(EXIT_NONCONVERGENT, format!("error: {e}\n")),
    };
    let mut s = String::new();
    let _ = writeln!(s, "{:<4} {:>24} {:>24} {:>24}", "qty", "closed form", "oracle", "abs diff");
    for r in &table.rows {
        let flag = if r.flagged { "  !" } else { "" };
        let _ = writeln!(
            s,
            "{:<4} {:>24} {:>24} {:>24}{flag}",
            r.quantity,
            fmt_num(r.closed_form),
            fmt_num(r.oracle),
            fmt_num(r.abs_diff)
        );
    }
    let _ = writeln!(s, "evaluations {}", table.evaluations);
    if !table.converged {
        return Outcome {
            code: EXIT_NONCONVERGENT,
            stdout: s,
            stderr: format!("oracle search did not converge at {}\n", at_params(p)),
        };
    }
    if table.any_flagged() {
        return Outcome {
            code: EXIT_VERIFY_FAILED,
            stdout: s,
            stderr: format!("discrepancy {} above tolerance\n", fmt_num(table.max_abs_diff())),
        };
    }
    Outcome::ok(s)
}

/// Random oracle comparison points, for bulk runs.
pub fn random_oracle_points(n: usize, seed: u64) -> Vec<XParams> {
    let mut rng = seeded_rng(seed);
    (0..n)
        .map(|_| {
            let alpha: f64 = rng.random();
            XParams::on_line(alpha, rng.random::<f64>() * alpha).expect("point on the alpha line")
        })
        .collect()
}
