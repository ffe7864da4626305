//! One subcommand per construction. Every argument struct is also the shape
//! of the matching `--config` file.

use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::{Args, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::BTreeMap;

use spfkit::best::{
    alternance_criterion, extremal_fraction, remez_constant, remez_deviation_bounds, ExtremalFraction, Verdict,
    ALTERNANCE_TOL,
};
use spfkit::hsum::{
    diff_nodes, extrap_freqs, int_nodes, prony_solve, reg_diff, reg_diff_closed_form, reg_extrap,
    reg_extrap_closed_form,
};
use spfkit::interp::{
    constant_residual, generalized_interp_simple, interpolate_constant, pade_spf, pade_spf_exp, Ordinary,
};
use spfkit::metrics::{
    derivative_suite, inequality_suite, integrate_real_line, l2_quadrature, lp_norm, notch_points, CheckOutcome,
    CheckReport, DerivativeSelector, HalfPlanePoles, InequalitySelector,
};
use spfkit::numkit::{power_sums, sup_norm, PowerSeries};
use spfkit::spf::pole_distance;
use spfkit::suite::{run_all, run_criterion, CRITERIA};
use spfkit::{c64, ComplexPolynomial, SimpleFraction, C64};

use crate::output::{cx, num, Check, Report, Table};
use crate::parse::{complex_list, series_file};

#[derive(Debug, Clone, Subcommand, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Command {
    /// Padé fraction of a power series.
    Pade(PadeArgs),
    /// Generalized interpolation at simple nodes.
    Interp(InterpArgs),
    /// Interpolation of a constant.
    #[command(name = "const")]
    #[serde(rename = "const")]
    Const(ConstArgs),
    /// Best approximation of a constant on [-1, 1].
    Remez(RemezArgs),
    /// Extremal fraction and its weighted norm.
    Extremal(ExtremalArgs),
    /// Notch points, L2 quadrature and norm inequalities.
    Metrics(MetricsArgs),
    /// Derivative bounds.
    Derivs(DerivsArgs),
    /// Node systems for differentiation, integration and extrapolation.
    Hsum(HsumArgs),
    /// Discrete moment problem.
    Prony(PronyArgs),
    /// Regularized differentiation sum.
    Regdiff(RegDiffArgs),
    /// Regularized extrapolation sum.
    Regextrap(RegExtrapArgs),
    /// Acceptance checks.
    Suite(SuiteArgs),
}

fn default_tol() -> f64 {
    1e-10
}
fn default_max_iter() -> usize {
    500
}
fn default_phi() -> f64 {
    std::f64::consts::PI
}
fn default_r() -> f64 {
    2.0
}
fn default_circle() -> f64 {
    1.0
}
fn default_samples() -> usize {
    2001
}
fn default_a() -> f64 {
    2.0
}
fn default_p() -> f64 {
    1.0
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct PadeArgs {
    /// JSON file with the series coefficients.
    #[arg(long)]
    #[serde(default)]
    pub f: Option<PathBuf>,
    /// Inline coefficients, e.g. "1, 0.5+0.1i, -0.2".
    #[arg(long)]
    #[serde(default)]
    pub coeffs: Option<String>,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct InterpArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub nodes: String,
    #[arg(long, allow_hyphen_values = true)]
    pub values: String,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct ConstArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub c: String,
    /// Use the zeros of T_n as nodes.
    #[arg(long)]
    #[serde(default)]
    pub n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    #[serde(default)]
    pub nodes: Option<String>,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct RemezArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub c: f64,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = default_tol())]
    #[serde(default = "default_tol")]
    pub tol: f64,
    #[arg(long, default_value_t = default_max_iter())]
    #[serde(default = "default_max_iter")]
    pub max_iter: usize,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct ExtremalArgs {
    #[arg(long)]
    #[serde(default)]
    pub omega: Option<f64>,
    #[arg(long)]
    #[serde(default)]
    pub delta: Option<f64>,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct MetricsArgs {
    /// Poles in the upper half-plane, e.g. "1i, 0.5+2i".
    #[arg(long, allow_hyphen_values = true)]
    pub poles: String,
    #[arg(long, default_value_t = default_phi())]
    #[serde(default = "default_phi")]
    pub phi: f64,
    /// Exponent r in the sup-by-L_r inequality.
    #[arg(long, default_value_t = default_r())]
    #[serde(default = "default_r")]
    pub r: f64,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct DerivsArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub poles: String,
    /// Radius of the circle for the circle bound.
    #[arg(long, default_value_t = default_circle())]
    #[serde(default = "default_circle")]
    pub r: f64,
    #[arg(long, default_value_t = default_samples())]
    #[serde(default = "default_samples")]
    pub samples: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKindArg {
    Diff,
    Int,
    Extrap,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct HsumArgs {
    #[arg(long, value_enum)]
    pub kind: NodeKindArg,
    #[arg(long)]
    pub n: usize,
    /// Extrapolation ratio.
    #[arg(long, default_value_t = default_a())]
    #[serde(default = "default_a")]
    pub a: f64,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct PronyArgs {
    /// The 2n moments s_0..s_{2n-1}.
    #[arg(long, allow_hyphen_values = true)]
    pub moments: String,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct RegDiffArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = default_p(), allow_hyphen_values = true)]
    #[serde(default = "default_p")]
    pub p: f64,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct RegExtrapArgs {
    #[arg(long, default_value_t = default_a())]
    #[serde(default = "default_a")]
    pub a: f64,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = default_p())]
    #[serde(default = "default_p")]
    pub p: f64,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct SuiteArgs {
    /// Run every check.
    #[arg(long)]
    #[serde(default)]
    pub all: bool,
    /// Run a single check by number.
    #[arg(long)]
    #[serde(default)]
    pub id: Option<u32>,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Pade(_) => "pade",
            Command::Interp(_) => "interp",
            Command::Const(_) => "const",
            Command::Remez(_) => "remez",
            Command::Extremal(_) => "extremal",
            Command::Metrics(_) => "metrics",
            Command::Derivs(_) => "derivs",
            Command::Hsum(_) => "hsum",
            Command::Prony(_) => "prony",
            Command::Regdiff(_) => "regdiff",
            Command::Regextrap(_) => "regextrap",
            Command::Suite(_) => "suite",
        }
    }

    pub fn run(&self, seed: u64) -> Result<Report> {
        let mut inputs: BTreeMap<String, Value> = match serde_json::to_value(self)? {
            Value::Object(m) => m.into_iter().filter(|(k, _)| k != "command").collect(),
            _ => BTreeMap::new(),
        };
        inputs.insert("seed".into(), json!(seed));
        let (result, table, checks) = match self {
            Command::Pade(a) => pade(a)?,
            Command::Interp(a) => interp(a)?,
            Command::Const(a) => constant(a)?,
            Command::Remez(a) => remez(a)?,
            Command::Extremal(a) => extremal(a)?,
            Command::Metrics(a) => metrics(a)?,
            Command::Derivs(a) => derivs(a)?,
            Command::Hsum(a) => hsum(a)?,
            Command::Prony(a) => prony(a)?,
            Command::Regdiff(a) => regdiff(a)?,
            Command::Regextrap(a) => regextrap(a)?,
            Command::Suite(a) => suite(a, seed)?,
        };
        Ok(Report::new(self.name(), inputs, result, table, checks))
    }
}

type Outcome = (Value, Table, Vec<Check>);

fn poles_json(p: &[C64]) -> Value {
    json!(p.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>())
}

fn pole_rows(table: &mut Table, kind: &str, poles: &[C64], width: usize) {
    for (k, &z) in poles.iter().enumerate() {
        let [re, im] = cx(z);
        let mut row = vec![kind.to_string(), k.to_string(), re, im];
        row.resize(width, String::new());
        table.push(row);
    }
}

fn pade(a: &PadeArgs) -> Result<Outcome> {
    let coeffs = match (&a.f, &a.coeffs) {
        (Some(path), None) => series_file(path)?,
        (None, Some(s)) => complex_list(s)?,
        _ => bail!("precondition violated: give exactly one of --f or --coeffs"),
    };
    let f = PowerSeries::new(coeffs);
    let rho = pade_spf(&f, a.n)?;
    let other = pade_spf_exp(&f, a.n)?;
    let m = rho.maclaurin(a.n)?;
    let mut table = Table::new(&["entry", "index", "re", "im", "residual"]);
    pole_rows(&mut table, "pole", &rho.poles, 5);
    let scale = (0..a.n).map(|k| f.coeff(k).norm()).fold(1.0, f64::max);
    let mut worst: f64 = 0.0;
    for k in 0..a.n {
        let r = (m[k] - f.coeff(k)).norm();
        worst = worst.max(r);
        let [re, im] = cx(m[k]);
        table.push(vec!["coefficient".into(), k.to_string(), re, im, num(r)]);
    }
    let agree = pole_distance(&rho.poles, &other.poles);
    let checks = vec![
        Check::new("contact", worst <= 1e-9 * scale, format!("max coefficient residual {worst:e}")),
        Check::new("exp_construction_agrees", agree <= 1e-7, format!("pole distance {agree:e}")),
    ];
    let result = json!({
        "order": rho.order(),
        "poles": poles_json(&rho.poles),
        "maclaurin": poles_json(&m),
        "max_residual": worst,
        "exp_poles": poles_json(&other.poles),
    });
    Ok((result, table, checks))
}

fn interp(a: &InterpArgs) -> Result<Outcome> {
    let nodes = complex_list(&a.nodes)?;
    let values = complex_list(&a.values)?;
    let fam = generalized_interp_simple(&nodes, &values, a.n)?;
    let mut table = Table::new(&["entry", "index", "power", "re", "im"]);
    let mut worst: f64 = 0.0;
    for (b, q) in fam.basis.iter().enumerate() {
        for (i, &c) in q.coeffs().iter().enumerate() {
            let [re, im] = cx(c);
            table.push(vec!["basis".into(), b.to_string(), i.to_string(), re, im]);
        }
        let dq = q.derivative();
        for (x, v) in nodes.iter().zip(&values) {
            worst = worst.max((dq.eval(*x) - v * q.eval(*x)).norm() / q.max_abs_coeff());
        }
    }
    for (b, s) in fam.solutions.iter().enumerate() {
        for (k, &z) in s.spf.poles.iter().enumerate() {
            let [re, im] = cx(z);
            table.push(vec![format!("pole_{b}"), b.to_string(), k.to_string(), re, im]);
        }
    }
    let status = match &fam.ordinary {
        Ordinary::Solvable(_) => "solvable".to_string(),
        Ordinary::Unsolvable { forced_singular } => format!("unsolvable (forced singular nodes {forced_singular:?})"),
        Ordinary::NotFound => "not found".to_string(),
    };
    let result = json!({
        "dimension": fam.basis.len(),
        "basis": fam.basis.iter().map(|q| poles_json(q.coeffs())).collect::<Vec<_>>(),
        "solutions": fam.solutions,
        "ordinary": fam.ordinary,
        "status": status,
    });
    Ok((result, table, vec![Check::new("conditions", worst <= 1e-8, format!("max |Q' - bQ|/|Q| {worst:e}"))]))
}

fn constant(a: &ConstArgs) -> Result<Outcome> {
    let cs = complex_list(&a.c)?;
    if cs.len() != 1 {
        bail!("precondition violated: --c takes one complex number");
    }
    let c = cs[0];
    let (nodes, chebyshev) = match (&a.nodes, a.n) {
        (Some(s), None) => (complex_list(s)?, false),
        (None, Some(n)) if n >= 1 => (
            (1..=n)
                .map(|j| c64((std::f64::consts::PI * (2 * j - 1) as f64 / (2 * n) as f64).cos(), 0.0))
                .collect(),
            true,
        ),
        _ => bail!("precondition violated: give exactly one of --n (n >= 1) or --nodes"),
    };
    let sol = interpolate_constant(c, &nodes)?;
    let pi = ComplexPolynomial::from_roots(&nodes);
    let mut checks = Vec::new();
    let at_nodes = nodes
        .iter()
        .map(|&x| constant_residual(c, &pi, &sol.q, x).norm())
        .fold(0.0, f64::max);
    checks.push(Check::new("interpolates", at_nodes <= 1e-10, format!("max |rho - c| at nodes {at_nodes:e}")));
    let mut extra = json!(null);
    if chebyshev && c.im == 0.0 && c.re > 0.0 && c.re < 0.5 {
        let n = nodes.len();
        let cr = c.re;
        let err = sup_norm(|x| constant_residual(c, &pi, &sol.q, c64(x, 0.0)).re, -1.0, 1.0, 1e-12)?.value;
        let fact: f64 = (1..=n).map(|k| k as f64).product();
        let bound = cr * (1.0 - cr) / ((1.0 - 2.0 * cr) * 2f64.powi(2 * n as i32 - 1) * fact);
        let min_pole = sol.spf.poles.iter().map(|p| p.norm()).fold(f64::INFINITY, f64::min);
        checks.push(Check::new("error_bound", err <= bound, format!("sup error {err:e}, bound {bound:e}")));
        checks.push(Check::new("poles_outside_disk", min_pole > 1.0, format!("min |z_k| {min_pole}")));
        extra = json!({"sup_error": err, "bound": bound});
    }
    let mut table = Table::new(&["entry", "index", "re", "im"]);
    pole_rows(&mut table, "pole", &sol.spf.poles, 4);
    let result = json!({
        "q": poles_json(sol.q.coeffs()),
        "poles": poles_json(&sol.spf.poles),
        "node_status": sol.node_status,
        "segment": extra,
    });
    Ok((result, table, checks))
}

fn remez(a: &RemezArgs) -> Result<Outcome> {
    let r = remez_constant(a.c, a.n, a.tol, a.max_iter)?;
    let (lo, hi) = remez_deviation_bounds(a.c, a.n);
    let verdict = alternance_criterion(|_| a.c, &r.spf, a.n, ALTERNANCE_TOL)?;
    let mut table = Table::new(&["entry", "index", "re", "im", "residual"]);
    pole_rows(&mut table, "pole", &r.spf.poles, 5);
    for (k, (x, e)) in r.report.points.iter().zip(&r.report.residuals).enumerate() {
        table.push(vec!["alternance".into(), k.to_string(), num(*x), "0".into(), num(*e)]);
    }
    let checks = vec![
        Check::new("converged", r.converged, format!("spread {:e} after {} iterations", r.spread, r.iterations)),
        Check::new("deviation_bounds", lo <= r.deviation && r.deviation <= hi, format!("{lo:e} <= {:e} <= {hi:e}", r.deviation)),
        Check::new("alternance", r.report.count == a.n + 1, format!("{} points", r.report.count)),
        Check::new("certified_best", verdict == Verdict::CertifiedBest, format!("{verdict:?}")),
    ];
    let result = json!({
        "poles": poles_json(&r.spf.poles),
        "alternance": r.report.points,
        "deviation": r.deviation,
        "bounds": [lo, hi],
        "remez": r,
    });
    Ok((result, table, checks))
}

fn extremal(a: &ExtremalArgs) -> Result<Outcome> {
    let e: ExtremalFraction = match (a.omega, a.delta) {
        (Some(w), None) => extremal_fraction(w, a.n)?,
        (None, Some(d)) => ExtremalFraction::from_delta(d, a.n)?,
        _ => bail!("precondition violated: give exactly one of --omega or --delta"),
    };
    let numeric = e.weighted_norm_numeric()?;
    let closed = e.weighted_norm();
    let via_delta = e.weighted_norm_via_delta();
    let mut table = Table::new(&["entry", "index", "re", "im"]);
    pole_rows(&mut table, "pole", &e.poles, 4);
    for (k, x) in e.alternation_points().iter().enumerate() {
        table.push(vec!["alternation".into(), k.to_string(), num(*x), "0".into()]);
    }
    let checks = vec![
        Check::new("norm_closed_form", (numeric / closed - 1.0).abs() <= 1e-6, format!("numeric {numeric:e}, closed {closed:e}")),
        Check::new("norm_via_delta", (numeric / via_delta - 1.0).abs() <= 1e-6, format!("via delta {via_delta:e}")),
        Check::new("ellipse", e.ellipse_residual() <= 1e-10, format!("residual {:e}", e.ellipse_residual())),
    ];
    let result = json!({
        "fraction": e,
        "weighted_norm_numeric": numeric,
        "weighted_norm": closed,
        "weighted_norm_via_delta": via_delta,
        "alternation_points": e.alternation_points(),
    });
    Ok((result, table, checks))
}

fn report_rows(table: &mut Table, reports: &[CheckReport]) {
    for (k, r) in reports.iter().enumerate() {
        let outcome = match &r.outcome {
            CheckOutcome::Skipped(why) => format!("skipped: {why}"),
            o => format!("{o:?}").to_lowercase(),
        };
        let mut row = vec![r.name.clone(), k.to_string(), num(r.lhs), num(r.rhs), outcome];
        row.resize(table.header.len(), String::new());
        table.push(row);
    }
}

fn report_checks(reports: &[CheckReport]) -> Vec<Check> {
    reports
        .iter()
        .filter(|r| matches!(r.outcome, CheckOutcome::Pass | CheckOutcome::Violated))
        .map(|r| Check::new(&r.name, !r.violated(), format!("lhs {:e}, rhs {:e}", r.lhs, r.rhs)))
        .collect()
}

fn metrics(a: &MetricsArgs) -> Result<Outcome> {
    let hp = HalfPlanePoles::new(complex_list(&a.poles)?)?;
    let notch = notch_points(&hp, a.phi)?;
    let quad = l2_quadrature(&hp, a.phi)?;
    let exact = lp_norm(&hp.spf(), 2.0)?.powi(2);
    let c = hp.poles.iter().map(|p| p.re).sum::<f64>() / hp.n() as f64;
    let r = hp.poles.iter().map(|p| (p - c).norm()).fold(1.0, f64::max);
    let breaks: Vec<f64> = hp.poles.iter().map(|p| p.re).collect();
    let mu2 = integrate_real_line(|x| hp.mu(x).powi(2), c, 4.0 * r, 4.0, &breaks)?;
    let reports = inequality_suite(
        &hp.spf(),
        &[
            InequalitySelector::TwoSidedL2Sup,
            InequalitySelector::SupByLr { r: a.r },
            InequalitySelector::LpByLr { p: f64::INFINITY, r: a.r },
        ],
    )?;
    let mut table = Table::new(&["entry", "index", "lhs", "rhs", "outcome"]);
    for (k, t) in notch.points.iter().enumerate() {
        table.push(vec!["notch".into(), k.to_string(), num(*t), String::new(), String::new()]);
    }
    report_rows(&mut table, &reports);
    let mut checks = vec![
        Check::new("notch_residual", notch.residual(&hp) <= 1e-10 && notch.points.len() == 2 * hp.n(), format!("residual {:e}", notch.residual(&hp))),
        Check::new("l2_quadrature", (quad / exact - 1.0).abs() <= 1e-6, format!("quadrature {quad:e}, integral {exact:e}")),
        Check::new("mu_l2_identity", (2.0 * mu2 / exact - 1.0).abs() <= 1e-6, format!("2|mu|^2 {:e}", 2.0 * mu2)),
    ];
    checks.extend(report_checks(&reports));
    let result = json!({
        "notch_points": notch.points,
        "l2_quadrature": quad,
        "l2_norm_squared": exact,
        "mu_l2_norm_squared": mu2,
        "inequalities": reports,
    });
    Ok((result, table, checks))
}

fn derivs(a: &DerivsArgs) -> Result<Outcome> {
    let spf = SimpleFraction::new(complex_list(&a.poles)?);
    if spf.order() == 0 {
        bail!("precondition violated: need at least one pole");
    }
    let reports = derivative_suite(
        &spf,
        &[
            DerivativeSelector::HalfPlane { samples: a.samples },
            DerivativeSelector::Circle { r: a.r },
            DerivativeSelector::Segment,
        ],
    )?;
    let mut table = Table::new(&["name", "index", "lhs", "rhs", "outcome"]);
    report_rows(&mut table, &reports);
    let result = json!({ "reports": reports });
    Ok((result, table, report_checks(&reports)))
}

fn hsum(a: &HsumArgs) -> Result<Outcome> {
    let n = a.n;
    let (nodes, target): (Vec<C64>, Vec<f64>) = match a.kind {
        NodeKindArg::Diff => (diff_nodes(n)?, (1..=n).map(|j| j as f64).collect()),
        NodeKindArg::Int => (int_nodes(n)?, (1..=n).map(|j| 1.0 / j as f64).collect()),
        NodeKindArg::Extrap => (extrap_freqs(a.a, n)?, (1..=n).map(|m| a.a.powi(m as i32 - 1)).collect()),
    };
    let s = power_sums(&nodes, n);
    let err = s
        .iter()
        .zip(&target)
        .map(|(x, t)| (x - c64(*t, 0.0)).norm() / t.abs().max(1.0))
        .fold(0.0, f64::max);
    let mut checks = vec![Check::new("power_sums", err <= 1e-9, format!("max relative error {err:e}"))];
    let max_abs = nodes.iter().map(|l| l.norm()).fold(0.0, f64::max);
    if a.kind == NodeKindArg::Extrap {
        let bound = a.a - (a.a - 1.0) / n as f64;
        checks.push(Check::new("frequency_bound", max_abs <= bound + 1e-12, format!("max |lambda| {max_abs} <= {bound}")));
    }
    let mut table = Table::new(&["entry", "index", "re", "im"]);
    pole_rows(&mut table, "node", &nodes, 4);
    let result = json!({ "nodes": poles_json(&nodes), "power_sums": poles_json(&s), "max_abs": max_abs });
    Ok((result, table, checks))
}

fn prony(a: &PronyArgs) -> Result<Outcome> {
    let s = complex_list(&a.moments)?;
    let sol = prony_solve(&s)?;
    let mut table = Table::new(&["index", "amp_re", "amp_im", "freq_re", "freq_im"]);
    for (k, (m, l)) in sol.amps.iter().zip(&sol.freqs).enumerate() {
        let [ar, ai] = cx(*m);
        let [fr, fi] = cx(*l);
        table.push(vec![k.to_string(), ar, ai, fr, fi]);
    }
    let checks = vec![Check::new(
        "regular",
        sol.regular,
        format!("condition {:e}, moment error {:e}", sol.condition, sol.moment_error()),
    )];
    Ok((json!(sol), table, checks))
}

fn af_rows(table: &mut Table, amps: &[C64], freqs: &[C64]) {
    for (k, (m, l)) in amps.iter().zip(freqs).enumerate() {
        let [ar, ai] = cx(*m);
        let [fr, fi] = cx(*l);
        table.push(vec![k.to_string(), ar, ai, fr, fi]);
    }
}

fn monomial(j: usize) -> PowerSeries {
    let mut c = vec![0.0; j + 1];
    c[j] = 1.0;
    PowerSeries::from_real(&c)
}

fn coeff_gap(a: &ComplexPolynomial, b: &ComplexPolynomial) -> f64 {
    let n = a.coeffs().len().max(b.coeffs().len());
    (0..n).map(|i| (a.coeff(i) - b.coeff(i)).norm()).fold(0.0, f64::max) / b.max_abs_coeff()
}

fn regdiff(a: &RegDiffArgs) -> Result<Outcome> {
    let r = reg_diff(a.n, a.p)?;
    let z = c64(0.4, 0.2);
    let exact = (0..2 * a.n)
        .map(|j| (r.eval(&monomial(j), z) - j as f64 * z.powu(j as u32)).norm())
        .fold(0.0, f64::max);
    let closed = match &r.solution.generating {
        Some(g) => coeff_gap(g, &reg_diff_closed_form(a.n, r.p)?),
        None => f64::INFINITY,
    };
    let mut table = Table::new(&["index", "amp_re", "amp_im", "freq_re", "freq_im"]);
    af_rows(&mut table, &r.solution.amps, &r.solution.freqs);
    let checks = vec![
        Check::new("exactness", exact <= 1e-8, format!("max error on degree <= {} at z = 0.4+0.2i: {exact:e}", 2 * a.n - 1)),
        Check::new("closed_form", closed <= 1e-8, format!("relative coefficient gap {closed:e}")),
    ];
    Ok((json!(r), table, checks))
}

fn regextrap(a: &RegExtrapArgs) -> Result<Outcome> {
    let r = reg_extrap(a.a, a.n, a.p)?;
    let z = c64(0.3, -0.1);
    let exact = (0..2 * a.n)
        .map(|j| {
            let want = (a.a * z).powu(j as u32);
            (r.eval(&monomial(j), z) - want).norm() / want.norm().max(1.0)
        })
        .fold(0.0, f64::max);
    let closed = match &r.solution.generating {
        Some(g) => coeff_gap(g, &reg_extrap_closed_form(a.a, a.n, r.p)),
        None => f64::INFINITY,
    };
    let limit = r.delta * a.a;
    let mut table = Table::new(&["index", "amp_re", "amp_im", "freq_re", "freq_im"]);
    af_rows(&mut table, &r.solution.amps, &r.solution.freqs);
    let checks = vec![
        Check::new("exactness", exact <= 1e-8, format!("max relative error on degree <= {}: {exact:e}", 2 * a.n - 1)),
        Check::new("closed_form", closed <= 1e-8, format!("relative coefficient gap {closed:e}")),
        Check::new(
            "frequency_bound",
            r.max_frequency() <= limit * (1.0 + 1e-12),
            format!("max |lambda| {} vs delta*a {limit}", r.max_frequency()),
        ),
    ];
    Ok((json!(r), table, checks))
}

fn suite(a: &SuiteArgs, seed: u64) -> Result<Outcome> {
    let results = match (a.all, a.id) {
        (true, None) => run_all(seed),
        (false, Some(id)) => match run_criterion(id, seed) {
            Some(r) => vec![r],
            None => bail!("precondition violated: check id must be in 1..={}", CRITERIA.len()),
        },
        _ => bail!("precondition violated: give exactly one of --all or --id"),
    };
    let mut table = Table::new(&["criterion", "name", "passed", "detail"]);
    for r in &results {
        table.push(vec![r.id.to_string(), r.name.clone(), r.passed.to_string(), r.detail.clone()]);
    }
    let checks = results.iter().map(|r| Check::new(&r.name, r.passed, r.detail.clone())).collect();
    let passed = results.iter().filter(|r| r.passed).count();
    let result = json!({ "passed": passed, "total": results.len(), "criteria": results });
    Ok((result, table, checks))
}
