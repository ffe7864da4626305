//! Inequalities between norms of an SPF and bounds on its derivative, each
//! evaluated on a single fraction and reported with both sides.

use serde::{Deserialize, Serialize};

use super::realline::{lp_norm, lp_norm_segment, sup_real_line, sup_segment};
use super::{centre_and_radius, HalfPlanePoles};
use crate::error::Result;
use crate::numkit::sup_norm;
use crate::spf::SimpleFraction;
use crate::C64;

/// Relative slack allowed on non-strict inequalities for rounding.
const SLACK: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum CheckOutcome {
    Pass,
    Violated,
    /// Recorded only; the constant involved is not known sharply.
    Observed,
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub outcome: CheckOutcome,
}

impl CheckReport {
    fn strict(name: &str, lhs: f64, rhs: f64) -> Self {
        let outcome = if lhs < rhs { CheckOutcome::Pass } else { CheckOutcome::Violated };
        Self { name: name.into(), lhs, rhs, outcome }
    }

    fn weak(name: &str, lhs: f64, rhs: f64) -> Self {
        let outcome = if lhs <= rhs * (1.0 + SLACK) { CheckOutcome::Pass } else { CheckOutcome::Violated };
        Self { name: name.into(), lhs, rhs, outcome }
    }

    fn observed(name: &str, lhs: f64, rhs: f64) -> Self {
        Self { name: name.into(), lhs, rhs, outcome: CheckOutcome::Observed }
    }

    fn skipped(name: &str, reason: impl Into<String>) -> Self {
        Self { name: name.into(), lhs: f64::NAN, rhs: f64::NAN, outcome: CheckOutcome::Skipped(reason.into()) }
    }

    pub fn violated(&self) -> bool {
        self.outcome == CheckOutcome::Violated
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum InequalitySelector {
    /// `(2n)^{−1}‖ρ‖₂² < π‖ρ‖_∞ < 2‖ρ‖₂²` for poles in the upper half-plane.
    TwoSidedL2Sup,
    /// `‖ρ‖_∞ ≤ 2r·sin^{−s}(π/r)·‖ρ‖_r^s`, `1/r + 1/s = 1`.
    SupByLr { r: f64 },
    /// Ratio `‖ρ‖_p^q / ‖ρ‖_r^s`, `1/p + 1/q = 1`, `1 < r < p`.
    LpByLr { p: f64, r: f64 },
    /// Ratio `‖ρ‖_{C[-1,1]} / (n^{2/r}‖ρ‖_{L_r[-1,1]})`, compared with 64.
    SegmentSupByLr { r: f64 },
}

fn conjugate(r: f64) -> f64 {
    r / (r - 1.0)
}

pub fn inequality_suite(spf: &SimpleFraction, selectors: &[InequalitySelector]) -> Result<Vec<CheckReport>> {
    let n = spf.order() as f64;
    let upper = spf.order() > 0 && spf.poles.iter().all(|p| p.im > 0.0);
    let mut out = Vec::new();
    for sel in selectors {
        match *sel {
            InequalitySelector::TwoSidedL2Sup => {
                if !upper {
                    out.push(CheckReport::skipped("l2_sup_lower", "poles must lie in the upper half-plane"));
                    out.push(CheckReport::skipped("l2_sup_upper", "poles must lie in the upper half-plane"));
                    continue;
                }
                let l2sq = lp_norm(spf, 2.0)?.powi(2);
                let sup = lp_norm(spf, f64::INFINITY)?;
                let mid = std::f64::consts::PI * sup;
                out.push(CheckReport::strict("l2_sup_lower", l2sq / (2.0 * n), mid));
                out.push(CheckReport::strict("l2_sup_upper", mid, 2.0 * l2sq));
            }
            InequalitySelector::SupByLr { r } => {
                if !upper {
                    out.push(CheckReport::skipped("sup_by_lr", "poles must lie in the upper half-plane"));
                    continue;
                }
                let s = conjugate(r);
                let a = 2.0 * r * (std::f64::consts::PI / r).sin().powf(-s);
                out.push(CheckReport::weak("sup_by_lr", lp_norm(spf, f64::INFINITY)?, a * lp_norm(spf, r)?.powf(s)));
            }
            InequalitySelector::LpByLr { p, r } => {
                if !upper {
                    out.push(CheckReport::skipped("lp_by_lr", "poles must lie in the upper half-plane"));
                    continue;
                }
                let q = if p.is_infinite() { 1.0 } else { conjugate(p) };
                out.push(CheckReport::observed("lp_by_lr", lp_norm(spf, p)?.powf(q), lp_norm(spf, r)?.powf(conjugate(r))));
            }
            InequalitySelector::SegmentSupByLr { r } => {
                if spf.poles.iter().any(|p| p.im == 0.0 && p.re.abs() <= 1.0) || !spf.is_real_valued(1e-12) {
                    out.push(CheckReport::skipped("segment_sup_by_lr", "needs a real-valued fraction with no pole on [-1, 1]"));
                    continue;
                }
                let sup = sup_segment(|x| spf.value_real(x))?;
                out.push(CheckReport::observed("segment_sup_by_lr", sup, 64.0 * n.powf(2.0 / r) * lp_norm_segment(spf, r)?));
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum DerivativeSelector {
    /// Pointwise bounds through `μ = Im ρ`, `ν = Re ρ` for upper half-plane
    /// poles, on `samples` points spread over the pole cloud.
    HalfPlane { samples: usize },
    /// `‖ρ'‖ ≤ ‖ρ‖(n/r + 2‖ρ‖)` on `|z| = r`.
    Circle { r: f64 },
    /// `max √(1−x²)|ρ'(x)|/n` on `[-1, 1]`, recorded only.
    Segment,
}

pub fn derivative_suite(spf: &SimpleFraction, selectors: &[DerivativeSelector]) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for sel in selectors {
        match *sel {
            DerivativeSelector::HalfPlane { samples } => match HalfPlanePoles::new(spf.poles.clone()) {
                Ok(hp) => {
                    let (c, r) = centre_and_radius(&hp.poles);
                    let xs: Vec<f64> = (0..samples.max(2))
                        .map(|i| c - 10.0 * r + 20.0 * r * i as f64 / (samples.max(2) - 1) as f64)
                        .collect();
                    out.extend(halfplane_checks(&hp, &xs));
                }
                Err(_) => out.push(CheckReport::skipped("halfplane", "poles must lie in the upper half-plane")),
            },
            DerivativeSelector::Circle { r } => out.push(circle_derivative_check(spf, r)?),
            DerivativeSelector::Segment => {
                if spf.order() == 0 || spf.poles.iter().any(|p| p.im == 0.0 && p.re.abs() <= 1.0) || !spf.is_real_valued(1e-12) {
                    out.push(CheckReport::skipped("segment_weighted_derivative", "needs a real-valued fraction with no pole on [-1, 1]"));
                    continue;
                }
                let n = spf.order() as f64;
                let lhs = sup_segment(|x| {
                    let d: f64 = spf.poles.iter().map(|&p| (-C64::new(1.0, 0.0) / (C64::new(x, 0.0) - p).powu(2)).re).sum();
                    (1.0 - x * x).max(0.0).sqrt() * d.abs() / n
                })?;
                out.push(CheckReport::observed("segment_weighted_derivative", lhs, sup_segment(|x| spf.value_real(x))?));
            }
        }
    }
    Ok(out)
}

/// `‖ν‖_∞` on the real line.
fn nu_sup(hp: &HalfPlanePoles) -> f64 {
    let (c, r) = hp.centre_and_radius();
    let features: Vec<(f64, f64)> = hp.poles.iter().map(|p| (p.re, p.im)).collect();
    sup_real_line(|x| hp.nu(x).abs(), c, r, &features).0
}

fn mu_sup(hp: &HalfPlanePoles) -> f64 {
    let (c, r) = hp.centre_and_radius();
    let features: Vec<(f64, f64)> = hp.poles.iter().map(|p| (p.re, p.im)).collect();
    sup_real_line(|x| hp.mu(x), c, r, &features).0
}

/// With `χ = (|ν| + ‖ν‖_∞)μ`: `|μ'| ≤ χ`, `|ρ'| + |μ'| ≤ 2χ` (an identity for
/// one pole), `|ρ'| ≤ (|ρ| + ‖ρ‖_∞)μ` and `|ν'| ≤ (μ + ‖μ‖_∞)μ`. Each report
/// carries the worst ratio `lhs/rhs` over `xs` as `lhs` and 1 as `rhs`, except
/// `rho_mu_equality`, which gives the largest `|lhs − rhs|` of the second
/// relation.
pub fn halfplane_checks(hp: &HalfPlanePoles, xs: &[f64]) -> Vec<CheckReport> {
    let nu_inf = nu_sup(hp);
    let mu_inf = mu_sup(hp);
    let rho_inf = {
        let (c, r) = hp.centre_and_radius();
        let features: Vec<(f64, f64)> = hp.poles.iter().map(|p| (p.re, p.im)).collect();
        sup_real_line(|x| hp.rho(x).norm(), c, r, &features).0
    };
    let mut worst = [0.0f64; 4];
    let mut gap: f64 = 0.0;
    for &x in xs {
        let mu = hp.mu(x);
        let d = hp.rho_prime(x);
        let (nu_p, mu_p) = (d.re, d.im);
        let chi = (hp.nu(x).abs() + nu_inf) * mu;
        worst[0] = worst[0].max(mu_p.abs() / chi);
        worst[1] = worst[1].max((d.norm() + mu_p.abs()) / (2.0 * chi));
        worst[2] = worst[2].max(d.norm() / ((hp.rho(x).norm() + rho_inf) * mu));
        worst[3] = worst[3].max(nu_p.abs() / ((mu + mu_inf) * mu));
        gap = gap.max((d.norm() + mu_p.abs() - 2.0 * chi).abs());
    }
    let mut out = vec![
        CheckReport::weak("mu_prime_by_chi", worst[0], 1.0),
        CheckReport::weak("rho_mu_prime_by_chi", worst[1], 1.0),
        CheckReport::weak("rho_prime_by_mu", worst[2], 1.0),
        CheckReport::weak("nu_prime_by_mu", worst[3], 1.0),
    ];
    out.push(if hp.n() == 1 {
        CheckReport::weak("rho_mu_equality", gap, 1e-12)
    } else {
        CheckReport::observed("rho_mu_equality", gap, 0.0)
    });
    out
}

/// `‖ρ'‖_{C(γ_r)} ≤ ‖ρ‖_{C(γ_r)}(n/r + 2‖ρ‖_{C(γ_r)})` for poles outside `|z| = r`.
pub fn circle_derivative_check(spf: &SimpleFraction, r: f64) -> Result<CheckReport> {
    if spf.poles.iter().any(|p| p.norm() <= r) {
        return Ok(CheckReport::skipped("circle_derivative", format!("poles must lie outside |z| = {r}")));
    }
    let on_circle = |t: f64| C64::from_polar(r, t);
    let tau = std::f64::consts::TAU;
    let rho = sup_norm(|t| spf.value(on_circle(t)).map(|v| v.norm()).unwrap_or(f64::INFINITY), 0.0, tau, 1e-12)?.value;
    let drho = sup_norm(|t| spf.eval(on_circle(t), 1).map(|v| v.norm()).unwrap_or(f64::INFINITY), 0.0, tau, 1e-12)?.value;
    let n = spf.order() as f64;
    Ok(CheckReport::weak("circle_derivative", drho, rho * (n / r + 2.0 * rho)))
}
