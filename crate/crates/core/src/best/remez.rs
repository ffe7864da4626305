//! Best uniform approximation of a real constant by SPFs on `[-1, 1]`.
//!
//! Candidates are the constant interpolants at `n` nodes, whose residual is
//! `ρ − c = −c·Π/Q`. The nodes are moved until the sup-norms `N_k` of the
//! residual on the `n + 1` intervals between consecutive nodes (and the ends
//! of the segment) are equal, which produces an `(n + 1)`-point alternance.
//!
//! Phase one follows the classical node-moving rule: widen the interval with
//! the smallest norm by `ε`, halving `ε` whenever a move is rejected. Phase
//! two equalizes `log N_k` by damped Newton steps; by the envelope theorem
//! `∂ log N_k/∂ξ_j = −1/(x_k − ξ_j) − Re(∂_jQ(x_k)/Q(x_k))` at the maximizer
//! `x_k`, with `∂_jQ = −Σ_k c^{−k} (Π/(z − ξ_j))^{(k)}`. Moves are accepted only
//! when the spread of the `N_k` shrinks and `max N_k` does not grow.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use super::alternance::{alternance_of, AlternanceReport, ALTERNANCE_TOL};
use crate::error::{require, Result};
use crate::interp::{constant_generator, spf_of};
use crate::numkit::supnorm::golden_max;
use crate::numkit::ComplexPolynomial;
use crate::spf::SimpleFraction;
use crate::C64;

/// Spread at which the node-moving phase hands over to Newton.
const HANDOVER_SPREAD: f64 = 1e-3;
/// Relative slack for "`max N_k` did not grow" against rounding.
const MONOTONE_SLACK: f64 = 1e-13;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RemezResult {
    pub spf: SimpleFraction,
    pub q: ComplexPolynomial,
    pub nodes: Vec<f64>,
    pub interval_norms: Vec<f64>,
    /// `(max − min)/max` of the interval norms.
    pub spread: f64,
    pub deviation: f64,
    pub report: AlternanceReport,
    pub iterations: usize,
    pub converged: bool,
    /// Whether `|c| < n/8`, where the best fraction is known to have this form.
    pub in_guaranteed_regime: bool,
    /// `max N_k` after every accepted move.
    pub history: Vec<f64>,
}

/// Explicit lower and upper bounds for the least deviation of `c` from SPFs of
/// order `n` on `[-1, 1]`.
pub fn remez_deviation_bounds(c: f64, n: usize) -> (f64, f64) {
    let a = c.abs();
    let fact: f64 = (1..=n).map(|k| k as f64).product();
    let base = a.powi(n as i32 + 1) / (2f64.powi(n as i32 - 1) * fact);
    let lo = base * (-2.0 * a).exp() / (1.0 + 2.0 * a * a.exp());
    let hi = base * 2.0 * (1.0 + a) * (2.0 * a).exp();
    (lo, hi)
}

struct State {
    c: f64,
    nodes: Vec<f64>,
    q: ComplexPolynomial,
    peaks: Vec<f64>,
    norms: Vec<f64>,
}

impl State {
    fn new(c: f64, nodes: Vec<f64>) -> Self {
        let roots: Vec<C64> = nodes.iter().map(|&x| C64::new(x, 0.0)).collect();
        let q = constant_generator(C64::new(c, 0.0), &ComplexPolynomial::from_roots(&roots));
        let mut s = Self { c, nodes, q, peaks: Vec::new(), norms: Vec::new() };
        let mut edges = vec![-1.0];
        edges.extend(&s.nodes);
        edges.push(1.0);
        let (peaks, norms) = edges.windows(2).map(|w| s.interval_max(w[0], w[1])).unzip();
        s.peaks = peaks;
        s.norms = norms;
        s
    }

    fn residual(&self, x: f64) -> f64 {
        let pi: f64 = self.nodes.iter().map(|&t| x - t).product();
        -self.c * pi / self.q.eval(C64::new(x, 0.0)).re
    }

    fn interval_max(&self, lo: f64, hi: f64) -> (f64, f64) {
        const SAMPLES: usize = 33;
        let f = |x: f64| self.residual(x).abs();
        let xs: Vec<f64> = (0..SAMPLES).map(|i| lo + (hi - lo) * i as f64 / (SAMPLES - 1) as f64).collect();
        let best = (0..SAMPLES).max_by(|&i, &j| f(xs[i]).total_cmp(&f(xs[j]))).unwrap();
        let (xm, vm) = golden_max(f, xs[best.saturating_sub(1)], xs[(best + 1).min(SAMPLES - 1)]);
        if vm >= f(xs[best]) {
            (xm, vm)
        } else {
            (xs[best], f(xs[best]))
        }
    }

    fn max_norm(&self) -> f64 {
        self.norms.iter().cloned().fold(0.0, f64::max)
    }

    fn spread(&self) -> f64 {
        let lo = self.norms.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = self.max_norm();
        (hi - lo) / hi
    }

    /// `∂ log N_k / ∂ξ_j`.
    fn log_norm_jacobian(&self) -> DMatrix<f64> {
        let n = self.nodes.len();
        let c = C64::new(self.c, 0.0);
        let partials: Vec<ComplexPolynomial> = (0..n)
            .map(|j| {
                let others: Vec<C64> = (0..n).filter(|&i| i != j).map(|i| C64::new(self.nodes[i], 0.0)).collect();
                constant_generator(c, &ComplexPolynomial::from_roots(&others)).scale(C64::new(-1.0, 0.0))
            })
            .collect();
        DMatrix::from_fn(n + 1, n, |k, j| {
            let x = C64::new(self.peaks[k], 0.0);
            -1.0 / (self.peaks[k] - self.nodes[j]) - (partials[j].eval(x) / self.q.eval(x)).re
        })
    }
}

fn admissible(nodes: &[f64]) -> bool {
    let margin = 1e-12;
    nodes.first().is_some_and(|&x| x > -1.0 + margin)
        && nodes.last().is_some_and(|&x| x < 1.0 - margin)
        && nodes.windows(2).all(|w| w[1] - w[0] > margin)
}

/// Best approximation of the constant `c` by SPFs of order `n` on `[-1, 1]`.
///
/// Runs until the interval norms agree to relative `tol` or `max_iter` moves
/// have been tried; a non-converged run still returns the best iterate.
pub fn remez_constant(c: f64, n: usize, tol: f64, max_iter: usize) -> Result<RemezResult> {
    require(c != 0.0 && c.is_finite(), || format!("c must be a nonzero real, got {c}"))?;
    require(n >= 1, || "n must be at least 1".into())?;
    require(tol > 0.0, || "tolerance must be positive".into())?;

    let start: Vec<f64> = (1..=n)
        .rev()
        .map(|k| ((2 * k - 1) as f64 * std::f64::consts::PI / (2 * n) as f64).cos())
        .collect();
    let mut state = State::new(c, start);
    let mut history = vec![state.max_norm()];
    let mut iterations = 0;

    // phase one: node moving with a halving step
    let mut eps = 0.5
        * std::iter::once(-1.0)
            .chain(state.nodes.iter().copied())
            .chain(std::iter::once(1.0))
            .collect::<Vec<_>>()
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(f64::INFINITY, f64::min);
    while iterations < max_iter && state.spread() > tol.max(HANDOVER_SPREAD) && eps >= 1e-14 {
        iterations += 1;
        let k = (0..=n).min_by(|&i, &j| state.norms[i].total_cmp(&state.norms[j])).unwrap();
        let mut nodes = state.nodes.clone();
        if k == 0 {
            nodes[0] += eps;
        } else if k == n {
            nodes[n - 1] -= eps;
        } else {
            nodes[k - 1] -= eps;
            nodes[k] += eps;
        }
        if admissible(&nodes) {
            let trial = State::new(c, nodes);
            if accept(&state, &trial) {
                state = trial;
                history.push(state.max_norm());
                continue;
            }
        }
        eps *= 0.5;
    }

    // phase two: damped Newton on log N_k − log N_{k+1} = 0
    while iterations < max_iter && state.spread() > tol {
        iterations += 1;
        let logs: Vec<f64> = state.norms.iter().map(|v| v.ln()).collect();
        let d = state.log_norm_jacobian();
        let jac = DMatrix::from_fn(n, n, |k, j| d[(k, j)] - d[(k + 1, j)]);
        let rhs = DVector::from_fn(n, |k, _| -(logs[k] - logs[k + 1]));
        let Some(step) = jac.full_piv_lu().solve(&rhs) else { break };
        let mut scale = 1.0;
        let mut moved = false;
        for _ in 0..40 {
            let nodes: Vec<f64> = state.nodes.iter().zip(step.iter()).map(|(x, s)| x + scale * s).collect();
            if admissible(&nodes) {
                let trial = State::new(c, nodes);
                if accept(&state, &trial) {
                    state = trial;
                    history.push(state.max_norm());
                    moved = true;
                    break;
                }
            }
            scale *= 0.5;
        }
        if !moved {
            break;
        }
    }

    let converged = state.spread() <= tol;
    let report = alternance_of(|x| state.residual(x), -1.0, 1.0, ALTERNANCE_TOL)?;
    let spf = spf_of(&state.q)?;
    Ok(RemezResult {
        spf,
        spread: state.spread(),
        deviation: state.max_norm(),
        q: state.q,
        nodes: state.nodes,
        interval_norms: state.norms,
        report,
        iterations,
        converged,
        in_guaranteed_regime: c.abs() < n as f64 / 8.0,
        history,
    })
}

fn accept(old: &State, new: &State) -> bool {
    new.spread() < old.spread() && new.max_norm() <= old.max_norm() * (1.0 + MONOTONE_SLACK)
}
