//! Norms of simple partial fractions on the real line and on circles:
//! notch points of Blaschke products, exact L2 quadrature, inequalities between
//! different metrics and Markov–Bernstein type derivative bounds.

mod checks;
mod notch;
mod realline;

pub use checks::{
    circle_derivative_check, derivative_suite, halfplane_checks, inequality_suite, CheckOutcome, CheckReport,
    DerivativeSelector, InequalitySelector,
};
pub use notch::{l2_quadrature, l2_quadrature_nu, notch_points, NotchSet};
pub use realline::{integrate_real_line, lp_norm, lp_norm_segment, sup_real_line, sup_segment};

use serde::{Deserialize, Serialize};

use crate::error::{require, Result};
use crate::spf::SimpleFraction;
use crate::C64;

/// Poles strictly in the upper half-plane.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HalfPlanePoles {
    pub poles: Vec<C64>,
}

impl HalfPlanePoles {
    pub fn new(poles: Vec<C64>) -> Result<Self> {
        require(!poles.is_empty(), || "need at least one pole".into())?;
        require(poles.iter().all(|p| p.im > 0.0 && p.re.is_finite()), || {
            "every pole must have positive imaginary part".into()
        })?;
        Ok(Self { poles })
    }

    pub fn n(&self) -> usize {
        self.poles.len()
    }

    pub fn spf(&self) -> SimpleFraction {
        SimpleFraction::new(self.poles.clone())
    }

    /// `ρ(x)` for real `x`.
    pub fn rho(&self, x: f64) -> C64 {
        self.poles.iter().map(|&p| C64::new(1.0, 0.0) / (C64::new(x, 0.0) - p)).sum()
    }

    /// `ρ'(x)`.
    pub fn rho_prime(&self, x: f64) -> C64 {
        self.poles
            .iter()
            .map(|&p| {
                let d = C64::new(x, 0.0) - p;
                -C64::new(1.0, 0.0) / (d * d)
            })
            .sum()
    }

    /// `μ(x) = Im ρ(x) = Σ y_k/|x − z_k|²`.
    pub fn mu(&self, x: f64) -> f64 {
        self.poles.iter().map(|p| p.im / ((x - p.re).powi(2) + p.im * p.im)).sum()
    }

    /// `ν(x) = Re ρ(x) = Σ (x − x_k)/|x − z_k|²`.
    pub fn nu(&self, x: f64) -> f64 {
        self.poles.iter().map(|p| (x - p.re) / ((x - p.re).powi(2) + p.im * p.im)).sum()
    }

    /// Continuous argument of `B(x) = Π (x − z_k)/(x − z̄_k)`, increasing from
    /// `−2πn` to `0`.
    pub fn arg_b(&self, x: f64) -> f64 {
        self.poles.iter().map(|p| -2.0 * p.im.atan2(x - p.re)).sum()
    }

    pub fn blaschke(&self, x: f64) -> C64 {
        let z = C64::new(x, 0.0);
        self.poles.iter().map(|&p| (z - p) / (z - p.conj())).product()
    }

    /// Centre and spread of the pole cloud, used to scale real-line searches.
    pub(crate) fn centre_and_radius(&self) -> (f64, f64) {
        centre_and_radius(&self.poles)
    }
}

pub(crate) fn centre_and_radius(poles: &[C64]) -> (f64, f64) {
    let n = poles.len().max(1) as f64;
    let c = poles.iter().map(|p| p.re).sum::<f64>() / n;
    let r = poles.iter().map(|p| (p.re - c).abs() + p.im.abs()).fold(0.0, f64::max);
    (c, r.max(1e-3))
}
