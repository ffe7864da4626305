//! Simple partial fractions `ρ(z) = Σ 1/(z − z_k)` and the differential
//! operator tower behind interpolation reduction and the SPF ODE.

mod tower;

pub use tower::{build_tower, ode_residual, DiffOperatorTower, MAX_TOWER_DEPTH};

use serde::{Deserialize, Serialize};

use crate::error::{Result, SpfError};
use crate::numkit::{find_roots, ComplexPolynomial, DEFAULT_ROOT_TOL};
use crate::C64;

/// Logarithmic derivative of `Q(z) = Π (z − z_k)`.
///
/// Poles are a multiset: a pole of multiplicity `m` appears `m` times. Poles at
/// infinity are simply not stored, so `order()` counts finite poles only and
/// the empty fraction is `ρ ≡ 0`.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct SimpleFraction {
    pub poles: Vec<C64>,
}

impl SimpleFraction {
    pub fn new(poles: Vec<C64>) -> Self {
        Self { poles }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn order(&self) -> usize {
        self.poles.len()
    }

    /// `ρ^{(s)}(z) = Σ_k (−1)^s s! (z − z_k)^{−s−1}`.
    pub fn eval(&self, z: C64, s: usize) -> Result<C64> {
        let mut factor = 1.0;
        for i in 1..=s {
            factor *= -(i as f64);
        }
        let mut acc = C64::new(0.0, 0.0);
        for &p in &self.poles {
            let d = z - p;
            if d == C64::new(0.0, 0.0) {
                return Err(SpfError::PoleEvaluation(z));
            }
            acc += d.powi(-(s as i32) - 1);
        }
        Ok(acc * factor)
    }

    /// `ρ(z)`.
    pub fn value(&self, z: C64) -> Result<C64> {
        self.eval(z, 0)
    }

    /// `ρ(x)` on the real line; the real part when the fraction is real-valued.
    pub fn value_real(&self, x: f64) -> f64 {
        self.poles
            .iter()
            .map(|&p| (C64::new(1.0, 0.0) / (C64::new(x, 0.0) - p)).re)
            .sum()
    }

    /// All derivatives `ρ^{(0)}(z) … ρ^{(s)}(z)`.
    pub fn derivatives(&self, z: C64, s: usize) -> Result<Vec<C64>> {
        (0..=s).map(|k| self.eval(z, k)).collect()
    }

    /// The poles of `Q'/Q`; constant `Q` gives the zero fraction.
    pub fn from_polynomial(q: &ComplexPolynomial) -> Result<Self> {
        match q.degree() {
            None => Err(SpfError::Precondition("Q must not be identically zero".into())),
            Some(0) => Ok(Self::zero()),
            Some(_) => Ok(Self::new(find_roots(q, DEFAULT_ROOT_TOL)?.roots)),
        }
    }

    /// Monic generating polynomial `Q = Π (z − z_k)`.
    pub fn denominator(&self) -> ComplexPolynomial {
        ComplexPolynomial::from_roots(&self.poles)
    }

    /// `(Q', Q)`.
    pub fn to_rational(&self) -> (ComplexPolynomial, ComplexPolynomial) {
        let q = self.denominator();
        (q.derivative(), q)
    }

    /// First `count` Maclaurin coefficients, `ρ_m = −Σ_k z_k^{−m−1}`.
    pub fn maclaurin(&self, count: usize) -> Result<Vec<C64>> {
        let mut out = vec![C64::new(0.0, 0.0); count];
        for &p in &self.poles {
            if p == C64::new(0.0, 0.0) {
                return Err(SpfError::PoleEvaluation(p));
            }
            let inv = C64::new(1.0, 0.0) / p;
            let mut pw = inv;
            for c in out.iter_mut() {
                *c -= pw;
                pw *= inv;
            }
        }
        Ok(out)
    }

    /// Poles closed under conjugation within `tol` (real-valued on ℝ).
    pub fn is_real_valued(&self, tol: f64) -> bool {
        let mut used = vec![false; self.poles.len()];
        for (i, p) in self.poles.iter().enumerate() {
            if used[i] {
                continue;
            }
            if p.im.abs() <= tol * (1.0 + p.norm()) {
                used[i] = true;
                continue;
            }
            let partner = (0..self.poles.len())
                .filter(|&j| j != i && !used[j])
                .min_by(|&a, &b| {
                    (self.poles[a] - p.conj())
                        .norm()
                        .total_cmp(&(self.poles[b] - p.conj()).norm())
                });
            match partner {
                Some(j) if (self.poles[j] - p.conj()).norm() <= tol * (1.0 + p.norm()) => {
                    used[i] = true;
                    used[j] = true;
                }
                _ => return false,
            }
        }
        true
    }
}

/// Symmetric Hausdorff distance between pole sets, measured with
/// `|a − b| / max(1, |a|, |b|)` so that large poles compare relatively.
pub fn pole_distance(a: &[C64], b: &[C64]) -> f64 {
    if a.is_empty() && b.is_empty() {
        return 0.0;
    }
    if a.is_empty() || b.is_empty() {
        return f64::INFINITY;
    }
    let d = |x: C64, y: C64| (x - y).norm() / 1f64.max(x.norm()).max(y.norm());
    let one_way = |p: &[C64], q: &[C64]| {
        p.iter()
            .map(|&x| q.iter().map(|&y| d(x, y)).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    one_way(a, b).max(one_way(b, a))
}
