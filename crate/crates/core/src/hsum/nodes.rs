//! Node systems that depend only on `n` (and `a`): numerical
//! differentiation, integration and extrapolation by h-sums.

use serde::{Deserialize, Serialize};

use super::roots_of_power_sums;
use crate::error::{require, Result, SpfError};
use crate::numkit::{find_roots, power_sums, ComplexPolynomial, PowerSeries, DEFAULT_ROOT_TOL};
use crate::par;
use crate::C64;

/// Largest number of index tuples the `μ`-fold extrapolation sum may visit.
pub const MAX_TUPLES: usize = 1_000_000;

fn real_sums(n: usize, f: impl Fn(usize) -> f64) -> Vec<C64> {
    (1..=n).map(|j| C64::new(f(j), 0.0)).collect()
}

/// Nodes with `S_j = j`, `j = 1..n`: `z h'(z) = −h(z) + Σ λ_k h(λ_k z)` for
/// every polynomial `h` of degree below `n`.
pub fn diff_nodes(n: usize) -> Result<Vec<C64>> {
    require(n >= 1, || "n must be at least 1".into())?;
    roots_of_power_sums(&real_sums(n, |j| j as f64))
}

/// Nodes with `S_j = 1/j`: `∫₀^z h = z Σ λ_k h(λ_k z)` for degree below `n`.
pub fn int_nodes(n: usize) -> Result<Vec<C64>> {
    require(n >= 1, || "n must be at least 1".into())?;
    roots_of_power_sums(&real_sums(n, |j| 1.0 / j as f64))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NodeKind {
    Differentiation,
    Integration,
}

/// `P_k = λ P_{k−1} − v_k`, `P_0 = 1`, `v_1 = −1`, with
/// `v_k = 1 + Σ_{j<k} (1 − j/k) v_j` (differentiation) or
/// `v_k = 1/k² + Σ_{j<k} v_j/(k(k − j))` (integration) for `k ≥ 2`.
///
/// Kept for comparison: its roots are the negatives of [`diff_nodes`] and
/// [`int_nodes`].
pub fn literal_recurrence(kind: NodeKind, n: usize) -> ComplexPolynomial {
    let mut v = vec![0.0; n + 1];
    if n >= 1 {
        v[1] = -1.0;
    }
    for k in 2..=n {
        let kf = k as f64;
        v[k] = match kind {
            NodeKind::Differentiation => 1.0 + (1..k).map(|j| (1.0 - j as f64 / kf) * v[j]).sum::<f64>(),
            NodeKind::Integration => 1.0 / (kf * kf) + (1..k).map(|j| v[j] / (kf * (k - j) as f64)).sum::<f64>(),
        };
    }
    // P_n = λ^n − v_1 λ^{n−1} − … − v_n
    let mut c = vec![C64::new(0.0, 0.0); n + 1];
    c[n] = C64::new(1.0, 0.0);
    for k in 1..=n {
        c[n - k] = C64::new(-v[k], 0.0);
    }
    ComplexPolynomial::new(c)
}

pub fn diff_nodes_literal(n: usize) -> Result<Vec<C64>> {
    require(n >= 1, || "n must be at least 1".into())?;
    Ok(find_roots(&literal_recurrence(NodeKind::Differentiation, n), DEFAULT_ROOT_TOL)?.roots)
}

pub fn int_nodes_literal(n: usize) -> Result<Vec<C64>> {
    require(n >= 1, || "n must be at least 1".into())?;
    Ok(find_roots(&literal_recurrence(NodeKind::Integration, n), DEFAULT_ROOT_TOL)?.roots)
}

/// Frequencies with `S_m = a^{m−1}`, `m = 1..n`.
pub fn extrap_freqs(a: f64, n: usize) -> Result<Vec<C64>> {
    require(a > 1.0, || format!("need a > 1, got {a}"))?;
    require(n >= 1, || "n must be at least 1".into())?;
    roots_of_power_sums(&real_sums(n, |m| a.powi(m as i32 - 1)))
}

/// `Σ_{k_1..k_μ} λ_{k_1}⋯λ_{k_μ} h(λ_{k_1}⋯λ_{k_μ} z/a^μ)`, exact when `h`
/// is a polynomial of degree below `n`.
pub fn extrapolate(h: &PowerSeries, a: f64, n: usize, mu: usize, z: C64) -> Result<C64> {
    require(mu >= 1, || "mu must be at least 1".into())?;
    let tuples = (n as f64).powi(mu as i32);
    if tuples > MAX_TUPLES as f64 {
        return Err(SpfError::TooLarge(format!("n^mu = {tuples} exceeds {MAX_TUPLES}")));
    }
    let lambdas = extrap_freqs(a, n)?;
    let scale = a.powi(-(mu as i32));
    // one block per leading index; blocks are summed in index order
    let blocks = par::map_range(n, |first| {
        let mut acc = C64::new(0.0, 0.0);
        let inner = n.pow(mu as u32 - 1);
        for idx in 0..inner {
            let mut prod = lambdas[first];
            let mut rest = idx;
            for _ in 1..mu {
                prod *= lambdas[rest % n];
                rest /= n;
            }
            acc += prod * h.eval(prod * scale * z);
        }
        acc
    });
    Ok(blocks.into_iter().sum())
}

/// `Σ_{m≥n} h_m (1 − (S_{m+1}/a^m)^μ) z^m` over the known coefficients of `h`.
pub fn extrapolation_remainder(h: &PowerSeries, a: f64, n: usize, mu: usize, z: C64) -> Result<C64> {
    let lambdas = extrap_freqs(a, n)?;
    let s = power_sums(&lambdas, h.order() + 1);
    let mut acc = C64::new(0.0, 0.0);
    for m in n..h.order() {
        let ratio = s[m] / a.powi(m as i32);
        acc += h.coeff(m) * (C64::new(1.0, 0.0) - ratio.powu(mu as u32)) * z.powu(m as u32);
    }
    Ok(acc)
}

/// `Σ_{m≥n} |h_m||z|^m`.
pub fn extrapolation_remainder_bound(h: &PowerSeries, n: usize, z: C64) -> f64 {
    (n..h.order()).map(|m| h.coeff(m).norm() * z.norm().powi(m as i32)).sum()
}
