//! Padé fractions: the SPF of order at most `n` whose Maclaurin expansion
//! agrees with a given series through `z^{n−1}`.

use super::spf_of;
use crate::error::{require, Result, SpfError};
use crate::numkit::{find_roots, poly_from_power_sums, PowerSeries, DEFAULT_ROOT_TOL};
use crate::spf::SimpleFraction;
use crate::C64;

/// Frequencies `λ` with `|λ|` at most this are poles at infinity.
pub const ZERO_FREQUENCY_TOL: f64 = 1e-12;

/// Padé SPF through Newton's identities.
///
/// With `ρ(z) = −Σ_m S_{m+1} z^m` where `S_m = Σ λ_k^m`, `λ_k = 1/z_k`, the
/// contact conditions read `S_m = −f_{m−1}`; the frequencies are the roots of
/// the polynomial with these power sums.
pub fn pade_spf(f: &PowerSeries, n: usize) -> Result<SimpleFraction> {
    require(n >= 1, || "contact order n must be at least 1".into())?;
    require(f.order() >= n, || format!("series has {} coefficients, need {n}", f.order()))?;
    let s: Vec<C64> = (0..n).map(|m| -f.coeff(m)).collect();
    let t = poly_from_power_sums(&s)?;
    let lambdas = find_roots(&t, DEFAULT_ROOT_TOL)?.roots;
    Ok(SimpleFraction::new(
        lambdas
            .into_iter()
            .filter(|l| l.norm() > ZERO_FREQUENCY_TOL)
            .map(|l| C64::new(1.0, 0.0) / l)
            .collect(),
    ))
}

/// Padé SPF as the logarithmic derivative of the degree-`n` partial sum of
/// `exp(∫₀^z f)`.
pub fn pade_spf_exp(f: &PowerSeries, n: usize) -> Result<SimpleFraction> {
    require(n >= 1, || "contact order n must be at least 1".into())?;
    require(f.order() >= n, || format!("series has {} coefficients, need {n}", f.order()))?;
    let q = f.truncate(n).integrate().exp();
    let q = crate::numkit::ComplexPolynomial::new(q.coeffs);
    if q.max_abs_coeff() == 0.0 {
        return Err(SpfError::Degenerate("generating polynomial vanished".into()));
    }
    spf_of(&q)
}

/// Remainder `f(z) − ρ(z)` from the series form
/// `(1/Q(z))·Σ_{k=n}^{M−1} z^k Σ_m q_m f_{k−m}`, `M` the number of known
/// coefficients of `f`.
pub fn pade_remainder(f: &PowerSeries, spf: &SimpleFraction, n: usize, z: C64) -> Result<C64> {
    require(spf.order() <= n, || format!("fraction order {} exceeds n = {n}", spf.order()))?;
    require(f.order() > 2 * n, || format!("need more than 2n = {} coefficients", 2 * n))?;
    let q = spf.denominator();
    let qz = q.eval(z);
    if qz.norm() <= f64::EPSILON * q.max_abs_coeff() {
        return Err(SpfError::PoleEvaluation(z));
    }
    let mut acc = C64::new(0.0, 0.0);
    let mut zk = z.powu(n as u32);
    for k in n..f.order() {
        let inner: C64 = q
            .coeffs()
            .iter()
            .enumerate()
            .take_while(|(m, _)| *m <= k)
            .map(|(m, &qm)| qm * f.coeff(k - m))
            .sum();
        acc += zk * inner;
        zk *= z;
    }
    Ok(acc / qz)
}

/// The root in `(0, 1)` of `ε² = (1 − ε)^{n+1}`.
pub fn eps_n(n: usize) -> f64 {
    let g = |e: f64| e * e - (1.0 - e).powi(n as i32 + 1);
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if g(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= f64::EPSILON * hi {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Upper bound on `|f(z) − ρ_n(z)|` valid for every `f` with
/// `|f_{m−1}| ≤ a^m`, at `|z| < r < (1 − ε_n)/a`.
pub fn pade_error_bound(a: f64, n: usize, z: C64, r: f64) -> Result<f64> {
    require(a > 0.0 && n >= 1, || format!("need a > 0 and n >= 1, got a = {a}, n = {n}"))?;
    let eps = eps_n(n);
    let az = z.norm();
    if !(az < r && r < (1.0 - eps) / a) {
        return Err(SpfError::Domain(format!(
            "need |z| < r < (1 - eps_n)/a = {}, got |z| = {az}, r = {r}",
            (1.0 - eps) / a
        )));
    }
    let ratio = (1.0 - eps + a * r) / (1.0 - eps - a * r);
    Ok(a / (1.0 - a * az)
        * (az / r).powi(n as i32)
        * ratio.powi(n as i32)
        * (std::f64::consts::E * r / (r - az)).ln())
}

/// Whether every root of the polynomial with power sums `S` lies strictly
/// inside `|λ| < a/(1 − ε_n)`, `n = S.len()`.
pub fn frequency_bound_check(s: &[C64], a: f64) -> Result<bool> {
    let n = s.len();
    let t = poly_from_power_sums(s)?;
    let limit = a / (1.0 - eps_n(n));
    Ok(find_roots(&t, DEFAULT_ROOT_TOL)?.roots.iter().all(|l| l.norm() < limit))
}
