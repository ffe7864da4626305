//! The discrete moment problem `Σ μ_k λ_k^m = s_m`, `m < 2n`, and the
//! regularized differentiation and extrapolation sums built on it.

use serde::{Deserialize, Serialize};

use super::{moments, AFSum};
use crate::error::{require, Result, SpfError};
use crate::numkit::linalg::solve_full_pivot;
use crate::numkit::{find_roots, CMatrix, ComplexPolynomial, PowerSeries, DEFAULT_ROOT_TOL};
use crate::C64;

/// Hankel systems at or above this condition number count as irregular.
pub const HANKEL_COND_LIMIT: f64 = 1e12;
const MIN_SEPARATION: f64 = 1e-7;
const MAX_PERTURBATIONS: u32 = 40;
/// Relative moment reproduction required of a regular solution.
const MOMENT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PronySolution {
    pub moments: Vec<C64>,
    /// Monic `G(λ) = λ^n + Σ g_i λ^i`; `None` when the Hankel system is singular.
    pub generating: Option<ComplexPolynomial>,
    pub amps: Vec<C64>,
    pub freqs: Vec<C64>,
    pub condition: f64,
    pub regular: bool,
}

impl PronySolution {
    fn irregular(moments: &[C64], condition: f64) -> Self {
        Self {
            moments: moments.to_vec(),
            generating: None,
            amps: Vec::new(),
            freqs: Vec::new(),
            condition,
            regular: false,
        }
    }

    /// `max_m |Σ μ_k λ_k^m − s_m| / max(1, |s_m|)`.
    pub fn moment_error(&self) -> f64 {
        let got = moments(&self.amps, &self.freqs, self.moments.len());
        got.iter()
            .zip(&self.moments)
            .map(|(g, s)| (g - s).norm() / s.norm().max(1.0))
            .fold(0.0, f64::max)
    }

    pub fn af_sum(&self, base: PowerSeries) -> AFSum {
        AFSum {
            amps: self.amps.clone(),
            freqs: self.freqs.clone(),
            base,
        }
    }
}

/// Recover `n = s.len()/2` amplitudes and frequencies from `2n` moments.
///
/// The instance is regular when the Hankel matrix has condition below
/// [`HANKEL_COND_LIMIT`], the frequencies are separated by more than
/// `1e-7·max|λ|`, no amplitude vanishes and all `2n` moments are reproduced
/// to `1e-8` relative.
pub fn prony_solve(s: &[C64]) -> Result<PronySolution> {
    require(!s.is_empty() && s.len().is_multiple_of(2), || format!("need 2n moments, got {}", s.len()))?;
    let n = s.len() / 2;
    let hankel = CMatrix::from_fn(n, n, |m, i| s[m + i]);
    let rhs: Vec<C64> = (0..n).map(|m| -s[m + n]).collect();
    let (g, cond) = match solve_full_pivot(&hankel, &rhs) {
        Ok(v) => v,
        Err(_) => return Ok(PronySolution::irregular(s, f64::INFINITY)),
    };
    if !(cond < HANKEL_COND_LIMIT) {
        return Ok(PronySolution::irregular(s, cond));
    }
    let mut coeffs = g;
    coeffs.push(C64::new(1.0, 0.0));
    let generating = ComplexPolynomial::new(coeffs);
    let mut freqs = find_roots(&generating, DEFAULT_ROOT_TOL)?.roots;
    freqs.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));

    let scale = freqs.iter().map(|l| l.norm()).fold(0.0, f64::max);
    let mut separated = true;
    for i in 0..n {
        for j in i + 1..n {
            if (freqs[i] - freqs[j]).norm() <= MIN_SEPARATION * scale {
                separated = false;
            }
        }
    }
    let mut out = PronySolution {
        moments: s.to_vec(),
        generating: Some(generating),
        amps: Vec::new(),
        freqs,
        condition: cond,
        regular: false,
    };
    if !separated {
        return Ok(out);
    }
    let vander = CMatrix::from_fn(n, n, |m, k| out.freqs[k].powu(m as u32));
    let Ok((amps, _)) = solve_full_pivot(&vander, &s[..n]) else {
        return Ok(out);
    };
    let top = amps.iter().map(|a| a.norm()).fold(0.0, f64::max);
    out.amps = amps;
    out.regular = top > 0.0 && out.amps.iter().all(|a| a.norm() > 1e-12 * top) && out.moment_error() <= MOMENT_TOL;
    Ok(out)
}

/// `n`-point Gauss–Legendre rule on `[−1, 1]` from the moments
/// `(1 + (−1)^m)/(m + 1)`; `freqs` are the nodes, `amps` the weights.
pub fn gauss_rule(n: usize) -> Result<PronySolution> {
    require(n >= 1, || "n must be at least 1".into())?;
    let s: Vec<C64> = (0..2 * n)
        .map(|m| C64::new(if m % 2 == 0 { 2.0 / (m + 1) as f64 } else { 0.0 }, 0.0))
        .collect();
    prony_solve(&s)
}

/// `Σ μ_k h(λ_k x) ≈ (1/x)∫_{−x}^{x} h`, with error `O(x^{2n})`.
pub fn gauss_quadrature(h: &PowerSeries, n: usize) -> Result<AFSum> {
    let rule = gauss_rule(n)?;
    if !rule.regular {
        return Err(SpfError::Degenerate(format!(
            "Gauss moment system irregular at n = {n} (cond {:e})",
            rule.condition
        )));
    }
    Ok(rule.af_sum(h.clone()))
}

/// Multipliers tried in turn when the requested parameter is irregular:
/// the smallest perturbation first.
fn perturbed(p: f64, attempt: u32) -> f64 {
    if attempt == 0 {
        return p;
    }
    let eps = 2f64.powi(-((MAX_PERTURBATIONS + 1 - attempt) as i32));
    if p == 0.0 {
        eps
    } else {
        p * (1.0 + eps)
    }
}

fn first_regular(
    p: f64,
    mut build: impl FnMut(f64) -> Result<PronySolution>,
) -> Result<(f64, u32, PronySolution)> {
    for attempt in 0..=MAX_PERTURBATIONS {
        let pj = perturbed(p, attempt);
        let sol = build(pj)?;
        if sol.regular {
            return Ok((pj, attempt, sol));
        }
    }
    Err(SpfError::NoRegularParameter {
        attempts: MAX_PERTURBATIONS as usize + 1,
    })
}

/// `z h'(z) ≈ −p h_{n−1} z^{n−1} − q h_{2n−1} z^{2n−1} + Σ μ_k h(λ_k z)`,
/// exact through degree `2n − 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegDiff {
    pub n: usize,
    pub p_requested: f64,
    pub p: f64,
    pub q: f64,
    pub attempts: u32,
    pub solution: PronySolution,
}

impl RegDiff {
    pub fn eval(&self, h: &PowerSeries, z: C64) -> C64 {
        let n = self.n;
        let sum: C64 = self
            .solution
            .amps
            .iter()
            .zip(&self.solution.freqs)
            .map(|(&m, &l)| m * h.eval(l * z))
            .sum();
        sum - self.p * h.coeff(n - 1) * z.powu(n as u32 - 1) - self.q * h.coeff(2 * n - 1) * z.powu(2 * n as u32 - 1)
    }
}

fn reg_diff_q(n: usize, p: f64) -> f64 {
    let nf = n as f64;
    -2.0 * p * (3.0 * p + nf * nf - 1.0) / ((nf - 1.0) * (nf - 2.0))
}

fn reg_diff_moments(n: usize, p: f64) -> Vec<C64> {
    let mut s: Vec<C64> = (0..2 * n).map(|m| C64::new(m as f64, 0.0)).collect();
    s[n - 1] += p;
    s[2 * n - 1] += reg_diff_q(n, p);
    s
}

/// Regularized differentiation sum with `n ≥ 3` terms and parameter `p`.
pub fn reg_diff(n: usize, p: f64) -> Result<RegDiff> {
    require(n >= 3, || format!("need n >= 3, got {n}"))?;
    require(p.is_finite(), || "p must be finite".into())?;
    let (p_used, attempts, solution) = first_regular(p, |pj| prony_solve(&reg_diff_moments(n, pj)))?;
    Ok(RegDiff {
        n,
        p_requested: p,
        p: p_used,
        q: reg_diff_q(n, p_used),
        attempts,
        solution,
    })
}

/// `λ^n − 6λ·(λ^{n−1} − (n−1)λ + n − 2)/((n−1)(n−2)(λ−1)²) + 2 + 6p/((n−1)(n−2))`.
pub fn reg_diff_closed_form(n: usize, p: f64) -> Result<ComplexPolynomial> {
    require(n >= 3, || format!("need n >= 3, got {n}"))?;
    let nf = n as f64;
    let k = (nf - 1.0) * (nf - 2.0);
    let mut num = vec![0.0; n];
    num[n - 1] = 1.0;
    num[1] -= nf - 1.0;
    num[0] += nf - 2.0;
    let (quot, rem) = ComplexPolynomial::from_real(&num).div_rem(&ComplexPolynomial::from_real(&[1.0, -2.0, 1.0]));
    debug_assert!(rem.max_abs_coeff() < 1e-9);
    let mut c = vec![C64::new(0.0, 0.0); n + 1];
    c[n] += 1.0;
    for (i, &a) in quot.coeffs().iter().enumerate() {
        c[i + 1] -= 6.0 * a / k;
    }
    c[0] += 2.0 + 6.0 * p / k;
    Ok(ComplexPolynomial::new(c))
}

/// `h(az) ≈ −p h_{n−1} z^{n−1} + Σ μ_k h(λ_k z)`, exact through degree `2n − 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegExtrap {
    pub a: f64,
    pub n: usize,
    pub p_requested: f64,
    pub p: f64,
    pub attempts: u32,
    /// Frequencies satisfy `|λ_k| < δ·a`.
    pub delta: f64,
    pub solution: PronySolution,
}

impl RegExtrap {
    pub fn eval(&self, h: &PowerSeries, z: C64) -> C64 {
        let sum: C64 = self
            .solution
            .amps
            .iter()
            .zip(&self.solution.freqs)
            .map(|(&m, &l)| m * h.eval(l * z))
            .sum();
        sum - self.p * h.coeff(self.n - 1) * z.powu(self.n as u32 - 1)
    }

    /// `Σ_{m≥2n} |h_m| |az|^m` over the known coefficients of `h`.
    pub fn remainder_bound(&self, h: &PowerSeries, z: C64) -> f64 {
        let r = self.a * z.norm();
        (2 * self.n..h.order()).map(|m| h.coeff(m).norm() * r.powi(m as i32)).sum()
    }

    pub fn max_frequency(&self) -> f64 {
        self.solution.freqs.iter().map(|l| l.norm()).fold(0.0, f64::max)
    }
}

fn reg_extrap_delta(a: f64, n: usize, p: f64) -> f64 {
    (1.0 + p / (n as f64 * a.powi(n as i32 - 1))).powf(-1.0 / n as f64)
}

/// Regularized extrapolation sum with ratio `a > 0`, `n` terms and `p > 0`.
pub fn reg_extrap(a: f64, n: usize, p: f64) -> Result<RegExtrap> {
    require(a > 0.0 && a.is_finite(), || format!("need a > 0, got {a}"))?;
    require(n >= 1, || "n must be at least 1".into())?;
    require(p > 0.0 && p.is_finite(), || format!("need p > 0, got {p}"))?;
    let (p_used, attempts, solution) = first_regular(p, |pj| {
        let mut s: Vec<C64> = (0..2 * n).map(|m| C64::new(a.powi(m as i32), 0.0)).collect();
        s[n - 1] += pj;
        prony_solve(&s)
    })?;
    Ok(RegExtrap {
        a,
        n,
        p_requested: p,
        p: p_used,
        attempts,
        delta: reg_extrap_delta(a, n, p_used),
        solution,
    })
}

/// `λ^n − a^n/(n a^{n−1} + p) · (λ^n − a^n)/(λ − a)`.
pub fn reg_extrap_closed_form(a: f64, n: usize, p: f64) -> ComplexPolynomial {
    let k = a.powi(n as i32) / (n as f64 * a.powi(n as i32 - 1) + p);
    let mut c = vec![C64::new(0.0, 0.0); n + 1];
    c[n] = C64::new(1.0, 0.0);
    for i in 0..n {
        c[i] -= k * a.powi((n - 1 - i) as i32);
    }
    ComplexPolynomial::new(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use crate::spf::pole_distance;
    use nalgebra::{DMatrix, SymmetricEigen};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn real_moments(v: &[f64]) -> Vec<C64> {
        v.iter().map(|&x| c64(x, 0.0)).collect()
    }

    fn coeff_distance(a: &ComplexPolynomial, b: &ComplexPolynomial) -> f64 {
        let n = a.coeffs().len().max(b.coeffs().len());
        (0..n).map(|i| (a.coeff(i) - b.coeff(i)).norm()).fold(0.0, f64::max)
    }

    /// Golub–Welsch: eigen-decomposition of the Legendre Jacobi matrix.
    fn golub_welsch(n: usize) -> Vec<(f64, f64)> {
        let j = DMatrix::from_fn(n, n, |r, c| {
            let k = r.max(c) as f64;
            if r.abs_diff(c) == 1 {
                k / (4.0 * k * k - 1.0).sqrt()
            } else {
                0.0
            }
        });
        let eig = SymmetricEigen::new(j);
        let mut out: Vec<(f64, f64)> = (0..n)
            .map(|i| (eig.eigenvalues[i], 2.0 * eig.eigenvectors[(0, i)].powi(2)))
            .collect();
        out.sort_by(|a, b| a.0.total_cmp(&b.0));
        out
    }

    #[test]
    fn two_term_example() {
        let sol = prony_solve(&real_moments(&[4.0, -1.0, 7.0, 5.0])).unwrap();
        assert!(sol.regular);
        assert!((sol.freqs[0] - c64(-1.0, 0.0)).norm() < 1e-12);
        assert!((sol.freqs[1] - c64(2.0, 0.0)).norm() < 1e-12);
        assert!((sol.amps[0] - c64(3.0, 0.0)).norm() < 1e-12);
        assert!((sol.amps[1] - c64(1.0, 0.0)).norm() < 1e-12);
        assert!(sol.moment_error() < 1e-12);
    }

    #[test]
    fn irregular_instances() {
        // single frequency repeated: Hankel singular
        let sol = prony_solve(&real_moments(&[1.0, 1.0, 1.0, 1.0])).unwrap();
        assert!(!sol.regular);
        assert!(prony_solve(&real_moments(&[1.0, 2.0, 3.0])).is_err());
    }

    #[test]
    fn gauss_matches_golub_welsch() {
        let g2 = gauss_rule(2).unwrap();
        let r = 1.0 / 3f64.sqrt();
        assert!((g2.freqs[0] - c64(-r, 0.0)).norm() < 1e-13);
        assert!((g2.amps[0] - c64(1.0, 0.0)).norm() < 1e-13);
        for n in 1..=8 {
            let g = gauss_rule(n).unwrap();
            assert!(g.regular, "n={n} cond={}", g.condition);
            assert!((g.amps.iter().sum::<C64>() - c64(2.0, 0.0)).norm() < 1e-9);
            let oracle = golub_welsch(n);
            for (k, (x, w)) in oracle.iter().enumerate() {
                assert!((g.freqs[k] - c64(*x, 0.0)).norm() < 1e-8, "n={n} node {k}");
                assert!((g.amps[k] - c64(*w, 0.0)).norm() < 1e-8, "n={n} weight {k}");
            }
        }
    }

    #[test]
    fn gauss_sum_integrates() {
        // (1/x)∫_{−x}^{x} e^t dt = 2 sinh(x)/x
        let h = PowerSeries::exp_z(30);
        let q = gauss_quadrature(&h, 5).unwrap();
        let x = 0.5;
        let got = q.eval(c64(x, 0.0));
        assert!((got.re - 2.0 * x.sinh() / x).abs() < 1e-10);
        assert!(q.freqs.iter().all(|l| l.im.abs() < 1e-12 && l.re.abs() < 1.0));
        assert!(q.amps.iter().all(|a| a.re > 0.0));
    }

    #[test]
    fn random_regular_recovery() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for trial in 0..40 {
            let n = 1 + trial % 8;
            let mut freqs: Vec<C64> = Vec::new();
            while freqs.len() < n {
                let l = C64::from_polar(rng.gen_range(0.6..1.0), rng.gen_range(0.0..std::f64::consts::TAU));
                if freqs.iter().all(|f| (f - l).norm() > 0.25) {
                    freqs.push(l);
                }
            }
            let amps: Vec<C64> = (0..n)
                .map(|_| C64::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(0.0..std::f64::consts::TAU)))
                .collect();
            let sol = prony_solve(&moments(&amps, &freqs, 2 * n)).unwrap();
            assert!(sol.regular, "trial {trial}");
            assert!(pole_distance(&sol.freqs, &freqs) < 1e-7, "trial {trial}");
            for (a, l) in amps.iter().zip(&freqs) {
                let k = (0..n).min_by(|&i, &j| (sol.freqs[i] - l).norm().total_cmp(&(sol.freqs[j] - l).norm())).unwrap();
                assert!((sol.amps[k] - a).norm() < 1e-7 * a.norm(), "trial {trial}");
            }
        }
    }

    #[test]
    fn reg_diff_small_case() {
        let r = reg_diff(3, 1.0).unwrap();
        assert_eq!(r.attempts, 0);
        assert!((r.q + 11.0).abs() < 1e-15);
        let g = r.solution.generating.as_ref().unwrap();
        assert!(coeff_distance(g, &ComplexPolynomial::from_real(&[5.0, -3.0, 0.0, 1.0])) < 1e-12);
        assert!(coeff_distance(&reg_diff_closed_form(3, 1.0).unwrap(), g) < 1e-12);
    }

    #[test]
    fn reg_diff_matches_closed_form_and_differentiates() {
        for n in 3..=8 {
            for p in [0.5, 1.0, 2.0] {
                let r = reg_diff(n, p).unwrap();
                let g = r.solution.generating.as_ref().unwrap();
                let want = reg_diff_closed_form(n, r.p).unwrap();
                assert!(coeff_distance(g, &want) < 1e-8 * want.max_abs_coeff(), "n={n} p={p}");
                let z = c64(0.4, 0.2);
                for j in 0..2 * n {
                    let mut c = vec![0.0; j + 1];
                    c[j] = 1.0;
                    let h = PowerSeries::from_real(&c);
                    let want = j as f64 * z.powu(j as u32);
                    assert!((r.eval(&h, z) - want).norm() < 1e-8, "n={n} p={p} j={j}");
                }
            }
        }
        assert!(reg_diff(2, 1.0).is_err());
    }

    #[test]
    fn reg_extrap_small_case() {
        let r = reg_extrap(2.0, 2, 1.0).unwrap();
        let g = r.solution.generating.as_ref().unwrap();
        assert!(coeff_distance(g, &ComplexPolynomial::from_real(&[-1.6, -0.8, 1.0])) < 1e-12);
        let want = [c64(0.4 - 1.76f64.sqrt(), 0.0), c64(0.4 + 1.76f64.sqrt(), 0.0)];
        assert!(pole_distance(&r.solution.freqs, &want) < 1e-12);
        assert!((r.solution.freqs[1].re - 1.7266).abs() < 1e-4);
    }

    #[test]
    fn reg_extrap_bound_shrinks_and_identity_holds() {
        for a in [1.5, 2.0, 3.0] {
            for n in 1..=6 {
                let mut last = f64::INFINITY;
                for p in [0.25, 0.5, 1.0, 2.0, 4.0] {
                    let r = reg_extrap(a, n, p).unwrap();
                    let g = r.solution.generating.as_ref().unwrap();
                    let want = reg_extrap_closed_form(a, n, r.p);
                    assert!(coeff_distance(g, &want) < 1e-9 * want.max_abs_coeff());
                    let max = r.max_frequency();
                    assert!(max <= r.delta * a * (1.0 + 1e-12), "a={a} n={n} p={p}");
                    assert!(max <= last + 1e-12);
                    last = max;
                    let z = c64(0.3, -0.1);
                    for j in 0..2 * n {
                        let mut c = vec![0.0; j + 1];
                        c[j] = 1.0;
                        let h = PowerSeries::from_real(&c);
                        let exact = (a * z).powu(j as u32);
                        assert!((r.eval(&h, z) - exact).norm() < 1e-9 * (1.0 + exact.norm()));
                    }
                    let h = PowerSeries::exp_z(30);
                    let err = (h.eval(a * z) - r.eval(&h, z)).norm();
                    assert!(err <= r.remainder_bound(&h, z) * (1.0 + 1e-9) + 1e-14);
                }
            }
        }
    }
}
