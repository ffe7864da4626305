//! Two small examples showing how SPF approximation departs from the
//! classical Chebyshev theory.

use serde::{Deserialize, Serialize};

use crate::error::{require, Result};
use crate::numkit::supnorm::{local_extrema, DEFAULT_GRID};
use crate::numkit::{find_roots, ComplexPolynomial, DEFAULT_ROOT_TOL};
use crate::spf::SimpleFraction;
use crate::C64;

/// `(2x + λ)/(x² + λx + 1)`, poles on the unit circle for `|λ| < 2`.
pub fn nonuniqueness_fraction(lambda: f64) -> SimpleFraction {
    let q = ComplexPolynomial::from_real(&[1.0, lambda, 1.0]);
    SimpleFraction::from_polynomial(&q).expect("quadratic roots")
}

/// `e(x) = x + 1 − (2x + λ)/(x² + λx + 1)`; `e(±1) = 1` for every `λ`.
pub fn nonuniqueness_residual(lambda: f64) -> impl Fn(f64) -> f64 + Sync + Send {
    move |x| x + 1.0 - (2.0 * x + lambda) / (x * x + lambda * x + 1.0)
}

fn min_residual(lambda: f64) -> Result<f64> {
    let ext = local_extrema(nonuniqueness_residual(lambda), -1.0, 1.0, DEFAULT_GRID)?;
    Ok(ext.iter().map(|p| p.value).fold(f64::INFINITY, f64::min))
}

/// The `λ` at which `min e = −1`, so that the residual reaches `+1, −1, +1`.
pub fn lambda_star() -> f64 {
    let (mut lo, mut hi) = (1.0, 1.99);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        match min_residual(mid) {
            Ok(m) if m > -1.0 => lo = mid,
            _ => hi = mid,
        }
    }
    0.5 * (lo + hi)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroCount {
    pub n: usize,
    pub epsilon: f64,
    pub zeros: Vec<f64>,
    pub expected: usize,
    pub achieved: bool,
}

/// Real zeros in `(−1, 1)` of `P'Q − Q'P` for `P = ε + Π(x + 2^{−k})²`,
/// `Q = ε + Π(x − 2^{−k})²`, `k = 1..m`; there are `2n − 2` of them, `n = 2m`,
/// once `ε` is small. `ε` starts at `epsilon` and halves down to `1e-12`.
pub fn counterexample_2n_alternance(m: usize, epsilon: f64) -> Result<ZeroCount> {
    require(m >= 1, || "m must be at least 1".into())?;
    require(epsilon > 0.0, || "epsilon must be positive".into())?;
    let n = 2 * m;
    let expected = 2 * n - 2;
    let mut eps = epsilon;
    loop {
        let zeros = wronskian_zeros(m, eps)?;
        if zeros.len() == expected || eps * 0.5 < 1e-12 {
            return Ok(ZeroCount {
                n,
                epsilon: eps,
                achieved: zeros.len() == expected,
                zeros,
                expected,
            });
        }
        eps *= 0.5;
    }
}

fn wronskian_zeros(m: usize, eps: f64) -> Result<Vec<f64>> {
    let build = |sign: f64| {
        let mut p = ComplexPolynomial::one();
        for k in 1..=m {
            let s = sign * 0.5f64.powi(k as i32);
            let f = ComplexPolynomial::from_real(&[s, 1.0]);
            p = &(&p * &f) * &f;
        }
        &p + &ComplexPolynomial::constant(C64::new(eps, 0.0))
    };
    let p = build(1.0);
    let q = build(-1.0);
    let w = &(&p.derivative() * &q) - &(&q.derivative() * &p);
    let roots = find_roots(&w, DEFAULT_ROOT_TOL)?.roots;
    let mut zeros: Vec<f64> = roots
        .iter()
        .filter(|r| r.im.abs() <= 1e-7 * (1.0 + r.re.abs()) && r.re.abs() < 1.0)
        .map(|r| r.re)
        .collect();
    zeros.sort_by(f64::total_cmp);
    // a simple zero changes sign; drop merged pairs
    let sign = |x: f64| w.eval(C64::new(x, 0.0)).re.signum();
    let simple: Vec<f64> = zeros
        .iter()
        .copied()
        .filter(|&z| {
            let h = 1e-6 * (1.0 + z.abs());
            sign(z - h) != sign(z + h)
        })
        .collect();
    Ok(simple)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residual_is_one_at_ends() {
        for lambda in [0.0, 1.0, 1.5, 1.9] {
            let e = nonuniqueness_residual(lambda);
            assert!((e(-1.0) - 1.0).abs() < 1e-15);
            assert!((e(1.0) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn lambda_star_location() {
        let l = lambda_star();
        assert!((1.60..=1.65).contains(&l), "{l}");
        assert!((min_residual(l).unwrap() + 1.0).abs() < 1e-9);
    }

    #[test]
    fn zero_counts() {
        let two = counterexample_2n_alternance(1, 1e-4).unwrap();
        assert!(two.achieved);
        assert_eq!(two.zeros.len(), 2);
        let four = counterexample_2n_alternance(2, 1e-4).unwrap();
        assert!(four.achieved, "{four:?}");
        assert_eq!(four.zeros.len(), 6);
        for z in &four.zeros {
            assert!(four.zeros.iter().any(|w| (w + z).abs() < 1e-6));
        }
    }
}
