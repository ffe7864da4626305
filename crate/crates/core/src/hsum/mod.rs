//! h-sums `Σ λ_k h(λ_k z)` and amplitude-frequency sums `Σ μ_k h(λ_k z)`:
//! Padé-type interpolation, universal node systems for differentiation,
//! integration and extrapolation, the discrete moment problem and its
//! regularization.

mod nodes;
mod prony;

pub use nodes::{
    diff_nodes, diff_nodes_literal, extrap_freqs, extrapolate, extrapolation_remainder,
    extrapolation_remainder_bound, int_nodes, int_nodes_literal, literal_recurrence, NodeKind,
    MAX_TUPLES,
};
pub use prony::{
    gauss_quadrature, gauss_rule, prony_solve, reg_diff, reg_diff_closed_form, reg_extrap,
    reg_extrap_closed_form, PronySolution, RegDiff, RegExtrap, HANKEL_COND_LIMIT,
};

use serde::{Deserialize, Serialize};

use crate::error::{require, Result, SpfError};
use crate::numkit::{find_roots, poly_from_power_sums, PowerSeries, DEFAULT_ROOT_TOL};
use crate::C64;

/// `H(z) = Σ λ_k h(λ_k z)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HSum {
    pub freqs: Vec<C64>,
    pub base: PowerSeries,
}

impl HSum {
    /// Evaluates with the partial sum of the base series.
    pub fn eval(&self, z: C64) -> C64 {
        self.freqs.iter().map(|&l| l * self.base.eval(l * z)).sum()
    }

    /// Maclaurin coefficients `h_m·S_{m+1}`.
    pub fn coefficients(&self, count: usize) -> Vec<C64> {
        let s = crate::numkit::power_sums(&self.freqs, count + 1);
        (0..count).map(|m| self.base.coeff(m) * s[m]).collect()
    }
}

/// `Σ μ_k h(λ_k z)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AFSum {
    pub amps: Vec<C64>,
    pub freqs: Vec<C64>,
    pub base: PowerSeries,
}

impl AFSum {
    pub fn eval(&self, z: C64) -> C64 {
        self.amps
            .iter()
            .zip(&self.freqs)
            .map(|(&a, &l)| a * self.base.eval(l * z))
            .sum()
    }

    /// Discrete moments `Σ μ_k λ_k^m`, `m < count`.
    pub fn moments(&self, count: usize) -> Vec<C64> {
        moments(&self.amps, &self.freqs, count)
    }

    /// Maclaurin coefficients `h_m Σ μ_k λ_k^m`.
    pub fn coefficients(&self, count: usize) -> Vec<C64> {
        self.moments(count)
            .into_iter()
            .enumerate()
            .map(|(m, s)| self.base.coeff(m) * s)
            .collect()
    }
}

/// Discrete moments `Σ μ_k λ_k^m`, `m < count`.
pub fn moments(amps: &[C64], freqs: &[C64], count: usize) -> Vec<C64> {
    let mut out = vec![C64::new(0.0, 0.0); count];
    for (&a, &l) in amps.iter().zip(freqs) {
        let mut p = a;
        for s in out.iter_mut() {
            *s += p;
            p *= l;
        }
    }
    out
}

/// The h-sum with `f(z) − H(z) = O(z^n)`: its frequencies have power sums
/// `S_{m+1} = f_m/h_m`, `m < n`.
pub fn hsum_pade(f: &PowerSeries, h: &PowerSeries, n: usize) -> Result<HSum> {
    require(n >= 1, || "n must be at least 1".into())?;
    require(f.order() >= n, || format!("need {n} coefficients of f"))?;
    let mut s = Vec::with_capacity(n);
    for m in 0..n {
        let (fm, hm) = (f.coeff(m), h.coeff(m));
        if hm.norm() == 0.0 {
            if fm.norm() != 0.0 {
                return Err(SpfError::MomentDefinition { index: m });
            }
            s.push(C64::new(0.0, 0.0));
        } else {
            s.push(fm / hm);
        }
    }
    Ok(HSum {
        freqs: roots_of_power_sums(&s)?,
        base: h.clone(),
    })
}

pub(crate) fn roots_of_power_sums(s: &[C64]) -> Result<Vec<C64>> {
    Ok(find_roots(&poly_from_power_sums(s)?, DEFAULT_ROOT_TOL)?.roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn f_equal_to_h() {
        let h = PowerSeries::exp_z(12);
        let hs = hsum_pade(&h, &h, 4).unwrap();
        let mut f = hs.freqs.clone();
        f.sort_by(|a, b| b.norm().total_cmp(&a.norm()));
        assert!((f[0] - c64(1.0, 0.0)).norm() < 1e-12);
        assert!(f[1..].iter().all(|l| l.norm() < 1e-12));
        let z = c64(0.3, -0.2);
        assert!((hs.eval(z) - h.eval(z)).norm() < 1e-12);
    }

    #[test]
    fn zero_and_single() {
        let h = PowerSeries::exp_z(8);
        let zero = hsum_pade(&PowerSeries::zero(8), &h, 3).unwrap();
        assert!(zero.freqs.iter().all(|l| l.norm() == 0.0));
        let f = PowerSeries::from_real(&[0.6, 1.0]);
        let one = hsum_pade(&f, &h, 1).unwrap();
        assert!((one.freqs[0] - c64(0.6, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn undefined_moment() {
        let h = PowerSeries::from_real(&[1.0, 0.0, 1.0]);
        let f = PowerSeries::from_real(&[1.0, 1.0, 1.0]);
        assert!(matches!(hsum_pade(&f, &h, 3), Err(SpfError::MomentDefinition { index: 1 })));
        let g = PowerSeries::from_real(&[1.0, 0.0, 1.0]);
        assert!(hsum_pade(&g, &h, 3).is_ok());
    }

    #[test]
    fn contact_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for trial in 0..60 {
            let n = 1 + trial % 12;
            let f = PowerSeries::from_fn(n, |_| c64(rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5)));
            let h = PowerSeries::from_fn(n, |_| c64(rng.gen_range(0.5..1.5), rng.gen_range(-0.5..0.5)));
            let hs = hsum_pade(&f, &h, n).unwrap();
            let c = hs.coefficients(n);
            for m in 0..n {
                assert!((c[m] - f.coeff(m)).norm() <= 1e-9, "n={n} m={m}");
            }
        }
    }
}
