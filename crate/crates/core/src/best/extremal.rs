//! Extremal fractions: poles at the Joukowski images of the `n`-th roots of
//! `ω > 1`, i.e. on the ellipse with parameter `a = ω^{1/n}` around `[-1, 1]`.
//! They minimise the weighted norm `‖√(1−x²)·ρ‖` on `[-1, 1]`.

use serde::{Deserialize, Serialize};

use crate::error::{require, Result};
use crate::numkit::supnorm::sup_norm;
use crate::spf::SimpleFraction;
use crate::C64;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalFraction {
    pub omega: f64,
    pub n: usize,
    pub poles: Vec<C64>,
    /// `2(1 + δ) = ω^{1/n} + ω^{−1/n}`.
    pub delta: f64,
}

pub fn extremal_fraction(omega: f64, n: usize) -> Result<ExtremalFraction> {
    require(omega > 1.0 && omega.is_finite(), || format!("omega must exceed 1, got {omega}"))?;
    require(n >= 1, || "n must be at least 1".into())?;
    let a = omega.powf(1.0 / n as f64);
    let poles = (0..n)
        .map(|k| {
            let w = C64::from_polar(a, std::f64::consts::TAU * k as f64 / n as f64);
            0.5 * (w + 1.0 / w)
        })
        .collect();
    Ok(ExtremalFraction {
        omega,
        n,
        poles,
        delta: 0.5 * (a + 1.0 / a) - 1.0,
    })
}

impl ExtremalFraction {
    /// The fraction whose ellipse passes through `1 + δ`.
    pub fn from_delta(delta: f64, n: usize) -> Result<Self> {
        require(delta > 0.0, || format!("delta must be positive, got {delta}"))?;
        let t = 1.0 + delta;
        let a = t + (t * t - 1.0).sqrt();
        extremal_fraction(a.powi(n as i32), n)
    }

    pub fn spf(&self) -> SimpleFraction {
        SimpleFraction::new(self.poles.clone())
    }

    pub fn eval_pole_sum(&self, z: C64) -> Result<C64> {
        self.spf().value(z)
    }

    /// `ρ = 2nw/(w² − 1) · ω(w^{2n} − 1)/((ω w^n − 1)(w^n − ω))` with
    /// `z = (w + 1/w)/2`; any branch of `w` gives the same value.
    pub fn eval_closed(&self, z: C64) -> C64 {
        let w = if z.im == 0.0 && z.re.abs() < 1.0 {
            C64::new(z.re, (1.0 - z.re * z.re).sqrt())
        } else {
            z + (z * z - 1.0).sqrt()
        };
        let n = self.n as f64;
        let wn = w.powu(self.n as u32);
        let om = self.omega;
        2.0 * n * w / (w * w - 1.0) * om * (wn * wn - 1.0) / ((wn * om - 1.0) * (wn - om))
    }

    /// `√(1 − x²)·ρ(x)` at `x = cos φ`, namely `−2nω sin nφ/(1 − 2ω cos nφ + ω²)`.
    pub fn weighted(&self, phi: f64) -> f64 {
        let n = self.n as f64;
        let om = self.omega;
        -2.0 * n * om * (n * phi).sin() / (1.0 - 2.0 * om * (n * phi).cos() + om * om)
    }

    /// Closed form of the weighted norm, `2nω/(ω² − 1)`.
    pub fn weighted_norm(&self) -> f64 {
        2.0 * self.n as f64 * self.omega / (self.omega * self.omega - 1.0)
    }

    /// `n/√(T_n²(1 + δ) − 1)`.
    pub fn weighted_norm_via_delta(&self) -> f64 {
        let t = (self.n as f64 * (1.0 + self.delta).acosh()).cosh();
        self.n as f64 / (t * t - 1.0).sqrt()
    }

    /// `max √(1 − x²)|ρ(x)|` on `[-1, 1]`, searched numerically over `x`.
    ///
    /// `ρ` is evaluated in product form: for large `n` the norm drops far below
    /// the size of the individual pole terms and the pole sum cancels away.
    pub fn weighted_norm_numeric(&self) -> Result<f64> {
        let g = |x: f64| {
            if x.abs() >= 1.0 {
                0.0
            } else {
                (1.0 - x * x).sqrt() * self.eval_closed(C64::new(x, 0.0)).re
            }
        };
        Ok(sup_norm(g, -1.0, 1.0, 1e-12)?.value)
    }

    /// Points `x = cos φ` in `[-1, 1]` where `cos nφ = 2ω/(ω² + 1)`, at which
    /// the weighted fraction alternately reaches `±` its norm.
    pub fn alternation_points(&self) -> Vec<f64> {
        let n = self.n as f64;
        let theta = (2.0 * self.omega / (self.omega * self.omega + 1.0)).acos();
        let mut x: Vec<f64> = (0..self.n)
            .flat_map(|k| {
                let base = std::f64::consts::TAU * k as f64;
                [(base + theta) / n, (base - theta) / n]
            })
            .filter(|phi| *phi > 0.0 && *phi < std::f64::consts::PI)
            .map(f64::cos)
            .collect();
        x.sort_by(f64::total_cmp);
        x
    }

    /// Residual of the ellipse equation `x²/A² + y²/B² = 1`,
    /// `A = (a + 1/a)/2`, `B = (a − 1/a)/2`, at every pole.
    pub fn ellipse_residual(&self) -> f64 {
        let a = self.omega.powf(1.0 / self.n as f64);
        let big = 0.5 * (a + 1.0 / a);
        let small = 0.5 * (a - 1.0 / a);
        self.poles
            .iter()
            .map(|p| ((p.re / big).powi(2) + (p.im / small).powi(2) - 1.0).abs())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn closed_form_matches_pole_sum() {
        for n in [1usize, 2, 5, 12, 25] {
            for delta in [0.5, 0.8] {
                let e = ExtremalFraction::from_delta(delta, n).unwrap();
                for i in 0..200 {
                    let t = i as f64 / 199.0;
                    let z = if i % 2 == 0 {
                        c64(-0.999 + 1.998 * t, 0.0)
                    } else {
                        c64(3.0 * (t * 7.0).cos(), 2.0 * (t * 5.0).sin() + 0.1)
                    };
                    let a = e.eval_closed(z);
                    let b = e.eval_pole_sum(z).unwrap();
                    assert!((a - b).norm() < 1e-10, "n={n} z={z}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn weighted_norm_identities() {
        for n in 1..=25 {
            for delta in [0.5, 0.8] {
                let e = ExtremalFraction::from_delta(delta, n).unwrap();
                let numeric = e.weighted_norm_numeric().unwrap();
                assert!((numeric / e.weighted_norm_via_delta() - 1.0).abs() < 1e-6, "n={n}");
                assert!((numeric / e.weighted_norm() - 1.0).abs() < 1e-6);
                assert!(e.ellipse_residual() < 1e-10);
            }
        }
    }

    #[test]
    fn alternation_points_attain_the_norm() {
        let e = extremal_fraction(4.0, 6).unwrap();
        let pts = e.alternation_points();
        assert_eq!(pts.len(), 6);
        let norm = e.weighted_norm();
        let mut prev = 0.0;
        for &x in &pts {
            let v = (1.0 - x * x).sqrt() * e.eval_pole_sum(c64(x, 0.0)).unwrap().re;
            assert!((v.abs() - norm).abs() < 1e-10 * norm);
            assert!(v * prev <= 0.0);
            prev = v;
        }
    }

    #[test]
    fn omega_n_squared_peaks_at_one() {
        for n in 5..=40 {
            let e = extremal_fraction((n * n) as f64, n).unwrap();
            let spf = e.spf();
            let s = sup_norm(|x| spf.value_real(x), -1.0, 1.0, 1e-12).unwrap();
            // even n ties with x = −1 by symmetry
            let at_one = spf.value_real(1.0).abs();
            assert!(s.value <= at_one * (1.0 + 1e-12), "n={n}");
            assert!(at_one < 3.0);
        }
    }

    #[test]
    fn rejects_small_omega() {
        assert!(extremal_fraction(1.0, 3).is_err());
    }
}
