//! Notch points: the `2n` real solutions of `B(x)² = e^{iφ}`.

use serde::{Deserialize, Serialize};

use super::HalfPlanePoles;
use crate::error::{require, Result};
use crate::par;
use crate::C64;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NotchSet {
    pub phi: f64,
    pub points: Vec<f64>,
}

impl NotchSet {
    /// `max_s |B(t_s)² − e^{iφ}|`.
    pub fn residual(&self, hp: &HalfPlanePoles) -> f64 {
        let target = C64::from_polar(1.0, self.phi);
        self.points
            .iter()
            .map(|&t| (hp.blaschke(t).powu(2) - target).norm())
            .fold(0.0, f64::max)
    }
}

/// Solves `arg B(x) = (φ − 2πj)/2`, `j = 1..2n`, by bisection on the
/// continuous (strictly increasing) argument.
pub fn notch_points(hp: &HalfPlanePoles, phi: f64) -> Result<NotchSet> {
    require(phi > 0.0 && phi < std::f64::consts::TAU, || format!("phi must lie in (0, 2π), got {phi}"))?;
    let n = hp.n();
    let (c, r) = hp.centre_and_radius();
    let mut points = par::map_range(2 * n, |j| {
        let target = 0.5 * (phi - std::f64::consts::TAU * (j + 1) as f64);
        solve_arg(hp, target, c, r)
    });
    points.sort_by(f64::total_cmp);
    Ok(NotchSet { phi, points })
}

fn solve_arg(hp: &HalfPlanePoles, target: f64, c: f64, r: f64) -> f64 {
    let mut span = r;
    let mut lo = c - span;
    while hp.arg_b(lo) > target {
        span *= 2.0;
        lo = c - span;
    }
    span = r;
    let mut hi = c + span;
    while hp.arg_b(hi) < target {
        span *= 2.0;
        hi = c + span;
    }
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if hp.arg_b(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `π Σ_s μ(t_s)`, equal to `‖ρ‖²_{L2(ℝ)}` for every `φ`.
pub fn l2_quadrature(hp: &HalfPlanePoles, phi: f64) -> Result<f64> {
    let set = notch_points(hp, phi)?;
    Ok(std::f64::consts::PI * set.points.iter().map(|&t| hp.mu(t)).sum::<f64>())
}

/// `π Σ_s ν(t_s)²/μ(t_s)`, the companion form of the same quadrature.
pub fn l2_quadrature_nu(hp: &HalfPlanePoles, phi: f64) -> Result<f64> {
    let set = notch_points(hp, phi)?;
    Ok(std::f64::consts::PI * set.points.iter().map(|&t| hp.nu(t).powi(2) / hp.mu(t)).sum::<f64>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use crate::metrics::{integrate_real_line, lp_norm};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn random_hp(rng: &mut ChaCha8Rng, n: usize) -> HalfPlanePoles {
        HalfPlanePoles::new((0..n).map(|_| c64(rng.gen_range(-3.0..3.0), rng.gen_range(0.1..2.0))).collect()).unwrap()
    }

    #[test]
    fn single_pole_at_i() {
        let hp = HalfPlanePoles::new(vec![c64(0.0, 1.0)]).unwrap();
        let set = notch_points(&hp, PI).unwrap();
        assert_eq!(set.points.len(), 2);
        assert!((set.points[0] + 1.0).abs() < 1e-14 && (set.points[1] - 1.0).abs() < 1e-14);
        assert!((l2_quadrature(&hp, PI).unwrap() - PI).abs() < 1e-13);
    }

    #[test]
    fn arg_is_monotone_with_full_turns() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let hp = random_hp(&mut rng, 5);
        assert!((hp.arg_b(-1e12) + 2.0 * PI * 5.0).abs() < 1e-9);
        assert!(hp.arg_b(1e12).abs() < 1e-9);
        let xs: Vec<f64> = (0..2000).map(|i| -20.0 + 0.02 * i as f64).collect();
        assert!(xs.windows(2).all(|w| hp.arg_b(w[1]) > hp.arg_b(w[0])));
    }

    #[test]
    fn residual_count_and_translation() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for n in 1..=8 {
            let hp = random_hp(&mut rng, n);
            let set = notch_points(&hp, 2.0).unwrap();
            assert_eq!(set.points.len(), 2 * n);
            assert!(set.residual(&hp) <= 1e-10);
            let h = 1.75;
            let moved = HalfPlanePoles::new(hp.poles.iter().map(|p| p + h).collect()).unwrap();
            let shifted = notch_points(&moved, 2.0).unwrap();
            for (a, b) in set.points.iter().zip(&shifted.points) {
                assert!((b - a - h).abs() < 1e-9 * (1.0 + a.abs()));
            }
        }
    }

    #[test]
    fn quadrature_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let hp = random_hp(&mut rng, 8);
        let exact = lp_norm(&hp.spf(), 2.0).unwrap().powi(2);
        let (c, r) = hp.centre_and_radius();
        let breaks: Vec<f64> = hp.poles.iter().map(|p| p.re).collect();
        let mu2 = integrate_real_line(|x| hp.mu(x).powi(2), c, 4.0 * r, 4.0, &breaks).unwrap();
        assert!((2.0 * mu2 / exact - 1.0).abs() < 1e-8);
        for phi in [PI / 3.0, PI, 5.0 * PI / 3.0] {
            let q = l2_quadrature(&hp, phi).unwrap();
            assert!((q / exact - 1.0).abs() < 1e-9, "{q} vs {exact}");
            assert!((l2_quadrature_nu(&hp, phi).unwrap() / exact - 1.0).abs() < 1e-9);
        }
    }
}
