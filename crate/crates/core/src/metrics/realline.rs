//! Integrals and sup-norms over the whole real line.

use super::centre_and_radius;
use crate::error::{require, Result, SpfError};
use crate::numkit::quad::{integrate, integrate_pieces};
use crate::numkit::supnorm::golden_max;
use crate::spf::SimpleFraction;
use crate::C64;

const REL_TOL: f64 = 1e-12;

/// `∫_ℝ g` for `g` decaying at least like `|x|^{−decay}`, `decay > 1`.
///
/// The core `[c − R, c + R]` is split at `breaks`; each tail is mapped by
/// `x = c ± R·u^{−β}`, `β = 1/(decay − 1)`, which turns the `|x|^{−decay}`
/// decay into a bounded integrand on `u ∈ (0, 1]`.
pub fn integrate_real_line(
    g: impl Fn(f64) -> f64,
    centre: f64,
    radius: f64,
    decay: f64,
    breaks: &[f64],
) -> Result<f64> {
    require(decay > 1.0, || format!("decay exponent must exceed 1, got {decay}"))?;
    require(radius > 0.0, || "radius must be positive".into())?;
    let (lo, hi) = (centre - radius, centre + radius);
    let mut pts = vec![lo];
    pts.extend(breaks.iter().copied().filter(|&b| b > lo && b < hi));
    pts.push(hi);
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    let core = integrate_pieces(&g, &pts, 0.0, REL_TOL)?;
    let beta = 1.0 / (decay - 1.0);
    let tail = |sign: f64| {
        integrate(
            |u: f64| {
                let x = centre + sign * radius * u.powf(-beta);
                let v = g(x) * radius * beta * u.powf(-beta - 1.0);
                if v.is_finite() { v } else { 0.0 }
            },
            0.0,
            1.0,
            1e-300,
            REL_TOL,
        )
    };
    let total = core + tail(1.0)?.0 + tail(-1.0)?.0;
    if total.is_finite() {
        Ok(total)
    } else {
        Err(SpfError::Domain("divergent integral".into()))
    }
}

fn check_off_axis(spf: &SimpleFraction) -> Result<()> {
    match spf.poles.iter().find(|p| p.im == 0.0) {
        Some(p) => Err(SpfError::PoleOnInterval(p.re)),
        None => Ok(()),
    }
}

fn breaks_of(spf: &SimpleFraction) -> Vec<f64> {
    let mut b: Vec<f64> = spf.poles.iter().map(|p| p.re).collect();
    b.sort_by(f64::total_cmp);
    b
}

/// `sup_ℝ g` from a tangent-mapped global grid plus local grids around each
/// feature `(x, width)`, refined by golden section; returns `(value, argmax)`.
pub fn sup_real_line(g: impl Fn(f64) -> f64, centre: f64, radius: f64, features: &[(f64, f64)]) -> (f64, f64) {
    const GLOBAL: usize = 4097;
    const LOCAL: usize = 129;
    let half_pi = std::f64::consts::FRAC_PI_2;
    let mut xs: Vec<f64> = (1..GLOBAL)
        .map(|i| centre + radius * (-half_pi + std::f64::consts::PI * i as f64 / GLOBAL as f64).tan())
        .collect();
    for &(x, w) in features {
        xs.extend((0..LOCAL).map(|i| x - 6.0 * w + 12.0 * w * i as f64 / (LOCAL - 1) as f64));
    }
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    let ys: Vec<f64> = xs.iter().map(|&x| g(x)).collect();
    let mut best = (f64::NEG_INFINITY, centre);
    for i in 0..xs.len() {
        let left = i == 0 || ys[i] >= ys[i - 1];
        let right = i + 1 == xs.len() || ys[i] >= ys[i + 1];
        if !(left && right) {
            continue;
        }
        let (x, v) = if i == 0 || i + 1 == xs.len() {
            (xs[i], ys[i])
        } else {
            golden_max(&g, xs[i - 1], xs[i + 1])
        };
        let (x, v) = if v >= ys[i] { (x, v) } else { (xs[i], ys[i]) };
        if v > best.0 {
            best = (v, x);
        }
    }
    best
}

/// `‖ρ‖_{L_p(ℝ)}`; `p = ∞` for the sup-norm.
pub fn lp_norm(spf: &SimpleFraction, p: f64) -> Result<f64> {
    require(p > 1.0, || format!("need p > 1, got {p}"))?;
    require(spf.order() > 0, || "empty fraction".into())?;
    check_off_axis(spf)?;
    let (c, r) = centre_and_radius(&spf.poles);
    let value = |x: f64| -> C64 { spf.poles.iter().map(|&q| C64::new(1.0, 0.0) / (C64::new(x, 0.0) - q)).sum() };
    if p.is_infinite() {
        let features: Vec<(f64, f64)> = spf.poles.iter().map(|q| (q.re, q.im.abs())).collect();
        return Ok(sup_real_line(|x| value(x).norm(), c, r, &features).0);
    }
    let integral = integrate_real_line(|x| value(x).norm().powf(p), c, 4.0 * r, p, &breaks_of(spf))?;
    Ok(integral.powf(1.0 / p))
}

/// `sup_{[-1,1]} |g|` with a dense grid plus refinement.
pub fn sup_segment(g: impl Fn(f64) -> f64 + Sync + Send) -> Result<f64> {
    Ok(crate::numkit::sup_norm(g, -1.0, 1.0, 1e-12)?.value)
}

/// `‖ρ‖_{L_p[-1,1]}` of a fraction with no pole on the segment.
pub fn lp_norm_segment(spf: &SimpleFraction, p: f64) -> Result<f64> {
    require(p >= 1.0 && p.is_finite(), || format!("need finite p >= 1, got {p}"))?;
    let mut breaks = vec![-1.0];
    breaks.extend(breaks_of(spf).into_iter().filter(|b| b.abs() < 1.0));
    breaks.push(1.0);
    let v = integrate_pieces(
        |x| spf.value(C64::new(x, 0.0)).map(|v| v.norm().powf(p)).unwrap_or(f64::INFINITY),
        &breaks,
        0.0,
        REL_TOL,
    )?;
    Ok(v.powf(1.0 / p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn lorentzian_norms() {
        let spf = SimpleFraction::new(vec![c64(0.0, 1.0)]);
        // |ρ|² = 1/(x²+1)
        assert!((lp_norm(&spf, 2.0).unwrap().powi(2) - std::f64::consts::PI).abs() < 1e-10);
        assert!((lp_norm(&spf, f64::INFINITY).unwrap() - 1.0).abs() < 1e-14);
        // ∫ (x²+1)^{-2} = π/2
        assert!((lp_norm(&spf, 4.0).unwrap().powi(4) - std::f64::consts::FRAC_PI_2).abs() < 1e-10);
    }

    #[test]
    fn pole_on_axis_rejected() {
        assert!(lp_norm(&SimpleFraction::new(vec![c64(0.3, 0.0)]), 2.0).is_err());
    }

    #[test]
    fn sup_finds_narrow_peak() {
        let (v, x) = sup_real_line(|x| 1.0 / ((x - 7.0).powi(2) + 1e-6), 0.0, 1.0, &[(7.0, 1e-3)]);
        assert!((v - 1e6).abs() < 1e-4 && (x - 7.0).abs() < 1e-6);
    }
}
