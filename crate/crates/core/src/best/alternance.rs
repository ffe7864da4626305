use serde::{Deserialize, Serialize};

use crate::error::{Result, SpfError};
use crate::numkit::supnorm::{local_extrema, DEFAULT_GRID};
use crate::spf::SimpleFraction;

/// Extrema within this relative distance of the deviation count as attained.
pub const ALTERNANCE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlternanceReport {
    pub points: Vec<f64>,
    pub residuals: Vec<f64>,
    pub deviation: f64,
    pub count: usize,
    /// `(max − min)/max` of `|residuals|`.
    pub equalization: f64,
}

/// Longest alternating run of near-extremal points of `e` on `[a, b]`.
pub fn alternance_of<E>(e: E, a: f64, b: f64, tol: f64) -> Result<AlternanceReport>
where
    E: Fn(f64) -> f64 + Sync + Send,
{
    let ext = local_extrema(e, a, b, DEFAULT_GRID)?;
    let deviation = ext.iter().map(|p| p.value.abs()).fold(0.0, f64::max);
    let mut points = Vec::new();
    let mut residuals: Vec<f64> = Vec::new();
    if deviation > 0.0 {
        for p in ext.iter().filter(|p| p.value.abs() >= (1.0 - tol) * deviation) {
            match residuals.last() {
                Some(&last) if last.signum() == p.value.signum() => {
                    // same sign: keep the larger of the two
                    if p.value.abs() > last.abs() {
                        *points.last_mut().unwrap() = p.x;
                        *residuals.last_mut().unwrap() = p.value;
                    }
                }
                _ => {
                    points.push(p.x);
                    residuals.push(p.value);
                }
            }
        }
    }
    let lo = residuals.iter().map(|r| r.abs()).fold(f64::INFINITY, f64::min);
    let equalization = if residuals.is_empty() { 0.0 } else { (deviation - lo) / deviation };
    Ok(AlternanceReport {
        count: points.len(),
        points,
        residuals,
        deviation,
        equalization,
    })
}

fn check_off_interval(spf: &SimpleFraction, a: f64, b: f64) -> Result<()> {
    match spf
        .poles
        .iter()
        .find(|p| p.im.abs() <= 1e-14 * (1.0 + p.re.abs()) && p.re >= a && p.re <= b)
    {
        Some(p) => Err(SpfError::PoleOnInterval(p.re)),
        None => Ok(()),
    }
}

/// Alternance of `f − ρ` on `[a, b]`.
pub fn alternance_detect<F>(f: F, spf: &SimpleFraction, a: f64, b: f64, tol: f64) -> Result<AlternanceReport>
where
    F: Fn(f64) -> f64 + Sync + Send,
{
    check_off_interval(spf, a, b)?;
    alternance_of(|x| f(x) - spf.value_real(x), a, b, tol)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Verdict {
    CertifiedBest,
    /// The sufficient condition does not apply (pole inside or on the unit
    /// circle, or order below `n`).
    NotApplicable(String),
    Fails { count: usize },
}

/// Sufficient condition for best approximation on `[-1, 1]` among SPFs of
/// order at most `n`: order exactly `n`, all poles outside the closed unit
/// disk, and an alternance of `n + 1` points.
pub fn alternance_criterion<F>(f: F, spf: &SimpleFraction, n: usize, tol: f64) -> Result<Verdict>
where
    F: Fn(f64) -> f64 + Sync + Send,
{
    if !spf.is_real_valued(1e-10) {
        return Err(SpfError::Precondition("fraction is not real-valued on the real axis".into()));
    }
    if spf.order() != n {
        return Ok(Verdict::NotApplicable(format!("order {} differs from n = {n}", spf.order())));
    }
    if let Some(p) = spf.poles.iter().find(|p| p.norm() <= 1.0 + 1e-12) {
        return Ok(Verdict::NotApplicable(format!("pole {p} not outside the unit circle")));
    }
    let report = alternance_detect(f, spf, -1.0, 1.0, tol)?;
    Ok(if report.count > n {
        Verdict::CertifiedBest
    } else {
        Verdict::Fails { count: report.count }
    })
}

/// `min_j |e(t_j)|` over points where `e` alternates in sign.
pub fn vallee_poussin_from_residual(e: impl Fn(f64) -> f64, points: &[f64]) -> Result<f64> {
    let r: Vec<f64> = points.iter().map(|&t| e(t)).collect();
    if points.windows(2).any(|w| w[0] >= w[1]) {
        return Err(SpfError::Precondition("points must increase".into()));
    }
    if r.contains(&0.0) || r.windows(2).any(|w| w[0].signum() == w[1].signum()) {
        return Err(SpfError::Precondition("residual signs do not alternate".into()));
    }
    Ok(r.iter().map(|v| v.abs()).fold(f64::INFINITY, f64::min))
}

/// Lower bound for the least deviation of `f` from SPFs of order at most
/// `points.len() − 1` whose poles lie outside the unit disk.
pub fn vallee_poussin_bound(f: impl Fn(f64) -> f64, spf: &SimpleFraction, points: &[f64]) -> Result<f64> {
    if spf.poles.iter().any(|p| p.norm() <= 1.0) {
        return Err(SpfError::Precondition("poles must lie outside the unit disk".into()));
    }
    vallee_poussin_from_residual(|x| f(x) - spf.value_real(x), points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::best::{lambda_star, nonuniqueness_fraction};
    use crate::c64;

    #[test]
    fn chebyshev_t3_against_zero() {
        let t3 = |x: f64| 4.0 * x * x * x - 3.0 * x;
        let r = alternance_detect(t3, &SimpleFraction::zero(), -1.0, 1.0, ALTERNANCE_TOL).unwrap();
        assert_eq!(r.count, 4);
        assert!((r.deviation - 1.0).abs() < 1e-12);
        assert!(r.equalization < 1e-12);
    }

    #[test]
    fn nonuniqueness_example_counts() {
        let f = |x: f64| x + 1.0;
        let r = alternance_detect(f, &nonuniqueness_fraction(1.0), -1.0, 1.0, ALTERNANCE_TOL).unwrap();
        assert!(r.count < 2);
        assert!((r.deviation - 1.0).abs() < 1e-12);
        let ls = lambda_star();
        let r = alternance_detect(f, &nonuniqueness_fraction(ls), -1.0, 1.0, ALTERNANCE_TOL).unwrap();
        assert_eq!(r.count, 3);
        let v = alternance_criterion(f, &nonuniqueness_fraction(ls), 2, ALTERNANCE_TOL).unwrap();
        assert!(matches!(v, Verdict::NotApplicable(_)));
    }

    #[test]
    fn pole_on_interval_rejected() {
        let spf = SimpleFraction::new(vec![c64(0.5, 0.0)]);
        assert!(matches!(
            alternance_detect(|_| 0.0, &spf, -1.0, 1.0, ALTERNANCE_TOL),
            Err(SpfError::PoleOnInterval(_))
        ));
    }

    #[test]
    fn vallee_poussin_rejects_bad_signs() {
        let e = |x: f64| x;
        assert!(vallee_poussin_from_residual(e, &[-1.0, 1.0]).is_ok());
        assert!(vallee_poussin_from_residual(e, &[0.5, 1.0]).is_err());
    }
}
