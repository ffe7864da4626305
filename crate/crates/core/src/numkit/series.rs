use serde::{Deserialize, Serialize};

use crate::C64;

/// Truncated Maclaurin series `c_0 + c_1 z + … + c_{M} z^{M}`; `order()` is the
/// number of known coefficients `M + 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerSeries {
    pub coeffs: Vec<C64>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<C64>) -> Self {
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| C64::new(c, 0.0)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![C64::new(0.0, 0.0); order])
    }

    /// Coefficients `f(m)` for `m < order`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C64) -> Self {
        Self::new((0..order).map(f).collect())
    }

    /// `e^z`.
    pub fn exp_z(order: usize) -> Self {
        let mut c = Vec::with_capacity(order);
        let mut term = 1.0;
        for m in 0..order {
            if m > 0 {
                term /= m as f64;
            }
            c.push(C64::new(term, 0.0));
        }
        Self::new(c)
    }

    /// `1/(z − 1) = −Σ z^m`.
    pub fn simple_pole_at_one(order: usize) -> Self {
        Self::new(vec![C64::new(-1.0, 0.0); order])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, m: usize) -> C64 {
        self.coeffs.get(m).copied().unwrap_or_default()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..order.min(self.order())].to_vec())
    }

    /// Partial sum of the known coefficients at `z`.
    pub fn eval(&self, z: C64) -> C64 {
        self.coeffs
            .iter()
            .rev()
            .fold(C64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |m| self.coeffs[m] + other.coeffs[m])
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |k| (0..=k).map(|j| self.coeffs[j] * other.coeffs[k - j]).sum())
    }

    /// `∫₀^z`, zero constant term; one more known coefficient than the input.
    pub fn integrate(&self) -> Self {
        let mut c = Vec::with_capacity(self.order() + 1);
        c.push(C64::new(0.0, 0.0));
        c.extend(self.coeffs.iter().enumerate().map(|(m, &a)| a / (m + 1) as f64));
        Self::new(c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(m, &a)| a * m as f64)
                .collect(),
        )
    }

    /// `exp(a(z))` through `c_k = (1/k) Σ_{j=1..k} j a_j c_{k−j}`, `c_0 = e^{a_0}`.
    pub fn exp(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return Self::new(Vec::new());
        }
        let mut c = vec![C64::new(0.0, 0.0); n];
        c[0] = self.coeffs[0].exp();
        for k in 1..n {
            let s: C64 = (1..=k).map(|j| self.coeffs[j] * j as f64 * c[k - j]).sum();
            c[k] = s / k as f64;
        }
        Self::new(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn exp_of_zero() {
        let e = PowerSeries::zero(5).exp();
        assert_eq!(e.coeffs[0], c64(1.0, 0.0));
        assert!(e.coeffs[1..].iter().all(|c| c.norm() == 0.0));
    }

    #[test]
    fn integrate_ones() {
        let i = PowerSeries::from_real(&[1.0; 4]).integrate();
        let want = [0.0, 1.0, 0.5, 1.0 / 3.0, 0.25];
        assert_eq!(i.order(), 5);
        for (a, b) in i.coeffs.iter().zip(want) {
            assert!((a - c64(b, 0.0)).norm() < 1e-16);
        }
    }

    #[test]
    fn exp_of_log_one_minus_z() {
        // log(1 − z) = −Σ z^m/m, exp gives 1 − z exactly
        let log = PowerSeries::from_fn(12, |m| {
            if m == 0 {
                c64(0.0, 0.0)
            } else {
                c64(-1.0 / m as f64, 0.0)
            }
        });
        let e = log.exp();
        assert!((e.coeffs[0] - c64(1.0, 0.0)).norm() < 1e-15);
        assert!((e.coeffs[1] - c64(-1.0, 0.0)).norm() < 1e-15);
        for c in &e.coeffs[2..] {
            assert!(c.norm() < 1e-15);
        }
        // same through integration of −Σ z^m
        let via_int = PowerSeries::from_real(&[-1.0; 11]).integrate().exp();
        for (a, b) in via_int.coeffs.iter().zip(&e.coeffs) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn exp_scales_by_constant_term() {
        let a = PowerSeries::from_real(&[0.5, 1.0, 0.0]);
        let e = a.exp();
        // exp(0.5 + z) = e^{0.5}(1 + z + z²/2)
        let k = 0.5f64.exp();
        assert!((e.coeffs[2] - c64(k / 2.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn multiply_truncates_to_shorter() {
        let a = PowerSeries::from_real(&[1.0, 1.0, 1.0, 1.0]);
        let b = PowerSeries::from_real(&[1.0, -1.0]);
        let p = a.multiply(&b);
        assert_eq!(p.order(), 2);
        assert_eq!(p.coeffs[1], c64(0.0, 0.0));
    }
}
