//! Newton identities between power sums and elementary symmetric functions.

use super::ComplexPolynomial;
use crate::error::{require, Result};
use crate::C64;

/// Monic polynomial of degree `n = s.len()` whose roots `λ_k` have power sums
/// `Σ λ_k^m = s[m-1]` for `m = 1..=n`.
///
/// Runs the recursion `τ_m = (−1)^{m+1}/m · (S_m + Σ_{j<m} (−1)^j S_{m−j} τ_j)`
/// for the elementary symmetric functions and returns
/// `λ^n − τ_1 λ^{n−1} + τ_2 λ^{n−2} − … + (−1)^n τ_n`.
pub fn poly_from_power_sums(s: &[C64]) -> Result<ComplexPolynomial> {
    require(!s.is_empty(), || "need at least one power sum".into())?;
    let n = s.len();
    let mut tau = vec![C64::new(0.0, 0.0); n + 1];
    tau[0] = C64::new(1.0, 0.0);
    for m in 1..=n {
        let mut acc = s[m - 1];
        for j in 1..m {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            acc += sign * s[m - j - 1] * tau[j];
        }
        let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
        tau[m] = acc * (sign / m as f64);
    }
    // coefficient of λ^{n−k} is (−1)^k τ_k
    let mut coeffs = vec![C64::new(0.0, 0.0); n + 1];
    for (k, t) in tau.iter().enumerate() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        coeffs[n - k] = sign * t;
    }
    Ok(ComplexPolynomial::new(coeffs))
}

/// `S_m = Σ_k roots_k^m` for `m = 1..=count`.
pub fn power_sums(roots: &[C64], count: usize) -> Vec<C64> {
    let mut out = vec![C64::new(0.0, 0.0); count];
    for &r in roots {
        let mut p = r;
        for s in out.iter_mut() {
            *s += p;
            p *= r;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use crate::numkit::find_roots;

    fn re(v: &[f64]) -> Vec<C64> {
        v.iter().map(|&x| c64(x, 0.0)).collect()
    }

    #[test]
    fn zero_sums_give_pure_power() {
        let p = poly_from_power_sums(&re(&[0.0, 0.0, 0.0])).unwrap();
        assert_eq!(p.degree(), Some(3));
        for i in 0..3 {
            assert_eq!(p.coeff(i), c64(0.0, 0.0));
        }
    }

    // oracle: e1 = S1, e2 = (e1 S1 − S2)/2, poly = λ² − e1 λ + e2
    fn quadratic_oracle(s1: f64, s2: f64) -> [f64; 3] {
        let e1 = s1;
        let e2 = (e1 * s1 - s2) / 2.0;
        [e2, -e1, 1.0]
    }

    #[test]
    fn quadratic_cases() {
        for (s1, s2) in [(-1.0, -1.0), (1.0, 2.0)] {
            let p = poly_from_power_sums(&re(&[s1, s2])).unwrap();
            let want = quadratic_oracle(s1, s2);
            for i in 0..3 {
                assert!((p.coeff(i) - c64(want[i], 0.0)).norm() < 1e-15);
            }
        }
        // explicit forms from the worked examples
        let p = poly_from_power_sums(&re(&[1.0, 2.0])).unwrap();
        assert!((p.coeff(0) - c64(-0.5, 0.0)).norm() < 1e-15);
        assert!((p.coeff(1) - c64(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn power_sums_direct() {
        assert_eq!(power_sums(&re(&[1.0, 1.0]), 3), re(&[2.0, 2.0, 2.0]));
        assert_eq!(power_sums(&re(&[2.0, -1.0]), 2), re(&[1.0, 5.0]));
        let p = ComplexPolynomial::from_real(&[1.0, 1.0, 1.0]);
        let r = find_roots(&p, 1e-12).unwrap().roots;
        let s = power_sums(&r, 2);
        assert!((s[0] - c64(-1.0, 0.0)).norm() < 1e-14);
        assert!((s[1] - c64(-1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn empty_rejected() {
        assert!(poly_from_power_sums(&[]).is_err());
    }
}
