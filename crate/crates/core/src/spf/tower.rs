//! The operators `F_0(w) = w`, `F_{s+1}(w) = w·F_s(w) + (F_s(w))'`, stored as
//! exact integer polynomials in the symbols `w_0, w_1, …` where `w_i` stands
//! for the `i`-th derivative of `w`.
//!
//! For `u` analytic and `w = u'/u` one has `u^{(s+1)} = u·F_s(w)`. Writing
//! `F_s = w_s + H_s(w_0, …, w_{s−1})` turns interpolation conditions on an SPF
//! into linear conditions on its generating polynomial.

use std::collections::BTreeMap;
use std::fmt;

use super::SimpleFraction;
use crate::error::{Result, SpfError};
use crate::C64;

/// Deepest operator the tower will build.
pub const MAX_TOWER_DEPTH: usize = 12;

/// Exponent vector over `w_0..w_S`.
type Monomial = Vec<u32>;
type Poly = BTreeMap<Monomial, i64>;

#[derive(Debug, Clone, PartialEq)]
pub struct DiffOperatorTower {
    ops: Vec<Poly>,
    vars: usize,
}

/// `F_0 … F_depth`.
pub fn build_tower(depth: usize) -> Result<DiffOperatorTower> {
    if depth > MAX_TOWER_DEPTH {
        return Err(SpfError::TowerTooDeep {
            requested: depth,
            limit: MAX_TOWER_DEPTH,
        });
    }
    let vars = depth + 1;
    let mut f0 = Poly::new();
    f0.insert(unit(vars, 0), 1);
    let mut ops = vec![f0];
    for s in 0..depth {
        let next = add(&times_w0(&ops[s]), &derive(&ops[s]));
        ops.push(next);
    }
    Ok(DiffOperatorTower { ops, vars })
}

fn unit(vars: usize, i: usize) -> Monomial {
    let mut m = vec![0; vars];
    m[i] = 1;
    m
}

fn add(a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    for (m, c) in b {
        *out.entry(m.clone()).or_insert(0) += c;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn times_w0(p: &Poly) -> Poly {
    p.iter()
        .map(|(m, &c)| {
            let mut m = m.clone();
            m[0] += 1;
            (m, c)
        })
        .collect()
}

/// Total derivative: `D w_i = w_{i+1}`, Leibniz rule on products.
fn derive(p: &Poly) -> Poly {
    let mut out = Poly::new();
    for (m, &c) in p {
        for i in 0..m.len() {
            if m[i] == 0 {
                continue;
            }
            assert!(i + 1 < m.len(), "tower variable overflow");
            let mut d = m.clone();
            d[i] -= 1;
            d[i + 1] += 1;
            *out.entry(d).or_insert(0) += c * m[i] as i64;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn eval_poly(p: &Poly, w: &[C64]) -> C64 {
    p.iter()
        .map(|(m, &c)| {
            let mut term = C64::new(c as f64, 0.0);
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    term *= w.get(i).copied().unwrap_or_default().powu(e);
                }
            }
            term
        })
        .sum()
}

impl DiffOperatorTower {
    /// Highest available index `S`.
    pub fn depth(&self) -> usize {
        self.ops.len() - 1
    }

    /// Integer coefficients of `F_s` keyed by exponent vectors over `w_0..w_S`.
    pub fn terms(&self, s: usize) -> Vec<(Vec<u32>, i64)> {
        self.ops[s].iter().map(|(m, &c)| (m.clone(), c)).collect()
    }

    /// `F_s(w_0, …, w_s)`; missing `w_i` count as zero.
    pub fn eval(&self, s: usize, w: &[C64]) -> C64 {
        eval_poly(&self.ops[s], w)
    }

    /// `Σ |c|·Π|w_i|^{e_i}` over the terms of `F_s`: the size of the
    /// cancellation that `eval` performs.
    pub fn eval_scale(&self, s: usize, w: &[C64]) -> f64 {
        self.ops[s]
            .iter()
            .map(|(m, &c)| {
                m.iter().enumerate().fold(c.unsigned_abs() as f64, |acc, (i, &e)| {
                    acc * w.get(i).map_or(0.0, |v| v.norm()).powi(e as i32)
                })
            })
            .sum()
    }

    /// `H_s = F_s − w_s`.
    pub fn eval_h(&self, s: usize, w: &[C64]) -> C64 {
        self.eval(s, w) - w.get(s).copied().unwrap_or_default()
    }

    /// `h_s = b_s + H_s(b_0, …, b_{s−1}) = F_s(b)` for `s < b.len()`.
    pub fn reduce_values(&self, b: &[C64]) -> Result<Vec<C64>> {
        if b.len() > self.ops.len() {
            return Err(SpfError::TowerTooDeep {
                requested: b.len() - 1,
                limit: self.depth(),
            });
        }
        Ok((0..b.len()).map(|s| self.eval(s, &b[..=s])).collect())
    }

    /// Whether `F_s − w_s` is free of `w_s`.
    pub fn h_is_well_defined(&self, s: usize) -> bool {
        let lead = unit(self.vars, s);
        self.ops[s].get(&lead) == Some(&1)
            && self.ops[s]
                .keys()
                .filter(|m| **m != lead)
                .all(|m| m[s] == 0 && m[s + 1..].iter().all(|&e| e == 0))
    }

    pub fn display(&self, s: usize) -> String {
        PolyDisplay(&self.ops[s]).to_string()
    }
}

struct PolyDisplay<'a>(&'a Poly);

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in self.0.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("w{i}") } else { format!("w{i}^{e}") })
                .collect();
            if *c != 1 {
                write!(f, "{c}")?;
                if !vars.is_empty() {
                    write!(f, "·")?;
                }
            }
            write!(f, "{}", vars.join("·"))?;
        }
        Ok(())
    }
}

/// `F_n(ρ, ρ', …, ρ^{(n)})` at `z`; equals `Q^{(n+1)}(z)/Q(z)`, which vanishes
/// identically when the fraction has order at most `n`.
pub fn ode_residual(tower: &DiffOperatorTower, spf: &SimpleFraction, n: usize, z: C64) -> Result<C64> {
    if n > tower.depth() {
        return Err(SpfError::TowerTooDeep {
            requested: n,
            limit: tower.depth(),
        });
    }
    let w = spf.derivatives(z, n)?;
    Ok(tower.eval(n, &w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use crate::numkit::ComplexPolynomial;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn mono(exps: &[u32], vars: usize) -> Vec<u32> {
        let mut m = exps.to_vec();
        m.resize(vars, 0);
        m
    }

    #[test]
    fn first_operators() {
        let t = build_tower(2).unwrap();
        assert_eq!(t.terms(0), vec![(mono(&[1], 3), 1)]);
        let f1: BTreeMap<_, _> = t.terms(1).into_iter().collect();
        assert_eq!(f1.len(), 2);
        assert_eq!(f1[&mono(&[2], 3)], 1);
        assert_eq!(f1[&mono(&[0, 1], 3)], 1);
        let f2: BTreeMap<_, _> = t.terms(2).into_iter().collect();
        assert_eq!(f2.len(), 3);
        assert_eq!(f2[&mono(&[3], 3)], 1);
        assert_eq!(f2[&mono(&[1, 1], 3)], 3);
        assert_eq!(f2[&mono(&[0, 0, 1], 3)], 1);
    }

    #[test]
    fn depth_limit() {
        assert!(build_tower(12).is_ok());
        assert!(matches!(build_tower(13), Err(SpfError::TowerTooDeep { .. })));
    }

    // Complete Bell polynomials: Y_0 = 1, Y_{n+1} = Σ_k C(n,k) Y_{n−k} x_{k+1};
    // F_s(w) = Y_{s+1}(w_0, …, w_s) with x_{k+1} := w_k.
    fn bell_oracle(s: usize, w: &[C64]) -> C64 {
        let mut y = vec![c64(1.0, 0.0)];
        for n in 0..=s {
            let mut acc = c64(0.0, 0.0);
            let mut binom = 1.0;
            for k in 0..=n {
                acc += binom * y[n - k] * w[k];
                binom = binom * (n - k) as f64 / (k + 1) as f64;
            }
            y.push(acc);
        }
        y[s + 1]
    }

    #[test]
    fn matches_complete_bell_polynomials() {
        let t = build_tower(MAX_TOWER_DEPTH).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for s in 0..=MAX_TOWER_DEPTH {
            let w: Vec<C64> = (0..=s).map(|_| c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
            let a = t.eval(s, &w);
            let b = bell_oracle(s, &w);
            assert!((a - b).norm() <= 1e-10 * (1.0 + b.norm()), "s={s}");
            assert!(t.h_is_well_defined(s));
        }
    }

    #[test]
    fn recursion_identity_holds_symbolically() {
        let t = build_tower(8).unwrap();
        for s in 0..8 {
            let rebuilt = add(&times_w0(&t.ops[s]), &derive(&t.ops[s]));
            assert_eq!(rebuilt, t.ops[s + 1]);
        }
    }

    #[test]
    fn reduce_values_examples() {
        let t = build_tower(3).unwrap();
        assert_eq!(t.reduce_values(&[c64(2.5, 1.0)]).unwrap(), vec![c64(2.5, 1.0)]);
        assert_eq!(
            t.reduce_values(&[c64(1.0, 0.0), c64(0.0, 0.0)]).unwrap(),
            vec![c64(1.0, 0.0), c64(1.0, 0.0)]
        );
        assert_eq!(
            t.reduce_values(&[c64(0.0, 0.0), c64(1.0, 0.0), c64(0.0, 0.0)]).unwrap(),
            vec![c64(0.0, 0.0), c64(1.0, 0.0), c64(0.0, 0.0)]
        );
        assert!(t.reduce_values(&[c64(1.0, 0.0); 5]).is_err());
    }

    #[test]
    fn reduced_values_are_derivative_ratios() {
        // u = Q, w = Q'/Q: F_s(w) = Q^{(s+1)}/Q
        let q = ComplexPolynomial::new(vec![c64(0.3, 1.0), c64(-1.0, 0.2), c64(0.5, 0.0), c64(1.0, -0.7), c64(0.2, 0.1)]);
        let spf = SimpleFraction::from_polynomial(&q).unwrap();
        let t = build_tower(5).unwrap();
        let z = c64(0.4, -0.3);
        let w = spf.derivatives(z, 5).unwrap();
        let h = t.reduce_values(&w).unwrap();
        for s in 0..=5 {
            let want = q.nth_derivative(s + 1).eval(z) / q.eval(z);
            assert!((h[s] - want).norm() <= 1e-9 * (1.0 + want.norm()), "s={s}");
        }
    }

    #[test]
    fn ode_examples() {
        let t = build_tower(4).unwrap();
        let single = SimpleFraction::new(vec![c64(0.0, 0.0)]);
        assert!(ode_residual(&t, &single, 1, c64(2.0, 0.0)).unwrap().norm() < 1e-16);
        let q = SimpleFraction::from_polynomial(&ComplexPolynomial::from_real(&[1.0, 1.0, 1.0])).unwrap();
        assert!(ode_residual(&t, &q, 2, c64(1.0, 0.0)).unwrap().norm() < 1e-14);
        let two = SimpleFraction::new(vec![c64(0.0, 0.0), c64(1.0, 0.0)]);
        // F_1 = ρ' + ρ² = Q''/Q = 2/(z(z−1)) at z = 3 is 1/3
        let r = ode_residual(&t, &two, 1, c64(3.0, 0.0)).unwrap();
        assert!((r - c64(1.0 / 3.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn display_reads_naturally() {
        let t = build_tower(2).unwrap();
        assert_eq!(t.display(2), "w0^3 + 3·w0·w1 + w2");
    }
}
