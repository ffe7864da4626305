use serde::{Deserialize, Serialize};

use super::ComplexPolynomial;
use crate::error::{require, Result, SpfError};
use crate::C64;

/// Default relative residual tolerance for [`find_roots`].
pub const DEFAULT_ROOT_TOL: f64 = 1e-12;

const MAX_ITERATIONS: usize = 600;

/// Roots of a polynomial, listed with multiplicity.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootSet {
    pub roots: Vec<C64>,
    /// `max |p(r)|` over the returned roots.
    pub residual: f64,
}

impl RootSet {
    /// Distinct roots paired with their multiplicities, in order of first
    /// appearance.
    pub fn clusters(&self) -> Vec<(C64, usize)> {
        let mut out: Vec<(C64, usize)> = Vec::new();
        for &r in &self.roots {
            match out.iter_mut().find(|(c, _)| *c == r) {
                Some((_, m)) => *m += 1,
                None => out.push((r, 1)),
            }
        }
        out
    }
}

/// All roots of `p` by Aberth–Ehrlich simultaneous iteration.
///
/// Exact zero roots are deflated first. Roots closer than `sqrt(tol)` are
/// merged into a cluster and replaced by the cluster centroid, which is how
/// multiplicities are reported.
pub fn find_roots(p: &ComplexPolynomial, tol: f64) -> Result<RootSet> {
    require(tol > 0.0 && tol.is_finite(), || format!("tol must be positive, got {tol}"))?;
    let degree = match p.degree() {
        Some(d) if d >= 1 => d,
        _ => {
            return Err(SpfError::Precondition(
                "find_roots needs a polynomial of degree >= 1".into(),
            ))
        }
    };

    let zeros = p.coeffs().iter().take_while(|c| c.norm() == 0.0).count();
    let reduced = ComplexPolynomial::new(p.coeffs()[zeros..].to_vec()).monic();
    let mut roots = vec![C64::new(0.0, 0.0); zeros];

    if let Some(d) = reduced.degree().filter(|&d| d > 0) {
        let found = aberth(&reduced, d)?;
        roots.extend(found);
    }

    let roots = polish_clusters(p, merge_clusters(p, roots, tol));
    let scale = p.max_abs_coeff();
    let mut residual: f64 = 0.0;
    let mut ok = true;
    for &r in &roots {
        let v = p.eval(r).norm();
        residual = residual.max(v);
        if v > tol * scale * (1.0 + r.norm()).powi(degree as i32) {
            ok = false;
        }
    }
    if !ok {
        return Err(SpfError::RootsNotConverged {
            iterations: MAX_ITERATIONS,
            residual,
            partial: roots,
        });
    }
    Ok(RootSet { roots, residual })
}

/// Rounding-error scale of Horner evaluation at `z`.
fn horner_bound(p: &ComplexPolynomial, z: C64) -> f64 {
    let r = z.norm();
    p.coeffs().iter().rev().fold(0.0, |acc, c| acc * r + c.norm())
}

fn aberth(p: &ComplexPolynomial, degree: usize) -> Result<Vec<C64>> {
    // Cauchy bound: every root of the monic polynomial lies within 1 + max|a_i|.
    let radius = 1.0 + p.coeffs()[..degree].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<C64> = (0..degree)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / degree as f64 + 0.4;
            C64::from_polar(radius, theta)
        })
        .collect();
    let mut done = vec![false; degree];
    let eps = f64::EPSILON;

    for _ in 0..MAX_ITERATIONS {
        let mut all_done = true;
        for i in 0..degree {
            if done[i] {
                continue;
            }
            let (v, dv) = p.eval_with_derivative(z[i]);
            if v.norm() <= 4.0 * eps * horner_bound(p, z[i]) {
                done[i] = true;
                continue;
            }
            let ratio = v / dv;
            let repulsion: C64 = (0..degree)
                .filter(|&j| j != i)
                .map(|j| C64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let step = ratio / (C64::new(1.0, 0.0) - ratio * repulsion);
            if !step.re.is_finite() || !step.im.is_finite() {
                // derivative vanished exactly; nudge off the critical point
                let bump = C64::new(1e-8, 1e-8) * (1.0 + z[i].norm());
                z[i] += bump;
                all_done = false;
                continue;
            }
            z[i] -= step;
            if step.norm() <= 2.0 * eps * z[i].norm() {
                done[i] = true;
            } else {
                all_done = false;
            }
        }
        if all_done {
            break;
        }
    }
    Ok(z)
}

/// Single-linkage groups of roots closer than `radius·(1 + |r|)`.
fn link_groups(roots: &[C64], radius: f64) -> Vec<Vec<usize>> {
    let n = roots.len();
    let mut group: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            if (roots[i] - roots[j]).norm() <= radius * (1.0 + roots[i].norm()) {
                let (gi, gj) = (group[i], group[j]);
                if gi != gj {
                    for g in group.iter_mut().filter(|g| **g == gj) {
                        *g = gi;
                    }
                }
            }
        }
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        match out.iter_mut().find(|g| group[g[0]] == group[i]) {
            Some(g) => g.push(i),
            None => out.push(vec![i]),
        }
    }
    out
}

/// Replace each cluster by its centroid, repeated once per member.
///
/// Roots within `sqrt(tol)` always merge. A wider candidate group (radius
/// `tol^{1/4}`) merges too when its centroid passes the residual test as an
/// m-fold root; that catches the `eps^{1/m}` scatter Aberth produces around
/// multiple roots.
fn merge_clusters(p: &ComplexPolynomial, roots: Vec<C64>, tol: f64) -> Vec<C64> {
    let degree = p.degree().unwrap_or(0) as i32;
    let scale = p.max_abs_coeff();
    let passes = |c: C64| p.eval(c).norm() <= tol * scale * (1.0 + c.norm()).powi(degree);
    let centroid = |idx: &[usize]| idx.iter().map(|&i| roots[i]).sum::<C64>() / idx.len() as f64;

    let mut out = roots.clone();
    for group in link_groups(&roots, tol.powf(0.25)) {
        if group.len() < 2 {
            continue;
        }
        let c = centroid(&group);
        if passes(c) {
            for &i in &group {
                out[i] = c;
            }
            continue;
        }
        let members: Vec<C64> = group.iter().map(|&i| roots[i]).collect();
        for sub in link_groups(&members, tol.sqrt()) {
            if sub.len() > 1 {
                let idx: Vec<usize> = sub.iter().map(|&k| group[k]).collect();
                let c = centroid(&idx);
                for &i in &idx {
                    out[i] = c;
                }
            }
        }
    }
    out
}

/// Newton on `p^{(m−1)}`, where an `m`-fold root is simple, starting from
/// each cluster centroid. A step is kept only if `|p|` does not grow.
fn polish_clusters(p: &ComplexPolynomial, mut roots: Vec<C64>) -> Vec<C64> {
    let set = RootSet { roots: roots.clone(), residual: 0.0 };
    for (c, m) in set.clusters() {
        if m < 2 {
            continue;
        }
        let d = p.nth_derivative(m - 1);
        let mut x = c;
        for _ in 0..8 {
            let (v, dv) = d.eval_with_derivative(x);
            if dv.norm() == 0.0 {
                break;
            }
            let next = x - v / dv;
            if !(next.re.is_finite() && next.im.is_finite()) || p.eval(next).norm() > p.eval(x).norm() {
                break;
            }
            x = next;
        }
        for r in roots.iter_mut().filter(|r| **r == c) {
            *r = x;
        }
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sorted(mut v: Vec<C64>) -> Vec<C64> {
        v.sort_by(|a, b| a.im.partial_cmp(&b.im).unwrap().then(a.re.partial_cmp(&b.re).unwrap()));
        v
    }

    #[test]
    fn unit_imaginary_pair() {
        let p = ComplexPolynomial::from_real(&[1.0, 0.0, 1.0]);
        let r = sorted(find_roots(&p, 1e-12).unwrap().roots);
        assert!((r[0] - c64(0.0, -1.0)).norm() < 1e-14);
        assert!((r[1] - c64(0.0, 1.0)).norm() < 1e-14);
    }

    #[test]
    fn quadratic_formula() {
        let p = ComplexPolynomial::from_real(&[1.0, 1.0, 1.0]);
        let r = sorted(find_roots(&p, 1e-12).unwrap().roots);
        let s = 3f64.sqrt() / 2.0;
        assert!((r[0] - c64(-0.5, -s)).norm() < 1e-14);
        assert!((r[1] - c64(-0.5, s)).norm() < 1e-14);
    }

    #[test]
    fn triple_root_is_clustered() {
        let p = ComplexPolynomial::from_real(&[-1.0, 3.0, -3.0, 1.0]);
        let set = find_roots(&p, 1e-12).unwrap();
        assert_eq!(set.roots.len(), 3);
        for r in &set.roots {
            assert!((r - c64(1.0, 0.0)).norm() < 1e-5, "{r}");
        }
        assert_eq!(set.clusters().len(), 1);
        assert_eq!(set.clusters()[0].1, 3);
    }

    #[test]
    fn zero_roots_deflated() {
        let p = ComplexPolynomial::from_real(&[0.0, 0.0, -2.0, 1.0]);
        let r = sorted(find_roots(&p, 1e-12).unwrap().roots);
        assert_eq!(r[0], c64(0.0, 0.0));
        assert_eq!(r[1], c64(0.0, 0.0));
        assert!((r[2] - c64(2.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn constant_rejected() {
        assert!(find_roots(&ComplexPolynomial::one(), 1e-12).is_err());
        assert!(find_roots(&ComplexPolynomial::from_real(&[1.0, 1.0]), 0.0).is_err());
    }

    #[test]
    fn residual_bound_on_random_polynomials() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let d = rng.gen_range(1..=30);
            let p = ComplexPolynomial::new(
                (0..=d).map(|_| c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect(),
            );
            let set = find_roots(&p, 1e-12).unwrap();
            assert_eq!(set.roots.len(), p.degree().unwrap());
            for r in &set.roots {
                let bound = 1e-12 * p.max_abs_coeff() * (1.0 + r.norm()).powi(d);
                assert!(p.eval(*r).norm() <= bound);
            }
        }
    }
}
