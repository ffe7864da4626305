//! Generalized interpolation: conditions `Q^{(s+1)}(ξ) = h_s·Q(ξ)` on the
//! generating polynomial, which reduce to ordinary SPF interpolation at every
//! node where `Q(ξ) ≠ 0`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::spf_of;
use crate::error::{require, Result};
use crate::numkit::linalg::{mat_from_rows, nullspace, vec_norm};
use crate::numkit::ComplexPolynomial;
use crate::spf::{build_tower, SimpleFraction};
use crate::C64;

/// Relative threshold below which `|Q(ξ)|` marks a node singular.
pub const DEFAULT_SINGULAR_TOL: f64 = 1e-8;

const NULLSPACE_TOL: f64 = 1e-11;
const RANDOM_COMBINATIONS: usize = 64;

/// Nodes `ξ_j` with multiplicities `m_j` and prescribed values
/// `b_{j,s} = ρ^{(s)}(ξ_j)`, `s < m_j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InterpolationTable {
    pub nodes: Vec<C64>,
    pub multiplicities: Vec<usize>,
    pub values: Vec<Vec<C64>>,
}

impl InterpolationTable {
    pub fn new(nodes: Vec<C64>, values: Vec<Vec<C64>>) -> Result<Self> {
        require(nodes.len() == values.len(), || "one value list per node".into())?;
        require(values.iter().all(|v| !v.is_empty()), || "every node needs a value".into())?;
        for i in 0..nodes.len() {
            for j in (i + 1)..nodes.len() {
                require(nodes[i] != nodes[j], || format!("repeated node {}", nodes[i]))?;
            }
        }
        let multiplicities = values.iter().map(Vec::len).collect();
        Ok(Self { nodes, multiplicities, values })
    }

    /// Simple nodes, one value each.
    pub fn simple(nodes: &[C64], values: &[C64]) -> Result<Self> {
        Self::new(nodes.to_vec(), values.iter().map(|&b| vec![b]).collect())
    }

    /// Total number of conditions `M = Σ m_j`.
    pub fn total(&self) -> usize {
        self.multiplicities.iter().sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NodeStatus {
    Regular,
    Singular,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneralizedSolution {
    pub q: ComplexPolynomial,
    pub spf: SimpleFraction,
    pub node_status: Vec<NodeStatus>,
}

impl GeneralizedSolution {
    fn build(q: ComplexPolynomial, nodes: &[C64]) -> Result<Self> {
        let spf = spf_of(&q)?;
        let node_status = classify_nodes(&q, nodes, DEFAULT_SINGULAR_TOL);
        Ok(Self { q, spf, node_status })
    }

    pub fn all_regular(&self) -> bool {
        self.node_status.iter().all(|s| *s == NodeStatus::Regular)
    }
}

/// Whether some member of the solution space is regular at every node.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Ordinary {
    /// An all-regular member, i.e. an ordinary interpolating fraction.
    Solvable(GeneralizedSolution),
    /// These nodes are zeros of every solution, so no ordinary solution of
    /// order at most `n` exists.
    Unsolvable { forced_singular: Vec<usize> },
    /// No node is forced singular, yet the seeded search found no member
    /// clearing the tolerance everywhere.
    NotFound,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneralizedFamily {
    /// Orthonormal nullspace basis, each scaled so its largest coefficient is 1.
    pub basis: Vec<ComplexPolynomial>,
    /// One solution per basis vector.
    pub solutions: Vec<GeneralizedSolution>,
    pub ordinary: Ordinary,
}

/// Singular iff `|Q(ξ_j)| ≤ tol·max|q_i|·(1 + |ξ_j|)^deg`.
pub fn classify_nodes(q: &ComplexPolynomial, nodes: &[C64], tol: f64) -> Vec<NodeStatus> {
    let scale = q.max_abs_coeff();
    let deg = q.degree().unwrap_or(0) as i32;
    nodes
        .iter()
        .map(|&x| {
            if q.eval(x).norm() <= tol * scale * (1.0 + x.norm()).powi(deg) {
                NodeStatus::Singular
            } else {
                NodeStatus::Regular
            }
        })
        .collect()
}

/// The interpolant of the constant `c` at `n` distinct nodes:
/// `Q = Σ_{k=0}^n c^{−k} Π^{(k)}`, `Π = Π (z − ξ_j)`, so that
/// `ρ − c = −c·Π/Q`.
pub fn interpolate_constant(c: C64, nodes: &[C64]) -> Result<GeneralizedSolution> {
    require(c != C64::new(0.0, 0.0), || "the constant must be nonzero".into())?;
    InterpolationTable::simple(nodes, &vec![c; nodes.len()])?;
    let pi = ComplexPolynomial::from_roots(nodes);
    GeneralizedSolution::build(constant_generator(c, &pi), nodes)
}

pub(crate) fn constant_generator(c: C64, pi: &ComplexPolynomial) -> ComplexPolynomial {
    let inv = C64::new(1.0, 0.0) / c;
    let mut q = pi.clone();
    let mut d = pi.clone();
    let mut w = C64::new(1.0, 0.0);
    for _ in 0..pi.degree().unwrap_or(0) {
        d = d.derivative();
        w *= inv;
        q = &q + &d.scale(w);
    }
    q
}

/// `ρ(z) − c` evaluated as `−c·Π(z)/Q(z)`.
pub fn constant_residual(c: C64, pi: &ComplexPolynomial, q: &ComplexPolynomial, z: C64) -> C64 {
    -c * pi.eval(z) / q.eval(z)
}

/// `Q'(ξ_j) = b_j·Q(ξ_j)` with `deg Q ≤ n`.
pub fn generalized_interp_simple(nodes: &[C64], values: &[C64], n: usize) -> Result<GeneralizedFamily> {
    let table = InterpolationTable::simple(nodes, values)?;
    generalized_interp_multiple(&table, n)
}

/// `Q^{(s+1)}(ξ_j) = h_{j,s}·Q(ξ_j)` for `s < m_j`, `deg Q ≤ n`, where `h_{j,s}`
/// are the table values pushed through the operator tower.
pub fn generalized_interp_multiple(table: &InterpolationTable, n: usize) -> Result<GeneralizedFamily> {
    let depth = table.multiplicities.iter().copied().max().unwrap_or(1);
    let tower = build_tower(depth - 1)?;
    let mut rows = Vec::with_capacity(table.total());
    for (j, &x) in table.nodes.iter().enumerate() {
        let h = tower.reduce_values(&table.values[j])?;
        for (s, &hs) in h.iter().enumerate() {
            let mut row: Vec<C64> = (0..=n)
                .map(|i| derivative_coeff(i, s + 1, x) - hs * x.powu(i as u32))
                .collect();
            let norm = vec_norm(&row);
            if norm > 0.0 {
                row.iter_mut().for_each(|v| *v /= norm);
            }
            rows.push(row);
        }
    }
    let basis: Vec<ComplexPolynomial> = if rows.is_empty() {
        (0..=n).map(monomial).collect()
    } else {
        nullspace(&mat_from_rows(&rows), NULLSPACE_TOL)
            .into_iter()
            .map(|v| normalise(ComplexPolynomial::new(v)))
            .collect()
    };
    let solutions = basis
        .iter()
        .map(|q| GeneralizedSolution::build(q.clone(), &table.nodes))
        .collect::<Result<Vec<_>>>()?;
    let ordinary = search_regular(&basis, &solutions, &table.nodes, n)?;
    Ok(GeneralizedFamily { basis, solutions, ordinary })
}

/// Coefficient of `q_i` in `Q^{(k)}(x)`.
fn derivative_coeff(i: usize, k: usize, x: C64) -> C64 {
    if i < k {
        return C64::new(0.0, 0.0);
    }
    let falling: f64 = ((i - k + 1)..=i).map(|v| v as f64).product();
    falling * x.powu((i - k) as u32)
}

fn monomial(i: usize) -> ComplexPolynomial {
    let mut c = vec![C64::new(0.0, 0.0); i + 1];
    c[i] = C64::new(1.0, 0.0);
    ComplexPolynomial::new(c)
}

fn normalise(q: ComplexPolynomial) -> ComplexPolynomial {
    let big = q
        .coeffs()
        .iter()
        .copied()
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        .unwrap_or(C64::new(1.0, 0.0));
    if big.norm() == 0.0 {
        return q;
    }
    q.scale(C64::new(1.0, 0.0) / big)
}

/// A node is forced singular exactly when the evaluation functional
/// `c ↦ Σ c_i Q_i(ξ)` vanishes on the whole basis; otherwise each node
/// excludes only a hyperplane, and a generic combination is regular everywhere.
fn search_regular(
    basis: &[ComplexPolynomial],
    solutions: &[GeneralizedSolution],
    nodes: &[C64],
    n: usize,
) -> Result<Ordinary> {
    let forced_singular: Vec<usize> = nodes
        .iter()
        .enumerate()
        .filter(|(_, &x)| {
            let scale = DEFAULT_SINGULAR_TOL * (1.0 + x.norm()).powi(n as i32);
            basis.iter().all(|q| q.eval(x).norm() <= scale)
        })
        .map(|(j, _)| j)
        .collect();
    if !forced_singular.is_empty() {
        return Ok(Ordinary::Unsolvable { forced_singular });
    }
    if let Some(s) = solutions.iter().find(|s| s.all_regular()) {
        return Ok(Ordinary::Solvable(s.clone()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..RANDOM_COMBINATIONS {
        let mut q = ComplexPolynomial::zero();
        for b in basis {
            let w = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            q = &q + &b.scale(w);
        }
        let q = normalise(q);
        if classify_nodes(&q, nodes, DEFAULT_SINGULAR_TOL)
            .iter()
            .all(|s| *s == NodeStatus::Regular)
        {
            return Ok(Ordinary::Solvable(GeneralizedSolution::build(q, nodes)?));
        }
    }
    Ok(Ordinary::NotFound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use crate::interp::pade_spf;
    use crate::numkit::PowerSeries;
    use crate::spf::pole_distance;

    fn r(x: f64) -> C64 {
        c64(x, 0.0)
    }

    #[test]
    fn constant_single_node() {
        let c = c64(0.7, 0.2);
        let s = interpolate_constant(c, &[r(0.0)]).unwrap();
        assert!((s.q.coeff(0) - C64::new(1.0, 0.0) / c).norm() < 1e-15);
        assert!((s.q.coeff(1) - r(1.0)).norm() < 1e-15);
        assert!((s.spf.value(r(0.0)).unwrap() - c).norm() < 1e-14);
        assert!(s.all_regular());
    }

    #[test]
    fn constant_identity_and_symmetry() {
        let nodes = [r(-0.8), r(-0.3), r(0.3), r(0.8)];
        let c = r(0.6);
        let s = interpolate_constant(c, &nodes).unwrap();
        assert_eq!(s.q.degree(), Some(4));
        assert!(s.q.coeffs().iter().all(|v| v.im.abs() < 1e-15));
        let pi = ComplexPolynomial::from_roots(&nodes);
        for z in [c64(0.1, 0.2), c64(-1.5, 0.3), c64(2.0, -1.0)] {
            let lhs = s.spf.value(z).unwrap() - c;
            let rhs = constant_residual(c, &pi, &s.q, z);
            assert!((lhs - rhs).norm() < 1e-12);
        }
        for &x in &nodes {
            assert!((s.spf.value(x).unwrap() - c).norm() < 1e-12);
        }
    }

    #[test]
    fn first_example_family() {
        let fam = generalized_interp_simple(&[r(-1.0), r(1.0)], &[r(-1.0), r(1.0)], 2).unwrap();
        assert_eq!(fam.basis.len(), 2);
        assert!(matches!(fam.ordinary, Ordinary::Solvable(_)));
        // the span is {z, 1 + z²}
        for q in &fam.basis {
            assert!((q.coeff(0) - q.coeff(2)).norm() < 1e-12);
        }
        let nodes = [r(-1.0), r(1.0)];
        for alpha in [-3.0, -1.0, 0.0, 0.5, 2.5] {
            let q = ComplexPolynomial::from_real(&[1.0, alpha, 1.0]);
            assert!(classify_nodes(&q, &nodes, DEFAULT_SINGULAR_TOL).iter().all(|s| *s == NodeStatus::Regular));
        }
        let q = ComplexPolynomial::from_real(&[1.0, 2.0, 1.0]);
        assert_eq!(
            classify_nodes(&q, &nodes, DEFAULT_SINGULAR_TOL),
            vec![NodeStatus::Singular, NodeStatus::Regular]
        );
        let q = ComplexPolynomial::from_real(&[1.0, -2.0, 1.0]);
        assert_eq!(classify_nodes(&q, &nodes, DEFAULT_SINGULAR_TOL)[1], NodeStatus::Singular);
        let q = ComplexPolynomial::from_real(&[1.0, 1.0, 1.0]);
        assert!(classify_nodes(&q, &nodes, DEFAULT_SINGULAR_TOL).iter().all(|s| *s == NodeStatus::Regular));
        assert!(classify_nodes(&ComplexPolynomial::one(), &nodes, 1e-8).iter().all(|s| *s == NodeStatus::Regular));
    }

    #[test]
    fn second_example_is_unsolvable() {
        let s2 = 2f64.sqrt();
        let s3 = 3f64.sqrt();
        let nodes = [r(s2), r(-s2), r(1.0 / s3), r(-1.0 / s3), r(0.0)];
        let values = [r(3.0 * s2), r(-3.0 * s2), r(s3), r(-s3), r(1.0)];
        let fam = generalized_interp_simple(&nodes, &values, 5).unwrap();
        assert_eq!(fam.basis.len(), 2);
        for q in &fam.basis {
            assert!(q.coeff(0).norm() < 1e-12);
            // Q = a₂z² + 2a₃z³ − a₂z⁴ − 3a₃z⁵
            assert!((q.coeff(4) + q.coeff(2)).norm() < 1e-10);
            assert!((2.0 * q.coeff(5) + 3.0 * q.coeff(3)).norm() < 1e-10);
            assert!(q.coeff(1).norm() < 1e-10);
        }
        assert_eq!(fam.ordinary, Ordinary::Unsolvable { forced_singular: vec![4] });
    }

    #[test]
    fn recovers_sampled_fraction() {
        let truth = SimpleFraction::new(vec![c64(0.3, 1.2), c64(-1.1, -0.4), c64(2.0, 0.5)]);
        let nodes = [r(-0.5), r(0.0), r(0.7)];
        let values: Vec<C64> = nodes.iter().map(|&x| truth.value(x).unwrap()).collect();
        let fam = generalized_interp_simple(&nodes, &values, 3).unwrap();
        assert_eq!(fam.basis.len(), 1);
        assert!(pole_distance(&fam.solutions[0].spf.poles, &truth.poles) < 1e-9);
        assert!(fam.solutions[0].all_regular());
    }

    #[test]
    fn constant_table_matches_closed_form() {
        let nodes = [r(-0.9), r(-0.2), r(0.4), r(0.95)];
        let c = r(0.4);
        let fam = generalized_interp_simple(&nodes, &[c; 4], 4).unwrap();
        assert_eq!(fam.basis.len(), 1);
        let direct = interpolate_constant(c, &nodes).unwrap();
        assert!(pole_distance(&fam.solutions[0].spf.poles, &direct.spf.poles) < 1e-9);
    }

    #[test]
    fn single_multiple_node_is_pade() {
        let f = PowerSeries::from_real(&[0.3, -0.2, 0.45, 0.1, -0.35]);
        let n = 5;
        let mut fact = 1.0;
        let values: Vec<C64> = (0..n)
            .map(|s| {
                if s > 0 {
                    fact *= s as f64;
                }
                f.coeff(s) * fact
            })
            .collect();
        let table = InterpolationTable::new(vec![r(0.0)], vec![values]).unwrap();
        let fam = generalized_interp_multiple(&table, n).unwrap();
        assert_eq!(fam.basis.len(), 1);
        let pade = pade_spf(&f, n).unwrap();
        assert!(pole_distance(&fam.solutions[0].spf.poles, &pade.poles) < 1e-8);
    }

    #[test]
    fn underdetermined_tables_are_solvable() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..40 {
            let n = rng.gen_range(2..=8);
            let k = rng.gen_range(1..=n / 2);
            let budget = n - k + 1;
            let mut mult = vec![1usize; k];
            for _ in k..rng.gen_range(k..=budget) {
                let j = rng.gen_range(0..k);
                mult[j] += 1;
            }
            let nodes: Vec<C64> = (0..k).map(|j| c64(j as f64 - 0.3 * k as f64, rng.gen_range(-0.5..0.5))).collect();
            let values = mult
                .iter()
                .map(|&m| (0..m).map(|_| c64(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))).collect())
                .collect();
            let table = InterpolationTable::new(nodes, values).unwrap();
            let fam = generalized_interp_multiple(&table, n).unwrap();
            assert!(!fam.basis.is_empty());
            assert!(matches!(fam.ordinary, Ordinary::Solvable(_)), "{table:?}");
        }
    }

    #[test]
    fn rejects_repeated_nodes() {
        assert!(InterpolationTable::simple(&[r(1.0), r(1.0)], &[r(0.0), r(0.0)]).is_err());
        assert!(interpolate_constant(r(0.0), &[r(0.0)]).is_err());
    }
}
