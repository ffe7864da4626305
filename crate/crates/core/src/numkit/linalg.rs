//! Dense complex linear algebra on top of nalgebra.

use nalgebra::DMatrix;

use crate::error::{Result, SpfError};
use crate::C64;

/// Row-major complex matrix used at module boundaries.
pub type CMatrix = DMatrix<C64>;

/// Orthonormal basis of `{v : ‖Av‖ ≤ tol·‖A‖·‖v‖}`.
///
/// Computed from the right singular vectors of `A` padded with zero rows to a
/// square matrix, so wide systems get their full nullspace. Returns an empty
/// basis when `A` has full column rank within `tol`.
pub fn nullspace(a: &CMatrix, tol: f64) -> Vec<Vec<C64>> {
    let (rows, cols) = a.shape();
    if cols == 0 {
        return Vec::new();
    }
    let n = rows.max(cols);
    let mut padded = CMatrix::zeros(n, cols);
    padded.view_mut((0, 0), (rows, cols)).copy_from(a);
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("requested V^H");
    let sigma = &svd.singular_values;
    let top = sigma.iter().cloned().fold(0.0, f64::max);
    let threshold = tol * top.max(f64::MIN_POSITIVE);
    (0..sigma.len())
        .filter(|&i| sigma[i] <= threshold || top == 0.0)
        .map(|i| v_t.row(i).iter().map(|c| c.conj()).collect())
        .collect()
}

/// 2-norm condition number via singular values (`inf` when singular).
pub fn condition_number(a: &CMatrix) -> f64 {
    let sv = a.clone().singular_values();
    let max = sv.iter().cloned().fold(0.0, f64::max);
    let min = sv.iter().cloned().fold(f64::INFINITY, f64::min);
    if min == 0.0 {
        f64::INFINITY
    } else {
        max / min
    }
}

/// Solve a square system by LU with full pivoting; also returns the
/// condition number so callers can decide on regularity.
pub fn solve_full_pivot(a: &CMatrix, b: &[C64]) -> Result<(Vec<C64>, f64)> {
    let cond = condition_number(a);
    let rhs = nalgebra::DVector::from_column_slice(b);
    let x = a
        .clone()
        .full_piv_lu()
        .solve(&rhs)
        .ok_or_else(|| SpfError::Degenerate("singular linear system".into()))?;
    Ok((x.iter().copied().collect(), cond))
}

pub fn mat_from_rows(rows: &[Vec<C64>]) -> CMatrix {
    let r = rows.len();
    let c = rows.first().map_or(0, |row| row.len());
    CMatrix::from_fn(r, c, |i, j| rows[i][j])
}

pub fn mat_vec(a: &CMatrix, v: &[C64]) -> Vec<C64> {
    (0..a.nrows())
        .map(|i| (0..a.ncols()).map(|j| a[(i, j)] * v[j]).sum())
        .collect()
}

pub fn vec_norm(v: &[C64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn spectral_norm(a: &CMatrix) -> f64 {
        a.clone().singular_values().iter().cloned().fold(0.0, f64::max)
    }

    #[test]
    fn one_by_two() {
        let a = mat_from_rows(&[vec![c64(1.0, 0.0), c64(-1.0, 0.0)]]);
        let basis = nullspace(&a, 1e-12);
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        let s = std::f64::consts::FRAC_1_SQRT_2;
        // up to a unit phase the vector is (1, 1)/√2
        let phase = v[0] / v[0].norm();
        assert!((v[0] / phase - c64(s, 0.0)).norm() < 1e-12);
        assert!((v[1] / phase - c64(s, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn full_rank_square_is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = CMatrix::from_fn(6, 6, |_, _| c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        assert!(nullspace(&a, 1e-10).is_empty());
    }

    #[test]
    fn basis_is_orthonormal_and_annihilated() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let a = CMatrix::from_fn(3, 7, |_, _| c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        let basis = nullspace(&a, 1e-10);
        assert_eq!(basis.len(), 4);
        let na = spectral_norm(&a);
        for (i, u) in basis.iter().enumerate() {
            assert!(vec_norm(&mat_vec(&a, u)) <= 1e-10 * na * vec_norm(u));
            for (j, w) in basis.iter().enumerate() {
                let dot: C64 = u.iter().zip(w).map(|(x, y)| x.conj() * y).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((dot - c64(want, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn solve_small_system() {
        let a = mat_from_rows(&[
            vec![c64(2.0, 0.0), c64(1.0, 0.0)],
            vec![c64(1.0, 0.0), c64(3.0, 0.0)],
        ]);
        let (x, cond) = solve_full_pivot(&a, &[c64(3.0, 0.0), c64(5.0, 0.0)]).unwrap();
        assert!((x[0] - c64(0.8, 0.0)).norm() < 1e-14);
        assert!((x[1] - c64(1.4, 0.0)).norm() < 1e-14);
        assert!(cond > 1.0 && cond < 10.0);
    }
}
