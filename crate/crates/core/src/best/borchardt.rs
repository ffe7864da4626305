//! The identity `det(A∘A) = det(A)·perm(A)` for Cauchy matrices
//! `A_{lj} = 1/(ξ_l − z_j)`, behind the Haar-type property of SPF systems.

use num_complex::Complex;
use serde::{Deserialize, Serialize};
use twofloat::TwoFloat;

use crate::error::{require, Result};
use crate::numkit::linalg::CMatrix;
use crate::C64;

/// Complex double-double; Cauchy matrices with close nodes are too
/// ill-conditioned for the identity to show up in plain `f64`.
type Dd = Complex<TwoFloat>;

fn dd(z: C64) -> Dd {
    Dd::new(TwoFloat::from(z.re), TwoFloat::from(z.im))
}

fn to_c64(z: Dd) -> C64 {
    C64::new(f64::from(z.re), f64::from(z.im))
}

fn dd_norm(z: Dd) -> f64 {
    to_c64(z).norm()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BorchardtReport {
    pub det_squared_entries: C64,
    pub det: C64,
    pub perm: C64,
    pub cauchy: C64,
    /// `|det(A∘A) − det(A)·perm(A)| / |det(A∘A)|`.
    pub identity_error: f64,
    /// `|det(A) − cauchy| / |det(A)|`.
    pub cauchy_error: f64,
}

/// Permanent by Ryser's inclusion–exclusion formula.
pub fn permanent(a: &CMatrix) -> Result<C64> {
    require(a.nrows() == a.ncols(), || "permanent needs a square matrix".into())?;
    let rows: Vec<Vec<Dd>> = a.row_iter().map(|r| r.iter().map(|&v| dd(v)).collect()).collect();
    Ok(to_c64(ryser(&rows)?))
}

fn ryser(a: &[Vec<Dd>]) -> Result<Dd> {
    let n = a.len();
    require(n <= 20, || format!("permanent of size {n} is too large"))?;
    let zero = Dd::new(TwoFloat::from(0.0), TwoFloat::from(0.0));
    let one = Dd::new(TwoFloat::from(1.0), TwoFloat::from(0.0));
    if n == 0 {
        return Ok(one);
    }
    let mut total = zero;
    for mask in 1u32..(1 << n) {
        let mut prod = one;
        for row in a {
            let s = (0..n).filter(|j| mask & (1 << j) != 0).fold(zero, |acc, j| acc + row[j]);
            prod *= s;
        }
        if (n as u32 - mask.count_ones()).is_multiple_of(2) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    Ok(total)
}

/// Determinant by Gaussian elimination with partial pivoting.
fn det(mut a: Vec<Vec<Dd>>) -> Dd {
    let n = a.len();
    let mut d = Dd::new(TwoFloat::from(1.0), TwoFloat::from(0.0));
    for k in 0..n {
        let p = (k..n).max_by(|&i, &j| dd_norm(a[i][k]).total_cmp(&dd_norm(a[j][k]))).unwrap();
        if p != k {
            a.swap(p, k);
            d = -d;
        }
        let pivot = a[k][k];
        d *= pivot;
        if dd_norm(pivot) == 0.0 {
            return pivot;
        }
        for i in (k + 1)..n {
            let f = a[i][k] / pivot;
            for j in k..n {
                let t = a[k][j];
                a[i][j] -= f * t;
            }
        }
    }
    d
}

fn cauchy_dd(xi: &[Dd], z: &[Dd]) -> Dd {
    let n = xi.len();
    let mut num = Dd::new(TwoFloat::from(1.0), TwoFloat::from(0.0));
    for l in 0..n {
        for j in (l + 1)..n {
            num = num * (xi[j] - xi[l]) * (z[l] - z[j]);
        }
    }
    let mut den = Dd::new(TwoFloat::from(1.0), TwoFloat::from(0.0));
    for &x in xi {
        for &p in z {
            den *= x - p;
        }
    }
    num / den
}

/// `Π_{l<j} (ξ_j − ξ_l)(z_l − z_j) / Π_{l,j} (ξ_l − z_j)`.
pub fn cauchy_determinant(xi: &[C64], z: &[C64]) -> C64 {
    let xi: Vec<Dd> = xi.iter().map(|&v| dd(v)).collect();
    let z: Vec<Dd> = z.iter().map(|&v| dd(v)).collect();
    to_c64(cauchy_dd(&xi, &z))
}

pub fn borchardt_check(xi: &[C64], z: &[C64]) -> Result<BorchardtReport> {
    require(xi.len() == z.len() && !xi.is_empty(), || "need equally many nodes and poles".into())?;
    let xi: Vec<Dd> = xi.iter().map(|&v| dd(v)).collect();
    let z: Vec<Dd> = z.iter().map(|&v| dd(v)).collect();
    let one = Dd::new(TwoFloat::from(1.0), TwoFloat::from(0.0));
    let a: Vec<Vec<Dd>> = xi.iter().map(|&x| z.iter().map(|&p| one / (x - p)).collect()).collect();
    let sq: Vec<Vec<Dd>> = a.iter().map(|r| r.iter().map(|&v| v * v).collect()).collect();
    let det_sq = det(sq);
    let det_a = det(a.clone());
    let perm = ryser(&a)?;
    let cauchy = cauchy_dd(&xi, &z);
    Ok(BorchardtReport {
        identity_error: dd_norm(det_sq - det_a * perm) / dd_norm(det_sq),
        cauchy_error: dd_norm(det_a - cauchy) / dd_norm(det_a),
        det_squared_entries: to_c64(det_sq),
        det: to_c64(det_a),
        perm: to_c64(perm),
        cauchy: to_c64(cauchy),
    })
}
