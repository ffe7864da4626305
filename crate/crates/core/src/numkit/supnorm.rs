//! Sup-norms of real functions on intervals: dense Chebyshev sampling
//! followed by golden-section refinement at every local maximum of `|g|`.

use serde::{Deserialize, Serialize};

use crate::error::{require, Result, SpfError};
use crate::par;

/// Default number of Chebyshev sample points.
pub const DEFAULT_GRID: usize = 4097;
/// Default relative tolerance for [`sup_norm`].
pub const DEFAULT_SUP_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SupNorm {
    pub value: f64,
    pub argmax: f64,
}

/// A refined local maximum of `|g|`; `value` keeps the sign of `g`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Extremum {
    pub x: f64,
    pub value: f64,
}

/// Chebyshev–Lobatto points on `[a, b]` in increasing order.
pub fn chebyshev_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    let n = n.max(2);
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut x: Vec<f64> = (0..n)
        // sine form keeps the grid symmetric and hits the midpoint exactly
        .map(|i| {
            let t = (n as f64 - 1.0 - 2.0 * i as f64) / (2.0 * (n - 1) as f64);
            mid - half * (std::f64::consts::PI * t).sin()
        })
        .collect();
    x[0] = a;
    x[n - 1] = b;
    x
}

/// Maximise `f` on `[lo, hi]` by golden-section search; returns `(x, f(x))`.
pub fn golden_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..200 {
        if hi - lo <= 4.0 * f64::EPSILON * (1.0 + lo.abs().max(hi.abs())) {
            break;
        }
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        }
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// All local maxima of `|g|` on `[a, b]`, refined, sorted by position.
///
/// Endpoints count as candidates. Fails on the first non-finite sample.
pub fn local_extrema<G>(g: G, a: f64, b: f64, grid: usize) -> Result<Vec<Extremum>>
where
    G: Fn(f64) -> f64 + Sync + Send,
{
    require(a < b, || format!("empty interval [{a}, {b}]"))?;
    let x = chebyshev_grid(a, b, grid);
    let y = par::map_slice(&x, |&t| g(t));
    if let Some(i) = y.iter().position(|v| !v.is_finite()) {
        return Err(SpfError::PoleOnInterval(x[i]));
    }
    let n = x.len();
    let abs: Vec<f64> = y.iter().map(|v| v.abs()).collect();
    let peaks: Vec<usize> = (0..n)
        .filter(|&i| {
            let left = i == 0 || abs[i] >= abs[i - 1];
            let right = i == n - 1 || abs[i] > abs[i + 1];
            left && right
        })
        .collect();

    let refined = par::map_slice(&peaks, |&i| {
        let lo = x[i.saturating_sub(1)];
        let hi = x[(i + 1).min(n - 1)];
        let (xm, _) = golden_max(|t| g(t).abs(), lo, hi);
        let vm = g(xm);
        // keep the grid point when refinement did not improve (e.g. endpoint maxima)
        if vm.abs() >= abs[i] {
            Extremum { x: xm, value: vm }
        } else {
            Extremum { x: x[i], value: y[i] }
        }
    });
    if let Some(e) = refined.iter().find(|e| !e.value.is_finite()) {
        return Err(SpfError::PoleOnInterval(e.x));
    }
    let mut out = refined;
    out.sort_by(|p, q| p.x.total_cmp(&q.x));
    out.dedup_by(|p, q| (p.x - q.x).abs() <= 1e-13 * (1.0 + p.x.abs()));
    Ok(out)
}

/// `max_{[a,b]} |g|` and a point where it is attained.
pub fn sup_norm<G>(g: G, a: f64, b: f64, tol: f64) -> Result<SupNorm>
where
    G: Fn(f64) -> f64 + Sync + Send,
{
    sup_norm_with_grid(g, a, b, tol, DEFAULT_GRID)
}

pub fn sup_norm_with_grid<G>(g: G, a: f64, b: f64, tol: f64, grid: usize) -> Result<SupNorm>
where
    G: Fn(f64) -> f64 + Sync + Send,
{
    require(tol > 0.0, || "tolerance must be positive".into())?;
    let ext = local_extrema(g, a, b, grid)?;
    let best = ext
        .iter()
        .max_by(|p, q| p.value.abs().total_cmp(&q.value.abs()))
        .copied()
        .unwrap_or(Extremum { x: a, value: 0.0 });
    Ok(SupNorm {
        value: best.value.abs(),
        argmax: best.x,
    })
}
