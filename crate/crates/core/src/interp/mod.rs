//! Interpolation by simple partial fractions: Padé fractions at the origin,
//! interpolation of constants, and generalized interpolation on arbitrary
//! node tables.

mod generalized;
mod pade;

pub(crate) use generalized::constant_generator;

pub use generalized::{
    classify_nodes, constant_residual, generalized_interp_multiple, generalized_interp_simple,
    interpolate_constant, GeneralizedFamily, GeneralizedSolution, InterpolationTable, NodeStatus,
    Ordinary, DEFAULT_SINGULAR_TOL,
};
pub use pade::{
    eps_n, frequency_bound_check, pade_error_bound, pade_remainder, pade_spf, pade_spf_exp,
    ZERO_FREQUENCY_TOL,
};

use crate::error::Result;
use crate::numkit::{find_roots, ComplexPolynomial, DEFAULT_ROOT_TOL};
use crate::spf::SimpleFraction;

/// Poles farther out than this are treated as poles at infinity.
pub(crate) const FAR_POLE: f64 = 1e12;

/// `Q'/Q` with negligible top coefficients trimmed and far-away roots dropped.
pub(crate) fn spf_of(q: &ComplexPolynomial) -> Result<SimpleFraction> {
    let scale = q.max_abs_coeff();
    let mut c = q.coeffs().to_vec();
    while c.len() > 1 && c.last().is_some_and(|x| x.norm() <= 1e-15 * scale) {
        c.pop();
    }
    let q = ComplexPolynomial::new(c);
    match q.degree() {
        Some(d) if d >= 1 => {
            let roots = find_roots(&q, DEFAULT_ROOT_TOL)?.roots;
            Ok(SimpleFraction::new(roots.into_iter().filter(|z| z.norm() <= FAR_POLE).collect()))
        }
        _ => Ok(SimpleFraction::zero()),
    }
}
