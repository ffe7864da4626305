//! Best uniform approximation by simple partial fractions on `[-1, 1]`.

mod alternance;
mod borchardt;
mod examples;
mod extremal;
mod remez;

pub use alternance::{
    alternance_criterion, alternance_detect, alternance_of, vallee_poussin_bound,
    vallee_poussin_from_residual, AlternanceReport, Verdict, ALTERNANCE_TOL,
};
pub use borchardt::{borchardt_check, cauchy_determinant, permanent, BorchardtReport};
pub use examples::{
    counterexample_2n_alternance, lambda_star, nonuniqueness_fraction, nonuniqueness_residual,
    ZeroCount,
};
pub use extremal::{extremal_fraction, ExtremalFraction};
pub use remez::{remez_constant, remez_deviation_bounds, RemezResult};
