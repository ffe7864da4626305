//! Constructive machinery for simple partial fractions, i.e. logarithmic
//! derivatives `ρ(z) = Σ 1/(z − z_k)` of complex polynomials.
//!
//! The crate is organised bottom-up:
//!
//! * [`numkit`]: complex polynomials, simultaneous root finding, Newton
//!   identities, truncated power series, nullspaces, sup-norms, quadrature.
//! * [`spf`]: the [`SimpleFraction`] type and the differential-operator tower.
//! * [`interp`]: Padé, constant and generalized interpolation.
//! * [`best`]: best uniform approximation on `[-1, 1]`.
//! * [`metrics`]: notch points, L2 quadrature, norm and derivative inequalities.
//! * [`hsum`]: h-sums, amplitude-frequency sums, Prony and regularization.
//! * [`suite`]: the acceptance checks, shared by the test suite and the CLI.
//!
//! Data-parallel inner loops go through [`par`]; disable the default
//! `parallel` feature for a purely sequential build.

pub mod best;
pub mod error;
pub mod hsum;
pub mod interp;
pub mod metrics;
pub mod numkit;
pub mod par;
pub mod spf;
pub mod suite;

pub use error::{Result, SpfError};
pub use num_complex::Complex64;
pub use numkit::{ComplexPolynomial, PowerSeries, RootSet};
pub use spf::SimpleFraction;

/// Shorthand used throughout the crate.
pub type C64 = Complex64;

/// Build a complex number from its parts.
#[inline]
pub fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}
