//! Numerical substrate: polynomials, roots, Newton identities, power series,
//! nullspaces, sup-norms and quadrature.

pub mod linalg;
mod newton;
mod poly;
pub mod quad;
mod roots;
mod series;
pub mod supnorm;

pub use linalg::{nullspace, CMatrix};
pub use newton::{poly_from_power_sums, power_sums};
pub use poly::ComplexPolynomial;
pub use roots::{find_roots, RootSet, DEFAULT_ROOT_TOL};
pub use series::PowerSeries;
pub use supnorm::{sup_norm, SupNorm};
