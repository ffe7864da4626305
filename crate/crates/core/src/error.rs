use thiserror::Error;

use crate::C64;

pub type Result<T> = std::result::Result<T, SpfError>;

#[derive(Debug, Clone, Error)]
pub enum SpfError {
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("root finder did not converge after {iterations} iterations (residual {residual:e})")]
    RootsNotConverged {
        iterations: usize,
        residual: f64,
        partial: Vec<C64>,
    },

    #[error("evaluation at a pole: z = {0}")]
    PoleEvaluation(C64),

    #[error("non-finite sample at x = {0}: pole on the interval")]
    PoleOnInterval(f64),

    #[error("operator tower depth {requested} exceeds the limit {limit}")]
    TowerTooDeep { requested: usize, limit: usize },

    #[error("degenerate construction: {0}")]
    Degenerate(String),

    #[error("outside admissible domain: {0}")]
    Domain(String),

    #[error("moment h_{index} vanishes while f_{index} does not")]
    MomentDefinition { index: usize },

    #[error("too many terms: {0}")]
    TooLarge(String),

    #[error("no regular parameter found after {attempts} perturbations")]
    NoRegularParameter { attempts: usize },
}

pub(crate) fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(SpfError::Precondition(msg()))
    }
}
