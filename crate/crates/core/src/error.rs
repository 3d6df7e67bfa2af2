//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A constructor was given a parameter outside its legal range.
    #[error("invalid parameter `{name}`: {value}")]
    InvalidParameter { name: &'static str, value: f64 },

    /// An operation argument lies outside the operation's domain.
    #[error("{what} out of domain: {value}")]
    Domain { what: &'static str, value: f64 },

    /// Hazard or residual-life evaluation past the point where all
    /// survival mass is gone.
    #[error("support exhausted at x = {at}: survival is zero")]
    SupportExhausted { at: f64 },

    /// The requested stochastic-order check cannot be evaluated on the
    /// given inputs (missing density, unusable grid, ...).
    #[error("order check unsupported: {reason}")]
    UnsupportedOrder { reason: String },

    /// The coupling has no pair sampler.
    #[error("coupling `{coupling}` has no pair sampler")]
    UnsupportedCoupling { coupling: String },

    /// An operation that is only defined for a specific coupling was
    /// called with a different one.
    #[error("expected {expected} coupling, found `{found}`")]
    WrongCoupling { expected: &'static str, found: String },

    #[error("empty sample")]
    EmptySample,

    /// Adaptive quadrature hit its recursion-depth cap before reaching
    /// the requested tolerance.
    #[error("quadrature did not converge within depth {depth}")]
    NonConvergence { depth: u32 },

    #[error("invalid grid: {reason}")]
    InvalidGrid { reason: String },
}
