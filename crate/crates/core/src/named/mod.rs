//! Closed-form parametric families produced by the mixture transform:
//! the transformed exponential and a skew-Laplace class. Every formula
//! here has a generic counterpart in [`crate::transform`]; the two are
//! kept in agreement by tests rather than by sharing code paths.

mod skew_laplace;
mod transformed_exponential;

pub use skew_laplace::{SkewLaplace, SkewLaplaceSummary};
pub use transformed_exponential::TransformedExponential;
