//! Bivariate extension of the mixture transform.
//!
//! From any baseline joint cdf F with margins F₁, F₂, the transform
//! produces
//!
//! ```text
//! G_λ(x, y) = (1 + λ)·(F₁F₂ + F·F̄) − λ·F²
//! ```
//!
//! the law of the componentwise minima of two iid pairs with probability
//! (1 + λ)/2 and of the componentwise maxima otherwise. Its margins are
//! the univariate transforms of F₁ and F₂, and its copula is obtained
//! from the baseline copula D by the same formula at ψ-distorted
//! arguments.

mod copula;
mod joint;
mod transformed;

pub use copula::{Copula, FrechetLower, FrechetUpper, Independence};
pub use joint::BivariateTransformed;
pub use transformed::{copula_validity, GridViolation, TransformedCopula, ValidityReport};

pub use crate::transform::{psi, psi_inv};
