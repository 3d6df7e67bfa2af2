//! Independent numerical oracles: goodness-of-fit statistics, adaptive
//! quadrature for moments, and the rank-based empirical copula.
//!
//! Nothing in this module calls the closed forms it is used to check:
//! the KS statistic consumes only cdf evaluations, quadrature only pdf
//! evaluations, the empirical copula only sampled pairs. Seeds are
//! recorded next to the data so any failure is reproducible.

mod gof;
mod quad;

pub use gof::{empirical_copula, ks_statistic, ks_two_sample, GofResult, KS_CRITICAL_5PCT};
pub use quad::{
    adaptive_simpson, integration_bounds, quadrature_moment, QUAD_ABS_TOL, QUAD_DEPTH_CAP,
};

use crate::error::{Error, Result};

/// A batch of draws together with the seed that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleBatch<T> {
    values: Vec<T>,
    seed: u64,
}

impl<T> SampleBatch<T> {
    pub fn new(values: Vec<T>, seed: u64) -> Self {
        SampleBatch { values, seed }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub(crate) fn require_nonempty(&self) -> Result<()> {
        if self.values.is_empty() {
            Err(Error::EmptySample)
        } else {
            Ok(())
        }
    }
}
