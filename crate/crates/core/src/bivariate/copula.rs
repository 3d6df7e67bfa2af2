//! The copula contract and the three canonical couplings.

use crate::stream::Stream;

/// A bivariate copula: grounded, uniform-margined, 2-increasing.
///
/// Only evaluation is required. Couplings that know how to produce
/// dependent uniform pairs (independence and the two Fréchet bounds)
/// additionally expose a pair sampler.
pub trait Copula {
    /// C(u, v) for u, v ∈ [0, 1].
    fn value(&self, u: f64, v: f64) -> f64;

    fn name(&self) -> String;

    /// Survival counterpart D̄(u, v) = 1 − u − v + D(u, v).
    fn survival_value(&self, u: f64, v: f64) -> f64 {
        ((1.0 - u) - v) + self.value(u, v)
    }

    /// Whether [`Copula::draw_pair`] is available.
    fn has_pair_sampler(&self) -> bool {
        false
    }

    /// Draws a uniform pair with this copula's dependence, or `None`
    /// when no sampler exists for the coupling.
    fn draw_pair(&self, _stream: &mut Stream) -> Option<(f64, f64)> {
        None
    }

    fn is_independence(&self) -> bool {
        false
    }
}

impl<T: Copula + ?Sized> Copula for &T {
    fn value(&self, u: f64, v: f64) -> f64 {
        (**self).value(u, v)
    }
    fn name(&self) -> String {
        (**self).name()
    }
    fn survival_value(&self, u: f64, v: f64) -> f64 {
        (**self).survival_value(u, v)
    }
    fn has_pair_sampler(&self) -> bool {
        (**self).has_pair_sampler()
    }
    fn draw_pair(&self, stream: &mut Stream) -> Option<(f64, f64)> {
        (**self).draw_pair(stream)
    }
    fn is_independence(&self) -> bool {
        (**self).is_independence()
    }
}

impl<T: Copula + ?Sized> Copula for Box<T> {
    fn value(&self, u: f64, v: f64) -> f64 {
        (**self).value(u, v)
    }
    fn name(&self) -> String {
        (**self).name()
    }
    fn survival_value(&self, u: f64, v: f64) -> f64 {
        (**self).survival_value(u, v)
    }
    fn has_pair_sampler(&self) -> bool {
        (**self).has_pair_sampler()
    }
    fn draw_pair(&self, stream: &mut Stream) -> Option<(f64, f64)> {
        (**self).draw_pair(stream)
    }
    fn is_independence(&self) -> bool {
        (**self).is_independence()
    }
}

/// Π(u, v) = u·v.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Independence;

impl Copula for Independence {
    fn value(&self, u: f64, v: f64) -> f64 {
        u * v
    }

    fn name(&self) -> String {
        "independence".into()
    }

    fn has_pair_sampler(&self) -> bool {
        true
    }

    fn draw_pair(&self, stream: &mut Stream) -> Option<(f64, f64)> {
        let u = stream.uniform();
        let v = stream.uniform();
        Some((u, v))
    }

    fn is_independence(&self) -> bool {
        true
    }
}

/// Fréchet–Hoeffding upper bound M(u, v) = min(u, v): comonotone pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FrechetUpper;

impl Copula for FrechetUpper {
    fn value(&self, u: f64, v: f64) -> f64 {
        u.min(v)
    }

    fn name(&self) -> String {
        "m".into()
    }

    fn has_pair_sampler(&self) -> bool {
        true
    }

    fn draw_pair(&self, stream: &mut Stream) -> Option<(f64, f64)> {
        let u = stream.uniform();
        Some((u, u))
    }
}

/// Fréchet–Hoeffding lower bound W(u, v) = max(u + v − 1, 0):
/// countermonotone (antithetic) pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FrechetLower;

impl Copula for FrechetLower {
    fn value(&self, u: f64, v: f64) -> f64 {
        (u + v - 1.0).max(0.0)
    }

    fn name(&self) -> String {
        "w".into()
    }

    fn has_pair_sampler(&self) -> bool {
        true
    }

    fn draw_pair(&self, stream: &mut Stream) -> Option<(f64, f64)> {
        let u = stream.uniform();
        Some((u, 1.0 - u))
    }
}
