//! The order-statistics mixture transform.
//!
//! Given a baseline cdf F and a mixing parameter λ ∈ [−1, 1], the
//! transformed distribution has cdf
//!
//! ```text
//! G_λ(x) = F(x)·{1 + λ·(1 − F(x))}
//! ```
//!
//! which is the law of `Z·min(X₁, X₂) + (1 − Z)·max(X₁, X₂)` for X₁, X₂
//! iid from F and Z Bernoulli((1 + λ)/2). λ = 0 recovers F, λ = 1 the
//! sample minimum, λ = −1 the sample maximum. Writing ψ_λ(t) = t + λt(1 − t),
//! the transform is G_λ = ψ_λ ∘ F, and everything here (quantiles,
//! residual life, hazards) follows from that composition.

use crate::dist::Univariate;
use crate::error::{Error, Result};
use crate::stream::Stream;

/// Unit-interval distortion ψ_λ(t) = t + λ·t·(1 − t).
///
/// Strictly increasing bijection of [0, 1] for |λ| < 1, monotone
/// bijection at λ = ±1.
pub fn psi(lambda: f64, t: f64) -> Result<f64> {
    check_lambda(lambda)?;
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::Domain {
            what: "psi argument",
            value: t,
        });
    }
    Ok(psi_raw(lambda, t))
}

/// Inverse of [`psi`], evaluated in the cancellation-free conjugate form
///
/// ```text
/// ψ⁻¹_λ(s) = 2s / (1 + λ + sqrt((1 + λ)² − 4λs))
/// ```
///
/// The direct root `((1 + λ) − sqrt(...)) / (2λ)` is 0/0 at λ = 0 and
/// loses digits for small λ; the conjugate form is exact there.
pub fn psi_inv(lambda: f64, s: f64) -> Result<f64> {
    check_lambda(lambda)?;
    if !(0.0..=1.0).contains(&s) {
        return Err(Error::Domain {
            what: "psi_inv argument",
            value: s,
        });
    }
    Ok(psi_inv_raw(lambda, s))
}

#[inline]
pub(crate) fn psi_raw(lambda: f64, t: f64) -> f64 {
    t + lambda * t * (1.0 - t)
}

#[inline]
pub(crate) fn psi_inv_raw(lambda: f64, s: f64) -> f64 {
    if s <= 0.0 {
        return 0.0; // also guards the 0/0 at (λ = −1, s = 0)
    }
    if s >= 1.0 {
        return 1.0;
    }
    let one_plus = 1.0 + lambda;
    // exact zero occurs at (λ = 1, s = 1); rounding may push it negative
    let radicand = (one_plus * one_plus - 4.0 * lambda * s).max(0.0);
    2.0 * s / (one_plus + radicand.sqrt())
}

fn check_lambda(lambda: f64) -> Result<()> {
    if !(-1.0..=1.0).contains(&lambda) {
        return Err(Error::InvalidParameter {
            name: "lambda",
            value: lambda,
        });
    }
    Ok(())
}

/// Bernoulli indicator selecting the sample minimum with probability
/// (1 + λ)/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixtureIndicator {
    p_min: f64,
}

impl MixtureIndicator {
    pub fn new(lambda: f64) -> Result<Self> {
        check_lambda(lambda)?;
        Ok(MixtureIndicator {
            p_min: (1.0 + lambda) / 2.0,
        })
    }

    /// Probability of emitting the pairwise minimum.
    pub fn p_min(&self) -> f64 {
        self.p_min
    }

    /// Probability of emitting the pairwise maximum.
    pub fn p_max(&self) -> f64 {
        1.0 - self.p_min
    }

    pub fn draw_min(&self, stream: &mut Stream) -> bool {
        stream.bernoulli(self.p_min)
    }
}

/// A baseline distribution together with the mixing parameter λ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transformed<D> {
    base: D,
    lambda: f64,
}

impl<D: Univariate> Transformed<D> {
    pub fn new(base: D, lambda: f64) -> Result<Self> {
        check_lambda(lambda)?;
        Ok(Transformed { base, lambda })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn base(&self) -> &D {
        &self.base
    }

    pub fn indicator(&self) -> MixtureIndicator {
        MixtureIndicator {
            p_min: (1.0 + self.lambda) / 2.0,
        }
    }

    /// Median via the stable ψ⁻¹ route; identical to `quantile(0.5)`.
    pub fn median(&self) -> f64 {
        self.quantile(0.5).expect("0.5 is a valid quantile level")
    }

    /// Residual mixing parameter β(t) = λ·F̄(t) / (1 − λ·F(t)).
    ///
    /// The residual life of G_λ[F] is again a transform of the baseline's
    /// residual life, with β(t) in place of λ. The denominator is
    /// grouped as (1 − λ) + λ·F̄(t), which stays exact deep in the tail
    /// where 1 − λ·F(t) would cancel.
    pub fn residual_mix_parameter(&self, t: f64) -> Result<f64> {
        if self.survival(t) <= 0.0 {
            return Err(Error::SupportExhausted { at: t });
        }
        let fbar = self.base.survival(t);
        Ok(self.lambda * fbar / ((1.0 - self.lambda) + self.lambda * fbar))
    }

    /// Residual life survival P(X > x + t | X > t) = Ḡ(x + t)/Ḡ(t).
    pub fn residual_life_survival(&self, t: f64, x: f64) -> Result<f64> {
        let st = self.survival(t);
        if st <= 0.0 {
            return Err(Error::SupportExhausted { at: t });
        }
        Ok((self.survival(x + t) / st).clamp(0.0, 1.0))
    }

    /// Draws n variates through the mixture representation: per draw,
    /// two baseline variates by inverse transform, then a Bernoulli
    /// choice of their min or max. Three uniforms per draw, in that
    /// order.
    pub fn sample(&self, n: usize, stream: &mut Stream) -> Vec<f64> {
        let indicator = self.indicator();
        (0..n)
            .map(|_| {
                let x1 = self.base_draw(stream);
                let x2 = self.base_draw(stream);
                let take_min = indicator.draw_min(stream);
                if take_min {
                    x1.min(x2)
                } else {
                    x1.max(x2)
                }
            })
            .collect()
    }

    /// Draws n variates by inverting the transformed cdf directly.
    /// Same law as [`Transformed::sample`]; used as an independent route
    /// when cross-checking the mixture sampler.
    pub fn sample_inverse(&self, n: usize, stream: &mut Stream) -> Vec<f64> {
        (0..n)
            .map(|_| {
                self.quantile(stream.uniform())
                    .expect("uniform draw is strictly inside (0, 1)")
            })
            .collect()
    }

    fn base_draw(&self, stream: &mut Stream) -> f64 {
        self.base
            .quantile(stream.uniform())
            .expect("uniform draw is strictly inside (0, 1)")
    }
}

impl<D: Univariate> Univariate for Transformed<D> {
    /// G_λ(x) = F(x)·{1 + λ·F̄(x)}, clamped to [0, 1] against rounding.
    fn cdf(&self, x: f64) -> f64 {
        let f = self.base.cdf(x);
        (f * (1.0 + self.lambda * (1.0 - f))).clamp(0.0, 1.0)
    }

    /// Ḡ_λ(x) = F̄(x)·{1 − λ·F(x)}, with the second factor grouped as
    /// (1 − λ) + λ·F̄(x) so the tail keeps full relative accuracy (at
    /// λ = 1 this reduces to F̄², the exact pairwise-minimum survival).
    fn survival(&self, x: f64) -> f64 {
        let fbar = self.base.survival(x);
        (fbar * ((1.0 - self.lambda) + self.lambda * fbar)).clamp(0.0, 1.0)
    }

    /// g_λ(x) = f(x)·{1 + λ·(1 − 2F(x))}.
    fn pdf(&self, x: f64) -> f64 {
        let f = self.base.cdf(x);
        (self.base.pdf(x) * (1.0 + self.lambda * (1.0 - 2.0 * f))).max(0.0)
    }

    /// h_G(x) = h_F(x)·(1 + λ·F̄(x)/(1 − λ·F(x))), with the same tail
    /// grouping as [`Univariate::survival`].
    fn hazard(&self, x: f64) -> Result<f64> {
        if self.survival(x) <= 0.0 {
            return Err(Error::SupportExhausted { at: x });
        }
        let hf = self.base.hazard(x)?;
        let fbar = self.base.survival(x);
        let denom = (1.0 - self.lambda) + self.lambda * fbar;
        Ok(hf * (1.0 + self.lambda * fbar / denom))
    }

    /// G⁻¹(q) = F⁻¹(ψ⁻¹_λ(q)).
    fn quantile(&self, q: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&q) {
            return Err(Error::Domain {
                what: "quantile level",
                value: q,
            });
        }
        self.base.quantile(psi_inv_raw(self.lambda, q))
    }

    fn support(&self) -> (f64, f64) {
        self.base.support()
    }

    fn name(&self) -> String {
        format!("mix[{}; lambda={}]", self.base.name(), self.lambda)
    }
}

/// Marshall–Olkin proportional-odds cdf H(x) = F(x) / (1 − (1 − α)·F̄(x)).
///
/// For α = 1 − λ and small λ the mixture transform is its first-order
/// approximation in λ.
pub fn proportional_odds_cdf<D: Univariate + ?Sized>(base: &D, alpha: f64, x: f64) -> Result<f64> {
    if alpha <= 0.0 || !alpha.is_finite() {
        return Err(Error::Domain {
            what: "proportional-odds alpha",
            value: alpha,
        });
    }
    let f = base.cdf(x);
    let fbar = base.survival(x);
    Ok((f / (1.0 - (1.0 - alpha) * fbar)).clamp(0.0, 1.0))
}
