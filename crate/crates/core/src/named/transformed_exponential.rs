//! Two-parameter extension of the exponential distribution.
//!
//! Applying the mixture transform to an exponential baseline with rate θ
//! gives cdf `(1 − e^{−θx})(1 + λe^{−θx})` on [0, ∞). The family spans
//! increasing hazard rates (−1 ≤ λ < 0), the constant-hazard exponential
//! (λ = 0) and decreasing hazard rates (0 < λ ≤ 1), while staying fully
//! closed-form: mode, moments, MGF, quantiles and mean residual life all
//! have explicit expressions.

use crate::dist::Univariate;
use crate::error::{Error, Result};
use crate::transform::psi_inv_raw;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformedExponential {
    theta: f64,
    lambda: f64,
}

impl TransformedExponential {
    pub fn new(theta: f64, lambda: f64) -> Result<Self> {
        if theta <= 0.0 || !theta.is_finite() {
            return Err(Error::InvalidParameter {
                name: "theta",
                value: theta,
            });
        }
        if !(-1.0..=1.0).contains(&lambda) {
            return Err(Error::InvalidParameter {
                name: "lambda",
                value: lambda,
            });
        }
        Ok(TransformedExponential { theta, lambda })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Mode of the density: 0 for λ ≥ −1/3, otherwise
    /// −(1/θ)·ln((λ − 1)/(4λ)). The two branches meet continuously at
    /// λ = −1/3, where the expression is −(1/θ)·ln 1 = 0.
    pub fn mode(&self) -> f64 {
        if self.lambda >= -1.0 / 3.0 {
            0.0
        } else {
            -((self.lambda - 1.0) / (4.0 * self.lambda)).ln() / self.theta
        }
    }

    /// Raw moment E[Xʳ] = (1 + λ(2⁻ʳ − 1))·r! / θʳ for r ≥ 1.
    pub fn raw_moment(&self, r: u32) -> Result<f64> {
        if r < 1 {
            return Err(Error::Domain {
                what: "moment order",
                value: r as f64,
            });
        }
        let factor = 1.0 + self.lambda * (0.5f64.powi(r as i32) - 1.0);
        Ok(factor * factorial(r) / self.theta.powi(r as i32))
    }

    pub fn mean(&self) -> f64 {
        (1.0 - self.lambda / 2.0) / self.theta
    }

    /// Moment generating function M(t) = θ(2θ − (1 + λ)t) / ((θ − t)(2θ − t)),
    /// defined for t < θ.
    pub fn mgf(&self, t: f64) -> Result<f64> {
        if t >= self.theta {
            return Err(Error::Domain {
                what: "mgf argument (requires t < theta)",
                value: t,
            });
        }
        let th = self.theta;
        Ok(th * (2.0 * th - (1.0 + self.lambda) * t) / ((th - t) * (2.0 * th - t)))
    }

    /// Mean residual life m(t) = E[X − t | X > t] for t ≥ 0:
    ///
    /// ```text
    /// m(t) = (1 + λ(e^{−θt}/2 − 1)) / (θ·(1 + λ(e^{−θt} − 1)))
    /// ```
    ///
    /// Grouped as ((1 − λ) + λu/2) / (θ((1 − λ) + λu)) with u = e^{−θt},
    /// which stays exact at λ = 1 where both plain factors vanish.
    pub fn mean_residual_life(&self, t: f64) -> f64 {
        let u = (-self.theta * t).exp();
        let one_minus = 1.0 - self.lambda;
        (one_minus + self.lambda * u / 2.0) / (self.theta * (one_minus + self.lambda * u))
    }
}

impl Univariate for TransformedExponential {
    fn cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        let u = (-self.theta * x).exp();
        let f = -(-self.theta * x).exp_m1();
        (f * (1.0 + self.lambda * u)).clamp(0.0, 1.0)
    }

    fn survival(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 1.0;
        }
        let u = (-self.theta * x).exp();
        (u * (1.0 + self.lambda * (u - 1.0))).clamp(0.0, 1.0)
    }

    fn pdf(&self, x: f64) -> f64 {
        if x < 0.0 {
            return 0.0;
        }
        let u = (-self.theta * x).exp();
        (self.theta * u * (1.0 + self.lambda * (2.0 * u - 1.0))).max(0.0)
    }

    /// h(x) = θ(1 + λ(2e^{−θx} − 1)) / (1 + λ(e^{−θx} − 1)), grouped as
    /// θ((1 − λ) + 2λu) / ((1 − λ) + λu) so the λ = 1 boundary evaluates
    /// to the exact constant 2θ even when u underflows.
    fn hazard(&self, x: f64) -> Result<f64> {
        if x < 0.0 {
            return Err(Error::Domain {
                what: "hazard argument",
                value: x,
            });
        }
        let u = (-self.theta * x).exp();
        let one_minus = 1.0 - self.lambda;
        let denom = one_minus + self.lambda * u;
        if denom <= 0.0 {
            return Err(Error::SupportExhausted { at: x });
        }
        Ok(self.theta * (one_minus + 2.0 * self.lambda * u) / denom)
    }

    fn quantile(&self, q: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&q) {
            return Err(Error::Domain {
                what: "quantile level",
                value: q,
            });
        }
        let p = psi_inv_raw(self.lambda, q);
        Ok(-(-p).ln_1p() / self.theta)
    }

    fn support(&self) -> (f64, f64) {
        (0.0, f64::INFINITY)
    }

    fn name(&self) -> String {
        format!("texp({}, {})", self.theta, self.lambda)
    }
}

fn factorial(r: u32) -> f64 {
    (1..=r).fold(1.0, |acc, k| acc * k as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    const LN2: f64 = std::f64::consts::LN_2;

    fn te(theta: f64, lambda: f64) -> TransformedExponential {
        TransformedExponential::new(theta, lambda).unwrap()
    }

    #[test]
    fn constructor_validates_parameters() {
        assert!(TransformedExponential::new(0.0, 0.5).is_err());
        assert!(TransformedExponential::new(-1.0, 0.5).is_err());
        assert!(TransformedExponential::new(1.0, 1.5).is_err());
    }

    #[test]
    fn lambda_one_is_exponential_rate_two_theta() {
        let d = te(1.0, 1.0);
        for x in [0.1, 0.8, 2.5] {
            assert!((d.cdf(x) - (-(-2.0 * x).exp_m1())).abs() < 1e-15);
            assert!((d.hazard(x).unwrap() - 2.0).abs() < 1e-15);
        }
        // the grouped hazard stays 2θ even past cdf == 1 in fp
        assert!((d.hazard(500.0).unwrap() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn hazard_hand_value() {
        assert!((te(1.0, 0.5).hazard(LN2).unwrap() - 4.0 / 3.0).abs() < 1e-15);
        assert!(te(1.0, 0.5).hazard(-0.5).is_err());
    }

    #[test]
    fn quantile_hand_values() {
        assert!((te(1.0, 0.5).quantile(0.5).unwrap() - 0.481_211_825_059_603_4).abs() < 1e-12);
        assert!((te(1.0, 1.0).quantile(0.75).unwrap() - LN2).abs() < 1e-15);
        assert!(te(1.0, 0.3).quantile(-0.1).is_err());
    }

    #[test]
    fn mode_branches() {
        assert_eq!(te(1.0, -0.2).mode(), 0.0);
        assert_eq!(te(1.0, 0.8).mode(), 0.0);
        assert!((te(1.0, -1.0).mode() - LN2).abs() < 1e-15);
        assert!((te(2.0, -1.0).mode() - 0.5 * LN2).abs() < 1e-15);
        // branches join continuously at λ = −1/3
        assert!(te(1.0, -1.0 / 3.0 - 1e-12).mode().abs() < 1e-9);
        assert_eq!(te(1.0, -1.0 / 3.0).mode(), 0.0);
    }

    #[test]
    fn mode_is_the_density_argmax() {
        // numeric argmax of the density on a fine grid, λ < −1/3
        for lambda in [-1.0, -0.7, -0.45] {
            let d = te(1.0, lambda);
            let grid: Vec<f64> = (0..=40_000).map(|i| i as f64 * 1e-4).collect();
            let argmax = grid
                .iter()
                .copied()
                .max_by(|a, b| d.pdf(*a).partial_cmp(&d.pdf(*b)).unwrap())
                .unwrap();
            assert!(
                (argmax - d.mode()).abs() <= 1e-4 + 1e-12,
                "λ = {lambda}: argmax {argmax} vs mode {}",
                d.mode()
            );
        }
    }

    #[test]
    fn raw_moment_hand_values() {
        assert!((te(1.0, 1.0).raw_moment(1).unwrap() - 0.5).abs() < 1e-15);
        assert!((te(1.0, 1.0).raw_moment(2).unwrap() - 0.5).abs() < 1e-15);
        assert!((te(1.0, 0.0).raw_moment(3).unwrap() - 6.0).abs() < 1e-15);
        assert!(te(1.0, 0.5).raw_moment(0).is_err());
        assert!((te(1.0, 0.5).mean() - te(1.0, 0.5).raw_moment(1).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn mgf_hand_values() {
        assert_eq!(te(1.3, -0.4).mgf(0.0).unwrap(), 1.0);
        assert!((te(1.0, 0.0).mgf(0.5).unwrap() - 2.0).abs() < 1e-15);
        assert!((te(1.0, 1.0).mgf(0.5).unwrap() - 4.0 / 3.0).abs() < 1e-15);
        assert!(te(1.0, 0.5).mgf(1.0).is_err());
    }

    #[test]
    fn mgf_derivative_matches_first_moment() {
        // central difference of M at 0
        for (theta, lambda) in [(1.0, 0.5), (2.0, -0.8), (0.7, 1.0)] {
            let d = te(theta, lambda);
            let h = 1e-5;
            let deriv = (d.mgf(h).unwrap() - d.mgf(-h).unwrap()) / (2.0 * h);
            assert!(
                (deriv - d.raw_moment(1).unwrap()).abs() < 1e-6,
                "θ = {theta}, λ = {lambda}"
            );
        }
    }

    #[test]
    fn mean_residual_life_hand_values() {
        assert!((te(1.0, 0.5).mean_residual_life(0.0) - 0.75).abs() < 1e-15);
        // limit 1/θ as t → ∞ for λ < 1
        for lambda in [-1.0, -0.5, 0.0, 0.5, 0.9] {
            let m = te(1.0, lambda).mean_residual_life(40.0);
            assert!((m - 1.0).abs() < 1e-12, "λ = {lambda}: m = {m}");
        }
        // λ = 1 collapses to the exponential with rate 2θ: constant 1/(2θ)
        for t in [0.0, 1.0, 10.0, 100.0] {
            assert!((te(1.0, 1.0).mean_residual_life(t) - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn cdf_has_zero_mass_below_support() {
        let d = te(1.0, -0.6);
        assert_eq!(d.cdf(-1.0), 0.0);
        assert_eq!(d.survival(-1.0), 1.0);
        assert_eq!(d.pdf(-1.0), 0.0);
    }
}
