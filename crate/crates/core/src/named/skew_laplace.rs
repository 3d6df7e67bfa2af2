//! Skew-Laplace family: the mixture transform applied to a symmetric
//! Laplace baseline.
//!
//! λ controls the asymmetry (negative λ skews right, positive λ skews
//! left); λ = 0 recovers the symmetric Laplace. The cdf and pdf are
//! piecewise closed forms, continuous at 0 where the cdf equals
//! (2 + λ)/4.

use crate::dist::Univariate;
use crate::error::{Error, Result};
use crate::transform::psi_inv_raw;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SkewLaplace {
    theta: f64,
    lambda: f64,
}

/// Mean, variance, skewness and kurtosis in one bundle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SkewLaplaceSummary {
    pub mean: f64,
    pub variance: f64,
    pub skewness: f64,
    pub kurtosis: f64,
}

impl SkewLaplace {
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
        Ok(SkewLaplace { theta, lambda })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Moment generating function for |t| < 1/θ:
    ///
    /// ```text
    /// M(t) = (1 − λθt)/(1 − (θt)²) + λθt/(4 − (θt)²)
    /// ```
    pub fn mgf(&self, t: f64) -> Result<f64> {
        let z = self.theta * t;
        if z.abs() >= 1.0 {
            return Err(Error::Domain {
                what: "mgf argument (requires |t| < 1/theta)",
                value: t,
            });
        }
        Ok((1.0 - self.lambda * z) / (1.0 - z * z) + self.lambda * z / (4.0 - z * z))
    }

    /// Raw moment for r ≥ 1: odd orders r!·λ·θʳ·(1 − 2^{r+1})/2^{r+1},
    /// even orders r!·θʳ.
    pub fn raw_moment(&self, r: u32) -> Result<f64> {
        if r < 1 {
            return Err(Error::Domain {
                what: "moment order",
                value: r as f64,
            });
        }
        let factorial = (1..=r).fold(1.0, |acc, k| acc * k as f64);
        let theta_r = self.theta.powi(r as i32);
        Ok(if r % 2 == 1 {
            let half_pow = 2.0f64.powi(r as i32 + 1);
            factorial * self.lambda * theta_r * (1.0 - half_pow) / half_pow
        } else {
            factorial * theta_r
        })
    }

    /// Mean, variance, skewness, kurtosis.
    ///
    /// Derived from the raw moments E X = −3λθ/4, E X² = 2θ²,
    /// E X³ = −45λθ³/8, E X⁴ = 24θ⁴, giving
    ///
    /// ```text
    /// Var      = θ²(32 − 9λ²)/16
    /// Skewness = 18λ(4 + 3λ²) / ((9λ² − 32)·sqrt(32 − 9λ²))
    /// Kurtosis = (6144 − 2592λ² − 243λ⁴) / (32 − 9λ²)²
    /// ```
    ///
    /// The skewness has sign opposite to λ and attains ±1.1423 at
    /// λ = ∓1. 32 − 9λ² is at least 23 on λ ∈ [−1, 1], so no guard is
    /// needed near the radical.
    pub fn summary(&self) -> SkewLaplaceSummary {
        let l = self.lambda;
        let l2 = l * l;
        let s = 32.0 - 9.0 * l2;
        SkewLaplaceSummary {
            mean: -0.75 * l * self.theta,
            variance: self.theta * self.theta * s / 16.0,
            skewness: 18.0 * l * (4.0 + 3.0 * l2) / ((9.0 * l2 - 32.0) * s.sqrt()),
            kurtosis: (6144.0 - 2592.0 * l2 - 243.0 * l2 * l2) / (s * s),
        }
    }
}

impl Univariate for SkewLaplace {
    fn cdf(&self, x: f64) -> f64 {
        let v = if x <= 0.0 {
            let w = 0.5 * (x / self.theta).exp();
            w * (1.0 + self.lambda * (1.0 - w))
        } else {
            let s = 0.5 * (-x / self.theta).exp();
            1.0 - s * (1.0 - self.lambda * (1.0 - s))
        };
        v.clamp(0.0, 1.0)
    }

    fn survival(&self, x: f64) -> f64 {
        let v = if x >= 0.0 {
            let s = 0.5 * (-x / self.theta).exp();
            s * (1.0 - self.lambda * (1.0 - s))
        } else {
            let w = 0.5 * (x / self.theta).exp();
            1.0 - w * (1.0 + self.lambda * (1.0 - w))
        };
        v.clamp(0.0, 1.0)
    }

    fn pdf(&self, x: f64) -> f64 {
        let scale = 1.0 / (2.0 * self.theta);
        let v = if x <= 0.0 {
            let e = (x / self.theta).exp();
            scale * e * (1.0 + self.lambda * (1.0 - e))
        } else {
            let e = (-x / self.theta).exp();
            scale * e * (1.0 - self.lambda * (1.0 - e))
        };
        v.max(0.0)
    }

    fn quantile(&self, q: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&q) {
            return Err(Error::Domain {
                what: "quantile level",
                value: q,
            });
        }
        let p = psi_inv_raw(self.lambda, q);
        Ok(if p <= 0.0 {
            f64::NEG_INFINITY
        } else if p >= 1.0 {
            f64::INFINITY
        } else if p < 0.5 {
            self.theta * (2.0 * p).ln()
        } else {
            -self.theta * (2.0 * (1.0 - p)).ln()
        })
    }

    fn support(&self) -> (f64, f64) {
        (f64::NEG_INFINITY, f64::INFINITY)
    }

    fn name(&self) -> String {
        format!("slaplace({}, {})", self.theta, self.lambda)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl(theta: f64, lambda: f64) -> SkewLaplace {
        SkewLaplace::new(theta, lambda).unwrap()
    }

    #[test]
    fn constructor_validates_parameters() {
        assert!(SkewLaplace::new(0.0, 0.5).is_err());
        assert!(SkewLaplace::new(1.0, -1.01).is_err());
    }

    #[test]
    fn cdf_hand_values_and_continuity_at_zero() {
        assert!((sl(1.0, 1.0).cdf(0.0) - 0.75).abs() < 1e-15);
        assert!((sl(1.0, 0.0).cdf(0.0) - 0.5).abs() < 1e-15);
        for lambda in [-1.0, -0.3, 0.4, 1.0] {
            let d = sl(1.3, lambda);
            let left = d.cdf(-1e-12);
            let right = d.cdf(1e-12);
            assert!((left - right).abs() < 1e-11);
            assert!((d.cdf(0.0) - (2.0 + lambda) / 4.0).abs() < 1e-15);
        }
    }

    #[test]
    fn pdf_hand_values() {
        assert!((sl(1.0, 0.0).pdf(0.0) - 0.5).abs() < 1e-15);
        // the baseline median sits at 0, so the λ term vanishes there
        for lambda in [-1.0, -0.3, 0.6, 1.0] {
            assert!((sl(1.0, lambda).pdf(0.0) - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn survival_is_the_cdf_complement() {
        let d = sl(0.8, -0.7);
        for x in [-3.0, -0.2, 0.0, 0.4, 5.0] {
            assert!((d.cdf(x) + d.survival(x) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn raw_moment_hand_values() {
        assert!((sl(1.0, 1.0).raw_moment(1).unwrap() + 0.75).abs() < 1e-15);
        for lambda in [-1.0, 0.0, 0.5] {
            assert!((sl(1.0, lambda).raw_moment(2).unwrap() - 2.0).abs() < 1e-15);
        }
        assert_eq!(sl(1.0, 0.0).raw_moment(3).unwrap(), 0.0);
        assert!(sl(1.0, 0.2).raw_moment(0).is_err());
    }

    #[test]
    fn mgf_hand_values() {
        assert_eq!(sl(1.0, 0.9).mgf(0.0).unwrap(), 1.0);
        assert!((sl(1.0, 0.0).mgf(0.5).unwrap() - 4.0 / 3.0).abs() < 1e-15);
        assert!((sl(1.0, 1.0).mgf(0.5).unwrap() - 0.8).abs() < 1e-15);
        assert!(sl(2.0, 0.1).mgf(0.5).is_err());
    }

    #[test]
    fn mgf_derivatives_match_raw_moments() {
        for (theta, lambda) in [(1.0, 0.5), (0.7, -1.0), (2.0, 0.0)] {
            let d = sl(theta, lambda);
            let h = 1e-5;
            let m1 = (d.mgf(h).unwrap() - d.mgf(-h).unwrap()) / (2.0 * h);
            let m2 =
                (d.mgf(h).unwrap() - 2.0 * d.mgf(0.0).unwrap() + d.mgf(-h).unwrap()) / (h * h);
            assert!((m1 - d.raw_moment(1).unwrap()).abs() < 1e-6);
            assert!((m2 - d.raw_moment(2).unwrap()).abs() < 1e-5);
        }
    }

    #[test]
    fn summary_matches_raw_moments() {
        // variance/skewness/kurtosis recomputed from raw moments directly
        for (theta, lambda) in [(1.0, 0.0), (1.0, 1.0), (2.0, -0.6), (0.5, 0.3)] {
            let d = sl(theta, lambda);
            let m1 = d.raw_moment(1).unwrap();
            let m2 = d.raw_moment(2).unwrap();
            let m3 = d.raw_moment(3).unwrap();
            let m4 = d.raw_moment(4).unwrap();
            let var = m2 - m1 * m1;
            let mu3 = m3 - 3.0 * m1 * m2 + 2.0 * m1 * m1 * m1;
            let mu4 = m4 - 4.0 * m1 * m3 + 6.0 * m1 * m1 * m2 - 3.0 * m1.powi(4);
            let s = d.summary();
            assert!((s.mean - m1).abs() < 1e-14);
            assert!((s.variance - var).abs() < 1e-13 * var.max(1.0));
            assert!((s.skewness - mu3 / var.powf(1.5)).abs() < 1e-12);
            assert!((s.kurtosis - mu4 / (var * var)).abs() < 1e-11);
        }
    }

    #[test]
    fn summary_hand_values() {
        let s0 = sl(1.0, 0.0).summary();
        assert_eq!(s0.mean, 0.0);
        assert!((s0.variance - 2.0).abs() < 1e-15);
        assert_eq!(s0.skewness, 0.0);
        assert!((s0.kurtosis - 6.0).abs() < 1e-15);

        // skewness extremes at λ = ∓1, and sign opposite to λ
        let plus = sl(1.0, -1.0).summary().skewness;
        let minus = sl(1.0, 1.0).summary().skewness;
        assert!((plus - 1.1423).abs() < 5e-4, "skewness(λ=−1) = {plus}");
        assert!((minus + 1.1423).abs() < 5e-4);
        assert!((plus + minus).abs() < 1e-15);

        let v1 = sl(1.0, 1.0).summary().variance;
        assert!((v1 - 23.0 / 16.0).abs() < 1e-15);
    }

    #[test]
    fn skewness_is_decreasing_in_lambda_and_bounded() {
        let mut prev = f64::INFINITY;
        for i in 0..=100 {
            let lambda = -1.0 + 2.0 * i as f64 / 100.0;
            let sk = sl(1.0, lambda).summary().skewness;
            assert!(sk <= prev + 1e-12, "not decreasing at λ = {lambda}");
            assert!(sk.abs() <= 1.1423);
            if lambda < 0.0 {
                assert!(sk > 0.0);
            }
            if lambda > 0.0 {
                assert!(sk < 0.0);
            }
            prev = sk;
        }
    }

    #[test]
    fn quantile_roundtrip() {
        for lambda in [-1.0, -0.4, 0.0, 0.7, 1.0] {
            let d = sl(1.4, lambda);
            for q in [1e-6, 0.01, 0.25, 0.5, 0.75, 0.99, 1.0 - 1e-6] {
                let x = d.quantile(q).unwrap();
                assert!(
                    (d.cdf(x) - q).abs() < 1e-12,
                    "λ = {lambda}, q = {q}: got {}",
                    d.cdf(x)
                );
            }
            assert_eq!(d.quantile(0.0).unwrap(), f64::NEG_INFINITY);
            assert_eq!(d.quantile(1.0).unwrap(), f64::INFINITY);
        }
    }
}
