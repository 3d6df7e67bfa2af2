//! The bivariate transformed distribution: margins + coupling + λ.

use super::copula::Copula;
use super::transformed::TransformedCopula;
use crate::dist::Univariate;
use crate::error::{Error, Result};
use crate::stream::Stream;
use crate::transform::psi_raw;

/// Joint law of the componentwise order-statistics mixture: two iid
/// pairs are drawn from the baseline joint cdf D(F₁(x), F₂(y)), then the
/// componentwise minima are kept with probability (1 + λ)/2 and the
/// maxima otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BivariateTransformed<F1, F2, C> {
    margin1: F1,
    margin2: F2,
    coupling: C,
    lambda: f64,
}

impl<F1, F2, C> BivariateTransformed<F1, F2, C>
where
    F1: Univariate,
    F2: Univariate,
    C: Copula,
{
    pub fn new(margin1: F1, margin2: F2, coupling: C, lambda: f64) -> Result<Self> {
        if !(-1.0..=1.0).contains(&lambda) {
            return Err(Error::InvalidParameter {
                name: "lambda",
                value: lambda,
            });
        }
        Ok(BivariateTransformed {
            margin1,
            margin2,
            coupling,
            lambda,
        })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn coupling(&self) -> &C {
        &self.coupling
    }

    pub fn margin1(&self) -> &F1 {
        &self.margin1
    }

    pub fn margin2(&self) -> &F2 {
        &self.margin2
    }

    /// Joint cdf
    /// G_λ(x, y) = (1 + λ)·(F₁F₂ + F·F̄) − λ·F²
    /// with F = D(F₁(x), F₂(y)) and F̄ = 1 − F₁ − F₂ + F. Extended-real
    /// arguments work: x = +∞ yields the transformed second margin and
    /// vice versa.
    pub fn cdf(&self, x: f64, y: f64) -> f64 {
        let u = self.margin1.cdf(x);
        let v = self.margin2.cdf(y);
        let f = self.coupling.value(u, v);
        let fbar = ((1.0 - u) - v) + f;
        ((1.0 + self.lambda) * (u * v + f * fbar) - self.lambda * f * f).clamp(0.0, 1.0)
    }

    /// First margin of the joint cdf: the univariate transform of F₁.
    pub fn margin1_cdf(&self, x: f64) -> f64 {
        psi_raw(self.lambda, self.margin1.cdf(x)).clamp(0.0, 1.0)
    }

    /// Second margin of the joint cdf: the univariate transform of F₂.
    pub fn margin2_cdf(&self, y: f64) -> f64 {
        psi_raw(self.lambda, self.margin2.cdf(y)).clamp(0.0, 1.0)
    }

    /// The copula of this joint law, i.e. the baseline coupling pushed
    /// through the transform.
    pub fn copula(&self) -> TransformedCopula<&C> {
        TransformedCopula::new(&self.coupling, self.lambda)
            .expect("lambda was validated at construction")
    }

    /// Independence-coupling closed form
    /// F₁F₂·{F₁F₂ + (1 + λ)(F̄₁ + F̄₂)}, an internal consistency oracle
    /// for [`BivariateTransformed::cdf`]. Fails unless the coupling is
    /// the independence copula.
    pub fn independence_case_cdf(&self, x: f64, y: f64) -> Result<f64> {
        if !self.coupling.is_independence() {
            return Err(Error::WrongCoupling {
                expected: "independence",
                found: self.coupling.name(),
            });
        }
        let u = self.margin1.cdf(x);
        let v = self.margin2.cdf(y);
        let uv = u * v;
        Ok((uv * (uv + (1.0 + self.lambda) * ((1.0 - u) + (1.0 - v)))).clamp(0.0, 1.0))
    }

    /// Draws n pairs through the order-statistics construction. Needs a
    /// coupling with a pair sampler (independence or the Fréchet
    /// bounds); each draw consumes the coupling's uniforms for two pairs
    /// and one Bernoulli, in that order.
    pub fn sample(&self, n: usize, stream: &mut Stream) -> Result<Vec<(f64, f64)>> {
        if !self.coupling.has_pair_sampler() {
            return Err(Error::UnsupportedCoupling {
                coupling: self.coupling.name(),
            });
        }
        let p_min = (1.0 + self.lambda) / 2.0;
        let mut out = Vec::with_capacity(n);
        for _ in 0..n {
            let (x1, y1) = self.draw_base_pair(stream)?;
            let (x2, y2) = self.draw_base_pair(stream)?;
            let take_min = stream.bernoulli(p_min);
            out.push(if take_min {
                (x1.min(x2), y1.min(y2))
            } else {
                (x1.max(x2), y1.max(y2))
            });
        }
        Ok(out)
    }

    fn draw_base_pair(&self, stream: &mut Stream) -> Result<(f64, f64)> {
        let (u, v) = self
            .coupling
            .draw_pair(stream)
            .ok_or_else(|| Error::UnsupportedCoupling {
                coupling: self.coupling.name(),
            })?;
        let x = self
            .margin1
            .quantile(u)
            .expect("coupling uniforms are inside (0, 1)");
        let y = self
            .margin2
            .quantile(v)
            .expect("coupling uniforms are inside (0, 1)");
        Ok((x, y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bivariate::copula::{FrechetLower, FrechetUpper, Independence};
    use crate::dist::Exponential;

    const LN2: f64 = std::f64::consts::LN_2;

    fn joint(lambda: f64) -> BivariateTransformed<Exponential, Exponential, Independence> {
        BivariateTransformed::new(
            Exponential::new(1.0).unwrap(),
            Exponential::new(1.0).unwrap(),
            Independence,
            lambda,
        )
        .unwrap()
    }

    #[test]
    fn joint_cdf_hand_value() {
        // F₁ = F₂ = 0.5, F = 0.25, F̄ = 0.25 at λ = 1
        assert!((joint(1.0).cdf(LN2, LN2) - 0.5625).abs() < 1e-15);
    }

    #[test]
    fn margins_are_the_univariate_transforms() {
        for lambda in [-1.0, -0.3, 0.0, 0.6, 1.0] {
            let b = joint(lambda);
            for t in [0.1, 0.5, 1.5, 4.0] {
                assert!((b.cdf(t, f64::INFINITY) - b.margin1_cdf(t)).abs() < 1e-12);
                assert!((b.cdf(f64::INFINITY, t) - b.margin2_cdf(t)).abs() < 1e-12);
                // against the univariate engine
                let uni = crate::transform::Transformed::new(*b.margin1(), lambda).unwrap();
                use crate::dist::Univariate as _;
                assert!((b.margin1_cdf(t) - uni.cdf(t)).abs() < 1e-15);
            }
            assert_eq!(b.cdf(f64::INFINITY, f64::INFINITY), 1.0);
            assert_eq!(b.cdf(f64::NEG_INFINITY, 1.0), 0.0);
        }
    }

    #[test]
    fn independence_closed_form_agrees_with_the_general_one() {
        for lambda in [-1.0, -0.5, 0.0, 0.5, 1.0] {
            let b = joint(lambda);
            for x in [0.2, 0.7, 1.8] {
                for y in [0.1, 0.9, 3.0] {
                    let general = b.cdf(x, y);
                    let closed = b.independence_case_cdf(x, y).unwrap();
                    assert!(
                        (general - closed).abs() < 1e-15,
                        "λ = {lambda}, ({x}, {y}): {general} vs {closed}"
                    );
                }
            }
        }
    }

    #[test]
    fn independence_closed_form_hand_value() {
        // 0.25·{0.25 + 2·(0.5 + 0.5)} at λ = 1
        let v = joint(1.0).independence_case_cdf(LN2, LN2).unwrap();
        assert!((v - 0.5625).abs() < 1e-15);
    }

    #[test]
    fn wrong_coupling_is_rejected() {
        let b = BivariateTransformed::new(
            Exponential::new(1.0).unwrap(),
            Exponential::new(1.0).unwrap(),
            FrechetUpper,
            0.5,
        )
        .unwrap();
        assert!(matches!(
            b.independence_case_cdf(1.0, 1.0),
            Err(Error::WrongCoupling { .. })
        ));
    }

    #[test]
    fn lambda_zero_joint_is_not_the_baseline_but_matches_the_mixture() {
        // at λ = 0 the construction still mixes (min, min) and
        // (max, max) half-and-half; for the independence coupling the
        // mixture cdf is (2u − u²)(2v − v²)/2 + (uv)²/2
        let b = joint(0.0);
        for (x, y) in [(LN2, LN2), (0.3, 1.0), (2.0, 0.5)] {
            let u = b.margin1().cdf(x);
            let v = b.margin2().cdf(y);
            let mixture =
                0.5 * ((2.0 * u - u * u) * (2.0 * v - v * v)) + 0.5 * (u * v) * (u * v);
            assert!((b.cdf(x, y) - mixture).abs() < 1e-15);
        }
        // strictly more concordant than the baseline in the interior
        assert!(b.cdf(LN2, LN2) > 0.25);
    }

    #[test]
    fn sampler_respects_the_lambda_endpoints() {
        let b = joint(1.0);
        let mut s = Stream::from_seed(3);
        let pairs = b.sample(50, &mut s).unwrap();
        // reconstruct: every pair must be the componentwise minimum
        let mut s2 = Stream::from_seed(3);
        let e = Exponential::new(1.0).unwrap();
        for (x, y) in pairs {
            let (u1, v1) = Independence.draw_pair(&mut s2).unwrap();
            let (u2, v2) = Independence.draw_pair(&mut s2).unwrap();
            let _z = s2.uniform();
            assert_eq!(
                x.to_bits(),
                e.quantile(u1).unwrap().min(e.quantile(u2).unwrap()).to_bits()
            );
            assert_eq!(
                y.to_bits(),
                e.quantile(v1).unwrap().min(e.quantile(v2).unwrap()).to_bits()
            );
        }
    }

    #[test]
    fn comonotone_coupling_emits_diagonal_pairs() {
        let b = BivariateTransformed::new(
            Exponential::new(1.0).unwrap(),
            Exponential::new(1.0).unwrap(),
            FrechetUpper,
            0.4,
        )
        .unwrap();
        let pairs = b.sample(100, &mut Stream::from_seed(9)).unwrap();
        for (x, y) in pairs {
            assert_eq!(x.to_bits(), y.to_bits());
        }
    }

    #[test]
    fn antithetic_coupling_samples() {
        let b = BivariateTransformed::new(
            Exponential::new(1.0).unwrap(),
            Exponential::new(1.0).unwrap(),
            FrechetLower,
            -0.6,
        )
        .unwrap();
        let pairs = b.sample(100, &mut Stream::from_seed(10)).unwrap();
        assert_eq!(pairs.len(), 100);
        // countermonotone inputs: high x with low y and vice versa, so
        // the sample correlation must be strongly negative
        let n = pairs.len() as f64;
        let mx = pairs.iter().map(|p| p.0).sum::<f64>() / n;
        let my = pairs.iter().map(|p| p.1).sum::<f64>() / n;
        let cov = pairs
            .iter()
            .map(|(x, y)| (x - mx) * (y - my))
            .sum::<f64>()
            / n;
        assert!(cov < 0.0, "cov = {cov}");
    }

    #[test]
    fn sampler_requires_a_pair_sampler() {
        struct Opaque;
        impl Copula for Opaque {
            fn value(&self, u: f64, v: f64) -> f64 {
                u * v
            }
            fn name(&self) -> String {
                "opaque".into()
            }
        }
        let b = BivariateTransformed::new(
            Exponential::new(1.0).unwrap(),
            Exponential::new(1.0).unwrap(),
            Opaque,
            0.0,
        )
        .unwrap();
        assert!(matches!(
            b.sample(1, &mut Stream::from_seed(0)),
            Err(Error::UnsupportedCoupling { .. })
        ));
    }

    #[test]
    fn joint_cdf_equals_copula_at_transformed_margins() {
        for lambda in [-0.8, 0.0, 0.5, 1.0] {
            let b = joint(lambda);
            let c = b.copula();
            use crate::bivariate::copula::Copula as _;
            for (x, y) in [(0.2, 0.4), (LN2, LN2), (1.5, 0.1), (3.0, 2.0)] {
                let via_copula = c.value(b.margin1_cdf(x), b.margin2_cdf(y));
                assert!(
                    (b.cdf(x, y) - via_copula).abs() < 1e-12,
                    "λ = {lambda} at ({x}, {y}): {} vs {via_copula}",
                    b.cdf(x, y)
                );
            }
        }
    }
}
