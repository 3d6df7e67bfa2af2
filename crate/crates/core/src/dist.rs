//! Baseline univariate distributions and the common evaluation contract.
//!
//! Everything downstream (the mixture transform, order checkers, the
//! bivariate construction) consumes distributions through [`Univariate`].
//! Baselines must be continuous with strictly increasing cdf on their
//! support; cdf and survival are defined on the extended reals so grid
//! builders need no special cases at ±∞.

use crate::error::{Error, Result};

/// Evaluation contract for a continuous univariate distribution.
pub trait Univariate {
    /// Cumulative distribution function, defined for all `x` in [−∞, ∞].
    fn cdf(&self, x: f64) -> f64;

    /// Density; zero outside the support.
    fn pdf(&self, x: f64) -> f64;

    /// Quantile function for `q ∈ [0, 1]`; `q = 0`/`q = 1` map to the
    /// support bounds (possibly ±∞).
    ///
    /// Implementations without a closed inverse can rely on the default,
    /// which bisects the cdf to 1e−12 in probability.
    fn quantile(&self, q: f64) -> Result<f64> {
        quantile_by_bisection(self, q)
    }

    /// Support bounds as extended reals.
    fn support(&self) -> (f64, f64);

    fn name(&self) -> String;

    /// Survival function 1 − cdf. Override when a direct form avoids
    /// cancellation in the upper tail.
    fn survival(&self, x: f64) -> f64 {
        1.0 - self.cdf(x)
    }

    /// Hazard rate pdf/survival. Fails once the survival mass is zero.
    fn hazard(&self, x: f64) -> Result<f64> {
        let s = self.survival(x);
        if s <= 0.0 {
            return Err(Error::SupportExhausted { at: x });
        }
        Ok(self.pdf(x) / s)
    }
}

impl<T: Univariate + ?Sized> Univariate for &T {
    fn cdf(&self, x: f64) -> f64 {
        (**self).cdf(x)
    }
    fn pdf(&self, x: f64) -> f64 {
        (**self).pdf(x)
    }
    fn quantile(&self, q: f64) -> Result<f64> {
        (**self).quantile(q)
    }
    fn support(&self) -> (f64, f64) {
        (**self).support()
    }
    fn name(&self) -> String {
        (**self).name()
    }
    fn survival(&self, x: f64) -> f64 {
        (**self).survival(x)
    }
    fn hazard(&self, x: f64) -> Result<f64> {
        (**self).hazard(x)
    }
}

impl<T: Univariate + ?Sized> Univariate for Box<T> {
    fn cdf(&self, x: f64) -> f64 {
        (**self).cdf(x)
    }
    fn pdf(&self, x: f64) -> f64 {
        (**self).pdf(x)
    }
    fn quantile(&self, q: f64) -> Result<f64> {
        (**self).quantile(q)
    }
    fn support(&self) -> (f64, f64) {
        (**self).support()
    }
    fn name(&self) -> String {
        (**self).name()
    }
    fn survival(&self, x: f64) -> f64 {
        (**self).survival(x)
    }
    fn hazard(&self, x: f64) -> Result<f64> {
        (**self).hazard(x)
    }
}

/// Bracketed bisection fallback for `Univariate::quantile`.
///
/// Stops once the cdf at the midpoint is within 1e−12 of `q` or after
/// 200 iterations, whichever comes first.
pub fn quantile_by_bisection<D: Univariate + ?Sized>(d: &D, q: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&q) {
        return Err(Error::Domain {
            what: "quantile level",
            value: q,
        });
    }
    let (lower, upper) = d.support();
    if q == 0.0 {
        return Ok(lower);
    }
    if q == 1.0 {
        return Ok(upper);
    }

    // Expand to a finite bracket when the support is unbounded.
    let mut lo = if lower.is_finite() { lower } else { -1.0 };
    while d.cdf(lo) > q {
        lo *= 2.0;
        if lo < -1e300 {
            return Err(Error::Domain {
                what: "bisection bracket (lower)",
                value: lo,
            });
        }
    }
    let mut hi = if upper.is_finite() { upper } else { 1.0 };
    while d.cdf(hi) < q {
        hi = if hi <= 0.0 { 1.0 } else { hi * 2.0 };
        if hi > 1e300 {
            return Err(Error::Domain {
                what: "bisection bracket (upper)",
                value: hi,
            });
        }
    }

    let mut mid = 0.5 * (lo + hi);
    for _ in 0..200 {
        mid = 0.5 * (lo + hi);
        let c = d.cdf(mid);
        if (c - q).abs() <= 1e-12 {
            return Ok(mid);
        }
        if c < q {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(mid)
}

// ---------------------------------------------------------------------------
// Exponential
// ---------------------------------------------------------------------------

/// Exponential distribution with rate `theta`, supported on [0, ∞).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Exponential {
    theta: f64,
}

impl Exponential {
    pub fn new(theta: f64) -> Result<Self> {
        if theta <= 0.0 || !theta.is_finite() {
            return Err(Error::InvalidParameter {
                name: "theta",
                value: theta,
            });
        }
        Ok(Exponential { theta })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

impl Univariate for Exponential {
    fn cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            0.0
        } else {
            -(-self.theta * x).exp_m1()
        }
    }

    fn survival(&self, x: f64) -> f64 {
        if x <= 0.0 {
            1.0
        } else {
            (-self.theta * x).exp()
        }
    }

    fn pdf(&self, x: f64) -> f64 {
        if x < 0.0 {
            0.0
        } else {
            self.theta * (-self.theta * x).exp()
        }
    }

    fn quantile(&self, q: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&q) {
            return Err(Error::Domain {
                what: "quantile level",
                value: q,
            });
        }
        Ok(-(-q).ln_1p() / self.theta)
    }

    fn hazard(&self, x: f64) -> Result<f64> {
        if x < 0.0 {
            Ok(0.0)
        } else {
            Ok(self.theta)
        }
    }

    fn support(&self) -> (f64, f64) {
        (0.0, f64::INFINITY)
    }

    fn name(&self) -> String {
        format!("exp({})", self.theta)
    }
}

// ---------------------------------------------------------------------------
// Laplace
// ---------------------------------------------------------------------------

/// Symmetric Laplace distribution centred at 0 with scale `theta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Laplace {
    theta: f64,
}

impl Laplace {
    pub fn new(theta: f64) -> Result<Self> {
        if theta <= 0.0 || !theta.is_finite() {
            return Err(Error::InvalidParameter {
                name: "theta",
                value: theta,
            });
        }
        Ok(Laplace { theta })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

impl Univariate for Laplace {
    fn cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            0.5 * (x / self.theta).exp()
        } else {
            1.0 - 0.5 * (-x / self.theta).exp()
        }
    }

    fn survival(&self, x: f64) -> f64 {
        if x >= 0.0 {
            0.5 * (-x / self.theta).exp()
        } else {
            1.0 - 0.5 * (x / self.theta).exp()
        }
    }

    fn pdf(&self, x: f64) -> f64 {
        (-x.abs() / self.theta).exp() / (2.0 * self.theta)
    }

    fn quantile(&self, q: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&q) {
            return Err(Error::Domain {
                what: "quantile level",
                value: q,
            });
        }
        Ok(if q < 0.5 {
            self.theta * (2.0 * q).ln()
        } else {
            -self.theta * (2.0 * (1.0 - q)).ln()
        })
    }

    fn support(&self) -> (f64, f64) {
        (f64::NEG_INFINITY, f64::INFINITY)
    }

    fn name(&self) -> String {
        format!("laplace({})", self.theta)
    }
}

// ---------------------------------------------------------------------------
// Weibull
// ---------------------------------------------------------------------------

/// Weibull distribution with shape `k` and scale `scale`, on [0, ∞).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Weibull {
    shape: f64,
    scale: f64,
}

impl Weibull {
    pub fn new(shape: f64, scale: f64) -> Result<Self> {
        if shape <= 0.0 || !shape.is_finite() {
            return Err(Error::InvalidParameter {
                name: "shape",
                value: shape,
            });
        }
        if scale <= 0.0 || !scale.is_finite() {
            return Err(Error::InvalidParameter {
                name: "scale",
                value: scale,
            });
        }
        Ok(Weibull { shape, scale })
    }

    pub fn shape(&self) -> f64 {
        self.shape
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }
}

impl Univariate for Weibull {
    fn cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            0.0
        } else {
            -(-(x / self.scale).powf(self.shape)).exp_m1()
        }
    }

    fn survival(&self, x: f64) -> f64 {
        if x <= 0.0 {
            1.0
        } else {
            (-(x / self.scale).powf(self.shape)).exp()
        }
    }

    fn pdf(&self, x: f64) -> f64 {
        if x < 0.0 {
            return 0.0;
        }
        if x == 0.0 {
            // finite only for shape >= 1
            return if self.shape > 1.0 {
                0.0
            } else if self.shape == 1.0 {
                1.0 / self.scale
            } else {
                f64::INFINITY
            };
        }
        let z = x / self.scale;
        (self.shape / self.scale) * z.powf(self.shape - 1.0) * (-z.powf(self.shape)).exp()
    }

    fn quantile(&self, q: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&q) {
            return Err(Error::Domain {
                what: "quantile level",
                value: q,
            });
        }
        Ok(self.scale * (-(-q).ln_1p()).powf(1.0 / self.shape))
    }

    fn hazard(&self, x: f64) -> Result<f64> {
        if x < 0.0 {
            return Ok(0.0);
        }
        if x == 0.0 {
            return self
                .pdf(0.0)
                .is_finite()
                .then(|| self.pdf(0.0))
                .ok_or(Error::SupportExhausted { at: 0.0 });
        }
        let z = x / self.scale;
        Ok((self.shape / self.scale) * z.powf(self.shape - 1.0))
    }

    fn support(&self) -> (f64, f64) {
        (0.0, f64::INFINITY)
    }

    fn name(&self) -> String {
        format!("weibull({}, {})", self.shape, self.scale)
    }
}

// ---------------------------------------------------------------------------
// Uniform
// ---------------------------------------------------------------------------

/// Continuous uniform distribution on [a, b].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Uniform {
    a: f64,
    b: f64,
}

impl Uniform {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() || a >= b {
            return Err(Error::InvalidParameter { name: "b", value: b });
        }
        Ok(Uniform { a, b })
    }
}

impl Univariate for Uniform {
    fn cdf(&self, x: f64) -> f64 {
        if x <= self.a {
            0.0
        } else if x >= self.b {
            1.0
        } else {
            (x - self.a) / (self.b - self.a)
        }
    }

    fn pdf(&self, x: f64) -> f64 {
        if x >= self.a && x <= self.b {
            1.0 / (self.b - self.a)
        } else {
            0.0
        }
    }

    fn quantile(&self, q: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&q) {
            return Err(Error::Domain {
                what: "quantile level",
                value: q,
            });
        }
        Ok(self.a + q * (self.b - self.a))
    }

    fn support(&self) -> (f64, f64) {
        (self.a, self.b)
    }

    fn name(&self) -> String {
        format!("uniform({}, {})", self.a, self.b)
    }
}
