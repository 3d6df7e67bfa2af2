//! Grid-based checkers for stochastic orders and aging classes.
//!
//! All verdicts here are falsification checks, not proofs: "holds" means
//! no violation beyond the tolerance was found on the supplied grid.
//! Reports carry the worst signed slack and, when the verdict is
//! negative, a witness location.

mod aging;
mod check;
mod preservation;

pub use aging::{classify_aging, AgingReport, AgingVerdict};
pub use check::check_order;
pub use preservation::{preservation_suite, PreservationOutcome, PreservationVerdict};

use serde::Serialize;

use crate::dist::Univariate;
use crate::error::{Error, Result};

/// Default grid resolution for order and aging checks.
pub const DEFAULT_GRID_POINTS: usize = 512;

/// Default tolerance when both inputs evaluate through closed forms.
pub const DEFAULT_TOL_CLOSED_FORM: f64 = 1e-9;

/// Default tolerance when numeric quantile inversion is involved.
pub const DEFAULT_TOL_NUMERIC: f64 = 1e-6;

/// The stochastic orders that can be checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    /// F₁ ≺_st F₂: F₁(x) ≥ F₂(x) everywhere.
    St,
    /// F₁ ≺_hr F₂: h₁(x) ≥ h₂(x) everywhere.
    Hr,
    /// F₁ ≺_lr F₂: f₂/f₁ nondecreasing.
    Lr,
    /// F₁ ≺_c F₂: F₂⁻¹∘F₁ convex.
    Convex,
    /// F₁ ≺_* F₂: F₂⁻¹∘F₁(x)/x nondecreasing on x > 0.
    Star,
    /// F₁ ≺_su F₂: F₂⁻¹∘F₁ superadditive.
    Superadditive,
    /// F₁ ≺_disp F₂: F₂⁻¹∘F₁(x) − x nondecreasing.
    Dispersive,
}

impl OrderKind {
    pub const ALL: [OrderKind; 7] = [
        OrderKind::St,
        OrderKind::Hr,
        OrderKind::Lr,
        OrderKind::Convex,
        OrderKind::Star,
        OrderKind::Superadditive,
        OrderKind::Dispersive,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            OrderKind::St => "st",
            OrderKind::Hr => "hr",
            OrderKind::Lr => "lr",
            OrderKind::Convex => "convex",
            OrderKind::Star => "star",
            OrderKind::Superadditive => "superadditive",
            OrderKind::Dispersive => "dispersive",
        }
    }
}

impl std::str::FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "st" => Ok(OrderKind::St),
            "hr" => Ok(OrderKind::Hr),
            "lr" => Ok(OrderKind::Lr),
            "convex" | "c" => Ok(OrderKind::Convex),
            "star" | "*" => Ok(OrderKind::Star),
            "superadditive" | "su" => Ok(OrderKind::Superadditive),
            "dispersive" | "disp" => Ok(OrderKind::Dispersive),
            other => Err(Error::UnsupportedOrder {
                reason: format!("unknown order kind `{other}`"),
            }),
        }
    }
}

/// Location and size of the worst violation found by a checker.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    /// One point for pointwise checks, two for increment/pair checks.
    pub location: Vec<f64>,
    /// How far past the tolerance the defining inequality failed.
    pub violation: f64,
}

/// Outcome of a single order check on a grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderReport {
    pub kind: OrderKind,
    pub holds: bool,
    pub witness: Option<Witness>,
    /// Worst signed slack of the defining inequality; nonnegative slack
    /// everywhere means the order held with room to spare.
    pub margin: f64,
    pub tol: f64,
}

impl OrderReport {
    pub(crate) fn from_slacks(kind: OrderKind, slacks: &[(f64, Vec<f64>)], tol: f64) -> Self {
        let mut margin = f64::INFINITY;
        let mut worst: Option<&(f64, Vec<f64>)> = None;
        for entry in slacks {
            if entry.0 < margin {
                margin = entry.0;
                worst = Some(entry);
            }
        }
        let holds = margin >= -tol;
        OrderReport {
            kind,
            holds,
            witness: if holds {
                None
            } else {
                worst.map(|(slack, loc)| Witness {
                    location: loc.clone(),
                    violation: -slack,
                })
            },
            margin: if margin.is_finite() { margin } else { 0.0 },
            tol,
        }
    }
}

/// A strictly increasing evaluation grid with at least three points.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Grid {
    points: Vec<f64>,
}

impl Grid {
    pub fn new(points: Vec<f64>) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::InvalidGrid {
                reason: format!("need at least 3 points, got {}", points.len()),
            });
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidGrid {
                reason: "grid points must be finite".into(),
            });
        }
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGrid {
                reason: "grid points must be strictly increasing".into(),
            });
        }
        Ok(Grid { points })
    }

    /// Quantile-spaced grid at levels (i − 0.5)/n of `d`, which keeps all
    /// points strictly inside the support and away from hazard blow-ups
    /// at the endpoints.
    pub fn quantile_spaced<D: Univariate + ?Sized>(d: &D, n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidGrid {
                reason: format!("need at least 3 points, got {n}"),
            });
        }
        let mut points = Vec::with_capacity(n);
        for i in 1..=n {
            let level = (i as f64 - 0.5) / n as f64;
            points.push(d.quantile(level)?);
        }
        points.dedup();
        Grid::new(points)
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Index stride that caps pair-based (quadratic) checks at roughly
    /// `cap` points per axis.
    pub(crate) fn pair_stride(&self, cap: usize) -> usize {
        self.points.len().div_ceil(cap).max(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::Exponential;

    #[test]
    fn grid_rejects_bad_inputs() {
        assert!(Grid::new(vec![1.0, 2.0]).is_err());
        assert!(Grid::new(vec![1.0, 1.0, 2.0]).is_err());
        assert!(Grid::new(vec![2.0, 1.0, 3.0]).is_err());
        assert!(Grid::new(vec![1.0, f64::NAN, 3.0]).is_err());
        assert!(Grid::new(vec![0.0, 1.0, 2.0]).is_ok());
    }

    #[test]
    fn quantile_spaced_grid_is_increasing_and_interior() {
        let d = Exponential::new(2.0).unwrap();
        let g = Grid::quantile_spaced(&d, 64).unwrap();
        assert_eq!(g.len(), 64);
        assert!(g.points()[0] > 0.0);
        assert!(g.points().windows(2).all(|w| w[0] < w[1]));
        // first and last sit at the (0.5/n) and (1 − 0.5/n) levels
        assert!((d.cdf(g.points()[0]) - 0.5 / 64.0).abs() < 1e-12);
        assert!((d.cdf(g.points()[63]) - (1.0 - 0.5 / 64.0)).abs() < 1e-12);
    }

    #[test]
    fn order_kind_parses_aliases() {
        use std::str::FromStr;
        assert_eq!(OrderKind::from_str("st").unwrap(), OrderKind::St);
        assert_eq!(OrderKind::from_str("disp").unwrap(), OrderKind::Dispersive);
        assert_eq!(OrderKind::from_str("su").unwrap(), OrderKind::Superadditive);
        assert!(OrderKind::from_str("bogus").is_err());
    }

    #[test]
    fn pair_stride_caps_quadratic_work() {
        let g = Grid::quantile_spaced(&Exponential::new(1.0).unwrap(), 512).unwrap();
        let stride = g.pair_stride(128);
        assert_eq!(stride, 4);
        assert!(g.points().iter().step_by(stride).count() <= 128);
    }
}
