//! The transformed copula and numerical validity certification.

use serde::Serialize;

use super::copula::Copula;
use crate::error::{Error, Result};
use crate::transform::psi_inv_raw;

/// Copula of the bivariate transform: for a baseline copula D,
///
/// ```text
/// C_λ(ψ(u), ψ(v)) = (1 + λ)·{uv + D(u,v)·D̄(u,v)} − λ·D²(u,v)
/// ```
///
/// with ψ(t) = t + λt(1 − t). The defining identity only pins C_λ at
/// ψ-distorted arguments, so evaluating at arbitrary (u, v) routes both
/// coordinates through ψ⁻¹ first — the same cancellation-free inverse
/// the univariate quantile uses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformedCopula<C> {
    base: C,
    lambda: f64,
}

impl<C: Copula> TransformedCopula<C> {
    pub fn new(base: C, lambda: f64) -> Result<Self> {
        if !(-1.0..=1.0).contains(&lambda) {
            return Err(Error::InvalidParameter {
                name: "lambda",
                value: lambda,
            });
        }
        Ok(TransformedCopula { base, lambda })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn base(&self) -> &C {
        &self.base
    }

    /// The right-hand side of the defining identity at raw arguments:
    /// the value of C_λ at (ψ(a), ψ(b)). Unlike C_λ itself, this map is
    /// nondecreasing in λ at every fixed (a, b).
    pub fn value_at_psi(&self, a: f64, b: f64) -> f64 {
        raw_formula(&self.base, self.lambda, a, b)
    }
}

fn raw_formula<C: Copula + ?Sized>(base: &C, lambda: f64, a: f64, b: f64) -> f64 {
    let d = base.value(a, b);
    let dbar = base.survival_value(a, b);
    ((1.0 + lambda) * (a * b + d * dbar) - lambda * d * d).clamp(0.0, 1.0)
}

impl<C: Copula> Copula for TransformedCopula<C> {
    fn value(&self, u: f64, v: f64) -> f64 {
        let a = psi_inv_raw(self.lambda, u.clamp(0.0, 1.0));
        let b = psi_inv_raw(self.lambda, v.clamp(0.0, 1.0));
        raw_formula(&self.base, self.lambda, a, b)
    }

    fn name(&self) -> String {
        format!("transformed[{}; lambda={}]", self.base.name(), self.lambda)
    }
}

/// Where and how badly a copula property failed on the grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridViolation {
    pub at: (f64, f64),
    pub amount: f64,
}

/// Numerical certificate that a bivariate function behaves like a copula
/// on an (n+1)×(n+1) uniform grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidityReport {
    pub name: String,
    pub resolution: usize,
    pub tol: f64,
    pub valid: bool,
    /// Smallest elementary-rectangle volume found (2-increasingness
    /// wants this ≥ −tol).
    pub worst_volume: f64,
    pub worst_volume_at: (f64, f64),
    /// Largest |C(u,1) − u| or |C(1,v) − v|.
    pub worst_margin_error: f64,
    /// Largest |C(u,0)| or |C(0,v)|.
    pub worst_grounding_error: f64,
    /// Populated with the dominant failure when `valid` is false.
    pub violation: Option<GridViolation>,
}

/// Checks groundedness, uniform margins and 2-increasingness of `c` on a
/// uniform grid with `resolution` cells per axis.
///
/// Rectangle volumes are allowed to dip to −tol: exact 2-increasingness
/// can round slightly negative near the boundary at λ = ±1.
pub fn copula_validity(c: &dyn Copula, resolution: usize, tol: f64) -> Result<ValidityReport> {
    if resolution < 3 {
        return Err(Error::InvalidGrid {
            reason: format!("validity grid needs resolution >= 3, got {resolution}"),
        });
    }
    let tol = tol.abs();
    let n = resolution;
    let levels: Vec<f64> = (0..=n).map(|i| i as f64 / n as f64).collect();
    let values: Vec<Vec<f64>> = levels
        .iter()
        .map(|&u| levels.iter().map(|&v| c.value(u, v)).collect())
        .collect();

    let mut worst_margin = 0.0f64;
    let mut margin_at = (0.0, 0.0);
    let mut worst_ground = 0.0f64;
    let mut ground_at = (0.0, 0.0);
    for (i, &t) in levels.iter().enumerate() {
        for (err, at) in [
            ((values[i][n] - t).abs(), (t, 1.0)),
            ((values[n][i] - t).abs(), (1.0, t)),
        ] {
            if err > worst_margin {
                worst_margin = err;
                margin_at = at;
            }
        }
        for (err, at) in [
            (values[i][0].abs(), (t, 0.0)),
            (values[0][i].abs(), (0.0, t)),
        ] {
            if err > worst_ground {
                worst_ground = err;
                ground_at = at;
            }
        }
    }

    let mut worst_volume = f64::INFINITY;
    let mut volume_at = (0.0, 0.0);
    for i in 0..n {
        for j in 0..n {
            let vol = values[i + 1][j + 1] - values[i + 1][j] - values[i][j + 1] + values[i][j];
            if vol < worst_volume {
                worst_volume = vol;
                volume_at = (levels[i], levels[j]);
            }
        }
    }

    let volume_ok = worst_volume >= -tol;
    let margin_ok = worst_margin <= tol;
    let ground_ok = worst_ground <= tol;
    let valid = volume_ok && margin_ok && ground_ok;
    let violation = if valid {
        None
    } else if !volume_ok {
        Some(GridViolation {
            at: volume_at,
            amount: -worst_volume,
        })
    } else if !margin_ok {
        Some(GridViolation {
            at: margin_at,
            amount: worst_margin,
        })
    } else {
        Some(GridViolation {
            at: ground_at,
            amount: worst_ground,
        })
    };

    Ok(ValidityReport {
        name: c.name(),
        resolution,
        tol,
        valid,
        worst_volume,
        worst_volume_at: volume_at,
        worst_margin_error: worst_margin,
        worst_grounding_error: worst_ground,
        violation,
    })
}
