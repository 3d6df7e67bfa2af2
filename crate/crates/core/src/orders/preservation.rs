//! Order-preservation harness: does `F₁ ≺ F₂` survive the mixture
//! transform applied to both sides with the same λ?
//!
//! For st this follows from monotonicity of ψ_λ; for the quantile-
//! composition orders (convex, star, superadditive, dispersive) it is a
//! consequence of the identity G⁻¹_λ[F₂] ∘ G_λ[F₁] = F₂⁻¹ ∘ F₁, so the
//! premise and conclusion verdicts must match whenever the engine is
//! healthy — which is exactly what the suite lets callers assert.

use serde::Serialize;

use super::{check_order, Grid, OrderKind, OrderReport};
use crate::dist::Univariate;
use crate::error::Result;
use crate::transform::Transformed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PreservationVerdict {
    /// Premise and conclusion both hold.
    Preserved,
    /// The premise failed on (F₁, F₂); the claim is vacuous. The
    /// conclusion report is still recorded for inspection.
    PremiseFailed,
    /// The premise held but the conclusion did not.
    NotPreserved,
}

/// One (order, λ) preservation claim with both underlying reports.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PreservationOutcome {
    pub kind: OrderKind,
    pub lambda: f64,
    pub premise: OrderReport,
    pub conclusion: OrderReport,
    pub verdict: PreservationVerdict,
}

/// Runs every (kind, λ) combination: the premise is checked on
/// (F₁, F₂) over a quantile grid of F₁, the conclusion on
/// (G_λ[F₁], G_λ[F₂]) over a quantile grid of G_λ[F₁].
pub fn preservation_suite(
    f1: &dyn Univariate,
    f2: &dyn Univariate,
    lambdas: &[f64],
    kinds: &[OrderKind],
    grid_points: usize,
    tol: f64,
) -> Result<Vec<PreservationOutcome>> {
    let premise_grid = Grid::quantile_spaced(f1, grid_points)?;
    let mut outcomes = Vec::with_capacity(lambdas.len() * kinds.len());
    for &lambda in lambdas {
        let g1 = Transformed::new(f1, lambda)?;
        let g2 = Transformed::new(f2, lambda)?;
        let conclusion_grid = Grid::quantile_spaced(&g1, grid_points)?;
        for &kind in kinds {
            let premise = check_order(kind, f1, f2, &premise_grid, tol)?;
            let conclusion = check_order(kind, &g1, &g2, &conclusion_grid, tol)?;
            let verdict = if !premise.holds {
                PreservationVerdict::PremiseFailed
            } else if conclusion.holds {
                PreservationVerdict::Preserved
            } else {
                PreservationVerdict::NotPreserved
            };
            outcomes.push(PreservationOutcome {
                kind,
                lambda,
                premise,
                conclusion,
                verdict,
            });
        }
    }
    Ok(outcomes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::{Exponential, Weibull};

    const LAMBDAS: [f64; 5] = [-1.0, -0.5, 0.0, 0.5, 1.0];

    #[test]
    fn st_is_preserved_for_ordered_exponentials() {
        let f1 = Exponential::new(2.0).unwrap();
        let f2 = Exponential::new(1.0).unwrap();
        let outcomes =
            preservation_suite(&f1, &f2, &LAMBDAS, &[OrderKind::St], 256, 1e-9).unwrap();
        assert_eq!(outcomes.len(), 5);
        for o in outcomes {
            assert_eq!(o.verdict, PreservationVerdict::Preserved, "λ = {}", o.lambda);
        }
    }

    #[test]
    fn reflexive_claims_hold_for_every_order() {
        let f = Exponential::new(1.0).unwrap();
        let kinds = [
            OrderKind::St,
            OrderKind::Convex,
            OrderKind::Star,
            OrderKind::Superadditive,
            OrderKind::Dispersive,
        ];
        let outcomes = preservation_suite(&f, &f, &[-0.7, 0.0, 0.7], &kinds, 128, 1e-9).unwrap();
        for o in outcomes {
            assert_eq!(
                o.verdict,
                PreservationVerdict::Preserved,
                "{:?} λ = {}",
                o.kind,
                o.lambda
            );
        }
    }

    #[test]
    fn composition_orders_match_premise_even_when_it_fails() {
        // Exp(2) vs Weibull(1/2, 1): T(x) = (2x)², so T − x decreases on
        // x < 1/8 and the dispersive premise fails on a full grid; the
        // conclusion must fail the same way because the composition map
        // is unchanged by the transform.
        let f1 = Exponential::new(2.0).unwrap();
        let f2 = Weibull::new(0.5, 1.0).unwrap();
        let outcomes =
            preservation_suite(&f1, &f2, &[0.5], &[OrderKind::Dispersive], 256, 1e-9).unwrap();
        let o = &outcomes[0];
        assert_eq!(o.verdict, PreservationVerdict::PremiseFailed);
        assert_eq!(o.premise.holds, o.conclusion.holds);
        assert!(!o.conclusion.holds);
    }

    #[test]
    fn convex_star_superadditive_preserved_for_exp_vs_heavy_weibull() {
        // T(x) = x² is convex, star-increasing and superadditive
        let f1 = Exponential::new(1.0).unwrap();
        let f2 = Weibull::new(0.5, 1.0).unwrap();
        let kinds = [OrderKind::Convex, OrderKind::Star, OrderKind::Superadditive];
        let outcomes = preservation_suite(&f1, &f2, &LAMBDAS, &kinds, 256, 1e-7).unwrap();
        for o in outcomes {
            assert_eq!(
                o.verdict,
                PreservationVerdict::Preserved,
                "{:?} λ = {}: premise {} conclusion {}",
                o.kind,
                o.lambda,
                o.premise.margin,
                o.conclusion.margin
            );
        }
    }
}
