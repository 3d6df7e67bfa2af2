//! Aging-class classification: IHR/DHR, IHRA/DHRA, NBU/NWU.

use serde::Serialize;

use super::{Grid, Witness};
use crate::dist::Univariate;
use crate::error::{Error, Result};

/// Below this, points are skipped by the hazard-average check (it
/// divides by t).
const HRA_MIN_T: f64 = 1e-6;

/// Per-axis cap for the NBU/NWU pair checks.
const PAIR_CAP: usize = 128;

/// Verdict for one aging class.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AgingVerdict {
    pub holds: bool,
    pub witness: Option<Witness>,
    pub margin: f64,
}

impl AgingVerdict {
    fn from_slacks(slacks: &[(f64, Vec<f64>)], tol: f64) -> Self {
        let mut margin = f64::INFINITY;
        let mut worst: Option<&(f64, Vec<f64>)> = None;
        for entry in slacks {
            if entry.0 < margin {
                margin = entry.0;
                worst = Some(entry);
            }
        }
        let holds = margin >= -tol;
        AgingVerdict {
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
        }
    }

    /// Demotes this verdict when a weaker class in the implication chain
    /// failed: a claim of IHR with NBU failing would be inconsistent, so
    /// the stronger claim inherits the failure.
    fn chained(self, weaker: &AgingVerdict) -> Self {
        if self.holds && !weaker.holds {
            AgingVerdict {
                holds: false,
                witness: weaker.witness.clone(),
                margin: self.margin.min(weaker.margin),
            }
        } else {
            self
        }
    }
}

/// Six aging-class verdicts. The implication chains
/// IHR ⇒ IHRA ⇒ NBU and DHR ⇒ DHRA ⇒ NWU hold on every report: a
/// stronger class is only reported as holding when the weaker ones do.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AgingReport {
    pub ihr: AgingVerdict,
    pub dhr: AgingVerdict,
    pub ihra: AgingVerdict,
    pub dhra: AgingVerdict,
    pub nbu: AgingVerdict,
    pub nwu: AgingVerdict,
}

/// Classifies a lifetime distribution (support within [0, ∞)) on a grid.
///
/// IHR/DHR check hazard monotonicity at consecutive grid points,
/// IHRA/DHRA monotonicity of −ln F̄(t)/t, NBU/NWU the inequality
/// F̄(x + t) ≤ (≥) F̄(x)·F̄(t) on subsampled grid pairs. All
/// monotonicity checks are non-strict, so the exponential sits in all
/// six classes at once.
pub fn classify_aging(f: &dyn Univariate, grid: &Grid, tol: f64) -> Result<AgingReport> {
    let (lower, _) = f.support();
    if lower < 0.0 {
        return Err(Error::Domain {
            what: "aging classification needs support within [0, ∞); lower bound",
            value: lower,
        });
    }

    let pts = grid.points();

    // hazard increments
    let hazards: Vec<f64> = pts.iter().map(|&x| f.hazard(x)).collect::<Result<_>>()?;
    let ihr_slacks: Vec<(f64, Vec<f64>)> = hazards
        .windows(2)
        .enumerate()
        .map(|(i, w)| (w[1] - w[0], vec![pts[i], pts[i + 1]]))
        .collect();
    let dhr_slacks: Vec<(f64, Vec<f64>)> =
        ihr_slacks.iter().map(|(s, l)| (-s, l.clone())).collect();

    // hazard-average increments
    let usable: Vec<f64> = pts.iter().copied().filter(|&t| t >= HRA_MIN_T).collect();
    if usable.len() < 2 {
        return Err(Error::InvalidGrid {
            reason: "hazard-average check needs at least two points above 1e-6".into(),
        });
    }
    let averages: Vec<f64> = usable
        .iter()
        .map(|&t| {
            let s = f.survival(t);
            if s <= 0.0 {
                Err(Error::SupportExhausted { at: t })
            } else {
                Ok(-s.ln() / t)
            }
        })
        .collect::<Result<_>>()?;
    let ihra_slacks: Vec<(f64, Vec<f64>)> = averages
        .windows(2)
        .enumerate()
        .map(|(i, w)| (w[1] - w[0], vec![usable[i], usable[i + 1]]))
        .collect();
    let dhra_slacks: Vec<(f64, Vec<f64>)> =
        ihra_slacks.iter().map(|(s, l)| (-s, l.clone())).collect();

    // new-better/worse-than-used on pairs
    let stride = grid.pair_stride(PAIR_CAP);
    let sub: Vec<f64> = pts.iter().copied().step_by(stride).collect();
    let mut nbu_slacks = Vec::new();
    for &t in &sub {
        let st = f.survival(t);
        for &x in &sub {
            let slack = f.survival(x) * st - f.survival(x + t);
            nbu_slacks.push((slack, vec![t, x]));
        }
    }
    let nwu_slacks: Vec<(f64, Vec<f64>)> =
        nbu_slacks.iter().map(|(s, l)| (-s, l.clone())).collect();

    let nbu = AgingVerdict::from_slacks(&nbu_slacks, tol);
    let nwu = AgingVerdict::from_slacks(&nwu_slacks, tol);
    let ihra = AgingVerdict::from_slacks(&ihra_slacks, tol).chained(&nbu);
    let dhra = AgingVerdict::from_slacks(&dhra_slacks, tol).chained(&nwu);
    let ihr = AgingVerdict::from_slacks(&ihr_slacks, tol).chained(&ihra);
    let dhr = AgingVerdict::from_slacks(&dhr_slacks, tol).chained(&dhra);

    Ok(AgingReport {
        ihr,
        dhr,
        ihra,
        dhra,
        nbu,
        nwu,
    })
}
