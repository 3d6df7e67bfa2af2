//! Adaptive Simpson quadrature with Richardson correction.

use crate::dist::Univariate;
use crate::error::{Error, Result};

/// Absolute tolerance used by the moment oracle.
pub const QUAD_ABS_TOL: f64 = 1e-10;

/// Recursion-depth cap; exceeding it without meeting the tolerance is a
/// [`Error::NonConvergence`].
pub const QUAD_DEPTH_CAP: u32 = 50;

/// Adaptive Simpson estimate of ∫ₐᵇ f(x) dx to absolute tolerance `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simpson(a, b, fa, fm, fb);
    recurse(f, a, m, b, fa, fm, fb, whole, tol, QUAD_DEPTH_CAP)
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    m: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64> {
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let (flm, frm) = (f(lm), f(rm));
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(Error::NonConvergence {
            depth: QUAD_DEPTH_CAP,
        });
    }
    let half = 0.5 * tol;
    Ok(recurse(f, a, lm, m, fa, flm, fm, left, half, depth - 1)?
        + recurse(f, m, rm, b, fm, frm, fb, right, half, depth - 1)?)
}

/// Quadrature oracle for raw moments: ∫ xʳ·pdf(x) dx over [lower, upper],
/// split at the supplied kink locations, each segment integrated to
/// [`QUAD_ABS_TOL`] scaled by the segment count.
pub fn quadrature_moment<F: Fn(f64) -> f64>(
    pdf: F,
    r: u32,
    lower: f64,
    upper: f64,
    split_points: &[f64],
) -> Result<f64> {
    if !lower.is_finite() || !upper.is_finite() || lower >= upper {
        return Err(Error::Domain {
            what: "integration bounds",
            value: upper,
        });
    }
    let mut cuts: Vec<f64> = split_points
        .iter()
        .copied()
        .filter(|s| *s > lower && *s < upper)
        .collect();
    cuts.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
    cuts.dedup();

    let mut edges = Vec::with_capacity(cuts.len() + 2);
    edges.push(lower);
    edges.extend(cuts);
    edges.push(upper);

    let integrand = |x: f64| x.powi(r as i32) * pdf(x);
    let per_segment = QUAD_ABS_TOL / (edges.len() - 1) as f64;
    let mut total = 0.0;
    for pair in edges.windows(2) {
        total += adaptive_simpson(&integrand, pair[0], pair[1], per_segment)?;
    }
    Ok(total)
}

/// Finite truncation bounds for integrating over a distribution's
/// support: finite support ends are used as-is, infinite ones are cut at
/// quantile levels `tail` and `1 − tail`.
pub fn integration_bounds<D: Univariate + ?Sized>(d: &D, tail: f64) -> Result<(f64, f64)> {
    let (lo, hi) = d.support();
    let lower = if lo.is_finite() { lo } else { d.quantile(tail)? };
    let upper = if hi.is_finite() {
        hi
    } else {
        d.quantile(1.0 - tail)?
    };
    Ok((lower, upper))
}
