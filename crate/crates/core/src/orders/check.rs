//! The order checkers themselves.

use super::{Grid, OrderKind, OrderReport};
use crate::dist::Univariate;
use crate::error::{Error, Result};

/// Smallest x admitted by the star-order check; the defining ratio
/// divides by x.
const STAR_MIN_X: f64 = 1e-6;

/// Per-axis cap for the superadditive pair check.
const PAIR_CAP: usize = 128;

/// Checks whether `f1 ≺ f2` in the requested order on the grid.
///
/// Pointwise orders (st, hr) evaluate the defining inequality at every
/// grid point; lr, star and dispersive check discrete increments; convex
/// checks slopes of consecutive secants; superadditive checks Cartesian
/// pairs with x + y inside the grid range (subsampled to at most
/// 128×128).
pub fn check_order(
    kind: OrderKind,
    f1: &dyn Univariate,
    f2: &dyn Univariate,
    grid: &Grid,
    tol: f64,
) -> Result<OrderReport> {
    let slacks = match kind {
        OrderKind::St => st_slacks(f1, f2, grid),
        OrderKind::Hr => hr_slacks(f1, f2, grid)?,
        OrderKind::Lr => lr_slacks(f1, f2, grid)?,
        OrderKind::Convex => convex_slacks(f1, f2, grid)?,
        OrderKind::Star => star_slacks(f1, f2, grid)?,
        OrderKind::Superadditive => superadditive_slacks(f1, f2, grid)?,
        OrderKind::Dispersive => dispersive_slacks(f1, f2, grid)?,
    };
    Ok(OrderReport::from_slacks(kind, &slacks, tol))
}

fn st_slacks(f1: &dyn Univariate, f2: &dyn Univariate, grid: &Grid) -> Vec<(f64, Vec<f64>)> {
    grid.points()
        .iter()
        .map(|&x| (f1.cdf(x) - f2.cdf(x), vec![x]))
        .collect()
}

fn hr_slacks(
    f1: &dyn Univariate,
    f2: &dyn Univariate,
    grid: &Grid,
) -> Result<Vec<(f64, Vec<f64>)>> {
    grid.points()
        .iter()
        .map(|&x| {
            let h1 = f1.hazard(x).map_err(unsupported("hazard of left input"))?;
            let h2 = f2.hazard(x).map_err(unsupported("hazard of right input"))?;
            Ok((h1 - h2, vec![x]))
        })
        .collect()
}

fn lr_slacks(
    f1: &dyn Univariate,
    f2: &dyn Univariate,
    grid: &Grid,
) -> Result<Vec<(f64, Vec<f64>)>> {
    // density ratio f2/f1 must be nondecreasing; points where both
    // densities vanish carry no information and are skipped
    let mut ratios: Vec<(f64, f64)> = Vec::with_capacity(grid.len());
    for &x in grid.points() {
        let d1 = f1.pdf(x);
        let d2 = f2.pdf(x);
        if d1.is_nan() || d2.is_nan() {
            return Err(Error::UnsupportedOrder {
                reason: format!("density undefined at x = {x}"),
            });
        }
        if d1 <= 0.0 && d2 <= 0.0 {
            continue;
        }
        ratios.push((x, d2 / d1)); // d1 == 0 gives +∞, which is fine monotonically
    }
    if ratios.len() < 2 {
        return Err(Error::UnsupportedOrder {
            reason: "fewer than two grid points with positive density".into(),
        });
    }
    Ok(ratios
        .windows(2)
        .map(|w| {
            let ((xa, ra), (xb, rb)) = (w[0], w[1]);
            let slack = if ra.is_infinite() && rb.is_infinite() {
                0.0
            } else if rb.is_infinite() {
                f64::INFINITY
            } else if ra.is_infinite() {
                f64::NEG_INFINITY
            } else {
                rb - ra
            };
            (slack, vec![xa, xb])
        })
        .collect())
}

/// F₂⁻¹(F₁(x)), the transport map the transform-invariant orders act on.
fn composition(f1: &dyn Univariate, f2: &dyn Univariate, x: f64) -> Result<f64> {
    f2.quantile(f1.cdf(x))
        .map_err(unsupported("quantile of right input"))
}

fn convex_slacks(
    f1: &dyn Univariate,
    f2: &dyn Univariate,
    grid: &Grid,
) -> Result<Vec<(f64, Vec<f64>)>> {
    let pts = grid.points();
    let t: Vec<f64> = pts
        .iter()
        .map(|&x| composition(f1, f2, x))
        .collect::<Result<_>>()?;
    // secant slopes must be nondecreasing
    let slopes: Vec<f64> = pts
        .windows(2)
        .zip(t.windows(2))
        .map(|(xs, ts)| (ts[1] - ts[0]) / (xs[1] - xs[0]))
        .collect();
    Ok(slopes
        .windows(2)
        .enumerate()
        .map(|(i, w)| (w[1] - w[0], vec![pts[i], pts[i + 1], pts[i + 2]]))
        .collect())
}

fn star_slacks(
    f1: &dyn Univariate,
    f2: &dyn Univariate,
    grid: &Grid,
) -> Result<Vec<(f64, Vec<f64>)>> {
    let usable: Vec<f64> = grid
        .points()
        .iter()
        .copied()
        .filter(|&x| x >= STAR_MIN_X)
        .collect();
    if usable.len() < 2 {
        return Err(Error::UnsupportedOrder {
            reason: "star order needs at least two grid points above 1e-6".into(),
        });
    }
    let ratios: Vec<f64> = usable
        .iter()
        .map(|&x| Ok(composition(f1, f2, x)? / x))
        .collect::<Result<_>>()?;
    Ok(ratios
        .windows(2)
        .enumerate()
        .map(|(i, w)| (w[1] - w[0], vec![usable[i], usable[i + 1]]))
        .collect())
}

fn superadditive_slacks(
    f1: &dyn Univariate,
    f2: &dyn Univariate,
    grid: &Grid,
) -> Result<Vec<(f64, Vec<f64>)>> {
    let stride = grid.pair_stride(PAIR_CAP);
    let pts: Vec<f64> = grid.points().iter().copied().step_by(stride).collect();
    let x_max = *grid.points().last().expect("grid has points");
    let mut t = std::collections::HashMap::new();
    let mut eval = |x: f64| -> Result<f64> {
        if let Some(&v) = t.get(&x.to_bits()) {
            return Ok(v);
        }
        let v = composition(f1, f2, x)?;
        t.insert(x.to_bits(), v);
        Ok(v)
    };
    let mut slacks = Vec::new();
    for (i, &x) in pts.iter().enumerate() {
        for &y in &pts[i..] {
            if x + y > x_max {
                break;
            }
            let slack = eval(x + y)? - eval(x)? - eval(y)?;
            slacks.push((slack, vec![x, y]));
        }
    }
    if slacks.is_empty() {
        return Err(Error::UnsupportedOrder {
            reason: "no grid pairs with x + y inside the grid range".into(),
        });
    }
    Ok(slacks)
}

fn dispersive_slacks(
    f1: &dyn Univariate,
    f2: &dyn Univariate,
    grid: &Grid,
) -> Result<Vec<(f64, Vec<f64>)>> {
    let pts = grid.points();
    let gaps: Vec<f64> = pts
        .iter()
        .map(|&x| Ok(composition(f1, f2, x)? - x))
        .collect::<Result<_>>()?;
    Ok(gaps
        .windows(2)
        .enumerate()
        .map(|(i, w)| (w[1] - w[0], vec![pts[i], pts[i + 1]]))
        .collect())
}

fn unsupported(context: &'static str) -> impl Fn(Error) -> Error {
    move |e| Error::UnsupportedOrder {
        reason: format!("{context}: {e}"),
    }
}
