//! Kolmogorov–Smirnov statistics and the empirical copula.

use serde::Serialize;

use super::SampleBatch;
use crate::error::Result;

/// Asymptotic 5% critical constant for the KS statistic; the one- and
/// two-sample thresholds below scale it by the usual sample-size factor.
pub const KS_CRITICAL_5PCT: f64 = 1.36;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GofResult {
    pub statistic: f64,
    pub threshold: f64,
    pub pass: bool,
}

impl GofResult {
    fn new(statistic: f64, threshold: f64) -> Self {
        GofResult {
            statistic,
            threshold,
            pass: statistic <= threshold,
        }
    }
}

/// One-sample KS distance between a batch and a cdf:
/// Dₙ = maxᵢ max(i/n − F(x₍ᵢ₎), F(x₍ᵢ₎) − (i−1)/n) over the sorted batch.
/// Threshold 1.36/√n (5% level).
pub fn ks_statistic<F: Fn(f64) -> f64>(batch: &SampleBatch<f64>, cdf: F) -> Result<GofResult> {
    batch.require_nonempty()?;
    let mut xs = batch.values().to_vec();
    xs.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
    let n = xs.len() as f64;
    let mut d = 0.0f64;
    for (i, &x) in xs.iter().enumerate() {
        let f = cdf(x);
        let upper = ((i + 1) as f64 / n - f).abs();
        let lower = (f - i as f64 / n).abs();
        d = d.max(upper).max(lower);
    }
    Ok(GofResult::new(d, KS_CRITICAL_5PCT / n.sqrt()))
}

/// Two-sample KS distance sup |Fₙ − Gₘ| with the 5% threshold
/// 1.36·√((n + m)/(n·m)).
pub fn ks_two_sample(a: &SampleBatch<f64>, b: &SampleBatch<f64>) -> Result<GofResult> {
    a.require_nonempty()?;
    b.require_nonempty()?;
    let mut xs = a.values().to_vec();
    let mut ys = b.values().to_vec();
    xs.sort_unstable_by(|p, q| p.partial_cmp(q).unwrap());
    ys.sort_unstable_by(|p, q| p.partial_cmp(q).unwrap());

    let (n, m) = (xs.len(), ys.len());
    let (mut i, mut j) = (0usize, 0usize);
    let mut d = 0.0f64;
    while i < n && j < m {
        // consume every copy of the smaller value from both samples
        // before comparing the empirical cdfs, so ties don't inflate D
        let v = xs[i].min(ys[j]);
        while i < n && xs[i] == v {
            i += 1;
        }
        while j < m && ys[j] == v {
            j += 1;
        }
        let diff = (i as f64 / n as f64 - j as f64 / m as f64).abs();
        d = d.max(diff);
    }
    let threshold = KS_CRITICAL_5PCT * ((n + m) as f64 / (n as f64 * m as f64)).sqrt();
    Ok(GofResult::new(d, threshold))
}

/// Rank-based empirical copula of a batch of pairs at (u, v): the
/// fraction of pairs whose component ranks, scaled by n, are both below
/// the requested levels.
pub fn empirical_copula(pairs: &SampleBatch<(f64, f64)>, u: f64, v: f64) -> Result<f64> {
    pairs.require_nonempty()?;
    let n = pairs.n();
    let ranks_x = ranks(pairs.values().iter().map(|p| p.0));
    let ranks_y = ranks(pairs.values().iter().map(|p| p.1));
    let count = ranks_x
        .iter()
        .zip(&ranks_y)
        .filter(|(rx, ry)| **rx as f64 / n as f64 <= u && **ry as f64 / n as f64 <= v)
        .count();
    Ok(count as f64 / n as f64)
}

/// 1-based ranks; ties broken by input order (the data here is
/// continuous, so ties have measure zero).
fn ranks<I: Iterator<Item = f64>>(values: I) -> Vec<usize> {
    let vals: Vec<f64> = values.collect();
    let mut order: Vec<usize> = (0..vals.len()).collect();
    order.sort_by(|&a, &b| vals[a].partial_cmp(&vals[b]).unwrap());
    let mut out = vec![0usize; vals.len()];
    for (rank, &idx) in order.iter().enumerate() {
        out[idx] = rank + 1;
    }
    out
}
