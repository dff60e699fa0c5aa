//! Summation of slowly convergent alternating series.
//!
//! Partial sums are fed to Wynn's ε-algorithm over a sliding window. The
//! accelerated estimate is only sampled at the end of each (even, odd) pair of
//! terms, and the sum is accepted once three consecutive paired estimates move
//! by less than the tolerance relative to the running value.

use crate::error::{Error, Result};
use crate::C64;

/// Outcome of a series summation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    pub value: C64,
    pub abs_err: f64,
    pub terms: usize,
}

/// Wynn ε-algorithm applied to a whole sequence; returns the highest-order
/// even-column entry.
pub fn wynn_epsilon(seq: &[C64]) -> C64 {
    let n = seq.len();
    if n == 0 {
        return C64::new(0.0, 0.0);
    }
    let mut prev = vec![C64::new(0.0, 0.0); n + 1]; // column −1
    let mut cur: Vec<C64> = seq.to_vec(); // column 0
    let mut best = cur[n - 1];
    for col in 1..n {
        let len = cur.len() - 1;
        let mut next = Vec::with_capacity(len);
        for i in 0..len {
            let d = cur[i + 1] - cur[i];
            if d.norm() == 0.0 || !d.norm().is_finite() {
                return best;
            }
            next.push(prev[i + 1] + d.inv());
        }
        if col % 2 == 0 {
            match next.last() {
                Some(v) if v.re.is_finite() && v.im.is_finite() => best = *v,
                _ => return best,
            }
        }
        prev = cur;
        cur = next;
    }
    best
}

/// Parameters of [`sum_alternating`].
#[derive(Debug, Clone, Copy)]
pub struct AltSumConfig {
    pub max_terms: usize,
    pub min_terms: usize,
    /// Number of partial sums handed to the ε-algorithm (odd).
    pub window: usize,
}

impl Default for AltSumConfig {
    fn default() -> Self {
        AltSumConfig { max_terms: 100_000, min_terms: 24, window: 21 }
    }
}

/// Σ_{n≥0} term(n) for an alternating series with smooth amplitude.
pub fn sum_alternating<F>(term: F, tol: f64, cfg: &AltSumConfig) -> Result<SeriesSum>
where
    F: FnMut(usize) -> Result<C64>,
{
    sum_alternating_impl(term, tol, cfg, true)
}

/// Plain paired summation without acceleration, for absolutely convergent
/// paired series.
pub fn sum_paired<F>(term: F, tol: f64, cfg: &AltSumConfig) -> Result<SeriesSum>
where
    F: FnMut(usize) -> Result<C64>,
{
    sum_alternating_impl(term, tol, cfg, false)
}

fn sum_alternating_impl<F>(mut term: F, tol: f64, cfg: &AltSumConfig, accelerate: bool) -> Result<SeriesSum>
where
    F: FnMut(usize) -> Result<C64>,
{
    let w = cfg.window | 1;
    let mut partial: Vec<C64> = Vec::with_capacity(1024);
    let mut s = C64::new(0.0, 0.0);
    let mut last_est: Option<C64> = None;
    let mut small_run = 0usize;
    let mut max_change: f64 = 0.0;
    let mut last_change = f64::INFINITY;
    for n in 0..cfg.max_terms {
        let t = term(n)?;
        if !(t.re.is_finite() && t.im.is_finite()) {
            return Err(Error::NonFinite(format!("series term {n}")));
        }
        s += t;
        partial.push(s);
        if n % 2 == 0 || n + 1 < cfg.min_terms {
            continue;
        }
        let est = if accelerate && partial.len() >= w {
            wynn_epsilon(&partial[partial.len() - w..])
        } else {
            s
        };
        if let Some(prev) = last_est {
            let change = (est - prev).norm();
            last_change = change;
            if change <= tol * est.norm().max(f64::MIN_POSITIVE) {
                small_run += 1;
                max_change = max_change.max(change);
                if small_run >= 3 {
                    return Ok(SeriesSum { value: est, abs_err: max_change.max(f64::EPSILON * est.norm()), terms: n + 1 });
                }
            } else {
                small_run = 0;
                max_change = 0.0;
            }
        }
        last_est = Some(est);
    }
    Err(Error::Convergence {
        msg: format!("paired series did not meet the stopping rule within {} terms", cfg.max_terms),
        best: last_est.unwrap_or(s),
        err: last_change,
    })
}
