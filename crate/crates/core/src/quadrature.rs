//! Double-exponential quadrature on the half-line and on finite intervals, and
//! trapezoidal integration along vertical lines of the complex plane.
//!
//! Tolerances are absolute; the convergence test is floored by an estimate of
//! the rounding error so that cancelling integrands still terminate.

use crate::error::{Error, Result};
use crate::C64;
use std::f64::consts::{FRAC_PI_2, PI};

/// Result of a quadrature call.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: C64,
    pub abs_err: f64,
    pub nodes: usize,
}

/// Level limits and starting steps.
#[derive(Debug, Clone, Copy)]
pub struct QuadConfig {
    pub max_level: u32,
    pub min_level: u32,
    /// Half-width of the double-exponential parameter range.
    pub de_range: f64,
    /// Initial trapezoid step on vertical lines.
    pub line_h0: f64,
    /// Largest |Im u| the vertical-line tail search may reach.
    pub line_y_max: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig { max_level: 12, min_level: 3, de_range: 4.25, line_h0: 0.5, line_y_max: 4000.0 }
    }
}

const ROUNDOFF: f64 = 64.0 * f64::EPSILON;

fn check(v: C64, at: f64) -> Result<C64> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite(format!("integrand at {at}")))
    }
}

/// Shared level-refinement driver for double-exponential rules.
/// `node(s)` returns (weight·φ′ factor, abscissa) for parameter s.
fn de_driver<F, N>(f: &F, node: N, tol: f64, cfg: &QuadConfig) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Result<C64>,
    N: Fn(f64) -> Option<(f64, f64)>,
{
    let range = cfg.de_range;
    let mut sum = C64::new(0.0, 0.0);
    let mut l1 = 0.0;
    let mut nodes = 0usize;
    let eval = |s: f64, sum: &mut C64, l1: &mut f64, nodes: &mut usize| -> Result<()> {
        if let Some((w, x)) = node(s) {
            if w == 0.0 || !w.is_finite() {
                return Ok(());
            }
            let fx = f(x)?;
            let term = check(fx, x)? * w;
            *sum += term;
            *l1 += term.norm();
            *nodes += 1;
        }
        Ok(())
    };
    let k0 = range.floor() as i64;
    for k in -k0..=k0 {
        eval(k as f64, &mut sum, &mut l1, &mut nodes)?;
    }
    let mut h = 1.0;
    let mut prev = sum * h;
    let mut last_delta = f64::INFINITY;
    for level in 1..=cfg.max_level {
        h *= 0.5;
        let kmax = (range / h).floor() as i64;
        let mut k = -kmax + if kmax % 2 == 0 { 1 } else { 0 };
        while k <= kmax {
            eval(k as f64 * h, &mut sum, &mut l1, &mut nodes)?;
            k += 2;
        }
        let est = sum * h;
        let delta = (est - prev).norm();
        let floor = ROUNDOFF * l1 * h;
        if level >= cfg.min_level && delta <= tol.max(floor) {
            return Ok(QuadratureResult { value: est, abs_err: delta.max(floor), nodes: nodes.max(1) });
        }
        last_delta = delta;
        prev = est;
    }
    Err(Error::Convergence {
        msg: format!("double-exponential quadrature after {} levels", cfg.max_level),
        best: prev,
        err: last_delta,
    })
}

/// ∫₀^∞ f(t) dt by the exp-sinh rule t = exp(π/2 sinh s).
pub fn integrate_half_line<F>(f: F, tol: f64) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Result<C64>,
{
    integrate_half_line_with(f, tol, &QuadConfig::default())
}

pub fn integrate_half_line_with<F>(f: F, tol: f64, cfg: &QuadConfig) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Result<C64>,
{
    let node = |s: f64| {
        let t = (FRAC_PI_2 * s.sinh()).exp();
        if t == 0.0 || !t.is_finite() {
            return None;
        }
        Some((FRAC_PI_2 * s.cosh() * t, t))
    };
    de_driver(&f, node, tol, cfg)
}

/// ∫ₐᵇ f(x) dx by the tanh-sinh rule; endpoint singularities are never sampled.
pub fn integrate_interval<F>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Result<C64>,
{
    let d = 0.5 * (b - a);
    let node = move |s: f64| {
        let u = FRAC_PI_2 * s.sinh();
        let ch = u.cosh();
        // distance to the nearer endpoint, computed without cancellation
        let gap = d / (ch * (ch + u.abs().sinh()));
        let x = if u >= 0.0 { b - gap } else { a + gap };
        if !(x > a.min(b) && x < a.max(b)) {
            return None;
        }
        Some((d * FRAC_PI_2 * s.cosh() / (ch * ch), x))
    };
    let cfg = QuadConfig { de_range: 4.0, ..QuadConfig::default() };
    de_driver(&f, node, tol, &cfg)
}

/// (1/2πi) ∫_{c−i∞}^{c+i∞} f(u) du by the trapezoidal rule in y = Im u.
///
/// The range is grown until the integrand magnitude stays below the tolerance
/// over a stretch of nodes, then the step is halved until successive estimates
/// agree. The grid is offset from y = 0 so removable singularities on the real
/// axis are never sampled.
pub fn integrate_vertical_line<F>(f: F, re_u: f64, tol: f64) -> Result<QuadratureResult>
where
    F: Fn(C64) -> Result<C64>,
{
    integrate_vertical_line_with(f, re_u, tol, &QuadConfig::default())
}

pub fn integrate_vertical_line_with<F>(f: F, re_u: f64, tol: f64, cfg: &QuadConfig) -> Result<QuadratureResult>
where
    F: Fn(C64) -> Result<C64>,
{
    let h0 = cfg.line_h0;
    let y0 = 0.3 * h0;
    let at = |y: f64| -> Result<C64> { check(f(C64::new(re_u, y))?, y) };
    let mut nodes = 0usize;
    let mut sum = at(y0)?;
    let mut l1 = sum.norm();
    nodes += 1;
    // walk outwards on the coarse grid until the tail is negligible
    const QUIET: usize = 10;
    let thr = 0.01 * tol * 2.0 * PI;
    let mut lim = [0i64; 2];
    for (side, dir) in [(0usize, 1i64), (1usize, -1i64)] {
        let mut k = 0i64;
        let mut quiet = 0usize;
        loop {
            k += dir;
            let y = y0 + k as f64 * h0;
            if y.abs() > cfg.line_y_max {
                return Err(Error::DecayStall(format!(
                    "integrand on Re u = {re_u} still {:.3e} at |Im u| = {:.0}",
                    at(y).map(|v| v.norm()).unwrap_or(f64::NAN),
                    y.abs()
                )));
            }
            let v = at(y)?;
            nodes += 1;
            sum += v;
            l1 += v.norm();
            if v.norm() < thr {
                quiet += 1;
                if quiet >= QUIET {
                    break;
                }
            } else {
                quiet = 0;
            }
        }
        lim[side] = k;
    }
    let (k_hi, k_lo) = (lim[0], lim[1]);
    let mut h = h0;
    let mut prev = sum * (h / (2.0 * PI));
    let mut last_delta = f64::INFINITY;
    let mut sub = 1i64;
    for level in 1..=cfg.max_level {
        h *= 0.5;
        sub *= 2;
        // new nodes: odd multiples of h between the coarse limits
        let j_lo = k_lo * sub;
        let j_hi = k_hi * sub;
        let mut j = j_lo + 1;
        while j < j_hi {
            let v = at(y0 + j as f64 * h)?;
            sum += v;
            l1 += v.norm();
            nodes += 1;
            j += 2;
        }
        let est = sum * (h / (2.0 * PI));
        let delta = (est - prev).norm();
        let floor = ROUNDOFF * l1 * h / (2.0 * PI);
        if level >= 2 && delta <= tol.max(floor) {
            return Ok(QuadratureResult { value: est, abs_err: delta.max(floor), nodes });
        }
        last_delta = delta;
        prev = est;
    }
    Err(Error::Convergence {
        msg: format!("vertical-line trapezoid on Re u = {re_u}"),
        best: prev,
        err: last_delta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special_fn::gamma;

    fn ok(x: C64) -> Result<C64> {
        Ok(x)
    }

    #[test]
    fn exponential_half_line() {
        let r = integrate_half_line(|t| ok(C64::new((-t).exp(), 0.0)), 1e-14).unwrap();
        assert!((r.value.re - 1.0).abs() < 1e-13);
        assert!(r.nodes > 0);
    }

    #[test]
    fn log_endpoint_singularity() {
        // ∫ ln t e^{−t} dt = −γ
        let r = integrate_half_line(|t| ok(C64::new(t.ln() * (-t).exp(), 0.0)), 1e-13).unwrap();
        assert!((r.value.re + 0.577_215_664_901_532_9).abs() < 1e-12);
    }

    #[test]
    fn interval_rule() {
        let r = integrate_interval(|x| ok(C64::new(1.0 / x.sqrt(), 0.0)), 0.0, 1.0, 1e-13).unwrap();
        assert!((r.value.re - 2.0).abs() < 1e-12);
        let r = integrate_interval(|x| ok(C64::new(x.sin(), 0.0)), 0.0, PI, 1e-14).unwrap();
        assert!((r.value.re - 2.0).abs() < 1e-13);
    }

    #[test]
    fn cahen_mellin() {
        let r = integrate_vertical_line(|u| gamma(u), 0.5, 1e-13).unwrap();
        assert!((r.value - C64::new((-1.0f64).exp(), 0.0)).norm() < 1e-11);
        let x: f64 = 2.5;
        let r = integrate_vertical_line(|u| Ok(gamma(u)? * (-u * x.ln()).exp()), 0.7, 1e-13).unwrap();
        assert!((r.value.re - (-x).exp()).abs() < 1e-11);
    }

    #[test]
    fn slow_decay_is_reported() {
        let cfg = QuadConfig { line_y_max: 200.0, ..QuadConfig::default() };
        let r = integrate_vertical_line_with(|u| Ok(C64::new(1.0 / (1.0 + u.im.abs()), 0.0)), 0.0, 1e-12, &cfg);
        assert!(matches!(r, Err(Error::DecayStall(_))));
    }
}
