//! Borel plane of the large-N series: the transform B[v](t), its double and
//! single poles at t = 2πil, and the discontinuity across Arg t = π/2.

use crate::cmath;
use crate::divisor::sigma_o_minus2;
use crate::error::{finite, Error, Result};
use crate::special_fn::{bernoulli_number, hurwitz_em};
use crate::v_function::v_borel_laplace;
use crate::{c64, C64};
use num_traits::ToPrimitive;
use std::f64::consts::PI;

/// Distance below which B[v] refuses to evaluate next to a pole.
pub const POLE_GUARD: f64 = 1e-6;

/// Laurent data of B[v] at t = 2πil.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BorelPoleData {
    pub l: i64,
    pub double_pole_coeff: C64,
    pub single_pole_coeff: C64,
}

fn sigma_f64(l: u64) -> f64 {
    sigma_o_minus2(l).to_f64().unwrap_or(f64::NAN)
}

/// Coefficients −4i(−1)^l l σ₋₂ᵒ(|l|)/π and 2(−1)^l σ₋₂ᵒ(|l|)/π².
pub fn borel_pole_coeffs(l: i64) -> BorelPoleData {
    assert!(l != 0, "Borel poles sit at nonzero multiples of 2πi");
    let sig = sigma_f64(l.unsigned_abs());
    let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
    BorelPoleData {
        l,
        double_pole_coeff: c64(0.0, -4.0 * sign * l as f64 * sig / PI),
        single_pole_coeff: c64(2.0 * sign * sig / (PI * PI), 0.0),
    }
}

/// Nearest pole 2πil (l ≠ 0) to t.
pub fn nearest_pole(t: C64) -> C64 {
    let l = (t.im / (2.0 * PI)).round();
    let l = if l == 0.0 { if t.im >= 0.0 { 1.0 } else { -1.0 } } else { l };
    c64(0.0, 2.0 * PI * l)
}

/// Taylor coefficients of tanh² x = Σ_{k≥2} a_k x^{2k−2}.
fn tanh_sq_coeffs() -> &'static [f64] {
    use std::sync::OnceLock;
    static COEF: OnceLock<Vec<f64>> = OnceLock::new();
    COEF.get_or_init(|| {
        (2..=20usize)
            .map(|k| {
                let four_k = 4f64.powi(k as i32);
                let fact: f64 = (1..=2 * k).map(|j| j as f64).product();
                -four_k * (four_k - 1.0) * bernoulli_number(2 * k) * (2 * k - 1) as f64 / fact
            })
            .collect()
    })
}

/// B[v](t) = (1/2t) Σ_{n≥1} (−1)ⁿ tanh²(t/4n).
///
/// Terms with n ≤ M are summed directly; for n > M the Taylor series of tanh²
/// turns the tail into alternating Hurwitz-ζ tails, so `tol` only bounds the
/// Taylor truncation.
pub fn borel_transform(t: C64, tol: f64) -> Result<C64> {
    if t.norm() == 0.0 {
        return Ok(c64(0.0, 0.0));
    }
    let p = nearest_pole(t);
    if (t - p).norm() < POLE_GUARD {
        return Err(Error::NearPole { msg: format!("B[v] evaluated at t = {t}"), pole: p });
    }
    let tol = if tol > 0.0 { tol } else { 1e-17 };
    borel_sum(t, tol)
}

/// (t − 2πil)² B[v](t) at t = 2πil + ε e^{iφ}.
pub fn laurent_limit(l: i64, eps: f64, phi: f64) -> Result<C64> {
    let p = c64(0.0, 2.0 * PI * l as f64);
    let d = C64::from_polar(eps, phi);
    // the pole guard is for callers; the limit probes inside it deliberately
    let t = p + d;
    let b = borel_sum(t, 1e-17)?;
    Ok(d * d * b)
}

fn borel_sum(t: C64, tol: f64) -> Result<C64> {
    let m = (2.0 * t.norm()).ceil() as usize + 8;
    let mut direct = c64(0.0, 0.0);
    for n in (1..=m).rev() {
        let th = cmath::tanh(t / (4.0 * n as f64));
        let sq = th * th;
        if n % 2 == 0 {
            direct += sq;
        } else {
            direct -= sq;
        }
    }
    // tail Σ_{n>M} (−1)ⁿ n^{−2j} = (−1)^{M+1} 2^{−2j} [ζ(2j, (M+1)/2) − ζ(2j, (M+2)/2)]
    let a = m as f64 + 1.0;
    let sign = if (m + 1) % 2 == 0 { 1.0 } else { -1.0 };
    let x2 = (t / 4.0) * (t / 4.0);
    let mut tail = c64(0.0, 0.0);
    let mut xp = x2; // (t/4)^{2j}
    for (idx, ak) in tanh_sq_coeffs().iter().enumerate() {
        let j = idx + 1;
        let s = c64(2.0 * j as f64, 0.0);
        let alt = (hurwitz_em(s, 0.5 * a, 8, 12) - hurwitz_em(s, 0.5 * a + 0.5, 8, 12)) * (sign * 4f64.powi(-(j as i32)));
        let term = xp * alt * *ak;
        tail += term;
        if term.norm() < tol * (direct + tail).norm() {
            break;
        }
        xp *= x2;
    }
    finite((direct + tail) / (2.0 * t), "Borel transform")
}

/// Largest deviation of (t−2πil)²B[v](t) from the double-pole coefficient over
/// four approach directions.
pub fn laurent_limit_deviation(l: i64, eps: f64) -> Result<f64> {
    let want = borel_pole_coeffs(l).double_pole_coeff;
    let mut worst: f64 = 0.0;
    for k in 0..4 {
        let phi = 0.25 * PI + 0.5 * PI * k as f64;
        worst = worst.max((laurent_limit(l, eps, phi)? - want).norm());
    }
    Ok(worst)
}

/// −(4i/π) Σ_{l=1}^{l_max} (−1)^l σ₋₂ᵒ(l)(1 + 2πilN) e^{−2πilN}: the upper-minus-lower
/// lateral Laplace difference across Arg t = π/2.
pub fn stokes_discontinuity(n: C64, l_max: usize) -> Result<C64> {
    if n.im >= 0.0 {
        return Err(Error::Divergence(format!("Stokes series needs Im N < 0, got N = {n}")));
    }
    let mut acc = c64(0.0, 0.0);
    for l in 1..=l_max.max(1) {
        let lf = l as f64;
        let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
        let ph = c64(0.0, -2.0 * PI * lf) * n;
        let term = c64(0.0, -4.0 / PI) * (sign * sigma_f64(l as u64)) * (1.0 + c64(0.0, 2.0 * PI * lf) * n) * ph.exp();
        acc += term;
        if term.norm() < 1e-14 * acc.norm() {
            break;
        }
    }
    finite(acc, "Stokes discontinuity")
}

/// Default angular offset of the lateral rays from π/2.
pub const LATERAL_OFFSET: f64 = 0.15;

/// v_borel_laplace(π/2 + offset) − v_borel_laplace(π/2 − offset).
pub fn lateral_difference(n: C64, offset: f64, tol: f64) -> Result<C64> {
    let up = v_borel_laplace(n, 0.5 * PI + offset, tol)?;
    let down = v_borel_laplace(n, 0.5 * PI - offset, tol)?;
    Ok(up.value - down.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pole_coefficients() {
        let p = borel_pole_coeffs(1);
        assert!((p.double_pole_coeff - c64(0.0, 4.0 / PI)).norm() < 1e-15);
        let p2 = borel_pole_coeffs(2);
        assert!((p2.single_pole_coeff.re - 2.0 / (PI * PI)).abs() < 1e-15);
    }

    #[test]
    fn small_t_slope() {
        let t = c64(1e-3, 0.0);
        let b = borel_transform(t, 1e-15).unwrap();
        assert!(((b / t).re + PI * PI / 384.0).abs() < 1e-6 * PI * PI / 384.0);
    }

    #[test]
    fn odd_in_t() {
        for &t in &[c64(1.0, 0.3), c64(7.0, -2.0), c64(0.2, 5.0)] {
            let a = borel_transform(t, 1e-15).unwrap();
            let b = borel_transform(-t, 1e-15).unwrap();
            assert!((a + b).norm() < 1e-13 * a.norm().max(1e-3));
        }
    }

    #[test]
    fn direct_sum_oracle() {
        // brute-force partial sums with tail averaging
        let t = c64(3.0, 1.0);
        let mut s = c64(0.0, 0.0);
        let nmax = 2_000_000usize;
        let mut prev = s;
        for n in 1..=nmax {
            prev = s;
            let th = (t / (4.0 * n as f64)).tanh();
            if n % 2 == 0 {
                s += th * th;
            } else {
                s -= th * th;
            }
        }
        let brute = (s + prev) * 0.5 / (2.0 * t);
        let b = borel_transform(t, 1e-15).unwrap();
        assert!((b - brute).norm() < 1e-12);
    }

    #[test]
    fn near_pole_reported() {
        let r = borel_transform(c64(0.0, 2.0 * PI + 1e-8), 1e-12);
        assert!(matches!(r, Err(Error::NearPole { .. })));
    }

    #[test]
    fn laurent_limit_matches() {
        for l in 1..=3 {
            assert!(laurent_limit_deviation(l, 1e-7).unwrap() < 1e-6);
        }
    }

    #[test]
    fn discontinuity_domain() {
        assert!(matches!(stokes_discontinuity(c64(2.0, 1.0), 10), Err(Error::Divergence(_))));
        let a = stokes_discontinuity(c64(2.0, -4.0), 20).unwrap().norm();
        let b = stokes_discontinuity(c64(2.0, -2.0), 20).unwrap().norm();
        assert!(a < b);
    }
}
