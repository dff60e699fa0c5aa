//! Leg functions p(𝒵, 𝔮) at 𝔮 = e^{iπ/N}, the function Γ̂_N, the finite
//! product P(𝔮), the U(N) Chern–Simons partition function on S³, and the two
//! expressions for the one-point function.
//!
//! Exponents of 𝔮 are carried in half units (h ↦ 𝔮^{h/2}) so every phase is
//! reduced exactly.

use crate::cmath::{cos_pi_rational, exp_i_pi_rational, sin_pi_rational};
use crate::error::{finite, Error, Result};
use crate::quadrature::{integrate_half_line, integrate_interval};
use crate::special_fn::{barnes_constants, bernoulli_number, bernoulli_poly_exact, log_gamma};
use crate::v_function::v_eval;
use crate::{c64, C64};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LegRoute {
    SqrtProduct,
    FiniteProduct,
    IntegralRep,
    Asymptotic,
}

/// One evaluation of p(𝒵, 𝔮). `k` is the exponent j of 𝒵 = 𝔮^j when 𝒵 is a
/// 2N-th root of unity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LegEvaluation {
    pub n: u32,
    pub k: Option<i64>,
    pub z: C64,
    pub value: C64,
    pub route: LegRoute,
}

fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::Domain("N must be a positive integer".into()))
    } else {
        Ok(())
    }
}

/// √𝒵 with Arg 𝒵 taken in (0, 2π).
pub fn sqrt_branch(z: C64) -> Result<C64> {
    if z.im == 0.0 && z.re >= 0.0 {
        return Err(Error::BranchAmbiguity(format!("√𝒵 is ambiguous on the positive real axis (𝒵 = {z})")));
    }
    let arg = z.arg().rem_euclid(2.0 * PI);
    Ok(C64::from_polar(z.norm().sqrt(), 0.5 * arg))
}

/// 𝔮^{h₁/2} + 𝔮^{h₂/2} with 𝔮 = e^{iπ/N}.
fn root_sum(h1: i64, h2: i64, n: i64) -> C64 {
    exp_i_pi_rational(h1 + h2, 4 * n) * (2.0 * cos_pi_rational(h1 - h2, 4 * n))
}

/// 𝔮^{h₁/2} − 𝔮^{h₂/2}.
fn root_diff(h1: i64, h2: i64, n: i64) -> C64 {
    exp_i_pi_rational(h1 + h2, 4 * n) * c64(0.0, 2.0 * sin_pi_rational(h1 - h2, 4 * n))
}

/// p(𝒵, 𝔮) = ∏(√𝒵 + 𝔮ᵏ)/∏(√𝒵 + 𝔮^{k+½}) for 𝒵 off the positive real axis.
pub fn leg_p(z: C64, n: u32) -> Result<LegEvaluation> {
    check_n(n)?;
    if z.im == 0.0 && z.re > 0.0 {
        if z.re == 1.0 {
            return leg_p_root(n, 0, LegRoute::FiniteProduct);
        }
        return Err(Error::BranchAmbiguity(format!("𝒵 = {z} lies on the positive real axis")));
    }
    let s = sqrt_branch(z)?;
    let ni = n as i64;
    let mut acc = c64(0.0, 0.0);
    for k in 0..ni {
        acc += (s + exp_i_pi_rational(2 * k, 2 * ni)).ln() - (s + exp_i_pi_rational(2 * k + 1, 2 * ni)).ln();
    }
    Ok(LegEvaluation { n, k: None, z, value: finite(acc.exp(), "leg function")?, route: LegRoute::SqrtProduct })
}

/// p(𝔮^j, 𝔮) for 0 ≤ j < 2N, where √𝒵 = 𝔮^{j/2}.
pub fn leg_p_root(n: u32, j: i64, route: LegRoute) -> Result<LegEvaluation> {
    check_n(n)?;
    let ni = n as i64;
    if !(0..2 * ni).contains(&j) {
        return Err(Error::Domain(format!("root exponent j = {j} outside [0, {})", 2 * ni)));
    }
    let z = exp_i_pi_rational(j, ni);
    let value = match route {
        LegRoute::SqrtProduct => {
            let mut acc = c64(0.0, 0.0);
            for k in 0..ni {
                acc += root_sum(j, 2 * k, ni).ln() - root_sum(j, 2 * k + 1, ni).ln();
            }
            acc.exp()
        }
        LegRoute::FiniteProduct => {
            let mut acc = c64(0.0, 0.0);
            if j % 2 == 0 {
                // (N/𝔮ᵏ) ∏_l(𝔮ᵏ − 𝔮^{l+½}) / ∏_{l≠k}(𝔮ᵏ − 𝔮ˡ)
                let k = j / 2;
                acc += c64((ni as f64).ln(), -PI * k as f64 / ni as f64);
                for l in 0..ni {
                    acc += root_diff(j, 2 * l + 1, ni).ln();
                    if l != k {
                        acc -= root_diff(j, 2 * l, ni).ln();
                    }
                }
            } else {
                // (𝔮^{k+½}/N) ∏_{l≠k}(𝔮^{k+½} − 𝔮^{l+½}) / ∏_l(𝔮^{k+½} − 𝔮ˡ)
                let k = (j - 1) / 2;
                acc += c64(-(ni as f64).ln(), PI * j as f64 / (2 * ni) as f64);
                for l in 0..ni {
                    if l != k {
                        acc += root_diff(j, 2 * l + 1, ni).ln();
                    }
                    acc -= root_diff(j, 2 * l, ni).ln();
                }
            }
            acc.exp()
        }
        LegRoute::IntegralRep => {
            if j == 0 {
                return Err(Error::Domain("the Γ̂ representation needs 𝒵 ∉ ℝ₊ (k ≠ 0)".into()));
            }
            let s = exp_i_pi_rational(j, 2 * ni);
            let g = if j % 2 == 0 { gamma_hat(n, j / 2, 1e-14)? } else { gamma_hat_defining(z, n, 1e-14)? };
            (g + half_log_corrections(s)).exp()
        }
        LegRoute::Asymptotic => {
            if j % 2 != 0 || j == 0 {
                return Err(Error::Domain("the asymptotic route covers 𝒵 = 𝔮^{2k}, 0 < k < N".into()));
            }
            let s = exp_i_pi_rational(j, 2 * ni);
            (leg_asymptotic(n, j / 2, 6)? + half_log_corrections(s)).exp()
        }
    };
    Ok(LegEvaluation { n, k: Some(j), z, value: finite(value, "leg function")?, route })
}

/// −½ln(1 − 1/√𝒵) + ½ln(1 + 1/√𝒵).
fn half_log_corrections(s: C64) -> C64 {
    let r = s.inv();
    0.5 * ((1.0 + r).ln() - (1.0 - r).ln())
}

/// Γ̂_N(𝒵) from its defining integral over t ∈ (0, 1).
pub fn gamma_hat_defining(z: C64, n: u32, tol: f64) -> Result<C64> {
    check_n(n)?;
    let s = sqrt_branch(z)?;
    let zi = z.inv();
    let nf = n as f64;
    let r = integrate_interval(
        |t| {
            // ln((1 − tᴺ)/(1 + tᴺ)) = −2 atanh(tᴺ)
            let tn = (nf * t.ln()).exp();
            let l = -2.0 * tn.atanh();
            let den = (1.0 - z * t) * (1.0 - zi * t);
            Ok((1.0 + t) / (2.0 * PI * t.sqrt()) * l / den)
        },
        0.0,
        1.0,
        tol,
    )?;
    finite(c64(0.0, -1.0) * (s - s.inv()) * r.value, "Γ̂ (defining integral)")
}

/// ln(√|k| Γ(|k|+½)/Γ(|k|+1)).
fn leg_log_prefix(k: i64) -> Result<f64> {
    let a = k.unsigned_abs() as f64;
    Ok(0.5 * a.ln() + log_gamma(c64(a + 0.5, 0.0))?.re - log_gamma(c64(a + 1.0, 0.0))?.re)
}

/// Γ̂_N(e^{2πik/N}) = ln(√|k|Γ(|k|+½)/Γ(|k|+1)) − ∫₀^∞ tanh(t/4N) sinh(|k|t/N)/(t(1+eᵗ)) dt.
pub fn gamma_hat(n: u32, k: i64, tol: f64) -> Result<C64> {
    check_n(n)?;
    let ni = n as i64;
    if !(k != 0 && k.abs() < ni) {
        return Err(Error::Domain(format!("Γ̂ integral representation needs 0 < |k| < N, got k = {k}, N = {n}")));
    }
    let nf = n as f64;
    let a = k.abs() as f64 / nf;
    let r = integrate_half_line(
        |t| {
            // sinh(at)/(1+eᵗ) = (e^{(a−1)t} − e^{−(a+1)t})/(2(1+e^{−t}))
            let num = ((a - 1.0) * t).exp() - (-(a + 1.0) * t).exp();
            let v = (t / (4.0 * nf)).tanh() * num / (2.0 * t * (1.0 + (-t).exp()));
            Ok(c64(v, 0.0))
        },
        tol,
    )?;
    Ok(c64(leg_log_prefix(k)? - r.value.re, 0.0))
}

/// n-th term (4ⁿ−2)B₂ₙ[B₂ₙ₊₁(|k|) + B₂ₙ₊₁(|k|+1) − 2B₂ₙ₊₁(|k|+½)]/(4n(2n+1)!)·(iπ/N)^{2n},
/// with the Bernoulli-polynomial bracket formed exactly.
pub fn leg_asymptotic_term(n_big: u32, k: i64, n: usize) -> f64 {
    let a = BigRational::from_integer(BigInt::from(k.abs()));
    let one = BigRational::from_integer(BigInt::from(1));
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let m = 2 * n + 1;
    let bracket = bernoulli_poly_exact(m, &a) + bernoulli_poly_exact(m, &(&a + &one))
        - bernoulli_poly_exact(m, &(&a + &half)) * BigRational::from_integer(BigInt::from(2));
    let bracket = bracket.to_f64().unwrap_or(f64::NAN);
    let nf = n as f64;
    let fact: f64 = (1..=m).map(|i| i as f64).product();
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 }; // i^{2n}
    let pn = (PI / n_big as f64).powi(2 * n as i32);
    (4f64.powi(n as i32) - 2.0) * bernoulli_number(2 * n) * bracket / (4.0 * nf * fact) * sign * pn
}

/// Σ_{n=1}^{n_max} of [`leg_asymptotic_term`].
pub fn leg_asymptotic_correction(n_big: u32, k: i64, n_max: usize) -> Result<f64> {
    check_n(n_big)?;
    if !(1..=20).contains(&n_max) {
        return Err(Error::Domain(format!("n_max must lie in 1..=20, got {n_max}")));
    }
    Ok((1..=n_max).map(|n| leg_asymptotic_term(n_big, k, n)).sum())
}

/// Large-N approximation of Γ̂_N(e^{2πik/N}): the log prefix plus the first
/// n_max correction terms.
pub fn leg_asymptotic(n_big: u32, k: i64, n_max: usize) -> Result<C64> {
    if k == 0 {
        return Err(Error::Domain("the log prefix diverges at k = 0".into()));
    }
    Ok(c64(leg_log_prefix(k)? + leg_asymptotic_correction(n_big, k, n_max)?, 0.0))
}

/// ln P(𝔮) from the closed sine form
/// (4N²)ᴺ[∏_{l=1}^{2N−1} sin^{2N−l}(πl/4N) / ∏_{l=1}^{N−1} sin^{4N−4l}(πl/2N)]².
pub fn product_p_log_sine(n: u32) -> Result<f64> {
    check_n(n)?;
    let ni = n as i64;
    let mut acc = 0.0;
    for l in 1..2 * ni {
        acc += (2 * ni - l) as f64 * sin_pi_rational(l, 4 * ni).ln();
    }
    for l in 1..ni {
        acc -= (4 * ni - 4 * l) as f64 * sin_pi_rational(l, 2 * ni).ln();
    }
    Ok(ni as f64 * (4.0 * (ni * ni) as f64).ln() + 2.0 * acc)
}

/// ln ∏ₖ p(𝔮^{2k})/p(𝔮^{2k+1}) from the square-root products; complex, equal
/// to ln P modulo 2πi.
pub fn product_p_log_ratio(n: u32) -> Result<C64> {
    check_n(n)?;
    let ni = n as i64;
    let mut acc = c64(0.0, 0.0);
    for k in 0..ni {
        for l in 0..ni {
            acc += root_sum(2 * k, 2 * l, ni).ln() - root_sum(2 * k, 2 * l + 1, ni).ln();
            acc -= root_sum(2 * k + 1, 2 * l, ni).ln() - root_sum(2 * k + 1, 2 * l + 1, ni).ln();
        }
    }
    finite(acc, "ln P (ratio form)")
}

/// Distance between two complex logarithms with the imaginary parts compared
/// modulo 2π.
pub fn log_distance_mod_2pi(a: C64, b: C64) -> f64 {
    let d = a - b;
    let im = d.im - 2.0 * PI * (d.im / (2.0 * PI)).round();
    c64(d.re, im).norm()
}

/// P(𝔮) via the sine form, after checking it against the p-ratio product.
pub fn product_p(n: u32) -> Result<f64> {
    let sine = product_p_log_sine(n)?;
    let ratio = product_p_log_ratio(n)?;
    let diff = log_distance_mod_2pi(ratio, c64(sine, 0.0));
    if diff > 1e-9 {
        return Err(Error::RouteDisagreement(format!("ln P at N = {n}: sine form {sine}, ratio form {ratio}")));
    }
    Ok(sine.exp())
}

/// ln Z(N,k) = iπN²/4 − (N/2)ln(k+N) + ((N²−N)/2)ln 2 + Σ_{l=1}^{N−1}(N−l) ln sin(πl/(k+N)).
pub fn cs_partition_log(n: u32, k: u32) -> Result<C64> {
    check_n(n)?;
    if k == 0 {
        return Err(Error::Domain("level k must be ≥ 1".into()));
    }
    let nf = n as f64;
    let kn = (k + n) as i64;
    let mut acc = -0.5 * nf * (kn as f64).ln() + 0.5 * (nf * nf - nf) * 2f64.ln();
    for l in 1..n as i64 {
        acc += (n as i64 - l) as f64 * sin_pi_rational(l, kn).ln();
    }
    // the phase is reduced modulo 2π; callers compare logs modulo 2πi
    let phase = (0.25 * PI * nf * nf).rem_euclid(2.0 * PI);
    Ok(c64(acc, phase))
}

/// |ln P − (2 ln Z(2N,2N) − 8 ln Z(N,N))| modulo 2πi.
pub fn cs_identity_residual(n: u32) -> Result<f64> {
    let lp = product_p_log_sine(n)?;
    let rhs = 2.0 * cs_partition_log(2 * n, 2 * n)? - 8.0 * cs_partition_log(n, n)?;
    Ok(log_distance_mod_2pi(c64(lp, 0.0), rhs))
}

/// The one-point function computed from v and from P(𝔮).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OnePoint {
    pub n: u32,
    pub via_v: f64,
    pub via_p: f64,
}

/// G(½)G(3/2)(2π/N)^{1/4}e^{v(1/N)} and √2/√P(𝔮).
pub fn one_point(n: u32, tol: f64) -> Result<OnePoint> {
    check_n(n)?;
    let nf = n as f64;
    let v = v_eval(c64(nf, 0.0), tol)?.value.re;
    let via_v = barnes_constants().g_product * (2.0 * PI / nf).powf(0.25) * v.exp();
    let via_p = (2.0 / product_p(n)?).sqrt();
    Ok(OnePoint { n, via_v, via_p })
}
