//! The finite-volume function v(1/N) by independent routes: the single
//! integral, the Mellin–Barnes contour, the log-Γ sum, Borel–Laplace along a
//! ray, and the truncated large-N series.
//!
//! The lattice derivation of the integral representation covers even N only.
//! Every function here accepts any complex N in its domain and treats odd and
//! non-integer N the same way; nothing here checks agreement with an odd-size
//! lattice.

use crate::cmath;
use crate::error::{finite, Error, Result};
use crate::quadrature::{integrate_half_line, integrate_vertical_line};
use crate::resurgence::borel_transform;
use crate::series::{sum_alternating, AltSumConfig};
use crate::special_fn::{bernoulli_number, log_gamma, zeta};
use crate::{c64, C64};
use std::f64::consts::{FRAC_PI_2, PI};

/// Angular margin kept away from |Arg N| = π/2 by the integral route.
pub const INTEGRAL_MARGIN: f64 = 0.05;
/// Fraction δ of π kept away from |Arg N| = π by the contour route.
pub const MB_DELTA: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VRoute {
    Integral,
    MellinBarnes,
    LogGammaSum,
    BorelLaplace,
    Series,
}

impl VRoute {
    pub fn name(self) -> &'static str {
        match self {
            VRoute::Integral => "integral",
            VRoute::MellinBarnes => "mellin-barnes",
            VRoute::LogGammaSum => "loggamma-sum",
            VRoute::BorelLaplace => "borel-laplace",
            VRoute::Series => "series",
        }
    }
}

/// One evaluation of v(1/N).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VEvaluation {
    pub n_value: C64,
    pub value: C64,
    pub route: VRoute,
    pub abs_err: f64,
}

/// Coefficients c₁..c_{n_max} of v(1/N) ~ Σ cₙ N^{−2n}.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesCoefficients {
    pub coeffs: Vec<f64>,
    pub n_max: usize,
}

impl SeriesCoefficients {
    pub fn new(n_max: usize) -> Self {
        SeriesCoefficients { coeffs: (1..=n_max).map(v_series_coeff).collect(), n_max }
    }
}

fn nonzero(n: C64) -> Result<()> {
    if n.norm() == 0.0 || !n.norm().is_finite() {
        Err(Error::Domain(format!("N = {n} must be finite and nonzero")))
    } else {
        Ok(())
    }
}

/// −∫₀^∞ tanh²(t/4N) / (2t(eᵗ+1)) dt.
pub fn v_integral(n: C64, tol: f64) -> Result<VEvaluation> {
    nonzero(n)?;
    if n.arg().abs() >= FRAC_PI_2 - INTEGRAL_MARGIN {
        return Err(Error::Domain(format!(
            "integral route needs |Arg N| < π/2 − {INTEGRAL_MARGIN}, got Arg N = {:.4}",
            n.arg()
        )));
    }
    let kappa = (4.0 * n).inv();
    let r = integrate_half_line(|t| Ok(integral_integrand(kappa, t)), tol)?;
    Ok(VEvaluation { n_value: n, value: r.value, route: VRoute::Integral, abs_err: r.abs_err })
}

/// The integrand of [`v_integral`] written in terms of κ = 1/(4N).
pub fn integral_integrand(kappa: C64, t: f64) -> C64 {
    let th = cmath::tanh(kappa * t);
    let e = (-t).exp();
    -(th * th) * (e / (2.0 * t * (1.0 + e)))
}

/// ln(π/(u sin πu)) + u ln N, evaluated without overflow.
fn mb_kernel_log(u: C64, ln_n: C64) -> C64 {
    let w = u * PI;
    let ln_sin = if w.im >= 0.0 {
        let e = (c64(0.0, 2.0) * w).exp();
        c64(0.0, -1.0) * w + cmath::ln_1p(-e) + c64(-(2f64.ln()), FRAC_PI_2)
    } else {
        let wc = w.conj();
        let e = (c64(0.0, 2.0) * wc).exp();
        (c64(0.0, -1.0) * wc + cmath::ln_1p(-e) + c64(-(2f64.ln()), FRAC_PI_2)).conj()
    };
    PI.ln() - u.ln() - ln_sin + u * ln_n
}

/// The Mellin–Barnes integrand 2(2ᵘ−4)(2^{u+1}−1)ζ(u−1)ζ(−u)π/(u sin πu) Nᵘ.
pub fn mb_integrand(u: C64, ln_n: C64) -> Result<C64> {
    let ln2 = 2f64.ln();
    let a = (u * ln2).exp() - 4.0;
    let b = cmath::expm1((u + 1.0) * ln2);
    let z = zeta(u - 1.0)? * zeta(-u)?;
    finite(2.0 * a * b * z * mb_kernel_log(u, ln_n).exp(), "Mellin-Barnes integrand")
}

/// Contour form of v(1/N) on Re u = re_u ∈ (−2, 0).
pub fn v_mellin_barnes(n: C64, tol: f64, re_u: f64) -> Result<VEvaluation> {
    nonzero(n)?;
    if !(re_u > -2.0 && re_u < 0.0) {
        return Err(Error::Domain(format!("contour abscissa {re_u} outside (−2, 0)")));
    }
    if n.arg().abs() > PI * (1.0 - MB_DELTA) {
        return Err(Error::Domain(format!(
            "contour route needs |Arg N| ≤ π(1 − {MB_DELTA}), got Arg N = {:.4}",
            n.arg()
        )));
    }
    let ln_n = n.ln();
    let r = integrate_vertical_line(|u| mb_integrand(u, ln_n), re_u, tol)?;
    Ok(VEvaluation { n_value: n, value: r.value, route: VRoute::MellinBarnes, abs_err: r.abs_err })
}

/// L(z) = ln Γ(1+z).
fn lg1(z: C64) -> Result<C64> {
    log_gamma(z + 1.0)
}

/// Stirling coefficients B₂ₖ/(2k(2k−1)).
fn stirling_beta(k: usize) -> f64 {
    bernoulli_number(2 * k) / ((2 * k) as f64 * (2 * k - 1) as f64)
}

/// n^{−p} + (n+2)^{−p} − 2(n+1)^{−p} without the leading cancellation.
fn second_difference_pow(n: f64, p: i32) -> f64 {
    let pf = p as f64;
    let d0 = (n + 1.0).powi(-p) * (pf * (1.0 / n).ln_1p()).exp_m1(); // n^{−p} − (n+1)^{−p}
    let d1 = (n + 2.0).powi(-p) * (pf * (1.0 / (n + 1.0)).ln_1p()).exp_m1(); // (n+1)^{−p} − (n+2)^{−p}
    d0 - d1
}

/// Radius beyond which the shifted second difference switches to Stirling.
const SHIFT_RADIUS: f64 = 10.0;

/// L(x+h) + L(x−h) − 2L(x) for L(z) = ln Γ(1+z), by upward recurrence to
/// Re ≥ SHIFT_RADIUS and a Stirling expansion in which every difference is
/// formed analytically.
fn second_difference_lg1(x: C64, h: C64) -> C64 {
    let m = (SHIFT_RADIUS - x.re).ceil().max(0.0) as usize;
    let mut acc = c64(0.0, 0.0);
    for j in 1..=m {
        let a = x + j as f64;
        acc -= cmath::ln_1p(-(h * h) / (a * a));
    }
    // ln Γ(w) at w = x + m + 1
    let w = x + (m as f64 + 1.0);
    let r = h / w;
    let lp = cmath::ln_1p(r);
    let lm = cmath::ln_1p(-r);
    acc += (w - 0.5) * cmath::ln_1p(-r * r) + h * (lp - lm);
    let lw = w.ln();
    for k in 1..=12usize {
        let p = (2 * k - 1) as f64;
        let diff = cmath::expm1(-p * lp) + cmath::expm1(-p * lm);
        let term = (-p * lw).exp() * diff * stirling_beta(k);
        acc += term;
        if term.norm() < 1e-19 * acc.norm() {
            break;
        }
    }
    acc
}

/// Bracket of the n-th log-Γ term:
/// 2L(2κ(n+1)) + 2L(κn) + 2L(κ(n+2)) − L(2κn) − L(2κ(n+2)) − 4L(κ(n+1)).
pub struct LogGammaTerms {
    kappa: C64,
    ln_kappa: C64,
    threshold: f64,
    single: Vec<C64>,
    double: Vec<C64>,
    /// Terms at −κ (or −κ̄) used through the reflection formula when Re κ < 0.
    mirror: Option<Box<LogGammaTerms>>,
}

impl LogGammaTerms {
    pub fn new(kappa: C64) -> Self {
        // the Stirling form is used once every argument is large enough; the
        // margin grows when the arguments swing towards the negative axis
        let threshold = if kappa.re >= 0.0 { 10.0 } else { 20.0 };
        let mirror = if kappa.re < 0.0 && kappa.im != 0.0 {
            let upper = if kappa.im > 0.0 { kappa } else { kappa.conj() };
            Some(Box::new(LogGammaTerms::new(-upper)))
        } else {
            None
        };
        LogGammaTerms { kappa, ln_kappa: kappa.ln(), threshold, single: Vec::new(), double: Vec::new(), mirror }
    }

    fn single(&mut self, j: usize) -> Result<C64> {
        while self.single.len() <= j {
            let k = self.single.len() as f64;
            self.single.push(lg1(self.kappa * k)?);
        }
        Ok(self.single[j])
    }

    fn double(&mut self, j: usize) -> Result<C64> {
        while self.double.len() <= j {
            let k = self.double.len() as f64;
            self.double.push(lg1(self.kappa * (2.0 * k))?);
        }
        Ok(self.double[j])
    }

    /// The bracket computed from individual ln Γ values.
    pub fn bracket_direct(&mut self, n: usize) -> Result<C64> {
        Ok(2.0 * self.double(n + 1)? + 2.0 * self.single(n)? + 2.0 * self.single(n + 2)?
            - self.double(n)?
            - self.double(n + 2)?
            - 4.0 * self.single(n + 1)?)
    }

    /// The bracket from the Stirling expansion, where the large pieces cancel
    /// in closed form.
    pub fn bracket_stirling(&self, n: usize) -> C64 {
        let nf = n as f64;
        let lead = 0.5 * (-1.0 / ((nf + 1.0) * (nf + 1.0))).ln_1p();
        let mut acc = c64(lead, 0.0);
        for k in 1..=12usize {
            let p = (2 * k - 1) as i32;
            let weight = if k == 1 {
                2.0 / (nf * (nf + 1.0) * (nf + 2.0))
            } else {
                second_difference_pow(nf, p)
            };
            let bracket = (2.0 - 2f64.powi(-p)) * weight;
            let term = (-(p as f64) * self.ln_kappa).exp() * (stirling_beta(k) * bracket);
            acc += term;
            if term.norm() < 1e-20 * acc.norm() {
                break;
            }
        }
        acc
    }

    /// The bracket as −δ²L(2κ(n+1); 2κ) + 2δ²L(κ(n+1); κ), free of the large
    /// cancelling pieces of the direct form.
    pub fn bracket_shifted(&self, n: usize) -> C64 {
        let k = self.kappa;
        let a = k * (n as f64 + 1.0);
        -second_difference_lg1(2.0 * a, 2.0 * k) + 2.0 * second_difference_lg1(a, k)
    }

    /// The bracket for Re κ < 0 from Γ(1+z)Γ(1−z) = πz/sin πz:
    /// D_κ(n) = ln(1 − 1/(n+1)²) − D_{−κ}(n) − [second differences of ln sin πz],
    /// taken in the upper half-plane and conjugated back when Im κ < 0.
    pub fn bracket_reflected(&mut self, n: usize) -> Result<C64> {
        let mirror = self.mirror.as_mut().ok_or_else(|| Error::Domain("reflection needs Re κ < 0, Im κ ≠ 0".into()))?;
        let inner = mirror.bracket(n)?;
        let k = -mirror.kappa; // Im k > 0
        let a = k * (n as f64 + 1.0);
        // ln sin πz = −iπz + ln(1 − e^{2πiz}) + const; only the last part survives δ²
        let e = |z: C64| cmath::ln_1p(-(c64(0.0, 2.0 * PI) * z).exp());
        let d2 = |x: C64, h: C64| e(x + h) + e(x - h) - 2.0 * e(x);
        let sines = -d2(2.0 * a, 2.0 * k) + 2.0 * d2(a, k);
        let nf = n as f64 + 1.0;
        let d = c64((-1.0 / (nf * nf)).ln_1p(), 0.0) - inner - sines;
        finite(if self.kappa.im < 0.0 { d.conj() } else { d }, "log-Γ bracket")
    }

    pub fn bracket(&mut self, n: usize) -> Result<C64> {
        if self.mirror.is_some() && n > 0 {
            return self.bracket_reflected(n);
        }
        if n >= 1 && self.mirror.is_none() && self.kappa.norm() * n as f64 >= self.threshold {
            Ok(self.bracket_stirling(n))
        } else {
            finite(self.bracket_shifted(n), "log-Γ bracket")
        }
    }

    /// Index from which the Stirling form is in use.
    pub fn asymptotic_start(&self) -> usize {
        match &self.mirror {
            // the sine corrections decay like e^{−2π|Im κ| n}
            Some(m) => m.asymptotic_start().max((6.0 / self.kappa.im.abs()).ceil() as usize),
            None => (self.threshold / self.kappa.norm()).ceil() as usize,
        }
    }
}

/// ½ Σ (−1)ⁿ (n+1) [log-Γ bracket] with paired, accelerated summation.
pub fn v_loggamma_sum(n: C64, tol: f64) -> Result<VEvaluation> {
    nonzero(n)?;
    if n.im == 0.0 && n.re < 0.0 {
        return Err(Error::Domain("log-Γ sum needs N off the negative real axis".into()));
    }
    let kappa = (4.0 * n).inv();
    let mut terms = LogGammaTerms::new(kappa);
    let start = terms.asymptotic_start();
    let base = AltSumConfig::default();
    let cfg = AltSumConfig { min_terms: (2 * start).max(24), max_terms: base.max_terms.max(4 * start), ..base };
    let r = sum_alternating(
        |k| {
            let b = terms.bracket(k)?;
            let sign = if k % 2 == 0 { 0.5 } else { -0.5 };
            Ok(b * (sign * (k as f64 + 1.0)))
        },
        tol,
        &cfg,
    )?;
    Ok(VEvaluation { n_value: n, value: r.value, route: VRoute::LogGammaSum, abs_err: r.abs_err })
}

/// ln|cₙ| and the sign (−1)ⁿ.
fn coeff_log(n: usize) -> (f64, f64) {
    let nf = n as f64;
    let q = 4f64.powi(-(n as i32));
    let z1 = zeta(c64(2.0 * nf, 0.0)).map(|z| z.re).unwrap_or(1.0);
    let z2 = zeta(c64(2.0 * nf + 2.0, 0.0)).map(|z| z.re).unwrap_or(1.0);
    let lg = log_gamma(c64(2.0 * nf + 2.0, 0.0)).map(|z| z.re).unwrap_or(f64::INFINITY);
    let ln_abs = 2f64.ln() + (-2.0 * q).ln_1p() + (4.0 - q).ln() + lg + z1.ln() + z2.ln()
        - nf.ln()
        - (2.0 * nf + 2.0) * (2.0 * PI).ln();
    (ln_abs, if n % 2 == 0 { 1.0 } else { -1.0 })
}

/// cₙ = (−1)ⁿ 2(1−2·4⁻ⁿ)(4−4⁻ⁿ) Γ(2n+2) ζ(2n) ζ(2n+2) / (n (2π)^{2n+2}).
/// Overflows to ±∞ beyond n ≈ 140.
pub fn v_series_coeff(n: usize) -> f64 {
    assert!(n >= 1, "series coefficients start at n = 1");
    let (l, s) = coeff_log(n);
    s * l.exp()
}

/// The same coefficient from Bernoulli numbers:
/// 4(1−2^{1−2n})(1−2^{−2n−2})(2π)^{2n}(−1)^{n+1} B₂ₙ₊₂B₂ₙ / ((2n+2)(2n)(2n)!).
pub fn v_series_coeff_bernoulli(n: usize) -> f64 {
    assert!(n >= 1);
    let nf = n as f64;
    let ln_fact = log_gamma(c64(2.0 * nf + 1.0, 0.0)).map(|z| z.re).unwrap_or(f64::INFINITY);
    let b_hi = bernoulli_number(2 * n + 2);
    let b_lo = bernoulli_number(2 * n);
    let pref = 4.0 * (1.0 - 2f64.powi(1 - 2 * n as i32)) * (1.0 - 2f64.powi(-2 * n as i32 - 2));
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    let mag = (2.0 * nf * (2.0 * PI).ln() - ln_fact).exp();
    sign * pref * mag * b_hi * b_lo / ((2.0 * nf + 2.0) * (2.0 * nf))
}

/// Σ_{l≤l_max} (−1)^{l−1} σ₋₂ᵒ(l) / l^{2n}.
pub fn dirichlet_sigma_sum(n: usize, l_max: usize) -> f64 {
    let sig = crate::divisor::sigma_o_minus2_table_f64(l_max);
    let p = 2 * n as i32;
    let mut acc = 0.0;
    // smallest terms first
    for l in (1..=l_max).rev() {
        let t = sig[l] * (l as f64).powi(-p);
        if l % 2 == 1 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    acc
}

/// Tail Σ_{l>l_max} (−1)^{l−1} σ₋₂ᵒ(l)/l^{2n}, obtained by regrouping l = d·m
/// over odd d: Σ_d d^{−2−2n} Σ_{m>l_max/d} (−1)^{m−1} m^{−2n}.
pub fn dirichlet_sigma_tail(n: usize, l_max: usize) -> f64 {
    let p = 2 * n as i32;
    // prefix sums of the alternating m-series
    let mut prefix = vec![0.0; l_max + 1];
    for m in 1..=l_max {
        let t = (m as f64).powi(-p);
        prefix[m] = prefix[m - 1] + if m % 2 == 1 { t } else { -t };
    }
    let s = c64(p as f64, 0.0);
    let eta = ((1.0 - 2f64.powi(1 - p)) * zeta(s).map(|z| z.re).unwrap_or(f64::NAN)).max(0.0);
    let lambda = (1.0 - 2f64.powi(-p - 2)) * zeta(c64((p + 2) as f64, 0.0)).map(|z| z.re).unwrap_or(f64::NAN);
    let mut acc = 0.0;
    let mut odd_power_sum = 0.0;
    let mut d = 1usize;
    while d <= l_max {
        let w = (d as f64).powi(-p - 2);
        odd_power_sum += w;
        let m0 = l_max / d;
        acc += w * (eta - prefix[m0]);
        d += 2;
    }
    acc + eta * (lambda - odd_power_sum)
}

/// Dirichlet form (−1)ⁿ 8Γ(2n+2)/(n(2π)^{2n+2}) Σ_l (−1)^{l−1}σ₋₂ᵒ(l)/l^{2n}.
/// With `tail_corrected` the l-sum beyond `l_max` is added by regrouping.
pub fn v_series_coeff_dirichlet(n: usize, l_max: usize, tail_corrected: bool) -> f64 {
    assert!(n >= 1);
    let nf = n as f64;
    let lg = log_gamma(c64(2.0 * nf + 2.0, 0.0)).map(|z| z.re).unwrap_or(f64::INFINITY);
    let mag = (8f64.ln() + lg - nf.ln() - (2.0 * nf + 2.0) * (2.0 * PI).ln()).exp();
    let mut s = dirichlet_sigma_sum(n, l_max);
    if tail_corrected {
        s += dirichlet_sigma_tail(n, l_max);
    }
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    sign * mag * s
}

/// Truncation order of the large-N series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOrder {
    Fixed(usize),
    Optimal,
}

/// cₙ N^{−2n} evaluated in log space.
fn series_term(n: usize, ln_n: C64) -> C64 {
    let (l, s) = coeff_log(n);
    (c64(l, 0.0) - 2.0 * n as f64 * ln_n).exp() * s
}

/// Partial sum of the large-N series. `abs_err` is the magnitude of the first
/// omitted term.
pub fn v_series_truncated(n: C64, order: SeriesOrder) -> Result<VEvaluation> {
    if !(n.norm() >= 1.0) {
        return Err(Error::Domain(format!("series route needs |N| ≥ 1, got |N| = {}", n.norm())));
    }
    let ln_n = n.ln();
    let last = match order {
        SeriesOrder::Fixed(k) => k,
        SeriesOrder::Optimal => {
            let cap = ((2.0 * PI * n.norm() * 1.5).ceil() as usize + 10).min(2000);
            let mut best = 1usize;
            let mut best_mag = f64::INFINITY;
            for k in 1..=cap {
                let m = coeff_log(k).0 - 2.0 * k as f64 * n.norm().ln();
                if m < best_mag {
                    best_mag = m;
                    best = k;
                }
            }
            best
        }
    };
    let mut acc = c64(0.0, 0.0);
    for k in 1..=last {
        acc += series_term(k, ln_n);
    }
    let omitted = series_term(last + 1, ln_n).norm();
    Ok(VEvaluation { n_value: n, value: finite(acc, "series")?, route: VRoute::Series, abs_err: omitted })
}

/// Angle within which a Laplace ray counts as lying on the Stokes line.
pub const STOKES_GUARD: f64 = 0.02;

/// ∫₀^{∞e^{iθ}} e^{−tN} B[v](t) dt.
pub fn v_borel_laplace(n: C64, ray_angle: f64, tol: f64) -> Result<VEvaluation> {
    nonzero(n)?;
    let wrapped = (ray_angle + PI).rem_euclid(2.0 * PI) - PI;
    if (wrapped.abs() - FRAC_PI_2).abs() < STOKES_GUARD {
        return Err(Error::StokesLine(format!("ray angle {ray_angle} is within {STOKES_GUARD} rad of ±π/2")));
    }
    let dir = C64::from_polar(1.0, ray_angle);
    if (n * dir).re <= 0.0 {
        return Err(Error::Domain(format!("Re(N e^{{iθ}}) ≤ 0 for N = {n}, θ = {ray_angle}")));
    }
    let nd = n * dir;
    let r = integrate_half_line(
        |r| {
            let damp = (-nd * r).exp();
            if damp.norm() < 1e-300 {
                return Ok(c64(0.0, 0.0));
            }
            Ok(damp * borel_transform(dir * r, 0.0)? * dir)
        },
        tol,
    )?;
    Ok(VEvaluation { n_value: n, value: r.value, route: VRoute::BorelLaplace, abs_err: r.abs_err })
}

/// Dispatches to the integral inside |Arg N| < π/2 − margin and to the log-Γ
/// sum elsewhere.
pub fn v_eval(n: C64, tol: f64) -> Result<VEvaluation> {
    if n.arg().abs() < FRAC_PI_2 - INTEGRAL_MARGIN {
        v_integral(n, tol)
    } else {
        v_loggamma_sum(n, tol)
    }
}

/// Evaluates by a named route with its default parameters.
pub fn v_by_route(n: C64, route: VRoute, tol: f64) -> Result<VEvaluation> {
    match route {
        VRoute::Integral => v_integral(n, tol),
        VRoute::MellinBarnes => v_mellin_barnes(n, tol, -1.0),
        VRoute::LogGammaSum => v_loggamma_sum(n, tol),
        VRoute::BorelLaplace => v_borel_laplace(n, -n.arg(), tol),
        VRoute::Series => v_series_truncated(n, SeriesOrder::Optimal),
    }
}
