//! Complex log-Γ, Riemann and Hurwitz ζ, Bernoulli numbers and polynomials,
//! and the two Barnes-G constants.

use crate::cmath;
use crate::error::{finite, Error, Result};
use crate::C64;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::f64::consts::PI;
use std::sync::OnceLock;

const LN_2PI: f64 = 1.837_877_066_409_345_5;
const LN_PI: f64 = 1.144_729_885_849_400_2;

/// ζ′(−1), used for the Glaisher constant ln A = 1/12 − ζ′(−1).
pub const ZETA_PRIME_MINUS_ONE: f64 = -0.165_421_143_700_450_93;

/// Highest index stored exactly.
pub const BERNOULLI_EXACT_MAX: usize = 64;

/// Exact Bernoulli numbers B₀..B₆₄ (B₁ = −1/2).
pub struct BernoulliTable {
    numbers: Vec<BigRational>,
    floats: Vec<f64>,
}

impl BernoulliTable {
    fn build() -> Self {
        let n_max = BERNOULLI_EXACT_MAX;
        let mut numbers: Vec<BigRational> = Vec::with_capacity(n_max + 1);
        numbers.push(BigRational::one());
        for m in 1..=n_max {
            if m > 1 && m % 2 == 1 {
                numbers.push(BigRational::zero());
                continue;
            }
            let mut acc = BigRational::zero();
            let mut binom = BigInt::one(); // C(m+1, k)
            for (k, b) in numbers.iter().enumerate() {
                if !b.is_zero() {
                    acc += BigRational::from_integer(binom.clone()) * b;
                }
                binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
            }
            numbers.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
        }
        let floats = numbers.iter().map(|b| b.to_f64().unwrap_or(f64::NAN)).collect();
        BernoulliTable { numbers, floats }
    }

    /// The shared table.
    pub fn get() -> &'static BernoulliTable {
        static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
        TABLE.get_or_init(BernoulliTable::build)
    }

    /// Exact Bₙ for n ≤ 64.
    pub fn exact(&self, n: usize) -> Option<&BigRational> {
        self.numbers.get(n)
    }

    /// Bₙ as a double.
    pub fn value(&self, n: usize) -> f64 {
        if n <= BERNOULLI_EXACT_MAX {
            self.floats[n]
        } else if n % 2 == 1 {
            0.0
        } else {
            // B₂ₘ = (−1)^{m+1} 2 (2m)! ζ(2m) / (2π)^{2m}
            let m = n / 2;
            let ln_mag = 2f64.ln() + ln_factorial(n) - (n as f64) * LN_2PI
                + zeta_real_large(n as f64).ln();
            let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
            sign * ln_mag.exp()
        }
    }
}

fn ln_factorial(n: usize) -> f64 {
    log_gamma(C64::new(n as f64 + 1.0, 0.0)).map(|z| z.re).unwrap_or(f64::INFINITY)
}

/// ζ(s) for real s ≥ 2 by direct summation (fast for the large-s Bernoulli tail).
fn zeta_real_large(s: f64) -> f64 {
    let mut sum = 1.0;
    let mut k = 2.0f64;
    loop {
        let t = k.powf(-s);
        sum += t;
        if t < 1e-17 * sum {
            break;
        }
        k += 1.0;
        if k > 1e6 {
            break;
        }
    }
    sum
}

/// Bₙ (B₁ = −1/2).
pub fn bernoulli_number(n: usize) -> f64 {
    BernoulliTable::get().value(n)
}

/// Bₙ(x) = Σₖ C(n,k) Bₖ x^{n−k} evaluated exactly in rationals for n ≤ 64.
pub fn bernoulli_poly_exact(n: usize, x: &BigRational) -> BigRational {
    assert!(n <= BERNOULLI_EXACT_MAX, "exact Bernoulli polynomials limited to n <= 64");
    let table = BernoulliTable::get();
    // Horner in x over coefficients C(n,k) B_k, highest power first (k = 0)
    let mut binoms = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    for k in 0..=n {
        binoms.push(c.clone());
        c = c * BigInt::from(n - k) / BigInt::from(k + 1);
    }
    let mut acc = BigRational::zero();
    for k in 0..=n {
        acc = acc * x + BigRational::from_integer(binoms[k].clone()) * table.exact(k).unwrap();
    }
    acc
}

/// Bₙ(x) for real x; exact rational evaluation then rounded, for n ≤ 64.
pub fn bernoulli_poly(n: usize, x: f64) -> f64 {
    let xr = BigRational::from_float(x).expect("finite x");
    bernoulli_poly_exact(n, &xr).to_f64().unwrap_or(f64::NAN)
}

fn is_nonpositive_integer(z: C64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// Stirling series for ln Γ(z), |z| ≥ 10, Re z > 0.
fn log_gamma_stirling(z: C64) -> C64 {
    const COEF: [f64; 12] = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
        -691.0 / 360360.0,
        1.0 / 156.0,
        -3617.0 / 122400.0,
        43867.0 / 244188.0,
        -174611.0 / 125400.0,
        77683.0 / 5796.0,
        -236364091.0 / 1506960.0,
    ];
    let iz = z.inv();
    let iz2 = iz * iz;
    let mut corr = C64::new(0.0, 0.0);
    let mut p = iz;
    for c in COEF {
        corr += p * c;
        p *= iz2;
    }
    (z - 0.5) * z.ln() - z + 0.5 * LN_2PI + corr
}

/// Principal-branch ln Γ(z): continuous off the negative real axis, real for z > 0.
/// On the negative real axis the value is the limit from above.
pub fn log_gamma(z: C64) -> Result<C64> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(format!("log_gamma at {}", z.re)));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!("log_gamma argument {z}")));
    }
    let z = C64::new(z.re, if z.im == 0.0 { 0.0 } else { z.im });
    if z.im < 0.0 {
        return log_gamma(z.conj()).map(|w| w.conj());
    }
    if z.re < -5.0 {
        // ln Γ(z) = ln π − ln Γ(1−z) − ln sin(πz), with the logarithm of sin(πz)
        // continued through the upper half plane
        let w = C64::new(0.0, 2.0 * PI) * z;
        let ln_sin = C64::new(0.0, -PI) * z + cmath::ln_1p(-w.exp()) + C64::new(-(2f64.ln()), 0.5 * PI);
        let rest = log_gamma(1.0 - z)?;
        return finite(LN_PI - rest - ln_sin, "log_gamma");
    }
    let shift = if z.re >= 1.0 && z.norm() >= 10.0 {
        0
    } else if z.im.abs() >= 10.0 {
        (1.0 - z.re).max(0.0).ceil() as usize
    } else {
        (10.0 - z.re).ceil() as usize
    };
    let mut acc = C64::new(0.0, 0.0);
    for j in 0..shift {
        acc += (z + j as f64).ln();
    }
    finite(log_gamma_stirling(z + shift as f64) - acc, "log_gamma")
}

/// Γ(z) = exp(ln Γ(z)).
pub fn gamma(z: C64) -> Result<C64> {
    finite(log_gamma(z)?.exp(), "gamma")
}

/// ln sin(w) up to a multiple of 2πi, without overflow for large |Im w|.
fn ln_sin(w: C64) -> C64 {
    if w.im >= 0.0 {
        let e = (C64::new(0.0, 2.0) * w).exp();
        C64::new(0.0, -1.0) * w + cmath::ln_1p(-e) + C64::new(-(2f64.ln()), 0.5 * PI)
    } else {
        ln_sin(w.conj()).conj()
    }
}

/// Riemann ζ(s) on the whole plane except s = 1.
pub fn zeta(s: C64) -> Result<C64> {
    if s == C64::new(1.0, 0.0) {
        return Err(Error::Pole("zeta at s = 1".into()));
    }
    if s == C64::new(0.0, 0.0) {
        return Ok(C64::new(-0.5, 0.0));
    }
    if s.re >= 0.5 {
        zeta_right(s)
    } else {
        if s.im == 0.0 && s.re < 0.0 && s.re == s.re.round() && (s.re as i64) % 2 == 0 {
            return Ok(C64::new(0.0, 0.0));
        }
        // ζ(s) = 2^s π^{s−1} sin(πs/2) Γ(1−s) ζ(1−s)
        let one_minus = 1.0 - s;
        let zr = zeta_right(one_minus)?;
        let ln_pref = s * 2f64.ln() + (s - 1.0) * LN_PI + ln_sin(s * (0.5 * PI)) + log_gamma(one_minus)?;
        finite(ln_pref.exp() * zr, "zeta")
    }
}

fn zeta_right(s: C64) -> Result<C64> {
    let t = s.im.abs();
    let denom = 1.0 - (C64::new(2f64.ln(), 0.0) * (1.0 - s)).exp();
    let need = (40.0 + (1.0 + 2.0 * t).ln() + 0.5 * PI * t - denom.norm().ln()) / 1.762_747_174;
    if denom.norm() < 0.05 || need > 380.0 {
        return hurwitz_zeta(s, 1.0);
    }
    let n = need.ceil() as usize + 2;
    finite(eta_crvz(s, n) / denom, "zeta")
}

/// Dirichlet η(s) by the Cohen–Rodriguez Villegas–Zagier / Borwein weights.
fn eta_crvz(s: C64, n: usize) -> C64 {
    let nf = n as f64;
    // d_k = n Σ_{i≤k} (n+i−1)! 4^i / ((n−i)! (2i)!)
    let mut d = Vec::with_capacity(n + 1);
    let mut term = 1.0; // i = 0: n (n−1)!/n! = 1
    let mut acc = 0.0;
    for i in 0..=n {
        acc += term;
        d.push(acc);
        let fi = i as f64;
        term *= 4.0 * (nf + fi) * (nf - fi) / ((2.0 * fi + 1.0) * (2.0 * fi + 2.0));
    }
    let dn = d[n];
    let mut sum = C64::new(0.0, 0.0);
    for k in 0..n {
        let w = (dn - d[k]) / dn;
        let p = (-s * ((k + 1) as f64).ln()).exp();
        if k % 2 == 0 {
            sum += p * w;
        } else {
            sum -= p * w;
        }
    }
    sum
}

/// Default Euler–Maclaurin shift and correction count for Hurwitz ζ.
pub const HURWITZ_SHIFT: usize = 16;
pub const HURWITZ_TERMS: usize = 12;

/// Hurwitz ζ(s, a), a ∈ (0, 1].
pub fn hurwitz_zeta(s: C64, a: f64) -> Result<C64> {
    hurwitz_zeta_with(s, a, HURWITZ_SHIFT, HURWITZ_TERMS)
}

/// Hurwitz ζ with an explicit Euler–Maclaurin shift m and correction count p.
/// The shift is raised to ⌈|s|⌉ when that is larger, which keeps the
/// correction series convergent for large |Im s|.
pub fn hurwitz_zeta_with(s: C64, a: f64, shift: usize, terms: usize) -> Result<C64> {
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::Domain(format!("hurwitz_zeta parameter a = {a} outside (0,1]")));
    }
    if s == C64::new(1.0, 0.0) {
        return Err(Error::Pole("hurwitz_zeta at s = 1".into()));
    }
    finite(hurwitz_em(s, a, shift, terms), "hurwitz_zeta")
}

/// Euler–Maclaurin body of Hurwitz ζ, valid for any a > 0 and s ≠ 1.
pub(crate) fn hurwitz_em(s: C64, a: f64, shift: usize, terms: usize) -> C64 {
    let terms = terms.min(BERNOULLI_EXACT_MAX / 2 - 1);
    let m = shift.max(s.norm().ceil() as usize);
    let mut sum = C64::new(0.0, 0.0);
    for k in 0..m {
        sum += (-s * (k as f64 + a).ln()).exp();
    }
    let x = m as f64 + a;
    let lnx = x.ln();
    let xs = (-s * lnx).exp(); // x^{−s}
    sum += xs * x / (s - 1.0) + xs * 0.5;
    let table = BernoulliTable::get();
    // running factor s(s+1)…(s+2j−2) x^{−s−2j+1} / (2j)!
    let mut fac = s * xs / x;
    let mut fact = 2.0; // (2j)!
    for j in 1..=terms {
        sum += fac * (table.value(2 * j) / fact);
        let jf = j as f64;
        fac = fac * (s + 2.0 * jf - 1.0) * (s + 2.0 * jf) / (x * x);
        fact *= (2.0 * jf + 1.0) * (2.0 * jf + 2.0);
    }
    sum
}

/// G(1/2)·G(3/2) and ln(√π·(G(1/2)G(3/2))²).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BarnesConstants {
    pub g_product: f64,
    pub reflection_log_const: f64,
}

/// ln G(1/2) from the Glaisher constant.
pub fn ln_barnes_g_half() -> f64 {
    let ln_a = 1.0 / 12.0 - ZETA_PRIME_MINUS_ONE;
    2f64.ln() / 24.0 + 0.125 - 0.25 * LN_PI - 1.5 * ln_a
}

pub fn barnes_constants() -> BarnesConstants {
    let ln_g = 0.5 * LN_PI + 2.0 * ln_barnes_g_half();
    BarnesConstants {
        g_product: ln_g.exp(),
        reflection_log_const: 0.5 * LN_PI + 2.0 * ln_g,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn bernoulli_known_values() {
        assert_eq!(bernoulli_number(0), 1.0);
        assert_eq!(bernoulli_number(1), -0.5);
        assert_eq!(bernoulli_number(2), 1.0 / 6.0);
        assert_eq!(bernoulli_number(3), 0.0);
        assert_eq!(bernoulli_number(12), -691.0 / 2730.0);
        let b64 = BernoulliTable::get().exact(64).unwrap();
        assert_eq!(b64.denom(), &BigInt::from(510)); // 2·3·5·17
    }

    #[test]
    fn bernoulli_float_tail_continues_exact_table() {
        let t = BernoulliTable::get();
        // compare ζ-route at n = 64 against the exact value
        let m = 32;
        let ln_mag = 2f64.ln() + ln_factorial(64) - 64.0 * LN_2PI + zeta_real_large(64.0).ln();
        let v = if m % 2 == 1 { ln_mag.exp() } else { -ln_mag.exp() };
        assert!(((v - t.value(64)) / t.value(64)).abs() < 1e-13);
        assert!(t.value(66) > 0.0 && t.value(68) < 0.0);
    }

    #[test]
    fn bernoulli_polynomials() {
        assert_eq!(bernoulli_poly(3, 1.0), 0.0);
        assert_eq!(bernoulli_poly(0, 0.37), 1.0);
        for n in 0..=20 {
            assert_eq!(bernoulli_poly(n, 0.0), bernoulli_number(n));
        }
        // B_5(x) = x^5 − 5/2 x^4 + 5/3 x^3 − x/6
        let x: f64 = 2.0;
        let direct = x.powi(5) - 2.5 * x.powi(4) + 5.0 / 3.0 * x.powi(3) - x / 6.0;
        assert!((bernoulli_poly(5, 2.0) - direct).abs() < 1e-13);
    }

    #[test]
    fn log_gamma_special_values() {
        assert!(log_gamma(c64(1.0, 0.0)).unwrap().norm() < 1e-15);
        let half = log_gamma(c64(0.5, 0.0)).unwrap();
        assert!((half - c64(0.5 * LN_PI, 0.0)).norm() < 2e-15, "{half}");
        assert!(matches!(log_gamma(c64(-3.0, 0.0)), Err(Error::Pole(_))));
        assert!(matches!(log_gamma(c64(0.0, 0.0)), Err(Error::Pole(_))));
        // Γ(−1/2) = −2√π, on the cut the limit from above has imaginary part −π
        let v = log_gamma(c64(-0.5, 0.0)).unwrap();
        assert!((v.re - (2.0 * PI.sqrt()).ln()).abs() < 1e-14);
        assert!((v.im + PI).abs() < 1e-14);
    }

    #[test]
    fn log_gamma_reflection_branch_matches_shift_recurrence() {
        // the shift recurrence with principal logarithms is the reference branch
        for &z in &[c64(-7.3, 0.4), c64(-12.5, -2.0), c64(-30.2, 0.01), c64(-6.0, 5.0)] {
            let m = 60usize;
            let mut acc = c64(0.0, 0.0);
            for j in 0..m {
                acc += (z + j as f64).ln();
            }
            let reference = log_gamma_stirling(z + m as f64) - acc;
            let v = log_gamma(z).unwrap();
            assert!((v - reference).norm() < 1e-11 * (1.0 + reference.norm()), "{z}: {v} vs {reference}");
        }
    }

    #[test]
    fn zeta_known_values() {
        assert!((zeta(c64(2.0, 0.0)).unwrap() - c64(PI * PI / 6.0, 0.0)).norm() < 1e-15);
        assert!((zeta(c64(0.0, 0.0)).unwrap() - c64(-0.5, 0.0)).norm() < 1e-15);
        assert!((zeta(c64(-1.0, 0.0)).unwrap() - c64(-1.0 / 12.0, 0.0)).norm() < 1e-15);
        assert_eq!(zeta(c64(-2.0, 0.0)).unwrap(), c64(0.0, 0.0));
        assert!(matches!(zeta(c64(1.0, 0.0)), Err(Error::Pole(_))));
        // first nontrivial zero
        assert!(zeta(c64(0.5, 14.134_725_141_734_693)).unwrap().norm() < 1e-13);
    }

    #[test]
    fn zeta_near_eta_denominator_zeros() {
        // 1 − 2^{1−s} vanishes at s = 1 + 2πik/ln 2; the value must stay smooth there
        let s0 = c64(1.0, 2.0 * PI / 2f64.ln());
        let a = zeta(s0).unwrap();
        let b = hurwitz_zeta_with(s0, 1.0, 40, 20).unwrap();
        assert!((a - b).norm() < 1e-13);
    }

    #[test]
    fn hurwitz_known_values() {
        let h = hurwitz_zeta(c64(2.0, 0.0), 0.5).unwrap();
        assert!((h.re - PI * PI / 2.0).abs() < 1e-13);
        for s in [2.0, 3.0, -1.0] {
            let a = hurwitz_zeta(c64(s, 0.0), 1.0).unwrap();
            let b = zeta(c64(s, 0.0)).unwrap();
            assert!((a - b).norm() < 1e-13);
        }
        assert!(matches!(hurwitz_zeta(c64(2.0, 0.0), 1.5), Err(Error::Domain(_))));
        assert!(matches!(hurwitz_zeta(c64(1.0, 0.0), 0.5), Err(Error::Pole(_))));
    }

    #[test]
    fn barnes_constants_consistent() {
        let b = barnes_constants();
        assert!((b.g_product - 0.645_002_448_509_577_1).abs() < 1e-14);
        let lhs = 0.5 * LN_PI + 2.0 * b.g_product.ln();
        assert!((lhs - b.reflection_log_const).abs() < 1e-14);
        assert!((b.reflection_log_const + 0.304_637_389_184_681_27).abs() < 1e-14);
    }
}
