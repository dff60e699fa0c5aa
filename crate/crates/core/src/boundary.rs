//! Behaviour of v near the negative real axis: the reflection identity, the
//! regular and singular sums 𝒮ᵣ and 𝒮, and the leading small-y singularity
//! of Re 𝒮 at rational boundary points.
//!
//! Points are parametrised by 1/N = 2(x + iy).

use crate::cmath::{self, cos_pi, cos_pi_rational, sin_pi, sin_pi_rational};
use crate::error::{finite, Error, Result};
use crate::scan::ScanTable;
use crate::series::{sum_alternating, AltSumConfig, SeriesSum};
use crate::special_fn::{barnes_constants, zeta};
use crate::v_function::{v_eval, v_loggamma_sum};
use crate::{c64, C64};
use num_integer::Integer;
use rayon::prelude::*;
use std::f64::consts::PI;

/// Reduced fraction num/den with den > 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalAngle {
    pub num: i64,
    pub den: i64,
}

impl RationalAngle {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den <= 0 {
            return Err(Error::Domain(format!("denominator must be positive, got {num}/{den}")));
        }
        if num.gcd(&den) != 1 {
            return Err(Error::Domain(format!("{num}/{den} is not in lowest terms")));
        }
        Ok(RationalAngle { num, den })
    }

    /// Parses `p/q` or an integer.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("cannot parse rational '{s}'"));
        match s.trim().split_once('/') {
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| bad())?;
                let q: i64 = q.trim().parse().map_err(|_| bad())?;
                RationalAngle::new(p, q)
            }
            None => RationalAngle::new(s.trim().parse().map_err(|_| bad())?, 1),
        }
    }

    pub fn value(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl std::fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SingularityKind {
    OddOverOdd,
    DyadicMixed,
    EvenOverOdd,
    Unclassified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SingularityLaw {
    InverseYSquared,
    LogY,
    /// Only |𝒮| ≤ 1/(2y²) is known.
    PowerBound,
}

impl SingularityLaw {
    /// The function of y multiplying the predicted coefficient.
    pub fn profile(self, y: f64) -> f64 {
        match self {
            SingularityLaw::InverseYSquared | SingularityLaw::PowerBound => 1.0 / (y * y),
            SingularityLaw::LogY => y.abs().ln(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingularityClass {
    pub kind: SingularityKind,
    pub predicted_coeff: f64,
    pub law: SingularityLaw,
}

fn two_adic(mut n: i64) -> (u32, i64) {
    let mut p = 0;
    while n != 0 && n % 2 == 0 {
        n /= 2;
        p += 1;
    }
    (p, n)
}

/// Leading small-y behaviour of Re 𝒮 at the boundary point −x.
pub fn classify_boundary_point(x: RationalAngle) -> SingularityClass {
    let (p_den, odd_den) = two_adic(x.den);
    let num = x.num.abs();
    if p_den > 0 {
        SingularityClass {
            kind: SingularityKind::DyadicMixed,
            predicted_coeff: (1i64 << p_den) as f64 * odd_den as f64 / 2.0,
            law: SingularityLaw::LogY,
        }
    } else if num % 2 == 0 {
        // includes x = 0
        SingularityClass { kind: SingularityKind::EvenOverOdd, predicted_coeff: x.den as f64 / 2.0, law: SingularityLaw::LogY }
    } else {
        let z3 = zeta(c64(3.0, 0.0)).map(|z| z.re).unwrap_or(1.202_056_903_159_594_2);
        SingularityClass {
            kind: SingularityKind::OddOverOdd,
            predicted_coeff: 7.0 * z3 / (2.0 * PI * PI * (x.den as f64).powi(3)),
            law: SingularityLaw::InverseYSquared,
        }
    }
}

/// Classification for a real x given only as a float.
pub fn unclassified() -> SingularityClass {
    SingularityClass { kind: SingularityKind::Unclassified, predicted_coeff: 0.5, law: SingularityLaw::PowerBound }
}

/// |𝒮(x,y)| ≤ 1/(2y²).
pub fn power_law_bound(y: f64) -> f64 {
    0.5 / (y * y)
}

#[derive(Clone, Copy)]
enum Phase {
    Real(f64),
    Rational(i64, i64),
}

impl Phase {
    /// (cos mπx, sin mπx, cos mπx/2)
    fn trig(self, m: i64) -> (f64, f64, f64) {
        match self {
            Phase::Real(x) => {
                let a = m as f64 * x;
                (cos_pi(a), sin_pi(a), cos_pi(0.5 * a))
            }
            Phase::Rational(p, q) => (cos_pi_rational(m * p, q), sin_pi_rational(m * p, q), cos_pi_rational(m * p, 2 * q)),
        }
    }
}

/// Tail terms with (2k+1)π|y| beyond this are zero in double precision.
const PHI_CUTOFF: f64 = 700.0;

fn singular_sum_impl(ph: Phase, y: f64, tol: f64) -> Result<C64> {
    if y == 0.0 || !y.is_finite() {
        return Err(Error::Domain(format!("singular sum needs finite y ≠ 0, got y = {y}")));
    }
    let tol = tol.max(1e-300);
    let ay = y.abs();
    let ratio = -(-2.0 * PI * ay).exp_m1(); // 1 − e^{−2π|y|}
    let mut re = 0.0;
    let mut im = 0.0;
    let mut m: i64 = 1;
    loop {
        let mf = m as f64;
        let phi = mf * PI * ay;
        if phi > PHI_CUTOFF {
            break;
        }
        let (c, s, ch) = ph.trig(m);
        let (tr, ti) = if phi <= 1.0 {
            // cos θ + cosh φ = 2cos²(θ/2) + 2sinh²(φ/2), both non-negative
            let sh = (0.5 * phi).sinh();
            let d = 2.0 * ch * ch + 2.0 * sh * sh;
            let num_re = 2.0 * ch * ch + 2.0 * c * sh * sh;
            (num_re / (d * d), s * phi.sinh() / (d * d))
        } else {
            let e = (-phi).exp();
            let sech = 2.0 * e / (1.0 + e * e);
            let th = -(-2.0 * phi).exp_m1() / (1.0 + e * e);
            let d = 1.0 + c * sech;
            ((sech * sech + c * sech) / (d * d), s * th * sech / (d * d))
        };
        re -= 2.0 / mf * tr;
        im -= 2.0 / mf * ti * y.signum();
        if phi > 1.0 && 8.0 * (-phi).exp() / (mf * ratio) < tol {
            break;
        }
        m += 2;
    }
    finite(c64(re, im), "singular sum")
}

/// 𝒮(x,y) = −Σ_k 4w^{2k+1}/((2k+1)(w^{2k+1}+1)²), w = e^{−iπx}e^{πy}, with y < 0
/// reached through (x,y) → (−x,−y).
pub fn singular_sum(x: f64, y: f64, tol: f64) -> Result<C64> {
    singular_sum_impl(Phase::Real(x), y, tol)
}

/// [`singular_sum`] with the phases (2k+1)πx reduced exactly.
pub fn singular_sum_rational(x: RationalAngle, y: f64, tol: f64) -> Result<C64> {
    singular_sum_impl(Phase::Rational(x.num, x.den), y, tol)
}

pub fn real_singular_sum(x: f64, y: f64, tol: f64) -> Result<f64> {
    Ok(singular_sum(x, y, tol)?.re)
}

pub fn imag_singular_sum(x: f64, y: f64, tol: f64) -> Result<f64> {
    Ok(singular_sum(x, y, tol)?.im)
}

/// Direct summation of −Σ 4w^m/(m(w^m+1)²) in complex arithmetic, for
/// cross-checks at moderate |y|.
pub fn singular_sum_terms(x: f64, y: f64, tol: f64) -> Result<C64> {
    if y == 0.0 {
        return Err(Error::Domain("singular sum at y = 0".into()));
    }
    // the form in 1/w converges for y > 0 and equals the (−x,−y) image for y < 0
    let z = C64::from_polar((-PI * y.abs()).exp(), PI * x * y.signum());
    let mut acc = c64(0.0, 0.0);
    let mut zm = z;
    let z2 = z * z;
    let mut m = 1.0;
    loop {
        let t = zm * 4.0 / (m * (zm + 1.0) * (zm + 1.0));
        acc -= t;
        if t.norm() < tol * 1e-3 || m > 1e7 {
            break;
        }
        zm *= z2;
        m += 2.0;
    }
    finite(acc, "singular sum")
}

/// Closed form of 𝒮ᵣ for y > 0.
pub fn regular_sum_closed(x: f64, y: f64) -> Result<C64> {
    if !(y > 0.0) {
        return Err(Error::Domain(format!("closed regular sum needs y > 0, got {y}")));
    }
    Ok(regular_sum_signed(x, y))
}

/// 𝒮ᵣ for either sign of y, using (x,y) → (−x,−y) for y < 0.
pub fn regular_sum_signed(x: f64, y: f64) -> C64 {
    let (x, y) = if y < 0.0 { (-x, -y) } else { (x, y) };
    let e1 = C64::from_polar((-PI * y).exp(), PI * x);
    let e2 = e1 * e1;
    (cmath::ln_1p(e1) - cmath::ln_1p(-e1)) - 0.5 * (cmath::ln_1p(e2) - cmath::ln_1p(-e2))
}

/// Σ_k (2/w^{2k+1} − 1/w^{4k+2})/(2k+1) summed term by term.
pub fn regular_sum_terms(x: f64, y: f64, tol: f64) -> Result<C64> {
    if !(y > 0.0) {
        return Err(Error::Domain(format!("regular sum needs y > 0, got {y}")));
    }
    let u = C64::from_polar((-PI * y).exp(), PI * x); // 1/w
    let u2 = u * u;
    let mut um = u;
    let mut acc = c64(0.0, 0.0);
    let mut m = 1.0;
    loop {
        let t = (2.0 * um - um * um) / m;
        acc += t;
        if t.norm() < tol * 1e-3 || m > 1e7 {
            break;
        }
        um *= u2;
        m += 2.0;
    }
    finite(acc, "regular sum")
}

/// 𝒮ᵣ + ½ln[4tan²(πz/2)/(πz tan πz)] − ½ln[4i sign(y)/(πz)], z = x + iy.
pub fn combination_identity_residual(x: f64, y: f64) -> Result<C64> {
    if y == 0.0 {
        return Err(Error::Domain("combination identity needs y ≠ 0".into()));
    }
    let z = c64(x, y);
    let t1 = (z * (0.5 * PI)).tan();
    let t2 = (z * PI).tan();
    let lhs = regular_sum_signed(x, y) + 0.5 * (4.0 * t1 * t1 / (PI * z * t2)).ln();
    let rhs = 0.5 * (c64(0.0, 4.0 * y.signum()) / (PI * z)).ln();
    finite(lhs - rhs, "combination identity")
}

/// v at 1/N = 2(x+iy).
pub fn v_xy(x: f64, y: f64, tol: f64) -> Result<C64> {
    let n = (2.0 * c64(x, y)).inv();
    if n.arg().abs() < 0.5 * PI {
        Ok(v_eval(n, tol)?.value)
    } else {
        Ok(v_loggamma_sum(n, tol)?.value)
    }
}

/// v(−x−iy) + v(x+iy) + ln[√π G²(½)G²(3/2)] − ½ln(i sign(y)/(x+iy)) − 𝒮(x,y).
pub fn reflection_residual(x: f64, y: f64, tol: f64) -> Result<C64> {
    if y == 0.0 {
        return Err(Error::Domain("reflection identity needs y ≠ 0".into()));
    }
    let z = c64(x, y);
    let lhs = v_xy(-x, -y, tol)? + v_xy(x, y, tol)? + barnes_constants().reflection_log_const;
    let rhs = 0.5 * (c64(0.0, y.signum()) / z).ln() + singular_sum(x, y, tol.min(1e-14))?;
    finite(lhs - rhs, "reflection residual")
}

/// −½ Σ_{n≥1} (−1)ⁿ(n+1) ln[n(n+2)/(n+1)²], summed in pairs with acceleration.
pub fn barnes_alternating_sum(tol: f64) -> Result<SeriesSum> {
    sum_alternating(
        |k| {
            let n = (k + 1) as f64;
            let sign = if (k + 1) % 2 == 0 { -0.5 } else { 0.5 };
            Ok(c64(sign * (n + 1.0) * (-1.0 / ((n + 1.0) * (n + 1.0))).ln_1p(), 0.0))
        },
        tol,
        &AltSumConfig::default(),
    )
}

/// ln[2G²(½)G²(3/2)].
pub fn barnes_alternating_target() -> f64 {
    2f64.ln() + 2.0 * barnes_constants().g_product.ln()
}

/// Σ_{k=0}^{2^p−1} 1/(1 + cos((2k+1)(2q+1)π/2^p)).
pub fn cosine_sum_rule(p: u32, q: u32) -> f64 {
    assert!(p >= 1 && p < 31, "p must lie in 1..31");
    let den = 1i64 << p;
    let odd = 2 * q as i64 + 1;
    (0..den)
        .map(|k| {
            // 1 + cos θ = 2cos²(θ/2)
            let c = cos_pi_rational((2 * k + 1) * odd, 2 * den);
            1.0 / (2.0 * c * c)
        })
        .sum()
}

/// The y = 0 summand truncated at k₀ = ⌊1/(2π|y|)⌋:
/// −Σ_{k≤k₀} 2/((2k+1)(1 + cos (2k+1)πx)).
pub fn dominant_sum(x: RationalAngle, y: f64) -> Result<f64> {
    if x.den % 2 != 0 {
        return Err(Error::Domain(format!("dominant sum needs an even denominator, got {x}")));
    }
    let k0 = (1.0 / (2.0 * PI * y.abs())).floor() as i64;
    let mut acc = 0.0;
    for k in 0..=k0 {
        let m = 2 * k + 1;
        let c = cos_pi_rational(m * x.num, 2 * x.den);
        acc -= 2.0 / (m as f64 * 2.0 * c * c);
    }
    Ok(acc)
}

/// Outcome of a least-squares singularity fit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingularityFit {
    pub fitted_coeff: f64,
    pub law: SingularityLaw,
    /// rms residual relative to the rms variation explained by the leading term.
    pub relative_residual: f64,
    pub points: usize,
}

/// Least squares for data ≈ Σ_j c_j basis_j; returns the coefficients and the
/// residual vector.
fn least_squares(basis: &[Vec<f64>], data: &[f64]) -> Option<(Vec<f64>, Vec<f64>)> {
    let k = basis.len();
    // normal equations on column-scaled basis, solved by Gaussian elimination
    let scale: Vec<f64> = basis.iter().map(|b| b.iter().map(|v| v * v).sum::<f64>().sqrt().max(1e-300)).collect();
    let mut a = vec![vec![0.0; k + 1]; k];
    for i in 0..k {
        for j in 0..k {
            a[i][j] = basis[i].iter().zip(&basis[j]).map(|(u, v)| u * v).sum::<f64>() / (scale[i] * scale[j]);
        }
        a[i][k] = basis[i].iter().zip(data).map(|(u, d)| u * d).sum::<f64>() / scale[i];
    }
    for col in 0..k {
        let piv = (col..k).max_by(|&r, &s| a[r][col].abs().total_cmp(&a[s][col].abs()))?;
        a.swap(col, piv);
        if a[col][col].abs() < 1e-14 {
            return None;
        }
        for r in 0..k {
            if r != col {
                let f = a[r][col] / a[col][col];
                for c in col..=k {
                    a[r][c] -= f * a[col][c];
                }
            }
        }
    }
    let coef: Vec<f64> = (0..k).map(|i| a[i][k] / a[i][i] / scale[i]).collect();
    let resid = (0..data.len()).map(|n| data[n] - (0..k).map(|i| coef[i] * basis[i][n]).sum::<f64>()).collect();
    Some((coef, resid))
}

/// Fits Re 𝒮(x, y) on the grid to `law` plus nuisance terms (a constant, and
/// ln|y| when the law is 1/y²). The largest decade of the grid is dropped.
pub fn fit_law(x: RationalAngle, y_grid: &[f64], law: SingularityLaw, tol: f64) -> Result<SingularityFit> {
    if y_grid.is_empty() {
        return Err(Error::Domain("empty y grid".into()));
    }
    let ymax = y_grid.iter().fold(0.0f64, |a, &y| a.max(y.abs()));
    let ymin = y_grid.iter().fold(f64::INFINITY, |a, &y| a.min(y.abs()));
    if !(ymin >= 1e-5) || ymax / ymin < 100.0 * (1.0 - 1e-9) {
        return Err(Error::Domain(format!("fit grid must span two decades with y ≥ 1e−5, got [{ymin:e}, {ymax:e}]")));
    }
    let ys: Vec<f64> = y_grid.iter().copied().filter(|y| y.abs() <= ymax / 10.0 * (1.0 + 1e-9)).collect();
    let data: Vec<f64> = ys.par_iter().map(|&y| singular_sum_rational(x, y, tol).map(|s| s.re)).collect::<Result<_>>()?;
    let lead: Vec<f64> = ys.iter().map(|&y| law.profile(y)).collect();
    let mut basis = vec![lead.clone(), vec![1.0; ys.len()]];
    if law != SingularityLaw::LogY {
        basis.push(ys.iter().map(|y| y.abs().ln()).collect());
    }
    if ys.len() < basis.len() + 1 {
        return Err(Error::Domain("too few grid points for the fit".into()));
    }
    let (coef, resid) = least_squares(&basis, &data).ok_or_else(|| Error::IllConditionedFit("singular normal equations".into()))?;
    let rms = |v: &[f64]| (v.iter().map(|r| r * r).sum::<f64>() / v.len() as f64).sqrt();
    let mean = lead.iter().sum::<f64>() / lead.len() as f64;
    let spread: Vec<f64> = lead.iter().map(|g| coef[0] * (g - mean)).collect();
    let rel = rms(&resid) / rms(&spread).max(1e-300);
    Ok(SingularityFit { fitted_coeff: coef[0], law, relative_residual: rel, points: ys.len() })
}

/// Least-squares coefficient of the law predicted by [`classify_boundary_point`].
pub fn singularity_fit(x: RationalAngle, y_grid: &[f64], tol: f64) -> Result<SingularityFit> {
    let class = classify_boundary_point(x);
    let fit = fit_law(x, y_grid, class.law, tol)?;
    if fit.relative_residual > 0.2 {
        return Err(Error::IllConditionedFit(format!(
            "relative residual {:.3} at x = {x} exceeds 20%",
            fit.relative_residual
        )));
    }
    Ok(fit)
}

/// Of the two laws, the one whose fit leaves the smaller relative residual.
pub fn best_law(x: RationalAngle, y_grid: &[f64], tol: f64) -> Result<SingularityLaw> {
    let a = fit_law(x, y_grid, SingularityLaw::LogY, tol)?;
    let b = fit_law(x, y_grid, SingularityLaw::InverseYSquared, tol)?;
    // a 1/y² fit with nuisance ln|y| always has the richer basis; it wins only
    // if its coefficient is significant and it explains the data
    if b.fitted_coeff > 0.0 && b.relative_residual < a.relative_residual && b.relative_residual < 0.05 {
        Ok(SingularityLaw::InverseYSquared)
    } else {
        Ok(SingularityLaw::LogY)
    }
}

/// `count` log-spaced values from `hi` down to `lo`.
pub fn log_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    assert!(count >= 2 && lo > 0.0 && hi > lo);
    let (a, b) = (hi.ln(), lo.ln());
    (0..count).map(|i| (a + (b - a) * i as f64 / (count - 1) as f64).exp()).collect()
}

/// Scan of 𝒮 and the reflection residual along y at fixed rational x.
/// Columns: y, S_re, S_im, reflection_residual, predicted_law_value.
pub fn boundary_scan(x: RationalAngle, ys: &[f64], tol: f64) -> Result<ScanTable> {
    if ys.is_empty() {
        return Err(Error::Domain("empty y range".into()));
    }
    if ys.iter().any(|&y| y == 0.0 || !y.is_finite()) {
        return Err(Error::Domain("y = 0 lies on the boundary".into()));
    }
    let class = classify_boundary_point(x);
    let xv = x.value();
    let rows: Vec<Vec<f64>> = ys
        .par_iter()
        .map(|&y| {
            let s = singular_sum_rational(x, y, tol.min(1e-14))?;
            let r = reflection_residual(xv, y, tol)?;
            Ok(vec![y, s.re, s.im, r.norm(), class.predicted_coeff * class.law.profile(y)])
        })
        .collect::<Result<_>>()?;
    let mut t = ScanTable::new(&["y", "S_re", "S_im", "reflection_residual", "predicted_law_value"]);
    for r in rows {
        t.push(r);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_reduce() {
        assert_eq!(RationalAngle::parse("3/8").unwrap(), RationalAngle { num: 3, den: 8 });
        assert!(RationalAngle::parse("2/4").is_err());
        assert!(RationalAngle::parse("1/0").is_err());
    }

    #[test]
    fn classification_examples() {
        let c = classify_boundary_point(RationalAngle::new(1, 3).unwrap());
        assert_eq!(c.kind, SingularityKind::OddOverOdd);
        assert!((c.predicted_coeff - 1.57881e-2).abs() < 1e-6);
        let c = classify_boundary_point(RationalAngle::new(3, 4).unwrap());
        assert_eq!((c.kind, c.predicted_coeff), (SingularityKind::DyadicMixed, 2.0));
        let c = classify_boundary_point(RationalAngle::new(2, 3).unwrap());
        assert_eq!((c.kind, c.predicted_coeff), (SingularityKind::EvenOverOdd, 1.5));
    }

    #[test]
    fn singular_sum_forms_agree() {
        for &(x, y) in &[(0.37, 0.2), (0.37, -0.2), (0.1, 1.3), (0.9, 0.03), (1.0 / 3.0, 0.01)] {
            let a = singular_sum(x, y, 1e-15).unwrap();
            let b = singular_sum_terms(x, y, 1e-15).unwrap();
            assert!((a - b).norm() < 1e-11 * a.norm().max(1.0), "({x},{y}): {a} vs {b}");
        }
    }

    #[test]
    fn symmetry_and_decay() {
        let a = singular_sum(0.37, 0.2, 1e-15).unwrap();
        let b = singular_sum(-0.37, -0.2, 1e-15).unwrap();
        assert!((a - b).norm() < 1e-13);
        assert!(singular_sum(0.3, 5.0, 1e-15).unwrap().norm() < 1e-6);
        assert_eq!(imag_singular_sum(0.0, 0.4, 1e-15).unwrap(), 0.0);
    }

    #[test]
    fn regular_sum_closed_form() {
        let a = regular_sum_closed(0.2, 0.3).unwrap();
        let b = regular_sum_terms(0.2, 0.3, 1e-16).unwrap();
        assert!((a - b).norm() < 1e-12);
        assert!(combination_identity_residual(0.2, 0.3).unwrap().norm() < 1e-12);
        assert!(combination_identity_residual(0.2, -0.3).unwrap().norm() < 1e-12);
    }

    #[test]
    fn cosine_rule() {
        assert!((cosine_sum_rule(1, 0) - 2.0).abs() < 1e-12);
        assert!((cosine_sum_rule(3, 0) - 32.0).abs() < 1e-10);
        assert!((cosine_sum_rule(3, 2) - 32.0).abs() < 1e-10);
    }

    #[test]
    fn barnes_sum() {
        let s = barnes_alternating_sum(1e-14).unwrap();
        assert!((s.value.re - barnes_alternating_target()).abs() < 1e-10, "{} vs {}", s.value.re, barnes_alternating_target());
    }

    #[test]
    fn least_squares_line() {
        let xs: Vec<f64> = (0..10).map(|i| i as f64).collect();
        let data: Vec<f64> = xs.iter().map(|x| 3.0 * x - 1.0).collect();
        let (c, _) = least_squares(&[xs, vec![1.0; 10]], &data).unwrap();
        assert!((c[0] - 3.0).abs() < 1e-12 && (c[1] + 1.0).abs() < 1e-12);
    }
}
