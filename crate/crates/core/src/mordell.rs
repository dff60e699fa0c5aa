//! The Mordell integral J(t) = ∫₀^∞ e^{−3u²/t} sinh u / sinh 3u du: direct
//! quadrature, its Mellin–Barnes continuation to |Arg t| < 3π/2, and the
//! false-theta decomposition on and off the negative real axis.

use crate::error::{finite, Error, Result};
use crate::quadrature::{integrate_half_line, integrate_vertical_line};
use crate::scan::ScanTable;
use crate::special_fn::{hurwitz_zeta, log_gamma};
use crate::{c64, C64};
use rayon::prelude::*;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MordellRoute {
    Quadrature,
    MellinBarnes,
    DualDecomposition,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MordellEvaluation {
    pub t: C64,
    pub value: C64,
    pub route: MordellRoute,
    pub k_max: Option<usize>,
}

/// Which side of the negative axis the decomposition is anchored on:
/// J(t + i0) (`Upper`, Arg t = π) or J(t − i0) (`Lower`, Arg t = −π).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Upper,
    Lower,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Upper => 1.0,
            Branch::Lower => -1.0,
        }
    }
}

/// J(t) by exp-sinh quadrature, Re t > 0.
pub fn j_quadrature(t: C64, tol: f64) -> Result<MordellEvaluation> {
    if !(t.re > 0.0) {
        return Err(Error::Domain(format!("the Mordell integral converges only for Re t > 0, got t = {t}")));
    }
    let a = 3.0 * t.inv();
    let r = integrate_half_line(
        |u| {
            // sinh u / sinh 3u = 1/(3 + 4 sinh²u)
            let s = u.sinh();
            Ok((-a * (u * u)).exp() / (3.0 + 4.0 * s * s))
        },
        tol,
    )?;
    Ok(MordellEvaluation { t, value: r.value, route: MordellRoute::Quadrature, k_max: None })
}

/// Closest approach to |Arg t| = 3π/2 accepted by the contour route.
pub const MB_ARG_MARGIN: f64 = 0.05;

/// J at t = r e^{iθ}, |θ| < 3π/2, from the Mellin–Barnes integral. The angle
/// is taken as given, so θ beyond ±π reaches the continuation across the
/// negative axis.
pub fn j_mellin_barnes_polar(r: f64, theta: f64, tol: f64, re_u: f64) -> Result<MordellEvaluation> {
    if !(re_u > 0.0 && re_u < 1.0) {
        return Err(Error::Domain(format!("contour abscissa {re_u} outside (0, 1)")));
    }
    if !(r > 0.0) || theta.abs() > 1.5 * PI - MB_ARG_MARGIN {
        return Err(Error::Domain(format!(
            "contour route needs |t| > 0 and |Arg t| ≤ 3π/2 − {MB_ARG_MARGIN}, got |t| = {r}, Arg t = {theta:.4}"
        )));
    }
    let ln_t = c64(r.ln(), theta);
    let ln2 = 2f64.ln();
    let ln3 = 3f64.ln();
    let v = integrate_vertical_line(
        |u| {
            let w = (1.0 - u) * 0.5;
            let log_part = w * ln_t - u * ln2 - (0.5 + 0.5 * u) * ln3 + log_gamma(w)? + log_gamma(u)?;
            let hz = hurwitz_zeta(u, 1.0 / 3.0)? - hurwitz_zeta(u, 2.0 / 3.0)?;
            Ok(log_part.exp() * hz)
        },
        re_u,
        2.0 * tol,
    )?;
    Ok(MordellEvaluation {
        t: C64::from_polar(r, theta),
        value: finite(0.5 * v.value, "Mordell contour integral")?,
        route: MordellRoute::MellinBarnes,
        k_max: None,
    })
}

/// [`j_mellin_barnes_polar`] with the principal argument of t.
pub fn j_mellin_barnes(t: C64, tol: f64, re_u: f64) -> Result<MordellEvaluation> {
    j_mellin_barnes_polar(t.norm(), t.arg(), tol, re_u)
}

/// Smallest k with |Re t|(3k+2)²/3 > 36.
pub fn psi_auto_kmax(t: C64) -> usize {
    let a = t.re.abs().max(1e-300);
    let k = (((108.0 / a).sqrt() - 2.0) / 3.0).ceil();
    k.clamp(1.0, 1e8) as usize
}

/// Ψ²₃(1/q) = Σ_{k=0}^{k_max} (e^{t(3k+1)²/3} − e^{t(3k+2)²/3}) for Re t < 0.
pub fn psi_false_theta(t: C64, k_max: usize) -> Result<C64> {
    if !(t.re < 0.0) {
        return Err(Error::Divergence(format!("false theta series needs Re t < 0, got t = {t}")));
    }
    let mut acc = c64(0.0, 0.0);
    for k in (0..=k_max.max(1)).rev() {
        let a = (3 * k + 1) as f64;
        let b = (3 * k + 2) as f64;
        acc += (t * (a * a / 3.0)).exp() - (t * (b * b / 3.0)).exp();
    }
    finite(acc, "false theta")
}

/// Magnitude of the first omitted pair of [`psi_false_theta`]. For real t the
/// omitted pairs are all positive, so the actual error is larger.
pub fn psi_truncation_bound(t: C64, k_max: usize) -> f64 {
    let k = k_max.max(1) + 1;
    let a = (3 * k + 1) as f64;
    let b = (3 * k + 2) as f64;
    ((t * (a * a / 3.0)).exp() - (t * (b * b / 3.0)).exp()).norm()
}

/// The two pieces −t√(π/(−12t))Ψ²₃(1/q) = A + iB and (π/√12)Ψ²₃(1/q̃) = Ã + iB̃,
/// continued off the axis with the principal square root.
pub fn dual_parts(t: C64, k_max: usize) -> Result<(C64, C64)> {
    if !(t.re < 0.0) {
        return Err(Error::Domain(format!("the dual decomposition needs Re t < 0, got t = {t}")));
    }
    let first = -t * (PI / (-12.0 * t)).sqrt() * psi_false_theta(t, k_max)?;
    let dual_t = PI * PI / t;
    let second = PI / 12f64.sqrt() * psi_false_theta(dual_t, k_max)?;
    Ok((first, second))
}

/// ∓it√(π/(−12t))Ψ²₃(1/q) + (π/√12)Ψ²₃(1/q̃), continued to complex t with
/// Re t < 0. `Upper` gives J(t + i0) on the axis and covers Arg t ∈ (π/2, 3π/2).
pub fn j_dual_continued(t: C64, branch: Branch, k_max: usize) -> Result<MordellEvaluation> {
    let (first, second) = dual_parts(t, k_max)?;
    // ∓it√(π/(−12t))Ψ = ±i·(−t√(π/(−12t))Ψ)
    let value = c64(0.0, branch.sign()) * first + second;
    Ok(MordellEvaluation { t, value, route: MordellRoute::DualDecomposition, k_max: Some(k_max) })
}

/// J(t ± i0) on the negative real axis.
pub fn j_dual(t: f64, branch: Branch, k_max: usize) -> Result<MordellEvaluation> {
    if !(t < 0.0) {
        return Err(Error::Domain(format!("j_dual needs t < 0, got {t}")));
    }
    j_dual_continued(c64(t, 0.0), branch, k_max)
}

/// k_max covering both series of the decomposition at t.
pub fn dual_auto_kmax(t: C64) -> usize {
    psi_auto_kmax(t).max(psi_auto_kmax(PI * PI / t))
}

/// [J(x+iy) + J(x−iy)] − [2Ã + 2iA] with both J from the contour route at
/// Arg = θ and 2π − θ.
pub fn j_reflection_residual(x: f64, y: f64, tol: f64) -> Result<C64> {
    let t = c64(x, y);
    let theta = t.arg();
    if !(x < 0.0 && y > 0.0 && theta > 0.5 * PI && theta < PI) {
        return Err(Error::Domain(format!("reflection needs π/2 < Arg(x+iy) < π, got ({x}, {y})")));
    }
    let r = t.norm();
    let j_up = j_mellin_barnes_polar(r, theta, tol, 0.5)?.value;
    let j_down = j_mellin_barnes_polar(r, 2.0 * PI - theta, tol, 0.5)?.value;
    let (first, second) = dual_parts(t, dual_auto_kmax(t))?;
    Ok(j_up + j_down - (2.0 * second.re + c64(0.0, 2.0 * first.re)))
}

/// Upper-branch decomposition at t = re_t + s·iy, y in (y_lo, y_hi), where s is
/// the sign of Im t. Columns: y, re_J, im_J, branch_sign.
pub fn fig2_scan(re_t: f64, y_lo: f64, y_hi: f64, points: usize, k_max: usize, im_sign: f64) -> Result<ScanTable> {
    if !(re_t < 0.0) {
        return Err(Error::Domain(format!("fig 2 scan needs Re t < 0, got {re_t}")));
    }
    if points == 0 || !(y_hi > y_lo) {
        return Err(Error::Domain("fig 2 scan needs points ≥ 1 and y_hi > y_lo".into()));
    }
    let s = if im_sign < 0.0 { -1.0 } else { 1.0 };
    let h = (y_hi - y_lo) / points as f64;
    let rows: Vec<Vec<f64>> = (0..points)
        .into_par_iter()
        .map(|i| {
            let y = y_lo + (i as f64 + 0.5) * h;
            let j = j_dual_continued(c64(re_t, s * y), Branch::Upper, k_max)?.value;
            Ok(vec![y, j.re, j.im, s])
        })
        .collect::<Result<_>>()?;
    let mut t = ScanTable::new(&["y", "re_J", "im_J", "branch_sign"]);
    for r in rows {
        t.push(r);
    }
    Ok(t)
}

/// Sign changes of `col` per unit y over rows with y in [lo, hi].
pub fn oscillation_rate(table: &ScanTable, col: &str, lo: f64, hi: f64) -> f64 {
    let (Some(ys), Some(vs)) = (table.column("y"), table.column(col)) else {
        return 0.0;
    };
    let sel: Vec<f64> = ys.iter().zip(&vs).filter(|(y, _)| **y >= lo && **y <= hi).map(|(_, v)| *v).collect();
    let changes = sel.windows(2).filter(|w| (w[0] < 0.0) != (w[1] < 0.0)).count();
    changes as f64 / (hi - lo)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadrature_reference() {
        let j = j_quadrature(c64(1.0, 0.0), 1e-14).unwrap().value;
        assert!((j.re - 0.14399034099605580051).abs() < 1e-14);
    }

    #[test]
    fn small_t_gaussian_limit() {
        let t = 1e-3;
        let j = j_quadrature(c64(t, 0.0), 1e-15).unwrap().value.re;
        let g = (PI * t / 3.0).sqrt() / 6.0;
        assert!(j > 0.0 && j <= g && (j - g).abs() / g < 1e-2);
    }

    #[test]
    fn contour_route_matches_quadrature() {
        let a = j_mellin_barnes(c64(1.0, 0.0), 1e-13, 0.5).unwrap().value;
        assert!((a.re - 0.14399034099605580051).abs() < 1e-11 && a.im.abs() < 1e-11, "{a}");
    }

    #[test]
    fn psi_leading_term() {
        let t = c64(-50.0, 0.0);
        let p = psi_false_theta(t, 10).unwrap();
        let want = (-50.0f64 / 3.0).exp() - (-200.0f64 / 3.0).exp();
        assert!((p.re - want).abs() < 1e-14 * want, "{p} {want}");
    }

    #[test]
    fn dual_reference_values() {
        let j = j_dual(-1.0, Branch::Upper, 200).unwrap().value;
        assert!((j - c64(0.0337882119139979, 0.2340971556231195)).norm() < 1e-13);
        let jm = j_dual(-1.0, Branch::Lower, 200).unwrap().value;
        assert!((jm - j.conj()).norm() < 1e-15);
        let jp = j_dual(-PI, Branch::Upper, 200).unwrap().value;
        assert!((jp - 0.30449632060092696 * c64(1.0, 1.0)).norm() < 1e-13);
    }

    #[test]
    fn oscillation_counter() {
        let mut t = ScanTable::new(&["y", "re_J"]);
        for i in 0..100 {
            let y = i as f64 / 100.0;
            t.push(vec![y, (20.0 * PI * y).sin() + 0.01]);
        }
        let r = oscillation_rate(&t, "re_J", 0.0, 0.99);
        assert!((r - 20.0).abs() < 2.5, "{r}");
    }
}
