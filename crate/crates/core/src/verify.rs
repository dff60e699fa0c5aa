//! Identity-verification suites. Each check recomputes one invariant from
//! independent routes and reports pass/fail with the measured deviation.

use crate::boundary::{
    barnes_alternating_sum, barnes_alternating_target, classify_boundary_point, cosine_sum_rule, log_grid,
    power_law_bound, reflection_residual, singular_sum, singularity_fit, RationalAngle,
};
use crate::divisor::{check_sigma_identities, fig1_rows_within_bounds, fig1_table, DivisorTable, SIGMA_UPPER};
use crate::error::Result;
use crate::legfn_cs::{cs_identity_residual, gamma_hat, leg_asymptotic, leg_asymptotic_term, leg_p_root, one_point, LegRoute};
use crate::mordell::{
    dual_auto_kmax, fig2_scan, j_dual, j_mellin_barnes, j_mellin_barnes_polar, j_quadrature, oscillation_rate, Branch,
};
use crate::resurgence::{borel_pole_coeffs, laurent_limit, lateral_difference, stokes_discontinuity, LATERAL_OFFSET};
use crate::v_function::{
    v_borel_laplace, v_integral, v_loggamma_sum, v_mellin_barnes, v_series_coeff, v_series_coeff_bernoulli,
    v_series_coeff_dirichlet,
};
use crate::{c64, C64};
use num_traits::One;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    V,
    Boundary,
    Divisor,
    Resurgence,
    Cs,
    Mordell,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::V, Suite::Boundary, Suite::Divisor, Suite::Resurgence, Suite::Cs, Suite::Mordell];

    pub fn name(self) -> &'static str {
        match self {
            Suite::V => "v",
            Suite::Boundary => "boundary",
            Suite::Divisor => "divisor",
            Suite::Resurgence => "resurgence",
            Suite::Cs => "cs",
            Suite::Mordell => "mordell",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

/// Outcome of one invariant.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {}/{}: {}", self.suite, self.name, self.detail)
    }
}

/// A measured deviation against its threshold.
fn within(dev: f64, limit: f64) -> (bool, String) {
    (dev < limit, format!("max deviation {dev:.3e} (limit {limit:.0e})"))
}

struct Runner {
    suite: Suite,
    out: Vec<Check>,
}

impl Runner {
    fn check(&mut self, name: &str, f: impl FnOnce() -> Result<(bool, String)>) {
        let (passed, detail) = match f() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        self.out.push(Check { suite: self.suite, name: name.to_string(), passed, detail });
    }
}

/// Evaluation tolerance used inside the suites for a user tolerance `tol`:
/// three digits tighter, floored at 1e−14.
pub fn inner_tol(tol: f64) -> f64 {
    (tol * 1e-3).max(1e-14)
}

pub fn run_suite(suite: Suite, tol: f64) -> Vec<Check> {
    let mut r = Runner { suite, out: Vec::new() };
    let t = inner_tol(tol);
    match suite {
        Suite::V => v_suite(&mut r, t),
        Suite::Boundary => boundary_suite(&mut r, t),
        Suite::Divisor => divisor_suite(&mut r),
        Suite::Resurgence => resurgence_suite(&mut r, t),
        Suite::Cs => cs_suite(&mut r, t),
        Suite::Mordell => mordell_suite(&mut r, t),
    }
    r.out
}

pub fn run_all(tol: f64) -> Vec<Check> {
    Suite::ALL.into_iter().flat_map(|s| run_suite(s, tol)).collect()
}

/// The N values of the four-route comparison.
pub fn route_test_points() -> Vec<C64> {
    vec![
        c64(2.0, 0.0),
        c64(3.0, 0.0),
        c64(5.0, 0.0),
        c64(10.0, 0.0),
        c64(1.0, 1.0),
        C64::from_polar(3.0, PI / 3.0),
    ]
}

/// Largest pairwise spread among the four routes at N.
pub fn four_route_spread(n: C64, tol: f64) -> Result<f64> {
    let vals = [
        v_integral(n, tol)?.value,
        v_mellin_barnes(n, tol, -1.0)?.value,
        v_loggamma_sum(n, tol)?.value,
        v_borel_laplace(n, -n.arg(), tol)?.value,
    ];
    let mut worst: f64 = 0.0;
    for i in 0..4 {
        for j in i + 1..4 {
            worst = worst.max((vals[i] - vals[j]).norm());
        }
    }
    Ok(worst)
}

fn v_suite(r: &mut Runner, tol: f64) {
    r.check("four-route agreement", || {
        let mut worst: f64 = 0.0;
        for n in route_test_points() {
            worst = worst.max(four_route_spread(n, tol)?);
        }
        Ok(within(worst, 1e-9))
    });
    r.check("c1 = -pi^2/384", || Ok(within((v_series_coeff(1) + PI * PI / 384.0).abs(), 1e-14)));
    r.check("coefficient triple identity n <= 12", || {
        let mut worst: f64 = 0.0;
        for n in 1..=12 {
            let a = v_series_coeff(n);
            let b = v_series_coeff_bernoulli(n);
            let c = v_series_coeff_dirichlet(n, 4000, true);
            let scale = a.abs().max(1.0);
            worst = worst.max((a - b).abs() / scale).max((a - c).abs() / scale);
        }
        Ok(within(worst, 1e-12))
    });
}

/// 50 (x, y) points with both signs of y.
pub fn reflection_grid() -> Vec<(f64, f64)> {
    let xs = [0.1, 0.23, 0.37, 0.5, 0.61];
    let ys = [0.05, 0.1, 0.2, 0.35, 0.6];
    let mut g = Vec::new();
    for &x in &xs {
        for &y in &ys {
            g.push((x, y));
            g.push((x, -y));
        }
    }
    g
}

/// (predicted, fitted) leading coefficient at x = num/den.
pub fn boundary_fit(num: i64, den: i64, tol: f64) -> Result<(f64, f64)> {
    let x = RationalAngle::new(num, den)?;
    let fit = singularity_fit(x, &log_grid(1e-4, 1e-2, 25), tol)?;
    Ok((classify_boundary_point(x).predicted_coeff, fit.fitted_coeff))
}

fn boundary_suite(r: &mut Runner, tol: f64) {
    r.check("reflection identity on 50-point grid", || {
        let mut worst: f64 = 0.0;
        for (x, y) in reflection_grid() {
            worst = worst.max(reflection_residual(x, y, tol)?.norm());
        }
        Ok(within(worst, 1e-8))
    });
    r.check("Barnes-constant alternating sum", || {
        let s = barnes_alternating_sum(tol)?;
        Ok(within((s.value.re - barnes_alternating_target()).abs(), 1e-10))
    });
    r.check("log slope at x=1/2", || {
        let (_, c) = boundary_fit(1, 2, tol)?;
        Ok(within((c - 1.0).abs(), 0.02))
    });
    r.check("1/y^2 coefficient at x=1/3", || {
        let (p, c) = boundary_fit(1, 3, tol)?;
        Ok(within((c / p - 1.0).abs(), 0.02))
    });
    r.check("coefficient ratio x=1/5 vs x=1/7", || {
        let (_, a) = boundary_fit(1, 5, tol)?;
        let (_, b) = boundary_fit(1, 7, tol)?;
        Ok(within(((a / b) / (343.0 / 125.0) - 1.0).abs(), 0.03))
    });
    r.check("cosine sum rule p <= 8, q <= 5", || {
        let mut worst: f64 = 0.0;
        for p in 1..=8 {
            for q in 1..=5 {
                let want = 2f64.powi(2 * p as i32 - 1);
                worst = worst.max((cosine_sum_rule(p, q) - want).abs() / want);
            }
        }
        Ok(within(worst, 1e-10))
    });
    r.check("power-law bound |S| <= 1/(2y^2)", || {
        let mut worst: f64 = 0.0;
        for i in 0..40 {
            let x = 0.013 + 0.0247 * i as f64;
            for &y in &[1e-3, 1e-2, 0.1, 0.5] {
                worst = worst.max(singular_sum(x, y, tol)?.norm() / power_law_bound(y));
            }
        }
        Ok((worst <= 1.0, format!("max |S|·2y² = {worst:.6}")))
    });
}

fn divisor_suite(r: &mut Runner) {
    r.check("n^2 sigma identities n <= 1e4", || {
        let bad = (1..=10_000u64).find(|&n| !check_sigma_identities(n));
        Ok((bad.is_none(), bad.map_or("exact for all n".into(), |n| format!("fails at n = {n}"))))
    });
    r.check("bounds 1 <= sigma < pi^2/8 for n <= 1e5", || {
        let t = DivisorTable::new(100_000);
        Ok((fig1_rows_within_bounds(&t), format!("upper bound {SIGMA_UPPER:.15}")))
    });
    r.check("sieve agrees with direct divisor sums n <= 3000", || {
        let t = DivisorTable::new(3000);
        let bad = (1..=3000u64).find(|&n| t.sigma_o_minus2[n as usize] != crate::divisor::sigma_o_minus2(n));
        Ok((bad.is_none(), bad.map_or("exact".into(), |n| format!("differs at n = {n}"))))
    });
    r.check("fig 1 table", || {
        let t = fig1_table(3000);
        let ok = t.len() == 3000 && t.rows.iter().all(|row| row[1] >= 1.0 && row[1] < SIGMA_UPPER);
        Ok((ok, format!("{} rows", t.len())))
    });
    r.check("sigma(1) = 1", || Ok((crate::divisor::sigma_o_minus2(1).is_one(), "exact".into())));
}

/// Test points N with Im N ≤ −1 for the Stokes comparison.
pub fn stokes_test_points() -> Vec<C64> {
    vec![c64(1.0, -1.0), c64(2.0, -1.5), c64(0.5, -2.0)]
}

fn resurgence_suite(r: &mut Runner, tol: f64) {
    r.check("Laurent limit at t = 2 pi i", || {
        let want = borel_pole_coeffs(1).double_pole_coeff;
        let got = laurent_limit(1, 1e-7, 0.25 * PI)?;
        Ok(within((got - want).norm(), 1e-6))
    });
    r.check("lateral difference vs Stokes series", || {
        let mut worst: f64 = 0.0;
        for n in stokes_test_points() {
            let lat = lateral_difference(n, LATERAL_OFFSET, tol)?;
            let st = stokes_discontinuity(n, 60)?;
            worst = worst.max((lat - st).norm() / st.norm());
        }
        Ok(within(worst, 1e-4))
    });
}

fn cs_suite(r: &mut Runner, _tol: f64) {
    r.check("leg_p three-route agreement N in {2,3,5,8}", || {
        let mut worst: f64 = 0.0;
        for n in [2u32, 3, 5, 8] {
            // j = 0 (𝒵 = 1) has no Γ̂ representation
            for j in 1..2 * n as i64 {
                let a = leg_p_root(n, j, LegRoute::FiniteProduct)?.value;
                let b = leg_p_root(n, j, LegRoute::SqrtProduct)?.value;
                let c = leg_p_root(n, j, LegRoute::IntegralRep)?.value;
                worst = worst.max((a - b).norm()).max((a - c).norm());
            }
        }
        Ok(within(worst, 1e-10))
    });
    r.check("P = Z(2N,2N)^2 / Z(N,N)^8 for N <= 50", || {
        let mut worst: f64 = 0.0;
        for n in 1..=50 {
            worst = worst.max(cs_identity_residual(n)?);
        }
        Ok(within(worst, 1e-9))
    });
    r.check("one-point function via v and via P", || {
        let mut worst: f64 = 0.0;
        for n in [1u32, 2, 3, 4, 6, 8, 12, 16] {
            let o = one_point(n, 1e-13)?;
            worst = worst.max((o.via_v - o.via_p).abs());
        }
        Ok(within(worst, 1e-8))
    });
    r.check("leg asymptotics at N=40 bounded by first omitted term", || {
        let (big, k) = (40u32, 2i64);
        let exact = gamma_hat(big, k, 1e-15)?;
        let mut report = Vec::new();
        let mut ok = true;
        for n_max in 1..=5 {
            let err = (leg_asymptotic(big, k, n_max)? - exact).norm();
            let bound = leg_asymptotic_term(big, k, n_max + 1).abs();
            ok &= err <= bound;
            report.push(format!("n={n_max}: {err:.2e}/{bound:.2e}"));
        }
        Ok((ok, report.join(", ")))
    });
}

/// Points on the negative axis for the contour/dual comparison.
pub const NEGATIVE_AXIS_POINTS: [f64; 4] = [-0.2, -1.0, -PI, -5.0];

/// Sign-change rates of Re J on the first and last tenth of the figure-2 scan range
/// for both signs of Im t: (minus_low, minus_high, plus_low, plus_high).
pub fn fig2_oscillation(points: usize) -> Result<[f64; 4]> {
    let m = fig2_scan(-2e-4, 0.5, 1.5, points, 800, -1.0)?;
    let p = fig2_scan(-2e-4, 0.5, 1.5, points, 800, 1.0)?;
    Ok([
        oscillation_rate(&m, "re_J", 0.5, 0.6),
        oscillation_rate(&m, "re_J", 1.4, 1.5),
        oscillation_rate(&p, "re_J", 0.5, 0.6),
        oscillation_rate(&p, "re_J", 1.4, 1.5),
    ])
}

fn mordell_suite(r: &mut Runner, tol: f64) {
    r.check("quadrature vs contour for t in {0.3, 1, 2}", || {
        let mut worst: f64 = 0.0;
        for t in [0.3, 1.0, 2.0] {
            let a = j_quadrature(c64(t, 0.0), tol)?.value;
            let b = j_mellin_barnes(c64(t, 0.0), tol, 0.5)?.value;
            worst = worst.max((a - b).norm());
        }
        Ok(within(worst, 1e-10))
    });
    r.check("contour vs dual decomposition on the upper branch", || {
        let mut worst: f64 = 0.0;
        for t in NEGATIVE_AXIS_POINTS {
            let a = j_mellin_barnes_polar(-t, PI, tol, 0.5)?.value;
            let b = j_dual(t, Branch::Upper, dual_auto_kmax(c64(t, 0.0)))?.value;
            worst = worst.max((a - b).norm());
        }
        Ok(within(worst, 1e-8))
    });
    r.check("fig 2 stable under k_max 800 -> 1200", || {
        let a = fig2_scan(-2e-4, 0.5, 1.5, 2000, 800, -1.0)?;
        let b = fig2_scan(-2e-4, 0.5, 1.5, 2000, 1200, -1.0)?;
        let mut worst: f64 = 0.0;
        for (u, v) in a.rows.iter().zip(&b.rows) {
            worst = worst.max((u[1] - v[1]).abs()).max((u[2] - v[2]).abs());
        }
        Ok(within(worst, 1e-8))
    });
    r.check("fig 2 oscillation toward Arg t = 3pi/2", || {
        let [ml, mh, pl, ph] = fig2_oscillation(20_000)?;
        let ok = ml >= 10.0 * pl.max(ph).max(1.0);
        Ok((
            ok,
            format!("sign changes per unit y: Im t<0 [{ml:.0}, {mh:.0}], Im t>0 [{pl:.0}, {ph:.0}]"),
        ))
    });
}
