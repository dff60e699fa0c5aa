//! Acceptance criteria, one test per criterion. Each prints a single
//! `criterion N: PASS|FAIL` line with the measured quantities.

use boundary_scope::boundary::{
    barnes_alternating_sum, barnes_alternating_target, classify_boundary_point, cosine_sum_rule, log_grid,
    reflection_residual, singularity_fit, RationalAngle,
};
use boundary_scope::divisor::{check_sigma_identities, fig1_table, DivisorTable, SIGMA_UPPER};
use boundary_scope::legfn_cs::{
    cs_identity_residual, gamma_hat, leg_asymptotic, leg_asymptotic_term, leg_p_root, one_point, LegRoute,
};
use boundary_scope::mordell::{
    dual_auto_kmax, fig2_scan, j_dual, j_mellin_barnes, j_mellin_barnes_polar, j_quadrature, oscillation_rate, Branch,
};
use boundary_scope::resurgence::{laurent_limit_deviation, lateral_difference, stokes_discontinuity};
use boundary_scope::v_function::{
    v_borel_laplace, v_integral, v_loggamma_sum, v_mellin_barnes, v_series_coeff, v_series_coeff_bernoulli,
    v_series_coeff_dirichlet,
};
use boundary_scope::{c64, C64};
use num_rational::Rational64;
use std::f64::consts::PI;
use std::time::Instant;

fn report(n: u32, ok: bool, detail: &str) {
    println!("criterion {n}: {} {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {n} failed: {detail}");
}

#[test]
fn criterion_01_four_route_agreement() {
    let start = Instant::now();
    let ns = [c64(2.0, 0.0), c64(3.0, 0.0), c64(5.0, 0.0), c64(10.0, 0.0), c64(1.0, 1.0), C64::from_polar(3.0, PI / 3.0)];
    let mut worst: f64 = 0.0;
    for n in ns {
        let v = [
            v_integral(n, 1e-13).unwrap().value,
            v_mellin_barnes(n, 1e-13, -1.0).unwrap().value,
            v_loggamma_sum(n, 1e-13).unwrap().value,
            v_borel_laplace(n, -n.arg(), 1e-13).unwrap().value,
        ];
        for i in 0..4 {
            for j in i + 1..4 {
                worst = worst.max((v[i] - v[j]).norm());
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    report(1, worst < 1e-9 && secs < 30.0, &format!("max pairwise deviation {worst:.2e} (< 1e-9), {secs:.2} s (< 30 s)"));
}

#[test]
fn criterion_02_coefficient_triple_identity() {
    let mut worst: f64 = 0.0;
    for n in 1..=12 {
        let a = v_series_coeff(n);
        let b = v_series_coeff_bernoulli(n);
        let c = v_series_coeff_dirichlet(n, 4000, true);
        let s = a.abs().max(1.0);
        worst = worst.max((a - b).abs() / s).max((a - c).abs() / s);
    }
    let c1 = (v_series_coeff(1) + PI * PI / 384.0).abs();
    report(2, worst < 1e-12 && c1 < 1e-14, &format!("triple spread {worst:.2e} (< 1e-12), |c1 + pi^2/384| = {c1:.2e} (< 1e-14)"));
}

#[test]
fn criterion_03_reflection_identity() {
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for i in 0..5 {
        let x = 0.1 + 0.19 * i as f64;
        for j in 0..5 {
            let y = 0.05 + 0.2 * j as f64;
            for s in [1.0, -1.0] {
                worst = worst.max(reflection_residual(x, s * y, 1e-13).unwrap().norm());
                count += 1;
            }
        }
    }
    let barnes = (barnes_alternating_sum(1e-14).unwrap().value.re - barnes_alternating_target()).abs();
    report(
        3,
        count == 50 && worst < 1e-8 && barnes < 1e-10,
        &format!("reflection residual {worst:.2e} on {count} points (< 1e-8), Barnes sum {barnes:.2e} (< 1e-10)"),
    );
}

#[test]
fn criterion_04_boundary_singularity_laws() {
    let start = Instant::now();
    let grid = log_grid(1e-4, 1e-2, 25);
    let fit = |p: i64, q: i64| {
        let x = RationalAngle::new(p, q).unwrap();
        (singularity_fit(x, &grid, 1e-13).unwrap().fitted_coeff, classify_boundary_point(x).predicted_coeff)
    };
    let (half, _) = fit(1, 2);
    let (third, _) = fit(1, 3);
    let target = 7.0 * 1.202_056_903_159_594_2 / (54.0 * PI * PI);
    let (fifth, _) = fit(1, 5);
    let (seventh, _) = fit(1, 7);
    let ratio = fifth / seventh;
    let secs = start.elapsed().as_secs_f64();
    let ok = (half - 1.0).abs() < 0.02
        && (third / target - 1.0).abs() < 0.02
        && (ratio / (343.0 / 125.0) - 1.0).abs() < 0.03
        && secs < 60.0;
    report(
        4,
        ok,
        &format!("slope(1/2) = {half:.6}, coeff(1/3) = {third:.6e} vs {target:.6e}, ratio = {ratio:.6} vs {:.6}, {secs:.2} s", 343.0 / 125.0),
    );
}

#[test]
fn criterion_05_exact_combinatorics() {
    let mut cos_worst: f64 = 0.0;
    for p in 1..=8u32 {
        for q in 1..=5u32 {
            let want = 2f64.powi(2 * p as i32 - 1);
            cos_worst = cos_worst.max((cosine_sum_rule(p, q) - want).abs() / want);
        }
    }
    let identities = (1..=10_000u64).all(check_sigma_identities);
    let t = DivisorTable::new(100_000);
    let bounds = (1..=100_000).all(|n| {
        let s = t.sigma_o_minus2[n];
        s >= Rational64::from_integer(1) && (*s.numer() as f64 / *s.denom() as f64) < SIGMA_UPPER
    });
    report(
        5,
        cos_worst < 1e-10 && identities && bounds,
        &format!("cosine rule {cos_worst:.2e} (< 1e-10), sigma identities exact: {identities}, bounds n <= 1e5: {bounds}"),
    );
}

#[test]
fn criterion_06_borel_plane() {
    let laurent = laurent_limit_deviation(1, 1e-7).unwrap();
    let mut worst: f64 = 0.0;
    for n in [c64(1.0, -1.0), c64(2.0, -1.5), c64(0.5, -2.0)] {
        let s = stokes_discontinuity(n, 60).unwrap();
        let d = lateral_difference(n, 0.15, 1e-14).unwrap();
        worst = worst.max((s - d).norm() / s.norm());
    }
    report(6, laurent < 1e-6 && worst < 1e-4, &format!("Laurent limit deviation {laurent:.2e} (< 1e-6), Stokes relative {worst:.2e} (< 1e-4)"));
}

#[test]
fn criterion_07_leg_and_cs_identities() {
    let mut leg: f64 = 0.0;
    for n in [2u32, 3, 5, 8] {
        for j in 1..2 * n as i64 {
            let a = leg_p_root(n, j, LegRoute::SqrtProduct).unwrap().value;
            let b = leg_p_root(n, j, LegRoute::FiniteProduct).unwrap().value;
            let c = leg_p_root(n, j, LegRoute::IntegralRep).unwrap().value;
            leg = leg.max((a - b).norm()).max((a - c).norm());
        }
    }
    let cs = (1..=50).map(|n| cs_identity_residual(n).unwrap()).fold(0.0f64, f64::max);
    let op = [1u32, 2, 3, 4, 6, 8, 12, 16]
        .iter()
        .map(|&n| {
            let o = one_point(n, 1e-13).unwrap();
            (o.via_v - o.via_p).abs()
        })
        .fold(0.0f64, f64::max);
    let exact = gamma_hat(40, 2, 1e-15).unwrap();
    let mut asym_ok = true;
    let mut asym = Vec::new();
    for n_max in 1..=5 {
        let err = (leg_asymptotic(40, 2, n_max).unwrap() - exact).norm();
        let bound = leg_asymptotic_term(40, 2, n_max + 1).abs();
        asym_ok &= err <= bound;
        asym.push(format!("{err:.3e}/{bound:.3e}"));
    }
    report(
        7,
        leg < 1e-10 && cs < 1e-9 && op < 1e-8 && asym_ok,
        &format!(
            "leg routes {leg:.2e} (< 1e-10), CS identity {cs:.2e} (< 1e-9), one-point {op:.2e} (< 1e-8), asymptotic error/first omitted term at N=40, k=2: [{}]",
            asym.join(", ")
        ),
    );
}

#[test]
fn criterion_08_mordell() {
    let mut qm: f64 = 0.0;
    for t in [0.3, 1.0, 2.0] {
        let a = j_quadrature(c64(t, 0.0), 1e-13).unwrap().value;
        let b = j_mellin_barnes(c64(t, 0.0), 1e-13, 0.5).unwrap().value;
        qm = qm.max((a - b).norm());
    }
    let mut md: f64 = 0.0;
    for t in [-0.2, -1.0, -PI, -5.0] {
        let a = j_mellin_barnes_polar(-t, PI, 1e-13, 0.5).unwrap().value;
        let b = j_dual(t, Branch::Upper, dual_auto_kmax(c64(t, 0.0))).unwrap().value;
        md = md.max((a - b).norm());
    }
    let points = 20_000;
    let a = fig2_scan(-2e-4, 0.5, 1.5, points, 800, -1.0).unwrap();
    let b = fig2_scan(-2e-4, 0.5, 1.5, points, 1200, -1.0).unwrap();
    let mut stab: f64 = 0.0;
    for (u, v) in a.rows.iter().zip(&b.rows) {
        stab = stab.max((u[1] - v[1]).abs()).max((u[2] - v[2]).abs());
    }
    let up = fig2_scan(-2e-4, 0.5, 1.5, points, 800, 1.0).unwrap();
    let minus_low = oscillation_rate(&a, "re_J", 0.5, 0.6);
    let minus_high = oscillation_rate(&a, "re_J", 1.4, 1.5);
    let plus_low = oscillation_rate(&up, "re_J", 0.5, 0.6);
    let plus_high = oscillation_rate(&up, "re_J", 1.4, 1.5);
    // the Im t < 0 panel sits against Arg t = 3π/2, the Im t > 0 panel against π/2
    let contrast = minus_low >= 10.0 * plus_low.max(plus_high).max(1.0);
    report(
        8,
        qm < 1e-10 && md < 1e-8 && stab < 1e-8 && contrast,
        &format!(
            "quad/MB {qm:.2e} (< 1e-10), MB/dual {md:.2e} (< 1e-8), k_max 800 vs 1200 {stab:.2e} (< 1e-8), sign changes per unit y near y=0.5: {minus_low:.0} at Arg->3pi/2 vs {plus_low:.0} at Arg->pi/2 (within the 3pi/2 panel {minus_low:.0} at y=0.5 vs {minus_high:.0} at y=1.5)"
        ),
    );
}

#[test]
fn criterion_09_fig1_reproduction() {
    let t = fig1_table(3000);
    let inside = t.len() == 3000 && t.rows.iter().all(|r| r[1] >= 1.0 && r[1] < SIGMA_UPPER);
    let same = t.to_csv() == fig1_table(3000).to_csv();
    let bin = env!("CARGO_BIN_EXE_boundary-scope");
    let run = |threads: &str| std::process::Command::new(bin).args(["fig", "1", "--threads", threads]).output().unwrap().stdout;
    let cli_same = run("1") == run("8") && run("1") == t.to_csv().into_bytes();
    report(9, inside && same && cli_same, &format!("{} rows inside [1, pi^2/8): {inside}, byte-identical CSV: {}", t.len(), same && cli_same));
}

#[test]
fn criterion_10_verify_all_runtime() {
    let bin = env!("CARGO_BIN_EXE_boundary-scope");
    let start = Instant::now();
    let out = std::process::Command::new(bin).args(["verify", "all", "--threads", "1"]).output().unwrap();
    let secs = start.elapsed().as_secs_f64();
    let code = out.status.code().unwrap_or(-1);
    let text = String::from_utf8_lossy(&out.stdout);
    let failing: Vec<&str> = text.lines().filter(|l| l.starts_with("[FAIL]")).collect();
    report(
        10,
        secs <= 600.0 && (code == 0 || code == 1),
        &format!("verify all finished in {secs:.1} s (<= 600 s), exit {code}, failing invariants: {}", failing.len()),
    );
}
