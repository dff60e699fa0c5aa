use boundary_scope::mordell::*;
use boundary_scope::{c64, C64};
use std::f64::consts::PI;

// J on the upper side of the negative axis, frozen from an independent
// high-precision evaluation of the contour integral
const UPPER_AXIS: [(f64, f64, f64); 4] = [
    (-0.2, 6.5118046931e-08, 0.0800722418741125),
    (-1.0, 0.0337882119139979, 0.2340971556231195),
    (-PI, 0.30449632060092696, 0.30449632060092696),
    (-5.0, 0.40446311724510214, 0.21463919102558504),
];

#[test]
fn quadrature_oracle_and_bounds() {
    let j1 = j_quadrature(c64(1.0, 0.0), 1e-14).unwrap().value;
    assert!((j1.re - 0.14399034099605580051).abs() < 1e-14);
    for &t in &[1e-3, 0.05, 0.3, 1.0, 2.0, 7.0] {
        let j = j_quadrature(c64(t, 0.0), 1e-14).unwrap().value.re;
        assert!(j > 0.0 && j <= (PI * t / 3.0).sqrt() / 6.0);
    }
    assert!(matches!(j_quadrature(c64(0.0, 1.0), 1e-10), Err(boundary_scope::Error::Domain(_))));
}

#[test]
fn contour_shift_invariance() {
    for &t in &[c64(1.0, 0.0), c64(0.4, 0.9), c64(-1.0, 0.3)] {
        let a = j_mellin_barnes(t, 1e-14, 0.3).unwrap().value;
        let b = j_mellin_barnes(t, 1e-14, 0.7).unwrap().value;
        assert!((a - b).norm() < 1e-11, "{t}");
    }
}

#[test]
fn contour_route_stalls_at_natural_boundary() {
    assert!(j_mellin_barnes_polar(1.0, 1.5 * PI - 0.01, 1e-10, 0.5).is_err());
    assert!(j_mellin_barnes_polar(1.0, -1.5 * PI + 0.01, 1e-10, 0.5).is_err());
    assert!(j_mellin_barnes_polar(1.0, 1.5 * PI - 0.06, 1e-10, 0.5).is_ok());
}

#[test]
fn negative_axis_oracles() {
    for &(t, re, im) in &UPPER_AXIS {
        let want = c64(re, im);
        let mb = j_mellin_barnes_polar(-t, PI, 1e-14, 0.5).unwrap().value;
        let du = j_dual(t, Branch::Upper, dual_auto_kmax(c64(t, 0.0))).unwrap().value;
        assert!((mb - want).norm() < 1e-12, "MB at {t}: {mb}");
        assert!((du - want).norm() < 1e-12, "dual at {t}: {du}");
        let dl = j_dual(t, Branch::Lower, 800).unwrap().value;
        assert!((dl - du.conj()).norm() < 1e-15);
        let mbl = j_mellin_barnes_polar(-t, -PI, 1e-14, 0.5).unwrap().value;
        assert!((mbl - dl).norm() < 1e-12);
    }
    let a = j_mellin_barnes(c64(-0.1, 0.0), 1e-13, 0.5).unwrap().value;
    let b = j_dual(-0.1, Branch::Upper, 800).unwrap().value;
    assert!((a - b).norm() < 1e-9);
}

#[test]
fn false_theta_convergence() {
    let t = c64(-0.5, 0.0);
    let a = psi_false_theta(t, 200).unwrap();
    let b = psi_false_theta(t, 400).unwrap();
    assert!((a - b).norm() < 1e-14);
    assert!(matches!(psi_false_theta(c64(0.1, 1.0), 10), Err(boundary_scope::Error::Divergence(_))));
    // for real t every omitted pair is positive, so the error exceeds the
    // first omitted pair; with fast decay it stays within twice that pair
    let t = c64(-0.5, 0.0);
    let exact = psi_false_theta(t, 400).unwrap();
    for k in [1usize, 2, 3] {
        let err = (psi_false_theta(t, k).unwrap() - exact).norm();
        let first = psi_truncation_bound(t, k);
        assert!(err >= first && err <= 2.0 * first, "k = {k}");
    }
    let t = c64(-2e-4, 0.0);
    assert!(psi_auto_kmax(t) <= 800);
}

#[test]
fn reflection_relation() {
    for &(x, y) in &[(-0.5, 0.3), (-1.0, 0.5), (-2.0, 1.5), (-0.3, 0.25)] {
        assert!(j_reflection_residual(x, y, 1e-13).unwrap().norm() < 1e-8, "({x}, {y})");
    }
    assert!(j_reflection_residual(0.5, 0.3, 1e-10).is_err());
    assert!(j_reflection_residual(-1.0, -0.5, 1e-10).is_err());
}

#[test]
fn decomposition_parts_parity_in_y() {
    for &(x, y) in &[(-0.5, 0.3), (-1.2, 0.7)] {
        let k = dual_auto_kmax(c64(x, y));
        let (a, b) = dual_parts(c64(x, y), k).unwrap();
        let (c, d) = dual_parts(c64(x, -y), k).unwrap();
        // A, Ã even; B, B̃ odd
        assert!((a.re - c.re).abs() < 1e-10 && (b.re - d.re).abs() < 1e-10);
        assert!((a.im + c.im).abs() < 1e-10 && (b.im + d.im).abs() < 1e-10);
    }
}

#[test]
fn reflection_sum_approaches_axis_values() {
    // as y → 0⁺ both Arg θ and 2π − θ approach π from either side of the upper
    // branch, so the sum tends to 2J(x + i0) = 2Ã + 2iA
    let x = -0.5;
    let axis = 2.0 * j_dual(x, Branch::Upper, 800).unwrap().value;
    let (first, second) = dual_parts(c64(x, 0.0), 800).unwrap();
    assert!((axis - (2.0 * second.re + c64(0.0, 2.0 * first.re))).norm() < 1e-15);
    let r = C64::new(x, 1e-6).norm();
    let theta = C64::new(x, 1e-6).arg();
    let near = j_mellin_barnes_polar(r, theta, 1e-13, 0.5).unwrap().value
        + j_mellin_barnes_polar(r, 2.0 * PI - theta, 1e-13, 0.5).unwrap().value;
    assert!((near - axis).norm() < 1e-5, "{near} {axis}");
}

#[test]
fn self_dual_point() {
    let t = c64(-PI, 0.0);
    assert!((PI * PI / t - t).norm() < 1e-15);
    let a = j_mellin_barnes_polar(PI, PI, 1e-14, 0.5).unwrap().value;
    let b = j_dual(-PI, Branch::Upper, 100).unwrap().value;
    assert!((a - b).norm() < 1e-10);
}

#[test]
fn fig2_scan_shape() {
    let t = fig2_scan(-2e-4, 0.5, 1.5, 123, 800, 1.0).unwrap();
    assert_eq!(t.len(), 123);
    assert_eq!(t.headers, ["y", "re_J", "im_J", "branch_sign"]);
    assert!(t.rows.iter().all(|r| r[0] > 0.5 && r[0] < 1.5 && r[3] == 1.0));
    assert!(fig2_scan(2e-4, 0.5, 1.5, 10, 800, 1.0).is_err());
}
