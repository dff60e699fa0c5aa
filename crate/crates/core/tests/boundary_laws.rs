use boundary_scope::boundary::{
    best_law, classify_boundary_point, dominant_sum, log_grid, reflection_residual, singular_sum_rational,
    singularity_fit, RationalAngle, SingularityKind,
};
use num_integer::Integer;

#[test]
fn fits_match_classification_up_to_denominator_20() {
    let grid = log_grid(1e-4, 1e-2, 25);
    let mut worst = (0.0f64, String::new());
    for den in 1..=20i64 {
        for num in 1..=den {
            if num.gcd(&den) != 1 {
                continue;
            }
            let x = RationalAngle::new(num, den).unwrap();
            let class = classify_boundary_point(x);
            let fit = singularity_fit(x, &grid, 1e-13).unwrap();
            assert_eq!(best_law(x, &grid, 1e-13).unwrap(), class.law, "law at x = {x}");
            let dev = (fit.fitted_coeff / class.predicted_coeff - 1.0).abs();
            if dev > worst.0 {
                worst = (dev, x.to_string());
            }
            assert!(dev < 0.05, "x = {x}: fitted {} predicted {}", fit.fitted_coeff, class.predicted_coeff);
        }
    }
    println!("worst relative coefficient deviation {:.3e} at x = {}", worst.0, worst.1);
}

#[test]
fn zero_angle_is_even_over_odd() {
    let x = RationalAngle::new(0, 1).unwrap();
    assert_eq!(classify_boundary_point(x).kind, SingularityKind::EvenOverOdd);
}

#[test]
fn dominant_sum_tracks_real_part() {
    // the difference Re 𝒮 − dominant sum stays bounded as y shrinks
    let x = RationalAngle::new(3, 8).unwrap();
    let ys = log_grid(1e-4, 1e-1, 13);
    let diff = |y: f64| singular_sum_rational(x, y, 1e-13).unwrap().re - dominant_sum(x, y).unwrap();
    let calib = diff(ys[0]).abs().max(1.0);
    for &y in &ys[1..] {
        assert!(diff(y).abs() <= 2.0 * calib, "y = {y}: {} vs {calib}", diff(y));
    }
}

#[test]
fn reflection_on_wide_grid() {
    let mut worst: f64 = 0.0;
    for i in 0..5 {
        let x = 0.07 + 0.2 * i as f64;
        for j in 0..5 {
            let y = 0.05 * (20f64).powf(j as f64 / 4.0);
            for s in [1.0, -1.0] {
                worst = worst.max(reflection_residual(x, s * y, 1e-13).unwrap().norm());
            }
        }
    }
    assert!(worst < 1e-8, "{worst}");
}
