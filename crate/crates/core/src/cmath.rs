//! Complex elementary functions that stay finite where the generic ones
//! overflow or cancel, plus exact-phase trigonometry for rational multiples of π.

use crate::C64;
use std::f64::consts::PI;

/// e^z − 1 without cancellation for small |z|.
pub fn expm1(z: C64) -> C64 {
    let (s, c) = z.im.sin_cos();
    if z.re.abs() < 1.0 && z.im.abs() < 1.0 {
        let h = (0.5 * z.im).sin();
        C64::new(z.re.exp_m1() * c - 2.0 * h * h, z.re.exp() * s)
    } else {
        let e = z.re.exp();
        C64::new(e * c - 1.0, e * s)
    }
}

/// tanh(z) evaluated through e^{−2|Re z|} so it never overflows.
/// Near the poles at iπ(k+½) the cotangent-shifted form keeps full relative accuracy.
pub fn tanh(z: C64) -> C64 {
    if z.re < 0.0 {
        return -tanh(-z);
    }
    // tanh has period iπ; bring Im z into (−π/2, π/2]
    let k = (z.im / PI).round();
    let z = C64::new(z.re, z.im - k * PI);
    if z.im.abs() > 0.25 * PI && z.re < 1.0 {
        // tanh(z) = 1/tanh(z − iπ/2·sign)
        let w = C64::new(z.re, z.im - 0.5 * PI * z.im.signum());
        return tanh_core(w).inv();
    }
    tanh_core(z)
}

fn tanh_core(z: C64) -> C64 {
    if z.re < 0.0 {
        return -tanh_core(-z);
    }
    let m = expm1(-2.0 * z);
    -m / (m + 2.0)
}

/// sinh(z) with a cancellation-free path for small |z|.
pub fn sinh(z: C64) -> C64 {
    if z.norm() < 0.5 {
        (expm1(z) - expm1(-z)) * 0.5
    } else {
        z.sinh()
    }
}

/// ln(1 + z) accurate for small |z|.
pub fn ln_1p(z: C64) -> C64 {
    if z.norm() < 0.25 {
        // ln(1+z) = 2 atanh(z/(2+z))
        let w = z / (z + 2.0);
        let w2 = w * w;
        let mut term = w;
        let mut s = w;
        let mut k = 1.0;
        loop {
            term *= w2;
            k += 2.0;
            let d = term / k;
            s += d;
            if d.norm() <= 1e-18 * s.norm() {
                break;
            }
        }
        s * 2.0
    } else {
        (z + 1.0).ln()
    }
}

/// (p/q) reduced to the residue r in [0, 2q) with p/q ≡ r/q (mod 2).
fn reduce_mod2(p: i64, q: i64) -> (i64, i64) {
    let q = q.abs().max(1);
    (p.rem_euclid(2 * q), q)
}

/// cos(πp/q) with the argument reduced exactly in integers.
pub fn cos_pi_rational(p: i64, q: i64) -> f64 {
    let (r, q) = reduce_mod2(p, q);
    // fold into [0, q]: cos is symmetric about π
    let r = if r > q { 2 * q - r } else { r };
    // now angle in [0, π]; use sin near π/2 for accuracy
    let twice = 2 * r;
    if twice == q {
        0.0
    } else if twice < q {
        let d = (q - twice) as f64 / (2 * q) as f64; // (π/2 − angle)/π
        (PI * d).sin()
    } else {
        let d = (twice - q) as f64 / (2 * q) as f64;
        -(PI * d).sin()
    }
}

/// sin(πp/q) with exact integer range reduction.
pub fn sin_pi_rational(p: i64, q: i64) -> f64 {
    // sin(πp/q) = cos(π(q − 2p)/(2q))
    cos_pi_rational(q - 2 * p, 2 * q)
}

/// e^{iπp/q}.
pub fn exp_i_pi_rational(p: i64, q: i64) -> C64 {
    C64::new(cos_pi_rational(p, q), sin_pi_rational(p, q))
}

/// sin(πx) for real x with reduction modulo 2.
pub fn sin_pi(x: f64) -> f64 {
    let r = x.rem_euclid(2.0);
    let r = if r > 1.0 { r - 2.0 } else { r }; // r in (−1, 1]
    let a = if r > 0.5 {
        1.0 - r
    } else if r < -0.5 {
        -1.0 - r
    } else {
        r
    };
    (PI * a).sin()
}

/// cos(πx) for real x with reduction modulo 2.
pub fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}

/// Parses a complex literal such as `2`, `-1.5i`, `3+4i`, `1e-3-2.5e2i`, `i`.
pub fn parse_complex(s: &str) -> Option<C64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return None;
    }
    if let Some(body) = t.strip_suffix('i').or_else(|| t.strip_suffix('j')) {
        // find split between real and imaginary parts: last +/- not following an exponent marker
        let bytes = body.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            let ch = bytes[k];
            if (ch == b'+' || ch == b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
                split = Some(k);
                break;
            }
        }
        let im_of = |x: &str| -> Option<f64> {
            match x {
                "" | "+" => Some(1.0),
                "-" => Some(-1.0),
                _ => x.parse().ok(),
            }
        };
        match split {
            Some(k) => {
                let re: f64 = body[..k].parse().ok()?;
                let im = im_of(&body[k..])?;
                Some(C64::new(re, im))
            }
            None => Some(C64::new(0.0, im_of(body)?)),
        }
    } else {
        t.parse::<f64>().ok().map(|x| C64::new(x, 0.0))
    }
}

/// Formats a complex value as `a+bi`.
pub fn format_complex(z: C64) -> String {
    let re = crate::scan::fmt_g15(z.re);
    let im = crate::scan::fmt_g15(z.im.abs());
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{re}{sign}{im}i")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tanh_matches_library_and_survives_large_arguments() {
        for &z in &[C64::new(0.3, 0.2), C64::new(-2.0, 1.0), C64::new(1e-9, -1e-9)] {
            assert!((tanh(z) - z.tanh()).norm() < 1e-15 * (1.0 + z.tanh().norm()));
        }
        let big = tanh(C64::new(800.0, 3.0));
        assert!((big - 1.0).norm() < 1e-15);
        assert!((tanh(C64::new(-800.0, 1.0)) + 1.0).norm() < 1e-15);
    }

    #[test]
    fn expm1_small() {
        let z = C64::new(1e-12, 2e-12);
        let e = expm1(z);
        assert!((e - z).norm() < 1e-23);
    }

    #[test]
    fn rational_phases_are_exact_at_special_points() {
        assert_eq!(cos_pi_rational(1, 2), 0.0);
        assert_eq!(cos_pi_rational(3, 2), 0.0);
        assert_eq!(cos_pi_rational(0, 5), 1.0);
        assert_eq!(cos_pi_rational(7, 7), -1.0);
        assert_eq!(sin_pi_rational(5, 1), 0.0);
        assert!((cos_pi_rational(1, 3) - 0.5).abs() < 1e-16);
        assert!((cos_pi_rational(-13, 6) - (13.0 * PI / 6.0).cos()).abs() < 1e-15);
        assert!((sin_pi(2.5) - 1.0).abs() < 1e-16);
        assert_eq!(sin_pi(3.0), 0.0);
    }

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("2"), Some(C64::new(2.0, 0.0)));
        assert_eq!(parse_complex("1+1i"), Some(C64::new(1.0, 1.0)));
        assert_eq!(parse_complex("-0.5-2i"), Some(C64::new(-0.5, -2.0)));
        assert_eq!(parse_complex("i"), Some(C64::new(0.0, 1.0)));
        assert_eq!(parse_complex("-i"), Some(C64::new(0.0, -1.0)));
        assert_eq!(parse_complex("1e-3+2e2i"), Some(C64::new(1e-3, 200.0)));
        assert_eq!(parse_complex("3-1.5i"), Some(C64::new(3.0, -1.5)));
        assert_eq!(parse_complex("x"), None);
        assert_eq!(format_complex(C64::new(1.0, -2.5)), "1-2.5i");
    }
}
