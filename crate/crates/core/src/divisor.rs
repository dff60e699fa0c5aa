//! Divisor sums σ₋₂ᵒ and σₖ, the generating function of n σ₋₂ᵒ(n) and the
//! Lambert series ℒ_q(2,1).

use crate::error::{finite, Error, Result};
use crate::scan::ScanTable;
use crate::C64;
use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, ToPrimitive, Zero};

/// Upper bound π²/8 = Σ_{l odd} l⁻² of σ₋₂ᵒ.
pub const SIGMA_UPPER: f64 = std::f64::consts::PI * std::f64::consts::PI / 8.0;

fn odd_part(mut n: u64) -> u64 {
    while n % 2 == 0 && n > 0 {
        n /= 2;
    }
    n
}

/// σ₂(m) for m ≥ 1 by trial division.
fn sigma2_u128(m: u64) -> u128 {
    let mut total: u128 = 1;
    let mut rest = m;
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            let mut pk: u128 = 1;
            let mut s: u128 = 1;
            while rest % p == 0 {
                rest /= p;
                pk *= (p as u128) * (p as u128);
                s += pk;
            }
            total *= s;
        }
        p += 1;
    }
    if rest > 1 {
        total *= 1 + (rest as u128) * (rest as u128);
    }
    total
}

/// σ₋₂ᵒ(n) = Σ_{l|n, l odd} l⁻², exactly.
pub fn sigma_o_minus2(n: u64) -> Rational64 {
    assert!(n >= 1, "σ₋₂ᵒ is defined for n ≥ 1");
    // Σ_{d|m} d⁻² = σ₂(m)/m² for the odd part m
    let m = odd_part(n);
    Rational64::new(sigma2_u128(m) as i64, (m as i64) * (m as i64))
}

/// σₖ(n) = Σ_{d|n} dᵏ, exactly (k may be negative).
pub fn sigma_k(n: u64, k: i32) -> BigRational {
    assert!(n >= 1, "σₖ is defined for n ≥ 1");
    let mut acc = BigRational::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            for e in if d * d == n { vec![d] } else { vec![d, n / d] } {
                let base = BigInt::from(e);
                let pow = num_traits::pow(base, k.unsigned_abs() as usize);
                acc += if k >= 0 {
                    BigRational::from_integer(pow)
                } else {
                    BigRational::new(BigInt::one(), pow)
                };
            }
        }
        d += 1;
    }
    acc
}

/// n²σ₋₂ᵒ(n) equals σ₂(n) for odd n and σ₂(n) − σ₂(n/2) for even n.
pub fn check_sigma_identities(n: u64) -> bool {
    let s = sigma_o_minus2(n);
    let lhs = BigRational::new(BigInt::from(*s.numer()) * BigInt::from(n) * BigInt::from(n), BigInt::from(*s.denom()));
    let rhs = if n % 2 == 1 { sigma_k(n, 2) } else { sigma_k(n, 2) - sigma_k(n / 2, 2) };
    lhs == rhs
}

/// Exact table of σ₋₂ᵒ(1..=n_max) and σ₂(1..=n_max) from a smallest-prime-factor sieve.
#[derive(Debug, Clone, PartialEq)]
pub struct DivisorTable {
    pub n_max: usize,
    /// Index 0 is unused.
    pub sigma_o_minus2: Vec<Rational64>,
    pub sigma_2: Vec<u128>,
}

impl DivisorTable {
    pub fn new(n_max: usize) -> Self {
        let spf = smallest_prime_factors(n_max);
        let mut sigma_2 = vec![0u128; n_max + 1];
        let mut sigma_o = vec![Rational64::zero(); n_max + 1];
        if n_max >= 1 {
            sigma_2[1] = 1;
            sigma_o[1] = Rational64::one();
        }
        for n in 2..=n_max {
            // peel off the full power of the smallest prime: n = p^e · r
            let p = spf[n];
            let mut r = n;
            let mut pk: u128 = 1;
            let mut s: u128 = 1;
            while r % p == 0 {
                r /= p;
                pk *= (p as u128) * (p as u128);
                s += pk;
            }
            sigma_2[n] = s * sigma_2[r];
            let m = odd_part(n as u64) as usize;
            let num = sigma_2[m];
            sigma_o[n] = Rational64::new(num as i64, (m as i64) * (m as i64));
        }
        DivisorTable { n_max, sigma_o_minus2: sigma_o, sigma_2 }
    }
}

fn smallest_prime_factors(n_max: usize) -> Vec<usize> {
    let mut spf = vec![0usize; n_max + 1];
    for i in 2..=n_max {
        if spf[i] == 0 {
            let mut j = i;
            while j <= n_max {
                if spf[j] == 0 {
                    spf[j] = i;
                }
                j += i;
            }
        }
    }
    spf
}

/// σ₋₂ᵒ(1..=n_max) as doubles (index 0 unused), summed in floating point by a
/// divisor sieve.
pub fn sigma_o_minus2_table_f64(n_max: usize) -> Vec<f64> {
    let mut t = vec![0.0; n_max + 1];
    let mut d = 1usize;
    while d <= n_max {
        let w = 1.0 / (d as f64 * d as f64);
        let mut m = d;
        while m <= n_max {
            t[m] += w;
            m += d;
        }
        d += 2;
    }
    t
}

fn to_f64(r: &Rational64) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// 𝒮(−z) = 4 Σ n σ₋₂ᵒ(n) zⁿ.
pub fn s_generating(z: C64, tol: f64) -> Result<C64> {
    if z.norm() >= 1.0 {
        return Err(Error::Divergence(format!("generating function needs |z| < 1, got {}", z.norm())));
    }
    if z.norm() == 0.0 {
        return Ok(C64::new(0.0, 0.0));
    }
    power_series(z, tol, |n, sig| 4.0 * n * sig)
}

/// z d/dz 𝒮(−z) = 4 Σ n² σ₋₂ᵒ(n) zⁿ.
pub fn s_generating_log_derivative(z: C64, tol: f64) -> Result<C64> {
    if z.norm() >= 1.0 {
        return Err(Error::Divergence(format!("generating function needs |z| < 1, got {}", z.norm())));
    }
    power_series(z, tol, |n, sig| 4.0 * n * n * sig)
}

/// Σ coef(n, σ₋₂ᵒ(n)) zⁿ, stopped when the term and a geometric bound on the
/// remainder fall below tol relative to the partial sum.
fn power_series(z: C64, tol: f64, coef: impl Fn(f64, f64) -> f64) -> Result<C64> {
    let r = z.norm();
    let mut acc = C64::new(0.0, 0.0);
    let mut zn = C64::new(1.0, 0.0);
    let mut n = 0usize;
    loop {
        n += 1;
        zn *= z;
        let sig = to_f64(&sigma_o_minus2(n as u64));
        let t = zn * coef(n as f64, sig);
        acc += t;
        // remaining terms are bounded by a geometric tail with ratio r·(1+2/n)
        let ratio = r * (1.0 + 2.0 / n as f64);
        if ratio < 1.0 {
            let bound = t.norm() * ratio / (1.0 - ratio) * SIGMA_UPPER;
            if bound <= tol * acc.norm().max(f64::MIN_POSITIVE) || bound == 0.0 {
                break;
            }
        }
        if n > 5_000_000 {
            return Err(Error::Convergence { msg: "power series".into(), best: acc, err: t.norm() });
        }
    }
    finite(acc, "generating function")
}

/// −4 Σ n²/(zⁿ − z⁻ⁿ) = 4 Σ n² zⁿ/(1 − z²ⁿ), the Lambert form of z d/dz 𝒮(−z).
pub fn s_generating_lambert(z: C64, tol: f64) -> Result<C64> {
    if z.norm() >= 1.0 {
        return Err(Error::Divergence(format!("Lambert series needs |z| < 1, got {}", z.norm())));
    }
    lambert_generic(z, tol, |n, zn| n * n * zn / (1.0 - zn * zn)).map(|v| v * 4.0)
}

fn lambert_generic(q: C64, tol: f64, term: impl Fn(f64, C64) -> C64) -> Result<C64> {
    let r = q.norm();
    let mut acc = C64::new(0.0, 0.0);
    let mut qn = C64::new(1.0, 0.0);
    let mut n = 0usize;
    if r == 0.0 {
        return Ok(acc);
    }
    loop {
        n += 1;
        qn *= q;
        let t = term(n as f64, qn);
        acc += t;
        let ratio = r * (1.0 + 2.0 / n as f64);
        if ratio < 1.0 {
            let bound = t.norm() * ratio / (1.0 - ratio) * (1.0 + r) / (1.0 - r);
            if bound <= tol * acc.norm().max(f64::MIN_POSITIVE) || bound == 0.0 {
                break;
            }
        }
        if n > 5_000_000 {
            return Err(Error::Convergence { msg: "Lambert series".into(), best: acc, err: t.norm() });
        }
    }
    finite(acc, "Lambert series")
}

/// ℒ_q(2,1) = Σ n² qⁿ/(1 − qⁿ).
pub fn lambert_l(q: C64, tol: f64) -> Result<C64> {
    if q.norm() >= 1.0 {
        return Err(Error::Divergence(format!("Lambert series needs |q| < 1, got {}", q.norm())));
    }
    lambert_generic(q, tol, |n, qn| n * n * qn / (1.0 - qn))
}

/// 𝒮(q) as a function of q, i.e. s_generating(−q).
pub fn s_of_q(q: C64, tol: f64) -> Result<C64> {
    s_generating(-q, tol)
}

/// q ∂_q 𝒮(q) from the termwise-differentiated series.
pub fn q_dq_s(q: C64, tol: f64) -> Result<C64> {
    s_generating_log_derivative(-q, tol)
}

/// q ∂_q 𝒮(q) by central differences with step h and one Richardson step.
pub fn q_dq_s_finite_difference(q: C64, h: f64, tol: f64) -> Result<C64> {
    let d = |h: f64| -> Result<C64> {
        Ok((s_of_q(q + h, tol)? - s_of_q(q - h, tol)?) / (2.0 * h))
    };
    let d1 = d(h)?;
    let d2 = d(0.5 * h)?;
    Ok(q * (d2 + (d2 - d1) / 3.0))
}

/// Residual of q∂_q𝒮(q) = 4ℒ_{−q}(2,1) − 4ℒ_{q²}(2,1).
pub fn lambert_identity_residual(q: C64, tol: f64) -> Result<f64> {
    let lhs = q_dq_s(q, tol)?;
    let rhs = 4.0 * lambert_l(-q, tol)? - 4.0 * lambert_l(q * q, tol)?;
    Ok((lhs - rhs).norm())
}

/// Rows (n, σ₋₂ᵒ(n), n σ₋₂ᵒ(n)) for n = 1..=n_max.
pub fn fig1_table(n_max: usize) -> ScanTable {
    let table = DivisorTable::new(n_max);
    let mut t = ScanTable::new(&["n", "sigma_o_minus2", "n_sigma_o_minus2"]);
    for n in 1..=n_max {
        let s = &table.sigma_o_minus2[n];
        let ns = Rational64::from_integer(n as i64) * s;
        t.push(vec![n as f64, to_f64(s), to_f64(&ns)]);
    }
    t
}

/// Whether every row of a figure-1 table lies within 1 ≤ σ < π²/8.
pub fn fig1_rows_within_bounds(table: &DivisorTable) -> bool {
    (1..=table.n_max).all(|n| {
        let s = &table.sigma_o_minus2[n];
        *s >= Rational64::one() && to_f64(s) < SIGMA_UPPER
    })
}

/// Exact multiplicativity check σ(mn) = σ(m)σ(n) for coprime m, n.
pub fn multiplicative_pair(m: u64, n: u64) -> bool {
    sigma_o_minus2(m * n) == sigma_o_minus2(m) * sigma_o_minus2(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(sigma_o_minus2(1), Rational64::one());
        assert_eq!(sigma_o_minus2(3), Rational64::new(10, 9));
        assert_eq!(sigma_o_minus2(2), Rational64::one());
        assert_eq!(sigma_k(6, 2), BigRational::from_integer(50.into()));
        assert_eq!(sigma_k(1, 2), BigRational::one());
        assert_eq!(sigma_k(12, 0), BigRational::from_integer(6.into()));
        assert_eq!(sigma_k(4, -1), BigRational::new(7.into(), 4.into()));
    }

    #[test]
    fn identities() {
        assert!(check_sigma_identities(1));
        assert!(check_sigma_identities(3));
        assert!(check_sigma_identities(4));
        for n in 1..500 {
            assert!(check_sigma_identities(n));
        }
    }

    #[test]
    fn sieve_matches_direct() {
        let t = DivisorTable::new(2000);
        for n in 1..=2000u64 {
            assert_eq!(t.sigma_o_minus2[n as usize], sigma_o_minus2(n));
            assert_eq!(t.sigma_2[n as usize], sigma2_u128(n));
        }
        let f = sigma_o_minus2_table_f64(2000);
        for n in 1..=2000usize {
            assert!((f[n] - to_f64(&t.sigma_o_minus2[n])).abs() < 1e-15);
        }
    }

    #[test]
    fn generating_function_forms_agree() {
        let z = C64::new(0.3, 0.0);
        let a = s_generating_log_derivative(z, 1e-15).unwrap();
        let b = s_generating_lambert(z, 1e-15).unwrap();
        assert!((a - b).norm() < 1e-11);
        assert_eq!(s_generating(C64::new(0.0, 0.0), 1e-12).unwrap(), C64::new(0.0, 0.0));
        assert!(matches!(s_generating(C64::new(1.0, 0.0), 1e-12), Err(Error::Divergence(_))));
    }

    #[test]
    fn lambert_identity() {
        let q = C64::from_polar(0.4, 0.2 * std::f64::consts::PI);
        assert!(lambert_identity_residual(q, 1e-15).unwrap() < 1e-10);
        let fd = q_dq_s_finite_difference(q, 1e-5, 1e-15).unwrap();
        let exact = q_dq_s(q, 1e-15).unwrap();
        assert!((fd - exact).norm() < 1e-9);
    }
}
