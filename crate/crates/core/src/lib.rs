//! Numerics for the finite-volume function v(1/N) of the critical Ising chain:
//! several independent evaluation routes, its natural boundary on the negative
//! real N axis, and the divisor-sum, Borel-plane, q-product and Mordell-integral
//! identities attached to it.

pub mod boundary;
pub mod cli;
pub mod cmath;
pub mod divisor;
pub mod error;
pub mod legfn_cs;
pub mod mordell;
pub mod quadrature;
pub mod resurgence;
pub mod scan;
pub mod series;
pub mod special_fn;
pub mod v_function;
pub mod verify;

pub use error::{Error, Result};

/// Double-precision complex number used for every analytic quantity.
pub type C64 = num_complex::Complex64;

/// Shorthand constructor.
#[inline]
pub fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}
