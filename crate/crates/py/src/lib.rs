//! Python bindings for boundary-scope.

use scope::boundary::{self, RationalAngle};
use scope::legfn_cs::{self, LegRoute};
use scope::mordell::{self, Branch};
use scope::v_function::{self, VRoute};
use scope::{divisor, resurgence, special_fn, verify, Error};
use num_complex::Complex64;
use pyo3::exceptions::{PyArithmeticError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Domain(_) | Error::StokesLine(_) => PyValueError::new_err(e.to_string()),
        Error::Pole(_) | Error::NearPole { .. } | Error::Overflow(_) | Error::NonFinite(_) => {
            PyArithmeticError::new_err(e.to_string())
        }
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn v_route(name: &str) -> PyResult<Option<VRoute>> {
    Ok(Some(match name {
        "auto" => return Ok(None),
        "integral" => VRoute::Integral,
        "mellin-barnes" => VRoute::MellinBarnes,
        "loggamma" => VRoute::LogGammaSum,
        "borel" => VRoute::BorelLaplace,
        "series" => VRoute::Series,
        _ => return Err(PyValueError::new_err(format!("unknown method '{name}'"))),
    }))
}

fn leg_route(name: &str) -> PyResult<LegRoute> {
    Ok(match name {
        "sqrt" => LegRoute::SqrtProduct,
        "finite" => LegRoute::FiniteProduct,
        "integral" => LegRoute::IntegralRep,
        "asymptotic" => LegRoute::Asymptotic,
        _ => return Err(PyValueError::new_err(format!("unknown method '{name}'"))),
    })
}

fn branch(sign: i32) -> PyResult<Branch> {
    match sign {
        1 => Ok(Branch::Upper),
        -1 => Ok(Branch::Lower),
        _ => Err(PyValueError::new_err("branch must be +1 or -1")),
    }
}

/// Result of one evaluation of v(1/N).
#[pyclass(frozen, get_all, skip_from_py_object, module = "boundary_scope")]
#[derive(Clone)]
struct VResult {
    n: Complex64,
    value: Complex64,
    route: &'static str,
    abs_err: f64,
}

#[pymethods]
impl VResult {
    fn __repr__(&self) -> String {
        format!("VResult(n={}, value={}, route='{}', abs_err={:e})", self.n, self.value, self.route, self.abs_err)
    }
}

/// v(1/N) by the named route: auto, integral, mellin-barnes, loggamma, borel or series.
#[pyfunction]
#[pyo3(signature = (n, method = "auto", tol = 1e-10))]
fn v(n: Complex64, method: &str, tol: f64) -> PyResult<VResult> {
    let e = match v_route(method)? {
        None => v_function::v_eval(n, tol),
        Some(r) => v_function::v_by_route(n, r, tol),
    }
    .map_err(to_py)?;
    Ok(VResult { n: e.n_value, value: e.value, route: e.route.name(), abs_err: e.abs_err })
}

/// Coefficient c_n of the large-N expansion.
#[pyfunction]
fn series_coeff(n: usize) -> f64 {
    v_function::v_series_coeff(n)
}

#[pyfunction]
#[pyo3(signature = (s,))]
fn zeta(s: Complex64) -> PyResult<Complex64> {
    special_fn::zeta(s).map_err(to_py)
}

#[pyfunction]
fn log_gamma(z: Complex64) -> PyResult<Complex64> {
    special_fn::log_gamma(z).map_err(to_py)
}

/// The singular sum at x + iy.
#[pyfunction]
#[pyo3(signature = (x, y, tol = 1e-12))]
fn singular_sum(x: f64, y: f64, tol: f64) -> PyResult<Complex64> {
    boundary::singular_sum(x, y, tol).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (x, y, tol = 1e-12))]
fn reflection_residual(x: f64, y: f64, tol: f64) -> PyResult<Complex64> {
    boundary::reflection_residual(x, y, tol).map_err(to_py)
}

/// Leading small-y law at the boundary point: (kind, law, predicted coefficient).
#[pyfunction]
fn classify(x: &str) -> PyResult<(String, String, f64)> {
    let c = boundary::classify_boundary_point(RationalAngle::parse(x).map_err(to_py)?);
    Ok((format!("{:?}", c.kind), format!("{:?}", c.law), c.predicted_coeff))
}

/// Least-squares coefficient of the leading law over a log grid in y.
#[pyfunction]
#[pyo3(signature = (x, y_min = 1e-4, y_max = 1e-2, points = 25, tol = 1e-13))]
fn singularity_fit(x: &str, y_min: f64, y_max: f64, points: usize, tol: f64) -> PyResult<(f64, f64)> {
    let x = RationalAngle::parse(x).map_err(to_py)?;
    let grid = boundary::log_grid(y_min, y_max, points);
    let f = boundary::singularity_fit(x, &grid, tol).map_err(to_py)?;
    Ok((f.fitted_coeff, f.relative_residual))
}

/// σ°₋₂(n) as an exact (numerator, denominator) pair.
#[pyfunction]
fn sigma(n: u64) -> PyResult<(i64, i64)> {
    if n == 0 {
        return Err(PyValueError::new_err("n must be positive"));
    }
    let s = divisor::sigma_o_minus2(n);
    Ok((*s.numer(), *s.denom()))
}

/// σ°₋₂(1), ..., σ°₋₂(n_max) as floats.
#[pyfunction]
fn sigma_table(n_max: usize) -> Vec<f64> {
    divisor::sigma_o_minus2_table_f64(n_max).split_off(1)
}

/// Borel transform B(t).
#[pyfunction]
#[pyo3(signature = (t, tol = 1e-13))]
fn borel_transform(t: Complex64, tol: f64) -> PyResult<Complex64> {
    resurgence::borel_transform(t, tol).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (n, l_max = 60))]
fn stokes_discontinuity(n: Complex64, l_max: usize) -> PyResult<Complex64> {
    resurgence::stokes_discontinuity(n, l_max).map_err(to_py)
}

/// p(z, q) for the 2N-th root of unity q.
#[pyfunction]
fn leg_p(z: Complex64, n: u32) -> PyResult<Complex64> {
    Ok(legfn_cs::leg_p(z, n).map_err(to_py)?.value)
}

/// p(q^j, q) by the named route: sqrt, finite or integral.
#[pyfunction]
#[pyo3(signature = (n, j, method = "sqrt"))]
fn leg_p_root(n: u32, j: i64, method: &str) -> PyResult<Complex64> {
    Ok(legfn_cs::leg_p_root(n, j, leg_route(method)?).map_err(to_py)?.value)
}

#[pyfunction]
fn cs_identity_residual(n: u32) -> PyResult<f64> {
    legfn_cs::cs_identity_residual(n).map_err(to_py)
}

/// One-point function from v and from the product P: (via_v, via_p).
#[pyfunction]
#[pyo3(signature = (n, tol = 1e-13))]
fn one_point(n: u32, tol: f64) -> PyResult<(f64, f64)> {
    let o = legfn_cs::one_point(n, tol).map_err(to_py)?;
    Ok((o.via_v, o.via_p))
}

/// Mordell integral J(t): method quadrature, mellin-barnes or dual.
#[pyfunction]
#[pyo3(signature = (t, method = "mellin-barnes", branch_sign = 1, k_max = None, tol = 1e-12))]
fn mordell_j(t: Complex64, method: &str, branch_sign: i32, k_max: Option<usize>, tol: f64) -> PyResult<Complex64> {
    let e = match method {
        "quadrature" => mordell::j_quadrature(t, tol),
        "mellin-barnes" => mordell::j_mellin_barnes(t, tol, 0.5),
        "dual" => {
            let k = k_max.unwrap_or_else(|| mordell::dual_auto_kmax(t));
            mordell::j_dual_continued(t, branch(branch_sign)?, k)
        }
        _ => return Err(PyValueError::new_err(format!("unknown method '{method}'"))),
    };
    Ok(e.map_err(to_py)?.value)
}

/// Results of the named verification suite (or all) as (name, passed, detail).
#[pyfunction]
#[pyo3(signature = (suite = "all", tol = 1e-10))]
fn run_verify(py: Python<'_>, suite: &str, tol: f64) -> PyResult<Vec<(String, bool, String)>> {
    let checks = if suite == "all" {
        py.detach(|| verify::run_all(tol))
    } else {
        let s: verify::Suite = suite.parse().map_err(PyValueError::new_err)?;
        py.detach(|| verify::run_suite(s, tol))
    };
    Ok(checks.into_iter().map(|c| (format!("{}/{}", c.suite.name(), c.name), c.passed, c.detail)).collect())
}

#[pymodule]
fn boundary_scope(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<VResult>()?;
    m.add_function(wrap_pyfunction!(v, m)?)?;
    m.add_function(wrap_pyfunction!(series_coeff, m)?)?;
    m.add_function(wrap_pyfunction!(zeta, m)?)?;
    m.add_function(wrap_pyfunction!(log_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(singular_sum, m)?)?;
    m.add_function(wrap_pyfunction!(reflection_residual, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(singularity_fit, m)?)?;
    m.add_function(wrap_pyfunction!(sigma, m)?)?;
    m.add_function(wrap_pyfunction!(sigma_table, m)?)?;
    m.add_function(wrap_pyfunction!(borel_transform, m)?)?;
    m.add_function(wrap_pyfunction!(stokes_discontinuity, m)?)?;
    m.add_function(wrap_pyfunction!(leg_p, m)?)?;
    m.add_function(wrap_pyfunction!(leg_p_root, m)?)?;
    m.add_function(wrap_pyfunction!(cs_identity_residual, m)?)?;
    m.add_function(wrap_pyfunction!(one_point, m)?)?;
    m.add_function(wrap_pyfunction!(mordell_j, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}
