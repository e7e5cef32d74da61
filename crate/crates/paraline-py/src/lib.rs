//! CPython bindings for the headline computations, using the same JSON
//! interchange as the CLI: bundles, cover specs, matrix input, and bound
//! reports travel as JSON strings; scalars and degree lists as native
//! Python values. All failures raise `ValueError`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use paraline::covers::{self, CoverSpec, MatrixInput};
use paraline::cyclic::CyclicCover;
use paraline::exact::{CycElem, Rational};
use paraline::parabolic::SplitBundle;

fn value_error(err: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn parse_bundle(text: &str) -> PyResult<SplitBundle> {
    let bundle: SplitBundle = serde_json::from_str(text).map_err(value_error)?;
    bundle.into_checked().map_err(value_error)
}

fn to_json<T: serde::Serialize>(value: &T) -> PyResult<String> {
    serde_json::to_string(value).map_err(value_error)
}

/// Carry count kappa(m, c) = (-m) mod c.
#[pyfunction]
fn kappa(m: u64, c: u64) -> PyResult<u64> {
    CyclicCover::new(m, c)
        .and_then(|cover| cover.kappa())
        .map_err(value_error)
}

/// Degree of the weight-j summand of the cyclic cover z -> z^m.
#[pyfunction]
fn s_j(m: u64, c: u64, j: u64) -> PyResult<i64> {
    CyclicCover::new(m, c)
        .and_then(|cover| cover.s_j(j))
        .map_err(value_error)
}

/// Bundle JSON of the weight-j character of a cyclic cover.
#[pyfunction]
fn cyclic_bundle(m: u64, c: u64, j: u64) -> PyResult<String> {
    let bundle = CyclicCover::new(m, c)
        .and_then(|cover| cover.bundle(j))
        .map_err(value_error)?;
    to_json(&bundle)
}

/// Tensor product of two bundle JSON values (canonical JSON out).
#[pyfunction]
fn tensor(a: &str, b: &str) -> PyResult<String> {
    let a = parse_bundle(a)?;
    let b = parse_bundle(b)?;
    to_json(&a.tensor(&b).map_err(value_error)?)
}

/// Degrees of a bundle at a weight vector given as comma-separated
/// rationals ("0,1/4,-3/2"), sorted ascending.
#[pyfunction]
fn eval_bundle(bundle: &str, at: &str) -> PyResult<Vec<i64>> {
    let bundle = parse_bundle(bundle)?;
    let at = at
        .split(',')
        .map(|part| part.trim().parse::<Rational>())
        .collect::<paraline::Result<Vec<_>>>()
        .map_err(value_error)?;
    bundle.eval(&at).map_err(value_error)
}

/// Bound report JSON from a CoverSpec JSON value.
#[pyfunction]
fn bound_from_spec(spec: &str) -> PyResult<String> {
    let spec: CoverSpec = serde_json::from_str(spec).map_err(value_error)?;
    let spec = spec.into_checked().map_err(value_error)?;
    to_json(&covers::bound_u(&spec).map_err(value_error)?)
}

/// Bound report JSON from monodromy-matrices JSON.
#[pyfunction]
fn bound_from_matrices(matrices: &str) -> PyResult<String> {
    let input: MatrixInput = serde_json::from_str(matrices).map_err(value_error)?;
    let (gen0, gen1) = input.generators().map_err(value_error)?;
    let spec = covers::spec_from_matrices(&gen0, &gen1).map_err(value_error)?;
    to_json(&covers::bound_u(&spec).map_err(value_error)?)
}

/// Eigenvalue multiplicities from the integer traces of g^0..g^(order-1).
#[pyfunction]
fn weight_multiplicities(order: u64, traces: Vec<i64>) -> PyResult<Vec<i64>> {
    let traces = traces
        .into_iter()
        .map(|t| CycElem::from_int(1, t))
        .collect::<paraline::Result<Vec<_>>>()
        .map_err(value_error)?;
    paraline::exact::weight_multiplicities(order, &traces)
        .map_err(value_error)?
        .into_iter()
        .map(|m| i64::try_from(m).map_err(|_| value_error("multiplicity out of i64 range")))
        .collect()
}

/// Whether line bundles with degrees s inject into ones with degrees t
/// (sorted domination).
#[pyfunction]
fn can_inject(s: Vec<i64>, t: Vec<i64>) -> PyResult<bool> {
    covers::can_inject(&s, &t).map_err(value_error)
}

#[pymodule]
fn paraline_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(kappa, m)?)?;
    m.add_function(wrap_pyfunction!(s_j, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic_bundle, m)?)?;
    m.add_function(wrap_pyfunction!(tensor, m)?)?;
    m.add_function(wrap_pyfunction!(eval_bundle, m)?)?;
    m.add_function(wrap_pyfunction!(bound_from_spec, m)?)?;
    m.add_function(wrap_pyfunction!(bound_from_matrices, m)?)?;
    m.add_function(wrap_pyfunction!(weight_multiplicities, m)?)?;
    m.add_function(wrap_pyfunction!(can_inject, m)?)?;
    Ok(())
}
