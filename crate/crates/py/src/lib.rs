//! Python bindings: the main computations behind plain functions, with
//! multiplicities given in the CLI's inline "i,j:m;..." form and
//! structured results returned as JSON strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use degflag::cli::mult_parse;
use degflag::jsonio;
use degflag::pluecker;
use degflag::roots;
use degflag::tensormod;

fn err(e: degflag::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_err(e: serde_json::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyfunction]
fn positive_roots(n: usize) -> PyResult<Vec<(usize, usize)>> {
    Ok(roots::positive_roots(n)
        .map_err(err)?
        .into_iter()
        .map(|r| (r.i, r.j))
        .collect())
}

#[pyfunction]
fn dyck_paths(n: usize, i: usize, j: usize) -> PyResult<Vec<Vec<(usize, usize)>>> {
    Ok(roots::dyck_paths(n, i, j)
        .map_err(err)?
        .into_iter()
        .map(|p| p.steps.into_iter().map(|r| (r.i, r.j)).collect())
        .collect())
}

#[pyfunction]
fn polytope(n: usize, mult: &str) -> PyResult<Vec<Vec<u64>>> {
    let m = mult_parse(mult, n).map_err(err)?;
    Ok(roots::enumerate_polytope(&m)
        .map_err(err)?
        .into_iter()
        .map(|p| p.exps)
        .collect())
}

/// Graded PBW dimensions and the total dimension of the module of `mult`.
#[pyfunction]
fn dims(n: usize, mult: &str) -> PyResult<(Vec<usize>, usize)> {
    let m = mult_parse(mult, n).map_err(err)?;
    let graded = tensormod::hilbert(&m, tensormod::DEFAULT_DIM_CAP).map_err(err)?;
    let total = graded.iter().sum();
    Ok((graded, total))
}

#[pyfunction]
fn fundamental_basis(n: usize, i: usize, j: usize) -> PyResult<Vec<String>> {
    Ok(degflag::fundmod::fundamental_basis(n, i, j)
        .map_err(err)?
        .iter()
        .map(|k| k.to_string())
        .collect())
}

/// JSON report of the monomial-basis evidence check for `mult`.
#[pyfunction]
fn monomial_basis_check(n: usize, mult: &str) -> PyResult<String> {
    let m = mult_parse(mult, n).map_err(err)?;
    let report = tensormod::monomial_basis_check(&m, tensormod::DEFAULT_DIM_CAP).map_err(err)?;
    serde_json::to_string(&report).map_err(json_err)
}

/// Canonical text forms of the distinct nonzero relations.
#[pyfunction]
fn relations(n: usize) -> PyResult<Vec<String>> {
    Ok(pluecker::distinct_nonzero_relations(n)
        .map_err(err)?
        .into_iter()
        .map(|(_, p)| p.to_string())
        .collect())
}

/// True iff every generated relation maps to zero symbolically.
#[pyfunction]
fn verify_relations(n: usize) -> PyResult<bool> {
    Ok(pluecker::enumerate_relations(n)
        .map_err(err)?
        .iter()
        .all(|(_, p)| pluecker::verify_vanishing(p)))
}

/// Image of a polynomial (JSON, exact string coefficients) under the
/// parametrization map; returns (image_json, image_text, vanishes).
#[pyfunction]
fn psi(n: usize, poly_json: &str) -> PyResult<(String, String, bool)> {
    let parsed: jsonio::XPolyJson = serde_json::from_str(poly_json).map_err(json_err)?;
    let poly = jsonio::xpoly_from_json(n, &parsed).map_err(err)?;
    let image = pluecker::psi(&poly);
    let out = serde_json::to_string(&jsonio::tzpoly_to_json(&image)).map_err(json_err)?;
    Ok((out, image.to_string(), image.is_zero()))
}

/// Straightening: returns (exponents_json, g_json, g_text).
#[pyfunction]
fn straighten(n: usize, poly_json: &str) -> PyResult<(String, String, String)> {
    let parsed: jsonio::XPolyJson = serde_json::from_str(poly_json).map_err(json_err)?;
    let poly = jsonio::xpoly_from_json(n, &parsed).map_err(err)?;
    let (exponents, g) = pluecker::straighten(n, &poly).map_err(err)?;
    let n_json = serde_json::to_string(&jsonio::mult_to_json(&exponents)).map_err(json_err)?;
    let g_json = serde_json::to_string(&jsonio::xpoly_to_json(&g)).map_err(json_err)?;
    Ok((n_json, g_json, g.to_string()))
}

/// Coordinate-ring component dimension and module dimension for `mult`.
#[pyfunction]
fn qdim(n: usize, mult: &str) -> PyResult<(usize, usize)> {
    let m = mult_parse(mult, n).map_err(err)?;
    let q = pluecker::qm_dimension(&m, tensormod::DEFAULT_DIM_CAP).map_err(err)?;
    let d = tensormod::build_module(&m, tensormod::DEFAULT_DIM_CAP)
        .map_err(err)?
        .dim();
    Ok((q, d))
}

/// JSON report comparing the ideal-quotient Hilbert function with the
/// module's graded dimensions.
#[pyfunction]
fn ideal_report(n: usize, mult: &str) -> PyResult<String> {
    let m = mult_parse(mult, n).map_err(err)?;
    let report = degflag::ideal::ideal_comparison_report(&m, tensormod::DEFAULT_DIM_CAP, None)
        .map_err(err)?;
    serde_json::to_string(&report).map_err(json_err)
}

#[pymodule]
fn degflag_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(positive_roots, m)?)?;
    m.add_function(wrap_pyfunction!(dyck_paths, m)?)?;
    m.add_function(wrap_pyfunction!(polytope, m)?)?;
    m.add_function(wrap_pyfunction!(dims, m)?)?;
    m.add_function(wrap_pyfunction!(fundamental_basis, m)?)?;
    m.add_function(wrap_pyfunction!(monomial_basis_check, m)?)?;
    m.add_function(wrap_pyfunction!(relations, m)?)?;
    m.add_function(wrap_pyfunction!(verify_relations, m)?)?;
    m.add_function(wrap_pyfunction!(psi, m)?)?;
    m.add_function(wrap_pyfunction!(straighten, m)?)?;
    m.add_function(wrap_pyfunction!(qdim, m)?)?;
    m.add_function(wrap_pyfunction!(ideal_report, m)?)?;
    Ok(())
}
