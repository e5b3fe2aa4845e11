//! Python bindings for `superlie`.

use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyList;
use serde_json::Value;
use superlie::catalog::{catalog_get, catalog_list, catalog_verify};
use superlie::identities::{
    check_derivation, check_product, check_representation, check_rota_baxter, check_weighted_rota_baxter,
};
use superlie::ternary::check_ternary_rb;
use superlie::{Document, Error, IdentityKind, Mode, Scalar, Side};

fn err(e: Error) -> PyErr {
    match e {
        Error::UnknownEntry(_) | Error::UnknownReference(_) => PyKeyError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn to_py(py: Python<'_>, v: &Value) -> PyResult<Py<PyAny>> {
    let json = py.import("json")?;
    Ok(json.call_method1("loads", (v.to_string(),))?.unbind())
}

fn parse_doc(text: &str) -> PyResult<Document> {
    Document::parse(text).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Runs the command-line interface with `args` (without the program name)
/// and returns `(exit_code, stdout, stderr)`.
#[pyfunction]
fn run(args: Vec<String>) -> (i32, String, String) {
    let mut argv = vec!["superlie".to_string()];
    argv.extend(args);
    let (mut out, mut errs) = (Vec::new(), Vec::new());
    let code = superlie::cli::cli_main(&argv, &mut out, &mut errs);
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&errs).into_owned(),
    )
}

/// Parses a document and returns its canonical text.
#[pyfunction]
fn canonical(text: &str) -> PyResult<String> {
    Ok(parse_doc(text)?.serialize())
}

/// Checks one identity on an algebra of a document and returns the report
/// as a dict with `name`, `passed` and `counterexamples`.
#[pyfunction]
#[pyo3(signature = (text, identity, algebra=None, map=None, rep=None, weight=None, raw=false))]
#[allow(clippy::too_many_arguments)]
fn check(
    py: Python<'_>,
    text: &str,
    identity: &str,
    algebra: Option<&str>,
    map: Option<&str>,
    rep: Option<&str>,
    weight: Option<&str>,
    raw: bool,
) -> PyResult<Py<PyAny>> {
    let doc = parse_doc(text)?;
    let kind: IdentityKind = identity.parse().map_err(PyValueError::new_err)?;
    let alg = match algebra {
        Some(n) => doc.algebra(n).ok_or_else(|| PyKeyError::new_err(format!("no algebra `{n}`")))?,
        None => doc
            .algebras()
            .next()
            .ok_or_else(|| PyValueError::new_err("no algebras declared"))?,
    };
    let mode = if raw { Mode::Raw } else { Mode::Strict };
    let on = alg.space().name();
    let operator = || -> PyResult<_> {
        let found = doc.maps().find(|(n, o, _)| *o == on && map.is_none_or(|m| m == *n));
        found
            .map(|(_, _, m)| m.clone())
            .ok_or_else(|| PyKeyError::new_err(format!("no map on `{on}` matches {map:?}")))
    };
    use IdentityKind::*;
    let report = match kind {
        LeftRotaBaxter | RightRotaBaxter => {
            let side = if kind == LeftRotaBaxter { Side::Left } else { Side::Right };
            check_rota_baxter(alg, &operator()?, side, mode)
        }
        WeightedRotaBaxter => {
            let w = weight.ok_or_else(|| PyValueError::new_err("weighted_rota_baxter needs a weight"))?;
            let w: Scalar = w.parse().map_err(|e: superlie::scalar::ParseScalarError| PyValueError::new_err(e.0))?;
            check_weighted_rota_baxter(alg, &operator()?, &w, mode)
        }
        TernaryRotaBaxter => check_ternary_rb(alg, &operator()?, mode),
        LeftDerivation | RightDerivation => {
            let side = if kind == LeftDerivation { Side::Left } else { Side::Right };
            check_derivation(alg, &operator()?, side)
        }
        Representation => {
            let found = doc.reps().find(|(n, r)| r.algebra().space().name() == on && rep.is_none_or(|x| x == *n));
            let (_, r) = found.ok_or_else(|| PyKeyError::new_err(format!("no representation of `{on}` matches {rep:?}")))?;
            check_representation(alg, r)
        }
        _ => check_product(kind, alg),
    }
    .map_err(err)?;
    to_py(py, &report.to_json())
}

#[pyfunction(name = "catalog_list")]
fn py_catalog_list() -> Vec<&'static str> {
    catalog_list()
}

/// Canonical text of a catalog entry.
#[pyfunction]
fn catalog_show(name: &str) -> PyResult<String> {
    Ok(catalog_get(name).map_err(err)?.document.serialize())
}

/// Runs the recorded claims of one entry, or of all entries, and returns one
/// dict per claim.
#[pyfunction(name = "catalog_verify")]
#[pyo3(signature = (name=None))]
fn py_catalog_verify<'py>(py: Python<'py>, name: Option<&str>) -> PyResult<Bound<'py, PyList>> {
    let outcomes = catalog_verify(name).map_err(err)?;
    let items = outcomes
        .iter()
        .map(|o| to_py(py, &o.to_json()))
        .collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

#[pymodule]
fn pysuperlie(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add_function(wrap_pyfunction!(canonical, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(py_catalog_list, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_show, m)?)?;
    m.add_function(wrap_pyfunction!(py_catalog_verify, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
