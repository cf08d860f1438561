//! Python bindings for `snaketsys`.
//!
//! Vertices cross the boundary as `(i, k2)` tuples with doubled heights; vertex data,
//! relations and tables use the crate's JSON formats as strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use snaketsys::io::{from_json, to_json, DatumJson, RelationJson, TableJson};
use snaketsys::realize::{relation_monomials, Realization};
use snaketsys::tsystem::{check_theorem_a_hypotheses, extended_tsystem};
use snaketsys::{lusztig, reineke, snakes, verify, Flavor, Vertex};

fn err(e: snaketsys::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Vertices as `(i, k2)` tuples.
type Points = Vec<(usize, i64)>;

/// One row of a verification report: `(suite, passed, failed, first_counterexample)`.
type ReportRow = (String, usize, usize, Option<String>);

fn to_vertices(points: Vec<(usize, i64)>) -> Vec<Vertex> {
    points.into_iter().map(|(i, k2)| Vertex::new(i, k2)).collect()
}

fn to_tuples(vs: &[Vertex]) -> Vec<(usize, i64)> {
    vs.iter().map(|v| (v.i, v.k2)).collect()
}

/// A height function on `A_n` (untwisted) or `A_{2n₀-1}` (twisted), with doubled values.
#[pyclass(frozen, name = "HeightFunction")]
struct PyHeightFunction {
    inner: snaketsys::HeightFunction,
}

#[pymethods]
impl PyHeightFunction {
    /// Builds a height function from doubled values; `flavor` is "untwisted" or "twisted".
    #[new]
    #[pyo3(signature = (flavor, xi2, n0 = None))]
    fn new(flavor: &str, xi2: Vec<i64>, n0: Option<usize>) -> PyResult<Self> {
        let flavor: Flavor = flavor.parse().map_err(err)?;
        Ok(Self { inner: snaketsys::HeightFunction::from_doubled(flavor, xi2, n0).map_err(err)? })
    }

    /// The canonical untwisted function ξ^(δ) on `A_n`.
    #[staticmethod]
    fn canonical(n: usize, delta: u8) -> PyResult<Self> {
        Ok(Self { inner: snaketsys::HeightFunction::canonical(n, delta).map_err(err)? })
    }

    /// The untwisted function θ on `A_{2n₀-1}`.
    #[staticmethod]
    fn theta(n0: usize) -> PyResult<Self> {
        Ok(Self { inner: snaketsys::HeightFunction::theta(n0).map_err(err)? })
    }

    /// The twisted function Θ on `A_{2n₀-1}`.
    #[staticmethod]
    fn big_theta(n0: usize) -> PyResult<Self> {
        Ok(Self { inner: snaketsys::HeightFunction::big_theta(n0).map_err(err)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn n0(&self) -> Option<usize> {
        self.inner.n0()
    }

    #[getter]
    fn flavor(&self) -> String {
        self.inner.flavor().to_string()
    }

    #[getter]
    fn values2(&self) -> Vec<i64> {
        self.inner.values2().to_vec()
    }

    fn is_vertex(&self, v: (usize, i64)) -> bool {
        self.inner.is_vertex(Vertex::new(v.0, v.1))
    }

    /// `v ⪯ w` in the repetition quiver.
    fn preceq(&self, v: (usize, i64), w: (usize, i64)) -> bool {
        self.inner.preceq(Vertex::new(v.0, v.1), Vertex::new(w.0, w.1))
    }

    /// The duality `D(i, k) = (i*, k - ñ)`.
    fn dual(&self, v: (usize, i64)) -> (usize, i64) {
        let d = self.inner.dual(Vertex::new(v.0, v.1));
        (d.i, d.k2)
    }

    /// The vertices of the window Γ^ξ in (k, i) order.
    fn gamma_window(&self) -> Vec<(usize, i64)> {
        to_tuples(&self.inner.gamma_window())
    }

    /// The positive root φ_ξ(v) as a string such as "a1,3".
    fn phi(&self, v: (usize, i64)) -> PyResult<String> {
        Ok(self.inner.phi(Vertex::new(v.0, v.1)).map_err(err)?.to_string())
    }

    fn __repr__(&self) -> String {
        format!("HeightFunction({:?}, {:?}, n0={:?})", self.flavor(), self.values2(), self.n0())
    }
}

#[pyfunction]
fn is_snake(xi: &PyHeightFunction, points: Vec<(usize, i64)>) -> bool {
    snakes::is_snake(&xi.inner, &to_vertices(points))
}

#[pyfunction]
fn is_prime_snake(xi: &PyHeightFunction, points: Vec<(usize, i64)>) -> bool {
    snakes::is_prime_snake(&xi.inner, &to_vertices(points))
}

/// The prime factors of a snake, as lists of points.
#[pyfunction]
fn split_prime(xi: &PyHeightFunction, points: Vec<(usize, i64)>) -> PyResult<Vec<Vec<(usize, i64)>>> {
    let parts = snakes::split_prime(&xi.inner, &to_vertices(points)).map_err(err)?;
    Ok(parts.iter().map(|p| to_tuples(p)).collect())
}

/// The sequences (Q, R) of a prime snake.
#[pyfunction]
fn qr_sequences(xi: &PyHeightFunction, points: Vec<(usize, i64)>) -> PyResult<(Points, Points)> {
    let (q, r) = snakes::qr_sequences(&xi.inner, &to_vertices(points)).map_err(err)?;
    Ok((to_tuples(&q), to_tuples(&r)))
}

/// The untwisted snake P† of a twisted snake in Γ^Θ.
#[pyfunction]
fn translate_twisted(xi: &PyHeightFunction, points: Vec<(usize, i64)>) -> PyResult<Vec<(usize, i64)>> {
    Ok(to_tuples(&snakes::translate_twisted(&xi.inner, &to_vertices(points)).map_err(err)?))
}

/// The extended T-system relation of a prime snake, as relation JSON.
///
/// `realization` is None, "qdatum-a", "qdatum-b" or "custom" (with `table` JSON).
#[pyfunction]
#[pyo3(signature = (xi, points, realization = None, table = None))]
fn tsystem(
    xi: &PyHeightFunction,
    points: Vec<(usize, i64)>,
    realization: Option<&str>,
    table: Option<&str>,
) -> PyResult<String> {
    let p = to_vertices(points);
    let rel = extended_tsystem(&xi.inner, &p).map_err(err)?;
    let report = check_theorem_a_hypotheses(&xi.inner, &p).map_err(err)?;
    let real = match realization {
        None => None,
        Some("qdatum-a") => Some(Realization::QDatumA),
        Some("qdatum-b") => Some(Realization::QDatumB),
        Some("custom") => {
            let text = table.ok_or_else(|| PyValueError::new_err("custom realization needs a table"))?;
            Some(Realization::Custom(from_json::<TableJson>(text).map_err(err)?.table()))
        }
        Some(other) => return Err(PyValueError::new_err(format!("unknown realization `{other}`"))),
    };
    let monomials = real.as_ref().map(|r| relation_monomials(&rel, r, &xi.inner)).transpose().map_err(err)?;
    Ok(to_json(&RelationJson::new(&rel, report.all_one, monomials.as_ref())))
}

/// `(ε_j, ε*_j)` of a datum JSON on a canonical window (`delta:0|1`).
#[pyfunction]
#[pyo3(signature = (datum_json, j, n = None))]
fn reineke_epsilon(datum_json: &str, j: usize, n: Option<usize>) -> PyResult<(u64, u64)> {
    let d = from_json::<DatumJson>(datum_json).and_then(|d| d.to_datum(n)).map_err(err)?;
    Ok((reineke::epsilon_any(j, &d).map_err(err)?, reineke::epsilon_star(j, &d).map_err(err)?))
}

/// ρ applied to a datum JSON on `gamma-THETA` or `vj:<j>`; returns datum JSON on `gamma-theta`.
#[pyfunction]
#[pyo3(signature = (datum_json, n = None))]
fn rho(datum_json: &str, n: Option<usize>) -> PyResult<String> {
    let d = from_json::<DatumJson>(datum_json).and_then(|d| d.to_datum(n)).map_err(err)?;
    Ok(to_json(&DatumJson::new(&lusztig::rho(&d).map_err(err)?)))
}

/// Runs a property suite; returns `(name, passed, failed, first_counterexample)` rows.
#[pyfunction]
#[pyo3(signature = (suite = "all", trials = 100, seed = 0))]
fn run_verify(suite: &str, trials: usize, seed: u64) -> PyResult<Vec<ReportRow>> {
    let suite: verify::Suite = suite.parse().map_err(err)?;
    Ok(verify::run(suite, trials, seed)
        .map_err(err)?
        .into_iter()
        .map(|r| (r.suite.to_string(), r.passed, r.failed, r.first_counterexample))
        .collect())
}

#[pymodule]
fn snaketsys_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyHeightFunction>()?;
    m.add_function(wrap_pyfunction!(is_snake, m)?)?;
    m.add_function(wrap_pyfunction!(is_prime_snake, m)?)?;
    m.add_function(wrap_pyfunction!(split_prime, m)?)?;
    m.add_function(wrap_pyfunction!(qr_sequences, m)?)?;
    m.add_function(wrap_pyfunction!(translate_twisted, m)?)?;
    m.add_function(wrap_pyfunction!(tsystem, m)?)?;
    m.add_function(wrap_pyfunction!(reineke_epsilon, m)?)?;
    m.add_function(wrap_pyfunction!(rho, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}
