//! Python bindings.
//!
//! `Graph` and `Matrix` wrap the core types; tables, reports and
//! classifications come back as plain dicts built from their JSON form.

use estrada_core::bounds;
use estrada_core::graph::{self, Family};
use estrada_core::matrix::{self, adjacency_matrix};
use estrada_core::report::Report;
use estrada_core::{spectral, verify, DEFAULT_KMAX, DEFAULT_TOL};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

fn err(e: estrada_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// Simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "estrada", frozen)]
struct PyGraph {
    inner: estrada_core::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = estrada_core::Graph::from_edges(n, edges).map_err(err)?;
        Ok(PyGraph { inner })
    }

    #[staticmethod]
    fn from_graph6(line: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph::parse_graph6(line).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph::parse_edge_list(text).map_err(err)?,
        })
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        family(Family::Complete(n))
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        family(Family::Path(n))
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        family(Family::Cycle(n))
    }

    #[staticmethod]
    fn star(n: usize) -> PyResult<Self> {
        family(Family::Star(n))
    }

    #[staticmethod]
    fn complete_bipartite(p: usize, q: usize) -> PyResult<Self> {
        family(Family::CompleteBipartite(p, q))
    }

    #[staticmethod]
    #[pyo3(signature = (n, p, seed=0))]
    fn erdos_renyi(n: usize, p: f64, seed: u64) -> PyResult<Self> {
        family(Family::ErdosRenyi { n, p, seed })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn triangle_count(&self) -> u64 {
        graph::triangle_count(&self.inner)
    }

    /// Walks of length `k` from each vertex, as exact integers while they fit.
    fn k_degrees(&self, k: usize) -> Vec<f64> {
        let kd = graph::k_degrees(&self.inner, k);
        (0..kd.len()).map(|i| kd.get(i)).collect()
    }

    fn to_graph6(&self) -> String {
        graph::to_graph6(&self.inner)
    }

    fn to_edge_list(&self) -> String {
        graph::to_edge_list(&self.inner)
    }

    fn adjacency(&self) -> PyMatrix {
        PyMatrix {
            inner: adjacency_matrix(&self.inner),
        }
    }

    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &graph::classify(&self.inner))
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

fn family(f: Family) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: graph::generate(f).map_err(err)?,
    })
}

/// Symmetric matrix with nonnegative entries.
#[pyclass(name = "Matrix", module = "estrada", frozen)]
struct PyMatrix {
    inner: estrada_core::SymNonnegMatrix,
}

#[pymethods]
impl PyMatrix {
    /// Builds from a list of rows.
    #[new]
    fn new(rows: Vec<Vec<f64>>) -> PyResult<Self> {
        Ok(PyMatrix {
            inner: estrada_core::SymNonnegMatrix::from_rows(&rows).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_matrix_market(text: &str) -> PyResult<Self> {
        Ok(PyMatrix {
            inner: matrix::parse_matrix_market(text).map_err(err)?,
        })
    }

    #[getter]
    fn ell(&self) -> usize {
        self.inner.ell()
    }

    #[getter]
    fn trace(&self) -> f64 {
        self.inner.trace()
    }

    fn frobenius_norm(&self) -> f64 {
        self.inner.frobenius_norm()
    }

    fn is_irreducible(&self) -> bool {
        self.inner.is_irreducible()
    }

    fn to_list(&self) -> Vec<Vec<f64>> {
        (0..self.inner.ell()).map(|i| self.inner.row(i).to_vec()).collect()
    }

    fn to_matrix_market(&self) -> String {
        matrix::to_matrix_market(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Matrix(ell={}, trace={})", self.inner.ell(), self.inner.trace())
    }
}

#[derive(FromPyObject)]
enum Source<'py> {
    Graph(PyRef<'py, PyGraph>),
    Matrix(PyRef<'py, PyMatrix>),
}

impl Source<'_> {
    fn matrix(&self) -> estrada_core::SymNonnegMatrix {
        match self {
            Source::Graph(g) => adjacency_matrix(&g.inner),
            Source::Matrix(m) => m.inner.clone(),
        }
    }
}

/// Eigenvalues in descending order.
#[pyfunction]
fn eigenvalues(source: Source<'_>) -> PyResult<Vec<f64>> {
    Ok(spectral::eigenvalues(&source.matrix()).map_err(err)?.eigenvalues)
}

#[pyfunction]
fn estrada_index(source: Source<'_>) -> PyResult<f64> {
    let s = spectral::eigenvalues(&source.matrix()).map_err(err)?;
    Ok(spectral::estrada_index(&s))
}

#[pyfunction]
#[pyo3(signature = (source, tol=1e-12, kmax=100_000))]
fn spectral_radius(source: Source<'_>, tol: f64, kmax: usize) -> PyResult<f64> {
    spectral::power_radius(&source.matrix(), tol, kmax).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, kmax=DEFAULT_KMAX, tol=DEFAULT_TOL))]
fn gamma_sequence(g: PyRef<'_, PyGraph>, kmax: usize, tol: f64) -> PyResult<Vec<f64>> {
    Ok(bounds::gamma_sequence(&g.inner, kmax, tol).map_err(err)?.values)
}

#[pyfunction]
#[pyo3(signature = (r, kmax=DEFAULT_KMAX, tol=DEFAULT_TOL))]
fn xi_sequence(r: PyRef<'_, PyMatrix>, kmax: usize, tol: f64) -> PyResult<Vec<f64>> {
    Ok(bounds::xi_sequence(&r.inner, kmax, tol).map_err(err)?.values)
}

#[pyfunction]
fn bound_general(x: f64, n: usize) -> PyResult<f64> {
    bounds::bound_general(x, n).map_err(err)
}

#[pyfunction]
fn bound_bipartite(x: f64, n: usize) -> f64 {
    bounds::bound_bipartite(x, n)
}

#[pyfunction]
fn bound_matrix(x: f64, ell: usize, trace: f64) -> f64 {
    bounds::bound_matrix(x, ell, trace)
}

fn build_report(source: &Source<'_>, name: &str, kmax: usize, tol: f64) -> PyResult<Report> {
    match source {
        Source::Graph(g) => Report::for_graph(name, &g.inner, kmax, tol, false),
        Source::Matrix(m) => Report::for_matrix(name, &m.inner, kmax, tol, false),
    }
    .map_err(err)
}

/// Bound table as a dict. Graphs must be connected.
#[pyfunction]
#[pyo3(signature = (source, kmax=DEFAULT_KMAX, tol=DEFAULT_TOL))]
fn bound_table<'py>(
    py: Python<'py>,
    source: Source<'_>,
    kmax: usize,
    tol: f64,
) -> PyResult<Bound<'py, PyAny>> {
    let table = match &source {
        Source::Graph(g) => bounds::bound_table_graph(&g.inner, kmax, tol),
        Source::Matrix(m) => bounds::bound_table_matrix(&m.inner, kmax, tol),
    }
    .map_err(err)?;
    to_py(py, &table)
}

/// Full report (classification, table, certificate), as the CLI writes it.
#[pyfunction]
#[pyo3(signature = (source, name="input", kmax=DEFAULT_KMAX, tol=DEFAULT_TOL))]
fn report<'py>(
    py: Python<'py>,
    source: Source<'_>,
    name: &str,
    kmax: usize,
    tol: f64,
) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &build_report(&source, name, kmax, tol)?)
}

/// Runs every invariant check; the dict has `violations` and `notes`.
#[pyfunction]
#[pyo3(signature = (source, kmax=DEFAULT_KMAX, tol=DEFAULT_TOL))]
fn check<'py>(
    py: Python<'py>,
    source: Source<'_>,
    kmax: usize,
    tol: f64,
) -> PyResult<Bound<'py, PyAny>> {
    let verdict = match &source {
        Source::Graph(g) => verify::verify_graph(&g.inner, kmax, tol),
        Source::Matrix(m) => verify::verify_matrix(&m.inner, kmax, tol),
    }
    .map_err(err)?;
    to_py(py, &verdict)
}

#[pymodule]
fn estrada(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyMatrix>()?;
    m.add_function(wrap_pyfunction!(eigenvalues, m)?)?;
    m.add_function(wrap_pyfunction!(estrada_index, m)?)?;
    m.add_function(wrap_pyfunction!(spectral_radius, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(xi_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(bound_general, m)?)?;
    m.add_function(wrap_pyfunction!(bound_bipartite, m)?)?;
    m.add_function(wrap_pyfunction!(bound_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(bound_table, m)?)?;
    m.add_function(wrap_pyfunction!(report, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    Ok(())
}
