//! Python bindings. Reports and profiles come back as plain dicts.

use cutdim_core::cli::{self, Statement};
use cutdim_core::composer::{self, Composition};
use cutdim_core::io::{self, Built, GraphJson};
use cutdim_core::resolver::{Limits, Resolver};
use cutdim_core::{metrics, Graph};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

create_exception!(cutdim, CutdimError, PyValueError);

fn err(e: cutdim_core::Error) -> PyErr {
    CutdimError::new_err(e.to_string())
}

fn to_py<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn resolver(g: &PyGraph, max_n: usize) -> PyResult<Resolver> {
    let limits = Limits {
        max_enum_order: max_n,
        ..Limits::default()
    };
    Resolver::with_limits(&g.0, limits).map_err(err)
}

#[pyclass(name = "Graph", module = "cutdim", frozen)]
pub struct PyGraph(Graph);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Graph::new(n, &edges).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        Graph::path(n).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        Graph::cycle(n).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        Graph::complete(n).map(PyGraph).map_err(err)
    }

    /// `K_{1,r}` with center `0`.
    #[staticmethod]
    fn star(r: usize) -> PyResult<Self> {
        Graph::star(r).map(PyGraph).map_err(err)
    }

    /// Graph JSON, or any recipe that builds a graph.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let built = io::parse_recipe(text)
            .and_then(|r| r.build())
            .map_err(err)?;
        Ok(PyGraph(built.graph().clone()))
    }

    fn to_json(&self) -> String {
        io::graph_to_json(&self.0)
    }

    /// `K_1 + self`; the new vertex is labelled `self.order`.
    fn join_with_k1(&self) -> Self {
        PyGraph(Graph::join_with_k1(&self.0))
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().to_vec()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.0.order() {
            return Err(CutdimError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.0.neighbors(v).to_vec())
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn __len__(&self) -> usize {
        self.0.order()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.0.order(), self.0.size())
    }
}

#[pyclass(name = "Composition", module = "cutdim", frozen)]
pub struct PyComposition(Composition);

#[pymethods]
impl PyComposition {
    /// Builds a composition from recipe JSON.
    #[staticmethod]
    fn from_recipe(text: &str) -> PyResult<Self> {
        match io::parse_recipe(text)
            .and_then(|r| r.build())
            .map_err(err)?
        {
            Built::Composition(c) => Ok(PyComposition(c)),
            Built::Graph(_) => Err(CutdimError::new_err("recipe builds a plain graph")),
        }
    }

    #[getter]
    fn graph(&self) -> PyGraph {
        PyGraph(self.0.graph().clone())
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    /// Composed label of every vertex of component `i`.
    fn images(&self, i: usize) -> PyResult<Vec<usize>> {
        self.check(i)?;
        Ok(self.0.images(i).to_vec())
    }

    fn profiles<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.0.profiles())
    }

    fn dim_star(&self, i: usize) -> PyResult<usize> {
        self.check(i)?;
        self.0.dim_star(i, Limits::default()).map_err(err)
    }

    fn tau(&self, i: usize) -> PyResult<usize> {
        self.check(i)?;
        self.0.tau(i, Limits::default()).map_err(err)
    }

    fn to_json<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &GraphJson::from(self.0.graph()))
    }

    fn __repr__(&self) -> String {
        format!(
            "Composition(k={}, n={})",
            self.0.len(),
            self.0.graph().order()
        )
    }
}

impl PyComposition {
    fn check(&self, i: usize) -> PyResult<()> {
        if i < self.0.len() {
            Ok(())
        } else {
            Err(CutdimError::new_err(format!("component {i} out of range")))
        }
    }
}

/// `(dim, basis)` with the lexicographically least basis.
#[pyfunction]
fn metric_dimension(g: &PyGraph) -> PyResult<(usize, Vec<usize>)> {
    let b = resolver(g, Limits::default().max_enum_order)?
        .metric_dimension()
        .map_err(err)?;
    Ok((b.size, b.vertices))
}

#[pyfunction]
fn is_resolving(g: &PyGraph, w: Vec<usize>) -> PyResult<bool> {
    cutdim_core::resolver::is_resolving(&g.0, &w).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, cap = 1_000_000, max_n = 24))]
fn enumerate_bases<'py>(
    py: Python<'py>,
    g: &PyGraph,
    cap: usize,
    max_n: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let limits = Limits {
        max_enum_order: max_n,
        basis_cap: cap,
    };
    let report = Resolver::with_limits(&g.0, limits)
        .and_then(|r| r.enumerate_bases())
        .map_err(err)?;
    to_py(py, &report)
}

#[pyfunction]
#[pyo3(signature = (g, max_n = 24))]
fn upper_metric_dimension(g: &PyGraph, max_n: usize) -> PyResult<usize> {
    resolver(g, max_n)?.upper_metric_dimension().map_err(err)
}

/// `(dim*, witness)` for attachment set `a`.
#[pyfunction]
fn attaching_dimension(g: &PyGraph, a: Vec<usize>) -> PyResult<(usize, Vec<usize>)> {
    let b = cutdim_core::resolver::attaching_dimension(&g.0, &a).map_err(err)?;
    Ok((b.size, b.vertices))
}

#[pyfunction]
fn basis_membership(g: &PyGraph, v: usize) -> PyResult<bool> {
    cutdim_core::resolver::basis_membership(&g.0, v).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, max_n = 24))]
fn isolation_index(g: &PyGraph, max_n: usize) -> PyResult<usize> {
    resolver(g, max_n)?.isolation_index().map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, a, max_n = 24))]
fn tau(g: &PyGraph, a: Vec<usize>, max_n: usize) -> PyResult<usize> {
    resolver(g, max_n)?.tau(&a).map_err(err)
}

/// `(gamma, witness)`.
#[pyfunction]
fn domination_number(g: &PyGraph) -> PyResult<(usize, Vec<usize>)> {
    metrics::domination_number(&g.0).map_err(err)
}

#[pyfunction]
fn rooted_product(g: &PyGraph, h: &PyGraph, root: usize) -> PyResult<PyComposition> {
    composer::rooted_product_uniform(&g.0, &h.0, root)
        .map(PyComposition)
        .map_err(err)
}

#[pyfunction]
fn corona(g: &PyGraph, h: &PyGraph) -> PyResult<PyComposition> {
    composer::corona_uniform(&g.0, &h.0)
        .map(PyComposition)
        .map_err(err)
}

/// Checks a closed formula on recipe JSON; returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (statement, recipe, p_len = 2))]
fn verify<'py>(
    py: Python<'py>,
    statement: &str,
    recipe: &str,
    p_len: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let statement: Statement = statement.parse().map_err(err)?;
    let recipe = io::parse_recipe(recipe).map_err(err)?;
    let report = cli::verify(statement, &recipe, p_len, Limits::default()).map_err(err)?;
    to_py(py, &report)
}

#[pymodule]
fn cutdim(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("CutdimError", m.py().get_type::<CutdimError>())?;
    m.add_class::<PyGraph>()?;
    m.add_class::<PyComposition>()?;
    m.add_function(wrap_pyfunction!(metric_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(is_resolving, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_bases, m)?)?;
    m.add_function(wrap_pyfunction!(upper_metric_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(attaching_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(basis_membership, m)?)?;
    m.add_function(wrap_pyfunction!(isolation_index, m)?)?;
    m.add_function(wrap_pyfunction!(tau, m)?)?;
    m.add_function(wrap_pyfunction!(domination_number, m)?)?;
    m.add_function(wrap_pyfunction!(rooted_product, m)?)?;
    m.add_function(wrap_pyfunction!(corona, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
