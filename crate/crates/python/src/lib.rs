//! Python bindings. Vertices are 0-based; coefficients come back as
//! `fractions.Fraction`, partitions as tuples.

use std::collections::BTreeMap;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};

use pathcycle_core::combinatorics::IntegerPartition;
use pathcycle_core::structures::{self as st, Structure};
use pathcycle_core::symfunc::json::{function_from_json, parse_json, sym2_to_json, sym_to_json, FunctionDoc};
use pathcycle_core::symfunc::{self as sf, Basis, BivarPoly};
use pathcycle_core::{invariants as inv, verify, Error, Rational};

fn err(e: Error) -> PyErr {
    match e {
        Error::Consistency(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn basis(name: &str) -> PyResult<Basis> {
    name.parse().map_err(err)
}

fn fraction<'py>(py: Python<'py>, c: &Rational) -> PyResult<Bound<'py, PyAny>> {
    // via decimal strings so big numerators survive
    let int = py.import("builtins")?.getattr("int")?;
    let num = int.call1((c.numer().to_string(),))?;
    let den = int.call1((c.denom().to_string(),))?;
    py.import("fractions")?.getattr("Fraction")?.call1((num, den))
}

fn part<'py>(py: Python<'py>, l: &IntegerPartition) -> PyResult<Bound<'py, PyTuple>> {
    PyTuple::new(py, l.parts())
}

fn sym_dict<'py>(py: Python<'py>, m: &BTreeMap<IntegerPartition, Rational>) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    for (l, c) in m {
        d.set_item(part(py, l)?, fraction(py, c)?)?;
    }
    Ok(d)
}

fn bivar_dict<'py>(py: Python<'py>, p: &BivarPoly) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    for (&(a, b), c) in p.terms() {
        d.set_item((a, b), fraction(py, c)?)?;
    }
    Ok(d)
}

/// A simple graph.
#[pyclass(name = "Graph", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph(st::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph(st::Graph::from_edges(n, &edges).map_err(err)?))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges()
    }

    /// Chromatic symmetric function X_G.
    fn chromatic(&self) -> PyResult<PySymFunc> {
        Ok(PySymFunc(inv::chromatic_sym(&self.0).map_err(err)?))
    }

    /// X_G(t) as {t exponent: SymFunc}.
    fn xg_t(&self) -> PyResult<BTreeMap<u32, PySymFunc>> {
        let t = inv::xg_t(&self.0).map_err(err)?;
        Ok(t.terms().iter().map(|(&k, g)| (k, PySymFunc(g.clone()))).collect())
    }

    /// Coefficients of the superfied chromatic polynomial, keyed by (m, n) exponents.
    fn chi_tilde<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        bivar_dict(py, &inv::chi_tilde(&self.0).map_err(err)?)
    }

    fn supercolor_count(&self, i: u32, j: u32) -> PyResult<u64> {
        inv::supercolor_count(&self.0, i, j).map_err(err)
    }

    /// Number of permutations of each G-ascent type.
    fn ascent_counts<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for (l, n) in inv::g_ascent_counts(&self.0) {
            d.set_item(part(py, &l)?, n)?;
        }
        Ok(d)
    }

    fn __repr__(&self) -> String {
        format!("Graph({}, {:?})", self.0.n(), self.0.edges())
    }
}

/// A digraph, possibly with loops; also read as a board.
#[pyclass(name = "Digraph", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyDigraph(st::Digraph);

#[pymethods]
impl PyDigraph {
    #[new]
    #[pyo3(signature = (d, edges = Vec::new()))]
    fn new(d: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyDigraph(st::Digraph::from_edges(d, &edges).map_err(err)?))
    }

    #[getter]
    fn d(&self) -> usize {
        self.0.d()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges()
    }

    fn complement(&self) -> Self {
        PyDigraph(self.0.complement())
    }

    fn ordinal_join(&self, other: &PyDigraph) -> PyResult<Self> {
        Ok(PyDigraph(self.0.ordinal_join(&other.0).map_err(err)?))
    }

    /// Path-cycle symmetric function Ξ_D.
    fn path_cycle(&self) -> PyResult<PySymFunc2> {
        Ok(PySymFunc2(inv::path_cycle_sym(&self.0).map_err(err)?))
    }

    /// Cover polynomial, keyed by (i, j) exponents.
    fn cover_poly<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        bivar_dict(py, &inv::cover_poly(&self.0).map_err(err)?)
    }

    fn rook_numbers(&self) -> Vec<u64> {
        inv::rook_numbers(&self.0)
    }

    /// Factorial rook polynomial, keyed by (i, j) exponents (j never occurs).
    fn factorial_poly<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        bivar_dict(py, &inv::factorial_poly(&self.0))
    }

    fn is_acyclic(&self) -> bool {
        self.0.is_acyclic()
    }

    fn __repr__(&self) -> String {
        format!("Digraph({}, {:?})", self.0.d(), self.0.edges())
    }
}

/// A symmetric function over the rationals.
#[pyclass(name = "SymFunc", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PySymFunc(sf::SymFunc);

#[pymethods]
impl PySymFunc {
    /// A single basis element such as `SymFunc.basis("s", (2, 1))`.
    #[staticmethod]
    fn basis(name: &str, partition: Vec<u32>) -> PyResult<Self> {
        let lam = IntegerPartition::new(partition).map_err(err)?;
        Ok(PySymFunc(sf::SymFunc::basis_element(basis(name)?, lam).map_err(err)?))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        match function_from_json(&parse_json(text).map_err(err)?).map_err(err)? {
            FunctionDoc::One(g) => Ok(PySymFunc(g)),
            FunctionDoc::Two(_) => Err(PyValueError::new_err("document has a y alphabet")),
        }
    }

    #[pyo3(signature = (basis_name = "m"))]
    fn to_json(&self, basis_name: &str) -> PyResult<String> {
        Ok(sym_to_json(&self.0, basis(basis_name)?).map_err(err)?.to_string())
    }

    /// Coefficients in the named basis.
    #[pyo3(signature = (basis_name = "m"))]
    fn coefficients<'py>(&self, py: Python<'py>, basis_name: &str) -> PyResult<Bound<'py, PyDict>> {
        sym_dict(py, &self.0.convert(basis(basis_name)?).map_err(err)?)
    }

    fn omega(&self) -> Self {
        PySymFunc(self.0.omega())
    }

    fn is_positive_in(&self, basis_name: &str) -> PyResult<bool> {
        self.0.is_positive_in(basis(basis_name)?).map_err(err)
    }

    #[pyo3(signature = (basis_name = "m"))]
    fn pretty(&self, basis_name: &str) -> PyResult<String> {
        self.0.pretty(basis(basis_name)?).map_err(err)
    }

    fn __add__(&self, other: &PySymFunc) -> Self {
        PySymFunc(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &PySymFunc) -> Self {
        PySymFunc(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &PySymFunc) -> Self {
        PySymFunc(&self.0 * &other.0)
    }

    fn __repr__(&self) -> String {
        format!("SymFunc({})", self.0)
    }
}

/// A symmetric function in two alphabets x and y.
#[pyclass(name = "SymFunc2", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PySymFunc2(sf::SymFunc2);

#[pymethods]
impl PySymFunc2 {
    #[pyo3(signature = (basis_name = "m"))]
    fn to_json(&self, basis_name: &str) -> PyResult<String> {
        Ok(sym2_to_json(&self.0, basis(basis_name)?).map_err(err)?.to_string())
    }

    /// Coefficients keyed by (x partition, y partition); y is always in p.
    #[pyo3(signature = (basis_name = "m"))]
    fn coefficients<'py>(&self, py: Python<'py>, basis_name: &str) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for ((l, m), c) in self.0.convert_x(basis(basis_name)?).map_err(err)? {
            d.set_item((part(py, &l)?, part(py, &m)?), fraction(py, &c)?)?;
        }
        Ok(d)
    }

    /// Set y to zero.
    fn restrict_y0(&self) -> PySymFunc {
        PySymFunc(self.0.restrict_y0())
    }

    fn iota(&self) -> Self {
        PySymFunc2(self.0.iota())
    }

    fn xi_hat(&self) -> Self {
        PySymFunc2(self.0.xi_hat())
    }

    /// Specialization x = 1^i, y = 1^j, keyed by (i, j) exponents.
    fn specialize<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        bivar_dict(py, &self.0.specialize2())
    }

    #[pyo3(signature = (basis_name = "m"))]
    fn pretty(&self, basis_name: &str) -> PyResult<String> {
        self.0.pretty(basis(basis_name)?).map_err(err)
    }

    fn __mul__(&self, other: &PySymFunc2) -> Self {
        PySymFunc2(&self.0 * &other.0)
    }

    fn __repr__(&self) -> String {
        format!("SymFunc2({})", self.0)
    }
}

/// Superfication of a one-alphabet function.
#[pyfunction]
fn superficiate(g: &PySymFunc) -> PySymFunc2 {
    PySymFunc2(sf::superficiate(&g.0))
}

/// Parses the plain-text structure format; posets and trees come back as
/// their graph (posets also accept `.digraph` via `parse_digraph`).
#[pyfunction]
fn parse_graph(text: &str) -> PyResult<PyGraph> {
    match st::parse_structure(text).map_err(err)? {
        Structure::Graph(g) => Ok(PyGraph(g)),
        Structure::Tree(t) => Ok(PyGraph(t.graph().clone())),
        Structure::Poset(p) => Ok(PyGraph(p.incomparability_graph())),
        Structure::Digraph(_) => Err(PyValueError::new_err("expected a graph, tree or poset")),
    }
}

#[pyfunction]
fn parse_digraph(text: &str) -> PyResult<PyDigraph> {
    match st::parse_structure(text).map_err(err)? {
        Structure::Digraph(d) => Ok(PyDigraph(d)),
        Structure::Poset(p) => Ok(PyDigraph(p.digraph())),
        _ => Err(PyValueError::new_err("expected a digraph or poset")),
    }
}

fn report_dict<'py>(py: Python<'py>, r: &verify::CheckReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("check", &r.check_name)?;
    d.set_item("passed", r.passed())?;
    d.set_item("instances", r.instances_run)?;
    let failures: Vec<(String, String, String)> =
        r.failures.iter().map(|f| (f.instance.clone(), f.expected.clone(), f.actual.clone())).collect();
    d.set_item("failures", failures)?;
    Ok(d)
}

/// Runs `all`, a group or a named check; returns one dict per report.
#[pyfunction]
#[pyo3(signature = (selector = "all", max_vertices = 3, seed = 0))]
fn run_checks<'py>(py: Python<'py>, selector: &str, max_vertices: usize, seed: u64) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let config = verify::SuiteConfig::new(max_vertices, seed);
    let reports = py.detach(|| verify::run_suite(selector, &config)).map_err(err)?;
    reports.iter().map(|r| report_dict(py, r)).collect()
}

#[pyfunction]
fn check_names() -> Vec<&'static str> {
    verify::check_names()
}

/// The four-vertex census: a list of classes and the report.
#[pyfunction]
fn census<'py>(py: Python<'py>) -> PyResult<(Vec<Bound<'py, PyDict>>, Bound<'py, PyDict>)> {
    let c = verify::census_weakly_free_four().map_err(err)?;
    let mut classes = Vec::new();
    for k in &c.classes {
        let d = PyDict::new(py);
        d.set_item("representative", PyDigraph(k.representative.clone()))?;
        d.set_item("e_expansion", sym_dict(py, &k.e_expansion)?)?;
        d.set_item("s_expansion", sym_dict(py, &k.s_expansion)?)?;
        d.set_item("e_positive", k.e_positive)?;
        classes.push(d);
    }
    Ok((classes, report_dict(py, &c.report)?))
}

#[pymodule]
fn pathcycle(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyDigraph>()?;
    m.add_class::<PySymFunc>()?;
    m.add_class::<PySymFunc2>()?;
    m.add_function(wrap_pyfunction!(superficiate, m)?)?;
    m.add_function(wrap_pyfunction!(parse_graph, m)?)?;
    m.add_function(wrap_pyfunction!(parse_digraph, m)?)?;
    m.add_function(wrap_pyfunction!(run_checks, m)?)?;
    m.add_function(wrap_pyfunction!(check_names, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    Ok(())
}
