//! Python bindings: `Graph` and `FractalGraph` plus the decimation and
//! bound functions, as the `nee_py` extension module.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use nee::bounds;
use nee::decimation;
use nee::error::Error;
use nee::fractal;
use nee::graph;
use nee::indices::{self, LeeVariant};
use nee::spectra;

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::NoConvergence { .. } | Error::NonFiniteMatrix => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Simple undirected graph with 0-based dense vertex labels.
#[pyclass(frozen, name = "Graph", from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: graph::Graph,
}

#[pymethods]
impl PyGraph {
    /// Build from an explicit edge list; duplicate edges are an error.
    #[staticmethod]
    fn from_edge_list(n_vertices: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Self {
            inner: graph::Graph::from_edge_list(n_vertices, &edges).map_err(to_py_err)?,
        })
    }

    /// Parse the shared edge-list text format.
    #[staticmethod]
    fn parse_edge_list(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: graph::parse_edge_list(text).map_err(to_py_err)?,
        })
    }

    #[staticmethod]
    fn complete(s: usize) -> PyResult<Self> {
        Ok(Self {
            inner: graph::Graph::complete(s).map_err(to_py_err)?,
        })
    }

    #[staticmethod]
    fn complete_bipartite(a: usize, b: usize) -> PyResult<Self> {
        Ok(Self {
            inner: graph::Graph::complete_bipartite(a, b).map_err(to_py_err)?,
        })
    }

    /// Deterministic G(n, p): same seed, same graph, on every platform.
    #[staticmethod]
    #[pyo3(signature = (n, p, seed = 0))]
    fn erdos_renyi(n: usize, p: f64, seed: u64) -> PyResult<Self> {
        Ok(Self {
            inner: graph::Graph::erdos_renyi(n, p, seed).map_err(to_py_err)?,
        })
    }

    #[staticmethod]
    fn disjoint_union(parts: Vec<PyGraph>) -> Self {
        let graphs: Vec<_> = parts.into_iter().map(|p| p.inner).collect();
        Self {
            inner: graph::Graph::disjoint_union(&graphs),
        }
    }

    #[getter]
    fn n_vertices(&self) -> usize {
        self.inner.n_vertices()
    }

    #[getter]
    fn n_edges(&self) -> usize {
        self.inner.n_edges()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn degrees(&self) -> Vec<usize> {
        (0..self.inner.n_vertices())
            .map(|v| self.inner.degree(v))
            .collect()
    }

    /// (component count, isolated-vertex count).
    fn component_stats(&self) -> (usize, usize) {
        let stats = self.inner.component_stats();
        (stats.components, stats.isolated)
    }

    fn is_bipartite(&self) -> bool {
        self.inner.is_bipartite()
    }

    /// Clique order s if the graph is a union of K_s components plus
    /// isolated vertices, else None.
    fn clique_union_order(&self) -> Option<usize> {
        self.inner.clique_union_order()
    }

    /// Adjacency eigenvalues, descending.
    fn adjacency_spectrum(&self) -> PyResult<Vec<f64>> {
        Ok(spectra::adjacency_spectrum(&self.inner)
            .map_err(to_py_err)?
            .values()
            .to_vec())
    }

    /// Laplacian eigenvalues, descending.
    fn laplacian_spectrum(&self) -> PyResult<Vec<f64>> {
        Ok(spectra::laplacian_spectrum(&self.inner)
            .map_err(to_py_err)?
            .values()
            .to_vec())
    }

    /// Normalized Laplacian eigenvalues, descending.
    fn normalized_laplacian_spectrum(&self) -> PyResult<Vec<f64>> {
        Ok(spectra::normalized_laplacian_spectrum(&self.inner)
            .map_err(to_py_err)?
            .values()
            .to_vec())
    }

    fn estrada_index(&self) -> PyResult<f64> {
        indices::estrada_index(&self.inner).map_err(to_py_err)
    }

    /// Laplacian Estrada index; variant is "shifted" (default) or "plain".
    #[pyo3(signature = (variant = "shifted"))]
    fn laplacian_estrada_index(&self, variant: &str) -> PyResult<f64> {
        let variant = match variant {
            "shifted" => LeeVariant::Shifted,
            "plain" => LeeVariant::Plain,
            other => {
                return Err(PyValueError::new_err(format!(
                    "variant must be \"shifted\" or \"plain\", got {other:?}"
                )))
            }
        };
        indices::laplacian_estrada_index(&self.inner, variant).map_err(to_py_err)
    }

    fn normalized_estrada_index(&self) -> PyResult<f64> {
        indices::normalized_estrada_index(&self.inner).map_err(to_py_err)
    }

    /// Evaluate every applicable NEE bound and equality flag.
    #[pyo3(signature = (tol = bounds::DEFAULT_EQUALITY_TOL))]
    fn evaluate_bounds(&self, tol: f64) -> PyResult<PyBoundReport> {
        Ok(PyBoundReport {
            inner: bounds::evaluate_bounds(&self.inner, tol).map_err(to_py_err)?,
        })
    }

    fn to_edge_list(&self) -> String {
        self.inner.to_edge_list()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n_vertices={}, n_edges={})",
            self.inner.n_vertices(),
            self.inner.n_edges()
        )
    }
}

/// Self-similar tree G_n(m) with its center metadata.
#[pyclass(frozen, name = "FractalGraph")]
struct PyFractalGraph {
    inner: fractal::FractalGraph,
}

#[pymethods]
impl PyFractalGraph {
    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn n_vertices(&self) -> usize {
        self.inner.graph().n_vertices()
    }

    #[getter]
    fn n_edges(&self) -> usize {
        self.inner.graph().n_edges()
    }

    #[getter]
    fn inmost(&self) -> Option<usize> {
        self.inner.inmost()
    }

    #[getter]
    fn outmost(&self) -> Vec<usize> {
        self.inner.outmost().to_vec()
    }

    /// The underlying plain graph.
    fn graph(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.graph().clone(),
        }
    }

    /// Edge-list text with m/n/inmost/outmost header comments.
    fn to_edge_list(&self) -> String {
        self.inner.to_edge_list()
    }

    fn __repr__(&self) -> String {
        format!(
            "FractalGraph(m={}, n={}, n_vertices={})",
            self.inner.m(),
            self.inner.n(),
            self.inner.graph().n_vertices()
        )
    }
}

/// NEE plus every applicable bound value, equality flag, and soundness
/// tripwire.
#[pyclass(frozen, name = "BoundReport")]
struct PyBoundReport {
    inner: bounds::BoundReport,
}

#[pymethods]
impl PyBoundReport {
    #[getter]
    fn order(&self) -> usize {
        self.inner.order
    }

    #[getter]
    fn components(&self) -> usize {
        self.inner.components
    }

    #[getter]
    fn isolated(&self) -> usize {
        self.inner.isolated
    }

    #[getter]
    fn connected(&self) -> bool {
        self.inner.connected
    }

    #[getter]
    fn bipartite(&self) -> bool {
        self.inner.bipartite
    }

    #[getter]
    fn nee(&self) -> f64 {
        self.inner.nee
    }

    #[getter]
    fn connected_lower(&self) -> Option<f64> {
        self.inner.connected_lower
    }

    #[getter]
    fn bipartite_lower(&self) -> Option<f64> {
        self.inner.bipartite_lower
    }

    #[getter]
    fn bipartite_upper(&self) -> Option<f64> {
        self.inner.bipartite_upper
    }

    #[getter]
    fn component_lower(&self) -> f64 {
        self.inner.component_lower
    }

    #[getter]
    fn connected_equality(&self) -> Option<bool> {
        self.inner.connected_equality
    }

    #[getter]
    fn bipartite_lower_equality(&self) -> Option<bool> {
        self.inner.bipartite_lower_equality
    }

    #[getter]
    fn bipartite_upper_equality(&self) -> Option<bool> {
        self.inner.bipartite_upper_equality
    }

    #[getter]
    fn component_equality(&self) -> bool {
        self.inner.component_equality
    }

    #[getter]
    fn clique_union_order(&self) -> Option<usize> {
        self.inner.clique_union_order
    }

    #[getter]
    fn sound(&self) -> bool {
        self.inner.is_sound()
    }

    #[getter]
    fn violations(&self) -> Vec<String> {
        self.inner.violations.clone()
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn __repr__(&self) -> String {
        format!(
            "BoundReport(nee={}, component_lower={}, sound={})",
            self.inner.nee,
            self.inner.component_lower,
            self.inner.is_sound()
        )
    }
}

/// Build G_n(m) by iterated edge subdivision.
#[pyfunction]
fn build_fractal(m: usize, n: usize) -> PyResult<PyFractalGraph> {
    Ok(PyFractalGraph {
        inner: fractal::build_fractal(m, n).map_err(to_py_err)?,
    })
}

/// Build G_n(m) by coalescing m+2 replicas of the previous generation.
#[pyfunction]
fn build_fractal_merged(m: usize, n: usize) -> PyResult<PyFractalGraph> {
    Ok(PyFractalGraph {
        inner: fractal::build_fractal_merged(m, n).map_err(to_py_err)?,
    })
}

/// (N, E) = ((m+2)^n + 1, (m+2)^n).
#[pyfunction]
fn fractal_counts(m: usize, n: usize) -> PyResult<(u64, u64)> {
    fractal::fractal_counts(m, n).map_err(to_py_err)
}

/// Exact normalized Laplacian spectrum of G_n(m) as ascending
/// (value, multiplicity) pairs.
#[pyfunction]
fn decimation_spectrum(m: usize, n: usize) -> PyResult<Vec<(f64, u64)>> {
    Ok(decimation::decimation_spectrum(m, n)
        .map_err(to_py_err)?
        .pairs()
        .to_vec())
}

/// NEE of G_n(m) from the exact spectrum; O(N) instead of O(N^3).
#[pyfunction]
fn decimation_nee(m: usize, n: usize) -> PyResult<f64> {
    decimation::decimation_nee(m, n).map_err(to_py_err)
}

/// Multiplicity of eigenvalue 1 at generation n >= 1: m(m+2)^(n-1) + 1.
#[pyfunction]
fn multiplicity_of_one(m: usize, n: usize) -> PyResult<u64> {
    decimation::multiplicity_of_one(m, n).map_err(to_py_err)
}

/// Rank of (normalized Laplacian - I) at generation n >= 1: 2(m+2)^(n-1).
#[pyfunction]
fn predicted_rank(m: usize, n: usize) -> PyResult<u64> {
    decimation::predicted_rank(m, n).map_err(to_py_err)
}

/// Lower bound for connected graphs of order n, attained by K_n.
#[pyfunction]
fn connected_lower_bound(n: usize) -> PyResult<f64> {
    bounds::connected_lower_bound(n).map_err(to_py_err)
}

/// (lower, upper) for connected bipartite graphs with the given maximum
/// and minimum degree; both attained by regular complete bipartite graphs.
#[pyfunction]
fn bipartite_bounds(n: usize, max_deg: usize, min_deg: usize) -> PyResult<(f64, f64)> {
    bounds::bipartite_bounds(n, max_deg, min_deg).map_err(to_py_err)
}

/// Lower bound for graphs with c components, r of them isolated vertices.
#[pyfunction]
fn component_lower_bound(n: usize, c: usize, r: usize) -> PyResult<f64> {
    bounds::component_lower_bound(n, c, r).map_err(to_py_err)
}

#[pymodule]
fn nee_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyFractalGraph>()?;
    m.add_class::<PyBoundReport>()?;
    m.add_function(wrap_pyfunction!(build_fractal, m)?)?;
    m.add_function(wrap_pyfunction!(build_fractal_merged, m)?)?;
    m.add_function(wrap_pyfunction!(fractal_counts, m)?)?;
    m.add_function(wrap_pyfunction!(decimation_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(decimation_nee, m)?)?;
    m.add_function(wrap_pyfunction!(multiplicity_of_one, m)?)?;
    m.add_function(wrap_pyfunction!(predicted_rank, m)?)?;
    m.add_function(wrap_pyfunction!(connected_lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(bipartite_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(component_lower_bound, m)?)?;
    Ok(())
}
