//! Python bindings. Vertex sets cross the boundary as sorted lists of ids.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use primetree::families::{self, FamilyKind};
use primetree::minimality::is_minimal_for_bruteforce;
use primetree::primality::tree_nontrivial_modules_witness;
use primetree::{ConditionReport, CountKind, Graph, TreeCert, VertexSet};

fn err(e: primetree::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Condition verdicts: `(index, statement, holds, witness ids)` per row.
#[pyclass(name = "ConditionReport", frozen)]
struct PyReport {
    #[pyo3(get)]
    overall: bool,
    #[pyo3(get)]
    conditions: Vec<(usize, String, bool, Vec<usize>)>,
}

impl From<ConditionReport> for PyReport {
    fn from(r: ConditionReport) -> Self {
        PyReport {
            overall: r.overall,
            conditions: r
                .conditions
                .iter()
                .map(|c| (c.index, c.statement.to_string(), c.holds, c.witness.map(|w| w.vertices()).unwrap_or_default()))
                .collect(),
        }
    }
}

#[pymethods]
impl PyReport {
    fn __bool__(&self) -> bool {
        self.overall
    }

    fn __repr__(&self) -> String {
        format!("ConditionReport(overall={})", if self.overall { "True" } else { "False" })
    }
}

/// A tree on vertices `0..n`.
#[pyclass(name = "Tree", frozen)]
struct PyTree {
    inner: TreeCert,
    labels: Option<Vec<String>>,
}

impl PyTree {
    fn wrap(inner: TreeCert) -> Self {
        PyTree { inner, labels: None }
    }
}

#[pymethods]
impl PyTree {
    #[new]
    #[pyo3(signature = (n, edges, labels=None))]
    fn new(n: usize, edges: Vec<(usize, usize)>, labels: Option<Vec<String>>) -> PyResult<Self> {
        if labels.as_ref().is_some_and(|l| l.len() != n) {
            return Err(PyValueError::new_err("one label per vertex"));
        }
        let graph = Graph::new(n, edges).map_err(err)?;
        Ok(PyTree { inner: TreeCert::new(graph).map_err(err)?, labels })
    }

    /// Parses the plain-text edge-list format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let list = primetree::parse_edge_list(text).map_err(err)?;
        Ok(PyTree { inner: TreeCert::new(list.graph).map_err(err)?, labels: list.labels })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.graph().edges().collect()
    }

    #[getter]
    fn labels(&self) -> Option<Vec<String>> {
        self.labels.clone()
    }

    #[getter]
    fn leaves(&self) -> Vec<usize> {
        self.inner.leaves().as_slice().to_vec()
    }

    fn is_prime(&self) -> bool {
        primetree::tree_is_prime(&self.inner)
    }

    /// A nontrivial module, or `None` when there is none.
    fn module_witness(&self) -> Option<Vec<usize>> {
        tree_nontrivial_modules_witness(&self.inner).map(|w| w.into_members().into_vec())
    }

    /// Vertices whose deletion keeps the tree prime.
    fn sigma(&self) -> PyResult<Vec<usize>> {
        Ok(primetree::tree_sigma(&self.inner).map_err(err)?.sigma.into_vec())
    }

    fn check_critical(&self, x: Vec<usize>) -> PyResult<PyReport> {
        Ok(primetree::check_critical_conditions(&self.inner, &VertexSet::from(x)).map_err(err)?.into())
    }

    fn check_minimal(&self, x: Vec<usize>) -> PyResult<PyReport> {
        Ok(primetree::check_minimal_conditions(&self.inner, &VertexSet::from(x)).map_err(err)?.into())
    }

    #[pyo3(signature = (x, brute=false))]
    fn is_minimal_for(&self, x: Vec<usize>, brute: bool) -> PyResult<bool> {
        let x = VertexSet::from(x);
        if brute {
            is_minimal_for_bruteforce(&self.inner, &x).map_err(err)
        } else {
            primetree::is_minimal_for(&self.inner, &x).map_err(err)
        }
    }

    /// `(subtree, host ids of its vertices)`.
    fn extract_minimal(&self, x: Vec<usize>) -> PyResult<(PyTree, Vec<usize>)> {
        let sub = primetree::extract_minimal_subtree(&self.inner, &VertexSet::from(x)).map_err(err)?;
        Ok((PyTree::wrap(sub.tree), sub.original))
    }

    fn critical_family(&self) -> PyResult<String> {
        Ok(primetree::classify_critical_family(&self.inner).map_err(err)?.to_string())
    }

    fn canonical_code(&self) -> String {
        primetree::canonical_form(&self.inner).to_hex()
    }

    fn is_isomorphic(&self, other: &PyTree) -> bool {
        primetree::are_isomorphic(&self.inner, &other.inner)
    }

    fn to_edge_list(&self) -> String {
        primetree::write_edge_list(self.inner.graph(), self.labels.as_deref(), &[])
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Tree(n={}, edges={:?})", self.inner.order(), self.edges())
    }
}

/// Family member by name (`path`, `A`, `Pkt`, `Pmn`, `Skmn`) and parameters.
#[pyfunction]
fn family(name: &str, params: Vec<usize>) -> PyResult<PyTree> {
    let kind = FamilyKind::parse(name).ok_or_else(|| PyValueError::new_err(format!("unknown family {name:?}")))?;
    let f = families::build(kind, &params).map_err(err)?;
    Ok(PyTree { inner: f.tree, labels: Some(f.spec.labels) })
}

/// All unlabeled trees on `n` vertices, one representative each.
#[pyfunction]
fn all_trees(n: usize) -> PyResult<Vec<PyTree>> {
    Ok(primetree::all_trees(n).map_err(err)?.map(PyTree::wrap).collect())
}

fn count_kind(what: &str) -> PyResult<CountKind> {
    CountKind::parse(what).ok_or_else(|| PyValueError::new_err(format!("unknown count {what:?}")))
}

#[pyfunction]
fn count_formula(what: &str, n: u64) -> PyResult<u64> {
    count_kind(what)?.formula(n).map_err(err)
}

/// Rows `(n, formula, enumerated)` from the first covered order to `nmax`.
#[pyfunction]
fn verify_formula(py: Python<'_>, what: &str, nmax: u64) -> PyResult<Vec<(u64, u64, u64)>> {
    let kind = count_kind(what)?;
    let table = py.detach(|| primetree::verify_formula(nmax, kind)).map_err(err)?;
    Ok(table.rows.iter().map(|r| (r.n, r.formula, r.enumerated)).collect())
}

#[pymodule(name = "primetree")]
fn primetree_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTree>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(all_trees, m)?)?;
    m.add_function(wrap_pyfunction!(count_formula, m)?)?;
    m.add_function(wrap_pyfunction!(verify_formula, m)?)?;
    Ok(())
}
