//! Python bindings: matroids, 2-sums, trees of matroids, canonical
//! decomposition, rays and the acceptance suite.

use matroid_forge as forge;
use pyo3::exceptions::{PyOSError, PyValueError};
use pyo3::prelude::*;

fn py_err(e: forge::Error) -> PyErr {
    match e {
        forge::Error::Io(io) => PyOSError::new_err(io.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

trait IntoPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> IntoPy<T> for forge::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(py_err)
    }
}

/// A finite matroid given by its circuits.
#[pyclass(name = "Matroid", module = "matroid_forge_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyMatroid {
    inner: forge::Matroid,
}

impl From<forge::Matroid> for PyMatroid {
    fn from(inner: forge::Matroid) -> Self {
        PyMatroid { inner }
    }
}

#[pymethods]
impl PyMatroid {
    /// Validates the circuit axioms; raises ValueError with the failing axiom.
    #[new]
    fn new(ground: Vec<String>, circuits: Vec<Vec<String>>) -> PyResult<Self> {
        forge::Matroid::from_circuits(&ground, &circuits).py().map(Into::into)
    }

    /// Parses the `ground:` / `circuit:` (or `edge`) text format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        forge::format::parse_matroid(text).py().map(Into::into)
    }

    /// Cycle matroid of `(label, u, v)` edges.
    #[staticmethod]
    fn from_edges(edges: Vec<(String, String, String)>) -> PyResult<Self> {
        Ok(forge::FiniteGraph::new(edges).py()?.cycle_matroid().into())
    }

    #[staticmethod]
    fn uniform(rank: usize, n: usize) -> PyResult<Self> {
        forge::Matroid::uniform_n(rank, n).py().map(Into::into)
    }

    #[getter]
    fn ground(&self) -> Vec<String> {
        self.inner.ground().to_vec()
    }

    #[getter]
    fn circuits(&self) -> Vec<Vec<String>> {
        self.inner.circuit_labels()
    }

    #[getter]
    fn cocircuits(&self) -> Vec<Vec<String>> {
        self.inner.cocircuits().iter().map(|b| self.inner.labels(*b)).collect()
    }

    #[getter]
    fn bases(&self) -> Vec<Vec<String>> {
        self.inner.bases().iter().map(|b| self.inner.labels(*b)).collect()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Matroid(|E|={}, rank={}, circuits={})", self.inner.len(), self.inner.rank(), self.inner.circuits().len())
    }

    fn dual(&self) -> Self {
        self.inner.dual().into()
    }

    #[pyo3(signature = (contract = Vec::new(), delete = Vec::new()))]
    fn minor(&self, contract: Vec<String>, delete: Vec<String>) -> PyResult<Self> {
        self.inner.minor_by_labels(&contract, &delete).py().map(Into::into)
    }

    /// True iff `labels` is a union of circuits.
    fn is_scrawl(&self, labels: Vec<String>) -> PyResult<bool> {
        Ok(self.inner.is_scrawl(self.inner.set_of(&labels).py()?).is_scrawl())
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn has_uniform_minor(&self, rank: usize, n: usize) -> bool {
        self.inner.has_uniform_minor(rank, n)
    }
}

/// 2-sum along the one label both matroids share.
#[pyfunction]
fn two_sum(left: &PyMatroid, right: &PyMatroid, shared: &str) -> PyResult<PyMatroid> {
    forge::two_sum(&forge::SharedEdgeWitness::new(&left.inner, &right.inner, shared))
        .py()
        .map(Into::into)
}

/// Glues a tree given in the `node` / `treeedge` text format.
#[pyfunction]
fn glue_tree(text: &str) -> PyResult<PyMatroid> {
    forge::format::parse_tree(text).py()?.glue().py().map(Into::into)
}

/// Canonical decomposition as `(torsos, edges)`: each torso is
/// `(node id, kind, ground)`, each edge `(id, id, dummy)`.
#[pyfunction]
#[allow(clippy::type_complexity)]
fn decompose(m: &PyMatroid) -> PyResult<(Vec<(String, String, Vec<String>)>, Vec<(String, String, String)>)> {
    let c = forge::canonical_decompose(&m.inner).py()?;
    let tree = forge::decomposition::decomposition_tree(&m.inner, &c.decomposition).py()?;
    let nodes = tree
        .nodes()
        .iter()
        .zip(&c.kinds)
        .map(|(n, k)| {
            let kind = k.map_or_else(|| "unclassified".to_string(), |k| k.to_string());
            (n.id.clone(), kind, n.matroid.ground().to_vec())
        })
        .collect();
    let edges = tree
        .edges()
        .iter()
        .map(|e| (tree.nodes()[e.a].id.clone(), tree.nodes()[e.b].id.clone(), e.dummy.clone()))
        .collect();
    Ok((nodes, edges))
}

/// The canonical decomposition in DOT.
#[pyfunction]
fn decompose_dot(m: &PyMatroid) -> PyResult<String> {
    let c = forge::canonical_decompose(&m.inner).py()?;
    forge::dot::decomposition_to_dot(&m.inner, &c.decomposition).py()
}

/// True iff decomposing and gluing back gives the same circuits.
#[pyfunction]
fn roundtrip(m: &PyMatroid) -> PyResult<bool> {
    Ok(forge::decomposition::roundtrip(&m.inner).py()?.identity)
}

/// An eventually periodic ray of matroids.
#[pyclass(name = "RayTree", module = "matroid_forge_py", frozen)]
struct PyRayTree {
    inner: forge::RayTree,
}

#[pymethods]
impl PyRayTree {
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyRayTree {
            inner: forge::format::parse_ray(text).py()?,
        })
    }

    /// The nice ray built from copies of K4.
    #[staticmethod]
    fn q_ray() -> Self {
        PyRayTree { inner: forge::q_ray() }
    }

    /// The ray of 4-element circuits through both dummies; not nice.
    #[staticmethod]
    fn c4_ray() -> Self {
        PyRayTree { inner: forge::c4_ray() }
    }

    fn is_nice(&self) -> bool {
        self.inner.is_nice().is_ok()
    }

    fn periodic_circuit_count(&self) -> usize {
        self.inner.periodic_circuits().len()
    }

    /// Finite circuits inside the first `depth` nodes.
    fn finite_circuits(&self, depth: usize) -> PyResult<Vec<Vec<String>>> {
        let w = self.inner.finite_circuits(depth).py()?;
        Ok(w.finite.iter().map(|s| w.labels(*s)).collect())
    }

    /// Whether the two end gluings differ on the window; needs a nice ray.
    fn gluings_differ(&self, depth: usize) -> PyResult<bool> {
        Ok(self.inner.psi_matroids_of_ray(depth).py()?.differ)
    }

    fn __str__(&self) -> String {
        forge::format::write_ray(&self.inner)
    }
}

/// Runs the acceptance suite; returns `(passed, report)`.
#[pyfunction]
#[pyo3(signature = (seed = forge::corpus::DEFAULT_SEED, verbose = false))]
fn run_suite(py: Python<'_>, seed: u64, verbose: bool) -> (bool, String) {
    let report = py.detach(|| forge::suite::run_suite(forge::suite::SuiteConfig { seed, verbose }));
    (report.passed(), report.render(verbose))
}

#[pymodule]
fn matroid_forge_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMatroid>()?;
    m.add_class::<PyRayTree>()?;
    m.add_function(wrap_pyfunction!(two_sum, m)?)?;
    m.add_function(wrap_pyfunction!(glue_tree, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(decompose_dot, m)?)?;
    m.add_function(wrap_pyfunction!(roundtrip, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
