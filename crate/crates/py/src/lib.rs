//! Python bindings: networks, repairs, path-count weights, main paths, cuts,
//! islands and hubs and authorities.

use std::collections::BTreeMap;

use citenet::acyclic::{self, StandardizedNetwork};
use citenet::extract::{self, Subnetwork};
use citenet::network::{self, pajek, Arc};
use citenet::weights::{self, WeightValue, WeightValues, WeightVector};
use citenet::{rank, Error, Method, NumericMode, WeightResult};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyOverflowError, PyValueError};
use pyo3::prelude::*;

create_exception!(citenet, ParseError, PyValueError, "Malformed Pajek input.");
create_exception!(citenet, CyclicError, PyValueError, "The network has a cycle; repair it first.");
create_exception!(citenet, CitenetError, PyException, "Internal failure.");

fn to_py(err: Error) -> PyErr {
    let message = err.to_string();
    match err {
        Error::Parse { .. } => ParseError::new_err(message),
        Error::Cyclic { .. } => CyclicError::new_err(message),
        Error::Overflow { .. } => PyOverflowError::new_err(message),
        Error::Argument(_) => PyValueError::new_err(message),
        Error::Internal(_) => CitenetError::new_err(message),
    }
}

fn parse_method(name: &str) -> PyResult<Method> {
    name.parse().map_err(to_py)
}

fn parse_mode(name: &str) -> PyResult<NumericMode> {
    name.parse().map_err(to_py)
}

/// A directed network; arcs point from the cited work to the citing one.
#[pyclass(name = "Network", module = "citenet", frozen)]
struct PyNetwork {
    inner: network::Network,
}

#[pymethods]
impl PyNetwork {
    /// `arcs` holds `(tail, head)` or `(tail, head, weight)` with 0-based
    /// vertices; labels default to `1..n`.
    #[new]
    #[pyo3(signature = (n, arcs, labels=None))]
    fn new(n: usize, arcs: Vec<Vec<f64>>, labels: Option<Vec<String>>) -> PyResult<Self> {
        let labels = labels.unwrap_or_else(|| (1..=n).map(|i| i.to_string()).collect());
        if labels.len() != n {
            return Err(PyValueError::new_err(format!("{} labels for {n} vertices", labels.len())));
        }
        let arcs = arcs
            .into_iter()
            .map(|a| {
                let index = |x: f64| {
                    if x >= 0.0 && x.fract() == 0.0 {
                        Ok(x as usize)
                    } else {
                        Err(PyValueError::new_err(format!("bad vertex {x}")))
                    }
                };
                match a[..] {
                    [t, h] => Ok(Arc::new(index(t)?, index(h)?)),
                    [t, h, w] => Ok(Arc::weighted(index(t)?, index(h)?, w)),
                    _ => Err(PyValueError::new_err("arcs are (tail, head[, weight])")),
                }
            })
            .collect::<PyResult<Vec<Arc>>>()?;
        let inner = network::Network::new(labels, arcs).map_err(to_py)?;
        Ok(PyNetwork { inner })
    }

    #[staticmethod]
    fn from_pajek(text: &str) -> PyResult<Self> {
        Ok(PyNetwork {
            inner: pajek::parse_pajek(text).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn read(path: std::path::PathBuf) -> PyResult<Self> {
        let text = std::fs::read_to_string(&path)?;
        Self::from_pajek(&text)
    }

    /// Complete acyclic network: an arc from every vertex to every later one.
    #[staticmethod]
    fn complete_acyclic(n: usize) -> PyResult<Self> {
        Ok(PyNetwork {
            inner: network::complete_acyclic(n).map_err(to_py)?,
        })
    }

    /// Random acyclic network; every pair `i < j` is an arc with probability
    /// `density`.
    #[staticmethod]
    fn random_dag(n: usize, density: f64, seed: u64) -> PyResult<Self> {
        Ok(PyNetwork {
            inner: network::random_dag(n, density, seed).map_err(to_py)?,
        })
    }

    fn to_pajek(&self) -> PyResult<String> {
        pajek::write_pajek(&self.inner, None).map_err(to_py)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    /// `(tail, head, weight)` triples.
    #[getter]
    fn arcs(&self) -> Vec<(usize, usize, f64)> {
        self.inner.arcs().iter().map(|a| (a.tail, a.head, a.weight)).collect()
    }

    fn reverse(&self) -> Self {
        PyNetwork {
            inner: self.inner.reverse(),
        }
    }

    fn remove_loops(&self) -> Self {
        PyNetwork {
            inner: acyclic::remove_loops(&self.inner),
        }
    }

    /// Strong component of every vertex, numbered from 0.
    fn strong_components(&self) -> Vec<usize> {
        acyclic::strong_components(&self.inner).classes().to_vec()
    }

    /// Every strong component shrunk to one vertex.
    fn shrink(&self) -> Self {
        let p = acyclic::strong_components(&self.inner);
        PyNetwork {
            inner: acyclic::shrink_components(&self.inner, &p),
        }
    }

    /// Every member of a cyclic group gets a preprint vertex.
    fn preprint(&self) -> Self {
        PyNetwork {
            inner: acyclic::preprint_transform(&self.inner),
        }
    }

    /// A topological order of the vertices; raises `CyclicError` otherwise.
    fn topological_order(&self) -> PyResult<Vec<usize>> {
        Ok(acyclic::topological_order(&self.inner).map_err(to_py)?.sequence().to_vec())
    }

    /// Summary statistics; cycles are allowed.
    fn stats(&self, py: Python<'_>) -> PyResult<BTreeMap<&'static str, Py<PyAny>>> {
        let s = network::network_stats(&self.inner);
        let mut out = BTreeMap::new();
        for (k, v) in [
            ("n", s.n),
            ("m", s.m),
            ("m0", s.m0),
            ("n0", s.n0),
            ("nC", s.n_c),
            ("kC", s.k_c),
            ("h", s.h),
            ("deltaIn", s.delta_in),
            ("deltaOut", s.delta_out),
        ] {
            out.insert(k, v.into_pyobject(py)?.into_any().unbind());
        }
        out.insert("sccSizeCounts", s.scc_size_counts.into_pyobject(py)?.into_any().unbind());
        Ok(out)
    }

    fn __repr__(&self) -> String {
        format!("Network(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// Arc and vertex weights of a network, for its original arcs and vertices.
#[pyclass(name = "Weights", module = "citenet", frozen)]
struct PyWeights {
    result: WeightResult,
    /// Standard form of the network, for the flow methods.
    std: Option<StandardizedNetwork>,
}

fn values(py: Python<'_>, v: &WeightVector) -> PyResult<Py<PyAny>> {
    Ok(match v.values() {
        WeightValues::Float(x) => x.into_pyobject(py)?.into_any().unbind(),
        WeightValues::Exact(x) => x.into_pyobject(py)?.into_any().unbind(),
        WeightValues::Log(x) => x.iter().map(|l| l.0).collect::<Vec<f64>>().into_pyobject(py)?.into_any().unbind(),
    })
}

fn value(py: Python<'_>, v: &WeightValue) -> PyResult<Py<PyAny>> {
    Ok(match v {
        WeightValue::Float(x) | WeightValue::Log(x) => x.into_pyobject(py)?.into_any().unbind(),
        WeightValue::Exact(x) => x.into_pyobject(py)?.into_any().unbind(),
    })
}

#[pymethods]
impl PyWeights {
    #[getter]
    fn method(&self) -> &'static str {
        self.result.method.name()
    }

    /// `float`, `exact` (Python ints) or `log` (natural logarithms).
    #[getter]
    fn mode(&self) -> &'static str {
        self.result.mode().name()
    }

    #[getter]
    fn normalized(&self) -> bool {
        self.result.normalized
    }

    /// Weights of the original arcs, in arc order.
    #[getter]
    fn arc(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        values(py, &self.result.original_arc_weights())
    }

    #[getter]
    fn vertex(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        values(py, &self.result.original_vertex_weights())
    }

    /// Number of source-to-sink paths (flow methods), else `None`.
    #[getter]
    fn total_flow(&self, py: Python<'_>) -> PyResult<Option<Py<PyAny>>> {
        self.result.total_flow.as_ref().map(|t| value(py, t)).transpose()
    }

    /// Arcs whose zero weight got a floor in the log transform.
    #[getter]
    fn floored_arcs(&self) -> Vec<usize> {
        self.result.floored_arcs.clone()
    }

    fn __repr__(&self) -> String {
        format!(
            "Weights(method={}, mode={}, arcs={})",
            self.result.method,
            self.result.mode(),
            self.result.original_arcs
        )
    }
}

impl PyWeights {
    fn standard_form(&self, what: &str) -> PyResult<&StandardizedNetwork> {
        self.std
            .as_ref()
            .ok_or_else(|| PyValueError::new_err(format!("{what} needs spc, splc or spnp weights")))
    }
}

/// Arc and vertex weights. `method` is one of spc, splc, spnp, nppc, sum;
/// `mode` one of float, exact, log (nppc and sum are always exact). `alpha`
/// ages spnp path counts by length.
#[pyfunction]
#[pyo3(signature = (net, method="spc", mode="float", normalize=false, log=false, alpha=None))]
fn compute_weights(
    net: &PyNetwork,
    method: &str,
    mode: &str,
    normalize: bool,
    log: bool,
    alpha: Option<f64>,
) -> PyResult<PyWeights> {
    let (method, mode) = (parse_method(method)?, parse_mode(mode)?);
    let net = &net.inner;
    let (std, mut result) = if method.is_flow() {
        let std = acyclic::standardize(net).map_err(to_py)?;
        let r = match (method, alpha) {
            (Method::Spnp, Some(alpha)) => weights::aged_path_counts(&std, alpha),
            (_, Some(_)) => return Err(PyValueError::new_err("alpha applies to spnp only")),
            (Method::Spc, None) => weights::spc(&std, mode),
            (Method::Splc, None) => weights::splc(&std, mode),
            _ => weights::spnp(&std, mode),
        }
        .map_err(to_py)?;
        (Some(std), r)
    } else if method == Method::Nppc {
        (None, weights::nppc(net).map_err(to_py)?)
    } else {
        (None, weights::sum_weights(net).map_err(to_py)?.raw)
    };
    if normalize {
        result = weights::normalize(&result).map_err(to_py)?;
    }
    if log {
        result = weights::log_transform(&result);
    }
    Ok(PyWeights { result, std })
}

/// `(vertices, arcs)` of a subnetwork, as indices into the network.
type Parts = (Vec<usize>, Vec<usize>);

fn parts(s: Subnetwork) -> Parts {
    (s.vertices, s.arcs)
}

/// Greedy main path on flow weights; `single` breaks ties to give one path.
#[pyfunction]
#[pyo3(signature = (weights, single=false))]
fn main_path(weights: &PyWeights, single: bool) -> PyResult<Parts> {
    let std = weights.standard_form("main path")?;
    let path = if single {
        extract::main_path_single(std, &weights.result.arc)
    } else {
        extract::main_path(std, &weights.result.arc)
    };
    Ok(parts(path.map_err(to_py)?))
}

/// Heaviest source-to-sink paths on flow weights.
#[pyfunction]
fn cpm_path(weights: &PyWeights) -> PyResult<Parts> {
    let std = weights.standard_form("cpm path")?;
    Ok(parts(extract::cpm_path(std, &weights.result.arc).map_err(to_py)?))
}

/// Arcs with weight at least `threshold` (linear scale) and their weak
/// components, largest first.
#[pyfunction]
fn arc_cut(net: &PyNetwork, weights: &PyWeights, threshold: f64) -> PyResult<(Parts, Vec<Vec<usize>>)> {
    let cut = extract::arc_cut(&net.inner, &weights.result.original_arc_weights(), threshold).map_err(to_py)?;
    Ok((parts(cut.subnetwork), cut.components))
}

/// Vertex sets of the maximal (k, K)-islands, largest first.
#[pyfunction]
#[pyo3(name = "islands")]
fn find_islands(net: &PyNetwork, weights: &PyWeights, k: usize, big_k: usize) -> PyResult<Vec<Vec<usize>>> {
    let set = extract::islands(&net.inner, &weights.result.original_arc_weights(), k, big_k).map_err(to_py)?;
    Ok(set.islands.into_iter().map(|i| i.vertices).collect())
}

/// Hub and authority scores: `(hub, authority, iterations, converged)`.
#[pyfunction]
#[pyo3(signature = (net, tolerance=rank::DEFAULT_TOLERANCE, max_iterations=rank::DEFAULT_MAX_ITERATIONS))]
fn hits(net: &PyNetwork, tolerance: f64, max_iterations: usize) -> PyResult<(Vec<f64>, Vec<f64>, usize, bool)> {
    let r = rank::hits(&net.inner, tolerance, max_iterations).map_err(to_py)?;
    Ok((r.hub, r.authority, r.iterations, r.converged))
}

#[pymodule]
#[pyo3(name = "citenet")]
fn citenet_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyNetwork>()?;
    m.add_class::<PyWeights>()?;
    m.add_function(wrap_pyfunction!(compute_weights, m)?)?;
    m.add_function(wrap_pyfunction!(main_path, m)?)?;
    m.add_function(wrap_pyfunction!(cpm_path, m)?)?;
    m.add_function(wrap_pyfunction!(arc_cut, m)?)?;
    m.add_function(wrap_pyfunction!(find_islands, m)?)?;
    m.add_function(wrap_pyfunction!(hits, m)?)?;
    m.add("ParseError", m.py().get_type::<ParseError>())?;
    m.add("CyclicError", m.py().get_type::<CyclicError>())?;
    m.add("CitenetError", m.py().get_type::<CitenetError>())?;
    Ok(())
}
