//! Python bindings: `pyschur.Model`, `pyschur.Operator`, `pyschur.Label`
//! and a few module-level helpers.

use clap::Parser;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyBool, PyDict, PyList, PyString};
use serde_json::Value;

use schur_core::bases::{enumerate_basis, rank_of_family, schur_dimension, BasisKind, BasisTable};
use schur_core::cli::{self, Cli, RunConfig};
use schur_core::hecke::hecke_summary;
use schur_core::ring::{Mode, Scalar};
use schur_core::rootvectors::{eval_label, root_divided_power, root_vector, BasisLabel, Sign};
use schur_core::tensormodel::{Generator, Model, Root, SparseOperator, Weight};
use schur_core::verify::{run_suite, Suite};
use schur_core::SchurError as CoreError;

create_exception!(pyschur, SchurError, PyValueError, "Raised for invalid requests and failed exact operations.");
create_exception!(pyschur, SizeLimitError, SchurError, "n^d exceeds the configured word cap.");

fn err(e: CoreError) -> PyErr {
    match e {
        CoreError::SizeLimit { .. } => SizeLimitError::new_err(e.to_string()),
        _ => SchurError::new_err(e.to_string()),
    }
}

fn value_err(msg: impl Into<String>) -> PyErr {
    PyValueError::new_err(msg.into())
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => PyBool::new(py, *b).to_owned().into_any(),
        Value::Number(x) => match (x.as_i64(), x.as_u64()) {
            (Some(i), _) => i.into_pyobject(py)?.into_any(),
            (None, Some(u)) => u.into_pyobject(py)?.into_any(),
            _ => x.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => PyString::new(py, s).into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, item) in map {
                dict.set_item(k, to_py(py, item)?)?;
            }
            dict.into_any()
        }
    })
}

fn serialize<'py, T: serde::Serialize>(py: Python<'py>, x: &T) -> PyResult<Bound<'py, PyAny>> {
    let v = serde_json::to_value(x).map_err(|e| value_err(e.to_string()))?;
    to_py(py, &v)
}

fn parse_generator(name: &str) -> PyResult<Generator> {
    let bad = || value_err(format!("generator must look like E1, F2, H1, K1 or Kinv1, got {name:?}"));
    let (ctor, digits): (fn(usize) -> Generator, &str) = if let Some(r) = name.strip_prefix("Kinv") {
        (Generator::KInv, r)
    } else if let Some(r) = name.strip_prefix('E') {
        (Generator::E, r)
    } else if let Some(r) = name.strip_prefix('F') {
        (Generator::F, r)
    } else if let Some(r) = name.strip_prefix('H') {
        (Generator::H, r)
    } else if let Some(r) = name.strip_prefix('K') {
        (Generator::K, r)
    } else {
        return Err(bad());
    };
    digits.parse().map(ctor).map_err(|_| bad())
}

fn parse_sign(sign: &str) -> PyResult<Sign> {
    match sign {
        "+" | "plus" => Ok(Sign::Plus),
        "-" | "minus" => Ok(Sign::Minus),
        _ => Err(value_err(format!("sign must be '+' or '-', got {sign:?}"))),
    }
}

fn parse_root(root: &str) -> PyResult<Root> {
    root.parse().map_err(|e: String| value_err(e))
}

fn parse_scalar(s: &str) -> PyResult<Scalar> {
    s.parse().map_err(|e: schur_core::ring::RingError| value_err(e.to_string()))
}

/// A sparse matrix over `Q` or `Q(v)` acting on tensor space.
#[pyclass(name = "Operator", module = "pyschur", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyOperator {
    inner: SparseOperator,
}

impl PyOperator {
    fn wrap(inner: SparseOperator) -> Self {
        PyOperator { inner }
    }

    fn same_dim(&self, other: &PyOperator) -> PyResult<()> {
        if self.inner.dim() == other.inner.dim() {
            Ok(())
        } else {
            Err(value_err(format!("dimension mismatch: {} vs {}", self.inner.dim(), other.inner.dim())))
        }
    }
}

#[pymethods]
impl PyOperator {
    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn nnz(&self) -> usize {
        self.inner.nnz()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn is_integral(&self) -> bool {
        self.inner.is_integral()
    }

    /// `(row, col, value)` in column-major order; values as canonical strings.
    fn entries(&self) -> Vec<(usize, usize, String)> {
        self.inner.entries().map(|(r, c, x)| (r, c, x.to_string())).collect()
    }

    fn get(&self, row: usize, col: usize) -> PyResult<String> {
        if row >= self.inner.dim() || col >= self.inner.dim() {
            return Err(value_err("index out of range"));
        }
        Ok(self.inner.get(row, col).to_string())
    }

    fn pow(&self, k: u32) -> PyOperator {
        PyOperator::wrap(self.inner.pow(k))
    }

    /// Multiplies every entry by a scalar given as text, e.g. `"3/2"` or `"v + v^-1"`.
    fn scale(&self, s: &str) -> PyResult<PyOperator> {
        Ok(PyOperator::wrap(self.inner.scale(&parse_scalar(s)?)))
    }

    /// Substitutes `v = r` for a rational `r`; `None` if a denominator vanishes.
    fn specialize(&self, r: &str) -> PyResult<Option<PyOperator>> {
        let r = parse_scalar(r)?;
        let r = r.as_rational().ok_or_else(|| value_err("specialization point must be rational"))?;
        Ok(self.inner.specialize(r).map(PyOperator::wrap))
    }

    fn __matmul__(&self, other: &PyOperator) -> PyResult<PyOperator> {
        self.same_dim(other)?;
        Ok(PyOperator::wrap(self.inner.compose(&other.inner)))
    }

    fn __add__(&self, other: &PyOperator) -> PyResult<PyOperator> {
        self.same_dim(other)?;
        Ok(PyOperator::wrap(&self.inner + &other.inner))
    }

    fn __sub__(&self, other: &PyOperator) -> PyResult<PyOperator> {
        self.same_dim(other)?;
        Ok(PyOperator::wrap(&self.inner - &other.inner))
    }

    fn __neg__(&self) -> PyOperator {
        PyOperator::wrap(-&self.inner)
    }

    fn __eq__(&self, other: &PyOperator) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Operator(dim={}, nnz={})", self.inner.dim(), self.inner.nnz())
    }
}

/// A basis label; evaluate it with `Model.eval`.
#[pyclass(name = "Label", module = "pyschur", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyLabel {
    inner: BasisLabel,
}

#[pymethods]
impl PyLabel {
    #[getter]
    fn key(&self) -> String {
        self.inner.key()
    }

    #[getter]
    fn flavor(&self) -> String {
        serde_json::to_value(self.inner.flavor)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default()
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner).map_err(|e| value_err(e.to_string()))
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<PyLabel> {
        serde_json::from_str(s)
            .map(|inner| PyLabel { inner })
            .map_err(|e| value_err(e.to_string()))
    }

    fn __eq__(&self, other: &PyLabel) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{DefaultHasher, Hash, Hasher};
        let mut h = DefaultHasher::new();
        self.inner.key().hash(&mut h);
        h.finish()
    }

    fn __repr__(&self) -> String {
        format!("Label({})", self.inner.key())
    }
}

/// `S(n, d)` (or `S_v(n, d)` with `quantum=True`) acting on `V^{⊗d}`.
#[pyclass(name = "Model", module = "pyschur", frozen)]
struct PyModel {
    inner: Model,
}

impl PyModel {
    fn kind(&self, kind: &str, k0: Option<usize>) -> PyResult<BasisKind> {
        cli::parse_kind(kind, k0, self.inner.n()).map_err(value_err)
    }

    fn table(&self, kind: &str, k0: Option<usize>) -> PyResult<BasisTable> {
        let kind = self.kind(kind, k0)?;
        BasisTable::new(&self.inner, enumerate_basis(self.inner.n(), self.inner.d(), kind)).map_err(err)
    }
}

#[pymethods]
impl PyModel {
    #[new]
    #[pyo3(signature = (n, d, quantum = false, word_cap = None))]
    fn new(py: Python<'_>, n: usize, d: usize, quantum: bool, word_cap: Option<usize>) -> PyResult<Self> {
        let mode = if quantum { Mode::Quantum } else { Mode::Classical };
        let cap = word_cap.unwrap_or(schur_core::tensormodel::DEFAULT_WORD_CAP);
        let inner = py.detach(|| Model::with_word_cap(n, d, mode, cap)).map_err(err)?;
        Ok(PyModel { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn d(&self) -> usize {
        self.inner.d()
    }

    #[getter]
    fn mode(&self) -> String {
        self.inner.mode().to_string()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn words(&self) -> Vec<Vec<u8>> {
        self.inner.words().iter().map(|w| w.letters().to_vec()).collect()
    }

    fn compositions(&self) -> Vec<Vec<u32>> {
        self.inner.compositions().iter().map(|w| w.0.clone()).collect()
    }

    fn identity(&self) -> PyOperator {
        PyOperator::wrap(self.inner.identity())
    }

    /// `"E1"`, `"F2"`, `"H1"` (classical), `"K1"`, `"Kinv1"` (quantum).
    fn generator(&self, name: &str) -> PyResult<PyOperator> {
        let g = parse_generator(name)?;
        self.inner.generator_action(g).cloned().map(PyOperator::wrap).map_err(err)
    }

    fn weight_idempotent(&self, weight: Vec<u32>) -> PyResult<PyOperator> {
        self.inner.weight_idempotent(&Weight(weight)).cloned().map(PyOperator::wrap).map_err(err)
    }

    fn cartan_binomial(&self, k: usize, t: u32) -> PyResult<PyOperator> {
        self.inner.cartan_binomial(k, t).map(PyOperator::wrap).map_err(err)
    }

    /// Root vector for a root written `"i-j"`.
    #[pyo3(signature = (root, sign = "+"))]
    fn root_vector(&self, root: &str, sign: &str) -> PyResult<PyOperator> {
        root_vector(&self.inner, parse_root(root)?, parse_sign(sign)?)
            .cloned()
            .map(PyOperator::wrap)
            .map_err(err)
    }

    #[pyo3(signature = (root, m, sign = "+"))]
    fn divided_power(&self, root: &str, m: u32, sign: &str) -> PyResult<PyOperator> {
        root_divided_power(&self.inner, parse_root(root)?, parse_sign(sign)?, m)
            .map(PyOperator::wrap)
            .map_err(err)
    }

    #[pyo3(signature = (kind = "b1", k0 = None))]
    fn basis(&self, kind: &str, k0: Option<usize>) -> PyResult<Vec<PyLabel>> {
        let kind = self.kind(kind, k0)?;
        Ok(enumerate_basis(self.inner.n(), self.inner.d(), kind)
            .into_iter()
            .map(|inner| PyLabel { inner })
            .collect())
    }

    fn eval(&self, label: &PyLabel) -> PyResult<PyOperator> {
        eval_label(&self.inner, &label.inner).map(PyOperator::wrap).map_err(err)
    }

    /// Exact rank over `Q` (classical) or a lower bound certified by
    /// specialization (quantum).
    fn rank(&self, py: Python<'_>, ops: Vec<PyRef<'_, PyOperator>>) -> usize {
        let ops: Vec<SparseOperator> = ops.iter().map(|o| o.inner.clone()).collect();
        py.detach(|| rank_of_family(&self.inner, &ops))
    }

    /// Coordinates of `op` in a basis, keyed by label; scalars as strings.
    #[pyo3(signature = (op, kind = "b1", k0 = None))]
    fn coordinates<'py>(
        &self,
        py: Python<'py>,
        op: &PyOperator,
        kind: &str,
        k0: Option<usize>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let table = self.table(kind, k0)?;
        let coords = py.detach(|| table.coordinates(&self.inner, &op.inner)).map_err(err)?;
        serialize(py, &coords.keyed(table.labels()))
    }

    /// `b_left * b_right` expanded in the same basis; indices into `basis(kind)`.
    #[pyo3(signature = (left, right, kind = "b1", k0 = None))]
    fn structure_constants<'py>(
        &self,
        py: Python<'py>,
        left: usize,
        right: usize,
        kind: &str,
        k0: Option<usize>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let table = self.table(kind, k0)?;
        if left >= table.len() || right >= table.len() {
            return Err(value_err(format!("label index out of range 0..{}", table.len())));
        }
        let coords = py.detach(|| table.structure_constants(&self.inner, left, right)).map_err(err)?;
        serialize(py, &coords.keyed(table.labels()))
    }

    /// Runs a verification suite; returns the reports as dictionaries.
    #[pyo3(signature = (suite = "all"))]
    fn verify<'py>(&self, py: Python<'py>, suite: &str) -> PyResult<Bound<'py, PyAny>> {
        let suite: Suite = suite.parse().map_err(|e: String| value_err(e))?;
        let reports = py.detach(|| run_suite(&self.inner, suite)).map_err(err)?;
        serialize(py, &reports)
    }

    fn hecke<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let summary = py.detach(|| hecke_summary(&self.inner)).map_err(err)?;
        serialize(py, &summary)
    }

    fn __repr__(&self) -> String {
        format!("Model(n={}, d={}, mode={})", self.inner.n(), self.inner.d(), self.inner.mode())
    }
}

/// `binom(n^2 - 1 + d, d)` as a Python int.
#[pyfunction(name = "schur_dimension")]
fn py_schur_dimension(py: Python<'_>, n: usize, d: usize) -> PyResult<Bound<'_, PyAny>> {
    let text = schur_dimension(n, d).to_string();
    py.get_type::<pyo3::types::PyInt>().call1((text,))
}

/// Runs the command line with `args` (without the program name); returns
/// `(exit_status, report)`. Usage errors raise `ValueError`.
#[pyfunction(name = "run_cli")]
fn py_run_cli(py: Python<'_>, args: Vec<String>) -> PyResult<(i32, String)> {
    let cli = Cli::try_parse_from(std::iter::once("schur".to_string()).chain(args))
        .map_err(|e| value_err(e.to_string()))?;
    let cfg = RunConfig::from_cli(cli, std::env::var(cli::WORD_CAP_ENV).ok()).map_err(value_err)?;
    let out = py.detach(|| cli::run(&cfg)).map_err(err)?;
    Ok((out.status, out.body))
}

#[pymodule]
fn pyschur(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyModel>()?;
    m.add_class::<PyOperator>()?;
    m.add_class::<PyLabel>()?;
    m.add_function(wrap_pyfunction!(py_schur_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(py_run_cli, m)?)?;
    m.add("SchurError", m.py().get_type::<SchurError>())?;
    m.add("SizeLimitError", m.py().get_type::<SizeLimitError>())?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
