//! Python bindings for `partcert`.
//!
//! Exposes exact partition numbers, certified enclosures, verification scans
//! and the decay and bound helpers. Large integers cross the boundary as
//! Python `int`; enclosure endpoints are available both as decimal strings
//! (outward rounded) and as floats.

use partcert::bounds::{self, BoundPair};
use partcert::decay::{self, ExpansionSign};
use partcert::enclosure::DEFAULT_PRECISION;
use partcert::verify::{scan, CheckId, Normalization, ScanParams};
use partcert::{exact, series, Enclosure, PartitionTable};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use rug::Integer;

create_exception!(partcert, PartcertError, PyValueError);

fn err(e: partcert::Error) -> PyErr {
    PartcertError::new_err(e.to_string())
}

fn to_py_int<'py>(py: Python<'py>, v: &Integer) -> PyResult<Bound<'py, PyAny>> {
    py.import("builtins")?.getattr("int")?.call1((v.to_string(),))
}

fn from_py_int(v: &Bound<'_, PyAny>) -> PyResult<Integer> {
    let s: String = v.str()?.extract()?;
    s.parse::<Integer>().map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Closed interval with outward-rounded endpoints.
#[pyclass(name = "Enclosure", module = "partcert", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyEnclosure(pub Enclosure);

#[pymethods]
impl PyEnclosure {
    /// The exact rational `num / den` enclosed at `precision` bits.
    #[staticmethod]
    #[pyo3(signature = (num, den = 1, precision = DEFAULT_PRECISION))]
    fn ratio(num: i64, den: i64, precision: u32) -> PyResult<Self> {
        Enclosure::from_ratio(num, den, precision).map(Self).map_err(err)
    }

    #[staticmethod]
    fn integer(v: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self(Enclosure::from_integer(from_py_int(v)?)))
    }

    #[staticmethod]
    #[pyo3(signature = (precision = DEFAULT_PRECISION))]
    fn pi(precision: u32) -> Self {
        Self(Enclosure::pi(precision))
    }

    #[getter]
    fn lo(&self) -> String {
        self.0.lo_string()
    }

    #[getter]
    fn hi(&self) -> String {
        self.0.hi_string()
    }

    #[getter]
    fn precision_bits(&self) -> u32 {
        self.0.precision_bits()
    }

    /// `(lo, hi)` rounded outward to doubles.
    fn bounds(&self) -> (f64, f64) {
        self.0.to_f64_bounds()
    }

    fn width(&self) -> f64 {
        self.0.width().to_f64()
    }

    fn midpoint(&self) -> f64 {
        self.0.midpoint().to_f64()
    }

    /// `1`, `-1`, or `None` when the interval straddles zero.
    fn sign(&self) -> Option<i32> {
        self.0.sign().map(|o| o as i32)
    }

    fn contains(&self, other: &PyEnclosure) -> bool {
        self.0.contains(&other.0)
    }

    fn contains_integer(&self, v: &Bound<'_, PyAny>) -> PyResult<bool> {
        Ok(self.0.contains_integer(&from_py_int(v)?))
    }

    fn unique_integer<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyAny>>> {
        self.0.unique_integer().map(|v| to_py_int(py, &v)).transpose()
    }

    fn exp(&self) -> Self {
        Self(self.0.exp())
    }

    fn log(&self) -> PyResult<Self> {
        self.0.log().map(Self).map_err(err)
    }

    fn sqrt(&self) -> PyResult<Self> {
        self.0.sqrt().map(Self).map_err(err)
    }

    fn sinh(&self) -> Self {
        Self(self.0.sinh())
    }

    fn cosh(&self) -> Self {
        Self(self.0.cosh())
    }

    fn __add__(&self, o: &PyEnclosure) -> Self {
        Self(&self.0 + &o.0)
    }

    fn __sub__(&self, o: &PyEnclosure) -> Self {
        Self(&self.0 - &o.0)
    }

    fn __mul__(&self, o: &PyEnclosure) -> Self {
        Self(&self.0 * &o.0)
    }

    fn __truediv__(&self, o: &PyEnclosure) -> PyResult<Self> {
        self.0.div(&o.0).map(Self).map_err(err)
    }

    fn __neg__(&self) -> Self {
        Self(-self.0.clone())
    }

    fn __repr__(&self) -> String {
        format!("Enclosure({})", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// Memoized exact values `p(0..=n_max)`.
#[pyclass(name = "PartitionTable", module = "partcert")]
pub struct PyPartitionTable(pub PartitionTable);

#[pymethods]
impl PyPartitionTable {
    #[new]
    #[pyo3(signature = (n_max = 0))]
    fn new(n_max: u64) -> Self {
        Self(PartitionTable::with_max(n_max))
    }

    #[staticmethod]
    fn load(path: std::path::PathBuf) -> PyResult<Self> {
        exact::load_table(&path).map(Self).map_err(err)
    }

    fn save(&self, path: std::path::PathBuf) -> PyResult<()> {
        exact::save_table(&self.0, &path).map_err(err)
    }

    #[getter]
    fn n_max(&self) -> u64 {
        self.0.n_max()
    }

    /// `p(n)`, extending the table as needed.
    fn p<'py>(&mut self, py: Python<'py>, n: u64) -> PyResult<Bound<'py, PyAny>> {
        let v = self.0.p(n).clone();
        to_py_int(py, &v)
    }

    fn __len__(&self) -> usize {
        self.0.values().len()
    }
}

fn pair(p: BoundPair) -> (PyEnclosure, PyEnclosure) {
    (PyEnclosure(p.lower), PyEnclosure(p.upper))
}

/// `p(n)` from the pentagonal recurrence.
#[pyfunction]
fn p<'py>(py: Python<'py>, n: u64) -> PyResult<Bound<'py, PyAny>> {
    let v = py.detach(|| exact::p_exact(n, &mut PartitionTable::new()));
    to_py_int(py, &v)
}

/// `p(n)` recovered from the certified convergent series.
#[pyfunction]
fn p_via_series<'py>(py: Python<'py>, n: u64) -> PyResult<Bound<'py, PyAny>> {
    let v = py.detach(|| series::p_via_series(n)).map_err(err)?;
    to_py_int(py, &v)
}

/// Runs `check` on `from_..=to` and returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (check, from_ = None, to = None, precision = DEFAULT_PRECISION, normalization = "star-over-sqrtk"))]
fn verify<'py>(
    py: Python<'py>,
    check: &str,
    from_: Option<u64>,
    to: Option<u64>,
    precision: u32,
    normalization: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let check: CheckId = check.parse().map_err(err)?;
    let params = ScanParams {
        precision_bits: precision,
        normalization: normalization.parse::<Normalization>().map_err(err)?,
        ..ScanParams::default()
    };
    let from = from_.unwrap_or(check.min_n());
    let to = to.unwrap_or(check.default_to());
    let json = py
        .detach(|| scan(&mut PartitionTable::new(), check, from, to, &params))
        .map_err(err)?
        .to_json();
    py.import("json")?.getattr("loads")?.call1((json,))?.cast_into().map_err(Into::into)
}

/// `D(n) = log(p(n)^2 / (p(n-1) p(n+1)))`.
#[pyfunction]
#[pyo3(signature = (table, n, precision = DEFAULT_PRECISION))]
fn d(table: &Bound<'_, PyPartitionTable>, n: u64, precision: u32) -> PyResult<PyEnclosure> {
    let mut t = table.borrow_mut();
    t.0.extend_to(n + 1);
    decay::d_exact(&t.0, n, precision).map(PyEnclosure).map_err(err)
}

/// `D(n)` divided by its leading asymptotic term.
#[pyfunction]
#[pyo3(signature = (table, n, precision = DEFAULT_PRECISION))]
fn normalized_decay(table: &Bound<'_, PyPartitionTable>, n: u64, precision: u32) -> PyResult<PyEnclosure> {
    let mut t = table.borrow_mut();
    t.0.extend_to(n + 1);
    decay::normalized_decay(&t.0, n, precision).map(PyEnclosure).map_err(err)
}

/// `L_k^+(n)` (`plus=True`) or `L_k^-(n)`.
#[pyfunction]
#[pyo3(signature = (n, k, plus = true, precision = DEFAULT_PRECISION))]
fn l_expansion(n: u64, k: u32, plus: bool, precision: u32) -> PyResult<PyEnclosure> {
    let sign = if plus { ExpansionSign::Plus } else { ExpansionSign::Minus };
    decay::l_expansion(n, k, sign, precision).map(PyEnclosure).map_err(err)
}

/// `(lower, upper)` for the second difference of `log p` at `n >= 2600`.
#[pyfunction]
#[pyo3(signature = (n, precision = DEFAULT_PRECISION))]
fn p2_bounds(n: u64, precision: u32) -> PyResult<(PyEnclosure, PyEnclosure)> {
    bounds::p2_bounds_simple(n, precision).map(pair).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, precision = DEFAULT_PRECISION))]
fn q2_bounds(n: u64, precision: u32) -> PyResult<(PyEnclosure, PyEnclosure)> {
    bounds::q2_bounds(n, precision).map(pair).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, precision = DEFAULT_PRECISION))]
fn t1_bounds(n: u64, precision: u32) -> PyResult<(PyEnclosure, PyEnclosure)> {
    bounds::t1_bounds(n, precision).map(pair).map_err(err)
}

/// Lower minus upper of the classical bounds at `m`; positive from 288 on.
#[pyfunction]
#[pyo3(signature = (m, precision = DEFAULT_PRECISION))]
fn classical_gap(m: u64, precision: u32) -> PyResult<PyEnclosure> {
    bounds::thm51_gap(m, precision).map(PyEnclosure).map_err(err)
}

#[pymodule]
#[pyo3(name = "partcert")]
fn partcert_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add("PartcertError", m.py().get_type::<PartcertError>())?;
    m.add_class::<PyEnclosure>()?;
    m.add_class::<PyPartitionTable>()?;
    m.add_function(wrap_pyfunction!(p, m)?)?;
    m.add_function(wrap_pyfunction!(p_via_series, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(d, m)?)?;
    m.add_function(wrap_pyfunction!(normalized_decay, m)?)?;
    m.add_function(wrap_pyfunction!(l_expansion, m)?)?;
    m.add_function(wrap_pyfunction!(p2_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(q2_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(t1_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(classical_gap, m)?)?;
    Ok(())
}

/// Registers the module in an embedded interpreter as `partcert`.
pub fn register(py: Python<'_>) -> PyResult<Bound<'_, PyModule>> {
    let m = PyModule::new(py, "partcert")?;
    partcert_module(&m)?;
    let modules = py.import("sys")?.getattr("modules")?;
    modules.set_item("partcert", &m)?;
    Ok(m)
}
