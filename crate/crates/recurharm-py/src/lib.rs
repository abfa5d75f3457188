//! Python bindings for the exact recursive harmonic number library.
//!
//! Exposes the rational type, the three evaluation strategies, table
//! construction, the verification suite, and the float-error and bench
//! reports. Numerators and denominators cross the boundary as Python
//! ints of arbitrary size.

use pyo3::basic::CompareOp;
use pyo3::exceptions::{PyOverflowError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

use recurharm::{
    BenchReport, BigInt, Error, ErrorReport, EvalStrategy, ExactRational, HarmonicTable,
    RenderFormat, VerifySummary,
};

fn to_py_err(err: Error) -> PyErr {
    match err {
        Error::ZeroReciprocal => PyZeroDivisionError::new_err(err.to_string()),
        Error::Overflow { .. } => PyOverflowError::new_err(err.to_string()),
        _ => PyValueError::new_err(err.to_string()),
    }
}

fn parse_format(name: &str) -> PyResult<RenderFormat> {
    name.parse().map_err(to_py_err)
}

fn parse_strategy(name: &str) -> PyResult<EvalStrategy> {
    name.parse().map_err(to_py_err)
}

/// An exact rational number, always stored reduced.
#[pyclass(name = "Rational", frozen)]
struct PyRational {
    inner: ExactRational,
}

impl From<ExactRational> for PyRational {
    fn from(inner: ExactRational) -> Self {
        PyRational { inner }
    }
}

#[pymethods]
impl PyRational {
    #[new]
    #[pyo3(signature = (numer, denom = None))]
    fn new(numer: BigInt, denom: Option<BigInt>) -> PyResult<Self> {
        let denom = denom.unwrap_or_else(|| BigInt::from(1u32));
        if denom == BigInt::from(0u32) {
            return Err(PyZeroDivisionError::new_err("denominator is zero"));
        }
        Ok(ExactRational::new(numer, denom).into())
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse::<ExactRational>()
            .map(Self::from)
            .map_err(to_py_err)
    }

    #[staticmethod]
    fn from_float(x: f64) -> PyResult<Self> {
        ExactRational::from_f64(x)
            .map(Self::from)
            .ok_or_else(|| PyValueError::new_err(format!("{x} is not a finite float")))
    }

    #[getter]
    fn numerator(&self) -> BigInt {
        self.inner.numer().clone()
    }

    #[getter]
    fn denominator(&self) -> BigInt {
        self.inner.denom().clone()
    }

    fn canonical(&self) -> String {
        self.inner.canonical()
    }

    fn render(&self, format: &str) -> PyResult<String> {
        Ok(recurharm::render_value(&self.inner, parse_format(format)?))
    }

    fn recip(&self) -> PyResult<Self> {
        self.inner.recip().map(Self::from).map_err(to_py_err)
    }

    fn to_float(&self) -> f64 {
        self.inner.to_f64()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Rational(\"{}\")", self.inner.canonical())
    }

    fn __richcmp__(&self, other: &Self, op: CompareOp) -> bool {
        op.matches(self.inner.cmp(&other.inner))
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{DefaultHasher, Hash, Hasher};
        let mut hasher = DefaultHasher::new();
        self.inner.hash(&mut hasher);
        hasher.finish()
    }

    fn __add__(&self, other: &Self) -> Self {
        (&self.inner + &other.inner).into()
    }

    fn __sub__(&self, other: &Self) -> Self {
        (&self.inner - &other.inner).into()
    }

    fn __mul__(&self, other: &Self) -> Self {
        (&self.inner * &other.inner).into()
    }

    fn __truediv__(&self, other: &Self) -> PyResult<Self> {
        if other.inner.is_zero() {
            return Err(PyZeroDivisionError::new_err("division by zero"));
        }
        Ok((&self.inner / &other.inner).into())
    }

    fn __neg__(&self) -> Self {
        (-self.inner.clone()).into()
    }

    fn __abs__(&self) -> Self {
        self.inner.abs().into()
    }

    fn __float__(&self) -> f64 {
        self.inner.to_f64()
    }

    fn __bool__(&self) -> bool {
        !self.inner.is_zero()
    }
}

/// The filled grid of H_n^(m) for n <= n_max, m <= m_max.
#[pyclass(name = "HarmonicTable", frozen)]
struct PyHarmonicTable {
    inner: HarmonicTable,
}

#[pymethods]
impl PyHarmonicTable {
    #[new]
    fn new(n_max: u32, m_max: u32) -> PyResult<Self> {
        recurharm::build_table(n_max, m_max)
            .map(|inner| PyHarmonicTable { inner })
            .map_err(to_py_err)
    }

    #[staticmethod]
    fn parse(text: &str, format: &str) -> PyResult<Self> {
        let inner = match parse_format(format)? {
            RenderFormat::Csv => recurharm::parse_table_csv(text),
            RenderFormat::Json => recurharm::parse_table_json(text),
            other => Err(Error::UnsupportedFormat {
                format: other,
                what: "table parsing",
            }),
        }
        .map_err(to_py_err)?;
        Ok(PyHarmonicTable { inner })
    }

    #[getter]
    fn n_max(&self) -> u32 {
        self.inner.n_max()
    }

    #[getter]
    fn m_max(&self) -> u32 {
        self.inner.m_max()
    }

    fn get(&self, n: u32, m: u32) -> Option<PyRational> {
        self.inner.get(n, m).cloned().map(PyRational::from)
    }

    fn cells(&self) -> Vec<(u32, u32, PyRational)> {
        self.inner
            .cells()
            .map(|(n, m, v)| (n, m, v.clone().into()))
            .collect()
    }

    fn render(&self, format: &str) -> PyResult<String> {
        Ok(recurharm::render_table(&self.inner, parse_format(format)?))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!(
            "HarmonicTable(n_max={}, m_max={})",
            self.inner.n_max(),
            self.inner.m_max()
        )
    }
}

/// Exact-vs-binary64 comparison at one (n, m).
#[pyclass(name = "ErrorReport", frozen)]
struct PyErrorReport {
    inner: ErrorReport,
}

#[pymethods]
impl PyErrorReport {
    #[getter]
    fn n(&self) -> u32 {
        self.inner.n
    }

    #[getter]
    fn m(&self) -> u32 {
        self.inner.m
    }

    #[getter]
    fn exact(&self) -> PyRational {
        self.inner.exact.clone().into()
    }

    #[getter]
    fn float_value(&self) -> f64 {
        self.inner.float_value
    }

    #[getter]
    fn abs_error(&self) -> f64 {
        self.inner.abs_error
    }

    #[getter]
    fn rel_error(&self) -> f64 {
        self.inner.rel_error
    }

    #[getter]
    fn largest_term_magnitude(&self) -> f64 {
        self.inner.largest_term_magnitude
    }

    fn render(&self, format: &str) -> PyResult<String> {
        recurharm::render_reports(std::slice::from_ref(&self.inner), parse_format(format)?)
            .map_err(to_py_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "ErrorReport(n={}, m={}, rel_error={:e})",
            self.inner.n, self.inner.m, self.inner.rel_error
        )
    }
}

/// Wall time and operand-size measurements for one evaluation.
#[pyclass(name = "BenchReport", frozen)]
struct PyBenchReport {
    inner: BenchReport,
}

#[pymethods]
impl PyBenchReport {
    #[getter]
    fn strategy(&self) -> String {
        self.inner.strategy.to_string()
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.n
    }

    #[getter]
    fn m(&self) -> u32 {
        self.inner.m
    }

    #[getter]
    fn wall_time_ns(&self) -> u128 {
        self.inner.wall_time.as_nanos()
    }

    #[getter]
    fn peak_live_rationals(&self) -> usize {
        self.inner.peak_live_rationals
    }

    #[getter]
    fn max_numerator_bits(&self) -> u64 {
        self.inner.max_numerator_bits
    }

    #[getter]
    fn max_denominator_bits(&self) -> u64 {
        self.inner.max_denominator_bits
    }

    fn render(&self, format: &str) -> PyResult<String> {
        recurharm::render_reports(std::slice::from_ref(&self.inner), parse_format(format)?)
            .map_err(to_py_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "BenchReport(strategy=\"{}\", n={}, m={}, wall_time_ns={})",
            self.inner.strategy,
            self.inner.n,
            self.inner.m,
            self.inner.wall_time.as_nanos()
        )
    }
}

/// Outcome of the cross-strategy and invariant checks over a grid.
#[pyclass(name = "VerifySummary", frozen)]
struct PyVerifySummary {
    inner: VerifySummary,
}

#[pymethods]
impl PyVerifySummary {
    #[getter]
    fn n_max(&self) -> u32 {
        self.inner.n_max
    }

    #[getter]
    fn m_max(&self) -> u32 {
        self.inner.m_max
    }

    fn all_passed(&self) -> bool {
        self.inner.all_passed()
    }

    /// List of (name, checks, counterexample-or-None) per property.
    fn properties(&self) -> Vec<(String, u64, Option<String>)> {
        self.inner
            .properties
            .iter()
            .map(|p| (p.name.to_string(), p.checks, p.counterexample.clone()))
            .collect()
    }

    fn render_text(&self) -> String {
        self.inner.render_text()
    }

    fn __repr__(&self) -> String {
        format!(
            "VerifySummary(n_max={}, m_max={}, all_passed={})",
            self.inner.n_max,
            self.inner.m_max,
            self.all_passed()
        )
    }
}

/// H_n^(m) via one named strategy: definition, table, or binomial.
#[pyfunction(name = "eval")]
#[pyo3(signature = (n, m, strategy = "table"))]
fn eval_py(n: u32, m: u32, strategy: &str) -> PyResult<PyRational> {
    recurharm::eval(n, m, parse_strategy(strategy)?)
        .map(PyRational::from)
        .map_err(to_py_err)
}

/// The classical harmonic number 1 + 1/2 + ... + 1/n.
#[pyfunction]
fn classical_harmonic(n: u32) -> PyResult<PyRational> {
    recurharm::classical_harmonic(n)
        .map(PyRational::from)
        .map_err(to_py_err)
}

/// The full table for n <= n_max, m <= m_max.
#[pyfunction]
fn build_table(n_max: u32, m_max: u32) -> PyResult<PyHarmonicTable> {
    PyHarmonicTable::new(n_max, m_max)
}

/// The alternating binomial sum evaluated in binary64.
#[pyfunction]
fn float_binomial_sum(n: u32, m: u32) -> PyResult<f64> {
    recurharm::float_binomial_sum(n, m).map_err(to_py_err)
}

/// Exact-vs-float comparison at (n, m).
#[pyfunction]
fn error_report(n: u32, m: u32) -> PyResult<PyErrorReport> {
    recurharm::error_report(n, m)
        .map(|inner| PyErrorReport { inner })
        .map_err(to_py_err)
}

/// Median-of-repetitions timing for one strategy at (n, m).
#[pyfunction(name = "bench")]
#[pyo3(signature = (n, m, strategy = "table", repetitions = 3))]
fn bench_py(n: u32, m: u32, strategy: &str, repetitions: u32) -> PyResult<PyBenchReport> {
    recurharm::bench(n, m, parse_strategy(strategy)?, repetitions)
        .map(|inner| PyBenchReport { inner })
        .map_err(to_py_err)
}

/// Runs every verification property over the grid.
#[pyfunction]
fn verify_properties(n_max: u32, m_max: u32) -> PyResult<PyVerifySummary> {
    recurharm::run_suite(n_max, m_max)
        .map(|inner| PyVerifySummary { inner })
        .map_err(to_py_err)
}

#[pymodule]
fn recurharm_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRational>()?;
    m.add_class::<PyHarmonicTable>()?;
    m.add_class::<PyErrorReport>()?;
    m.add_class::<PyBenchReport>()?;
    m.add_class::<PyVerifySummary>()?;
    m.add_function(wrap_pyfunction!(eval_py, m)?)?;
    m.add_function(wrap_pyfunction!(classical_harmonic, m)?)?;
    m.add_function(wrap_pyfunction!(build_table, m)?)?;
    m.add_function(wrap_pyfunction!(float_binomial_sum, m)?)?;
    m.add_function(wrap_pyfunction!(error_report, m)?)?;
    m.add_function(wrap_pyfunction!(bench_py, m)?)?;
    m.add_function(wrap_pyfunction!(verify_properties, m)?)?;
    Ok(())
}
