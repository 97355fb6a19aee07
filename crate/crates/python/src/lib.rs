//! `casimir_workbench`: algebras, wedge operators, universal formulas and
//! the verification suite. Rationals cross the boundary as `"p/q"` strings;
//! reports come back as plain dicts.

use pyo3::exceptions::{PyMemoryError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use casimir_core::algebra::{Algebra as CoreAlgebra, AlgebraDocument, AlgebraId};
use casimir_core::casimir::{split_casimir_2, verify_casimir_identities, SplitCasimirTensor};
use casimir_core::decomposition::{verify_decomposition_for, SolverConfig};
use casimir_core::rational::{parse_pq, to_pq};
use casimir_core::suite::{run_suite, RunConfig};
use casimir_core::vogel::vogel_point;
use casimir_core::wedge::{
    restrict_casimir, spectrum, trace_power, trace_powers, Caps, RankConfig, WedgeBasis, WedgeOperator as CoreOperator,
};
use casimir_core::{formulas, Error};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::ResourceCap(_) => PyMemoryError::new_err(e.to_string()),
        Error::UnsupportedAlgebra(_) | Error::Parse(_) | Error::MissingParameter(..) | Error::NoFormula(_) => {
            PyValueError::new_err(e.to_string())
        }
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn loads<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

fn caps(max_wedge_dim: Option<usize>) -> Caps {
    let mut c = Caps::default();
    if let Some(m) = max_wedge_dim {
        c.max_wedge_dim = m;
    }
    c
}

#[pyclass(frozen)]
struct Algebra {
    inner: CoreAlgebra,
    casimir: SplitCasimirTensor,
}

#[pymethods]
impl Algebra {
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        let id: AlgebraId = name.parse().map_err(py_err)?;
        let inner = CoreAlgebra::build(id).map_err(py_err)?;
        let casimir = split_casimir_2(&inner.adjoint, &inner.metric).map_err(py_err)?;
        Ok(Self { inner, casimir })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.id.to_string()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// Antisymmetry, Jacobi, ad-representation and Casimir identities.
    fn verify(&self) -> bool {
        let a = &self.inner;
        a.f.validate().is_ok()
            && a.adjoint.representation_violation(&a.f).is_none()
            && a.adjoint.quadratic_casimir(&a.metric).is_identity()
            && verify_casimir_identities(&self.casimir, &a.metric).all_pass()
    }

    /// `{"algebra","dim","f":[[a,b,c,"p/q"]],"g":[["p/q"]]}`.
    fn to_dict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        loads(py, &AlgebraDocument::new(&self.inner.f, &self.inner.metric).to_json())
    }

    #[pyo3(signature = (n, max_wedge_dim=None))]
    fn wedge(&self, n: usize, max_wedge_dim: Option<usize>) -> PyResult<WedgeOperator> {
        let caps = caps(max_wedge_dim);
        let basis = WedgeBasis::new(self.casimir.dim(), n).map_err(py_err)?;
        let op = restrict_casimir(&self.casimir, &basis, &caps).map_err(py_err)?;
        Ok(WedgeOperator {
            op,
            caps,
            id: self.inner.id,
        })
    }

    /// Grouped spectrum against the eigenvalue catalog.
    #[pyo3(signature = (n, primes=2, seed=0x5eed))]
    fn decompose<'py>(&self, py: Python<'py>, n: usize, primes: usize, seed: u64) -> PyResult<Bound<'py, PyAny>> {
        if primes < 2 {
            return Err(PyValueError::new_err("at least two primes are required"));
        }
        let cfg = SolverConfig {
            ranks: RankConfig::seeded(seed, primes),
            ..SolverConfig::default()
        };
        let report = verify_decomposition_for(&self.inner, n, &cfg).map_err(py_err)?;
        loads(py, &report.to_json())
    }

    fn __repr__(&self) -> String {
        format!("Algebra('{}', dim={})", self.inner.id, self.inner.dim())
    }
}

/// The split Casimir restricted to the n-th wedge power.
#[pyclass(frozen)]
struct WedgeOperator {
    op: CoreOperator,
    caps: Caps,
    id: AlgebraId,
}

#[pymethods]
impl WedgeOperator {
    #[getter]
    fn n(&self) -> usize {
        self.op.n()
    }

    #[getter]
    fn size(&self) -> usize {
        self.op.size()
    }

    fn trace(&self, k: usize) -> PyResult<String> {
        trace_power(&self.op, k, &self.caps).map(|t| to_pq(&t)).map_err(py_err)
    }

    /// `Tr(C^k)` for `k = 0..=k_max`.
    fn traces(&self, k_max: usize) -> PyResult<Vec<String>> {
        Ok(trace_powers(&self.op, k_max, &self.caps)
            .map_err(py_err)?
            .iter()
            .map(to_pq)
            .collect())
    }

    /// Multiplicities of the given candidate eigenvalues.
    #[pyo3(signature = (candidates, primes=2, seed=0x5eed))]
    fn spectrum(&self, candidates: Vec<String>, primes: usize, seed: u64) -> PyResult<Vec<(String, usize)>> {
        let lambdas = candidates
            .iter()
            .map(|s| parse_pq(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(py_err)?;
        let spec =
            spectrum(&self.op, &lambdas, &RankConfig::seeded(seed, primes.max(2)), &self.caps).map_err(py_err)?;
        Ok(spec.iter().map(|(l, m)| (to_pq(l), *m)).collect())
    }

    fn __repr__(&self) -> String {
        format!(
            "WedgeOperator('{}', n={}, size={})",
            self.id,
            self.op.n(),
            self.op.size()
        )
    }
}

/// `(alpha, beta, gamma)` as `"p/q"` strings.
#[pyfunction]
fn vogel(name: &str) -> PyResult<(String, String, String)> {
    let id: AlgebraId = name.parse().map_err(py_err)?;
    let p = vogel_point(id).map_err(py_err)?;
    Ok((to_pq(&p.alpha), to_pq(&p.beta), to_pq(&p.gamma)))
}

/// Universal `Tr(ASym_n C^k)`; the Vogel point is needed only for n=5, k=4.
#[pyfunction]
#[pyo3(signature = (n, k, dim_g, algebra=None))]
fn universal_trace(n: usize, k: usize, dim_g: usize, algebra: Option<&str>) -> PyResult<String> {
    let point = match algebra {
        Some(a) => Some(vogel_point(a.parse().map_err(py_err)?).map_err(py_err)?),
        None => None,
    };
    formulas::universal_trace(n, k, dim_g, point.as_ref())
        .map(|t| to_pq(&t))
        .map_err(py_err)
}

#[pyfunction]
fn dim_x(m: usize, dim_g: usize) -> String {
    to_pq(&formulas::dim_x(m, dim_g))
}

/// Runs the acceptance matrix; `config` is a JSON run configuration.
#[pyfunction]
#[pyo3(signature = (config=None))]
fn verify_all<'py>(py: Python<'py>, config: Option<&str>) -> PyResult<Bound<'py, PyAny>> {
    let cfg = match config {
        Some(text) => RunConfig::from_json(text).map_err(py_err)?,
        None => RunConfig::default(),
    };
    let report = py.detach(|| run_suite(&cfg)).map_err(py_err)?;
    loads(py, &report.to_json())
}

#[pymodule]
fn casimir_workbench(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Algebra>()?;
    m.add_class::<WedgeOperator>()?;
    m.add_function(wrap_pyfunction!(vogel, m)?)?;
    m.add_function(wrap_pyfunction!(universal_trace, m)?)?;
    m.add_function(wrap_pyfunction!(dim_x, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    Ok(())
}
