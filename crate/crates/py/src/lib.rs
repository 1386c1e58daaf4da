//! Python bindings. Structured results cross the boundary as JSON strings
//! with the same schemas as the command-line tool.

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

use cellres::cwposet::{self, shapes, CWChainData, SearchOptions, DEFAULT_SEARCH_BOUND};
use cellres::exactlin::{FpMatrix, Prime};
use cellres::monoid::{self, Multidegree};
use cellres::pipeline;
use cellres::rescomplex::{self, GradedFreeComplex};

create_exception!(cellres_py, CellresError, PyValueError);

fn err(e: impl std::fmt::Display) -> PyErr {
    CellresError::new_err(e.to_string())
}

fn prime(p: u32) -> PyResult<Prime> {
    Prime::new(p).map_err(err)
}

fn json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("types serialize");
    serde_json::to_string(&v).expect("values serialize")
}

#[pyclass(module = "cellres_py", frozen)]
pub struct Ideal(monoid::MonomialIdeal);

#[pymethods]
impl Ideal {
    /// Parses `"x^2*y, y*z"`. Variables default to their order of appearance.
    #[new]
    #[pyo3(signature = (text, variables=None))]
    fn new(text: &str, variables: Option<Vec<String>>) -> PyResult<Self> {
        match variables {
            Some(v) => monoid::parse_ideal(text, &v),
            None => monoid::parse_ideal_infer(text),
        }
        .map(Ideal)
        .map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text).map(Ideal).map_err(err)
    }

    fn to_json(&self) -> String {
        json(&self.0)
    }

    #[getter]
    fn variables(&self) -> Vec<String> {
        self.0.variables().to_vec()
    }

    #[getter]
    fn generators(&self) -> Vec<Vec<u32>> {
        self.0.generators().iter().map(|g| g.exponents().to_vec()).collect()
    }

    fn __str__(&self) -> String {
        self.0.render()
    }

    fn __repr__(&self) -> String {
        format!("Ideal({:?})", self.0.render())
    }
}

#[pyclass(module = "cellres_py", frozen)]
pub struct Resolution(GradedFreeComplex);

#[pymethods]
impl Resolution {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text).map(Resolution).map_err(err)
    }

    fn to_json(&self) -> String {
        json(&self.0)
    }

    #[getter]
    fn p(&self) -> u32 {
        self.0.prime().get()
    }

    #[getter]
    fn ranks(&self) -> Vec<usize> {
        self.0.ranks()
    }

    /// `(i, alpha, beta_{i,alpha})` sorted by `(i, alpha)`.
    fn betti(&self) -> Vec<(usize, Vec<u32>, usize)> {
        self.0.betti_table().iter().map(|(i, a, b)| (i, a.exponents().to_vec(), b)).collect()
    }

    fn is_complex(&self) -> bool {
        self.0.is_complex()
    }

    fn is_exact(&self, ideal: PyRef<'_, Ideal>) -> bool {
        self.0.is_exact(&ideal.0)
    }

    fn is_minimal(&self) -> bool {
        self.0.is_minimal()
    }

    fn __repr__(&self) -> String {
        format!("Resolution(p={}, ranks={:?})", self.0.prime().get(), self.0.ranks())
    }
}

#[pyclass(module = "cellres_py", frozen)]
pub struct CWComplex(CWChainData);

fn labels(raw: Option<Vec<Vec<u32>>>) -> Option<Vec<Multidegree>> {
    raw.map(|l| l.into_iter().map(Multidegree::new).collect())
}

#[pymethods]
impl CWComplex {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text).map(CWComplex).map_err(err)
    }

    /// The full simplex on `dim + 1` vertices, optionally labeled.
    #[staticmethod]
    #[pyo3(signature = (dim, labels=None))]
    fn simplex(dim: usize, labels: Option<Vec<Vec<u32>>>) -> Self {
        CWComplex(shapes::simplex(dim, self::labels(labels).as_deref()))
    }

    /// Simplicial complex generated by `facets` (lists of vertex indices).
    #[staticmethod]
    #[pyo3(signature = (facets, labels=None))]
    fn simplicial(facets: Vec<Vec<usize>>, labels: Option<Vec<Vec<u32>>>) -> Self {
        CWComplex(shapes::simplicial_cw(&facets, self::labels(labels).as_deref()))
    }

    fn to_json(&self) -> String {
        json(&self.0)
    }

    #[getter]
    fn counts(&self) -> Vec<usize> {
        self.0.counts()
    }

    /// Issues found by the CW invariant checks, as JSON; `[]` when valid.
    fn validate(&self) -> String {
        json(&cwposet::validate_cw(&self.0).issues)
    }

    fn is_regular(&self) -> bool {
        cwposet::check_regular_two_skeleton(&self.0)
    }

    #[pyo3(signature = (p=2))]
    fn face_poset(&self, p: u32) -> PyResult<String> {
        Ok(json(&cwposet::face_poset(&self.0, prime(p)?)))
    }

    fn __eq__(&self, other: PyRef<'_, CWComplex>) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("CWComplex(counts={:?})", self.0.counts())
    }
}

/// Minimal free resolution of `ideal` over GF(p).
#[pyfunction]
#[pyo3(signature = (ideal, p=2))]
fn resolve(ideal: PyRef<'_, Ideal>, p: u32) -> PyResult<Resolution> {
    pipeline::minimal_resolution(&ideal.0, prime(p)?).map(Resolution).map_err(err)
}

/// Betti numbers from lcm-lattice homology, as `(i, alpha, count)`.
#[pyfunction]
#[pyo3(signature = (ideal, p=2))]
fn betti_oracle(ideal: PyRef<'_, Ideal>, p: u32) -> PyResult<Vec<(usize, Vec<u32>, usize)>> {
    let t = rescomplex::betti_oracle(&ideal.0, prime(p)?);
    Ok(t.iter().map(|(i, a, b)| (i, a.exponents().to_vec(), b)).collect())
}

/// Support report of `cw` against the minimal resolution, as JSON.
#[pyfunction]
#[pyo3(signature = (cw, ideal, p=2))]
fn check_supports(cw: PyRef<'_, CWComplex>, ideal: PyRef<'_, Ideal>, p: u32) -> PyResult<String> {
    let res = pipeline::minimal_resolution(&ideal.0, prime(p)?).map_err(err)?;
    Ok(json(&cwposet::check_supports_cw(&cw.0, &res)))
}

/// Minimal-support basis of a resolution, as JSON `{basis, provenance}`.
#[pyfunction]
#[pyo3(signature = (res, stage2=false, bound=DEFAULT_SEARCH_BOUND))]
fn find_basis(res: PyRef<'_, Resolution>, stage2: bool, bound: usize) -> PyResult<String> {
    if bound == 0 {
        return Err(err("bound must be at least 1"));
    }
    cwposet::find_minimal_support_basis(&res.0, &SearchOptions { stage2, bound }).map(|b| json(&b)).map_err(err)
}

/// Certificate of a full pipeline run, as JSON.
#[pyfunction]
#[pyo3(signature = (ideal, cw, p=2, stage2=false, bound=DEFAULT_SEARCH_BOUND))]
fn run_pipeline(ideal: PyRef<'_, Ideal>, cw: PyRef<'_, CWComplex>, p: u32, stage2: bool, bound: usize) -> PyResult<String> {
    if bound == 0 {
        return Err(err("bound must be at least 1"));
    }
    let cert = pipeline::run_pipeline(&ideal.0, &cw.0, prime(p)?, &SearchOptions { stage2, bound });
    Ok(json(&cert))
}

/// Integer matrix of determinant 1 reducing to `rows` mod p.
#[pyfunction]
fn lift_sl(rows: Vec<Vec<i64>>, p: u32) -> PyResult<Vec<Vec<BigInt>>> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(err("matrix must be square"));
    }
    let m = FpMatrix::from_rows(prime(p)?, &rows);
    let t = cellres::exactlin::lift_sl(&m).map_err(err)?;
    Ok((0..n).map(|r| (0..n).map(|c| t.get(r, c).clone()).collect()).collect())
}

#[pymodule]
pub fn cellres_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("CellresError", m.py().get_type::<CellresError>())?;
    m.add_class::<Ideal>()?;
    m.add_class::<Resolution>()?;
    m.add_class::<CWComplex>()?;
    m.add_function(wrap_pyfunction!(resolve, m)?)?;
    m.add_function(wrap_pyfunction!(betti_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(check_supports, m)?)?;
    m.add_function(wrap_pyfunction!(find_basis, m)?)?;
    m.add_function(wrap_pyfunction!(run_pipeline, m)?)?;
    m.add_function(wrap_pyfunction!(lift_sl, m)?)?;
    Ok(())
}
