use std::collections::BTreeSet;

use ::fgybe as core;
use core::fgybe::{format_families, orbit, FamilyId};
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: core::Error) -> PyErr {
    match e {
        core::Error::NotAnAutomorphism | core::Error::NotASolution | core::Error::ExponentOverflow => {
            PyArithmeticError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn family_names(f: &BTreeSet<FamilyId>) -> Vec<String> {
    f.iter().map(ToString::to_string).collect()
}

/// Reduced word in a free group, written like `"y^-1 x y"` or `"x1 x3^2"`.
#[pyclass(name = "Word", module = "pyfgybe", frozen, eq, ord, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PyWord(core::Word);

#[pymethods]
impl PyWord {
    #[new]
    #[pyo3(signature = (text, rank = 2))]
    fn new(text: &str, rank: u32) -> PyResult<Self> {
        core::Word::parse(text, rank).map(Self).map_err(err)
    }

    #[staticmethod]
    fn identity(rank: u32) -> Self {
        Self(core::Word::identity(rank))
    }

    #[getter]
    fn rank(&self) -> u32 {
        self.0.rank()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Word('{}', rank={})", self.0, self.0.rank())
    }

    fn __mul__(&self, other: &PyWord) -> PyResult<Self> {
        self.0.concat(&other.0).map(Self).map_err(err)
    }

    fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    fn pow(&self, k: i64) -> PyResult<Self> {
        self.0.pow(k).map(Self).map_err(err)
    }

    /// Image under `x_j -> images[j-1]`.
    fn substitute(&self, images: Vec<PyRef<'_, PyWord>>) -> PyResult<Self> {
        let images: Vec<core::Word> = images.iter().map(|w| w.0.clone()).collect();
        self.0.substitute(&images).map(Self).map_err(err)
    }

    /// `(core, conjugator)` with `self = conjugator * core * conjugator^-1`.
    fn cyclic_reduce(&self) -> (Self, Self) {
        let (c, k) = self.0.cyclic_reduce();
        (Self(c), Self(k))
    }

    /// `(root, k)` with `self = root^k` and `k` maximal.
    fn proper_power(&self) -> PyResult<(Self, u64)> {
        self.0.proper_power().map(|(r, k)| (Self(r), k)).map_err(err)
    }

    fn exponent_sum(&self, generator: u32) -> PyResult<i64> {
        Ok(self.0.exponent_sum(core::Generator::new(generator).map_err(err)?))
    }
}

/// A pair `(W, V)` of rank-2 words.
#[pyclass(name = "Pair", module = "pyfgybe", frozen, eq, ord, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PyPair(core::SolutionPair);

#[pymethods]
impl PyPair {
    #[new]
    fn new(w: &str, v: &str) -> PyResult<Self> {
        core::SolutionPair::parse(w, v).map(Self).map_err(err)
    }

    #[staticmethod]
    fn artin() -> Self {
        Self(core::SolutionPair::artin())
    }

    #[getter]
    fn w(&self) -> PyWord {
        PyWord(self.0.w().clone())
    }

    #[getter]
    fn v(&self) -> PyWord {
        PyWord(self.0.v().clone())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Pair('{}', '{}')", self.0.w(), self.0.v())
    }

    /// Per-equation verdicts and, for failures, both sides.
    fn check<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let report = core::is_solution(&self.0).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("t", report.t_holds())?;
        d.set_item("m", report.m_holds())?;
        d.set_item("b", report.b_holds())?;
        d.set_item("solution", report.is_solution())?;
        let witnesses: Vec<(String, String, String)> = report
            .witnesses()
            .into_iter()
            .map(|(e, s)| (e.to_string(), s.lhs.to_string(), s.rhs.to_string()))
            .collect();
        d.set_item("witnesses", witnesses)?;
        Ok(d)
    }

    fn is_solution(&self) -> PyResult<bool> {
        Ok(core::is_solution(&self.0).map_err(err)?.is_solution())
    }

    fn dual(&self) -> Self {
        Self(self.0.dual())
    }

    /// Raises `ArithmeticError` when the pair does not define an automorphism.
    fn inverse(&self) -> PyResult<Self> {
        core::invert_pair(&self.0).map(Self).map_err(err)
    }

    fn is_automorphism(&self) -> bool {
        core::is_automorphism(&self.0)
    }

    fn is_boundary_fixing(&self) -> bool {
        self.0.is_boundary_fixing()
    }

    fn classify(&self) -> Vec<String> {
        family_names(&core::classify(&self.0))
    }

    fn orbit(&self) -> Vec<Self> {
        orbit(&self.0).into_iter().map(Self).collect()
    }

    #[pyo3(signature = (strands = 3))]
    fn verify_braid_relations(&self, strands: usize) -> PyResult<bool> {
        core::verify_braid_relations(&self.0, strands).map_err(err)
    }
}

/// Every solution with `|W| + |V| <= max_len` as `(pair, families)`.
#[pyfunction]
#[pyo3(signature = (max_len, jobs = 1))]
fn enumerate(py: Python<'_>, max_len: usize, jobs: usize) -> Vec<(PyPair, Vec<String>)> {
    let records = py.detach(|| core::enumerate_solutions_parallel(max_len, jobs));
    records.into_iter().map(|r| (PyPair(r.pair), family_names(&r.families))).collect()
}

/// Comma-joined family display, `-` for none.
#[pyfunction]
fn families_display(pair: &PyPair) -> String {
    format_families(&core::classify(&pair.0))
}

fn pair_or_artin(pair: Option<&PyPair>) -> core::SolutionPair {
    pair.map_or_else(core::SolutionPair::artin, |p| p.0.clone())
}

/// Generator images of the endomorphism a braid word induces.
#[pyfunction]
#[pyo3(signature = (braid, strands, pair = None))]
fn braid_apply(braid: &str, strands: usize, pair: Option<PyRef<'_, PyPair>>) -> PyResult<Vec<String>> {
    let b = core::BraidWord::parse(braid, strands).map_err(err)?;
    let phi = core::braid_to_endo(&b, &pair_or_artin(pair.as_deref())).map_err(err)?;
    Ok(phi.images().iter().map(ToString::to_string).collect())
}

/// Closure presentation and abelian invariants of a braid.
#[pyfunction]
#[pyo3(signature = (braid, strands, pair = None))]
fn invariant<'py>(
    py: Python<'py>,
    braid: &str,
    strands: usize,
    pair: Option<PyRef<'_, PyPair>>,
) -> PyResult<Bound<'py, PyDict>> {
    let b = core::BraidWord::parse(braid, strands).map_err(err)?;
    let p = core::closure_presentation(&b, &pair_or_artin(pair.as_deref())).map_err(err)?;
    let inv = core::abelian_invariants(&p);
    let d = PyDict::new(py);
    d.set_item("relators", p.relators().iter().map(ToString::to_string).collect::<Vec<_>>())?;
    let simplified = core::simplify(&p);
    d.set_item("simplified", simplified.relators().iter().map(ToString::to_string).collect::<Vec<_>>())?;
    d.set_item("free_rank", inv.free_rank)?;
    d.set_item("torsion", inv.torsion.clone())?;
    d.set_item("h1", inv.to_string())?;
    Ok(d)
}

#[pymodule]
fn pyfgybe(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyWord>()?;
    m.add_class::<PyPair>()?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(families_display, m)?)?;
    m.add_function(wrap_pyfunction!(braid_apply, m)?)?;
    m.add_function(wrap_pyfunction!(invariant, m)?)?;
    Ok(())
}
