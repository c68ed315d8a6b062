//! Python bindings for `hurwitz-phi`.
//!
//! Surfaces are passed as genera, profiles as lists of ints. Structured
//! results without a dedicated class come back as plain dicts with the same
//! shape as the CLI's JSON output.

// pyo3 0.22 macro expansion converts PyErr into itself.
#![allow(clippy::useless_conversion)]

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use serde::Serialize;

use ::hurwitz_phi as hp;
use ::hurwitz_phi::monodromy::{SearchBudget, DEFAULT_BUDGET, DEFAULT_SEED};
use ::hurwitz_phi::patterson::Realizability;
use ::hurwitz_phi::{RamificationProfile, Surface};

fn value_error(e: hp::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<PyObject> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import_bound("json")?.call_method1("loads", (text,))?.unbind())
}

fn profile(multiplicities: Vec<u32>) -> PyResult<RamificationProfile> {
    RamificationProfile::new(multiplicities).map_err(value_error)
}

fn budget(max_evaluations: u64, seed: u64) -> SearchBudget {
    SearchBudget { max_evaluations, seed }
}

/// Degree and branch profile of a branched cover over a fixed target.
#[pyclass(module = "hurwitz_phi", name = "CoveringData", frozen, eq)]
#[derive(Clone, PartialEq)]
struct PyCoveringData(hp::CoveringData);

#[pymethods]
impl PyCoveringData {
    #[new]
    fn new(target_genus: u32, degree: u32, profile: Vec<u32>) -> PyResult<Self> {
        let p = self::profile(profile)?;
        hp::CoveringData::new(Surface::new(target_genus), degree, p).map(Self).map_err(value_error)
    }

    #[getter]
    fn degree(&self) -> u32 {
        self.0.degree()
    }

    #[getter]
    fn profile(&self) -> Vec<u32> {
        self.0.profile().multiplicities().to_vec()
    }

    #[getter]
    fn target_genus(&self) -> u32 {
        self.0.target().genus()
    }

    #[getter]
    fn source_euler(&self) -> i64 {
        self.0.source_euler()
    }

    #[getter]
    fn critical_points(&self) -> usize {
        self.0.critical_points()
    }

    fn to_dict(&self, py: Python<'_>) -> PyResult<PyObject> {
        to_py(py, &self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "CoveringData(target_genus={}, degree={}, profile={:?})",
            self.0.target().genus(),
            self.0.degree(),
            self.0.profile().multiplicities()
        )
    }
}

/// φ for a pair of surfaces: a finite count with a witness, or infinite.
#[pyclass(module = "hurwitz_phi", name = "PhiResult", frozen, eq)]
#[derive(Clone, PartialEq)]
struct PyPhiResult(hp::PhiResult);

#[pymethods]
impl PyPhiResult {
    /// The finite value, or None when φ is infinite.
    #[getter]
    fn value(&self) -> Option<u32> {
        self.0.value()
    }

    #[getter]
    fn is_infinite(&self) -> bool {
        self.0.is_infinite()
    }

    /// Numeric tag of the infinite case (1 or 4), or None when finite.
    #[getter]
    fn case(&self) -> Option<u8> {
        match self.0 {
            hp::PhiResult::Infinite { case } => Some(case.tag()),
            hp::PhiResult::Finite { .. } => None,
        }
    }

    #[getter]
    fn witness(&self) -> Option<PyCoveringData> {
        self.0.witness().cloned().map(PyCoveringData)
    }

    fn to_dict(&self, py: Python<'_>) -> PyResult<PyObject> {
        to_py(py, &self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("PhiResult({})", self.0)
    }
}

/// Permutation monodromy of a branched cover, composed left to right.
#[pyclass(module = "hurwitz_phi", name = "Certificate", frozen, eq)]
#[derive(Clone, PartialEq)]
struct PyCertificate(hp::MonodromyCertificate);

#[pymethods]
impl PyCertificate {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        hp::MonodromyCertificate::from_json(text).map(Self).map_err(value_error)
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree
    }

    #[getter]
    fn target_genus(&self) -> u32 {
        self.0.target_genus
    }

    #[getter]
    fn profile(&self) -> Vec<u32> {
        self.0.declared_profile.multiplicities().to_vec()
    }

    #[getter]
    fn handles(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        self.0.handles.iter().map(|(a, b)| (a.images().to_vec(), b.images().to_vec())).collect()
    }

    #[getter]
    fn branch(&self) -> Vec<Vec<usize>> {
        self.0.branch.iter().map(|s| s.images().to_vec()).collect()
    }

    /// The same cover with every entry conjugated by `sigma` (image list).
    fn conjugate_by(&self, sigma: Vec<usize>) -> PyResult<Self> {
        let sigma = hp::Permutation::new(sigma).map_err(value_error)?;
        if sigma.degree() != self.0.degree {
            return Err(PyValueError::new_err("conjugating permutation has the wrong degree"));
        }
        Ok(Self(self.0.conjugate_by(&sigma)))
    }

    fn __repr__(&self) -> String {
        format!(
            "Certificate(target_genus={}, degree={}, profile={:?})",
            self.0.target_genus,
            self.0.degree,
            self.0.declared_profile.multiplicities()
        )
    }
}

#[pyfunction]
fn euler_char(genus: u32) -> i64 {
    hp::euler_char(genus)
}

#[pyfunction]
fn genus_from_euler(chi: i64) -> PyResult<u32> {
    hp::genus_from_euler(chi).map_err(value_error)
}

/// Source Euler characteristic of a cover of the given degree and profile.
#[pyfunction]
fn hurwitz_euler(target_chi: i64, degree: u32, profile: Vec<u32>) -> PyResult<i64> {
    hp::hurwitz_euler(target_chi, degree, &self::profile(profile)?).map_err(value_error)
}

#[pyfunction]
fn phi(source_genus: u32, target_genus: u32) -> PyPhiResult {
    PyPhiResult(hp::phi(Surface::new(source_genus), Surface::new(target_genus)))
}

#[pyfunction]
fn phi_table(target_genus: u32, max_source_genus: u32) -> Vec<(u32, PyPhiResult)> {
    hp::phi_table(target_genus, max_source_genus).into_iter().map(|(g, r)| (g, PyPhiResult(r))).collect()
}

#[pyfunction]
fn minimal_k(chi_src: i64, chi_tgt: i64) -> PyResult<PyPhiResult> {
    hp::minimal_k(chi_src, chi_tgt).map(PyPhiResult).map_err(value_error)
}

#[pyfunction]
fn closed_form_phi(chi_src: i64, chi_tgt: i64) -> PyResult<u64> {
    hp::closed_form_phi(chi_src, chi_tgt).map_err(value_error)
}

#[pyfunction]
fn has_admissible_degree(chi_src: i64, chi_tgt: i64, k: u32) -> PyResult<bool> {
    hp::has_admissible_degree(chi_src, chi_tgt, k).map_err(value_error)
}

#[pyfunction]
fn patterson_feasible(target_genus: u32, degree: u32, profile: Vec<u32>) -> PyResult<bool> {
    hp::patterson_feasible(Surface::new(target_genus), degree, &self::profile(profile)?).map_err(value_error)
}

/// Returns (realizability, data) where realizability is "guaranteed" or
/// "requires-monodromy-check".
#[pyfunction]
fn enumerate_covering_data(
    source_euler: i64,
    target_genus: u32,
    k: u32,
    d_max: u32,
) -> PyResult<(&'static str, Vec<PyCoveringData>)> {
    let e = hp::enumerate_covering_data(source_euler, Surface::new(target_genus), k, d_max).map_err(value_error)?;
    let flag = match e.realizability {
        Realizability::Guaranteed => "guaranteed",
        Realizability::RequiresMonodromyCheck => "requires-monodromy-check",
    };
    Ok((flag, e.data.into_iter().map(PyCoveringData).collect()))
}

/// Searches for a certificate. The dict's "status" is "certificate",
/// "infeasible" (with "reason") or "not-found" (with "evaluations").
#[pyfunction]
#[pyo3(signature = (target_genus, degree, profile, seed = DEFAULT_SEED, budget = DEFAULT_BUDGET))]
fn realize<'py>(
    py: Python<'py>,
    target_genus: u32,
    degree: u32,
    profile: Vec<u32>,
    seed: u64,
    budget: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let p = self::profile(profile)?;
    let out = PyDict::new_bound(py);
    match hp::realize(Surface::new(target_genus), degree, &p, self::budget(budget, seed)) {
        hp::Realization::Certificate(c) => {
            out.set_item("status", "certificate")?;
            out.set_item("certificate", PyCertificate(c).into_py(py))?;
        }
        hp::Realization::Infeasible(reason) => {
            out.set_item("status", "infeasible")?;
            out.set_item("reason", reason.to_string())?;
        }
        hp::Realization::NotFound { evaluations } => {
            out.set_item("status", "not-found")?;
            out.set_item("evaluations", evaluations)?;
        }
    }
    Ok(out)
}

/// Dict with "valid", "violations" and "computed_source_euler".
#[pyfunction]
fn verify_certificate(py: Python<'_>, certificate: &PyCertificate) -> PyResult<PyObject> {
    let report = hp::verify_certificate(&certificate.0).map_err(value_error)?;
    to_py(py, &report)
}

/// Dict with "status", optional "value", and "provenance".
#[pyfunction]
fn classify_sphere_pair(py: Python<'_>, m: u32, n: u32) -> PyResult<PyObject> {
    to_py(py, &hp::classify_sphere_pair(m, n).map_err(value_error)?)
}

#[pyfunction]
fn simplicial_volume(genus: u32) -> u64 {
    hp::simplicial_volume(Surface::new(genus))
}

/// ‖Σ_G‖/‖Σ_g‖ modulo 1 as a `fractions.Fraction`.
#[pyfunction]
fn volume_ratio(py: Python<'_>, source_genus: u32, target_genus: u32) -> PyResult<PyObject> {
    let r = hp::volume_ratio(Surface::new(source_genus), Surface::new(target_genus)).map_err(value_error)?;
    let fraction = py.import_bound("fractions")?.getattr("Fraction")?;
    Ok(fraction.call1((r.numerator(), r.denominator()))?.unbind())
}

/// Upper bound for φ from covers of bounded size. The dict's "status" is
/// "finite" (with "k" and a CoveringData "witness") or "none-found-within".
#[pyfunction]
#[pyo3(signature = (source_genus, target_genus, max_k, max_degree, seed = DEFAULT_SEED, budget = DEFAULT_BUDGET))]
fn oracle_phi<'py>(
    py: Python<'py>,
    source_genus: u32,
    target_genus: u32,
    max_k: u32,
    max_degree: u32,
    seed: u64,
    budget: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let outcome = hp::oracle_phi(
        Surface::new(source_genus),
        Surface::new(target_genus),
        max_k,
        max_degree,
        self::budget(budget, seed),
    );
    let out = PyDict::new_bound(py);
    match outcome {
        hp::OracleOutcome::Finite { k, witness, .. } => {
            out.set_item("status", "finite")?;
            out.set_item("k", k)?;
            out.set_item("witness", PyCoveringData(witness).into_py(py))?;
        }
        hp::OracleOutcome::NoneFoundWithin { max_k, max_degree } => {
            out.set_item("status", "none-found-within")?;
            out.set_item("max_k", max_k)?;
            out.set_item("max_degree", max_degree)?;
        }
    }
    Ok(out)
}

#[pymodule]
fn hurwitz_phi(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCoveringData>()?;
    m.add_class::<PyPhiResult>()?;
    m.add_class::<PyCertificate>()?;
    m.add_function(wrap_pyfunction!(euler_char, m)?)?;
    m.add_function(wrap_pyfunction!(genus_from_euler, m)?)?;
    m.add_function(wrap_pyfunction!(hurwitz_euler, m)?)?;
    m.add_function(wrap_pyfunction!(phi, m)?)?;
    m.add_function(wrap_pyfunction!(phi_table, m)?)?;
    m.add_function(wrap_pyfunction!(minimal_k, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_phi, m)?)?;
    m.add_function(wrap_pyfunction!(has_admissible_degree, m)?)?;
    m.add_function(wrap_pyfunction!(patterson_feasible, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_covering_data, m)?)?;
    m.add_function(wrap_pyfunction!(realize, m)?)?;
    m.add_function(wrap_pyfunction!(verify_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(classify_sphere_pair, m)?)?;
    m.add_function(wrap_pyfunction!(simplicial_volume, m)?)?;
    m.add_function(wrap_pyfunction!(volume_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_phi, m)?)?;
    m.add("CONVENTION", hp::monodromy::CONVENTION)?;
    Ok(())
}
