//! Python bindings: tableaux are passed as lists of rows, partitions as
//! lists of parts.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use symplectic_branching::aii;
use symplectic_branching::character;
use symplectic_branching::crystal;
use symplectic_branching::promotion::{self, Bijection};
use symplectic_branching::verify::{self as sweep, SweepOptions, VerifyConfig};
use symplectic_branching::{Error, Partition, Rank, Tableau};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded { .. } => PyRuntimeError::new_err(e.to_string()),
        e => PyValueError::new_err(e.to_string()),
    }
}

fn rank(n: usize) -> PyResult<Rank> {
    Rank::new(n).map_err(to_py)
}

fn partition(parts: Vec<u32>) -> PyResult<Partition> {
    Partition::new(parts).map_err(to_py)
}

fn tableau(rows: Vec<Vec<u32>>) -> PyResult<Tableau> {
    let t = Tableau::from_rows(&rows);
    t.require_shape().map_err(to_py)?;
    if !t.is_semistandard() {
        return Err(PyValueError::new_err(format!("{rows:?} is not semistandard")));
    }
    Ok(t)
}

fn bijection(which: &str) -> PyResult<Bijection> {
    match which {
        "phi" => Ok(Bijection::Phi),
        "psi" => Ok(Bijection::Psi),
        other => Err(PyValueError::new_err(format!("unknown bijection {other:?}; expected \"phi\" or \"psi\""))),
    }
}

/// `[(μ, multiplicity)]` of the restriction of `L(λ)`, from characters.
#[pyfunction]
fn branching_rule(n: usize, lam: Vec<u32>) -> PyResult<Vec<(Vec<u32>, u64)>> {
    let rule = character::branching_rule(&partition(lam)?, rank(n)?).map_err(to_py)?;
    Ok(rule.into_iter().map(|(mu, m)| (mu.parts().to_vec(), m)).collect())
}

/// `(μ, multiplicity, ĝ-dominant, k-highest, k-lowest)`.
type BranchRow = (Vec<u32>, u64, u64, u64, u64);

/// One row for every `μ` that occurs in any model.
#[pyfunction]
fn branch(py: Python<'_>, n: usize, lam: Vec<u32>) -> PyResult<Vec<BranchRow>> {
    let (r, lam) = (rank(n)?, partition(lam)?);
    let options = SweepOptions { bijections: false, promotion: false, crystal: false, rectification: false };
    let report = py.detach(|| sweep::sweep_shape(&lam, r, options)).map_err(to_py)?;
    Ok(report
        .rows
        .into_iter()
        .filter(|row| row.oracle > 0 || !row.pass)
        .map(|row| (row.mu.parts().to_vec(), row.oracle, row.ghat_dominant, row.k_highest, row.k_lowest))
        .collect())
}

/// `P^AII` of a tableau.
#[pyfunction]
fn p_aii(rows: Vec<Vec<u32>>) -> PyResult<Vec<Vec<u32>>> {
    Ok(aii::p_aii(&tableau(rows)?).map_err(to_py)?.rows())
}

/// `Q^AII` as `[((column, row), step)]`.
#[pyfunction]
fn q_aii(rows: Vec<Vec<u32>>) -> PyResult<Vec<((usize, usize), u32)>> {
    let q = aii::q_aii(&tableau(rows)?).map_err(to_py)?;
    Ok(q.iter().map(|(c, j)| ((c.x, c.y), j)).collect())
}

#[pyfunction]
fn is_k_highest(rows: Vec<Vec<u32>>, n: usize) -> PyResult<bool> {
    aii::is_k_highest(&tableau(rows)?, rank(n)?).map_err(to_py)
}

#[pyfunction]
fn is_k_lowest(rows: Vec<Vec<u32>>, n: usize) -> PyResult<bool> {
    aii::is_k_lowest(&tableau(rows)?, rank(n)?).map_err(to_py)
}

#[pyfunction]
fn is_ghat_dominant(rows: Vec<Vec<u32>>, n: usize) -> PyResult<bool> {
    crystal::is_ghat_dominant(&tableau(rows)?, rank(n)?).map_err(to_py)
}

#[pyfunction]
fn wt_k(rows: Vec<Vec<u32>>, n: usize) -> PyResult<Vec<i32>> {
    Ok(crystal::wt_k(&tableau(rows)?, rank(n)?).0)
}

#[pyfunction]
fn wt_ghat(rows: Vec<Vec<u32>>, n: usize) -> PyResult<Vec<i32>> {
    Ok(crystal::wt_ghat(&tableau(rows)?, rank(n)?).0)
}

/// `pr_{a,b}`, or its inverse.
#[pyfunction]
#[pyo3(signature = (rows, a, b, inverse = false))]
fn promote(rows: Vec<Vec<u32>>, a: u32, b: u32, inverse: bool) -> PyResult<Vec<Vec<u32>>> {
    let t = tableau(rows)?;
    let out = if inverse { promotion::pr_inv(&t, a, b) } else { promotion::pr(&t, a, b) };
    Ok(out.map_err(to_py)?.rows())
}

/// The promotion factors `[(a, b)]` of `"phi"` or `"psi"`, in order of application.
#[pyfunction]
fn factors(which: &str, n: usize) -> PyResult<Vec<(u32, u32)>> {
    Ok(promotion::factors(bijection(which)?, rank(n)?).into_iter().map(|f| (f.a, f.b)).collect())
}

/// Applies `"phi"` or `"psi"` (or its inverse) to a tableau.
#[pyfunction]
#[pyo3(signature = (which, rows, n, inverse = false))]
fn apply(which: &str, rows: Vec<Vec<u32>>, n: usize, inverse: bool) -> PyResult<Vec<Vec<u32>>> {
    let (which, t, r) = (bijection(which)?, tableau(rows)?, rank(n)?);
    let out = if inverse {
        promotion::inverse(which, &t, r)
    } else {
        promotion::trace(which, &t, r).map(|tr| tr.output().clone())
    };
    Ok(out.map_err(to_py)?.rows())
}

/// Runs the full verification sweep and returns the report as JSON.
#[pyfunction]
#[pyo3(signature = (n, max_size, seed = 0, trials = 200, budget = None))]
fn verify(py: Python<'_>, n: usize, max_size: u32, seed: u64, trials: usize, budget: Option<u64>) -> PyResult<String> {
    let config = VerifyConfig { budget, seed, random_trials: trials, ..VerifyConfig::new(rank(n)?, max_size) };
    let report = py.detach(|| sweep::verify(&config)).map_err(to_py)?;
    Ok(serde_json::to_string(&report).expect("report serializes"))
}

#[pymodule]
fn spbranch(m: &Bound<'_, PyModule>) -> PyResult<()> {
    register(m)
}

/// Adds every binding to `m`.
pub fn register(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(branching_rule, m)?)?;
    m.add_function(wrap_pyfunction!(branch, m)?)?;
    m.add_function(wrap_pyfunction!(p_aii, m)?)?;
    m.add_function(wrap_pyfunction!(q_aii, m)?)?;
    m.add_function(wrap_pyfunction!(is_k_highest, m)?)?;
    m.add_function(wrap_pyfunction!(is_k_lowest, m)?)?;
    m.add_function(wrap_pyfunction!(is_ghat_dominant, m)?)?;
    m.add_function(wrap_pyfunction!(wt_k, m)?)?;
    m.add_function(wrap_pyfunction!(wt_ghat, m)?)?;
    m.add_function(wrap_pyfunction!(promote, m)?)?;
    m.add_function(wrap_pyfunction!(factors, m)?)?;
    m.add_function(wrap_pyfunction!(apply, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
