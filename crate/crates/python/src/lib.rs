//! Python bindings. Words cross the boundary as digit strings and exact
//! counts as Python integers.

use num_bigint::BigUint;
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use trace_recon::channel::{reconstruction_race_bounds, ChannelModel};
use trace_recon::formulas::{
    n_minus_binary_vt, n_minus_uncoded, n_plus, n_plus_binary, n_plus_levenshtein, FormulaParams,
};
use trace_recon::oracle::oracle_n_plus;
use trace_recon::reconstruct::{reconstruct_exact, required_traces, Reconstruction, TracePool};
use trace_recon::vt::{fp_set, generate_worst_pairs, vt_checksum, vt_decode, vt_enumerate, Generation, VtCode};
use trace_recon::{balls, Budget, Error, Word};

create_exception!(trace_recon, TraceReconError, PyValueError);
create_exception!(trace_recon, BudgetExceeded, PyRuntimeError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Budget { .. } => BudgetExceeded::new_err(e.to_string()),
        Error::Internal(_) => PyRuntimeError::new_err(e.to_string()),
        _ => TraceReconError::new_err(e.to_string()),
    }
}

fn word(s: &str) -> PyResult<Word> {
    Word::parse_field(s).map_err(to_py)
}

fn strings<'a>(words: impl IntoIterator<Item = &'a Word>) -> Vec<String> {
    words.into_iter().map(Word::to_string).collect()
}

fn budget(value: Option<u128>) -> Budget {
    value.map_or_else(Budget::from_env, Budget)
}

fn params(n: u64, t: u64, l: u64, q: u32, k: Option<u64>) -> PyResult<FormulaParams> {
    FormulaParams::new(n, t, k.unwrap_or(t), l, q).map_err(to_py)
}

/// Edit distance with insertions and deletions only.
#[pyfunction]
fn edit_distance(x: &str, y: &str) -> PyResult<usize> {
    Ok(balls::edit_distance(&word(x)?, &word(y)?))
}

/// All supersequences of `x` obtained by `t` insertions, sorted.
#[pyfunction]
#[pyo3(signature = (x, t, q = 2))]
fn insertion_ball(x: &str, t: usize, q: u8) -> PyResult<Vec<String>> {
    let x = word(x)?;
    x.check_alphabet(q).map_err(to_py)?;
    Ok(strings(&balls::insertion_ball(&x, t, q)))
}

/// All subsequences of `x` obtained by `v` deletions, sorted.
#[pyfunction]
fn deletion_ball(x: &str, v: usize) -> PyResult<Vec<String>> {
    Ok(strings(&balls::deletion_ball(&word(x)?, v).map_err(to_py)?))
}

/// Words reachable by `t` deletions followed by `t` insertions, sorted.
#[pyfunction]
#[pyo3(signature = (x, t, q = 2))]
fn indel_ball(x: &str, t: usize, q: u8) -> PyResult<Vec<String>> {
    Ok(strings(&balls::indel_ball(&word(x)?, t, q).map_err(to_py)?))
}

#[pyfunction]
#[pyo3(signature = (n, t, q = 2))]
fn insertion_ball_size(n: u64, t: u64, q: u32) -> BigUint {
    balls::insertion_ball_size(n, t, q)
}

/// Largest number of traces two words at the given distance can share.
#[pyfunction(name = "n_plus")]
#[pyo3(signature = (n, t, l, q = 2, k = None))]
fn py_n_plus(n: u64, t: u64, l: u64, q: u32, k: Option<u64>) -> PyResult<BigUint> {
    n_plus(&params(n, t, l, q, k)?).map_err(to_py)
}

#[pyfunction(name = "n_plus_levenshtein")]
#[pyo3(signature = (n, t, q = 2))]
fn py_n_plus_levenshtein(n: u64, t: u64, q: u32) -> BigUint {
    n_plus_levenshtein(n, t, q)
}

#[pyfunction(name = "n_plus_binary")]
fn py_n_plus_binary(n: u64, t: u64, k: u64, l: u64) -> PyResult<BigUint> {
    n_plus_binary(n, t, k, l).map_err(to_py)
}

#[pyfunction(name = "n_minus_uncoded")]
#[pyo3(signature = (n, t, q = 2))]
fn py_n_minus_uncoded(n: u64, t: u64, q: u32) -> PyResult<BigUint> {
    n_minus_uncoded(n, t, q).map_err(to_py)
}

#[pyfunction(name = "n_minus_binary_vt")]
fn py_n_minus_binary_vt(n: u64, t: u64) -> PyResult<BigUint> {
    n_minus_binary_vt(n, t).map_err(to_py)
}

/// Traces that always suffice: `n_plus(n, t, l, q) + 1`.
#[pyfunction(name = "required_traces")]
#[pyo3(signature = (n, t, l, q = 2))]
fn py_required_traces(n: u64, t: u64, l: u64, q: u32) -> PyResult<BigUint> {
    required_traces(n, t, l, q).map_err(to_py)
}

/// Exhaustive maximum over word pairs, with the lexicographically least
/// witness pair when one exists.
#[pyfunction(name = "oracle_n_plus")]
#[pyo3(signature = (n, t, l, q = 2, k = None, budget = None))]
fn py_oracle_n_plus(
    n: u64,
    t: u64,
    l: u64,
    q: u32,
    k: Option<u64>,
    budget: Option<u128>,
) -> PyResult<(BigUint, Option<(String, String)>)> {
    let r = oracle_n_plus(&params(n, t, l, q, k)?, self::budget(budget)).map_err(to_py)?;
    Ok((r.value, r.witness.map(|(x, y)| (x.to_string(), y.to_string()))))
}

fn code(n: usize, a: usize) -> PyResult<VtCode> {
    VtCode::new(n, a).map_err(to_py)
}

#[pyfunction(name = "vt_checksum")]
fn py_vt_checksum(x: &str) -> PyResult<usize> {
    vt_checksum(&word(x)?).map_err(to_py)
}

#[pyfunction(name = "vt_enumerate")]
#[pyo3(signature = (n, a, budget = None))]
fn py_vt_enumerate(n: usize, a: usize, budget: Option<u128>) -> PyResult<Vec<String>> {
    Ok(strings(&vt_enumerate(code(n, a)?, self::budget(budget)).map_err(to_py)?))
}

/// Corrects one insertion or deletion in a word received from VT(n, a).
#[pyfunction(name = "vt_decode")]
fn py_vt_decode(received: &str, n: usize, a: usize) -> PyResult<String> {
    Ok(vt_decode(&word(received)?, code(n, a)?).map_err(to_py)?.to_string())
}

#[pyfunction(name = "fp_set")]
fn py_fp_set(n: usize) -> PyResult<Vec<usize>> {
    fp_set(n).map_err(to_py)
}

/// Codeword pairs of VT(n, a) meeting the worst-case trace count at `t`.
/// With `seed`, `limit` pairs (default 16) are sampled instead of enumerated.
#[pyfunction]
#[pyo3(signature = (n, a, t = 2, limit = None, seed = None))]
fn worst_pairs(
    n: usize,
    a: usize,
    t: usize,
    limit: Option<usize>,
    seed: Option<u64>,
) -> PyResult<Vec<(String, String)>> {
    let mode = match seed {
        Some(seed) => Generation::Sampled { count: limit.unwrap_or(16), seed },
        None => Generation::Exhaustive { limit },
    };
    let family = generate_worst_pairs(code(n, a)?, t, mode).map_err(to_py)?;
    Ok(family.pairs.iter().map(|p| (p.first.to_string(), p.second.to_string())).collect())
}

/// Filters `candidates` by the traces. Returns `("unique" | "ambiguous" |
/// "none", consistent_words)`.
#[pyfunction]
#[pyo3(signature = (traces, candidates, q = 2))]
fn reconstruct(traces: Vec<String>, candidates: Vec<String>, q: u8) -> PyResult<(&'static str, Vec<String>)> {
    let traces = traces.iter().map(|s| word(s)).collect::<PyResult<Vec<_>>>()?;
    let candidates = candidates.iter().map(|s| word(s)).collect::<PyResult<Vec<_>>>()?;
    let n = candidates.first().map(Word::len).ok_or_else(|| TraceReconError::new_err("candidate list is empty"))?;
    let pool = TracePool::new(n, traces).map_err(to_py)?;
    Ok(match reconstruct_exact(&pool, candidates, q).map_err(to_py)? {
        Reconstruction::Unique(w) => ("unique", vec![w.to_string()]),
        Reconstruction::Ambiguous(r) if r.consistent.is_empty() => ("none", Vec::new()),
        Reconstruction::Ambiguous(r) => ("ambiguous", strings(&r.consistent)),
    })
}

/// The insertion channel for a code of minimum distance `2 l`.
#[pyclass(name = "ChannelModel", frozen)]
struct PyChannel(ChannelModel);

#[pymethods]
impl PyChannel {
    #[new]
    #[pyo3(signature = (p, n, q = 2, l = 2))]
    fn new(p: f64, n: usize, q: u8, l: usize) -> PyResult<Self> {
        ChannelModel::new(p, n, q, l).map(PyChannel).map_err(to_py)
    }

    #[getter]
    fn p(&self) -> f64 {
        self.0.p
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n
    }

    #[getter]
    fn q(&self) -> u8 {
        self.0.q
    }

    #[getter]
    fn l(&self) -> usize {
        self.0.l
    }

    /// Probability that an output carries exactly `i` insertions.
    fn p_insertions(&self, i: usize) -> f64 {
        self.0.p_insertions(i)
    }

    fn ln_p_insertions(&self, i: usize) -> f64 {
        self.0.ln_p_insertions(i)
    }

    /// Distinct outputs with `i` insertions needed to recover the source.
    fn threshold(&self, i: usize) -> BigUint {
        self.0.threshold(i)
    }

    fn expected_transmissions(&self, i: usize) -> PyResult<f64> {
        self.0.expected_transmissions(i).map_err(to_py)
    }

    fn ln_expected_transmissions(&self, i: usize) -> PyResult<f64> {
        self.0.ln_expected_transmissions(i).map_err(to_py)
    }

    fn expected_ratio(&self, i: usize, j: usize) -> PyResult<f64> {
        self.0.expected_ratio(i, j).map_err(to_py)
    }

    /// `(i, ln E_i)` minimizing `E_i` over `0..=i_max`.
    fn optimal_output_length(&self, i_max: usize) -> PyResult<(usize, f64)> {
        self.0.optimal_output_length(i_max).map_err(to_py)
    }

    /// Rows `(i, p_i, T_i, E_i)`; `E_i` is `None` where `p_i = 0`.
    fn table(&self, i_max: usize) -> Vec<(usize, f64, BigUint, Option<f64>)> {
        self.0.table(i_max).into_iter().map(|r| (r.i, r.p_i, r.threshold, r.e_i)).collect()
    }

    fn reconstruction_heuristic(&self) -> bool {
        self.0.reconstruction_heuristic()
    }

    /// Lower and upper bounds on the chance a run ends in reconstruction.
    fn race_bounds(&self) -> (f64, f64) {
        reconstruction_race_bounds(&self.0)
    }

    fn __repr__(&self) -> String {
        let m = &self.0;
        format!("ChannelModel(p={}, n={}, q={}, l={})", m.p, m.n, m.q, m.l)
    }
}

#[pymodule(name = "trace_recon")]
fn trace_recon_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("TraceReconError", m.py().get_type::<TraceReconError>())?;
    m.add("BudgetExceeded", m.py().get_type::<BudgetExceeded>())?;
    m.add_class::<PyChannel>()?;
    m.add_function(wrap_pyfunction!(edit_distance, m)?)?;
    m.add_function(wrap_pyfunction!(insertion_ball, m)?)?;
    m.add_function(wrap_pyfunction!(deletion_ball, m)?)?;
    m.add_function(wrap_pyfunction!(indel_ball, m)?)?;
    m.add_function(wrap_pyfunction!(insertion_ball_size, m)?)?;
    m.add_function(wrap_pyfunction!(py_n_plus, m)?)?;
    m.add_function(wrap_pyfunction!(py_n_plus_levenshtein, m)?)?;
    m.add_function(wrap_pyfunction!(py_n_plus_binary, m)?)?;
    m.add_function(wrap_pyfunction!(py_n_minus_uncoded, m)?)?;
    m.add_function(wrap_pyfunction!(py_n_minus_binary_vt, m)?)?;
    m.add_function(wrap_pyfunction!(py_required_traces, m)?)?;
    m.add_function(wrap_pyfunction!(py_oracle_n_plus, m)?)?;
    m.add_function(wrap_pyfunction!(py_vt_checksum, m)?)?;
    m.add_function(wrap_pyfunction!(py_vt_enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(py_vt_decode, m)?)?;
    m.add_function(wrap_pyfunction!(py_fp_set, m)?)?;
    m.add_function(wrap_pyfunction!(worst_pairs, m)?)?;
    m.add_function(wrap_pyfunction!(reconstruct, m)?)?;
    Ok(())
}
