//! Python bindings: the main types travel as plain lists and tuples
//! (partitions and weights as `list[int]`, Ext terms as
//! `(j, lambda, degree, mult)` tuples), dimensions as exact Python ints.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use pfaffian_ext::bott::{bott_evaluate, BottInput, BottResult};
use pfaffian_ext::cohomology::{kodaira_verify, sheaf_cohomology_table};
use pfaffian_ext::ext_maps::{ext_map_analysis, ext_of_quotient};
use pfaffian_ext::optimization::{r_bruteforce as r_brute, OptInstance};
use pfaffian_ext::regularity as reg;
use pfaffian_ext::subquotient::{
    ext_closed_form, reg_subquotient as reg_subquot, subquotient_hilbert_dim, SubquotLabel,
};
use pfaffian_ext::verify::{run_selftest, Scale};
use pfaffian_ext::{Context, DegreeWindow, DominantWeight, ExtDecomposition, IdealSpec, Partition};

fn err(e: pfaffian_ext::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn partition(parts: Vec<i64>) -> PyResult<Partition> {
    Partition::new(parts).map_err(err)
}

fn ideal(n: usize, spec: &str) -> PyResult<IdealSpec> {
    let ctx = Context::new(n).map_err(err)?;
    IdealSpec::parse(spec, &ctx).map_err(err)
}

/// `(j, lambda, degree, mult)`.
type TermTuple = (i64, Vec<i64>, i64, u64);

fn term_tuples(dec: &ExtDecomposition) -> Vec<TermTuple> {
    dec.records()
        .into_iter()
        .map(|r| (r.j, r.lambda, r.degree, r.mult))
        .collect()
}

/// Conjugate (transposed) partition.
#[pyfunction]
fn conjugate(parts: Vec<i64>) -> PyResult<Vec<i64>> {
    Ok(partition(parts)?.conjugate().parts().to_vec())
}

/// Doubled partition `(z1, z1, z2, z2, ...)`.
#[pyfunction]
fn double(parts: Vec<i64>) -> PyResult<Vec<i64>> {
    Ok(partition(parts)?.double().parts().to_vec())
}

/// The first `c` columns of the Young diagram.
#[pyfunction]
fn truncate_columns(parts: Vec<i64>, c: i64) -> PyResult<Vec<i64>> {
    Ok(partition(parts)?.truncate_columns(c).parts().to_vec())
}

/// Whether the diagram of `a` fits inside the diagram of `b`.
#[pyfunction]
fn fits_in(a: Vec<i64>, b: Vec<i64>) -> PyResult<bool> {
    Ok(partition(a)?.fits_in(&partition(b)?))
}

/// Exact dimension of the irreducible GL representation of the given
/// dominant weight.
#[pyfunction]
fn weyl_dimension(entries: Vec<i64>) -> PyResult<BigInt> {
    let w = DominantWeight::new(entries).map_err(err)?;
    Ok(pfaffian_ext::partition::weyl_dimension(&w))
}

/// All partitions within the given bounds.
#[pyfunction]
#[pyo3(signature = (max_parts, part_bound, size_bound=None))]
fn enumerate_partitions(
    max_parts: usize,
    part_bound: i64,
    size_bound: Option<i64>,
) -> Vec<Vec<i64>> {
    pfaffian_ext::partition::enumerate_partitions(max_parts, part_bound, size_bound)
        .into_iter()
        .map(|p| p.parts().to_vec())
        .collect()
}

/// Minimal generators of an ideal spec, as sorted lists of parts.
#[pyfunction]
fn generators(n: usize, spec: &str) -> PyResult<Vec<Vec<i64>>> {
    Ok(ideal(n, spec)?
        .gens()
        .iter()
        .map(|g| g.parts().to_vec())
        .collect())
}

/// Bott evaluation on a two-block Grassmannian weight: `None` when all
/// cohomology vanishes, otherwise `(q, lambda)`.
#[pyfunction]
fn bott(alpha: Vec<i64>, beta: Vec<i64>, n: usize) -> PyResult<Option<(i64, Vec<i64>)>> {
    let r = alpha.len();
    let alpha = DominantWeight::new(alpha).map_err(err)?;
    let beta = DominantWeight::new(beta).map_err(err)?;
    let input = BottInput::new(alpha, beta, n, r).map_err(err)?;
    Ok(match bott_evaluate(&input) {
        BottResult::Zero => None,
        BottResult::Cohomology { q, lambda } => Some((q, lambda.entries().to_vec())),
    })
}

/// Filtration labels `(z, l)` of the quotient by an ideal.
#[pyfunction]
fn z_set(n: usize, spec: &str) -> PyResult<Vec<(Vec<i64>, usize)>> {
    Ok(ideal(n, spec)?
        .z_set()
        .map_err(err)?
        .labels()
        .map(|label| (label.z().parts().to_vec(), label.l()))
        .collect())
}

/// Ext decomposition of the quotient in the inclusive degree window, as
/// `(j, lambda, degree, mult)` tuples.
#[pyfunction]
fn ext_table(n: usize, spec: &str, deg_lo: i64, deg_hi: i64) -> PyResult<Vec<TermTuple>> {
    let dec = ext_of_quotient(&ideal(n, spec)?, &DegreeWindow::new(deg_lo, deg_hi)).map_err(err)?;
    Ok(term_tuples(&dec))
}

/// Ext decomposition of a single subquotient `(z, l)`.
#[pyfunction]
fn subquotient_ext_table(
    n: usize,
    z: Vec<i64>,
    l: usize,
    deg_lo: i64,
    deg_hi: i64,
) -> PyResult<Vec<TermTuple>> {
    let ctx = Context::new(n).map_err(err)?;
    let label = SubquotLabel::new(partition(z)?, l, &ctx).map_err(err)?;
    Ok(term_tuples(&ext_closed_form(
        &label,
        &ctx,
        &DegreeWindow::new(deg_lo, deg_hi),
    )))
}

/// Kernel, image and cokernel of the induced Ext maps for nested ideals
/// (`spec2` contained in `spec`), keyed by role.
#[pyfunction]
fn ext_maps<'py>(
    py: Python<'py>,
    n: usize,
    spec: &str,
    spec2: &str,
    deg_lo: i64,
    deg_hi: i64,
) -> PyResult<Bound<'py, PyDict>> {
    let analysis = ext_map_analysis(
        &ideal(n, spec)?,
        &ideal(n, spec2)?,
        &DegreeWindow::new(deg_lo, deg_hi),
    )
    .map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("kernel", term_tuples(&analysis.kernel))?;
    out.set_item("image", term_tuples(&analysis.image))?;
    out.set_item("cokernel", term_tuples(&analysis.cokernel))?;
    Ok(out)
}

/// Castelnuovo–Mumford regularity of the quotient ring.
#[pyfunction]
fn reg_quotient(n: usize, spec: &str) -> PyResult<i64> {
    reg::reg_quotient(&ideal(n, spec)?).map_err(err)
}

/// Castelnuovo–Mumford regularity of the ideal.
#[pyfunction]
fn reg_ideal(n: usize, spec: &str) -> PyResult<i64> {
    reg::reg_ideal(&ideal(n, spec)?).map_err(err)
}

/// Regularity of one filtration subquotient.
#[pyfunction]
fn reg_subquotient(n: usize, z: Vec<i64>, l: usize) -> PyResult<i64> {
    let ctx = Context::new(n).map_err(err)?;
    let label = SubquotLabel::new(partition(z)?, l, &ctx).map_err(err)?;
    Ok(reg_subquot(&label, &ctx))
}

/// Whether the power of the `2k`-Pfaffian ideal has a linear resolution.
#[pyfunction]
fn has_linear_resolution_power(n: usize, two_k: usize, d: i64) -> PyResult<bool> {
    let ctx = Context::new(n).map_err(err)?;
    reg::has_linear_resolution_power(two_k / 2, d, &ctx).map_err(err)
}

/// Whether the basic ideal of a partition has a linear resolution.
#[pyfunction]
fn has_linear_resolution_basic(n: usize, x: Vec<i64>) -> PyResult<bool> {
    let ctx = Context::new(n).map_err(err)?;
    reg::has_linear_resolution_basic(&partition(x)?, &ctx).map_err(err)
}

/// Exact dimension of the degree-`degree` piece of the ideal.
#[pyfunction]
fn hilbert_dim(n: usize, spec: &str, degree: i64) -> PyResult<BigInt> {
    Ok(ideal(n, spec)?.hilbert_dim(degree))
}

/// Exact dimension of the degree-`degree` piece of the quotient ring.
#[pyfunction]
fn quotient_hilbert_dim(n: usize, spec: &str, degree: i64) -> PyResult<BigInt> {
    Ok(ideal(n, spec)?.quotient_hilbert_dim(degree))
}

/// Exact dimension of the degree-`degree` piece of a subquotient.
#[pyfunction]
fn subquotient_dim(n: usize, z: Vec<i64>, l: usize, degree: i64) -> PyResult<BigInt> {
    let ctx = Context::new(n).map_err(err)?;
    let label = SubquotLabel::new(partition(z)?, l, &ctx).map_err(err)?;
    Ok(subquotient_hilbert_dim(&label, degree, &ctx))
}

/// Sheaf-cohomology table of the thickening: `(q, twist, dim)` tuples.
#[pyfunction]
fn sheaf_cohomology(
    n: usize,
    spec: &str,
    q_lo: i64,
    q_hi: i64,
    twist_lo: i64,
    twist_hi: i64,
) -> PyResult<Vec<(i64, i64, BigInt)>> {
    let entries = sheaf_cohomology_table(&ideal(n, spec)?, (q_lo, q_hi), (twist_lo, twist_hi))
        .map_err(err)?;
    Ok(entries.into_iter().map(|e| (e.q, e.twist, e.dim)).collect())
}

/// Exact Kodaira-type vanishing verification.
#[pyfunction]
fn kodaira_passes(n: usize, spec: &str) -> PyResult<bool> {
    Ok(kodaira_verify(&ideal(n, spec)?).map_err(err)?.pass)
}

/// Brute-force optimization value; `None` on an empty feasible set.
#[pyfunction]
fn r_bruteforce(q: i64, k: i64, n: i64, d: i64) -> PyResult<Option<i64>> {
    let inst = OptInstance::new(q, k, n, d).map_err(err)?;
    Ok(r_brute(&inst).finite())
}

/// Runs the quick cross-validation suite; true when every suite passes.
#[pyfunction]
fn selftest_quick() -> bool {
    run_selftest(Scale::Quick).passed
}

#[pymodule]
fn pfaffian_ext_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_function(wrap_pyfunction!(conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(double, m)?)?;
    m.add_function(wrap_pyfunction!(truncate_columns, m)?)?;
    m.add_function(wrap_pyfunction!(fits_in, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_partitions, m)?)?;
    m.add_function(wrap_pyfunction!(generators, m)?)?;
    m.add_function(wrap_pyfunction!(bott, m)?)?;
    m.add_function(wrap_pyfunction!(z_set, m)?)?;
    m.add_function(wrap_pyfunction!(ext_table, m)?)?;
    m.add_function(wrap_pyfunction!(subquotient_ext_table, m)?)?;
    m.add_function(wrap_pyfunction!(ext_maps, m)?)?;
    m.add_function(wrap_pyfunction!(reg_quotient, m)?)?;
    m.add_function(wrap_pyfunction!(reg_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(reg_subquotient, m)?)?;
    m.add_function(wrap_pyfunction!(has_linear_resolution_power, m)?)?;
    m.add_function(wrap_pyfunction!(has_linear_resolution_basic, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_dim, m)?)?;
    m.add_function(wrap_pyfunction!(quotient_hilbert_dim, m)?)?;
    m.add_function(wrap_pyfunction!(subquotient_dim, m)?)?;
    m.add_function(wrap_pyfunction!(sheaf_cohomology, m)?)?;
    m.add_function(wrap_pyfunction!(kodaira_passes, m)?)?;
    m.add_function(wrap_pyfunction!(r_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(selftest_quick, m)?)?;
    Ok(())
}
