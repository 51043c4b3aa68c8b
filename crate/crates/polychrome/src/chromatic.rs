//! The chromatic polynomial and the chromatic symmetric function of a graph,
//! each computed by four different subset expansions, plus the brute-force
//! coloring oracles that ground them.
//!
//! All four routes must produce identical output for any choice of labeling,
//! broken-circuit subset and integer weights:
//!
//! * `subset`: plain alternating sum over all edge subsets;
//! * `weighted`: each subset carries the product of the weights of the
//!   broken circuits it contains;
//! * `kfree`: only subsets containing no member of the chosen set survive;
//! * `nbc`: only subsets containing no broken circuit at all survive.

use num_bigint::BigInt;
use num_traits::One;

use crate::broken_circuits::{
    broken_circuits, is_kfree, kfree_weight_product, validate_kset, BrokenCircuitSet, Labeling,
    WeightAssignment,
};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph};
use crate::symfunc::{IntPolynomial, PowerSumVector, TruncatedPoly};

/// Cap on `q^|V|` for the brute-force coloring oracles.
pub const COLORING_ORACLE_MAX: u128 = 10_000_000;
/// Cap on `n^|V|` for the truncated chromatic-symmetric-function oracle.
pub const CSF_ORACLE_MAX: u128 = 1_000_000;
/// Cap on the variable count of the truncated oracle.
pub const CSF_ORACLE_MAX_VARS: usize = 4;

fn check_coloring_capacity(g: &Graph, q: u64, cap: u128) -> Result<()> {
    let total = (q as u128).checked_pow(g.vertex_count() as u32);
    match total {
        Some(t) if t <= cap => Ok(()),
        _ => Err(Error::Capacity(format!(
            "{q}^{} colorings exceed the oracle limit of {cap}",
            g.vertex_count()
        ))),
    }
}

/// Calls `f` once for every map from `n` vertices to colors `1..=q`,
/// in lexicographic order. With `n = 0` there is exactly one (empty) map.
fn for_each_coloring(n: usize, q: u64, mut f: impl FnMut(&[u32])) {
    if n == 0 {
        f(&[]);
        return;
    }
    if q == 0 {
        return;
    }
    let mut coloring = vec![1u32; n];
    loop {
        f(&coloring);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if u64::from(coloring[i]) < q {
                coloring[i] += 1;
                break;
            }
            coloring[i] = 1;
        }
    }
}

/// Exact number of proper colorings `V -> {1..q}`, counted one by one.
pub fn count_proper_colorings(g: &Graph, q: u64) -> Result<u64> {
    check_coloring_capacity(g, q, COLORING_ORACLE_MAX)?;
    let mut count = 0u64;
    for_each_coloring(g.vertex_count(), q, |coloring| {
        let proper = g.edges().iter().all(|&(u, v)| coloring[u] != coloring[v]);
        if proper {
            count += 1;
        }
    });
    Ok(count)
}

/// Number of colorings `V -> {1..q}` whose monochromatic edge set contains
/// `b`, i.e. colorings constant on every component of `(V, b)`. Counted by
/// brute force so it can serve as an oracle for the identity
/// `count = q^conn(V, b)`.
pub fn count_colorings_containing(g: &Graph, b: EdgeSet, q: u64) -> Result<u64> {
    check_coloring_capacity(g, q, COLORING_ORACLE_MAX)?;
    let b_edges: Vec<(usize, usize)> = b.indices().map(|i| g.edges()[i]).collect();
    let mut count = 0u64;
    for_each_coloring(g.vertex_count(), q, |coloring| {
        if b_edges.iter().all(|&(u, v)| coloring[u] == coloring[v]) {
            count += 1;
        }
    });
    Ok(count)
}

/// Shared driver for the polynomial expansions: sums
/// `(-1)^|F| * weight(F) * x^conn(V,F)` over the subsets the closure keeps.
fn subset_sum_poly(
    g: &Graph,
    mut term: impl FnMut(EdgeSet) -> Option<BigInt>,
) -> Result<IntPolynomial> {
    g.check_subset_capacity()?;
    let mut poly = IntPolynomial::zero();
    for f in EdgeSet::all_subsets(g.edge_count()) {
        let Some(weight) = term(f) else { continue };
        let signed = if f.len() % 2 == 0 { weight } else { -weight };
        poly.add_term(g.conn_under(f), signed);
    }
    Ok(poly)
}

/// Shared driver for the symmetric-function expansions: sums
/// `(-1)^|F| * weight(F) * p_{lambda(V,F)}` over the subsets the closure keeps.
fn subset_sum_csf(
    g: &Graph,
    mut term: impl FnMut(EdgeSet) -> Option<BigInt>,
) -> Result<PowerSumVector> {
    g.check_subset_capacity()?;
    let mut acc = PowerSumVector::zero();
    for f in EdgeSet::all_subsets(g.edge_count()) {
        let Some(weight) = term(f) else { continue };
        let signed = if f.len() % 2 == 0 { weight } else { -weight };
        acc.add_term(g.lambda_under(f), signed);
    }
    Ok(acc)
}

/// `chi_G` as the alternating sum over all edge subsets.
pub fn chromatic_polynomial_subset(g: &Graph) -> Result<IntPolynomial> {
    subset_sum_poly(g, |_| Some(BigInt::one()))
}

/// `chi_G` as the weighted sum over all edge subsets; equals the plain
/// subset expansion for every weight assignment on a genuine set of broken
/// circuits.
pub fn chromatic_polynomial_weighted(
    g: &Graph,
    labeling: &Labeling,
    kset: &BrokenCircuitSet,
    a: &WeightAssignment,
) -> Result<IntPolynomial> {
    validate_kset(g, labeling, kset)?;
    subset_sum_poly(g, |f| Some(kfree_weight_product(f, a)))
}

/// `chi_G` as the alternating sum over the `kset`-free subsets only.
pub fn chromatic_polynomial_kfree(
    g: &Graph,
    labeling: &Labeling,
    kset: &BrokenCircuitSet,
) -> Result<IntPolynomial> {
    validate_kset(g, labeling, kset)?;
    subset_sum_poly(g, |f| is_kfree(f, kset).then(BigInt::one))
}

/// `chi_G` as the alternating sum over subsets containing no broken circuit.
/// With an injective labeling the survivors are exactly forests, so the same
/// value is recomputed as `sum (-1)^|F| x^(|V|-|F|)` and both routes are
/// checked against each other.
pub fn chromatic_polynomial_nbc(g: &Graph, labeling: &Labeling) -> Result<IntPolynomial> {
    let all_bc = broken_circuits(g, labeling)?;
    let by_conn = subset_sum_poly(g, |f| is_kfree(f, &all_bc).then(BigInt::one))?;
    if labeling.is_injective() {
        let mut by_size = IntPolynomial::zero();
        for f in EdgeSet::all_subsets(g.edge_count()) {
            if is_kfree(f, &all_bc) {
                assert_eq!(
                    g.conn_under(f),
                    g.vertex_count() - f.len(),
                    "surviving subset is not a forest"
                );
                let c = if f.len() % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                by_size.add_term(g.vertex_count() - f.len(), c);
            }
        }
        assert_eq!(by_conn, by_size, "rank form disagrees with component form");
    }
    Ok(by_conn)
}

/// `X_G` in the power-sum basis, as the alternating sum over all subsets.
pub fn csf_subset(g: &Graph) -> Result<PowerSumVector> {
    subset_sum_csf(g, |_| Some(BigInt::one()))
}

/// `X_G` as the weighted sum over all edge subsets.
pub fn csf_weighted(
    g: &Graph,
    labeling: &Labeling,
    kset: &BrokenCircuitSet,
    a: &WeightAssignment,
) -> Result<PowerSumVector> {
    validate_kset(g, labeling, kset)?;
    subset_sum_csf(g, |f| Some(kfree_weight_product(f, a)))
}

/// `X_G` as the alternating sum over the `kset`-free subsets only.
pub fn csf_kfree(
    g: &Graph,
    labeling: &Labeling,
    kset: &BrokenCircuitSet,
) -> Result<PowerSumVector> {
    validate_kset(g, labeling, kset)?;
    subset_sum_csf(g, |f| is_kfree(f, kset).then(BigInt::one))
}

/// `X_G` as the alternating sum over subsets containing no broken circuit.
pub fn csf_nbc(g: &Graph, labeling: &Labeling) -> Result<PowerSumVector> {
    let all_bc = broken_circuits(g, labeling)?;
    subset_sum_csf(g, |f| is_kfree(f, &all_bc).then(BigInt::one))
}

/// The definitional chromatic symmetric function, truncated to `n`
/// variables: the sum over proper colorings `V -> {1..n}` of the monomial
/// recording how often each color is used.
pub fn csf_oracle_truncated(g: &Graph, n: usize) -> Result<TruncatedPoly> {
    if n == 0 || n > CSF_ORACLE_MAX_VARS {
        return Err(Error::Capacity(format!(
            "truncated oracle supports 1..={CSF_ORACLE_MAX_VARS} variables, got {n}"
        )));
    }
    check_coloring_capacity_csf(g, n)?;
    let mut acc = TruncatedPoly::zero(n);
    for_each_coloring(g.vertex_count(), n as u64, |coloring| {
        let proper = g.edges().iter().all(|&(u, v)| coloring[u] != coloring[v]);
        if proper {
            let mut exps = vec![0u32; n];
            for &c in coloring {
                exps[(c - 1) as usize] += 1;
            }
            acc.add_term(exps, BigInt::one());
        }
    });
    Ok(acc)
}

fn check_coloring_capacity_csf(g: &Graph, n: usize) -> Result<()> {
    let total = (n as u128).checked_pow(g.vertex_count() as u32);
    match total {
        Some(t) if t <= CSF_ORACLE_MAX => Ok(()),
        _ => Err(Error::Capacity(format!(
            "{n}^{} colorings exceed the oracle limit of {CSF_ORACLE_MAX}",
            g.vertex_count()
        ))),
    }
}
