//! Edge labelings, broken circuits, K-free tests and the alternating
//! cancellation sum over monochromatic edge sets.
//!
//! A broken circuit is a circuit minus its unique maximum-label edge; a
//! circuit whose maximum label is attained by more than one edge contributes
//! nothing. Distinct circuits may share a broken circuit, so the collection
//! is a set.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph};

/// A total labeling of the edges of a graph by integers, indexed by the
/// graph's sorted edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    labels: Vec<i64>,
}

impl Labeling {
    pub fn new(g: &Graph, labels: Vec<i64>) -> Result<Labeling> {
        if labels.len() != g.edge_count() {
            return Err(Error::Precondition(format!(
                "labeling covers {} edges but the graph has {}",
                labels.len(),
                g.edge_count()
            )));
        }
        Ok(Labeling { labels })
    }

    pub fn label(&self, edge_index: usize) -> i64 {
        self.labels[edge_index]
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = self.labels.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }
}

/// A set of broken circuits of one `(graph, labeling)` pair, stored as
/// sorted edge bit sets. Members are always nonempty: a graph circuit has
/// at least three edges, so removing one leaves at least two.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BrokenCircuitSet {
    members: Vec<EdgeSet>,
}

impl BrokenCircuitSet {
    pub fn empty() -> BrokenCircuitSet {
        BrokenCircuitSet::default()
    }

    /// Collects candidate members, deduplicating and sorting. Membership in
    /// the genuine broken-circuit set is validated by the operations that
    /// consume the set together with a labeling.
    pub fn from_edge_sets(sets: Vec<EdgeSet>) -> BrokenCircuitSet {
        let mut members = sets;
        members.sort();
        members.dedup();
        BrokenCircuitSet { members }
    }

    pub fn members(&self) -> &[EdgeSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, k: EdgeSet) -> bool {
        self.members.binary_search(&k).is_ok()
    }
}

/// Integer weights `a_K`, one for each member of a broken-circuit set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightAssignment {
    weights: Vec<(EdgeSet, i64)>,
}

impl WeightAssignment {
    /// Pairs each member of `kset` (in sorted order) with a weight. The
    /// domain must be exactly the member list.
    pub fn new(kset: &BrokenCircuitSet, weights: Vec<i64>) -> Result<WeightAssignment> {
        if weights.len() != kset.len() {
            return Err(Error::Precondition(format!(
                "{} weights given for {} broken circuits",
                weights.len(),
                kset.len()
            )));
        }
        Ok(WeightAssignment {
            weights: kset.members().iter().copied().zip(weights).collect(),
        })
    }

    pub fn constant(kset: &BrokenCircuitSet, value: i64) -> WeightAssignment {
        WeightAssignment {
            weights: kset.members().iter().map(|&k| (k, value)).collect(),
        }
    }

    pub fn weight(&self, k: EdgeSet) -> Option<i64> {
        self.weights
            .binary_search_by_key(&k, |&(m, _)| m)
            .ok()
            .map(|i| self.weights[i].1)
    }

    pub fn pairs(&self) -> &[(EdgeSet, i64)] {
        &self.weights
    }
}

/// All broken circuits of `g` under the labeling: for every circuit whose
/// maximum label is attained by exactly one edge, the circuit minus that
/// edge. Ties contribute nothing.
pub fn broken_circuits(g: &Graph, labeling: &Labeling) -> Result<BrokenCircuitSet> {
    let circuits = g.enumerate_circuits()?;
    let mut members = Vec::new();
    for c in circuits {
        if let Some(e) = unique_max_edge(c, labeling) {
            members.push(c.remove(e));
        }
    }
    Ok(BrokenCircuitSet::from_edge_sets(members))
}

/// Index of the unique maximum-label edge of `c`, or `None` on a tie.
fn unique_max_edge(c: EdgeSet, labeling: &Labeling) -> Option<usize> {
    let mut best: Option<(usize, i64)> = None;
    let mut tied = false;
    for i in c.indices() {
        let l = labeling.label(i);
        match best {
            None => best = Some((i, l)),
            Some((_, bl)) if l > bl => {
                best = Some((i, l));
                tied = false;
            }
            Some((_, bl)) if l == bl => tied = true,
            _ => {}
        }
    }
    match best {
        Some((i, _)) if !tied => Some(i),
        _ => None,
    }
}

/// Checks that every member of `kset` is a broken circuit of `(g, labeling)`.
pub fn validate_kset(g: &Graph, labeling: &Labeling, kset: &BrokenCircuitSet) -> Result<()> {
    let all = broken_circuits(g, labeling)?;
    for &k in kset.members() {
        if !all.contains(k) {
            return Err(Error::Precondition(format!(
                "{} is not a broken circuit of the graph under this labeling",
                g.format_edge_set(k)
            )));
        }
    }
    Ok(())
}

/// True iff no member of `kset` is a subset of `f`. An empty `kset` makes
/// every subset free.
pub fn is_kfree(f: EdgeSet, kset: &BrokenCircuitSet) -> bool {
    kset.members().iter().all(|k| !k.is_subset_of(f))
}

/// The product of `a_K` over all members `K` of `kset` contained in `f`;
/// the empty product is 1.
pub fn kfree_weight_product(f: EdgeSet, a: &WeightAssignment) -> BigInt {
    let mut prod = BigInt::one();
    for &(k, w) in a.pairs() {
        if k.is_subset_of(f) {
            if w == 0 {
                return BigInt::zero();
            }
            prod *= w;
        }
    }
    prod
}

/// The set of edges whose endpoints receive equal colors under `coloring`
/// (one color per vertex, indexed like `g.vertices()`).
pub fn eqs_edge_set(g: &Graph, coloring: &[u32]) -> EdgeSet {
    assert_eq!(coloring.len(), g.vertex_count(), "coloring must be total");
    let mut eqs = EdgeSet::EMPTY;
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if coloring[u] == coloring[v] {
            eqs.insert(i);
        }
    }
    eqs
}

/// The alternating sum over all subsets `B` of the monochromatic edge set:
/// `sum (-1)^|B| prod_{K in kset, K subseteq B} a_K`. For any set of broken
/// circuits and any weights this equals 1 if the coloring is proper and 0
/// otherwise.
pub fn cancellation_sum(
    g: &Graph,
    kset: &BrokenCircuitSet,
    a: &WeightAssignment,
    coloring: &[u32],
) -> Result<BigInt> {
    let domain_matches = a.pairs().len() == kset.len()
        && a.pairs()
            .iter()
            .zip(kset.members())
            .all(|(&(k, _), &m)| k == m);
    if !domain_matches {
        return Err(Error::Precondition(
            "weight assignment domain must equal the broken-circuit set".into(),
        ));
    }
    let eqs = eqs_edge_set(g, coloring);
    if eqs.len() > crate::graph::SUBSET_ENUM_MAX_EDGES {
        return Err(Error::Capacity(format!(
            "{} monochromatic edges; subset enumeration is limited to {}",
            eqs.len(),
            crate::graph::SUBSET_ENUM_MAX_EDGES
        )));
    }
    let positions: Vec<usize> = eqs.indices().collect();
    let mut total = BigInt::zero();
    for sub in EdgeSet::all_subsets(positions.len()) {
        let mut b = EdgeSet::EMPTY;
        for (bit, &pos) in positions.iter().enumerate() {
            if sub.contains(bit) {
                b.insert(pos);
            }
        }
        let term = kfree_weight_product(b, a);
        if b.len().is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}
