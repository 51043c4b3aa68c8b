//! Matroids given by an explicit independence family: rank, circuits, flats,
//! closure, the lattice of flats with its Moebius function, and the
//! characteristic polynomial computed both from the Moebius definition and
//! from subset-sum expansions.
//!
//! Ground sets are capped at 12 elements so that every check (the three
//! axioms, ranks, circuits, flats) can be done by exhaustive enumeration
//! over all `2^n` subsets.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::symfunc::IntPolynomial;

/// Hard cap on ground-set size.
pub const MAX_GROUND: usize = 12;

/// All subsets of `mask`, ascending as integers (carry-rippler iteration).
pub fn subsets_of(mask: u64) -> impl Iterator<Item = u64> {
    let mut sub = 0u64;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let current = sub;
        sub = sub.wrapping_sub(mask) & mask;
        done = sub == 0;
        Some(current)
    })
}

/// A matroid on at most [`MAX_GROUND`] named elements, stored as a full
/// independence lookup table plus a precomputed rank table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matroid {
    ground: Vec<String>,
    indep: Vec<bool>,
    rank_tab: Vec<u8>,
}

impl Matroid {
    /// Validates the three matroid axioms by brute force and builds the
    /// matroid. Element order is the order of `ground`; bit `i` of a subset
    /// mask refers to `ground[i]`.
    pub fn new(ground: Vec<String>, independent_masks: &[u64]) -> Result<Matroid> {
        let n = ground.len();
        if n > MAX_GROUND {
            return Err(Error::Capacity(format!(
                "ground set has {n} elements; at most {MAX_GROUND} are supported"
            )));
        }
        for (i, a) in ground.iter().enumerate() {
            if a.is_empty() || a.chars().any(char::is_whitespace) {
                return Err(Error::Parse(format!("invalid element name {a:?}")));
            }
            if ground[..i].contains(a) {
                return Err(Error::Parse(format!("duplicate ground element {a:?}")));
            }
        }
        let full = 1usize << n;
        let mut indep = vec![false; full];
        for &m in independent_masks {
            if m as usize >= full {
                return Err(Error::Parse(
                    "independent set mentions elements outside the ground set".into(),
                ));
            }
            indep[m as usize] = true;
        }

        let format = |mask: u64| format_subset(&ground, mask);

        // axiom 1: the empty set is independent
        if !indep[0] {
            return Err(Error::MatroidAxiom {
                axiom: 1,
                witness: "the empty set is not in the family".into(),
            });
        }
        // axiom 2: removing one element preserves independence (single-step
        // removals suffice by induction)
        for y in 0..full as u64 {
            if !indep[y as usize] {
                continue;
            }
            for e in bits(y) {
                let z = y & !(1 << e);
                if !indep[z as usize] {
                    return Err(Error::MatroidAxiom {
                        axiom: 2,
                        witness: format!("Z={} is a subset of Y={}", format(z), format(y)),
                    });
                }
            }
        }
        // axiom 3: exchange, checked for |Z| = |Y| + 1 (enough once the
        // family is downward closed)
        let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
        for m in 0..full as u64 {
            if indep[m as usize] {
                by_size[m.count_ones() as usize].push(m);
            }
        }
        for size in 0..n {
            for &y in &by_size[size] {
                for &z in &by_size[size + 1] {
                    let can_extend = bits(z & !y).any(|x| indep[(y | (1 << x)) as usize]);
                    if !can_extend {
                        return Err(Error::MatroidAxiom {
                            axiom: 3,
                            witness: format!("Y={}, Z={}", format(y), format(z)),
                        });
                    }
                }
            }
        }

        // rank by dynamic programming over the subset lattice
        let mut rank_tab = vec![0u8; full];
        for m in 1..full as u64 {
            rank_tab[m as usize] = if indep[m as usize] {
                m.count_ones() as u8
            } else {
                bits(m)
                    .map(|e| rank_tab[(m & !(1 << e)) as usize])
                    .max()
                    .unwrap_or(0)
            };
        }

        Ok(Matroid {
            ground,
            indep,
            rank_tab,
        })
    }

    /// Builds a matroid from named independent sets (the empty set is
    /// implied).
    pub fn from_named_sets(ground: Vec<String>, sets: &[Vec<String>]) -> Result<Matroid> {
        let index_of = |name: &str| -> Result<usize> {
            ground
                .iter()
                .position(|g| g == name)
                .ok_or_else(|| Error::Parse(format!("unknown ground element {name:?}")))
        };
        let mut masks = vec![0u64];
        for set in sets {
            let mut m = 0u64;
            for name in set {
                m |= 1 << index_of(name)?;
            }
            masks.push(m);
        }
        Matroid::new(ground, &masks)
    }

    pub fn size(&self) -> usize {
        self.ground.len()
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn element_index(&self, name: &str) -> Option<usize> {
        self.ground.iter().position(|g| g == name)
    }

    pub fn full_set(&self) -> u64 {
        (1u64 << self.ground.len()) - 1
    }

    pub fn format_subset(&self, mask: u64) -> String {
        format_subset(&self.ground, mask)
    }

    pub fn is_independent(&self, s: u64) -> bool {
        self.indep[s as usize]
    }

    /// Largest size of an independent subset of `s`.
    pub fn rank(&self, s: u64) -> usize {
        self.rank_tab[s as usize] as usize
    }

    pub fn full_rank(&self) -> usize {
        self.rank(self.full_set())
    }

    /// Elements whose singleton is dependent.
    pub fn loops(&self) -> u64 {
        let mut l = 0u64;
        for e in 0..self.ground.len() {
            if !self.indep[1 << e] {
                l |= 1 << e;
            }
        }
        l
    }

    /// The minimal dependent subsets, ascending as bit patterns.
    pub fn circuits(&self) -> Vec<u64> {
        let full = 1u64 << self.ground.len();
        let mut out = Vec::new();
        for m in 0..full {
            if !self.indep[m as usize] && bits(m).all(|e| self.indep[(m & !(1 << e)) as usize]) {
                out.push(m);
            }
        }
        out
    }

    /// Flat test through circuit completion: `t` is a flat exactly when no
    /// circuit has all but one of its elements inside `t`.
    pub fn is_flat(&self, t: u64) -> bool {
        self.is_flat_with(&self.circuits(), t)
    }

    fn is_flat_with(&self, circuits: &[u64], t: u64) -> bool {
        circuits.iter().all(|&c| (c & !t).count_ones() != 1)
    }

    /// Flat test straight from the definition: no proper one-element
    /// extension keeps the rank. Implemented independently of [`is_flat`]
    /// so the two characterizations can be compared.
    pub fn is_flat_by_maximality(&self, t: u64) -> bool {
        let r = self.rank(t);
        bits(self.full_set() & !t).all(|e| self.rank(t | (1 << e)) > r)
    }

    /// All flats, ordered by size and then by bit pattern, as a lattice.
    pub fn flats(&self) -> FlatLattice {
        let circuits = self.circuits();
        let full = 1u64 << self.ground.len();
        let mut flats: Vec<u64> = (0..full)
            .filter(|&t| self.is_flat_with(&circuits, t))
            .collect();
        flats.sort_by_key(|&f| (f.count_ones(), f));
        FlatLattice { flats }
    }

    /// The smallest flat containing `t`: the fixpoint of repeatedly
    /// completing circuits that have exactly one element missing from the
    /// current set.
    pub fn closure(&self, t: u64) -> u64 {
        let circuits = self.circuits();
        let mut s = t;
        loop {
            let mut grew = false;
            for &c in &circuits {
                let outside = c & !s;
                if outside.count_ones() == 1 {
                    s |= outside;
                    grew = true;
                }
            }
            if !grew {
                return s;
            }
        }
    }

    /// Broken circuits under an integer labeling of the ground elements:
    /// each circuit with a unique maximum-label element, minus that element.
    /// A one-element circuit (a loop) yields the empty set.
    pub fn broken_circuits(&self, labels: &[i64]) -> Result<Vec<u64>> {
        self.check_labels(labels)?;
        let mut out = Vec::new();
        for c in self.circuits() {
            let mut best: Option<(usize, i64)> = None;
            let mut tied = false;
            for e in bits(c) {
                let l = labels[e];
                match best {
                    None => best = Some((e, l)),
                    Some((_, bl)) if l > bl => {
                        best = Some((e, l));
                        tied = false;
                    }
                    Some((_, bl)) if l == bl => tied = true,
                    _ => {}
                }
            }
            if let Some((e, _)) = best {
                if !tied {
                    out.push(c & !(1 << e));
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    fn check_labels(&self, labels: &[i64]) -> Result<()> {
        if labels.len() != self.ground.len() {
            return Err(Error::Precondition(format!(
                "labeling covers {} elements but the ground set has {}",
                labels.len(),
                self.ground.len()
            )));
        }
        Ok(())
    }

    fn check_kset(&self, labels: &[i64], kset: &[u64]) -> Result<()> {
        let genuine = self.broken_circuits(labels)?;
        for &k in kset {
            if genuine.binary_search(&k).is_err() {
                return Err(Error::Precondition(format!(
                    "{} is not a broken circuit of the matroid under this labeling",
                    self.format_subset(k)
                )));
            }
        }
        Ok(())
    }

    /// The characteristic polynomial from its definition: Moebius values
    /// from the bottom of the lattice of flats, weighted by corank. The
    /// second component zeroes the polynomial out when the matroid has
    /// loops.
    pub fn characteristic_polynomial(&self) -> (IntPolynomial, IntPolynomial) {
        let lattice = self.flats();
        let table = lattice.moebius_table();
        let m = self.full_rank();
        let mut chi = IntPolynomial::zero();
        for j in 0..lattice.len() {
            let mu = table.mu(0, j).expect("bottom is below every flat");
            chi.add_term(m - self.rank(lattice.flats()[j]), BigInt::from(mu));
        }
        let tilde = if lattice.bottom() == 0 {
            chi.clone()
        } else {
            IntPolynomial::zero()
        };
        (chi, tilde)
    }

    fn subset_sum(&self, mut term: impl FnMut(u64) -> Option<BigInt>) -> IntPolynomial {
        let m = self.full_rank();
        let mut poly = IntPolynomial::zero();
        for f in 0..(1u64 << self.ground.len()) {
            let Some(weight) = term(f) else { continue };
            let signed = if f.count_ones() % 2 == 0 {
                weight
            } else {
                -weight
            };
            poly.add_term(m - self.rank(f), signed);
        }
        poly
    }

    /// `sum (-1)^|F| x^(m - rank F)` over all subsets of the ground set.
    pub fn charpol_subset(&self) -> IntPolynomial {
        self.subset_sum(|_| Some(BigInt::one()))
    }

    /// The weighted subset sum over a chosen set of broken circuits;
    /// equals the loop-adjusted characteristic polynomial for any weights.
    pub fn charpol_weighted(
        &self,
        labels: &[i64],
        kset: &[u64],
        weights: &[i64],
    ) -> Result<IntPolynomial> {
        self.check_kset(labels, kset)?;
        if weights.len() != kset.len() {
            return Err(Error::Precondition(format!(
                "{} weights given for {} broken circuits",
                weights.len(),
                kset.len()
            )));
        }
        Ok(self.subset_sum(|f| {
            let mut prod = BigInt::one();
            for (&k, &w) in kset.iter().zip(weights) {
                if k & !f == 0 {
                    prod *= w;
                }
            }
            Some(prod)
        }))
    }

    /// The subset sum restricted to subsets containing no member of `kset`.
    pub fn charpol_kfree(&self, labels: &[i64], kset: &[u64]) -> Result<IntPolynomial> {
        self.check_kset(labels, kset)?;
        Ok(self.subset_sum(|f| kset.iter().all(|&k| k & !f != 0).then(BigInt::one)))
    }

    /// The subset sum restricted to subsets containing no broken circuit
    /// at all.
    pub fn charpol_nbc(&self, labels: &[i64]) -> Result<IntPolynomial> {
        let kset = self.broken_circuits(labels)?;
        Ok(self.subset_sum(|f| kset.iter().all(|&k| k & !f != 0).then(BigInt::one)))
    }

    /// The broken-circuit-free sum in rank form, `x^(m - |F|)`; requires an
    /// injective labeling, which forces every surviving subset to be
    /// independent.
    pub fn charpol_whitney(&self, labels: &[i64]) -> Result<IntPolynomial> {
        self.check_labels(labels)?;
        let mut sorted = labels.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Precondition(
                "rank-form expansion requires an injective labeling".into(),
            ));
        }
        let kset = self.broken_circuits(labels)?;
        let m = self.full_rank();
        let mut poly = IntPolynomial::zero();
        for f in 0..(1u64 << self.ground.len()) {
            if kset.iter().all(|&k| k & !f != 0) {
                let size = f.count_ones() as usize;
                let c = if size.is_multiple_of(2) {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                poly.add_term(m - size, c);
            }
        }
        Ok(poly)
    }
}

impl fmt::Display for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ground: {}", self.ground.join(" "))?;
        for m in 0..(1u64 << self.ground.len()) {
            if self.indep[m as usize] && m != 0 {
                let names: Vec<&str> = bits(m).map(|e| self.ground[e].as_str()).collect();
                write!(f, "\nindependent: {}", names.join(" "))?;
            }
        }
        Ok(())
    }
}

/// The flats of a matroid ordered by inclusion. Closed under intersection;
/// the first entry is the closure of the empty set and the last is the
/// whole ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatLattice {
    flats: Vec<u64>,
}

impl FlatLattice {
    pub fn flats(&self) -> &[u64] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// The global minimum (every flat contains it).
    pub fn bottom(&self) -> u64 {
        self.flats[0]
    }

    /// The global maximum: the whole ground set.
    pub fn top(&self) -> u64 {
        *self
            .flats
            .last()
            .expect("a lattice of flats is never empty")
    }

    pub fn index_of(&self, flat: u64) -> Option<usize> {
        self.flats.iter().position(|&f| f == flat)
    }

    /// Meet = intersection.
    pub fn meet(&self, a: u64, b: u64) -> u64 {
        a & b
    }

    /// Join = smallest flat containing the union; found by scanning in
    /// size order.
    pub fn join(&self, a: u64, b: u64) -> u64 {
        let u = a | b;
        *self
            .flats
            .iter()
            .find(|&&f| u & !f == 0)
            .expect("the top flat contains every union")
    }

    /// Moebius values for every ordered pair `F subseteq G` of flats,
    /// computed by the defining recursion down the lattice.
    pub fn moebius_table(&self) -> MoebiusTable {
        let n = self.flats.len();
        let mut values: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        // flats are sorted by size, so every proper subflat of flats[j]
        // appears before index j
        for j in 0..n {
            for i in 0..=j {
                let (fi, fj) = (self.flats[i], self.flats[j]);
                if fi & !fj != 0 {
                    continue;
                }
                let mu = if i == j {
                    1
                } else {
                    let mut acc = 0i64;
                    for h in i..j {
                        let fh = self.flats[h];
                        if fi & !fh == 0 && fh & !fj == 0 {
                            acc += values[&(i, h)];
                        }
                    }
                    -acc
                };
                values.insert((i, j), mu);
            }
        }
        MoebiusTable { values }
    }
}

/// Moebius function values on the flat lattice, keyed by flat indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoebiusTable {
    values: BTreeMap<(usize, usize), i64>,
}

impl MoebiusTable {
    /// `mu(F_i, F_j)`; `None` when the flats are not nested.
    pub fn mu(&self, i: usize, j: usize) -> Option<i64> {
        self.values.get(&(i, j)).copied()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.values.iter().map(|(&(i, j), &v)| (i, j, v))
    }
}

/// The graphical matroid of a graph: ground set = edges, independent sets =
/// circuit-free edge subsets. Ground elements keep the graph's edge order
/// and are named `u-v`.
pub fn graphical_matroid(g: &Graph) -> Result<Matroid> {
    if g.edge_count() > MAX_GROUND {
        return Err(Error::Capacity(format!(
            "graph has {} edges; graphical matroids support at most {MAX_GROUND}",
            g.edge_count()
        )));
    }
    let ground: Vec<String> = g
        .edges()
        .iter()
        .map(|&(u, v)| format!("{}-{}", g.vertices()[u], g.vertices()[v]))
        .collect();
    let masks: Vec<u64> = (0..(1u64 << g.edge_count()))
        .filter(|&m| g.is_circuit_free(crate::graph::EdgeSet(m)))
        .collect();
    Matroid::new(ground, &masks)
}

/// The uniform matroid `U_{k,n}`: all subsets of size at most `k` of an
/// `n`-element ground set are independent.
pub fn uniform_matroid(k: usize, n: usize) -> Result<Matroid> {
    if n > MAX_GROUND {
        return Err(Error::Capacity(format!(
            "ground set has {n} elements; at most {MAX_GROUND} are supported"
        )));
    }
    if k > n {
        return Err(Error::Precondition(format!(
            "uniform matroid needs k <= n, got k={k}, n={n}"
        )));
    }
    let ground: Vec<String> = (0..n)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect();
    let masks: Vec<u64> = (0..(1u64 << n))
        .filter(|m| m.count_ones() as usize <= k)
        .collect();
    Matroid::new(ground, &masks)
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut bits = mask;
    std::iter::from_fn(move || {
        if bits == 0 {
            None
        } else {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        }
    })
}

fn format_subset(ground: &[String], mask: u64) -> String {
    let names: Vec<&str> = bits(mask).map(|e| ground[e].as_str()).collect();
    format!("{{{}}}", names.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u12() -> Matroid {
        uniform_matroid(1, 2).unwrap()
    }

    #[test]
    fn axiom_validation() {
        let ground = vec!["a".to_string(), "b".to_string()];
        assert!(Matroid::new(ground.clone(), &[0b00, 0b01, 0b10]).is_ok());

        // downward closure fails: {a,b} without {a}
        let err = Matroid::new(ground.clone(), &[0b00, 0b11]).unwrap_err();
        assert!(matches!(err, Error::MatroidAxiom { axiom: 2, .. }));

        // empty set missing
        let err = Matroid::new(ground, &[0b01]).unwrap_err();
        assert!(matches!(err, Error::MatroidAxiom { axiom: 1, .. }));

        // exchange fails: Y={c}, Z={a,b}
        let ground3: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let err = Matroid::new(ground3, &[0b000, 0b001, 0b010, 0b100, 0b011]).unwrap_err();
        match err {
            Error::MatroidAxiom { axiom: 3, witness } => {
                assert_eq!(witness, "Y={c}, Z={a,b}");
            }
            other => panic!("expected axiom-3 violation, got {other:?}"),
        }
    }

    #[test]
    fn rank_basics() {
        let m = u12();
        assert_eq!(m.rank(0), 0);
        assert_eq!(m.rank(0b01), 1);
        assert_eq!(m.rank(0b11), 1);
        let free = uniform_matroid(2, 2).unwrap();
        assert_eq!(free.rank(0b11), 2);
    }

    #[test]
    fn rank_of_independents_is_size() {
        let m = uniform_matroid(2, 4).unwrap();
        for s in 0..(1u64 << 4) {
            if m.is_independent(s) {
                assert_eq!(m.rank(s), s.count_ones() as usize);
            }
        }
    }

    #[test]
    fn circuits_of_small_matroids() {
        assert_eq!(u12().circuits(), vec![0b11]);
        assert!(uniform_matroid(3, 3).unwrap().circuits().is_empty());
        let loopy = Matroid::new(vec!["e".into()], &[0]).unwrap();
        assert_eq!(loopy.circuits(), vec![0b1]);
        // U_{1,3}: all 2-subsets are circuits
        let m = uniform_matroid(1, 3).unwrap();
        assert_eq!(m.circuits(), vec![0b011, 0b101, 0b110]);
    }

    #[test]
    fn flats_of_small_matroids() {
        assert_eq!(u12().flats().flats(), &[0b00, 0b11]);
        let free = uniform_matroid(2, 2).unwrap();
        assert_eq!(free.flats().len(), 4);
        // triangle graphical matroid: empty set, three singletons, everything
        let g = Graph::new(&["1", "2", "3"], &[("1", "2"), ("2", "3"), ("1", "3")]).unwrap();
        let m = graphical_matroid(&g).unwrap();
        assert_eq!(m.flats().flats(), &[0b000, 0b001, 0b010, 0b100, 0b111]);
    }

    #[test]
    fn flat_characterizations_agree() {
        let candidates = [
            uniform_matroid(2, 4).unwrap(),
            uniform_matroid(1, 3).unwrap(),
            Matroid::new(vec!["a".into(), "b".into()], &[0b00, 0b10]).unwrap(),
        ];
        for m in &candidates {
            for t in 0..=m.full_set() {
                assert_eq!(m.is_flat(t), m.is_flat_by_maximality(t));
            }
        }
    }

    #[test]
    fn closure_properties() {
        let m = u12();
        assert_eq!(m.closure(0b01), 0b11);
        assert_eq!(m.closure(0), 0);
        let loopy = Matroid::new(vec!["a".into(), "b".into()], &[0b00, 0b10]).unwrap();
        // a is a loop, so it lies in the closure of the empty set
        assert_eq!(loopy.closure(0), 0b01);
        // closures are flats and contain their argument
        for t in 0..=m.full_set() {
            let c = m.closure(t);
            assert!(m.is_flat(c));
            assert_eq!(t & !c, 0);
            assert_eq!(m.rank(t), m.rank(c));
        }
    }

    #[test]
    fn closure_matches_flat_intersection() {
        let m = uniform_matroid(2, 4).unwrap();
        let lattice = m.flats();
        for t in 0..=m.full_set() {
            let by_intersection = lattice
                .flats()
                .iter()
                .filter(|&&f| t & !f == 0)
                .fold(m.full_set(), |acc, &f| acc & f);
            assert_eq!(m.closure(t), by_intersection);
        }
    }

    #[test]
    fn moebius_on_chains() {
        let m = u12();
        let lattice = m.flats();
        let table = lattice.moebius_table();
        assert_eq!(table.mu(0, 0), Some(1));
        assert_eq!(table.mu(1, 1), Some(1));
        assert_eq!(table.mu(0, 1), Some(-1));

        // a 3-chain: lattice of flats of the rank-2 uniform matroid on 2
        // elements restricted to nested flats 0 < {a} < {a,b}
        let free = uniform_matroid(2, 2).unwrap();
        let lat = free.flats();
        let t = lat.moebius_table();
        let bottom = lat.index_of(0b00).unwrap();
        let a = lat.index_of(0b01).unwrap();
        let top = lat.index_of(0b11).unwrap();
        assert_eq!(t.mu(bottom, a), Some(-1));
        // two middle flats between bottom and top
        assert_eq!(t.mu(bottom, top), Some(1));
        assert_eq!(t.mu(a, top), Some(-1));

        // a plain 3-chain poset: one middle element makes the ends cancel
        let chain = FlatLattice {
            flats: vec![0b00, 0b01, 0b11],
        };
        let t = chain.moebius_table();
        assert_eq!(t.mu(0, 1), Some(-1));
        assert_eq!(t.mu(0, 2), Some(0));
        assert_eq!(t.mu(1, 2), Some(-1));
        assert_eq!(t.mu(2, 0), None);
    }

    #[test]
    fn characteristic_polynomials() {
        let (chi, tilde) = u12().characteristic_polynomial();
        assert_eq!(chi, IntPolynomial::from_coeffs(vec![-1, 1]));
        assert_eq!(tilde, chi);

        let loopy = Matroid::new(vec!["e".into()], &[0]).unwrap();
        let (_, tilde) = loopy.characteristic_polynomial();
        assert!(tilde.is_zero());

        let g = Graph::new(&["1", "2", "3"], &[("1", "2"), ("2", "3"), ("1", "3")]).unwrap();
        let m = graphical_matroid(&g).unwrap();
        let (chi, _) = m.characteristic_polynomial();
        assert_eq!(chi, IntPolynomial::from_coeffs(vec![2, -3, 1]));
    }

    #[test]
    fn subset_formula_on_small_matroids() {
        let loopy = Matroid::new(vec!["e".into()], &[0]).unwrap();
        assert!(loopy.charpol_subset().is_zero());
        assert_eq!(
            u12().charpol_subset(),
            IntPolynomial::from_coeffs(vec![-1, 1])
        );
    }

    #[test]
    fn broken_circuits_of_matroids() {
        let m = u12();
        assert_eq!(m.broken_circuits(&[1, 2]).unwrap(), vec![0b01]);
        assert_eq!(m.broken_circuits(&[5, 5]).unwrap(), vec![]);
        let free = uniform_matroid(3, 3).unwrap();
        assert_eq!(free.broken_circuits(&[1, 2, 3]).unwrap(), vec![]);
        // a loop's singleton circuit leaves the empty broken circuit
        let loopy = Matroid::new(vec!["e".into()], &[0]).unwrap();
        assert_eq!(loopy.broken_circuits(&[9]).unwrap(), vec![0]);
    }

    #[test]
    fn five_routes_agree_on_triangle_matroid() {
        let g = Graph::new(&["1", "2", "3"], &[("1", "2"), ("2", "3"), ("1", "3")]).unwrap();
        let m = graphical_matroid(&g).unwrap();
        let labels = vec![1, 3, 2];
        let (_, tilde) = m.characteristic_polynomial();
        let kset = m.broken_circuits(&labels).unwrap();
        assert_eq!(m.charpol_subset(), tilde);
        assert_eq!(
            m.charpol_weighted(&labels, &kset, &vec![4; kset.len()])
                .unwrap(),
            tilde
        );
        assert_eq!(m.charpol_kfree(&labels, &kset).unwrap(), tilde);
        assert_eq!(m.charpol_nbc(&labels).unwrap(), tilde);
        assert_eq!(m.charpol_whitney(&labels).unwrap(), tilde);
        assert_eq!(tilde, IntPolynomial::from_coeffs(vec![2, -3, 1]));
    }

    #[test]
    fn whitney_requires_injective_labels() {
        let m = u12();
        assert!(matches!(
            m.charpol_whitney(&[3, 3]),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn rejects_foreign_kset() {
        let m = u12();
        assert!(matches!(
            m.charpol_kfree(&[1, 2], &[0b10]),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn graphical_matroid_shapes() {
        let tree = Graph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let m = graphical_matroid(&tree).unwrap();
        assert_eq!(m.full_rank(), 2);
        assert!(m.circuits().is_empty());

        let two_edges = Graph::new(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]).unwrap();
        let m = graphical_matroid(&two_edges).unwrap();
        assert!(m.is_independent(m.full_set()));

        // triangle: any two edges independent, all three dependent
        let g = Graph::new(&["1", "2", "3"], &[("1", "2"), ("2", "3"), ("1", "3")]).unwrap();
        let m = graphical_matroid(&g).unwrap();
        assert_eq!(m.full_rank(), 2);
        assert_eq!(m.circuits(), vec![0b111]);
    }

    #[test]
    fn graphical_rank_is_vertices_minus_components() {
        let g = Graph::from_indices(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        let m = graphical_matroid(&g).unwrap();
        for t in 0..=m.full_set() {
            assert_eq!(
                m.rank(t),
                g.vertex_count() - g.conn_under(crate::graph::EdgeSet(t))
            );
        }
    }

    #[test]
    fn uniform_matroid_shapes() {
        let all_loops = uniform_matroid(0, 2).unwrap();
        assert_eq!(all_loops.loops(), 0b11);
        let free = uniform_matroid(2, 2).unwrap();
        assert_eq!(free.loops(), 0);
        assert!(free.is_independent(0b11));
        assert!(uniform_matroid(3, 2).is_err());
    }

    #[test]
    fn subsets_iteration() {
        let subs: Vec<u64> = subsets_of(0b101).collect();
        assert_eq!(subs, vec![0b000, 0b001, 0b100, 0b101]);
        let subs: Vec<u64> = subsets_of(0).collect();
        assert_eq!(subs, vec![0]);
    }
}
