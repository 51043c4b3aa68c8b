//! Finite loopless digraphs, transitivity and 2-path-freeness tests, the
//! underlying undirected graph, and the chromatic sum over 2-path-free arc
//! subsets.
//!
//! A transitive loopless digraph is exactly the strict order relation of a
//! poset on its vertices. Forgetting orientations gives the comparability
//! graph, and the alternating sum over 2-path-free arc subsets recovers that
//! graph's chromatic polynomial. The proof labels each edge `{i,j}` with the
//! size of the closed interval `[i,j]` of the poset; under that labeling the
//! edge pairs meeting head-to-tail are broken circuits, which is what
//! [`two_path_kset`] exposes for verification.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::broken_circuits::{BrokenCircuitSet, Labeling};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, MAX_EDGES, SUBSET_ENUM_MAX_EDGES};
use crate::symfunc::IntPolynomial;

/// A subset of the arcs of some digraph, as a bit vector over the sorted
/// arc order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ArcSet(pub u64);

impl ArcSet {
    pub const EMPTY: ArcSet = ArcSet(0);

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, arc_index: usize) -> bool {
        self.0 & (1 << arc_index) != 0
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
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
}

/// A finite loopless digraph: sorted vertex names plus sorted ordered
/// vertex-index pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    verts: Vec<String>,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new<S: AsRef<str>>(vertices: &[S], arcs: &[(S, S)]) -> Result<Digraph> {
        let mut verts: Vec<String> = Vec::with_capacity(vertices.len());
        for v in vertices {
            let v = v.as_ref();
            if v.is_empty() || v.chars().any(char::is_whitespace) {
                return Err(Error::Parse(format!("invalid vertex name {v:?}")));
            }
            verts.push(v.to_string());
        }
        verts.sort();
        if verts.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse("duplicate vertex declaration".into()));
        }
        let index_of = |name: &str| -> Result<usize> {
            verts
                .binary_search_by(|v| v.as_str().cmp(name))
                .map_err(|_| Error::Parse(format!("arc references undeclared vertex {name:?}")))
        };
        let mut idx_arcs = Vec::with_capacity(arcs.len());
        for (s, t) in arcs {
            let (s, t) = (index_of(s.as_ref())?, index_of(t.as_ref())?);
            if s == t {
                return Err(Error::Parse(format!("loop arc at vertex {:?}", verts[s])));
            }
            idx_arcs.push((s, t));
        }
        idx_arcs.sort();
        if idx_arcs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse("duplicate arc".into()));
        }
        if idx_arcs.len() > MAX_EDGES {
            return Err(Error::Capacity(format!(
                "digraph has {} arcs; at most {MAX_EDGES} are supported",
                idx_arcs.len()
            )));
        }
        Ok(Digraph {
            verts,
            arcs: idx_arcs,
        })
    }

    /// Digraph on vertices `v1..vn` with arcs given by index pairs (index
    /// order matches name order for n <= 9).
    pub fn from_indices(n: usize, arcs: &[(usize, usize)]) -> Result<Digraph> {
        assert!(n <= 9, "generated names only sort like indices up to v9");
        let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let named: Vec<(&str, &str)> = arcs
            .iter()
            .map(|&(s, t)| (names[s].as_str(), names[t].as_str()))
            .collect();
        Digraph::new(&names.iter().map(String::as_str).collect::<Vec<_>>(), &named)
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.verts
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn has_arc(&self, s: usize, t: usize) -> bool {
        self.arcs.binary_search(&(s, t)).is_ok()
    }

    pub fn full_arc_set(&self) -> ArcSet {
        if self.arcs.len() == 64 {
            ArcSet(u64::MAX)
        } else {
            ArcSet((1u64 << self.arcs.len()) - 1)
        }
    }

    /// True iff `(u,v), (v,w)` in the arc set always forces `(u,w)`.
    pub fn is_transitive(&self) -> bool {
        for &(u, v) in &self.arcs {
            for &(v2, w) in &self.arcs {
                if v == v2 && !self.has_arc(u, w) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff no vertex of `f` is simultaneously an arc head and an arc
    /// tail, i.e. no two arcs of `f` meet head-to-tail.
    pub fn is_two_path_free(&self, f: ArcSet) -> bool {
        let mut incoming = vec![false; self.verts.len()];
        let mut outgoing = vec![false; self.verts.len()];
        for i in f.indices() {
            let (s, t) = self.arcs[i];
            outgoing[s] = true;
            incoming[t] = true;
        }
        (0..self.verts.len()).all(|v| !(incoming[v] && outgoing[v]))
    }

    /// The graph on the same vertices whose edges are the arc pairs with
    /// orientation forgotten. Opposite arcs collapse to one edge.
    pub fn underlying_graph(&self) -> Graph {
        let mut edges: Vec<(usize, usize)> = self
            .arcs
            .iter()
            .map(|&(s, t)| (s.min(t), s.max(t)))
            .collect();
        edges.sort();
        edges.dedup();
        let named: Vec<(String, String)> = edges
            .iter()
            .map(|&(u, v)| (self.verts[u].clone(), self.verts[v].clone()))
            .collect();
        Graph::new(&self.verts, &named).expect("arcs of a valid digraph form valid edges")
    }

    fn check_transitive_loopless(&self) -> Result<()> {
        if !self.is_transitive() {
            return Err(Error::Precondition("digraph is not transitive".into()));
        }
        Ok(())
    }

    /// Treats the arc relation as a strict order and returns `i <= k`.
    fn leq(&self, i: usize, k: usize) -> bool {
        i == k || self.has_arc(i, k)
    }

    /// Labels the edge `{i,j}` coming from the arc `(i,j)` with the size of
    /// the closed order interval between `i` and `j`. Only defined for
    /// transitive digraphs, where the arc relation is a strict partial
    /// order and each edge comes from exactly one arc.
    pub fn interval_labeling(&self) -> Result<Labeling> {
        self.check_transitive_loopless()?;
        let g = self.underlying_graph();
        let mut labels = Vec::with_capacity(g.edge_count());
        for &(u, v) in g.edges() {
            let (lo, hi) = if self.has_arc(u, v) { (u, v) } else { (v, u) };
            let interval = (0..self.verts.len())
                .filter(|&k| self.leq(lo, k) && self.leq(k, hi))
                .count();
            labels.push(interval as i64);
        }
        Labeling::new(&g, labels)
    }

    /// The alternating sum `sum (-1)^|F| x^conn(V, set F)` over the
    /// 2-path-free arc subsets; equals the chromatic polynomial of the
    /// underlying graph.
    pub fn chromatic_sum(&self) -> Result<IntPolynomial> {
        self.check_transitive_loopless()?;
        if self.arcs.len() > SUBSET_ENUM_MAX_EDGES {
            return Err(Error::Capacity(format!(
                "digraph has {} arcs; subset enumeration is limited to {SUBSET_ENUM_MAX_EDGES}",
                self.arcs.len()
            )));
        }
        let g = self.underlying_graph();
        // transitivity excludes opposite arc pairs, so arc index i maps to a
        // unique edge index
        let edge_of_arc: Vec<usize> = self
            .arcs
            .iter()
            .map(|&(s, t)| g.edge_index(s, t).expect("arc maps to an edge"))
            .collect();
        let mut poly = IntPolynomial::zero();
        for bits in 0..(1u64 << self.arcs.len()) {
            let f = ArcSet(bits);
            if !self.is_two_path_free(f) {
                continue;
            }
            let mut edges = EdgeSet::EMPTY;
            for i in f.indices() {
                edges.insert(edge_of_arc[i]);
            }
            let c = if f.len().is_multiple_of(2) {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            poly.add_term(g.conn_under(edges), c);
        }
        Ok(poly)
    }

    /// The edge-set pairs `{set(i,k), set(k,j)}` for arcs meeting
    /// head-to-tail, expressed over the underlying graph's edge order.
    /// Under the interval labeling every member is a broken circuit of the
    /// underlying graph.
    pub fn two_path_kset(&self) -> Result<BrokenCircuitSet> {
        self.check_transitive_loopless()?;
        let g = self.underlying_graph();
        let mut members = Vec::new();
        for &(i, k) in &self.arcs {
            for &(k2, j) in &self.arcs {
                if k == k2 {
                    let e1 = g.edge_index(i, k).expect("arc maps to an edge");
                    let e2 = g.edge_index(k, j).expect("arc maps to an edge");
                    members.push(EdgeSet::from_indices(&[e1, e2]));
                }
            }
        }
        Ok(BrokenCircuitSet::from_edge_sets(members))
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertices: {}", self.verts.join(" "))?;
        for &(s, t) in &self.arcs {
            write!(f, "\narc: {} {}", self.verts[s], self.verts[t])?;
        }
        Ok(())
    }
}
