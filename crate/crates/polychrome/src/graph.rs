//! Finite undirected simple graphs and their spanning subgraphs.
//!
//! Vertices are named by text tokens and kept in sorted order; edges are
//! unordered pairs stored as `(min, max)` index pairs sorted
//! lexicographically. All enumerations follow these fixed orders, so every
//! operation is deterministic. Edge subsets are bit vectors over the sorted
//! edge order ([`EdgeSet`]).

use std::fmt;

use crate::error::{Error, Result};
use crate::symfunc::Partition;

/// Hard cap on the number of edges so that an [`EdgeSet`] fits in a `u64`.
pub const MAX_EDGES: usize = 63;

/// Cap for operations that enumerate all `2^|E|` edge subsets.
pub const SUBSET_ENUM_MAX_EDGES: usize = 20;

/// A subset of the edges of some graph, encoded as a bit vector indexed by
/// the graph's sorted edge order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct EdgeSet(pub u64);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub fn from_indices(indices: &[usize]) -> EdgeSet {
        let mut bits = 0u64;
        for &i in indices {
            bits |= 1 << i;
        }
        EdgeSet(bits)
    }

    pub fn full(n_edges: usize) -> EdgeSet {
        if n_edges == 64 {
            EdgeSet(u64::MAX)
        } else {
            EdgeSet((1u64 << n_edges) - 1)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, edge_index: usize) -> bool {
        self.0 & (1 << edge_index) != 0
    }

    pub fn insert(&mut self, edge_index: usize) {
        self.0 |= 1 << edge_index;
    }

    pub fn is_subset_of(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & other.0)
    }

    pub fn remove(self, edge_index: usize) -> EdgeSet {
        EdgeSet(self.0 & !(1 << edge_index))
    }

    /// Indices of the member edges, ascending.
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

    /// All `2^n` subsets of the first `n` bit positions, in ascending bit order.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = EdgeSet> {
        (0..(1u64 << n)).map(EdgeSet)
    }
}

/// A finite undirected simple graph: a sorted vertex list plus a sorted list
/// of 2-element index pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    verts: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from vertex names and named edges.
    ///
    /// Rejects empty or whitespace-carrying vertex names, duplicate vertices,
    /// self-loops, duplicate edges and edges mentioning undeclared vertices.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Graph> {
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
                .map_err(|_| Error::Parse(format!("edge references undeclared vertex {name:?}")))
        };
        let mut idx_edges = Vec::with_capacity(edges.len());
        for (s, t) in edges {
            let (s, t) = (index_of(s.as_ref())?, index_of(t.as_ref())?);
            if s == t {
                return Err(Error::Parse(format!("self-loop at vertex {:?}", verts[s])));
            }
            idx_edges.push((s.min(t), s.max(t)));
        }
        idx_edges.sort();
        if idx_edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse("duplicate edge".into()));
        }
        if idx_edges.len() > MAX_EDGES {
            return Err(Error::Capacity(format!(
                "graph has {} edges; at most {MAX_EDGES} are supported",
                idx_edges.len()
            )));
        }
        Ok(Graph {
            verts,
            edges: idx_edges,
        })
    }

    /// Graph on vertices `v1..vn` with edges given by index pairs. Handy for
    /// tests and corpus generation (index order matches name order for n <= 9).
    pub fn from_indices(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        assert!(n <= 9, "generated names only sort like indices up to v9");
        let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let named: Vec<(&str, &str)> = edges
            .iter()
            .map(|&(s, t)| (names[s].as_str(), names[t].as_str()))
            .collect();
        Graph::new(&names.iter().map(String::as_str).collect::<Vec<_>>(), &named)
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.verts
    }

    /// Edges as sorted `(min, max)` vertex-index pairs; bit `i` of an
    /// [`EdgeSet`] refers to `edges()[i]`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.verts.binary_search_by(|v| v.as_str().cmp(name)).ok()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn full_edge_set(&self) -> EdgeSet {
        EdgeSet::full(self.edges.len())
    }

    /// Human-readable form of an edge subset, e.g. `{a-b, b-c}`.
    pub fn format_edge_set(&self, f: EdgeSet) -> String {
        let names: Vec<String> = f
            .indices()
            .map(|i| {
                let (u, v) = self.edges[i];
                format!("{}-{}", self.verts[u], self.verts[v])
            })
            .collect();
        format!("{{{}}}", names.join(", "))
    }

    /// Connected components as blocks of vertex indices. Blocks are sorted by
    /// their smallest member; members ascend within a block.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.components_under(self.full_edge_set())
    }

    /// Components of the spanning subgraph `(V, f)`.
    pub fn components_under(&self, f: EdgeSet) -> Vec<Vec<usize>> {
        let mut dsu = DisjointSets::new(self.verts.len());
        for i in f.indices() {
            let (u, v) = self.edges[i];
            dsu.union(u, v);
        }
        dsu.blocks()
    }

    /// Number of connected components; 0 exactly for the empty graph.
    pub fn conn(&self) -> usize {
        self.conn_under(self.full_edge_set())
    }

    /// `conn(V, f)` for an edge subset `f`.
    pub fn conn_under(&self, f: EdgeSet) -> usize {
        let mut dsu = DisjointSets::new(self.verts.len());
        for i in f.indices() {
            let (u, v) = self.edges[i];
            dsu.union(u, v);
        }
        dsu.count()
    }

    /// Component sizes in weakly decreasing order.
    pub fn lambda_partition(&self) -> Partition {
        self.lambda_under(self.full_edge_set())
    }

    /// `lambda(V, f)` for an edge subset `f`.
    pub fn lambda_under(&self, f: EdgeSet) -> Partition {
        let sizes: Vec<usize> = self.components_under(f).iter().map(Vec::len).collect();
        Partition::new(sizes)
    }

    /// The graph `(V, f)` with the same vertices and only the edges of `f`.
    pub fn spanning_subgraph(&self, f: EdgeSet) -> Graph {
        Graph {
            verts: self.verts.clone(),
            edges: f.indices().map(|i| self.edges[i]).collect(),
        }
    }

    /// True iff the spanning subgraph `(V, f)` contains no circuit,
    /// i.e. is a forest.
    pub fn is_circuit_free(&self, f: EdgeSet) -> bool {
        let mut dsu = DisjointSets::new(self.verts.len());
        for i in f.indices() {
            let (u, v) = self.edges[i];
            if !dsu.union(u, v) {
                return false;
            }
        }
        true
    }

    /// Guard for operations enumerating all `2^|E|` edge subsets.
    pub fn check_subset_capacity(&self) -> Result<()> {
        if self.edges.len() > SUBSET_ENUM_MAX_EDGES {
            Err(Error::Capacity(format!(
                "graph has {} edges; subset enumeration is limited to {SUBSET_ENUM_MAX_EDGES}",
                self.edges.len()
            )))
        } else {
            Ok(())
        }
    }

    /// All circuits of the graph, each given as its edge set, sorted by bit
    /// pattern. A subset is a circuit exactly when it is nonempty, every
    /// touched vertex has degree 2 in it, and it is connected.
    pub fn enumerate_circuits(&self) -> Result<Vec<EdgeSet>> {
        self.check_subset_capacity()?;
        let mut circuits = Vec::new();
        for f in EdgeSet::all_subsets(self.edges.len()) {
            if !f.is_empty() && self.is_single_cycle(f) {
                circuits.push(f);
            }
        }
        Ok(circuits)
    }

    fn is_single_cycle(&self, f: EdgeSet) -> bool {
        let mut degree = vec![0u8; self.verts.len()];
        for i in f.indices() {
            let (u, v) = self.edges[i];
            degree[u] += 1;
            degree[v] += 1;
            if degree[u] > 2 || degree[v] > 2 {
                return false;
            }
        }
        if degree.contains(&1) {
            return false;
        }
        // all degrees are 0 or 2; connected on its support iff a single cycle
        let mut dsu = DisjointSets::new(self.verts.len());
        for i in f.indices() {
            let (u, v) = self.edges[i];
            dsu.union(u, v);
        }
        let touched: Vec<usize> = (0..self.verts.len()).filter(|&v| degree[v] > 0).collect();
        touched.iter().all(|&v| dsu.find(v) == dsu.find(touched[0]))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertices: {}", self.verts.join(" "))?;
        for &(u, v) in &self.edges {
            write!(f, "\nedge: {} {}", self.verts[u], self.verts[v])?;
        }
        Ok(())
    }
}

/// Plain union-find with path halving.
struct DisjointSets {
    parent: Vec<usize>,
    count: usize,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            count: n,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `x` and `y` were already connected.
    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        self.parent[rx] = ry;
        self.count -= 1;
        true
    }

    fn count(&self) -> usize {
        self.count
    }

    fn blocks(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 0..n {
            let r = self.find(v);
            by_root[r].push(v);
        }
        let mut blocks: Vec<Vec<usize>> = by_root.into_iter().filter(|b| !b.is_empty()).collect();
        blocks.sort_by_key(|b| b[0]);
        blocks
    }
}
