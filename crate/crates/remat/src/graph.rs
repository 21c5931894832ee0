//! Core graph types: a compact undirected simple graph on at most 62
//! vertices, plus the vertex set, edge, and matching values the rest of the
//! crate passes around.
//!
//! Vertices are `0..n`. Adjacency is one 64-bit mask per vertex, which keeps
//! the inner loops of the connectivity and search code cheap and makes
//! subgraph operations plain copies. The 62-vertex cap matches the
//! single-byte graph6 range, so every constructible `Graph` can be written
//! back out as graph6.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// Hard cap on graph order, matching the single-byte graph6 range.
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("graph order {n} exceeds the supported maximum {}", MAX_VERTICES)]
    TooLarge { n: usize },
    #[error("vertex {v} is out of range for a graph of order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v} is not allowed")]
    SelfLoop { v: usize },
    #[error("edge {edge} is not present in the graph")]
    EdgeAbsent { edge: Edge },
    #[error("vertex sets overlap")]
    SetsOverlap,
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("subset must be a proper subset of the vertices")]
    SubsetIsWholeGraph,
    #[error("edges do not form a matching")]
    NotAMatching,
}

/// An undirected edge with endpoints stored in increasing order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Builds the edge `{a, b}`. Panics on a self-loop; endpoint order is
    /// normalized so `Edge::new(3, 1) == Edge::new(1, 3)`.
    pub fn new(a: usize, b: usize) -> Edge {
        assert!(a != b, "self-loop at vertex {a}");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    pub fn disjoint_from(&self, other: &Edge) -> bool {
        !self.touches(other.u) && !self.touches(other.v)
    }

    pub fn endpoint_mask(&self) -> u64 {
        (1 << self.u) | (1 << self.v)
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(2))?;
        seq.serialize_element(&self.u)?;
        seq.serialize_element(&self.v)?;
        seq.end()
    }
}

/// A set of vertex ids, stored as a bit mask. Iteration is always in
/// increasing order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    mask: u64,
}

impl VertexSet {
    pub fn new() -> VertexSet {
        VertexSet { mask: 0 }
    }

    pub fn from_mask(mask: u64) -> VertexSet {
        VertexSet { mask }
    }

    /// The set `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet { mask: !0 }
        } else {
            VertexSet {
                mask: (1u64 << n) - 1,
            }
        }
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn insert(&mut self, v: usize) {
        self.mask |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.mask &= !(1 << v);
    }

    pub fn contains(&self, v: usize) -> bool {
        v < 64 && self.mask >> v & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            mask: self.mask | other.mask,
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            mask: self.mask & other.mask,
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            mask: self.mask & !other.mask,
        }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.mask & other.mask == 0
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.mask;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn min(&self) -> Option<usize> {
        if self.mask == 0 {
            None
        } else {
            Some(self.mask.trailing_zeros() as usize)
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        let mut s = VertexSet::new();
        for v in iter {
            assert!(v < 64, "vertex {v} does not fit in a VertexSet");
            s.insert(v);
        }
        s
    }
}

impl From<&[usize]> for VertexSet {
    fn from(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(vs: [usize; N]) -> VertexSet {
        vs.iter().copied().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

/// A set of pairwise vertex-disjoint edges, kept sorted lexicographically.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    pub fn empty() -> Matching {
        Matching { edges: Vec::new() }
    }

    /// Builds a matching from the given edges, rejecting overlapping pairs.
    pub fn new(mut edges: Vec<Edge>) -> Result<Matching, GraphError> {
        edges.sort();
        let mut seen = 0u64;
        for e in &edges {
            if seen & e.endpoint_mask() != 0 {
                return Err(GraphError::NotAMatching);
            }
            seen |= e.endpoint_mask();
        }
        Ok(Matching { edges })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn iter(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    /// The set of matched vertices.
    pub fn vertices(&self) -> VertexSet {
        let mut mask = 0;
        for e in &self.edges {
            mask |= e.endpoint_mask();
        }
        VertexSet::from_mask(mask)
    }

    pub fn covers(&self, v: usize) -> bool {
        self.vertices().contains(v)
    }

    /// The first `len` edges in lexicographic order. Any subset of a
    /// removable matching is again removable, so truncation is the standard
    /// way to trim an oversized find down to a requested size.
    pub fn truncated(&self, len: usize) -> Matching {
        Matching {
            edges: self.edges[..len.min(self.edges.len())].to_vec(),
        }
    }

    /// Applies a relabeling map (`map[new_id] = old_id`), lifting a matching
    /// found in a relabeled subgraph back to the host graph.
    pub fn translate(&self, map: &[usize]) -> Matching {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(map[e.u()], map[e.v()]))
            .collect();
        Matching::new(edges).expect("relabeling an injective map keeps edges disjoint")
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.edges.iter()).finish()
    }
}

impl Serialize for Matching {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.edges.len()))?;
        for e in &self.edges {
            seq.serialize_element(e)?;
        }
        seq.end()
    }
}

/// An undirected simple graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices (`n = 0` is allowed).
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge { n });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { v: a, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { v: b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop { v: a });
            }
            g.adj[a] |= 1 << b;
            g.adj[b] |= 1 << a;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.has_edge(e.u(), e.v())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        VertexSet::from_mask(self.adj[v]).into_iter()
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            let mut upper = self.adj[u] >> (u + 1) << (u + 1);
            while upper != 0 {
                let v = upper.trailing_zeros() as usize;
                upper &= upper - 1;
                out.push(Edge::new(u, v));
            }
        }
        out
    }

    /// Minimum degree; `usize::MAX` on the empty graph so that vacuous
    /// degree preconditions fail loudly downstream instead of silently.
    pub fn min_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap_or(usize::MAX)
    }

    pub fn max_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// The vertices of degree exactly `k`.
    pub fn degree_k_vertices(&self, k: usize) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == k).collect()
    }

    fn check_edge_present(&self, e: &Edge) -> Result<(), GraphError> {
        if e.v() >= self.n {
            return Err(GraphError::VertexOutOfRange {
                v: e.v(),
                n: self.n,
            });
        }
        if !self.contains_edge(e) {
            return Err(GraphError::EdgeAbsent { edge: *e });
        }
        Ok(())
    }

    /// The graph with the listed edges removed; every edge must be present.
    pub fn delete_edges(&self, edges: &[Edge]) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for e in edges {
            self.check_edge_present(e)?;
            g.adj[e.u()] &= !(1 << e.v());
            g.adj[e.v()] &= !(1 << e.u());
        }
        Ok(g)
    }

    pub fn delete_matching(&self, m: &Matching) -> Result<Graph, GraphError> {
        self.delete_edges(m.edges())
    }

    /// Fast single-edge removal for search inner loops; the edge must exist.
    pub(crate) fn without_edge(&self, u: usize, v: usize) -> Graph {
        debug_assert!(self.has_edge(u, v));
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        g
    }

    fn check_subset(&self, s: &VertexSet) -> Result<(), GraphError> {
        if !s.is_subset_of(&VertexSet::full(self.n)) {
            let v = s
                .iter()
                .find(|&v| v >= self.n)
                .expect("some member is out of range");
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        Ok(())
    }

    fn relabel_kept(&self, kept: u64) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = VertexSet::from_mask(kept).iter().collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &old) in map.iter().enumerate() {
            new_id[old] = i;
        }
        let mut adj = vec![0u64; map.len()];
        for (i, &old) in map.iter().enumerate() {
            let mut nbrs = self.adj[old] & kept;
            while nbrs != 0 {
                let w = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                adj[i] |= 1 << new_id[w];
            }
        }
        (Graph { n: map.len(), adj }, map)
    }

    /// Deletes a vertex set. Remaining vertices are relabeled
    /// order-preservingly; the returned map sends new ids to old ids.
    pub fn delete_vertices(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_subset(s)?;
        let kept = VertexSet::full(self.n).mask() & !s.mask();
        Ok(self.relabel_kept(kept))
    }

    /// The subgraph induced on `s`, relabeled order-preservingly.
    pub fn induced(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_subset(s)?;
        Ok(self.relabel_kept(s.mask()))
    }

    /// The bipartite graph on `a ∪ b` keeping only the edges with one
    /// endpoint in each set. Vertices are relabeled order-preservingly over
    /// the union; the map sends new ids to old ids.
    pub fn bipartite_between(
        &self,
        a: &VertexSet,
        b: &VertexSet,
    ) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_subset(a)?;
        self.check_subset(b)?;
        if !a.is_disjoint(b) {
            return Err(GraphError::SetsOverlap);
        }
        let (mut g, map) = self.relabel_kept(a.union(b).mask());
        for i in 0..g.n {
            for j in 0..g.n {
                // Drop edges inside a and inside b.
                if g.adj[i] >> j & 1 == 1 && a.contains(map[i]) == a.contains(map[j]) {
                    g.adj[i] &= !(1 << j);
                }
            }
        }
        Ok((g, map))
    }

    /// Contracts the (nonempty, proper) subset `h` to a single fresh vertex
    /// adjacent to the outside neighborhood of `h`. Kept vertices are
    /// relabeled order-preservingly to `0..n-|h|`, the fresh vertex gets id
    /// `n - |h|`, and the map sends kept new ids to old ids.
    pub fn contract_subset(
        &self,
        h: &VertexSet,
    ) -> Result<(Graph, usize, Vec<usize>), GraphError> {
        self.check_subset(h)?;
        if h.is_empty() {
            return Err(GraphError::EmptySubset);
        }
        if h.len() == self.n {
            return Err(GraphError::SubsetIsWholeGraph);
        }
        let kept = VertexSet::full(self.n).mask() & !h.mask();
        let (sub, map) = self.relabel_kept(kept);
        let z = sub.n;
        let mut adj = sub.adj;
        adj.push(0);
        for (i, &old) in map.iter().enumerate() {
            if self.adj[old] & h.mask() != 0 {
                adj[i] |= 1 << z;
                adj[z] |= 1 << i;
            }
        }
        Ok((Graph { n: z + 1, adj }, z, map))
    }

    /// True when the graph is acyclic (components may be arbitrary).
    pub fn is_forest(&self) -> bool {
        // DFS with parent tracking; any non-tree edge closes a cycle.
        let mut seen = 0u64;
        for root in 0..self.n {
            if seen >> root & 1 == 1 {
                continue;
            }
            let mut stack = vec![(root, usize::MAX)];
            seen |= 1 << root;
            while let Some((v, parent)) = stack.pop() {
                let mut skipped_parent_edge = false;
                for w in self.neighbors(v) {
                    if w == parent && !skipped_parent_edge {
                        skipped_parent_edge = true;
                        continue;
                    }
                    if seen >> w & 1 == 1 {
                        return false;
                    }
                    seen |= 1 << w;
                    stack.push((w, v));
                }
            }
        }
        true
    }

    /// True when `f` is a set of edges of this graph that are pairwise
    /// vertex-disjoint.
    pub fn is_matching_set(&self, f: &[Edge]) -> bool {
        let mut seen = 0u64;
        for e in f {
            if !self.contains_edge(e) || seen & e.endpoint_mask() != 0 {
                return false;
            }
            seen |= e.endpoint_mask();
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, {:?})", self.n, self.m(), self.edges())
    }
}

/// `K_n`.
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n).expect("order within bounds");
    for u in 0..n {
        for v in u + 1..n {
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
    }
    g
}

/// The cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
}

/// The path on `n` vertices.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

/// `K_{a,b}` with part `{0..a}` and part `{a..a+b}`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    Graph::from_edges(a + b, edges).expect("valid biclique")
}

/// The star `K_{1,leaves}` with center `0`.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid star")
}

/// The wheel on `n` vertices: rim cycle `0..n-1` plus hub `n-1`.
pub fn wheel(n: usize) -> Graph {
    assert!(n >= 4, "a wheel needs at least 4 vertices");
    let rim = n - 1;
    let mut edges: Vec<(usize, usize)> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
    edges.extend((0..rim).map(|i| (i, rim)));
    Graph::from_edges(n, edges).expect("valid wheel")
}

/// The Petersen graph.
pub fn petersen() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    edges.extend((0..5).map(|i| (i, i + 5)));
    Graph::from_edges(10, edges).expect("valid Petersen graph")
}

/// The join `g + h`: disjoint copies plus all edges between them. `h`'s
/// vertices are shifted up by `g.n()`.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let n = g.n() + h.n();
    let mut out = Graph::empty(n)?;
    for u in 0..g.n() {
        out.adj[u] = g.adj[u];
    }
    for u in 0..h.n() {
        out.adj[g.n() + u] = h.adj[u] << g.n();
    }
    for u in 0..g.n() {
        for v in g.n()..n {
            out.adj[u] |= 1 << v;
            out.adj[v] |= 1 << u;
        }
    }
    Ok(out)
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexSetIter;

    fn into_iter(self) -> VertexSetIter {
        VertexSetIter { rest: self.mask }
    }
}

pub struct VertexSetIter {
    rest: u64,
}

impl Iterator for VertexSetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.rest == 0 {
            None
        } else {
            let v = self.rest.trailing_zeros() as usize;
            self.rest &= self.rest - 1;
            Some(v)
        }
    }
}
