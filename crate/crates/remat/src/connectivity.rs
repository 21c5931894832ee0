//! Vertex connectivity: fast threshold checks, exact values, certificates,
//! and a brute-force cross-check.
//!
//! Conventions follow the flow formulation throughout: `κ(K_n) = n - 1`, a
//! disconnected or single-vertex graph has `κ = 0`, and "k-connected" means
//! `κ(G) >= k`, which forces `n >= k + 1`.
//!
//! Exact values come from unit-capacity max-flow on the vertex-split
//! digraph, with the classical pair strategy: fix a minimum-degree vertex
//! `s`, run flow from `s` to every non-neighbor, then between non-adjacent
//! pairs of neighbors of `s`. Threshold checks (`has_connectivity`) special
//! case k = 1 (BFS) and k = 2 (articulation points) and cap the flow at `k`
//! otherwise.

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConnectivityError {
    #[error("the empty graph has no connectivity value")]
    EmptyGraph,
    #[error("k must be at least 1")]
    ZeroK,
    #[error("local connectivity needs two distinct vertices")]
    SameVertex,
    #[error("graph of order {n} exceeds the brute-force guard of {guard}")]
    TooLarge { n: usize, guard: usize },
}

/// Outcome of a certified k-connectivity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// `κ(g) >= k`.
    Connected,
    /// A set `S` with `|S| < k` whose deletion disconnects the graph.
    SeparatingSet(VertexSet),
    /// The graph is complete with `n <= k`: not k-connected, but no
    /// separating set exists at all.
    TooSmall,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityCertificate {
    pub k: usize,
    pub verdict: Verdict,
}

impl ConnectivityCertificate {
    pub fn is_connected(&self) -> bool {
        self.verdict == Verdict::Connected
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        !0u64 >> (64 - n)
    }
}

/// Vertices reachable from `start` inside `allowed` (which must contain it).
fn reach_mask(g: &Graph, start: usize, allowed: u64) -> u64 {
    let mut reached = 1u64 << start;
    let mut frontier = reached;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= g.neighbors_mask(v);
        }
        next &= allowed & !reached;
        reached |= next;
        frontier = next;
    }
    reached
}

/// Connected components as vertex sets, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    let mut rest = full_mask(g.n());
    let mut out = Vec::new();
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let comp = reach_mask(g, v, rest);
        out.push(VertexSet::from_mask(comp));
        rest &= !comp;
    }
    out
}

pub fn component_count(g: &Graph) -> usize {
    components(g).len()
}

/// Plain graph connectivity: one component. The single vertex counts as
/// connected; the empty graph does not.
pub fn is_connected(g: &Graph) -> bool {
    g.n() > 0 && reach_mask(g, 0, full_mask(g.n())) == full_mask(g.n())
}

pub fn is_complete(g: &Graph) -> bool {
    g.m() == g.n() * g.n().saturating_sub(1) / 2
}

/// Articulation-point scan; assumes the graph is connected and `n >= 3`.
fn has_cut_vertex(g: &Graph) -> bool {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut time = 0;
    let mut root_children = 0;
    disc[0] = 0;
    low[0] = 0;
    time += 1;
    let mut stack: Vec<(usize, u64)> = vec![(0, g.neighbors_mask(0))];
    while let Some(&mut (v, ref mut rem)) = stack.last_mut() {
        if *rem != 0 {
            let w = rem.trailing_zeros() as usize;
            *rem &= *rem - 1;
            if disc[w] == usize::MAX {
                parent[w] = v;
                disc[w] = time;
                low[w] = time;
                time += 1;
                if v == 0 {
                    root_children += 1;
                }
                stack.push((w, g.neighbors_mask(w)));
            } else if w != parent[v] {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            let p = parent[v];
            if p != usize::MAX {
                low[p] = low[p].min(low[v]);
                if p != 0 && low[v] >= disc[p] {
                    return true;
                }
            }
        }
    }
    root_children >= 2
}

/// All articulation points of a connected graph, by single-vertex deletion.
pub fn cut_vertices(g: &Graph) -> VertexSet {
    if g.n() < 3 {
        return VertexSet::from_mask(0);
    }
    g.vertices()
        .filter(|&v| {
            let rest = full_mask(g.n()) & !(1 << v);
            let start = rest.trailing_zeros() as usize;
            reach_mask(g, start, rest) != rest
        })
        .collect()
}

/// Unit-capacity flow network over the vertex-split digraph. Node `2v` is
/// the "in" copy of `v`, node `2v + 1` the "out" copy. Edge arcs get
/// capacity 2, which the unit vertex capacities can never saturate, so every
/// minimum cut crosses split arcs only and reads off as a vertex set.
struct FlowNet {
    to: Vec<u32>,
    cap: Vec<u8>,
    head: Vec<Vec<u32>>,
}

impl FlowNet {
    fn new(nodes: usize) -> FlowNet {
        FlowNet {
            to: Vec::new(),
            cap: Vec::new(),
            head: vec![Vec::new(); nodes],
        }
    }

    fn arc(&mut self, from: usize, to: usize, cap: u8) {
        let id = self.to.len() as u32;
        self.to.push(to as u32);
        self.cap.push(cap);
        self.head[from].push(id);
        self.to.push(from as u32);
        self.cap.push(0);
        self.head[to].push(id + 1);
    }

    /// BFS-augmenting max flow from `source` to `sink`, stopping early once
    /// `limit` units are routed.
    fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        let mut value = 0;
        let mut parent_arc = vec![u32::MAX; self.head.len()];
        let mut queue = Vec::with_capacity(self.head.len());
        while value < limit {
            parent_arc.iter_mut().for_each(|p| *p = u32::MAX);
            queue.clear();
            queue.push(source as u32);
            parent_arc[source] = u32::MAX - 1;
            let mut qi = 0;
            let mut found = false;
            'bfs: while qi < queue.len() {
                let v = queue[qi] as usize;
                qi += 1;
                for &a in &self.head[v] {
                    let w = self.to[a as usize] as usize;
                    if self.cap[a as usize] > 0 && parent_arc[w] == u32::MAX {
                        parent_arc[w] = a;
                        if w == sink {
                            found = true;
                            break 'bfs;
                        }
                        queue.push(w as u32);
                    }
                }
            }
            if !found {
                break;
            }
            let mut v = sink;
            while v != source {
                let a = parent_arc[v] as usize;
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                v = self.to[a ^ 1] as usize;
            }
            value += 1;
        }
        value
    }

    /// After a max flow, the residual source side read back as a vertex cut:
    /// vertices whose in-copy is reachable but whose out-copy is not.
    fn residual_cut(&self, source: usize) -> VertexSet {
        let nodes = self.head.len();
        let mut seen = vec![false; nodes];
        seen[source] = true;
        let mut queue = vec![source];
        while let Some(v) = queue.pop() {
            for &a in &self.head[v] {
                let w = self.to[a as usize] as usize;
                if self.cap[a as usize] > 0 && !seen[w] {
                    seen[w] = true;
                    queue.push(w);
                }
            }
        }
        let mut cut = VertexSet::new();
        for v in 0..nodes / 2 {
            if seen[2 * v] && !seen[2 * v + 1] {
                cut.insert(v);
            }
        }
        cut
    }
}

fn split_network(g: &Graph, s: usize, t: usize) -> FlowNet {
    let mut net = FlowNet::new(2 * g.n());
    for v in g.vertices() {
        let cap = if v == s || v == t { 2 } else { 1 };
        net.arc(2 * v, 2 * v + 1, cap);
    }
    for e in g.edges() {
        net.arc(2 * e.u() + 1, 2 * e.v(), 2);
        net.arc(2 * e.v() + 1, 2 * e.u(), 2);
    }
    net
}

/// Max number of internally disjoint s-t paths, for non-adjacent s, t.
fn flow_between(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    debug_assert!(!g.has_edge(s, t));
    split_network(g, s, t).max_flow(2 * s + 1, 2 * t, limit)
}

fn flow_with_cut(g: &Graph, s: usize, t: usize) -> (usize, VertexSet) {
    let mut net = split_network(g, s, t);
    let value = net.max_flow(2 * s + 1, 2 * t, usize::MAX);
    (value, net.residual_cut(2 * s + 1))
}

/// The flow pairs whose local connectivities witness `κ(G)`: a fixed
/// minimum-degree vertex against its non-neighbors, plus non-adjacent pairs
/// of its neighbors (needed when every minimum cut contains `s`).
fn scan_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let s = g
        .vertices()
        .min_by_key(|&v| (g.degree(v), v))
        .expect("nonempty");
    let mut pairs = Vec::new();
    let closed = g.neighbors_mask(s) | 1 << s;
    for t in VertexSet::from_mask(full_mask(g.n()) & !closed).iter() {
        pairs.push((s, t));
    }
    let nbrs: Vec<usize> = g.neighbors(s).collect();
    for (i, &u) in nbrs.iter().enumerate() {
        for &w in &nbrs[i + 1..] {
            if !g.has_edge(u, w) {
                pairs.push((u, w));
            }
        }
    }
    pairs
}

/// `κ(g) >= k`, by the cheapest means available for the given `k`.
pub fn has_connectivity(g: &Graph, k: usize) -> bool {
    let n = g.n();
    match k {
        0 => n >= 1,
        1 => n >= 2 && is_connected(g),
        2 => n >= 3 && is_connected(g) && !has_cut_vertex(g),
        _ => {
            if n < k + 1 || g.min_degree() < k || !is_connected(g) {
                return false;
            }
            if is_complete(g) {
                return true;
            }
            scan_pairs(g)
                .into_iter()
                .all(|(a, b)| flow_between(g, a, b, k) >= k)
        }
    }
}

/// Exact vertex connectivity.
pub fn vertex_connectivity(g: &Graph) -> Result<usize, ConnectivityError> {
    let n = g.n();
    if n == 0 {
        return Err(ConnectivityError::EmptyGraph);
    }
    if n == 1 {
        return Ok(0);
    }
    if !is_connected(g) {
        return Ok(0);
    }
    if is_complete(g) {
        return Ok(n - 1);
    }
    let mut best = g.min_degree();
    for (a, b) in scan_pairs(g) {
        let f = flow_between(g, a, b, best);
        best = best.min(f);
        if best == 1 {
            break; // connected, so κ >= 1 and no pair can go lower
        }
    }
    Ok(best)
}

/// Certified k-connectivity: either `Connected`, or a witness. The witness
/// separating set is the lexicographically smallest among the minimum cuts
/// produced by the flow scan, so runs are reproducible.
pub fn is_k_connected(g: &Graph, k: usize) -> Result<ConnectivityCertificate, ConnectivityError> {
    if k == 0 {
        return Err(ConnectivityError::ZeroK);
    }
    if g.n() == 0 {
        return Err(ConnectivityError::EmptyGraph);
    }
    if has_connectivity(g, k) {
        return Ok(ConnectivityCertificate {
            k,
            verdict: Verdict::Connected,
        });
    }
    if is_complete(g) {
        return Ok(ConnectivityCertificate {
            k,
            verdict: Verdict::TooSmall,
        });
    }
    if !is_connected(g) {
        return Ok(ConnectivityCertificate {
            k,
            verdict: Verdict::SeparatingSet(VertexSet::new()),
        });
    }
    let kappa = vertex_connectivity(g)?;
    debug_assert!(kappa < k);
    let mut best: Option<Vec<usize>> = None;
    for (a, b) in scan_pairs(g) {
        if flow_between(g, a, b, kappa + 1) == kappa {
            let (value, cut) = flow_with_cut(g, a, b);
            debug_assert_eq!(value, kappa);
            let seq: Vec<usize> = cut.iter().collect();
            if best.as_ref().is_none_or(|b| seq < *b) {
                best = Some(seq);
            }
        }
    }
    let cut: VertexSet = best.expect("some pair achieves κ").into_iter().collect();
    debug_assert!(component_count(&g.delete_vertices(&cut).unwrap().0) >= 2);
    Ok(ConnectivityCertificate {
        k,
        verdict: Verdict::SeparatingSet(cut),
    })
}

/// Max number of internally disjoint u-v paths; adjacency contributes one
/// path plus the flow value on the graph without that edge.
pub fn local_vertex_connectivity(
    g: &Graph,
    u: usize,
    v: usize,
) -> Result<usize, ConnectivityError> {
    assert!(u < g.n() && v < g.n(), "vertices out of range");
    if u == v {
        return Err(ConnectivityError::SameVertex);
    }
    if g.has_edge(u, v) {
        Ok(1 + flow_between(&g.without_edge(u, v), u, v, usize::MAX))
    } else {
        Ok(flow_between(g, u, v, usize::MAX))
    }
}

pub const BRUTE_FORCE_GUARD: usize = 12;

/// Definitionally minimal `|S|` with `g - S` disconnected (or `n - 1` when
/// none exists). Exponential; guarded to `n <= 12`.
pub fn brute_force_vertex_connectivity(g: &Graph) -> Result<usize, ConnectivityError> {
    let n = g.n();
    if n == 0 {
        return Err(ConnectivityError::EmptyGraph);
    }
    if n > BRUTE_FORCE_GUARD {
        return Err(ConnectivityError::TooLarge {
            n,
            guard: BRUTE_FORCE_GUARD,
        });
    }
    let full = full_mask(n);
    for size in 0..n.saturating_sub(1) {
        // All vertex subsets of the given size, as masks.
        let mut found = None;
        for mask in 0..=full {
            if mask.count_ones() as usize != size {
                continue;
            }
            let rest = full & !mask;
            if rest == 0 {
                continue;
            }
            let start = rest.trailing_zeros() as usize;
            if reach_mask(g, start, rest) != rest {
                found = Some(size);
                break;
            }
        }
        if let Some(s) = found {
            return Ok(s);
        }
    }
    Ok(n - 1)
}
