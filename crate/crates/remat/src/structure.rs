//! Structural subroutines: minimal k-connectivity, ear decompositions,
//! long paths, Dirac Hamiltonian cycles, exceptional-family recognition, and
//! the degree/edge bounds satisfied by minimally k-connected graphs.
//!
//! The path and cycle routines are fully constructive. A maximal path that
//! is still short has, by counting endpoint neighbors, a crossing chord pair
//! that rotates it into a cycle, and connectivity then supplies a vertex to
//! absorb; iterating this always reaches the classical `min(2δ, n - 1)`
//! bound without any search fallback.

use serde::Serialize;

use crate::connectivity::{has_connectivity, is_complete, is_connected};
use crate::graph::{Edge, Graph, VertexSet};
use crate::matching::bipartition;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("graph is empty or disconnected")]
    NotConnected,
    #[error("graph is not {k}-connected")]
    NotKConnected { k: usize },
    #[error("Dirac precondition 2δ ≥ n fails (δ = {delta}, n = {n})")]
    DiracUnsatisfied { delta: usize, n: usize },
}

/// A minimally k-connected spanning subgraph together with the edges that
/// were peeled off to reach it.
#[derive(Debug, Clone)]
pub struct ReductionResult {
    pub core: Graph,
    /// Deleted edges, in deletion order.
    pub removed: Vec<Edge>,
}

fn reduce_in_order(g: &Graph, k: usize, order: &[Edge]) -> ReductionResult {
    let mut core = g.clone();
    let mut removed = Vec::new();
    // One pass suffices: once `core - e` fails to be k-connected, so does
    // every spanning subgraph of it, so a kept edge never becomes deletable.
    for &e in order {
        let candidate = core.without_edge(e.u(), e.v());
        if has_connectivity(&candidate, k) {
            core = candidate;
            removed.push(e);
        }
    }
    ReductionResult { core, removed }
}

/// Greedily deletes edges in lexicographic order while the graph stays
/// k-connected. The resulting core is minimally k-connected.
pub fn minimally_k_connected_reduction(
    g: &Graph,
    k: usize,
) -> Result<ReductionResult, StructureError> {
    if k == 0 || !has_connectivity(g, k) {
        return Err(StructureError::NotKConnected { k });
    }
    Ok(reduce_in_order(g, k, &g.edges()))
}

/// Same reduction, but trying edges in the caller's order. Different orders
/// reach different minimal cores, which is how the hunt commands diversify.
pub fn reduction_with_edge_order(
    g: &Graph,
    k: usize,
    order: &[Edge],
) -> Result<ReductionResult, StructureError> {
    if k == 0 || !has_connectivity(g, k) {
        return Err(StructureError::NotKConnected { k });
    }
    debug_assert!(order.iter().all(|e| g.contains_edge(e)));
    Ok(reduce_in_order(g, k, order))
}

pub fn is_minimally_k_connected(g: &Graph, k: usize) -> bool {
    k >= 1
        && has_connectivity(g, k)
        && g
            .edges()
            .iter()
            .all(|e| !has_connectivity(&g.without_edge(e.u(), e.v()), k))
}

/// Open ear decomposition of a 2-connected graph. The first ear is a cycle
/// (closing edge implied); every later ear is a path whose two distinct
/// endpoints already occur in earlier ears and whose interior is new. A
/// single edge between two old vertices is a one-edge ear. The number of
/// ears is always m - n + 1.
pub fn ear_decomposition(g: &Graph) -> Result<Vec<Vec<usize>>, StructureError> {
    if !has_connectivity(g, 2) {
        return Err(StructureError::NotKConnected { k: 2 });
    }
    let mut ears = vec![initial_cycle(g)];
    let mut covered_vertices: u64 = ears[0].iter().fold(0, |m, &v| m | 1 << v);
    let mut covered_edges = vec![0u64; g.n()];
    let cover = |edges: &mut Vec<u64>, a: usize, b: usize| {
        edges[a] |= 1 << b;
        edges[b] |= 1 << a;
    };
    for i in 0..ears[0].len() {
        let (a, b) = (ears[0][i], ears[0][(i + 1) % ears[0].len()]);
        cover(&mut covered_edges, a, b);
    }
    loop {
        // The lexicographically least uncovered edge touching the partial
        // decomposition; when none is left the decomposition is complete.
        let next = g
            .edges()
            .into_iter()
            .find(|e| {
                covered_edges[e.u()] >> e.v() & 1 == 0
                    && covered_vertices & e.endpoint_mask() != 0
            });
        let Some(e) = next else {
            debug_assert_eq!(covered_vertices.count_ones() as usize, g.n());
            break;
        };
        let (u, v) = if covered_vertices >> e.u() & 1 == 1 {
            (e.u(), e.v())
        } else {
            (e.v(), e.u())
        };
        if covered_vertices >> v & 1 == 1 {
            cover(&mut covered_edges, u, v);
            ears.push(vec![u, v]);
            continue;
        }
        // Walk from v through new vertices back to an old one other than u;
        // G - u is connected, so a breadth-first search must succeed.
        let allowed = !covered_vertices & !(1 << u);
        let mut parent = vec![usize::MAX; g.n()];
        let mut queue = std::collections::VecDeque::from([v]);
        let mut seen = 1u64 << v;
        let mut endpoint = None;
        'bfs: while let Some(x) = queue.pop_front() {
            for w in g.neighbors(x) {
                if covered_vertices >> w & 1 == 1 && w != u {
                    parent[w] = x;
                    endpoint = Some(w);
                    break 'bfs;
                }
                if allowed >> w & 1 == 1 && seen >> w & 1 == 0 {
                    seen |= 1 << w;
                    parent[w] = x;
                    queue.push_back(w);
                }
            }
        }
        let mut ear = vec![endpoint.expect("2-connected graphs admit an open ear")];
        while *ear.last().unwrap() != v {
            ear.push(parent[*ear.last().unwrap()]);
        }
        ear.push(u);
        ear.reverse();
        for w in &ear[1..ear.len() - 1] {
            covered_vertices |= 1 << w;
        }
        for pair in ear.windows(2) {
            cover(&mut covered_edges, pair[0], pair[1]);
        }
        ears.push(ear);
    }
    Ok(ears)
}

/// A cycle through the lexicographically least back edge of a DFS from 0.
fn initial_cycle(g: &Graph) -> Vec<usize> {
    let mut stack = vec![(0usize, usize::MAX)];
    let mut on_stack: Vec<usize> = Vec::new();
    let mut pos = vec![usize::MAX; g.n()];
    let mut done = 0u64;
    while let Some(&(v, parent)) = stack.last() {
        if pos[v] == usize::MAX {
            pos[v] = on_stack.len();
            on_stack.push(v);
        }
        let mut found = None;
        for w in g.neighbors(v) {
            if w == parent {
                continue;
            }
            if pos[w] != usize::MAX && done >> w & 1 == 0 {
                // Back edge: the stack from w to v is a cycle.
                return on_stack[pos[w]..].to_vec();
            }
            if pos[w] == usize::MAX {
                found = Some(w);
                break;
            }
        }
        match found {
            Some(w) => stack.push((w, v)),
            None => {
                stack.pop();
                done |= 1 << v;
                on_stack.pop();
                pos[v] = usize::MAX;
            }
        }
    }
    unreachable!("a 2-connected graph contains a cycle")
}

fn extend_both_ends(g: &Graph, path: &mut Vec<usize>, on_path: &mut u64) {
    loop {
        let head = *path.last().unwrap();
        let cand = g.neighbors_mask(head) & !*on_path;
        if cand != 0 {
            let v = cand.trailing_zeros() as usize;
            path.push(v);
            *on_path |= 1 << v;
            continue;
        }
        let tail = path[0];
        let cand = g.neighbors_mask(tail) & !*on_path;
        if cand != 0 {
            let v = cand.trailing_zeros() as usize;
            path.insert(0, v);
            *on_path |= 1 << v;
            continue;
        }
        return;
    }
}

/// Rotates a maximal path into a cycle through all its vertices, which
/// exists whenever the path has fewer than 2δ edges.
fn rotate_to_cycle(g: &Graph, path: &[usize]) -> Vec<usize> {
    let l = path.len() - 1;
    let i = (0..l)
        .find(|&i| g.has_edge(path[0], path[i + 1]) && g.has_edge(path[l], path[i]))
        .expect("endpoint degrees exceed the path length, so chords must cross");
    let mut cycle = path[..=i].to_vec();
    cycle.extend(path[i + 1..].iter().rev());
    cycle
}

/// A path with at least `min(2δ, n - 1)` edges in a connected graph,
/// returned as its vertex sequence.
pub fn long_path(g: &Graph) -> Result<Vec<usize>, StructureError> {
    if g.n() == 0 || !is_connected(g) {
        return Err(StructureError::NotConnected);
    }
    let target = (2 * g.min_degree()).min(g.n() - 1);
    let mut path = vec![0];
    let mut on_path = 1u64;
    loop {
        extend_both_ends(g, &mut path, &mut on_path);
        if path.len() > target {
            return Ok(path);
        }
        // The path is maximal at both ends yet short, so it rotates into a
        // cycle, and connectivity attaches some outside vertex to it.
        let cycle = rotate_to_cycle(g, &path);
        let (at, u) = cycle
            .iter()
            .enumerate()
            .find_map(|(at, &w)| {
                let out = g.neighbors_mask(w) & !on_path;
                (out != 0).then(|| (at, out.trailing_zeros() as usize))
            })
            .expect("a spanning cycle would already exceed the target");
        path.clear();
        path.push(u);
        path.extend_from_slice(&cycle[at..]);
        path.extend_from_slice(&cycle[..at]);
        on_path |= 1 << u;
    }
}

/// A Hamiltonian cycle of a graph satisfying Dirac's condition 2δ ≥ n,
/// n ≥ 3, as its vertex sequence (closing edge implied).
pub fn hamiltonian_cycle_dirac(g: &Graph) -> Result<Vec<usize>, StructureError> {
    let n = g.n();
    if n < 3 || 2 * g.min_degree() < n {
        return Err(StructureError::DiracUnsatisfied {
            delta: g.min_degree(),
            n,
        });
    }
    // Dirac graphs are connected, so the long path is Hamiltonian and one
    // more rotation closes it.
    let path = long_path(g)?;
    debug_assert_eq!(path.len(), n);
    if g.has_edge(path[0], path[n - 1]) {
        return Ok(path);
    }
    Ok(rotate_to_cycle(g, &path))
}

/// Exhaustive Hamiltonian cycle search, for small graphs where no degree
/// condition applies.
pub fn hamiltonian_cycle_search(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 3 {
        return None;
    }
    assert!(n <= 24, "exhaustive Hamiltonicity is limited to small graphs");
    fn dfs(g: &Graph, path: &mut Vec<usize>, used: u64, full: u64) -> bool {
        let v = *path.last().unwrap();
        if used == full {
            return g.has_edge(v, path[0]);
        }
        let mut cand = g.neighbors_mask(v) & !used;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            path.push(w);
            if dfs(g, path, used | 1 << w, full) {
                return true;
            }
            path.pop();
        }
        false
    }
    let full = !0u64 >> (64 - n);
    let mut path = vec![0];
    dfs(g, &mut path, 1, full).then_some(path)
}

/// The graph families exempted from one or another matching guarantee.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "exception", rename_all = "kebab-case")]
pub enum ExceptionalFamily {
    Cycle { order: usize },
    CompleteOfOrder { order: usize },
    CompleteBipartite { parts: (usize, usize) },
    Tree,
}

pub fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && is_connected(g) && g.vertices().all(|v| g.degree(v) == 2)
}

pub fn is_tree(g: &Graph) -> bool {
    g.n() >= 1 && is_connected(g) && g.m() == g.n() - 1
}

/// The parts (smaller first) when g is a complete bipartite graph with both
/// sides nonempty.
pub fn complete_bipartite_parts(g: &Graph) -> Option<(usize, usize)> {
    if g.n() < 2 || !is_connected(g) {
        return None;
    }
    let (a, b) = bipartition(g)?;
    let (a, b) = (a.count_ones() as usize, b.count_ones() as usize);
    (a >= 1 && b >= 1 && g.m() == a * b).then(|| (a.min(b), a.max(b)))
}

/// Recognizes the exceptional family of a graph, if any. Overlaps resolve
/// toward the more specific family: a triangle is a cycle before it is a
/// complete graph, a star is complete bipartite before it is a tree.
pub fn classify_exception(g: &Graph) -> Option<ExceptionalFamily> {
    if is_cycle(g) {
        return Some(ExceptionalFamily::Cycle { order: g.n() });
    }
    if g.n() >= 1 && is_complete(g) {
        return Some(ExceptionalFamily::CompleteOfOrder { order: g.n() });
    }
    if let Some(parts) = complete_bipartite_parts(g) {
        return Some(ExceptionalFamily::CompleteBipartite { parts });
    }
    if is_tree(g) {
        return Some(ExceptionalFamily::Tree);
    }
    None
}

/// Measurements from auditing a minimally k-connected graph against the
/// classical structure bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaderAudit {
    pub k: usize,
    pub n: usize,
    pub m: usize,
    /// Vertices of degree exactly k and the guaranteed lower bound
    /// ⌈((k-1)n + 2k) / (2k-1)⌉ on how many there must be.
    pub degree_k_count: usize,
    pub degree_k_lower_bound: usize,
    /// k(n-k), checked once n ≥ 3k-2.
    pub edge_bound: Option<usize>,
    /// m = k(n-k); for k ≥ 2 and n ≥ 3k-1 this forces the complete
    /// bipartite extremal graph.
    pub attains_edge_bound: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MaderAuditError {
    #[error("graph is not minimally {k}-connected")]
    NotMinimal { k: usize },
    #[error("structure bound violated: {clause}")]
    ClauseFailed { clause: String },
}

/// Checks a minimally k-connected graph against the structure bounds: the
/// minimum degree is exactly k, the degree-k vertices are plentiful, the
/// higher-degree vertices induce a forest, and for n ≥ 3k-2 the size is at
/// most k(n-k) with K_{k,n-k} the unique extremal graph (k ≥ 2, n ≥ 3k-1).
pub fn mader_property_audit(g: &Graph, k: usize) -> Result<MaderAudit, MaderAuditError> {
    if !is_minimally_k_connected(g, k) {
        return Err(MaderAuditError::NotMinimal { k });
    }
    let fail = |clause: &str| {
        Err(MaderAuditError::ClauseFailed {
            clause: clause.to_string(),
        })
    };
    let (n, m) = (g.n(), g.m());
    if g.min_degree() != k {
        return fail("min-degree");
    }
    let degree_k_count = g.degree_k_vertices(k).len();
    let degree_k_lower_bound = ((k - 1) * n + 2 * k).div_ceil(2 * k - 1);
    if degree_k_count < degree_k_lower_bound {
        return fail("degree-k-count");
    }
    let high: VertexSet = g.vertices().filter(|&v| g.degree(v) > k).collect();
    let (induced, _) = g.induced(&high).expect("degree filter stays in range");
    if !induced.is_forest() {
        return fail("high-degree-forest");
    }
    let mut edge_bound = None;
    let mut attains_edge_bound = None;
    if n >= 3 * k - 2 {
        let bound = k * (n - k);
        edge_bound = Some(bound);
        if m > bound {
            return fail("edge-bound");
        }
        attains_edge_bound = Some(m == bound);
        if k >= 2 && n >= 3 * k - 1 {
            let extremal = complete_bipartite_parts(g) == Some((k, n - k));
            if (m == bound) != extremal {
                return fail("edge-bound-extremal");
            }
        }
    }
    Ok(MaderAudit {
        k,
        n,
        m,
        degree_k_count,
        degree_k_lower_bound,
        edge_bound,
        attains_edge_bound,
    })
}
