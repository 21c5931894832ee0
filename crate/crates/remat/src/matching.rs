//! Bipartite matching with Hall certificates, and exact maximum matching
//! size.
//!
//! `matching_covering` either saturates the given side or returns a
//! deficient set witnessing Hall's condition failing. The general maximum
//! matching size is bipartite augmenting paths when the graph is bipartite
//! and a guarded exhaustive bitmask DP otherwise; removable-matching sizes
//! stay tiny, so no blossom machinery is needed.

use std::collections::HashMap;

use crate::graph::{Graph, Matching, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatchingError {
    #[error("graph is not bipartite with the given set as one side")]
    NotBipartiteWithPart,
    #[error("maximum matching on a non-bipartite graph of order {n} exceeds the guard {guard}")]
    TooLarge { n: usize, guard: usize },
}

/// Outcome of trying to saturate one side of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HallOutcome {
    /// A matching covering every vertex of the requested side.
    Covering(Matching),
    /// A subset `S` of the requested side with `|N(S)| < |S|`.
    Deficient(VertexSet),
}

fn kuhn_augment(g: &Graph, v: usize, mate: &mut [usize], visited: &mut u64) -> bool {
    for w in g.neighbors(v) {
        if *visited >> w & 1 == 1 {
            continue;
        }
        *visited |= 1 << w;
        if mate[w] == usize::MAX || kuhn_augment(g, mate[w], mate, visited) {
            mate[w] = v;
            mate[v] = w;
            return true;
        }
    }
    false
}

/// Tries to match every vertex of `x` into the other side of `g`, which must
/// be bipartite with `x` as one side (every edge crosses `x`).
pub fn matching_covering(g: &Graph, x: &VertexSet) -> Result<HallOutcome, MatchingError> {
    assert!(
        x.iter().all(|v| v < g.n()),
        "side contains out-of-range vertices"
    );
    for e in g.edges() {
        if x.contains(e.u()) == x.contains(e.v()) {
            return Err(MatchingError::NotBipartiteWithPart);
        }
    }
    let mut mate = vec![usize::MAX; g.n()];
    for v in x.iter() {
        let mut visited = 0u64;
        kuhn_augment(g, v, &mut mate, &mut visited);
    }
    if x.iter().all(|v| mate[v] != usize::MAX) {
        let edges = x
            .iter()
            .map(|v| crate::graph::Edge::new(v, mate[v]))
            .collect();
        return Ok(HallOutcome::Covering(
            Matching::new(edges).expect("mates are pairwise distinct"),
        ));
    }
    // König-style witness: the side vertices reachable from an unmatched one
    // by alternating paths form a deficient set.
    let mut s: u64 = x.iter().filter(|&v| mate[v] == usize::MAX).fold(0, |m, v| m | 1 << v);
    let mut queue: Vec<usize> = VertexSet::from_mask(s).iter().collect();
    while let Some(v) = queue.pop() {
        for w in g.neighbors(v) {
            // At maximality every neighbor is matched; step to its partner.
            let p = mate[w];
            debug_assert_ne!(p, usize::MAX, "an augmenting path was missed");
            if s >> p & 1 == 0 {
                s |= 1 << p;
                queue.push(p);
            }
        }
    }
    Ok(HallOutcome::Deficient(VertexSet::from_mask(s)))
}

/// 2-coloring per component; `None` when an odd cycle exists.
pub(crate) fn bipartition(g: &Graph) -> Option<(u64, u64)> {
    let mut color = vec![u8::MAX; g.n()];
    for root in g.vertices() {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        let mut queue = vec![root];
        while let Some(v) = queue.pop() {
            for w in g.neighbors(v) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    queue.push(w);
                } else if color[w] == color[v] {
                    return None;
                }
            }
        }
    }
    let side: u64 = g
        .vertices()
        .filter(|&v| color[v] == 0)
        .fold(0, |m, v| m | 1 << v);
    let full = if g.n() == 0 { 0 } else { !0u64 >> (64 - g.n()) };
    Some((side, full & !side))
}

pub const NONBIPARTITE_GUARD: usize = 20;

fn max_matching_dp(g: &Graph, mask: u64, memo: &mut HashMap<u64, u8>) -> u8 {
    if mask == 0 {
        return 0;
    }
    if let Some(&v) = memo.get(&mask) {
        return v;
    }
    let v = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << v);
    let mut best = max_matching_dp(g, rest, memo);
    let mut nbrs = g.neighbors_mask(v) & rest;
    while nbrs != 0 {
        let u = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        best = best.max(1 + max_matching_dp(g, rest & !(1 << u), memo));
    }
    memo.insert(mask, best);
    best
}

/// The matching number α'(g).
pub fn max_matching_size(g: &Graph) -> Result<usize, MatchingError> {
    if let Some((a, _)) = bipartition(g) {
        let side = VertexSet::from_mask(a);
        let mut mate = vec![usize::MAX; g.n()];
        let mut size = 0;
        for v in side.iter() {
            let mut visited = 0u64;
            if kuhn_augment(g, v, &mut mate, &mut visited) {
                size += 1;
            }
        }
        return Ok(size);
    }
    if g.n() > NONBIPARTITE_GUARD {
        return Err(MatchingError::TooLarge {
            n: g.n(),
            guard: NONBIPARTITE_GUARD,
        });
    }
    let full = !0u64 >> (64 - g.n());
    Ok(max_matching_dp(g, full, &mut HashMap::new()) as usize)
}
