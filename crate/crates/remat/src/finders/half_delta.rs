//! Finders for the ⌈(δ+1)/2⌉-matching guarantees: k ≤ 3 under the small
//! degree bounds, and k ≥ 4 under δ ≥ 3k−1.
//!
//! The workhorse route peels a removable vertex set X of target size, Hall-
//! matches X into the rest, and lifts: every x ∈ X keeps enough neighbors
//! outside the matching for the residue to stay k-connected. Where the
//! peeling arithmetic is too tight (the base lemmas), a single peeled
//! vertex plus a smaller matching plus one pendant edge stands in, and the
//! exact search settles anything left over.

use super::search::bounded_exact_search;
use super::two_matching::find_removable_2matching;
use super::{
    certify, greedy_removable_matching, precondition, search_to_outcome, FinderError,
    FinderOutcome, SearchBudget,
};
use super::{find_one_removable_minhalf, find_removable_vertex, peel_removable_vertices};
use crate::connectivity::{has_connectivity, is_complete};
use crate::graph::{Edge, Graph, Matching, VertexSet};
use crate::matching::{matching_covering, HallOutcome};
use crate::structure::{classify_exception, ExceptionalFamily};

/// A k-removable ⌈(δ+1)/2⌉-matching for k ∈ {1, 2, 3}, or the theorem's
/// exception: the cycle at k = 1, and K_{δ+1} for even δ.
pub fn find_half_delta_matching(
    g: &Graph,
    k: usize,
    budget: &SearchBudget,
) -> Result<FinderOutcome, FinderError> {
    if !(1..=3).contains(&k) {
        return Err(precondition(format!("k must be 1, 2, or 3, got {k}")));
    }
    let floor = if k == 3 { 5 } else { k + 1 };
    if !has_connectivity(g, k) {
        return Err(precondition(format!("graph is not {k}-connected")));
    }
    if g.min_degree() < floor {
        return Err(precondition(format!(
            "need δ ≥ {floor}, found {}",
            g.min_degree()
        )));
    }
    let delta = g.min_degree();
    if k == 1 && delta == 2 {
        if let Some(family @ ExceptionalFamily::Cycle { .. }) = classify_exception(g) {
            return Ok(FinderOutcome::Exception(family));
        }
    }
    half_delta_engine(g, k, budget)
}

/// The same guarantee for k ≥ 4, under δ ≥ 3k−1.
pub fn find_matching_high_k(
    g: &Graph,
    k: usize,
    budget: &SearchBudget,
) -> Result<FinderOutcome, FinderError> {
    if k < 4 {
        return Err(precondition(format!("k must be at least 4, got {k}")));
    }
    if !has_connectivity(g, k) {
        return Err(precondition(format!("graph is not {k}-connected")));
    }
    if g.min_degree() < 3 * k - 1 {
        return Err(precondition(format!(
            "need δ ≥ 3k−1 = {}, found {}",
            3 * k - 1,
            g.min_degree()
        )));
    }
    half_delta_engine(g, k, budget)
}

fn half_delta_engine(
    g: &Graph,
    k: usize,
    budget: &SearchBudget,
) -> Result<FinderOutcome, FinderError> {
    let delta = g.min_degree();
    let target = (delta + 1).div_ceil(2);
    if is_complete(g) {
        // K_{δ+1}: for even δ no ⌈(δ+1)/2⌉-matching exists at all; for odd
        // δ the perfect matching works and leaves K_{δ+1} minus a perfect
        // matching, of connectivity δ−1 ≥ k.
        if delta.is_multiple_of(2) {
            return Ok(FinderOutcome::Exception(ExceptionalFamily::CompleteOfOrder {
                order: delta + 1,
            }));
        }
        let prefix: Vec<Edge> = (0..target).map(|i| Edge::new(2 * i, 2 * i + 1)).collect();
        if let Some(m) = certify(g, k, &prefix, target) {
            return Ok(FinderOutcome::Matching(m));
        }
    }
    if k == 1 {
        if delta >= 3 {
            // min{⌊n/2⌋, δ} ≥ target on non-complete graphs, so the
            // 1-removable finder already covers this; trim to size.
            let outcome = find_one_removable_minhalf(g, budget)?;
            let m = outcome
                .matching()
                .expect("the minhalf finder returns no exceptions")
                .truncated(target);
            return match certify(g, k, m.edges(), target) {
                Some(m) => Ok(FinderOutcome::Matching(m)),
                None => search_to_outcome(g, bounded_exact_search(g, k, target, budget)),
            };
        }
        // δ = 2 off the cycle family: the target is just 2.
        if let Some(m) = greedy_removable_matching(g, k, &[], target) {
            return Ok(FinderOutcome::Matching(m));
        }
        return search_to_outcome(g, bounded_exact_search(g, k, target, budget));
    }
    if target == 2 {
        return find_removable_2matching(g, k, budget);
    }
    // Peel X with |X| = target, then Hall-match X into G − X. Viable while
    // the residual degree stays above the vertex-removal bound, that is
    // ⌈δ/2⌉ ≥ ⌊3k/2⌋.
    if delta.div_ceil(2) >= 3 * k / 2 {
        if let Ok(x) = peel_removable_vertices(g, k, target) {
            if let Some(m) = hall_match_across(g, k, &x, target) {
                return Ok(FinderOutcome::Matching(m));
            }
        }
    }
    // Base route: one peeled vertex, a (target−1)-matching in the residue,
    // and a pendant edge back at the peeled vertex.
    if let Some(m) = peel_vertex_then_extend(g, k, target, budget) {
        return Ok(FinderOutcome::Matching(m));
    }
    if let Some(m) = greedy_removable_matching(g, k, &[], target) {
        return Ok(FinderOutcome::Matching(m));
    }
    search_to_outcome(g, bounded_exact_search(g, k, target, budget))
}

/// Hall-matches the peeled set into the rest of the graph and certifies the
/// lift.
fn hall_match_across(g: &Graph, k: usize, x: &VertexSet, target: usize) -> Option<Matching> {
    let rest = VertexSet::from_mask(VertexSet::full(g.n()).mask() & !x.mask());
    let (b, map) = g
        .bipartite_between(x, &rest)
        .expect("the peeled set and its complement partition the graph");
    let side: VertexSet = (0..b.n()).filter(|&v| x.contains(map[v])).collect();
    match matching_covering(&b, &side) {
        Ok(HallOutcome::Covering(m)) => certify(g, k, m.translate(&map).edges(), target),
        _ => None,
    }
}

/// The base-lemma shape shared by δ = 4 (k = 2) and δ ∈ {5, 6} (k = 3):
/// remove one vertex x, find a (target−1)-matching in what is left, and
/// finish with an edge at x.
fn peel_vertex_then_extend(
    g: &Graph,
    k: usize,
    target: usize,
    budget: &SearchBudget,
) -> Option<Matching> {
    let x = find_removable_vertex(g, k).ok()?;
    let (h, map) = g
        .delete_vertices(&VertexSet::from_mask(1 << x))
        .expect("the removable vertex is in range");
    let inner = greedy_removable_matching(&h, k, &[], target - 1).or_else(|| {
        match bounded_exact_search(&h, k, target - 1, budget) {
            super::SearchOutcome::Found(m) => Some(m),
            _ => None,
        }
    })?;
    let lifted = inner.translate(&map);
    let taken = lifted.vertices();
    for y in g.neighbors(x) {
        if taken.contains(y) {
            continue;
        }
        let mut edges = lifted.edges().to_vec();
        edges.push(Edge::new(x, y));
        if let Some(m) = certify(g, k, &edges, target) {
            return Some(m);
        }
    }
    None
}
