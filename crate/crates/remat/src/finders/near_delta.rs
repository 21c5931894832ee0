//! The 2-removable near-δ matching: every 2-connected graph with δ ≥ 5 and
//! n ≥ 2(δ−2) has a 2-removable (δ−3)-matching, improving to δ−2 when δ is
//! even.
//!
//! The engine aims for δ−2 edges outright: a 1-removable (δ−2)-matching
//! whose removal usually stays 2-connected. When it does not, the repair
//! follows the proof's machinery: shrink to a minimal sub-matching that
//! still breaks 2-connectivity, take the resulting cut vertex, contract
//! everything behind it, and re-match inside each contracted piece, using
//! the non-separating neighbor where the contracted vertex runs out of
//! degree. Whatever the repair returns is recombined greedily and certified;
//! the exact search backs the whole thing.

use super::search::bounded_exact_search;
use super::{
    certify, find_half_delta_matching, greedy_removable_matching, noncut_neighbor, precondition,
    search_to_outcome, FinderError, FinderOutcome, SearchBudget,
};
use crate::connectivity::{components, cut_vertices, has_connectivity};
use crate::graph::{Edge, Graph, Matching, VertexSet};

pub fn find_two_removable_near_delta(
    g: &Graph,
    budget: &SearchBudget,
) -> Result<FinderOutcome, FinderError> {
    if !has_connectivity(g, 2) {
        return Err(precondition("graph is not 2-connected"));
    }
    let delta = g.min_degree();
    if delta < 5 {
        return Err(precondition(format!("need δ ≥ 5, found {delta}")));
    }
    if g.n() < 2 * (delta - 2) {
        return Err(precondition(format!(
            "need n ≥ 2(δ−2) = {}, found {}",
            2 * (delta - 2),
            g.n()
        )));
    }
    let target = if delta.is_multiple_of(2) { delta - 2 } else { delta - 3 };
    // A (δ−2)-matching serves both parities once trimmed.
    for want in [delta - 2, target] {
        if let Some(m) = near_delta_candidates(g, want, budget) {
            return Ok(FinderOutcome::Matching(m.truncated(target)));
        }
        if want == target {
            break;
        }
    }
    search_to_outcome(g, bounded_exact_search(g, 2, target, budget))
}

fn near_delta_candidates(g: &Graph, want: usize, budget: &SearchBudget) -> Option<Matching> {
    let seed = one_removable_seed(g, want, budget);
    if let Some(seed) = &seed {
        if let Some(m) = certify(g, 2, seed.edges(), want) {
            return Some(m);
        }
        if let Some(m) = contraction_repair(g, seed, want, budget) {
            return Some(m);
        }
        if let Some(m) = greedy_removable_matching(g, 2, seed.edges(), want) {
            return Some(m);
        }
    }
    greedy_removable_matching(g, 2, &[], want)
}

/// A (want)-matching that keeps the graph connected, from the 1-removable
/// finder when its preconditions fit, else greedily.
fn one_removable_seed(g: &Graph, want: usize, budget: &SearchBudget) -> Option<Matching> {
    if want >= 3 && g.min_degree() >= want && g.n() >= 2 * want {
        if let Ok(FinderOutcome::Matching(m)) =
            super::find_one_removable_delta(g, want, budget)
        {
            return Some(m);
        }
    }
    greedy_removable_matching(g, 1, &[], want)
}

/// The proof-shaped repair. `seed` keeps the graph connected but some cut
/// vertex appears; contract each side of it (together with the cut vertex)
/// and ask the half-δ finder for edges living inside the other side, taking
/// a detour through `noncut_neighbor` when the contracted vertex is too
/// poor. The pieces rarely fill the quota alone, so the greedy pass tops
/// them up.
fn contraction_repair(
    g: &Graph,
    seed: &Matching,
    want: usize,
    budget: &SearchBudget,
) -> Option<Matching> {
    // Minimal sub-matching still breaking 2-connectivity.
    let mut kept: Vec<Edge> = seed.edges().to_vec();
    let breaks = |edges: &[Edge]| {
        let rest = g
            .delete_edges(edges)
            .expect("sub-matching edges are present");
        !has_connectivity(&rest, 2)
    };
    if !breaks(&kept) {
        return None;
    }
    let mut i = 0;
    while i < kept.len() {
        let mut shrunk = kept.clone();
        shrunk.remove(i);
        if breaks(&shrunk) {
            kept = shrunk;
        } else {
            i += 1;
        }
    }
    let broken = g.delete_edges(&kept).expect("sub-matching edges are present");
    let x = cut_vertices(&broken).min()?;
    let (without_x, wmap) = broken
        .delete_vertices(&VertexSet::from_mask(1 << x))
        .expect("cut vertex is in range");
    let mut pieces: Vec<Edge> = Vec::new();
    for comp in components(&without_x) {
        let side: VertexSet = comp.iter().map(|v| wmap[v]).collect();
        let hull: VertexSet = g
            .vertices()
            .filter(|&v| !side.contains(v))
            .collect();
        if hull.len() == g.n() || side.len() < 2 {
            continue;
        }
        let (contracted, z, map) = g
            .contract_subset(&hull)
            .expect("a component's complement is a proper nonempty subset");
        pieces.extend(matching_inside(&contracted, z, &map, budget));
    }
    if pieces.is_empty() {
        return None;
    }
    pieces.sort();
    greedy_removable_matching(g, 2, &pieces, want)
}

/// Edges of a removable matching of the contracted graph that avoid the
/// contracted vertex `z`, translated back to host labels.
fn matching_inside(
    contracted: &Graph,
    z: usize,
    map: &[usize],
    budget: &SearchBudget,
) -> Vec<Edge> {
    if !has_connectivity(contracted, 2) {
        return Vec::new();
    }
    let found = if contracted.min_degree() >= 3 {
        find_half_delta_matching(contracted, 2, budget).ok()
    } else {
        None
    };
    let found = found.or_else(|| {
        // The contracted vertex may be the poor one; the lemma's neighbor
        // swallows it and the half-δ finder gets a second chance.
        let y = noncut_neighbor(contracted, z).ok()?;
        let (merged, z2, map2) = contracted
            .contract_subset(&VertexSet::from([z, y]))
            .ok()?;
        if !has_connectivity(&merged, 2) || merged.min_degree() < 3 {
            return None;
        }
        let inner = find_half_delta_matching(&merged, 2, budget).ok()?;
        let m = inner.matching()?;
        let edges: Vec<Edge> = m
            .edges()
            .iter()
            .filter(|e| e.u() != z2 && e.v() != z2)
            .map(|e| Edge::new(map2[e.u()], map2[e.v()]))
            .collect();
        Some(FinderOutcome::Matching(Matching::new(edges).ok()?))
    });
    match found {
        Some(FinderOutcome::Matching(m)) => m
            .edges()
            .iter()
            .filter(|e| e.u() != z && e.v() != z)
            .map(|e| Edge::new(map[e.u()], map[e.v()]))
            .collect(),
        _ => Vec::new(),
    }
}
