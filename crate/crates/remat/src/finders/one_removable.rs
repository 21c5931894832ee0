//! 1-removable matchings: a δ-matching from a long path when n ≥ 2δ, and
//! the min{⌊n/2⌋, δ} guarantee with its Hamiltonian small-order route.

use super::search::bounded_exact_search;
use super::{
    certify, greedy_removable_matching, precondition, search_to_outcome, FinderError,
    FinderOutcome, SearchBudget,
};
use crate::graph::{Edge, Graph};
use crate::structure::{hamiltonian_cycle_dirac, long_path, StructureError};

/// A 1-removable matching of exactly `t` edges, for connected graphs with
/// δ ≥ t ≥ 3 and n ≥ 2t. The long-path prefix usually works as is; when its
/// removal disconnects, pair swaps and greedy repair cover the gap before
/// the exact search does.
pub fn find_one_removable_delta(
    g: &Graph,
    t: usize,
    budget: &SearchBudget,
) -> Result<FinderOutcome, FinderError> {
    if t < 3 {
        return Err(precondition(format!("target must be at least 3, got {t}")));
    }
    if g.min_degree() < t {
        return Err(precondition(format!(
            "need δ ≥ {t}, found {}",
            g.min_degree()
        )));
    }
    if g.n() < 2 * t {
        return Err(precondition(format!(
            "need n ≥ {}, found {}",
            2 * t,
            g.n()
        )));
    }
    let path = long_path(g).map_err(|_| precondition("graph is not connected"))?;
    debug_assert!(path.len() >= 2 * t, "the long path bound covers 2t vertices");
    let prefix: Vec<Edge> = (0..t).map(|i| Edge::new(path[2 * i], path[2 * i + 1])).collect();
    if let Some(m) = certify(g, 1, &prefix, t) {
        return Ok(FinderOutcome::Matching(m));
    }
    // Swap two path edges for their cross pairs where those exist; this is
    // what reconnects the split when the prefix fails.
    for i in 0..t {
        for j in i + 1..t {
            let (a, b) = (prefix[i], prefix[j]);
            for (c, d) in [
                (Edge::new(a.u(), b.u()), Edge::new(a.v(), b.v())),
                (Edge::new(a.u(), b.v()), Edge::new(a.v(), b.u())),
            ] {
                if !g.contains_edge(&c) || !g.contains_edge(&d) {
                    continue;
                }
                let mut swapped: Vec<Edge> = prefix
                    .iter()
                    .copied()
                    .filter(|e| *e != a && *e != b)
                    .collect();
                swapped.extend([c, d]);
                if let Some(m) = certify(g, 1, &swapped, t) {
                    return Ok(FinderOutcome::Matching(m));
                }
            }
        }
    }
    if let Some(m) = greedy_removable_matching(g, 1, &prefix, t) {
        return Ok(FinderOutcome::Matching(m));
    }
    search_to_outcome(g, bounded_exact_search(g, 1, t, budget))
}

/// A 1-removable matching of size min{⌊n/2⌋, δ} in a connected graph with
/// δ ≥ 3. For n ≥ 2δ this is the δ-matching above; otherwise Dirac's
/// condition holds, and alternate edges of a Hamiltonian cycle work because
/// a split of G minus a matching would need two components of order ≥ δ.
pub fn find_one_removable_minhalf(
    g: &Graph,
    budget: &SearchBudget,
) -> Result<FinderOutcome, FinderError> {
    if g.min_degree() < 3 {
        return Err(precondition(format!(
            "need δ ≥ 3, found {}",
            g.min_degree()
        )));
    }
    let delta = g.min_degree();
    if g.n() >= 2 * delta {
        return find_one_removable_delta(g, delta, budget);
    }
    let target = g.n() / 2;
    let cycle = match hamiltonian_cycle_dirac(g) {
        Ok(c) => c,
        Err(StructureError::NotConnected) => {
            return Err(precondition("graph is not connected"))
        }
        Err(e) => unreachable!("n < 2δ satisfies Dirac: {e}"),
    };
    let alternate: Vec<Edge> = (0..target)
        .map(|i| Edge::new(cycle[2 * i], cycle[2 * i + 1]))
        .collect();
    if let Some(m) = certify(g, 1, &alternate, target) {
        return Ok(FinderOutcome::Matching(m));
    }
    search_to_outcome(g, bounded_exact_search(g, 1, target, budget))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::is_connected;
    use crate::graph::{complete, complete_bipartite, Graph, Matching};

    fn unwrap_matching(outcome: FinderOutcome) -> Matching {
        match outcome {
            FinderOutcome::Matching(m) => m,
            FinderOutcome::Exception(e) => panic!("unexpected exception {e:?}"),
        }
    }

    fn assert_one_removable(g: &Graph, m: &Matching, size: usize) {
        assert_eq!(m.len(), size);
        assert!(is_connected(&g.delete_matching(m).unwrap()));
    }

    #[test]
    fn bicliques_and_completes_yield_delta_matchings() {
        let g = complete_bipartite(3, 5);
        let m = unwrap_matching(find_one_removable_delta(&g, 3, &SearchBudget::default()).unwrap());
        assert_one_removable(&g, &m, 3);

        let g = complete(6);
        let m = unwrap_matching(find_one_removable_delta(&g, 3, &SearchBudget::default()).unwrap());
        assert_one_removable(&g, &m, 3);
    }

    /// Two K4 blocks joined by a 3-matching: removing the whole bridge
    /// would disconnect, so the finder has to route around it.
    #[test]
    fn bridged_blocks_are_routed_around() {
        let mut edges = vec![];
        for i in 0..4 {
            for j in i + 1..4 {
                edges.push((i, j));
                edges.push((i + 4, j + 4));
            }
        }
        edges.extend([(0, 4), (1, 5), (2, 6)]);
        let g = Graph::from_edges(8, edges).unwrap();
        assert_eq!(g.min_degree(), 3);
        let bridge = [Edge::new(0, 4), Edge::new(1, 5), Edge::new(2, 6)];
        assert!(!is_connected(
            &g.delete_edges(&bridge).unwrap()
        ));
        let m = unwrap_matching(find_one_removable_delta(&g, 3, &SearchBudget::default()).unwrap());
        assert_one_removable(&g, &m, 3);
    }

    #[test]
    fn preconditions_are_checked() {
        assert!(matches!(
            find_one_removable_delta(&complete(5), 3, &SearchBudget::default()),
            Err(FinderError::PreconditionViolated { .. })
        ));
        assert!(matches!(
            find_one_removable_minhalf(&complete_bipartite(2, 2), &SearchBudget::default()),
            Err(FinderError::PreconditionViolated { .. })
        ));
    }

    #[test]
    fn minhalf_picks_the_hamiltonian_route_on_dense_graphs() {
        // K7: n = 7 < 2δ = 12, target min{3, 6} = 3.
        let g = complete(7);
        let m = unwrap_matching(find_one_removable_minhalf(&g, &SearchBudget::default()).unwrap());
        assert_one_removable(&g, &m, 3);
    }

    #[test]
    fn minhalf_delegates_on_sparse_graphs() {
        // K_{3,3}: n = 6 = 2δ, target min{3, 3} = 3, a perfect matching.
        let g = complete_bipartite(3, 3);
        let m = unwrap_matching(find_one_removable_minhalf(&g, &SearchBudget::default()).unwrap());
        assert_one_removable(&g, &m, 3);
    }

    #[test]
    fn biclique_sharpness_at_delta_four() {
        // K_{4,4} gets its 4-matching; no 5-matching exists at all.
        let g = complete_bipartite(4, 4);
        let m = unwrap_matching(find_one_removable_minhalf(&g, &SearchBudget::default()).unwrap());
        assert_one_removable(&g, &m, 4);
        assert_eq!(crate::matching::max_matching_size(&g).unwrap(), 4);
    }
}
