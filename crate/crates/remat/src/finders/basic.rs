//! Single-object finders: a removable edge under δ ≥ k+1, a removable
//! vertex under δ ≥ ⌊3k/2⌋, iterated vertex peeling, and the non-separating
//! neighbor of a locally minimal vertex.

use super::{precondition, FinderError};
use crate::connectivity::{has_connectivity, is_connected};
use crate::graph::{Edge, Graph, VertexSet};
use crate::graph6::write_graph6;

fn require_k_connected(g: &Graph, k: usize) -> Result<(), FinderError> {
    if k == 0 {
        return Err(precondition("k must be at least 1"));
    }
    if !has_connectivity(g, k) {
        return Err(precondition(format!("graph is not {k}-connected")));
    }
    Ok(())
}

/// The lexicographically first edge whose deletion keeps `g` k-connected.
/// Such an edge exists whenever δ(g) ≥ k+1.
pub fn find_removable_edge(g: &Graph, k: usize) -> Result<Edge, FinderError> {
    require_k_connected(g, k)?;
    if g.min_degree() < k + 1 {
        return Err(precondition(format!(
            "need δ ≥ {}, found {}",
            k + 1,
            g.min_degree()
        )));
    }
    g.edges()
        .into_iter()
        .find(|e| has_connectivity(&g.without_edge(e.u(), e.v()), k))
        .ok_or(FinderError::NotFound {
            graph6: write_graph6(g),
        })
}

/// The lexicographically first vertex whose deletion keeps `g` k-connected.
/// Guaranteed once δ(g) ≥ ⌊3k/2⌋; n ≥ k+2 keeps the residue large enough to
/// be k-connected at all.
pub fn find_removable_vertex(g: &Graph, k: usize) -> Result<usize, FinderError> {
    require_k_connected(g, k)?;
    if g.min_degree() < 3 * k / 2 {
        return Err(precondition(format!(
            "need δ ≥ ⌊3k/2⌋ = {}, found {}",
            3 * k / 2,
            g.min_degree()
        )));
    }
    if g.n() < k + 2 {
        return Err(precondition(format!(
            "need n ≥ k+2 = {}, found {}",
            k + 2,
            g.n()
        )));
    }
    g.vertices()
        .find(|&x| {
            let (h, _) = g
                .delete_vertices(&VertexSet::from_mask(1 << x))
                .expect("a vertex of g is a valid subset");
            has_connectivity(&h, k)
        })
        .ok_or(FinderError::NotFound {
            graph6: write_graph6(g),
        })
}

/// Peels `t` vertices one at a time, re-checking the degree hypothesis
/// before every step, and returns their original labels. The residue after
/// the whole peel is k-connected.
pub fn peel_removable_vertices(g: &Graph, k: usize, t: usize) -> Result<VertexSet, FinderError> {
    let mut current = g.clone();
    let mut labels: Vec<usize> = (0..g.n()).collect();
    let mut peeled = VertexSet::from_mask(0);
    for step in 0..t {
        if current.min_degree() < 3 * k / 2 {
            return Err(precondition(format!(
                "peeling stalls at step {step}: residual δ = {} < ⌊3k/2⌋ = {}",
                current.min_degree(),
                3 * k / 2
            )));
        }
        let x = find_removable_vertex(&current, k)?;
        peeled.insert(labels[x]);
        let (next, map) = current
            .delete_vertices(&VertexSet::from_mask(1 << x))
            .expect("the found vertex is in range");
        labels = map.into_iter().map(|old| labels[old]).collect();
        current = next;
    }
    Ok(peeled)
}

/// A neighbor `y` of `x` such that `g - {x, y}` is connected. Exists when
/// `g` is 2-connected and `x` is the unique locally minimal vertex: every
/// other vertex has degree ≥ m for some m ≥ 3 while d(x) < m.
pub fn noncut_neighbor(g: &Graph, x: usize) -> Result<usize, FinderError> {
    require_k_connected(g, 2)?;
    if x >= g.n() {
        return Err(precondition(format!("vertex {x} out of range")));
    }
    let floor = g
        .vertices()
        .filter(|&y| y != x)
        .map(|y| g.degree(y))
        .min()
        .expect("2-connected graphs have at least 3 vertices");
    if floor < 3 {
        return Err(precondition(format!(
            "other vertices must all have degree ≥ 3, found {floor}"
        )));
    }
    if g.degree(x) >= floor {
        return Err(precondition(format!(
            "vertex {x} must have strictly minimal degree ({} ≥ {floor})",
            g.degree(x)
        )));
    }
    g.neighbors(x)
        .find(|&y| {
            let (h, _) = g
                .delete_vertices(&VertexSet::from([x, y]))
                .expect("neighbors are in range");
            h.n() == 0 || is_connected(&h)
        })
        .ok_or(FinderError::NotFound {
            graph6: write_graph6(g),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, petersen, wheel, Graph};

    #[test]
    fn k4_yields_its_first_edge() {
        assert_eq!(find_removable_edge(&complete(4), 2).unwrap(), Edge::new(0, 1));
    }

    #[test]
    fn regular_graphs_have_no_removable_edge() {
        // δ = k exactly, so the degree hypothesis fails.
        assert!(matches!(
            find_removable_edge(&petersen(), 3),
            Err(FinderError::PreconditionViolated { .. })
        ));
    }

    #[test]
    fn biclique_edge_is_certified() {
        let g = crate::graph::complete_bipartite(3, 4);
        let e = find_removable_edge(&g, 2).unwrap();
        assert!(has_connectivity(&g.without_edge(e.u(), e.v()), 2));
    }

    #[test]
    fn k5_yields_vertex_zero() {
        assert_eq!(find_removable_vertex(&complete(5), 2).unwrap(), 0);
    }

    #[test]
    fn cycle_degree_is_too_small_for_vertex_removal() {
        assert!(matches!(
            find_removable_vertex(&cycle(6), 2),
            Err(FinderError::PreconditionViolated { .. })
        ));
    }

    #[test]
    fn peeling_k9_three_times_leaves_k6() {
        let peeled = peel_removable_vertices(&complete(9), 2, 3).unwrap();
        assert_eq!(peeled, VertexSet::from([0, 1, 2]));
    }

    #[test]
    fn peeling_stops_when_degrees_run_out() {
        assert!(matches!(
            peel_removable_vertices(&complete(5), 2, 3),
            Err(FinderError::PreconditionViolated { .. })
        ));
    }

    #[test]
    fn noncut_neighbor_on_a_wheel_missing_a_spoke() {
        // Deleting one spoke leaves vertex 0 as the unique degree-2 vertex
        // while the rest of the wheel stays at degree ≥ 3.
        let g = wheel(6).without_edge(0, 5);
        assert_eq!(g.degree(0), 2);
        let y = noncut_neighbor(&g, 0).unwrap();
        let (h, _) = g.delete_vertices(&VertexSet::from([0, y])).unwrap();
        assert!(is_connected(&h));
    }

    #[test]
    fn equal_degrees_violate_the_profile() {
        assert!(matches!(
            noncut_neighbor(&complete(4), 0),
            Err(FinderError::PreconditionViolated { .. })
        ));
        assert!(matches!(
            noncut_neighbor(&cycle(4), 0),
            Err(FinderError::PreconditionViolated { .. })
        ));
    }

    #[test]
    fn removable_vertex_needs_room() {
        // K3 at k = 1 has the degree bound but deleting to K2 then K1 would
        // be fine; shrink further: K2 at k = 1 has no removable vertex.
        let g = Graph::from_edges(2, vec![(0, 1)]).unwrap();
        assert!(matches!(
            find_removable_vertex(&g, 1),
            Err(FinderError::PreconditionViolated { .. })
        ));
    }
}
