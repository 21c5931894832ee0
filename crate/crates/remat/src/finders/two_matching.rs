//! The 2-matching finder: every k-connected graph with δ ≥ k+1 has a
//! k-removable 2-matching, except the cycle at k = 1.

use super::search::bounded_exact_search;
use super::{certify, precondition, search_to_outcome, FinderError, FinderOutcome, SearchBudget};
use crate::connectivity::has_connectivity;
use crate::graph::Graph;
use crate::structure::{classify_exception, minimally_k_connected_reduction, ExceptionalFamily};

/// Finds a k-removable 2-matching, or recognizes the cycle exception at
/// k = 1. Candidate pairs come from the edges peeled off by the minimal
/// reduction, since each of those was removable at the moment it left; the
/// exact search covers whatever the candidates miss.
pub fn find_removable_2matching(
    g: &Graph,
    k: usize,
    budget: &SearchBudget,
) -> Result<FinderOutcome, FinderError> {
    if k == 0 {
        return Err(precondition("k must be at least 1"));
    }
    if !has_connectivity(g, k) {
        return Err(precondition(format!("graph is not {k}-connected")));
    }
    if g.min_degree() < k + 1 {
        return Err(precondition(format!(
            "need δ ≥ {}, found {}",
            k + 1,
            g.min_degree()
        )));
    }
    if k == 1 {
        if let Some(family @ ExceptionalFamily::Cycle { .. }) = classify_exception(g) {
            return Ok(FinderOutcome::Exception(family));
        }
    }
    let reduction = minimally_k_connected_reduction(g, k).expect("connectivity checked above");
    let peeled = reduction.removed;
    for (i, &a) in peeled.iter().enumerate() {
        for &b in &peeled[i + 1..] {
            if a.disjoint_from(&b) {
                if let Some(m) = certify(g, k, &[a, b], 2) {
                    return Ok(FinderOutcome::Matching(m));
                }
            }
        }
    }
    for &a in &peeled {
        for b in g.edges() {
            if a.disjoint_from(&b) {
                if let Some(m) = certify(g, k, &[a, b], 2) {
                    return Ok(FinderOutcome::Matching(m));
                }
            }
        }
    }
    search_to_outcome(g, bounded_exact_search(g, k, 2, budget))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, petersen, wheel, Matching};
    use crate::structure::ExceptionalFamily;

    fn unwrap_matching(outcome: FinderOutcome) -> Matching {
        match outcome {
            FinderOutcome::Matching(m) => m,
            FinderOutcome::Exception(e) => panic!("unexpected exception {e:?}"),
        }
    }

    #[test]
    fn cycles_are_the_stated_exception() {
        let outcome = find_removable_2matching(&cycle(8), 1, &SearchBudget::default()).unwrap();
        assert_eq!(
            outcome,
            FinderOutcome::Exception(ExceptionalFamily::Cycle { order: 8 })
        );
    }

    #[test]
    fn k4_and_k5_have_two_matchings() {
        for (g, k) in [(complete(4), 2), (complete(5), 2)] {
            let m = unwrap_matching(
                find_removable_2matching(&g, k, &SearchBudget::default()).unwrap(),
            );
            assert_eq!(m.len(), 2);
            assert!(has_connectivity(&g.delete_matching(&m).unwrap(), k));
        }
    }

    #[test]
    fn wheels_at_k1_are_not_cycles() {
        let g = wheel(7);
        let m =
            unwrap_matching(find_removable_2matching(&g, 1, &SearchBudget::default()).unwrap());
        assert!(has_connectivity(&g.delete_matching(&m).unwrap(), 1));
    }

    #[test]
    fn degree_bound_is_enforced() {
        // The Petersen graph is 3-regular: δ = k fails the hypothesis.
        assert!(matches!(
            find_removable_2matching(&petersen(), 3, &SearchBudget::default()),
            Err(FinderError::PreconditionViolated { .. })
        ));
    }
}
