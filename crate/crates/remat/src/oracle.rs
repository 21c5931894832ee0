//! Exact maximum-removable-matching oracle.
//!
//! For a k-connected graph the oracle reports r, the largest size of a
//! k-removable matching, by branch and bound over normalized edges: each
//! edge is included or excluded in lexicographic order, a branch dies as
//! soon as the partial deletion already fails k-connectivity (deleting
//! more edges never restores it), and an admissible count of still-placeable
//! disjoint edges prunes branches that cannot beat the incumbent. The empty
//! matching is always removable, so r = 0 is the floor; k-regular graphs
//! sit exactly there since deleting any edge drops a degree below k.

use serde::Serialize;
use thiserror::Error;

use crate::connectivity::has_connectivity;
use crate::finders::search::Searcher;
use crate::finders::{certify, SearchBudget};
use crate::graph::{Graph, Matching};

/// Largest vertex count the oracle accepts by default; exhaustive search
/// above this is not honest interactive-use territory.
pub const ORACLE_GUARD: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph is not {k}-connected, so k-removability is undefined for it")]
    NotKConnected { k: usize },
    #[error("{n} vertices exceeds the oracle guard of {guard}")]
    TooLarge { n: usize, guard: usize },
}

/// Outcome of an exhaustive (or budget-cut) removable-matching maximization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    /// Size of the largest k-removable matching found.
    pub r: usize,
    /// A certified matching of size `r` (empty when r = 0).
    pub witness: Matching,
    /// True when the search space was exhausted; false means the budget ran
    /// out and `r` is only a lower bound.
    pub exhaustive: bool,
}

/// Computes r_k(g) exactly, within `budget`.
pub fn max_removable_matching(
    g: &Graph,
    k: usize,
    budget: &SearchBudget,
) -> Result<OracleResult, OracleError> {
    if g.n() > ORACLE_GUARD {
        return Err(OracleError::TooLarge {
            n: g.n(),
            guard: ORACLE_GUARD,
        });
    }
    if !has_connectivity(g, k) {
        return Err(OracleError::NotKConnected { k });
    }
    let (best, exhaustive) = Searcher::new(g, k, budget).maximize(g);
    let r = best.len();
    let witness = certify(g, k, &best, r).expect("maximized matching certifies");
    Ok(OracleResult {
        r,
        witness,
        exhaustive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{enumerate_connected_graphs, EnumFilter};
    use crate::graph::{complete, complete_bipartite, cycle, petersen, star, Edge};

    // enumerates every matching outright and tests each one; the graphs
    // are tiny, so no pruning is wanted in the cross-check
    fn naive_r(g: &Graph, k: usize) -> usize {
        fn all_matchings(edges: &[Edge], idx: usize, used: u64, chosen: &mut Vec<Edge>, out: &mut Vec<Vec<Edge>>) {
            out.push(chosen.clone());
            for (offset, e) in edges[idx..].iter().enumerate() {
                if used & e.endpoint_mask() == 0 {
                    chosen.push(*e);
                    all_matchings(edges, idx + offset + 1, used | e.endpoint_mask(), chosen, out);
                    chosen.pop();
                }
            }
        }
        let edges = g.edges();
        let mut sets = Vec::new();
        all_matchings(&edges, 0, 0, &mut Vec::new(), &mut sets);
        sets.into_iter()
            .filter(|m| has_connectivity(&g.delete_edges(m).unwrap(), k))
            .map(|m| m.len())
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn known_values() {
        let budget = SearchBudget::default();
        assert_eq!(max_removable_matching(&complete(5), 2, &budget).unwrap().r, 2);
        assert_eq!(max_removable_matching(&cycle(6), 1, &budget).unwrap().r, 1);
        assert_eq!(max_removable_matching(&complete(7), 3, &budget).unwrap().r, 3);
    }

    #[test]
    fn regular_graphs_sit_at_zero() {
        let budget = SearchBudget::default();
        let res = max_removable_matching(&petersen(), 3, &budget).unwrap();
        assert_eq!(res.r, 0);
        assert!(res.exhaustive);
        assert!(res.witness.edges().is_empty());
    }

    #[test]
    fn crown_of_k44_is_three_connected() {
        let budget = SearchBudget::default();
        let res = max_removable_matching(&complete_bipartite(4, 4), 2, &budget).unwrap();
        assert_eq!(res.r, 4);
        assert!(res.exhaustive);
    }

    #[test]
    fn agrees_with_naive_maximum_on_small_graphs() {
        let budget = SearchBudget::default();
        for n in 1..=6 {
            for g in enumerate_connected_graphs(n, &EnumFilter::default()).unwrap() {
                for k in 1..=3 {
                    if !has_connectivity(&g, k) {
                        continue;
                    }
                    let res = max_removable_matching(&g, k, &budget).unwrap();
                    assert!(res.exhaustive);
                    assert_eq!(res.r, naive_r(&g, k), "n = {n}, k = {k}");
                }
            }
        }
    }

    #[test]
    fn budget_cut_reports_lower_bound() {
        let tight = SearchBudget {
            node_limit: 1,
            ..SearchBudget::default()
        };
        let res = max_removable_matching(&complete(7), 1, &tight).unwrap();
        assert!(!res.exhaustive);
        assert_eq!(res.r, res.witness.edges().len());
    }

    #[test]
    fn preconditions_are_enforced() {
        let budget = SearchBudget::default();
        assert_eq!(
            max_removable_matching(&cycle(6), 3, &budget),
            Err(OracleError::NotKConnected { k: 3 })
        );
        assert_eq!(
            max_removable_matching(&star(14), 1, &budget),
            Err(OracleError::TooLarge { n: 15, guard: 14 })
        );
    }
}
