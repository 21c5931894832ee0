//! Constructive finders, one per matching theorem. Each finder first plays
//! the cheap candidate moves its proof suggests, certifying every candidate
//! by an explicit connectivity re-test, and falls back to a bounded exact
//! search, so it is total on its precondition domain. A finder that comes
//! back empty-handed after an exhaustive search has found something better
//! than a bug: a counterexample candidate, reported with its graph6 word.

mod basic;
mod half_delta;
mod near_delta;
mod one_removable;
pub(crate) mod search;
mod two_matching;

use std::time::Duration;

pub use basic::{find_removable_edge, find_removable_vertex, noncut_neighbor, peel_removable_vertices};
pub use half_delta::{find_half_delta_matching, find_matching_high_k};
pub use near_delta::find_two_removable_near_delta;
pub use one_removable::{find_one_removable_delta, find_one_removable_minhalf};
pub use search::{bounded_exact_search, SearchOutcome};
pub use two_matching::find_removable_2matching;

use crate::connectivity::has_connectivity;
use crate::graph::{Edge, Graph, Matching};
use crate::graph6::write_graph6;
use crate::structure::ExceptionalFamily;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FinderOutcome {
    /// A matching of the requested size whose removal was re-tested to keep
    /// the graph k-connected.
    Matching(Matching),
    /// The input falls under the theorem's stated exclusion.
    Exception(ExceptionalFamily),
}

impl FinderOutcome {
    pub fn matching(&self) -> Option<&Matching> {
        match self {
            FinderOutcome::Matching(m) => Some(m),
            FinderOutcome::Exception(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FinderError {
    #[error("precondition violated: {reason}")]
    PreconditionViolated { reason: String },
    /// Exhaustive search proved no matching of the guaranteed size exists.
    /// Either the implementation is wrong or the input refutes the theorem;
    /// the graph6 witness lets the caller decide which.
    #[error("no matching of the guaranteed size exists in {graph6}")]
    NotFound { graph6: String },
    #[error("search budget exhausted before an answer was reached")]
    BudgetExhausted,
}

pub(crate) fn precondition(reason: impl Into<String>) -> FinderError {
    FinderError::PreconditionViolated {
        reason: reason.into(),
    }
}

/// Limits for the exact fallback search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> SearchBudget {
        SearchBudget {
            node_limit: 1 << 22,
            time_limit: Duration::from_secs(30),
        }
    }
}

/// The certification gate every candidate matching passes through: the edges
/// must form a matching of exactly the requested size inside `g`, and `g`
/// minus them must still be k-connected.
pub(crate) fn certify(g: &Graph, k: usize, edges: &[Edge], size: usize) -> Option<Matching> {
    if edges.len() != size || !g.is_matching_set(edges) {
        return None;
    }
    let m = Matching::new(edges.to_vec()).ok()?;
    let rest = g.delete_matching(&m).expect("membership was just checked");
    has_connectivity(&rest, k).then_some(m)
}

/// Greedy matching growth under the k-removability constraint: keep the
/// usable part of `seed` (in order), then extend over all edges in
/// lexicographic order, never letting the working graph drop below
/// k-connectivity. Returns a matching of exactly `size` edges or nothing.
pub(crate) fn greedy_removable_matching(
    g: &Graph,
    k: usize,
    seed: &[Edge],
    size: usize,
) -> Option<Matching> {
    let mut current = g.clone();
    let mut chosen: Vec<Edge> = Vec::new();
    let mut used = 0u64;
    for e in seed.iter().chain(g.edges().iter()) {
        if chosen.len() == size {
            break;
        }
        if used & e.endpoint_mask() != 0 || !current.contains_edge(e) {
            continue;
        }
        let next = current.without_edge(e.u(), e.v());
        if has_connectivity(&next, k) {
            current = next;
            used |= e.endpoint_mask();
            chosen.push(*e);
        }
    }
    certify(g, k, &chosen, size)
}

/// Maps a terminated exact search onto the finder error contract.
pub(crate) fn search_to_outcome(
    g: &Graph,
    outcome: SearchOutcome,
) -> Result<FinderOutcome, FinderError> {
    match outcome {
        SearchOutcome::Found(m) => Ok(FinderOutcome::Matching(m)),
        SearchOutcome::Exhausted => Err(FinderError::NotFound {
            graph6: write_graph6(g),
        }),
        SearchOutcome::BudgetExhausted => Err(FinderError::BudgetExhausted),
    }
}
