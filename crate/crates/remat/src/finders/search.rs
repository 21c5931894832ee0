//! Exact branch-and-bound over matchings, the certified fallback behind
//! every finder and the engine of the oracle.
//!
//! Edges are considered in lexicographic order with include-before-exclude
//! branching, so the first matching found is the lexicographically least
//! one. Including an edge immediately deletes it from the working graph;
//! once that graph drops below k-connectivity no superset of the chosen
//! edges can recover, which is the main prune.

use std::time::Instant;

use super::SearchBudget;
use crate::connectivity::has_connectivity;
use crate::graph::{Edge, Graph, Matching};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Matching),
    /// The whole space was searched: no matching of the requested size is
    /// k-removable. A definitive negative, unlike `BudgetExhausted`.
    Exhausted,
    BudgetExhausted,
}

pub(crate) struct Searcher<'a> {
    edges: Vec<Edge>,
    k: usize,
    budget: &'a SearchBudget,
    started: Instant,
    nodes: u64,
    out_of_budget: bool,
}

impl<'a> Searcher<'a> {
    pub(crate) fn new(g: &Graph, k: usize, budget: &'a SearchBudget) -> Searcher<'a> {
        Searcher {
            edges: g.edges(),
            k,
            budget,
            started: Instant::now(),
            nodes: 0,
            out_of_budget: false,
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget.node_limit
            || (self.nodes.is_multiple_of(1024) && self.started.elapsed() > self.budget.time_limit)
        {
            self.out_of_budget = true;
        }
        self.out_of_budget
    }

    /// How many more edges could still join the matching: edges not touching
    /// a used vertex, capped by the free-vertex count.
    fn admissible_gain(&self, idx: usize, used: u64, n: usize) -> usize {
        let open = self.edges[idx..]
            .iter()
            .filter(|e| used & e.endpoint_mask() == 0)
            .count();
        open.min((n - used.count_ones() as usize) / 2)
    }

    /// Depth-first search for a k-removable matching of exactly `target`
    /// edges. Returns the found matching through `chosen`.
    fn find_target(
        &mut self,
        current: &Graph,
        idx: usize,
        chosen: &mut Vec<Edge>,
        used: u64,
        target: usize,
    ) -> bool {
        if chosen.len() == target {
            return true;
        }
        if self.tick() {
            return false;
        }
        if idx >= self.edges.len()
            || chosen.len() + self.admissible_gain(idx, used, current.n()) < target
        {
            return false;
        }
        let e = self.edges[idx];
        if used & e.endpoint_mask() == 0 {
            let next = current.without_edge(e.u(), e.v());
            if has_connectivity(&next, self.k) {
                chosen.push(e);
                if self.find_target(&next, idx + 1, chosen, used | e.endpoint_mask(), target) {
                    return true;
                }
                chosen.pop();
            }
        }
        self.find_target(current, idx + 1, chosen, used, target)
    }

    /// Exhausts the space, tracking the largest k-removable matching; used
    /// by the oracle. Returns the best found and whether the search was
    /// complete.
    pub(crate) fn maximize(&mut self, g: &Graph) -> (Vec<Edge>, bool) {
        let mut best = Vec::new();
        self.maximize_rec(g, 0, &mut Vec::new(), 0, &mut best);
        (best, !self.out_of_budget)
    }

    fn maximize_rec(
        &mut self,
        current: &Graph,
        idx: usize,
        chosen: &mut Vec<Edge>,
        used: u64,
        best: &mut Vec<Edge>,
    ) {
        if chosen.len() > best.len() {
            best.clone_from(chosen);
        }
        if self.tick() || idx >= self.edges.len() {
            return;
        }
        if chosen.len() + self.admissible_gain(idx, used, current.n()) <= best.len() {
            return;
        }
        let e = self.edges[idx];
        if used & e.endpoint_mask() == 0 {
            let next = current.without_edge(e.u(), e.v());
            if has_connectivity(&next, self.k) {
                chosen.push(e);
                self.maximize_rec(&next, idx + 1, chosen, used | e.endpoint_mask(), best);
                chosen.pop();
            }
        }
        self.maximize_rec(current, idx + 1, chosen, used, best);
    }
}

/// Searches for a k-removable matching of exactly `size` edges in a
/// k-connected graph. `Exhausted` is a proof by exhaustion that none
/// exists; `BudgetExhausted` says nothing either way.
pub fn bounded_exact_search(
    g: &Graph,
    k: usize,
    size: usize,
    budget: &SearchBudget,
) -> SearchOutcome {
    if size == 0 {
        return SearchOutcome::Found(Matching::empty());
    }
    let mut searcher = Searcher::new(g, k, budget);
    let mut chosen = Vec::new();
    if searcher.find_target(g, 0, &mut chosen, 0, size) {
        return SearchOutcome::Found(
            Matching::new(chosen).expect("the search keeps endpoints disjoint"),
        );
    }
    if searcher.out_of_budget {
        SearchOutcome::BudgetExhausted
    } else {
        SearchOutcome::Exhausted
    }
}
