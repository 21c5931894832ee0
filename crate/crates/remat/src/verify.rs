//! Verification sweeps, conjecture hunts, and empirical f(k, δ) tables.
//!
//! A sweep filters a graph source down to the hypothesis of one registered
//! theorem, runs the matching finder on every survivor, and tallies the
//! outcomes. Every reported counterexample is revalidated by an independent
//! exhaustive pass first: a finder bug must never masquerade as a refutation
//! of a published theorem, so disagreement between the finder and the oracle
//! aborts the sweep as an internal inconsistency instead.
//!
//! Hunts reuse the same machinery against open conjectures, where a missing
//! matching is an observation rather than a bug, and drive the exact search
//! directly since no finder covers those regimes.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::connectivity::has_connectivity;
use crate::finders::{
    bounded_exact_search, find_half_delta_matching, find_matching_high_k,
    find_one_removable_delta, find_one_removable_minhalf, find_removable_2matching,
    find_removable_edge, find_removable_vertex, find_two_removable_near_delta, FinderError,
    FinderOutcome, SearchBudget, SearchOutcome,
};
use crate::graph::{Graph, Matching, VertexSet};
use crate::graph6::write_graph6;
use crate::oracle::{max_removable_matching, ORACLE_GUARD};
use crate::structure::{
    classify_exception, mader_property_audit, minimally_k_connected_reduction, ExceptionalFamily,
    MaderAuditError,
};

/// Theorem ids accepted by [`verify_theorem`].
pub const THEOREM_IDS: &[&str] = &[
    "halin",
    "ckl",
    "two-matching",
    "half-delta",
    "one-delta",
    "half-n-min",
    "two-near-delta",
    "mader-audit",
];

/// Conjecture ids accepted by [`hunt_conjecture`].
pub const CONJECTURE_IDS: &[&str] = &["con:matching", "con:half-n-min", "pro:matching"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown theorem id {id:?}; registered ids are {}", THEOREM_IDS.join(", "))]
    UnknownTheorem { id: String },
    #[error("unknown conjecture id {id:?}; registered ids are {}", CONJECTURE_IDS.join(", "))]
    UnknownConjecture { id: String },
    #[error("bad sweep parameters: {reason}")]
    BadParams { reason: String },
    #[error("search budget exhausted on {graph6}; raise the node or time limits")]
    BudgetExhausted { graph6: String },
    #[error("no graph in the source satisfies the family constraints")]
    EmptyFamily,
    #[error("internal inconsistency on {graph6}: {detail}")]
    InternalBug { graph6: String, detail: String },
}

/// Family constraints shared by sweeps and hunts. The effective minimum
/// degree of a run is the larger of `delta` and the theorem's own floor;
/// for "one-delta" and "pro:matching", `delta` doubles as the theorem's
/// parameter (the requested matching size t, or the δ of f(k, δ)).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepParams {
    pub k: usize,
    pub delta: usize,
    pub n_min: usize,
    pub n_max: usize,
}

impl Default for SweepParams {
    fn default() -> SweepParams {
        SweepParams {
            k: 1,
            delta: 0,
            n_min: 1,
            n_max: crate::enumerate::ENUMERATION_GUARD,
        }
    }
}

/// Tally of one sweep or hunt.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub theorem_id: String,
    pub k: usize,
    pub delta: usize,
    pub n_range: [usize; 2],
    pub graphs_checked: usize,
    pub passes: usize,
    pub exceptions_matched: usize,
    pub counterexamples: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

/// Proven bounds on f(k, δ).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PaperBounds {
    pub lower: usize,
    pub upper: usize,
}

/// Observed extremal behaviour of r_k over a checked family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmpiricalFTable {
    pub k: usize,
    pub delta: usize,
    pub n_max: usize,
    pub lower_observed: usize,
    pub witnesses: Vec<String>,
    pub paper_bounds: PaperBounds,
}

/// Best proven bounds on f(k, δ), for δ > k ≥ 1: the exact values for
/// k = 1 and for δ = k + 1 at k = 2, the even lower bound for k = 2, the
/// half-δ lower bound once δ ≥ 3k − 1, and the complete-bipartite upper
/// bound of δ everywhere.
pub fn paper_f_bounds(k: usize, delta: usize) -> PaperBounds {
    if k == 1 {
        let exact = if delta == 2 { 1 } else { delta };
        return PaperBounds {
            lower: exact,
            upper: exact,
        };
    }
    let mut lower = 0;
    let mut upper = delta;
    if k == 2 {
        lower = lower.max(2 * ((delta - 2) / 2));
    }
    if delta == k + 1 {
        lower = lower.max(2);
        upper = upper.min(k);
    }
    if delta >= 3 * k - 1 {
        lower = lower.max((delta + 1).div_ceil(2));
    }
    PaperBounds { lower, upper }
}

enum Class {
    Skip,
    Pass,
    Exception,
    Counterexample(String),
}

/// Minimum degree each theorem's hypothesis demands on its own.
fn theorem_delta_floor(theorem_id: &str, k: usize) -> usize {
    match theorem_id {
        "halin" | "two-matching" => k + 1,
        "ckl" => 3 * k / 2,
        "half-delta" => match k {
            1 | 2 => k + 1,
            3 => 5,
            _ => 3 * k - 1,
        },
        "half-n-min" => 3,
        "two-near-delta" => 5,
        _ => k,
    }
}

fn validate_theorem_params(theorem_id: &str, params: &SweepParams) -> Result<(), VerifyError> {
    let bad = |reason: String| Err(VerifyError::BadParams { reason });
    if params.k == 0 {
        return bad("k must be at least 1".into());
    }
    if params.n_min > params.n_max {
        return bad(format!(
            "empty order range [{}, {}]",
            params.n_min, params.n_max
        ));
    }
    match theorem_id {
        "one-delta" => {
            if params.k != 1 {
                return bad("one-delta is a statement about connected graphs; pass k = 1".into());
            }
            if params.delta < 3 {
                return bad(format!(
                    "one-delta needs a target t >= 3 in the delta parameter, got {}",
                    params.delta
                ));
            }
        }
        "half-n-min" if params.k != 1 => {
            return bad("half-n-min is a statement about connected graphs; pass k = 1".into());
        }
        "two-near-delta" if params.k != 2 => {
            return bad("two-near-delta is a statement about 2-connected graphs; pass k = 2".into());
        }
        _ => {}
    }
    Ok(())
}

/// Whether `g` satisfies the named theorem's hypothesis plus the caller's
/// extra family constraints.
fn theorem_hypothesis(theorem_id: &str, params: &SweepParams, g: &Graph) -> bool {
    let n = g.n();
    if n < params.n_min || n > params.n_max || !has_connectivity(g, params.k) {
        return false;
    }
    let delta = g.min_degree();
    if delta < theorem_delta_floor(theorem_id, params.k).max(params.delta) {
        return false;
    }
    match theorem_id {
        "ckl" => n >= params.k + 2,
        "one-delta" => n >= 2 * params.delta,
        "two-near-delta" => n >= 2 * (delta - 2),
        _ => true,
    }
}

fn recheck_matching(g: &Graph, k: usize, m: &Matching, want: usize) -> Result<(), String> {
    if m.edges().len() != want {
        return Err(format!(
            "finder returned a {}-matching where {want} edges were required",
            m.edges().len()
        ));
    }
    if !m.edges().iter().all(|e| g.contains_edge(e)) {
        return Err("finder returned edges outside the graph".into());
    }
    let reduced = g.delete_matching(m).map_err(|e| e.to_string())?;
    if has_connectivity(&reduced, k) {
        Ok(())
    } else {
        Err(format!(
            "deleting the returned matching breaks {k}-connectivity"
        ))
    }
}

fn bug(g: &Graph, detail: String) -> VerifyError {
    VerifyError::InternalBug {
        graph6: write_graph6(g),
        detail,
    }
}

/// Second, independent look at a graph the finder gave up on. Inside the
/// oracle guard the branch-and-bound maximizer either confirms the miss
/// (counterexample) or contradicts the finder (internal bug). Beyond the
/// guard the finder's own exhausted search is the only evidence available.
fn revalidate_missing(
    g: &Graph,
    k: usize,
    target: usize,
    budget: &SearchBudget,
) -> Result<Class, VerifyError> {
    let word = write_graph6(g);
    if g.n() > ORACLE_GUARD {
        return Ok(Class::Counterexample(word));
    }
    match max_removable_matching(g, k, budget) {
        Ok(res) if !res.exhaustive => Err(VerifyError::BudgetExhausted { graph6: word }),
        Ok(res) if res.r >= target => Err(VerifyError::InternalBug {
            graph6: word,
            detail: format!(
                "finder found no {target}-matching but the oracle reports r = {}",
                res.r
            ),
        }),
        Ok(_) => Ok(Class::Counterexample(word)),
        Err(e) => Err(VerifyError::InternalBug {
            graph6: word,
            detail: e.to_string(),
        }),
    }
}

fn classify_finder_error(
    g: &Graph,
    k: usize,
    target: usize,
    budget: &SearchBudget,
    err: FinderError,
) -> Result<Class, VerifyError> {
    match err {
        FinderError::NotFound { .. } => revalidate_missing(g, k, target, budget),
        FinderError::BudgetExhausted => Err(VerifyError::BudgetExhausted {
            graph6: write_graph6(g),
        }),
        FinderError::PreconditionViolated { reason } => Err(bug(
            g,
            format!("hypothesis filter admitted a graph the finder rejects: {reason}"),
        )),
    }
}

fn assess_outcome(
    g: &Graph,
    k: usize,
    target: usize,
    budget: &SearchBudget,
    outcome: Result<FinderOutcome, FinderError>,
    exception_allowed: impl Fn(&ExceptionalFamily) -> bool,
) -> Result<Class, VerifyError> {
    match outcome {
        Ok(FinderOutcome::Matching(m)) => match recheck_matching(g, k, &m, target) {
            Ok(()) => Ok(Class::Pass),
            Err(detail) => Err(bug(g, detail)),
        },
        Ok(FinderOutcome::Exception(fam)) => {
            if exception_allowed(&fam) && classify_exception(g) == Some(fam) {
                Ok(Class::Exception)
            } else {
                Err(bug(g, format!("claimed exception {fam:?} does not match")))
            }
        }
        Err(e) => classify_finder_error(g, k, target, budget, e),
    }
}

fn assess_theorem(
    theorem_id: &str,
    params: &SweepParams,
    g: &Graph,
    budget: &SearchBudget,
) -> Result<Class, VerifyError> {
    let k = params.k;
    let n = g.n();
    let delta = g.min_degree();
    match theorem_id {
        "halin" => match find_removable_edge(g, k) {
            Ok(e) => {
                let reduced = g.delete_edges(&[e]).map_err(|e| bug(g, e.to_string()))?;
                if has_connectivity(&reduced, k) {
                    Ok(Class::Pass)
                } else {
                    Err(bug(g, "returned edge is not removable".into()))
                }
            }
            Err(e) => classify_finder_error(g, k, 1, budget, e),
        },
        "ckl" => match find_removable_vertex(g, k) {
            Ok(x) => {
                let (reduced, _) = g
                    .delete_vertices(&VertexSet::from([x]))
                    .map_err(|e| bug(g, e.to_string()))?;
                if has_connectivity(&reduced, k) {
                    Ok(Class::Pass)
                } else {
                    Err(bug(g, format!("returned vertex {x} is not removable")))
                }
            }
            Err(FinderError::NotFound { .. }) => {
                let rescan = (0..n).any(|x| {
                    let (reduced, _) = g.delete_vertices(&VertexSet::from([x])).unwrap();
                    has_connectivity(&reduced, k)
                });
                if rescan {
                    Err(bug(g, "finder missed a removable vertex".into()))
                } else {
                    Ok(Class::Counterexample(write_graph6(g)))
                }
            }
            Err(e) => classify_finder_error(g, k, 1, budget, e),
        },
        "two-matching" => assess_outcome(
            g,
            k,
            2,
            budget,
            find_removable_2matching(g, k, budget),
            |fam| matches!(fam, ExceptionalFamily::Cycle { order } if k == 1 && *order == n),
        ),
        "half-delta" => {
            let target = (delta + 1).div_ceil(2);
            let outcome = if k >= 4 {
                find_matching_high_k(g, k, budget)
            } else {
                find_half_delta_matching(g, k, budget)
            };
            assess_outcome(g, k, target, budget, outcome, |fam| match fam {
                ExceptionalFamily::Cycle { order } => k == 1 && delta == 2 && *order == n,
                ExceptionalFamily::CompleteOfOrder { order } => {
                    delta.is_multiple_of(2) && *order == delta + 1 && *order == n
                }
                _ => false,
            })
        }
        "one-delta" => assess_outcome(
            g,
            k,
            params.delta,
            budget,
            find_one_removable_delta(g, params.delta, budget),
            |_| false,
        ),
        "half-n-min" => assess_outcome(
            g,
            k,
            (n / 2).min(delta),
            budget,
            find_one_removable_minhalf(g, budget),
            |_| false,
        ),
        "two-near-delta" => {
            let target = if delta.is_multiple_of(2) { delta - 2 } else { delta - 3 };
            assess_outcome(
                g,
                k,
                target,
                budget,
                find_two_removable_near_delta(g, budget),
                |_| false,
            )
        }
        "mader-audit" => {
            let reduction =
                minimally_k_connected_reduction(g, k).map_err(|e| bug(g, e.to_string()))?;
            match mader_property_audit(&reduction.core, k) {
                Ok(_) => Ok(Class::Pass),
                Err(MaderAuditError::ClauseFailed { .. }) => {
                    Ok(Class::Counterexample(write_graph6(g)))
                }
                Err(e @ MaderAuditError::NotMinimal { .. }) => {
                    Err(bug(g, format!("reduction produced a non-minimal core: {e}")))
                }
            }
        }
        _ => unreachable!("validated before dispatch"),
    }
}

fn tally(
    theorem_id: &str,
    params: &SweepParams,
    delta_field: usize,
    classes: Vec<Class>,
    started: Instant,
) -> VerificationReport {
    let mut passes = 0;
    let mut exceptions_matched = 0;
    let mut counterexamples = Vec::new();
    for class in classes {
        match class {
            Class::Skip => {}
            Class::Pass => passes += 1,
            Class::Exception => exceptions_matched += 1,
            Class::Counterexample(word) => counterexamples.push(word),
        }
    }
    counterexamples.sort();
    VerificationReport {
        theorem_id: theorem_id.to_string(),
        k: params.k,
        delta: delta_field,
        n_range: [params.n_min, params.n_max],
        graphs_checked: passes + exceptions_matched + counterexamples.len(),
        passes,
        exceptions_matched,
        counterexamples,
        wall_time_ms: Some(started.elapsed().as_millis() as u64),
    }
}

/// Sweeps `source` against one registered theorem. Graphs outside the
/// hypothesis are skipped; the rest are classified as pass, matched
/// exception, or (after oracle revalidation) counterexample.
pub fn verify_theorem(
    theorem_id: &str,
    params: &SweepParams,
    source: &[Graph],
    budget: &SearchBudget,
) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    if !THEOREM_IDS.contains(&theorem_id) {
        return Err(VerifyError::UnknownTheorem {
            id: theorem_id.to_string(),
        });
    }
    validate_theorem_params(theorem_id, params)?;
    let classes = source
        .par_iter()
        .map(|g| {
            if theorem_hypothesis(theorem_id, params, g) {
                assess_theorem(theorem_id, params, g, budget)
            } else {
                Ok(Class::Skip)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let delta_field = theorem_delta_floor(theorem_id, params.k).max(params.delta);
    Ok(tally(theorem_id, params, delta_field, classes, started))
}

fn conjecture_hypothesis(conjecture_id: &str, params: &SweepParams, g: &Graph) -> bool {
    let n = g.n();
    if n < params.n_min || n > params.n_max || !has_connectivity(g, params.k) {
        return false;
    }
    let delta = g.min_degree();
    match conjecture_id {
        "con:matching" => delta >= (params.k + 1).max(params.delta),
        "con:half-n-min" => delta >= (params.k + 2).max(params.delta),
        "pro:matching" => delta >= params.delta && n >= 2 * params.delta,
        _ => false,
    }
}

fn assess_conjecture(
    conjecture_id: &str,
    params: &SweepParams,
    g: &Graph,
    budget: &SearchBudget,
) -> Result<Class, VerifyError> {
    let k = params.k;
    let delta = g.min_degree();
    let target = match conjecture_id {
        "con:matching" => {
            // the conjectured exclusion, plus the cycle family its k <= 3
            // supporting theorem documents for k = 1, δ = 2
            let exempt = match classify_exception(g) {
                Some(ExceptionalFamily::CompleteOfOrder { order }) => {
                    delta.is_multiple_of(2) && order == delta + 1
                }
                Some(ExceptionalFamily::Cycle { .. }) => k == 1 && delta == 2,
                _ => false,
            };
            if exempt {
                return Ok(Class::Exception);
            }
            (delta + 1).div_ceil(2)
        }
        "con:half-n-min" => (g.n() / 2).min(delta),
        "pro:matching" => paper_f_bounds(k, params.delta).lower,
        _ => unreachable!("validated before dispatch"),
    };
    match bounded_exact_search(g, k, target, budget) {
        SearchOutcome::Found(m) => match recheck_matching(g, k, &m, target) {
            Ok(()) => Ok(Class::Pass),
            Err(detail) => Err(bug(g, detail)),
        },
        SearchOutcome::Exhausted => revalidate_missing(g, k, target, budget),
        SearchOutcome::BudgetExhausted => Err(VerifyError::BudgetExhausted {
            graph6: write_graph6(g),
        }),
    }
}

/// Same mechanics as [`verify_theorem`], but against an open conjecture:
/// a confirmed miss is a candidate discovery, not a bug, though it still
/// has to survive oracle revalidation before being reported.
pub fn hunt_conjecture(
    conjecture_id: &str,
    params: &SweepParams,
    source: &[Graph],
    budget: &SearchBudget,
) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    if !CONJECTURE_IDS.contains(&conjecture_id) {
        return Err(VerifyError::UnknownConjecture {
            id: conjecture_id.to_string(),
        });
    }
    if params.k == 0 {
        return Err(VerifyError::BadParams {
            reason: "k must be at least 1".into(),
        });
    }
    if conjecture_id == "pro:matching" && params.delta <= params.k {
        return Err(VerifyError::BadParams {
            reason: format!(
                "pro:matching needs delta > k, got delta = {} with k = {}",
                params.delta, params.k
            ),
        });
    }
    let classes = source
        .par_iter()
        .map(|g| {
            if conjecture_hypothesis(conjecture_id, params, g) {
                assess_conjecture(conjecture_id, params, g, budget)
            } else {
                Ok(Class::Skip)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let delta_field = match conjecture_id {
        "con:matching" => (params.k + 1).max(params.delta),
        "con:half-n-min" => (params.k + 2).max(params.delta),
        _ => params.delta,
    };
    Ok(tally(conjecture_id, params, delta_field, classes, started))
}

/// Observes min r_k(G) over every source graph in the f(k, δ) family:
/// κ ≥ k, δ(G) ≥ δ, 2δ ≤ n ≤ n_max. Every member is maximized exactly,
/// so the result is the empirical value of f over the checked family.
pub fn empirical_f(
    k: usize,
    delta: usize,
    n_max: usize,
    source: &[Graph],
    budget: &SearchBudget,
) -> Result<EmpiricalFTable, VerifyError> {
    if k < 1 || delta <= k {
        return Err(VerifyError::BadParams {
            reason: format!("need delta > k >= 1, got k = {k}, delta = {delta}"),
        });
    }
    if n_max < 2 * delta {
        return Err(VerifyError::BadParams {
            reason: format!("need n_max >= 2*delta = {}, got {n_max}", 2 * delta),
        });
    }
    let members: Vec<&Graph> = source
        .iter()
        .filter(|g| {
            g.n() >= 2 * delta
                && g.n() <= n_max
                && g.min_degree() >= delta
                && has_connectivity(g, k)
        })
        .collect();
    if members.is_empty() {
        return Err(VerifyError::EmptyFamily);
    }
    let observed = members
        .par_iter()
        .map(|&g| {
            let word = write_graph6(g);
            match max_removable_matching(g, k, budget) {
                Ok(res) if res.exhaustive => Ok((res.r, word)),
                Ok(_) => Err(VerifyError::BudgetExhausted { graph6: word }),
                Err(e) => Err(VerifyError::BadParams {
                    reason: format!("family member {word} falls outside the oracle: {e}"),
                }),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let lower_observed = observed.iter().map(|(r, _)| *r).min().unwrap();
    let mut witnesses: Vec<String> = observed
        .into_iter()
        .filter(|(r, _)| *r == lower_observed)
        .map(|(_, word)| word)
        .collect();
    witnesses.sort();
    Ok(EmpiricalFTable {
        k,
        delta,
        n_max,
        lower_observed,
        witnesses,
        paper_bounds: paper_f_bounds(k, delta),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{enumerate_connected_graphs, is_isomorphic, EnumFilter};
    use crate::graph::wheel;
    use crate::graph6::parse_graph6;

    fn small_source(n_max: usize) -> Vec<Graph> {
        (1..=n_max)
            .flat_map(|n| enumerate_connected_graphs(n, &EnumFilter::default()).unwrap())
            .collect()
    }

    fn params(k: usize, n_max: usize) -> SweepParams {
        SweepParams {
            k,
            delta: 0,
            n_min: 1,
            n_max,
        }
    }

    fn assert_arithmetic(report: &VerificationReport) {
        assert_eq!(
            report.graphs_checked,
            report.passes + report.exceptions_matched + report.counterexamples.len()
        );
    }

    #[test]
    fn halin_sweep_is_clean() {
        let source = small_source(6);
        let budget = SearchBudget::default();
        let report = verify_theorem("halin", &params(2, 6), &source, &budget).unwrap();
        assert!(report.counterexamples.is_empty());
        assert!(report.graphs_checked > 0);
        assert_eq!(report.exceptions_matched, 0);
        assert_arithmetic(&report);
    }

    #[test]
    fn ckl_sweep_is_clean() {
        let source = small_source(6);
        let budget = SearchBudget::default();
        for k in 1..=3 {
            let report = verify_theorem("ckl", &params(k, 6), &source, &budget).unwrap();
            assert!(report.counterexamples.is_empty(), "k = {k}");
            assert!(report.graphs_checked > 0);
            assert_arithmetic(&report);
        }
    }

    #[test]
    fn two_matching_exceptions_are_exactly_the_cycles() {
        let source = small_source(7);
        let budget = SearchBudget::default();
        let report = verify_theorem("two-matching", &params(1, 7), &source, &budget).unwrap();
        assert!(report.counterexamples.is_empty());
        assert_eq!(report.exceptions_matched, 5);
        assert_arithmetic(&report);
    }

    #[test]
    fn half_delta_exceptions_are_the_complete_graphs() {
        let source = small_source(7);
        let budget = SearchBudget::default();
        let report = verify_theorem("half-delta", &params(2, 7), &source, &budget).unwrap();
        assert!(report.counterexamples.is_empty());
        // K5 (δ = 4) and K7 (δ = 6)
        assert_eq!(report.exceptions_matched, 2);
        assert_arithmetic(&report);
    }

    #[test]
    fn one_delta_and_half_n_min_sweeps() {
        let source = small_source(7);
        let budget = SearchBudget::default();
        let one = verify_theorem(
            "one-delta",
            &SweepParams {
                k: 1,
                delta: 3,
                n_min: 1,
                n_max: 7,
            },
            &source,
            &budget,
        )
        .unwrap();
        assert!(one.counterexamples.is_empty());
        assert!(one.graphs_checked > 0);
        assert_arithmetic(&one);
        let half = verify_theorem("half-n-min", &params(1, 7), &source, &budget).unwrap();
        assert!(half.counterexamples.is_empty());
        assert!(half.graphs_checked > 0);
        assert_arithmetic(&half);
    }

    #[test]
    fn two_near_delta_sweep() {
        let source = small_source(7);
        let budget = SearchBudget::default();
        let report = verify_theorem("two-near-delta", &params(2, 7), &source, &budget).unwrap();
        assert!(report.counterexamples.is_empty());
        // every graph with δ >= 5 on at most 7 vertices qualifies: K6, K7,
        // and the δ = 5 classes on 7 vertices
        assert!(report.graphs_checked >= 2);
        assert_arithmetic(&report);
    }

    #[test]
    fn mader_audit_sweep() {
        let source = small_source(6);
        let budget = SearchBudget::default();
        for k in 1..=3 {
            let report = verify_theorem("mader-audit", &params(k, 6), &source, &budget).unwrap();
            assert!(report.counterexamples.is_empty(), "k = {k}");
            assert!(report.graphs_checked > 0);
            assert_arithmetic(&report);
        }
    }

    #[test]
    fn unknown_ids_are_rejected() {
        let budget = SearchBudget::default();
        assert_eq!(
            verify_theorem("no-such", &params(1, 6), &[], &budget),
            Err(VerifyError::UnknownTheorem {
                id: "no-such".into()
            })
        );
        assert_eq!(
            hunt_conjecture("pro:everything", &params(1, 6), &[], &budget),
            Err(VerifyError::UnknownConjecture {
                id: "pro:everything".into()
            })
        );
    }

    #[test]
    fn bad_params_are_rejected() {
        let budget = SearchBudget::default();
        let source = small_source(4);
        assert!(matches!(
            verify_theorem("one-delta", &params(1, 6), &source, &budget),
            Err(VerifyError::BadParams { .. })
        ));
        assert!(matches!(
            verify_theorem("two-near-delta", &params(3, 6), &source, &budget),
            Err(VerifyError::BadParams { .. })
        ));
        assert!(matches!(
            verify_theorem("half-n-min", &params(2, 6), &source, &budget),
            Err(VerifyError::BadParams { .. })
        ));
        assert!(matches!(
            hunt_conjecture(
                "pro:matching",
                &SweepParams {
                    k: 2,
                    delta: 2,
                    n_min: 1,
                    n_max: 6
                },
                &source,
                &budget
            ),
            Err(VerifyError::BadParams { .. })
        ));
    }

    #[test]
    fn hunt_half_n_min_is_empty_for_connected_graphs() {
        let source = small_source(6);
        let budget = SearchBudget::default();
        let report = hunt_conjecture("con:half-n-min", &params(1, 6), &source, &budget).unwrap();
        assert!(report.counterexamples.is_empty());
        assert!(report.graphs_checked > 0);
        assert_arithmetic(&report);
    }

    #[test]
    fn hunt_con_matching_small_two_connected() {
        let source = small_source(6);
        let budget = SearchBudget::default();
        let report = hunt_conjecture("con:matching", &params(2, 6), &source, &budget).unwrap();
        assert!(report.counterexamples.is_empty());
        // K5 is the lone excluded graph here: δ = 4 even, complete
        assert_eq!(report.exceptions_matched, 1);
        assert_arithmetic(&report);
    }

    #[test]
    fn hunt_pro_matching_respects_proven_floor() {
        let source = small_source(6);
        let budget = SearchBudget::default();
        let report = hunt_conjecture(
            "pro:matching",
            &SweepParams {
                k: 2,
                delta: 3,
                n_min: 1,
                n_max: 6,
            },
            &source,
            &budget,
        )
        .unwrap();
        assert!(report.counterexamples.is_empty());
        assert!(report.graphs_checked > 0);
        assert_arithmetic(&report);
    }

    #[test]
    fn empirical_f_2_3_is_two_with_wheel_witness() {
        let source = small_source(6);
        let budget = SearchBudget::default();
        let table = empirical_f(2, 3, 6, &source, &budget).unwrap();
        assert_eq!(table.lower_observed, 2);
        assert_eq!(table.paper_bounds, PaperBounds { lower: 2, upper: 2 });
        let hub = wheel(6);
        assert!(table.witnesses.iter().any(|word| {
            is_isomorphic(&parse_graph6(word).unwrap(), &hub).unwrap()
        }));
    }

    #[test]
    fn empirical_f_for_trees_of_bounds() {
        let source = small_source(6);
        let budget = SearchBudget::default();
        let low = empirical_f(1, 2, 6, &source, &budget).unwrap();
        assert_eq!(low.lower_observed, 1);
        assert_eq!(low.paper_bounds, PaperBounds { lower: 1, upper: 1 });
        let cubic = empirical_f(1, 3, 6, &source, &budget).unwrap();
        assert_eq!(cubic.lower_observed, 3);
        assert_eq!(cubic.paper_bounds, PaperBounds { lower: 3, upper: 3 });
        assert_eq!(
            empirical_f(4, 5, 10, &source, &budget),
            Err(VerifyError::EmptyFamily)
        );
        assert!(matches!(
            empirical_f(2, 2, 6, &source, &budget),
            Err(VerifyError::BadParams { .. })
        ));
    }

    #[test]
    fn paper_bounds_table() {
        assert_eq!(paper_f_bounds(1, 2), PaperBounds { lower: 1, upper: 1 });
        assert_eq!(paper_f_bounds(1, 7), PaperBounds { lower: 7, upper: 7 });
        assert_eq!(paper_f_bounds(2, 3), PaperBounds { lower: 2, upper: 2 });
        assert_eq!(paper_f_bounds(2, 5), PaperBounds { lower: 3, upper: 5 });
        assert_eq!(paper_f_bounds(2, 6), PaperBounds { lower: 4, upper: 6 });
        assert_eq!(paper_f_bounds(3, 4), PaperBounds { lower: 2, upper: 3 });
        assert_eq!(paper_f_bounds(4, 6), PaperBounds { lower: 0, upper: 6 });
        assert_eq!(paper_f_bounds(3, 8), PaperBounds { lower: 5, upper: 8 });
    }

    #[test]
    fn report_serializes_with_stable_field_names() {
        let source = small_source(5);
        let budget = SearchBudget::default();
        let report = verify_theorem("halin", &params(1, 5), &source, &budget).unwrap();
        let value = serde_json::to_value(&report).unwrap();
        let keys: Vec<&str> = value.as_object().unwrap().keys().map(|s| s.as_str()).collect();
        let mut expected = vec![
            "theorem_id",
            "k",
            "delta",
            "n_range",
            "graphs_checked",
            "passes",
            "exceptions_matched",
            "counterexamples",
            "wall_time_ms",
        ];
        expected.sort_unstable();
        assert_eq!(keys, expected);
        let stripped = VerificationReport {
            wall_time_ms: None,
            ..report
        };
        let value = serde_json::to_value(&stripped).unwrap();
        assert!(value.as_object().unwrap().get("wall_time_ms").is_none());
    }
}
