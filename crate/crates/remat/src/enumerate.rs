//! Isomorph-free enumeration of small connected graphs.
//!
//! The canonical form of a graph is the lexicographically smallest
//! adjacency bit-string over all relabelings, with pairs read in the same
//! column-major order graph6 uses. Enumeration grows graphs one vertex at
//! a time: every connected graph on `n` vertices arises from a connected
//! graph on `n - 1` vertices by attaching a new vertex with a nonempty
//! neighborhood, so extending each class representative by every possible
//! neighborhood and rejecting non-canonical results visits each class
//! exactly once. Levels are cached process-wide since verification sweeps
//! re-enumerate the same orders repeatedly.
//!
//! The built-in enumerator stops at [`ENUMERATION_GUARD`] vertices; larger
//! inputs are expected to arrive through
//! [`graph6::ingest_graph6_stream`](crate::graph6::ingest_graph6_stream).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use thiserror::Error;

use crate::connectivity::has_connectivity;
use crate::graph::Graph;

/// Largest vertex count the built-in enumerator accepts.
pub const ENUMERATION_GUARD: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("{n} vertices exceeds the enumeration guard of {guard}; ingest a graph6 stream instead")]
    TooLarge { n: usize, guard: usize },
}

/// Constraints applied to the enumerated stream.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumFilter {
    /// Keep only graphs with vertex connectivity at least this.
    pub min_kappa: usize,
    /// Keep only graphs with minimum degree at least this.
    pub min_degree: usize,
}

/// Searches placements position by position for the relabeling that
/// minimizes the adjacency bit-string, pruning any branch whose prefix
/// already exceeds the best complete code.
struct Canonicalizer<'a> {
    g: &'a Graph,
    n: usize,
    bits: usize,
    best: u64,
    best_perm: Vec<usize>,
}

impl<'a> Canonicalizer<'a> {
    fn new(g: &'a Graph) -> Canonicalizer<'a> {
        let n = g.n();
        Canonicalizer {
            g,
            n,
            bits: n * (n - 1) / 2,
            best: u64::MAX,
            best_perm: Vec::new(),
        }
    }

    fn code_of(&self, perm: &[usize]) -> u64 {
        let mut code = 0u64;
        for j in 1..self.n {
            for i in 0..j {
                code = code << 1 | u64::from(self.g.has_edge(perm[i], perm[j]));
            }
        }
        code
    }

    fn run(mut self) -> (u64, Vec<usize>) {
        let identity: Vec<usize> = (0..self.n).collect();
        self.best = self.code_of(&identity);
        self.best_perm = identity;
        let mut place = Vec::with_capacity(self.n);
        self.descend(&mut place, 0, 0, 0);
        (self.best, self.best_perm)
    }

    /// Swapping two vertices with the same neighborhood elsewhere is an
    /// automorphism, so once one of the pair has been tried at this
    /// position the other can be skipped.
    fn twins(&self, u: usize, v: usize) -> bool {
        self.g.neighbors_mask(u) & !(1 << v) == self.g.neighbors_mask(v) & !(1 << u)
    }

    fn descend(&mut self, place: &mut Vec<usize>, used: u64, prefix: u64, prefix_bits: usize) {
        let q = place.len();
        if q == self.n {
            if prefix < self.best {
                self.best = prefix;
                self.best_perm = place.clone();
            }
            return;
        }
        let mut candidates: Vec<(u64, usize)> = Vec::with_capacity(self.n - q);
        'next: for v in 0..self.n {
            if used >> v & 1 == 1 {
                continue;
            }
            for &(_, u) in &candidates {
                if self.twins(u, v) {
                    continue 'next;
                }
            }
            let mut chunk = 0u64;
            for &p in place.iter() {
                chunk = chunk << 1 | u64::from(self.g.has_edge(p, v));
            }
            candidates.push((chunk, v));
        }
        candidates.sort_unstable();
        let new_bits = prefix_bits + q;
        for (chunk, v) in candidates {
            let extended = prefix << q | chunk;
            if extended > self.best >> (self.bits - new_bits) {
                continue;
            }
            place.push(v);
            self.descend(place, used | 1 << v, extended, new_bits);
            place.pop();
        }
    }
}

/// Canonical code together with the relabeled class representative.
fn canonical_form(g: &Graph) -> (u64, Graph) {
    let (code, perm) = Canonicalizer::new(g).run();
    let mut inverse = vec![0usize; g.n()];
    for (pos, &v) in perm.iter().enumerate() {
        inverse[v] = pos;
    }
    let rep = Graph::from_edges(
        g.n(),
        g.edges().iter().map(|e| (inverse[e.u()], inverse[e.v()])),
    )
    .expect("relabeling preserves validity");
    (code, rep)
}

/// Lexicographically minimal adjacency bit-string of `g` over all vertex
/// relabelings, packed into a `u64` (pairs in column-major order, first
/// pair most significant). Equal codes characterize isomorphic graphs of
/// the same order.
pub fn canonical_code(g: &Graph) -> Result<u64, EnumerateError> {
    if g.n() > ENUMERATION_GUARD {
        return Err(EnumerateError::TooLarge {
            n: g.n(),
            guard: ENUMERATION_GUARD,
        });
    }
    Ok(canonical_form(g).0)
}

/// Exact isomorphism test for graphs within the enumeration guard.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool, EnumerateError> {
    if a.n() != b.n() {
        return Ok(false);
    }
    let mut deg_a: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut deg_b: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return Ok(false);
    }
    Ok(canonical_code(a)? == canonical_code(b)?)
}

fn levels() -> &'static Mutex<HashMap<usize, Arc<Vec<Graph>>>> {
    static LEVELS: OnceLock<Mutex<HashMap<usize, Arc<Vec<Graph>>>>> = OnceLock::new();
    LEVELS.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All connected classes on `n` vertices, one canonical representative
/// each, sorted by canonical code.
fn connected_level(n: usize) -> Arc<Vec<Graph>> {
    if let Some(hit) = levels().lock().unwrap().get(&n) {
        return hit.clone();
    }
    let built: Vec<Graph> = if n == 0 {
        Vec::new()
    } else if n == 1 {
        vec![Graph::empty(1).unwrap()]
    } else {
        let parents = connected_level(n - 1);
        let found: Vec<(u64, Graph)> = parents
            .par_iter()
            .flat_map_iter(|parent| {
                let base: Vec<(usize, usize)> =
                    parent.edges().iter().map(|e| (e.u(), e.v())).collect();
                (1u64..1 << (n - 1)).map(move |mask| {
                    let attach = (0..n - 1).filter(move |i| mask >> i & 1 == 1);
                    let child = Graph::from_edges(
                        n,
                        base.iter().copied().chain(attach.map(|i| (i, n - 1))),
                    )
                    .expect("extension stays in range");
                    canonical_form(&child)
                })
            })
            .collect();
        let mut classes: HashMap<u64, Graph> = HashMap::new();
        for (code, rep) in found {
            classes.entry(code).or_insert(rep);
        }
        let mut reps: Vec<(u64, Graph)> = classes.into_iter().collect();
        reps.sort_unstable_by_key(|(code, _)| *code);
        reps.into_iter().map(|(_, g)| g).collect()
    };
    let arc = Arc::new(built);
    levels()
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| arc.clone())
        .clone()
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices passing `filter`, in canonical-code order.
pub fn enumerate_connected_graphs(
    n: usize,
    filter: &EnumFilter,
) -> Result<Vec<Graph>, EnumerateError> {
    if n > ENUMERATION_GUARD {
        return Err(EnumerateError::TooLarge {
            n,
            guard: ENUMERATION_GUARD,
        });
    }
    Ok(connected_level(n)
        .iter()
        .filter(|g| g.min_degree() >= filter.min_degree && has_connectivity(g, filter.min_kappa))
        .cloned()
        .collect())
}
