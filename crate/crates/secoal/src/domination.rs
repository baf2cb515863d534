//! Dominating and secure dominating set predicates with certificates, plus
//! exact minimum-size solvers.
//!
//! This is the oracle layer everything else trusts: the coalition searches,
//! the classifiers, and the realizer all reduce their questions to the
//! predicates in this module.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::graph::{bit, full_mask, Graph, VertexSet};

/// True iff the closed neighborhoods of `s` cover every vertex.
///
/// The empty set dominates nothing, so it is never dominating (orders are
/// at least 1 by construction). An isolated vertex dominates only itself.
pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    let mut covered = 0u64;
    for v in s.iter() {
        covered |= g.closed_neighbors(v).bits();
    }
    covered == full_mask(g.n())
}

/// Outcome of a secure-domination check.
///
/// On success each vertex outside the set is paired with its chosen
/// defender: the minimum-index neighbor inside the set whose swap keeps the
/// set dominating. On failure the witness vertex either is not dominated at
/// all or every candidate swap breaks domination.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SecureCertificate {
    Defended {
        /// `(outside vertex, defender)` pairs, ascending by outside vertex.
        defenders: Vec<(usize, usize)>,
    },
    Undefended {
        witness: usize,
    },
}

impl SecureCertificate {
    pub fn is_secure(&self) -> bool {
        matches!(self, SecureCertificate::Defended { .. })
    }
}

/// The defender for `u`: the minimum-index `v` in `s ∩ N(u)` such that
/// `(s \ {v}) ∪ {u}` is still dominating.
fn defender_of(g: &Graph, s: VertexSet, u: usize) -> Option<usize> {
    let candidates = s.intersect(g.neighbors(u));
    candidates.iter().find(|&v| {
        let swapped = VertexSet::from_bits(s.bits() & !bit(v) | bit(u));
        is_dominating(g, swapped)
    })
}

/// Secure-domination predicate: `s` dominates and every outside vertex has a
/// defender. Equivalent to `secure_certificate(g, s).is_secure()` but exits
/// early without materializing the defender list.
pub fn is_secure_dominating(g: &Graph, s: VertexSet) -> bool {
    if !is_dominating(g, s) {
        return false;
    }
    let outside = g.vertex_set().minus(s);
    outside.iter().all(|u| defender_of(g, s, u).is_some())
}

/// Full certificate variant of [`is_secure_dominating`].
pub fn secure_certificate(g: &Graph, s: VertexSet) -> SecureCertificate {
    let outside = g.vertex_set().minus(s);
    if !is_dominating(g, s) {
        // the minimum-index uncovered vertex has no neighbor in s, so no
        // swap can ever defend it
        let mut covered = 0u64;
        for v in s.iter() {
            covered |= g.closed_neighbors(v).bits();
        }
        let witness = (!covered & full_mask(g.n())).trailing_zeros() as usize;
        return SecureCertificate::Undefended { witness };
    }
    let mut defenders = Vec::with_capacity(outside.len());
    for u in outside.iter() {
        match defender_of(g, s, u) {
            Some(v) => defenders.push((u, v)),
            None => return SecureCertificate::Undefended { witness: u },
        }
    }
    SecureCertificate::Defended { defenders }
}

/// Per-invocation memo for secure-domination queries keyed by bitmask.
///
/// Solvers that test the same unions across many partitions share one cache
/// for the duration of a single invocation; the cache is tied to the graph
/// it was created for and must not outlive it.
pub(crate) struct SecureDominationCache<'g> {
    g: &'g Graph,
    memo: HashMap<u64, bool>,
}

impl<'g> SecureDominationCache<'g> {
    pub fn new(g: &'g Graph) -> Self {
        SecureDominationCache {
            g,
            memo: HashMap::new(),
        }
    }

    pub fn is_secure(&mut self, s: VertexSet) -> bool {
        let g = self.g;
        *self
            .memo
            .entry(s.bits())
            .or_insert_with(|| is_secure_dominating(g, s))
    }
}

/// Memo for plain domination queries, used by the c-partition search.
pub(crate) struct DominationCache<'g> {
    g: &'g Graph,
    memo: HashMap<u64, bool>,
}

impl<'g> DominationCache<'g> {
    pub fn new(g: &'g Graph) -> Self {
        DominationCache {
            g,
            memo: HashMap::new(),
        }
    }

    pub fn is_dominating(&mut self, s: VertexSet) -> bool {
        let g = self.g;
        *self
            .memo
            .entry(s.bits())
            .or_insert_with(|| is_dominating(g, s))
    }
}

/// Visits all `k`-subsets of `0..n` in ascending bitmask order (Gosper).
fn for_each_subset_of_size(n: usize, k: usize, mut f: impl FnMut(u64) -> bool) {
    debug_assert!(k >= 1 && k <= n);
    let limit = full_mask(n);
    let mut s = full_mask(k);
    while s <= limit {
        if f(s) {
            return;
        }
        // next bitmask with the same popcount
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
        if c == 0 {
            break;
        }
    }
}

/// Minimum dominating set size with one witness, by subset enumeration in
/// increasing cardinality. The witness is the first minimum set in
/// ascending bitmask order.
pub fn domination_number(g: &Graph) -> (usize, VertexSet) {
    solve_minimum(g.n(), |s| is_dominating(g, s))
}

/// Minimum secure dominating set size with one witness; same enumeration
/// order as [`domination_number`]. `V` itself is always secure dominating,
/// so the search terminates.
pub fn secure_domination_number(g: &Graph) -> (usize, VertexSet) {
    solve_minimum(g.n(), |s| is_secure_dominating(g, s))
}

fn solve_minimum(n: usize, mut pred: impl FnMut(VertexSet) -> bool) -> (usize, VertexSet) {
    for k in 1..=n {
        let mut found = None;
        for_each_subset_of_size(n, k, |bits| {
            let s = VertexSet::from_bits(bits);
            if pred(s) {
                found = Some(s);
                true
            } else {
                false
            }
        });
        if let Some(s) = found {
            return (k, s);
        }
    }
    unreachable!("the full vertex set satisfies both predicates")
}
