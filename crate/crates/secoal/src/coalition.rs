//! Secure coalition partitions: verification with certificates, the exact
//! SEC(G) and C(G) solvers, constructive minimum-degree partitions, and the
//! inequality report.
//!
//! A secure coalition is a pair of disjoint vertex sets, neither secure
//! dominating, whose union is secure dominating. A sec-partition is a vertex
//! partition in which every part is either a secure dominating singleton of
//! full degree or forms a secure coalition with some other part; SEC(G) is
//! the maximum number of parts over all sec-partitions. The c-partition /
//! C(G) analogue replaces "secure dominating" with plain domination and is
//! kept as the comparison baseline.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::domination::{
    is_secure_dominating, secure_certificate, secure_domination_number, DominationCache,
    SecureCertificate, SecureDominationCache,
};
use crate::graph::{bit, full_mask, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("part {index} is empty")]
    EmptyPart { index: usize },
    #[error("parts {a} and {b} overlap")]
    OverlappingParts { a: usize, b: usize },
    #[error("vertices {missing} are not covered by any part")]
    NotCovering { missing: VertexSet },
    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("partition is over order {partition_n} but the graph has order {graph_n}")]
    OrderMismatch { partition_n: usize, graph_n: usize },
    #[error("partition spec: {detail}")]
    BadSpec { detail: String },
}

/// Errors from the exact searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("order {n} exceeds the search cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("no valid partition of any order was found; this contradicts the existence guarantee")]
    SearchExhausted,
}

/// Errors from operations that require a valid sec-partition as input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoalitionError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("partition is not a secure coalition partition")]
    NotSecPartition { verdict: Box<PartitionVerdict> },
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("constructed partition failed verification and order {n} exceeds the fallback search cap {cap}")]
    ConstructionGap {
        n: usize,
        cap: usize,
        partition: Partition,
        verdict: Box<PartitionVerdict>,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct PartitionRepr {
    n: usize,
    parts: Vec<Vec<usize>>,
}

/// Ordered list of disjoint, non-empty vertex sets covering `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PartitionRepr", into = "PartitionRepr")]
pub struct Partition {
    n: usize,
    parts: Vec<VertexSet>,
}

impl Partition {
    pub fn new(n: usize, parts: Vec<VertexSet>) -> Result<Self, PartitionError> {
        let all = full_mask(n);
        let mut seen = 0u64;
        for (index, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(PartitionError::EmptyPart { index });
            }
            if part.bits() & !all != 0 {
                let v = VertexSet::from_bits(part.bits() & !all)
                    .min_vertex()
                    .expect("non-zero");
                return Err(PartitionError::VertexOutOfRange { v, n });
            }
            if part.bits() & seen != 0 {
                let a = parts[..index]
                    .iter()
                    .position(|p| !p.is_disjoint_from(*part))
                    .expect("overlap source exists");
                return Err(PartitionError::OverlappingParts { a, b: index });
            }
            seen |= part.bits();
        }
        if seen != all {
            return Err(PartitionError::NotCovering {
                missing: VertexSet::from_bits(all & !seen),
            });
        }
        Ok(Partition { n, parts })
    }

    /// The singleton partition {{0},{1},...,{n-1}}.
    pub fn singletons(n: usize) -> Self {
        Partition {
            n,
            parts: (0..n).map(VertexSet::singleton).collect(),
        }
    }

    /// Parses the `"0,2;3,5;4;1"` grammar: parts separated by `;`, vertex
    /// indices within a part separated by `,`.
    pub fn parse_spec(spec: &str, n: usize) -> Result<Self, PartitionError> {
        let mut parts = Vec::new();
        for chunk in spec.split(';') {
            let mut part = VertexSet::EMPTY;
            for tok in chunk.split(',') {
                let tok = tok.trim();
                if tok.is_empty() {
                    return Err(PartitionError::BadSpec {
                        detail: format!("empty vertex index in part {chunk:?}"),
                    });
                }
                let v: usize = tok.parse().map_err(|_| PartitionError::BadSpec {
                    detail: format!("bad vertex index {tok:?}"),
                })?;
                if v >= n {
                    return Err(PartitionError::VertexOutOfRange { v, n });
                }
                part.insert(v);
            }
            parts.push(part);
        }
        Partition::new(n, parts)
    }

    /// Inverse of [`Partition::parse_spec`].
    pub fn spec_string(&self) -> String {
        self.parts
            .iter()
            .map(|p| {
                p.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn part_containing(&self, v: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(v))
    }
}

impl TryFrom<PartitionRepr> for Partition {
    type Error = PartitionError;
    fn try_from(repr: PartitionRepr) -> Result<Self, Self::Error> {
        let parts = repr
            .parts
            .into_iter()
            .map(|vs| vs.into_iter().collect())
            .collect();
        Partition::new(repr.n, parts)
    }
}

impl From<Partition> for PartitionRepr {
    fn from(p: Partition) -> Self {
        PartitionRepr {
            n: p.n,
            parts: p.parts.iter().map(|s| s.to_vec()).collect(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Why a candidate partner pair fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "cause", rename_all = "snake_case")]
pub enum PairCause {
    /// The other part is itself secure dominating, so it cannot be in a
    /// coalition by definition.
    OtherIsSecureDominating,
    /// The union fails secure domination; `witness` is the vertex that is
    /// either uncovered or has no valid defender swap.
    UnionNotSecureDominating { witness: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRejection {
    pub other: usize,
    #[serde(flatten)]
    pub cause: PairCause,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum InvalidReason {
    /// The part is a secure dominating set but not a single full-degree
    /// vertex, which no sec-partition may contain.
    SecureDominatingButNotFullSingleton,
    /// The part is not secure dominating and no other part completes it;
    /// one rejection per candidate partner, replayable through the oracle.
    NoCoalitionPartner { rejections: Vec<PairRejection> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PartStatus {
    /// A secure dominating singleton whose vertex has degree n-1.
    FullDegreeSingleton,
    /// Exhaustive list of the parts this one forms a secure coalition with.
    CoalitionWith { partners: Vec<usize> },
    Invalid {
        #[serde(flatten)]
        reason: InvalidReason,
    },
}

impl PartStatus {
    pub fn is_ok(&self) -> bool {
        !matches!(self, PartStatus::Invalid { .. })
    }
}

/// Per-part certification of a candidate sec-partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionVerdict {
    pub valid: bool,
    pub per_part: Vec<PartStatus>,
}

fn check_compatible(g: &Graph, p: &Partition) -> Result<(), PartitionError> {
    if p.n() != g.n() {
        return Err(PartitionError::OrderMismatch {
            partition_n: p.n(),
            graph_n: g.n(),
        });
    }
    Ok(())
}

/// True iff neither set is secure dominating but their union is.
///
/// The sets must be non-empty and disjoint.
pub fn forms_secure_coalition(
    g: &Graph,
    a: VertexSet,
    b: VertexSet,
) -> Result<bool, PartitionError> {
    for (index, s) in [a, b].into_iter().enumerate() {
        if s.is_empty() {
            return Err(PartitionError::EmptyPart { index });
        }
        if !s.is_subset_of(g.vertex_set()) {
            let v = s.minus(g.vertex_set()).min_vertex().expect("non-zero");
            return Err(PartitionError::VertexOutOfRange { v, n: g.n() });
        }
    }
    if !a.is_disjoint_from(b) {
        return Err(PartitionError::OverlappingParts { a: 0, b: 1 });
    }
    Ok(!is_secure_dominating(g, a)
        && !is_secure_dominating(g, b)
        && is_secure_dominating(g, a.union(b)))
}

/// Certifies a candidate sec-partition part by part.
///
/// Partner lists are exhaustive, so they double as the adjacency of the
/// secure coalition graph and as the counts bounded by the coalition-count
/// inequality.
pub fn is_sec_partition(g: &Graph, p: &Partition) -> Result<PartitionVerdict, PartitionError> {
    check_compatible(g, p)?;
    let parts = p.parts();
    let k = parts.len();
    let mut cache = SecureDominationCache::new(g);
    let sd: Vec<bool> = parts.iter().map(|&s| cache.is_secure(s)).collect();
    let full = g.full_vertices();
    let mut per_part = Vec::with_capacity(k);
    for i in 0..k {
        if sd[i] {
            let s = parts[i];
            let is_full_singleton =
                s.len() == 1 && full.contains(s.min_vertex().expect("non-empty"));
            per_part.push(if is_full_singleton {
                PartStatus::FullDegreeSingleton
            } else {
                PartStatus::Invalid {
                    reason: InvalidReason::SecureDominatingButNotFullSingleton,
                }
            });
            continue;
        }
        let mut partners = Vec::new();
        let mut rejections = Vec::new();
        for j in 0..k {
            if j == i {
                continue;
            }
            if sd[j] {
                rejections.push(PairRejection {
                    other: j,
                    cause: PairCause::OtherIsSecureDominating,
                });
                continue;
            }
            let union = parts[i].union(parts[j]);
            if cache.is_secure(union) {
                partners.push(j);
            } else {
                let witness = match secure_certificate(g, union) {
                    SecureCertificate::Undefended { witness } => witness,
                    SecureCertificate::Defended { .. } => {
                        unreachable!("cache and certificate disagree")
                    }
                };
                rejections.push(PairRejection {
                    other: j,
                    cause: PairCause::UnionNotSecureDominating { witness },
                });
            }
        }
        per_part.push(if partners.is_empty() {
            PartStatus::Invalid {
                reason: InvalidReason::NoCoalitionPartner { rejections },
            }
        } else {
            PartStatus::CoalitionWith { partners }
        });
    }
    Ok(PartitionVerdict {
        valid: per_part.iter().all(PartStatus::is_ok),
        per_part,
    })
}

/// Plain-domination coalition partition test: every part is a singleton
/// dominating set, or is not dominating and unions with some other
/// non-dominating part into a dominating set.
pub fn is_c_partition(g: &Graph, p: &Partition) -> Result<bool, PartitionError> {
    check_compatible(g, p)?;
    let mut cache = DominationCache::new(g);
    Ok(c_partition_valid(
        &p.parts().iter().map(|s| s.bits()).collect::<Vec<_>>(),
        &mut cache,
    ))
}

fn c_partition_valid(blocks: &[u64], cache: &mut DominationCache) -> bool {
    let dom: Vec<bool> = blocks
        .iter()
        .map(|&b| cache.is_dominating(VertexSet::from_bits(b)))
        .collect();
    for (i, &b) in blocks.iter().enumerate() {
        if dom[i] {
            if b.count_ones() != 1 {
                return false;
            }
            continue;
        }
        let partnered = blocks.iter().enumerate().any(|(j, &other)| {
            j != i && !dom[j] && cache.is_dominating(VertexSet::from_bits(b | other))
        });
        if !partnered {
            return false;
        }
    }
    true
}

fn sec_partition_valid(
    blocks: &[u64],
    cache: &mut SecureDominationCache,
    full_vertices: u64,
) -> bool {
    let sd: Vec<bool> = blocks
        .iter()
        .map(|&b| cache.is_secure(VertexSet::from_bits(b)))
        .collect();
    for (i, &b) in blocks.iter().enumerate() {
        if sd[i] {
            if b.count_ones() != 1 || b & full_vertices != b {
                return false;
            }
            continue;
        }
        let partnered = blocks.iter().enumerate().any(|(j, &other)| {
            j != i && !sd[j] && cache.is_secure(VertexSet::from_bits(b | other))
        });
        if !partnered {
            return false;
        }
    }
    true
}

/// Visits set partitions of `0..n` with exactly `k` blocks in lexicographic
/// restricted-growth-string order. Stops when the callback returns true.
fn for_each_partition_with_k_blocks(n: usize, k: usize, f: &mut impl FnMut(&[u64]) -> bool) {
    let mut blocks: Vec<u64> = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, pos: usize, blocks: &mut Vec<u64>, f: &mut impl FnMut(&[u64]) -> bool) -> bool {
        if pos == n {
            return blocks.len() == k && f(blocks);
        }
        let used = blocks.len();
        for b in 0..=used.min(k - 1) {
            let new_used = if b == used { used + 1 } else { used };
            // not enough positions left to open the remaining blocks
            if k - new_used > n - pos - 1 {
                continue;
            }
            if b == used {
                blocks.push(bit(pos));
            } else {
                blocks[b] |= bit(pos);
            }
            if rec(n, k, pos + 1, blocks, f) {
                return true;
            }
            if b == used {
                blocks.pop();
            } else {
                blocks[b] &= !bit(pos);
            }
        }
        false
    }
    rec(n, k, 0, &mut blocks, f);
}

/// Default search cap for [`sec_number`] and [`coalition_number`].
pub const DEFAULT_SEC_CAP: usize = 9;
/// Trees search a little deeper by default.
pub const DEFAULT_TREE_SEC_CAP: usize = 10;

fn default_cap(g: &Graph) -> usize {
    if g.is_tree() {
        DEFAULT_TREE_SEC_CAP
    } else {
        DEFAULT_SEC_CAP
    }
}

/// Exact SEC(G) with a witness partition, under the default cap
/// (9 in general, 10 for trees).
pub fn sec_number(g: &Graph) -> Result<(usize, Partition), SolveError> {
    sec_number_with_cap(g, default_cap(g))
}

/// Exact SEC(G) by scanning part counts downward from the secure-domination
/// upper bound `n - gamma_s + 2`; within each count, set partitions are
/// enumerated in lexicographic restricted-growth order, so the witness is
/// deterministic (the lexicographically least maximum partition).
pub fn sec_number_with_cap(g: &Graph, cap: usize) -> Result<(usize, Partition), SolveError> {
    let n = g.n();
    if n > cap {
        return Err(SolveError::CapExceeded { n, cap });
    }
    let (gamma_s, _) = secure_domination_number(g);
    let upper = n.min(n - gamma_s + 2);
    let mut cache = SecureDominationCache::new(g);
    let full_vertices = g.full_vertices().bits();
    for k in (1..=upper).rev() {
        let mut witness: Option<Vec<u64>> = None;
        for_each_partition_with_k_blocks(n, k, &mut |blocks| {
            if sec_partition_valid(blocks, &mut cache, full_vertices) {
                witness = Some(blocks.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(blocks) = witness {
            let parts = blocks.into_iter().map(VertexSet::from_bits).collect();
            let p = Partition::new(n, parts).expect("search emits well-formed partitions");
            return Ok((k, p));
        }
    }
    Err(SolveError::SearchExhausted)
}

/// Exact C(G) with a witness, under the default cap.
pub fn coalition_number(g: &Graph) -> Result<(usize, Partition), SolveError> {
    coalition_number_with_cap(g, default_cap(g))
}

/// Exact C(G): same downward scan as [`sec_number_with_cap`] but against the
/// plain-domination partition condition, starting from `k = n`.
pub fn coalition_number_with_cap(g: &Graph, cap: usize) -> Result<(usize, Partition), SolveError> {
    let n = g.n();
    if n > cap {
        return Err(SolveError::CapExceeded { n, cap });
    }
    let mut cache = DominationCache::new(g);
    for k in (1..=n).rev() {
        let mut witness: Option<Vec<u64>> = None;
        for_each_partition_with_k_blocks(n, k, &mut |blocks| {
            if c_partition_valid(blocks, &mut cache) {
                witness = Some(blocks.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(blocks) = witness {
            let parts = blocks.into_iter().map(VertexSet::from_bits).collect();
            let p = Partition::new(n, parts).expect("search emits well-formed partitions");
            return Ok((k, p));
        }
    }
    Err(SolveError::SearchExhausted)
}

/// Which construction produced a partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionRoute {
    /// Complete graph: the singleton partition.
    Singletons,
    /// Edgeless graph on at least two vertices: split off one vertex.
    EdgelessSplit,
    /// Isolated vertices absorbed into the remainder block of the
    /// minimum-degree construction over the isolate-free part.
    IsolatesAbsorbed,
    /// Minimum-degree vertex, its neighbors as singletons, remainder block.
    MinDegreeStar,
    /// Constructed partition failed verification; witness taken from the
    /// exact search instead. Signals a construction gap worth reporting.
    FallbackSearch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructedPartition {
    pub partition: Partition,
    pub route: ConstructionRoute,
}

/// Builds a valid sec-partition for any graph.
///
/// Non-complete graphs without isolated vertices get the minimum-degree
/// construction of size `delta(G) + 2`; graphs with isolates and at least
/// one edge get the variant over the isolate-free induced subgraph, size
/// `delta(G') + 2`. Every result is verified through [`is_sec_partition`]
/// before returning; a verification failure falls back to the exact search
/// when the order is within the cap and is an error otherwise.
pub fn construct_sec_partition(g: &Graph) -> Result<ConstructedPartition, CoalitionError> {
    let n = g.n();
    let (route, parts): (ConstructionRoute, Vec<VertexSet>) = if g.is_complete() {
        (
            ConstructionRoute::Singletons,
            (0..n).map(VertexSet::singleton).collect(),
        )
    } else if g.is_edgeless() {
        // n >= 2 here: {V \ {0}}, {{0}}; the union is V, secure vacuously
        let rest = g.vertex_set().minus(VertexSet::singleton(0));
        (
            ConstructionRoute::EdgelessSplit,
            vec![rest, VertexSet::singleton(0)],
        )
    } else {
        let isolates = g.isolated_vertices();
        if !isolates.is_empty() {
            // minimum-degree vertex of the isolate-free part (degrees are
            // unchanged by removing isolates)
            let y = (0..n)
                .filter(|&v| !isolates.contains(v))
                .min_by_key(|&v| (g.degree(v), v))
                .expect("graph has an edge");
            let mut parts: Vec<VertexSet> =
                g.neighbors(y).iter().map(VertexSet::singleton).collect();
            parts.push(VertexSet::singleton(y));
            parts.push(g.vertex_set().minus(g.closed_neighbors(y)));
            (ConstructionRoute::IsolatesAbsorbed, parts)
        } else {
            let v = (0..n).min_by_key(|&v| (g.degree(v), v)).expect("n >= 1");
            let mut parts = vec![VertexSet::singleton(v)];
            parts.extend(g.neighbors(v).iter().map(VertexSet::singleton));
            parts.push(g.vertex_set().minus(g.closed_neighbors(v)));
            (ConstructionRoute::MinDegreeStar, parts)
        }
    };
    let partition = Partition::new(n, parts)?;
    let verdict = is_sec_partition(g, &partition)?;
    if verdict.valid {
        return Ok(ConstructedPartition { partition, route });
    }
    // Construction gap: trust the exact search if it is feasible.
    match sec_number(g) {
        Ok((_, witness)) => Ok(ConstructedPartition {
            partition: witness,
            route: ConstructionRoute::FallbackSearch,
        }),
        Err(SolveError::CapExceeded { n, cap }) => Err(CoalitionError::ConstructionGap {
            n,
            cap,
            partition,
            verdict: Box::new(verdict),
        }),
        Err(e) => Err(e.into()),
    }
}

/// For each part, the number of parts it forms a secure coalition with.
///
/// Requires a valid sec-partition; full-degree singletons count zero.
pub fn coalition_counts(g: &Graph, p: &Partition) -> Result<Vec<usize>, CoalitionError> {
    let verdict = is_sec_partition(g, p)?;
    if !verdict.valid {
        return Err(CoalitionError::NotSecPartition {
            verdict: Box::new(verdict),
        });
    }
    Ok(verdict
        .per_part
        .iter()
        .map(|st| match st {
            PartStatus::CoalitionWith { partners } => partners.len(),
            _ => 0,
        })
        .collect())
}

/// Computed invariants and inequality verdicts for one graph.
///
/// Violated inequalities are flagged, never asserted; `Option` fields are
/// `None` where the inequality's side condition does not apply.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub gamma: usize,
    pub gamma_s: usize,
    pub sec: usize,
    pub c: usize,
    pub sec_witness: Partition,
    pub c_witness: Partition,
    pub coalition_counts: Vec<usize>,
    /// 1 <= SEC <= n
    pub sec_within_order: bool,
    /// SEC <= C
    pub sec_le_c: bool,
    /// SEC <= n - gamma_s + 2
    pub sec_le_order_gamma_s: bool,
    /// SEC >= delta + 2, for isolate-free non-complete graphs
    pub sec_ge_min_degree: Option<bool>,
    /// SEC >= delta(G') + 2 over the isolate-free part, for graphs with
    /// isolates and at least one edge
    pub sec_ge_min_degree_isolates: Option<bool>,
    /// SEC >= 3 unless the graph is complete or edgeless
    pub sec_ge_three: Option<bool>,
    /// SEC = 1 exactly for the one-vertex graph; SEC = 2 exactly for the
    /// single edge or an edgeless graph on >= 2 vertices
    pub small_sec_characterization: bool,
    /// every per-part coalition count <= max{Delta + 1, n - gamma}
    pub coalition_count_bound: bool,
}

impl BoundReport {
    pub fn all_hold(&self) -> bool {
        self.violations().is_empty()
    }

    /// Names of the inequalities that failed.
    pub fn violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let mut check = |name, ok: Option<bool>| {
            if ok == Some(false) {
                out.push(name);
            }
        };
        check("sec_within_order", Some(self.sec_within_order));
        check("sec_le_c", Some(self.sec_le_c));
        check("sec_le_order_gamma_s", Some(self.sec_le_order_gamma_s));
        check("sec_ge_min_degree", self.sec_ge_min_degree);
        check(
            "sec_ge_min_degree_isolates",
            self.sec_ge_min_degree_isolates,
        );
        check("sec_ge_three", self.sec_ge_three);
        check(
            "small_sec_characterization",
            Some(self.small_sec_characterization),
        );
        check("coalition_count_bound", Some(self.coalition_count_bound));
        out
    }
}

/// Computes every invariant and inequality verdict for `g`.
pub fn check_bounds(g: &Graph) -> Result<BoundReport, CoalitionError> {
    let n = g.n();
    let (gamma, _) = crate::domination::domination_number(g);
    let (gamma_s, _) = secure_domination_number(g);
    let (sec, sec_witness) = sec_number(g)?;
    let (c, c_witness) = coalition_number(g)?;
    let counts = coalition_counts(g, &sec_witness)?;
    let count_bound = (g.max_degree() + 1).max(n - gamma);
    let isolates = g.isolated_vertices();
    let complete = g.is_complete();
    let edgeless = g.is_edgeless();

    let sec_ge_min_degree = (!complete && isolates.is_empty()).then(|| sec >= g.min_degree() + 2);
    let sec_ge_min_degree_isolates = (!isolates.is_empty() && !edgeless).then(|| {
        let delta_prime = (0..n)
            .filter(|&v| !isolates.contains(v))
            .map(|v| g.degree(v))
            .min()
            .expect("non-edgeless");
        sec >= delta_prime + 2
    });
    let sec_ge_three = (!complete && !edgeless).then(|| sec >= 3);
    let small_sec_characterization =
        ((sec == 1) == (n == 1)) && ((sec == 2) == (n == 2 && complete || n >= 2 && edgeless));

    Ok(BoundReport {
        n,
        m: g.m(),
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        gamma,
        gamma_s,
        sec,
        c,
        coalition_counts: counts.clone(),
        sec_within_order: sec >= 1 && sec <= n,
        sec_le_c: sec <= c,
        sec_le_order_gamma_s: sec <= n - gamma_s + 2,
        sec_ge_min_degree,
        sec_ge_min_degree_isolates,
        sec_ge_three,
        small_sec_characterization,
        coalition_count_bound: counts.iter().all(|&cnt| cnt <= count_bound),
        sec_witness,
        c_witness,
    })
}
