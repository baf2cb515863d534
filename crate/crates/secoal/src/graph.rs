//! Labeled simple graphs as per-vertex adjacency bitsets, plus the
//! input/output formats and generators used by every solver.
//!
//! Vertices are indices `0..n`. Adjacency rows are single `u64` words, so the
//! representation is hard-capped at [`Graph::MAX_VERTICES`]; ingestion paths
//! additionally enforce a configurable cap (default [`Graph::DEFAULT_CAP`]).

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors from graph construction, parsing, and the isomorphism search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    EmptyOrder,
    #[error("graph order {n} exceeds cap {cap}")]
    OrderExceedsCap { n: usize, cap: usize },
    #[error("graph6: input is empty")]
    Graph6Empty,
    #[error("graph6: byte {byte:#04x} at position {pos} outside the printable range 63..=126")]
    Graph6BadByte { byte: u8, pos: usize },
    #[error("graph6: payload has {got} bytes, expected {expected} for order {n}")]
    Graph6Truncated { n: usize, expected: usize, got: usize },
    #[error("edge list: input is empty")]
    EdgeListEmpty,
    #[error("edge list: token {token:?} is not a vertex index")]
    EdgeListBadToken { token: String },
    #[error("edge list: dangling endpoint {u} without a partner")]
    EdgeListDangling { u: usize },
    #[error("edge list: self-loop at vertex {u}")]
    SelfLoop { u: usize },
    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("{kind} requires at least {min} vertices, got {n}")]
    FamilyMinimum { kind: GraphKind, min: usize, n: usize },
    #[error("isomorphism search capped at order {cap}, got {n}")]
    IsoCapExceeded { n: usize, cap: usize },
}

/// Bitmask with the lowest `n` bits set.
#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    debug_assert!(n <= 64);
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// A subset of the vertices `0..n` of some graph, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        VertexSet(bit(v))
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !bit(v);
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersect(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint_from(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest vertex index in the set, if any.
    pub fn min_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Ascending iterator over the members.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        self.to_vec().serialize(ser)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(de)?;
        if let Some(&v) = vs.iter().find(|&&v| v >= 64) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(vs.into_iter().collect())
    }
}

/// Named graph families available from [`generate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Path,
    Cycle,
    Star,
    Complete,
    Empty,
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GraphKind::Path => "path",
            GraphKind::Cycle => "cycle",
            GraphKind::Star => "star",
            GraphKind::Complete => "complete",
            GraphKind::Empty => "empty",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for GraphKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "path" => Ok(GraphKind::Path),
            "cycle" => Ok(GraphKind::Cycle),
            "star" => Ok(GraphKind::Star),
            "complete" => Ok(GraphKind::Complete),
            "empty" => Ok(GraphKind::Empty),
            _ => Err(format!("unknown graph family {s:?}")),
        }
    }
}

/// Immutable labeled simple graph on vertices `0..n`.
///
/// Symmetry and irreflexivity are enforced on every construction path.
/// Equality and hashing compare the adjacency structure only; the optional
/// text label is a report tag and never influences any computation.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    label: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl Graph {
    /// Hard representation limit: one `u64` word per adjacency row.
    pub const MAX_VERTICES: usize = 64;
    /// Default ingestion cap for parsers and the CLI.
    pub const DEFAULT_CAP: usize = 32;

    /// Builds a graph from an explicit edge list. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyOrder);
        }
        if n > Self::MAX_VERTICES {
            return Err(GraphError::OrderExceedsCap {
                n,
                cap: Self::MAX_VERTICES,
            });
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { u });
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Graph {
            n,
            adj,
            label: None,
        })
    }

    /// Attaches a report label; the label never affects equality.
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    /// Open neighborhood N(v).
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood N[v].
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | bit(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Degrees sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// All vertices as a set.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet(full_mask(self.n))
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == self.n - 1)
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&row| row == 0)
    }

    /// Vertices of degree 0.
    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v] == 0).collect()
    }

    /// Vertices adjacent to every other vertex (degree n-1).
    pub fn full_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == self.n - 1).collect()
    }

    /// Connected components as disjoint vertex sets covering V, ordered by
    /// minimum vertex index.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let all = full_mask(self.n);
        let mut comps = Vec::new();
        while seen != all {
            let start = (!seen & all).trailing_zeros() as usize;
            let mut comp = bit(start);
            loop {
                let mut grown = comp;
                let mut frontier = comp;
                while frontier != 0 {
                    let v = frontier.trailing_zeros() as usize;
                    frontier &= frontier - 1;
                    grown |= self.adj[v];
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            comps.push(VertexSet(comp));
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Connected with exactly n-1 edges.
    pub fn is_tree(&self) -> bool {
        self.m() == self.n - 1 && self.is_connected()
    }

    /// Edge iff non-edge in the input; same vertex set.
    pub fn complement(&self) -> Graph {
        let all = full_mask(self.n);
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & all & !bit(v))
            .collect();
        Graph {
            n: self.n,
            adj,
            label: None,
        }
    }

    /// Second graph's vertices shifted past the first's; no cross edges.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > Self::MAX_VERTICES {
            return Err(GraphError::OrderExceedsCap {
                n,
                cap: Self::MAX_VERTICES,
            });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|row| row << self.n));
        Ok(Graph {
            n,
            adj,
            label: None,
        })
    }

    /// Subgraph induced by `verts`; vertices are relabeled to `0..k` in
    /// ascending order of their original index.
    pub fn induced(&self, verts: VertexSet) -> Result<Graph, GraphError> {
        let keep = verts.to_vec();
        if keep.is_empty() {
            return Err(GraphError::EmptyOrder);
        }
        if let Some(&v) = keep.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        let mut edges = Vec::new();
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(keep.len(), &edges)
    }

    /// Is the induced subgraph on `verts` complete?
    pub fn is_clique(&self, verts: VertexSet) -> bool {
        verts
            .iter()
            .all(|v| verts.minus(VertexSet::singleton(v)).is_subset_of(self.neighbors(v)))
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in self.neighbors(u).iter() {
                adj[perm[u]] |= bit(perm[v]);
            }
        }
        Graph {
            n: self.n,
            adj,
            label: self.label.clone(),
        }
    }

    /// Parses one graph6 line under the default ingestion cap.
    pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
        Self::from_graph6_with_cap(text, Self::DEFAULT_CAP)
    }

    /// Parses one graph6 line: header byte `63+n` for `n <= 62` (or `~` plus
    /// an 18-bit header), then the upper triangle in column-major order, six
    /// bits per byte offset by 63.
    pub fn from_graph6_with_cap(text: &str, cap: usize) -> Result<Graph, GraphError> {
        let bytes = text.trim_end().as_bytes();
        // Optional format header used by some tools.
        let bytes = bytes.strip_prefix(b">>graph6<<".as_slice()).unwrap_or(bytes);
        if bytes.is_empty() {
            return Err(GraphError::Graph6Empty);
        }
        let check = |pos: usize, byte: u8| {
            if !(63..=126).contains(&byte) {
                Err(GraphError::Graph6BadByte { byte, pos })
            } else {
                Ok(u64::from(byte - 63))
            }
        };
        let (n, payload, offset) = if bytes[0] == b'~' {
            if bytes.len() < 4 {
                return Err(GraphError::Graph6Truncated {
                    n: 0,
                    expected: 4,
                    got: bytes.len(),
                });
            }
            let mut n = 0u64;
            for (i, &b) in bytes[1..4].iter().enumerate() {
                n = (n << 6) | check(i + 1, b)?;
            }
            (n as usize, &bytes[4..], 4usize)
        } else {
            (check(0, bytes[0])? as usize, &bytes[1..], 1usize)
        };
        if n == 0 {
            return Err(GraphError::EmptyOrder);
        }
        let cap = cap.min(Self::MAX_VERTICES);
        if n > cap {
            return Err(GraphError::OrderExceedsCap { n, cap });
        }
        let nbits = n * (n - 1) / 2;
        let nbytes = nbits.div_ceil(6);
        if payload.len() != nbytes {
            return Err(GraphError::Graph6Truncated {
                n,
                expected: nbytes,
                got: payload.len(),
            });
        }
        let mut adj = vec![0u64; n];
        let mut k = 0usize; // bit cursor over the upper triangle
        'cols: for j in 1..n {
            for i in 0..j {
                let byte = check(offset + k / 6, payload[k / 6])?;
                if byte >> (5 - k % 6) & 1 != 0 {
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
                k += 1;
                if k == nbits {
                    break 'cols;
                }
            }
        }
        // Padding bits past the triangle must be zero in canonical graph6;
        // tolerate them silently, as reference decoders do.
        Ok(Graph {
            n,
            adj,
            label: None,
        })
    }

    /// Canonical graph6 line for this graph; round-trips with `from_graph6`.
    pub fn to_graph6(&self) -> String {
        let mut out = Vec::new();
        if self.n <= 62 {
            out.push(self.n as u8 + 63);
        } else {
            out.push(b'~');
            out.push(((self.n >> 12) & 0x3f) as u8 + 63);
            out.push(((self.n >> 6) & 0x3f) as u8 + 63);
            out.push((self.n & 0x3f) as u8 + 63);
        }
        let mut acc = 0u8;
        let mut filled = 0u8;
        for j in 1..self.n {
            for i in 0..j {
                acc = (acc << 1) | u8::from(self.has_edge(i, j));
                filled += 1;
                if filled == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((acc << (6 - filled)) + 63);
        }
        String::from_utf8(out).expect("graph6 bytes are printable ASCII")
    }

    /// Parses the whitespace edge-list format: first token is the order,
    /// followed by pairs `u v`. Duplicate edges collapse.
    pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
        Self::from_edge_list_with_cap(text, Self::DEFAULT_CAP)
    }

    pub fn from_edge_list_with_cap(text: &str, cap: usize) -> Result<Graph, GraphError> {
        let mut tokens = text.split_whitespace();
        let parse = |tok: &str| {
            tok.parse::<usize>().map_err(|_| GraphError::EdgeListBadToken {
                token: tok.to_string(),
            })
        };
        let n = match tokens.next() {
            None => return Err(GraphError::EdgeListEmpty),
            Some(tok) => parse(tok)?,
        };
        if n == 0 {
            return Err(GraphError::EmptyOrder);
        }
        let cap = cap.min(Self::MAX_VERTICES);
        if n > cap {
            return Err(GraphError::OrderExceedsCap { n, cap });
        }
        let mut edges = Vec::new();
        while let Some(tok) = tokens.next() {
            let u = parse(tok)?;
            let v = match tokens.next() {
                None => return Err(GraphError::EdgeListDangling { u }),
                Some(tok) => parse(tok)?,
            };
            edges.push((u, v));
        }
        Graph::from_edges(n, &edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(l) => write!(f, "{l} (n={}, m={})", self.n, self.m()),
            None => write!(f, "{} (n={}, m={})", self.to_graph6(), self.n, self.m()),
        }
    }
}

/// Builds a standard labeled family member.
///
/// Paths run `0-1-...-(n-1)`, cycles close the path, stars have center 0.
pub fn generate(kind: GraphKind, n: usize) -> Result<Graph, GraphError> {
    let min = match kind {
        GraphKind::Cycle => 3,
        _ => 1,
    };
    if n < min {
        return Err(GraphError::FamilyMinimum { kind, min, n });
    }
    let mut edges = Vec::new();
    match kind {
        GraphKind::Path => edges.extend((1..n).map(|v| (v - 1, v))),
        GraphKind::Cycle => {
            edges.extend((1..n).map(|v| (v - 1, v)));
            edges.push((n - 1, 0));
        }
        GraphKind::Star => edges.extend((1..n).map(|v| (0, v))),
        GraphKind::Complete => {
            for u in 0..n {
                for v in (u + 1)..n {
                    edges.push((u, v));
                }
            }
        }
        GraphKind::Empty => {}
    }
    let name = match kind {
        GraphKind::Path => format!("P_{n}"),
        GraphKind::Cycle => format!("C_{n}"),
        GraphKind::Star => format!("S_{n}"),
        GraphKind::Complete => format!("K_{n}"),
        GraphKind::Empty => format!("E_{n}"),
    };
    Ok(Graph::from_edges(n, &edges)?.with_label(name))
}

/// Largest order accepted by [`is_isomorphic`].
pub const ISO_CAP: usize = 10;

/// Exact isomorphism test by permutation search with degree-class pruning.
///
/// Only intended for validating structural claims on tiny graphs; orders
/// above [`ISO_CAP`] are rejected.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool, GraphError> {
    let n = a.n();
    for g in [a, b] {
        if g.n() > ISO_CAP {
            return Err(GraphError::IsoCapExceeded {
                n: g.n(),
                cap: ISO_CAP,
            });
        }
    }
    if n != b.n() || a.m() != b.m() || a.degree_sequence() != b.degree_sequence() {
        return Ok(false);
    }
    // map[u] = image of a's vertex u in b; candidates restricted to equal degree.
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    Ok(extend_mapping(a, b, 0, &mut map, &mut used))
}

fn extend_mapping(a: &Graph, b: &Graph, u: usize, map: &mut [usize], used: &mut u64) -> bool {
    let n = a.n();
    if u == n {
        return true;
    }
    for w in 0..n {
        if *used & bit(w) != 0 || a.degree(u) != b.degree(w) {
            continue;
        }
        // consistency with the already-mapped prefix
        if (0..u).all(|p| a.has_edge(p, u) == b.has_edge(map[p], w)) {
            map[u] = w;
            *used |= bit(w);
            if extend_mapping(a, b, u + 1, map, used) {
                return true;
            }
            *used &= !bit(w);
            map[u] = usize::MAX;
        }
    }
    false
}
