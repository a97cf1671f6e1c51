//! Graphs with loops on the vertex set {1, ..., n}: matchings, the matching
//! numbers nu (max edge count) and mu (max covered vertices), the extremal
//! edge-count bounds u_a / u_s, and exhaustive enumeration of small graphs.
//!
//! Vertices are 1-based everywhere in this module, matching the file formats.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("u_a requires an even k, got {0}")]
    OddK(u64),
    #[error("k = {k} exceeds n = {n}")]
    KExceedsN { k: u64, n: u64 },
    #[error("enumeration of graphs on {n} vertices (loops: {loops}) is too large")]
    EnumerationTooLarge { n: usize, loops: bool },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("edges are not pairwise disjoint")]
    NotAMatching,
}

/// A loop `{v}` or a pair `{lo, hi}` with `lo < hi`; vertices are 1-based.
///
/// The ordering is the lexicographic order on the sorted vertex list, so
/// `{1} < {1,2} < {2} < {2,3}`. This is the tie-breaking order for matching
/// witnesses, not the colex order on cells.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Edge {
    lo: usize,
    hi: usize,
}

impl Edge {
    pub fn pair(a: usize, b: usize) -> Edge {
        assert!(a != b, "a pair edge needs two distinct vertices");
        assert!(a >= 1 && b >= 1, "vertices are 1-based");
        Edge { lo: a.min(b), hi: a.max(b) }
    }

    pub fn loop_at(v: usize) -> Edge {
        assert!(v >= 1, "vertices are 1-based");
        Edge { lo: v, hi: v }
    }

    pub fn is_loop(&self) -> bool {
        self.lo == self.hi
    }

    /// |e|: 1 for a loop, 2 for a pair.
    pub fn size(&self) -> usize {
        if self.is_loop() {
            1
        } else {
            2
        }
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        let second = if self.is_loop() { None } else { Some(self.hi) };
        std::iter::once(self.lo).chain(second)
    }

    pub fn intersects(&self, other: &Edge) -> bool {
        self.vertices().any(|v| other.vertices().any(|w| v == w))
    }

    fn bitmask(&self) -> u32 {
        let mut m = 1u32 << (self.lo - 1);
        if !self.is_loop() {
            m |= 1u32 << (self.hi - 1);
        }
        m
    }
}

impl Ord for Edge {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Lexicographic on the vertex list; a loop is a prefix of any pair
        // starting at the same vertex.
        self.lo
            .cmp(&other.lo)
            .then(self.size().cmp(&other.size()))
            .then(self.hi.cmp(&other.hi))
    }
}

impl PartialOrd for Edge {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_loop() {
            write!(f, "{{{}}}", self.lo)
        } else {
            write!(f, "{{{},{}}}", self.lo, self.hi)
        }
    }
}

/// A set of pairwise disjoint edges.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    pub fn new(mut edges: Vec<Edge>) -> Result<Matching, GraphError> {
        edges.sort();
        for i in 0..edges.len() {
            for j in (i + 1)..edges.len() {
                if edges[i].intersects(&edges[j]) {
                    return Err(GraphError::NotAMatching);
                }
            }
        }
        Ok(Matching { edges })
    }

    pub fn empty() -> Matching {
        Matching { edges: Vec::new() }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Total number of covered vertices.
    pub fn weight(&self) -> usize {
        self.edges.iter().map(|e| e.size()).sum()
    }

    pub fn covered_vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.edges.iter().flat_map(|e| e.vertices()).collect();
        vs.sort_unstable();
        vs
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{ ")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, " }}")
    }
}

/// A graph with loops on {1, ..., n}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LoopGraph {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl LoopGraph {
    pub fn new(n: usize) -> LoopGraph {
        LoopGraph { n, edges: BTreeSet::new() }
    }

    pub fn with_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<LoopGraph, GraphError> {
        let mut g = LoopGraph::new(n);
        for e in edges {
            g.insert(e)?;
        }
        Ok(g)
    }

    pub fn insert(&mut self, e: Edge) -> Result<(), GraphError> {
        for v in e.vertices() {
            if v > self.n {
                return Err(GraphError::VertexOutOfRange { v, n: self.n });
            }
        }
        self.edges.insert(e);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    pub fn is_loopless(&self) -> bool {
        self.edges.iter().all(|e| !e.is_loop())
    }

    /// Max number of vertices covered by a matching over subsets of the
    /// vertex mask, by bitmask dynamic programming.
    fn dp(&self, edge_weight: impl Fn(&Edge) -> u32) -> Vec<u32> {
        assert!(self.n <= 24, "matching DP limited to n <= 24");
        let full = 1usize << self.n;
        let edges: Vec<(u32, u32)> =
            self.edges.iter().map(|e| (e.bitmask(), edge_weight(e))).collect();
        let mut dp = vec![0u32; full];
        for mask in 1..full {
            let v = mask.trailing_zeros() as usize;
            let vbit = 1u32 << v;
            let mut best = dp[mask & !(vbit as usize)];
            for &(em, w) in &edges {
                if em & vbit != 0 && (em as usize) & mask == em as usize {
                    best = best.max(w + dp[mask & !(em as usize)]);
                }
            }
            dp[mask] = best;
        }
        dp
    }

    /// nu(G): maximum number of edges in a matching.
    pub fn nu(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        self.dp(|_| 1)[(1usize << self.n) - 1] as usize
    }

    /// mu(G): maximum number of vertices covered by a matching. For loopless
    /// graphs mu = 2 nu.
    pub fn mu(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        self.dp(|e| e.size() as u32)[(1usize << self.n) - 1] as usize
    }

    /// A matching attaining mu(G); ties broken toward the lexicographically
    /// smallest sorted edge list.
    pub fn max_matching_witness(&self) -> Matching {
        if self.n == 0 {
            return Matching::empty();
        }
        let dp = self.dp(|e| e.size() as u32);
        let mut mask = (1usize << self.n) - 1;
        let mut picked = Vec::new();
        // The edge set iterates in increasing Edge order, so the first usable
        // edge at each step is the lex-smallest head of an optimal matching.
        while dp[mask] > 0 {
            let e = self
                .edges
                .iter()
                .find(|e| {
                    let em = e.bitmask() as usize;
                    em & mask == em && e.size() as u32 + dp[mask & !em] == dp[mask]
                })
                .expect("dp value must be attained by some edge");
            picked.push(*e);
            mask &= !(e.bitmask() as usize);
        }
        Matching { edges: picked }
    }
}

impl fmt::Display for LoopGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{ ")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, " }}")
    }
}

fn choose2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// Maximum edge count of a loopless graph on n vertices with mu(G) = k (k
/// even): max{C(2t+1,2), tn - C(t+1,2)} for k = 2t.
pub fn u_a(n: u64, k: u64) -> Result<u64, GraphError> {
    if k % 2 != 0 {
        return Err(GraphError::OddK(k));
    }
    if k > n {
        return Err(GraphError::KExceedsN { k, n });
    }
    let t = k / 2;
    Ok(choose2(2 * t + 1).max(t * n - choose2(t + 1)))
}

/// Maximum edge count of a graph with loops on n vertices with mu(G) = k:
/// max{C(2t+1,2), tn - C(t,2)} for k = 2t and
/// max{C(2t+2,2), tn - C(t,2) + 1} for k = 2t + 1.
pub fn u_s(n: u64, k: u64) -> Result<u64, GraphError> {
    if k > n {
        return Err(GraphError::KExceedsN { k, n });
    }
    let t = k / 2;
    Ok(if k % 2 == 0 {
        choose2(2 * t + 1).max(t * n - choose2(t))
    } else {
        choose2(2 * t + 2).max(t * n - choose2(t) + 1)
    })
}

/// The edge universe: K_n, or K_n plus all loops.
pub fn edge_universe(n: usize, loops: bool) -> Vec<Edge> {
    let mut es = Vec::new();
    for v in 1..=n {
        if loops {
            es.push(Edge::loop_at(v));
        }
        for w in (v + 1)..=n {
            es.push(Edge::pair(v, w));
        }
    }
    es.sort();
    es
}

/// Streams every subgraph of K_n (or of K_n with loops) exactly once.
pub fn enumerate_graphs(n: usize, loops: bool) -> Result<GraphEnumerator, GraphError> {
    let max_n = if loops { 6 } else { 7 };
    if n > max_n {
        return Err(GraphError::EnumerationTooLarge { n, loops });
    }
    let universe = edge_universe(n, loops);
    Ok(GraphEnumerator { n, universe, next: 0 })
}

pub struct GraphEnumerator {
    n: usize,
    universe: Vec<Edge>,
    next: u64,
}

impl Iterator for GraphEnumerator {
    type Item = LoopGraph;

    fn next(&mut self) -> Option<LoopGraph> {
        if self.next >= 1u64 << self.universe.len() {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let edges = self
            .universe
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| *e);
        Some(LoopGraph::with_edges(self.n, edges).expect("universe edges are in range"))
    }
}

/// Parses the graph literal format: one edge per line, `i j` for a pair or
/// `i` for a loop, 1-based; `#` starts a comment and blank lines are
/// ignored. The vertex count is the largest vertex mentioned.
pub fn parse_graph(text: &str) -> Result<LoopGraph, GraphError> {
    let mut edges = Vec::new();
    let mut n = 0usize;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse_v = |tok: &str| -> Result<usize, GraphError> {
            let v: usize = tok.parse().map_err(|_| GraphError::Parse {
                line: lineno + 1,
                msg: format!("expected a vertex number, got '{tok}'"),
            })?;
            if v == 0 {
                return Err(GraphError::Parse {
                    line: lineno + 1,
                    msg: "vertices are 1-based".into(),
                });
            }
            Ok(v)
        };
        let toks: Vec<&str> = line.split_whitespace().collect();
        let e = match toks.as_slice() {
            [a] => Edge::loop_at(parse_v(a)?),
            [a, b] => {
                let (a, b) = (parse_v(a)?, parse_v(b)?);
                if a == b {
                    Edge::loop_at(a)
                } else {
                    Edge::pair(a, b)
                }
            }
            _ => {
                return Err(GraphError::Parse {
                    line: lineno + 1,
                    msg: format!("expected 'i j' or 'i', got '{line}'"),
                })
            }
        };
        n = n.max(e.hi());
        edges.push(e);
    }
    LoopGraph::with_edges(n, edges)
}
