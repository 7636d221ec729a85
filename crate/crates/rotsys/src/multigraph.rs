//! Dart-based multigraphs with loops and parallel edges.
//!
//! Every edge is split into two darts (half-edges); a loop contributes two
//! darts at the same vertex and counts 2 towards its degree. Vertices are
//! numbered `1..=n` throughout the public API, matching the text file format.
//! Dart ids are a dense `0..2|E|` range, assigned contiguously per vertex in
//! canonical edge order, so each vertex owns one contiguous block of dart ids.
//! That block order doubles as the canonical initial cyclic order used by the
//! incremental pairing process.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

/// 1-based vertex index.
pub type Vertex = usize;
/// Dense 0-based dart index.
pub type DartId = usize;
/// Dense 0-based edge index.
pub type EdgeId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {u}-{v} has zero multiplicity")]
    ZeroMultiplicity { u: Vertex, v: Vertex },
    #[error("vertex {0} has degree 0")]
    IsolatedVertex(Vertex),
    #[error("graph has no vertices")]
    Empty,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("bad graph file: {0}")]
    Parse(String),
}

/// One half of an edge, incident with exactly one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dart {
    pub id: DartId,
    pub vertex: Vertex,
}

/// An edge with its two darts and (normalized, u <= v) endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub dart_a: DartId,
    pub dart_b: DartId,
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// Immutable multigraph over vertices `1..=n`.
#[derive(Debug, Clone)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<Edge>,
    dart_vertex: Vec<Vertex>,
    dart_edge: Vec<EdgeId>,
    partner: Vec<DartId>,
    dart_start: Vec<usize>, // vertex block offsets, len n+1
    mu_pair: BTreeMap<(Vertex, Vertex), usize>,
    mu_at: Vec<usize>,
    mu: usize,
}

/// Normalize an unordered vertex pair to (min, max).
pub fn norm_pair(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl MultiGraph {
    /// Build a multigraph from `(u, v, multiplicity)` entries with 1-based
    /// vertices. Duplicate pairs are summed; entries are canonically sorted
    /// first, so any two entry lists with the same multiset of pairs yield
    /// the same dart numbering.
    pub fn from_edge_list(
        n: usize,
        entries: &[(Vertex, Vertex, usize)],
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut mu_pair: BTreeMap<(Vertex, Vertex), usize> = BTreeMap::new();
        for &(u, v, mult) in entries {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if mult == 0 {
                return Err(GraphError::ZeroMultiplicity { u, v });
            }
            *mu_pair.entry(norm_pair(u, v)).or_insert(0) += mult;
        }

        // Degrees first, so dart blocks can be laid out per vertex.
        let mut degree = vec![0usize; n];
        for (&(u, v), &m) in &mu_pair {
            degree[u - 1] += m;
            degree[v - 1] += m; // loops hit the same slot twice
        }
        if let Some(v) = degree.iter().position(|&d| d == 0) {
            return Err(GraphError::IsolatedVertex(v + 1));
        }

        let mut dart_start = vec![0usize; n + 1];
        for v in 0..n {
            dart_start[v + 1] = dart_start[v] + degree[v];
        }
        let dart_count = dart_start[n];

        let mut next_slot: Vec<usize> = dart_start[..n].to_vec();
        let mut dart_vertex = vec![0usize; dart_count];
        let mut dart_edge = vec![0usize; dart_count];
        let mut partner = vec![0usize; dart_count];
        let mut edges = Vec::new();
        for (&(u, v), &m) in &mu_pair {
            for _ in 0..m {
                let id = edges.len();
                let a = next_slot[u - 1];
                next_slot[u - 1] += 1;
                let b = next_slot[v - 1];
                next_slot[v - 1] += 1;
                dart_vertex[a] = u;
                dart_vertex[b] = v;
                dart_edge[a] = id;
                dart_edge[b] = id;
                partner[a] = b;
                partner[b] = a;
                edges.push(Edge {
                    id,
                    dart_a: a,
                    dart_b: b,
                    u,
                    v,
                });
            }
        }

        let mut mu_at = vec![0usize; n];
        let mut mu = 0usize;
        for (&(u, v), &m) in &mu_pair {
            mu_at[u - 1] = mu_at[u - 1].max(m);
            mu_at[v - 1] = mu_at[v - 1].max(m);
            mu = mu.max(m);
        }

        Ok(MultiGraph {
            n,
            edges,
            dart_vertex,
            dart_edge,
            partner,
            dart_start,
            mu_pair,
            mu_at,
            mu,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn dart_count(&self) -> usize {
        self.dart_vertex.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    /// Number of darts incident with `v` (a loop contributes 2).
    pub fn degree(&self, v: Vertex) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.dart_start[v] - self.dart_start[v - 1])
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v == 0 || v > self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    /// The contiguous dart id range owned by vertex `v`; block order is the
    /// canonical cyclic order of the darts at `v`.
    pub fn dart_range(&self, v: Vertex) -> std::ops::Range<DartId> {
        debug_assert!(v >= 1 && v <= self.n);
        self.dart_start[v - 1]..self.dart_start[v]
    }

    pub fn vertex_of(&self, d: DartId) -> Vertex {
        self.dart_vertex[d]
    }

    pub fn dart(&self, d: DartId) -> Dart {
        Dart { id: d, vertex: self.dart_vertex[d] }
    }

    pub fn edge_of(&self, d: DartId) -> EdgeId {
        self.dart_edge[d]
    }

    /// The edge involution: the other dart of `d`'s edge.
    pub fn partner(&self, d: DartId) -> DartId {
        self.partner[d]
    }

    /// Multiplicity of the unordered pair {u, v} (0 when not adjacent).
    pub fn mu_pair(&self, u: Vertex, v: Vertex) -> usize {
        self.mu_pair.get(&norm_pair(u, v)).copied().unwrap_or(0)
    }

    /// All adjacent unordered pairs with their multiplicities, sorted.
    pub fn pairs(&self) -> impl Iterator<Item = ((Vertex, Vertex), usize)> + '_ {
        self.mu_pair.iter().map(|(&p, &m)| (p, m))
    }

    /// Maximum multiplicity among edges incident with `v`.
    pub fn mu_at(&self, v: Vertex) -> usize {
        self.mu_at[v - 1]
    }

    /// Global maximum edge multiplicity.
    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn has_loops(&self) -> bool {
        self.mu_pair.keys().any(|&(u, v)| u == v)
    }

    pub fn is_simple(&self) -> bool {
        self.mu == 1 && !self.has_loops()
    }

    /// True for the two-vertex graph whose edges all join the same pair.
    pub fn is_dipole(&self) -> bool {
        self.n == 2 && self.mu_pair.len() == 1 && !self.has_loops()
    }

    /// A vertex incident with every edge, if the graph is a loop-free star
    /// of (possibly parallel) edges with at least 2 vertices.
    pub fn parallel_star_center(&self) -> Option<Vertex> {
        if self.n < 2 || self.has_loops() {
            return None;
        }
        (1..=self.n).find(|&c| self.edges.iter().all(|e| e.u == c || e.v == c))
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 1..=self.n {
            if seen[start - 1] {
                continue;
            }
            let mut comp = vec![start];
            seen[start - 1] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for d in self.dart_range(v) {
                    let w = self.dart_vertex[self.partner[d]];
                    if !seen[w - 1] {
                        seen[w - 1] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Component index of every vertex, aligned with `components()` order.
    pub fn component_ids(&self) -> (Vec<usize>, usize) {
        let comps = self.components();
        let mut id = vec![0usize; self.n];
        for (k, comp) in comps.iter().enumerate() {
            for &v in comp {
                id[v - 1] = k;
            }
        }
        (id, comps.len())
    }

    /// Compact one-line description used in reports.
    pub fn summary(&self) -> GraphSummary {
        GraphSummary {
            n: self.n,
            edges: self.edge_count(),
            mu: self.mu,
            mu_at: self.mu_at.clone(),
        }
    }

    /// Serialize to the text graph format (canonically sorted lines).
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.n, self.mu_pair.len());
        for (&(u, v), &m) in &self.mu_pair {
            let _ = writeln!(s, "{} {} {}", u, v, m);
        }
        s
    }

    /// Parse the text graph format: first line `n m_lines`, then `u v mult`
    /// lines with 1-based vertices. Lines starting with `#` are comments.
    pub fn from_text(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| GraphError::Parse("empty file".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::Parse(format!("bad header line: {header:?}")))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::Parse(format!("bad header line: {header:?}")))?;
        let mut entries = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| GraphError::Parse("fewer edge lines than header declares".into()))?;
            let mut it = line.split_whitespace();
            let mut field = |name: &str| {
                it.next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| GraphError::Parse(format!("bad {name} in line {line:?}")))
            };
            let u = field("u")?;
            let v = field("v")?;
            let mult = field("multiplicity")?;
            entries.push((u, v, mult));
        }
        if lines.next().is_some() {
            return Err(GraphError::Parse("more edge lines than header declares".into()));
        }
        Self::from_edge_list(n, &entries)
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct GraphSummary {
    pub n: usize,
    pub edges: usize,
    pub mu: usize,
    pub mu_at: Vec<usize>,
}
