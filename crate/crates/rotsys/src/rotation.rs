//! Rotation systems, face tracing and genus.
//!
//! A rotation system assigns a cyclic order to the darts at every vertex and
//! is in bijection with the equivalence classes of orientable 2-cell
//! embeddings of the graph. Faces are the orbits of `d -> sigma(alpha(d))`,
//! where `sigma` is the rotation successor and `alpha` the edge involution;
//! the genus of each connected component then follows from Euler's formula.

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;
use serde::Serialize;
use std::fmt::Write as _;

use crate::multigraph::{DartId, MultiGraph};

/// A complete rotation system: `next[d]` is the successor of dart `d` in the
/// cyclic order around its vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RotationSystem {
    next: Vec<DartId>,
}

/// Faces and per-component genus of a traced embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceCensus {
    pub face_count: usize,
    /// Boundary walk lengths in darts, ascending. Sums to 2|E|.
    pub face_lengths: Vec<usize>,
    /// Genus per connected component, in `components()` order.
    pub genus_per_component: Vec<usize>,
    pub total_genus: usize,
}

impl RotationSystem {
    /// The canonical rotation: at every vertex the darts in increasing id
    /// order. This is the fixed cyclic order the pairing process starts from.
    pub fn canonical(g: &MultiGraph) -> Self {
        let mut next = vec![0usize; g.dart_count()];
        for v in 1..=g.vertex_count() {
            let r = g.dart_range(v);
            for d in r.clone() {
                next[d] = if d + 1 < r.end { d + 1 } else { r.start };
            }
        }
        RotationSystem { next }
    }

    /// Uniform sample over all `prod (deg(v)-1)!` rotation systems: the first
    /// dart of each vertex block is anchored and the rest are shuffled.
    pub fn uniform_random<R: Rng + ?Sized>(g: &MultiGraph, rng: &mut R) -> Self {
        let mut next = vec![0usize; g.dart_count()];
        let mut order = Vec::new();
        for v in 1..=g.vertex_count() {
            let r = g.dart_range(v);
            order.clear();
            order.extend(r.clone().skip(1));
            // Fisher-Yates on the non-anchored darts
            for i in (1..order.len()).rev() {
                let j = rng.gen_range(0..=i);
                order.swap(i, j);
            }
            let mut prev = r.start;
            for &d in &order {
                next[prev] = d;
                prev = d;
            }
            next[prev] = r.start;
        }
        RotationSystem { next }
    }

    /// Build from an explicit successor permutation, checking that every
    /// vertex's darts form a single cycle of its full degree.
    pub fn from_next(g: &MultiGraph, next: Vec<DartId>) -> Option<Self> {
        if next.len() != g.dart_count() {
            return None;
        }
        for v in 1..=g.vertex_count() {
            let r = g.dart_range(v);
            let mut seen = 0usize;
            let mut d = r.start;
            loop {
                if !r.contains(&d) {
                    return None;
                }
                seen += 1;
                d = *next.get(d)?;
                if d == r.start {
                    break;
                }
                if seen > r.len() {
                    return None;
                }
            }
            if seen != r.len() {
                return None;
            }
        }
        Some(RotationSystem { next })
    }

    pub fn successor(&self, d: DartId) -> DartId {
        self.next[d]
    }

    pub fn as_slice(&self) -> &[DartId] {
        &self.next
    }

    /// Trace all faces as orbits of `d -> sigma(alpha(d))` and derive the
    /// genus of every component from Euler's formula.
    pub fn trace_faces(&self, g: &MultiGraph) -> FaceCensus {
        let nd = g.dart_count();
        let mut seen = vec![false; nd];
        let mut face_lengths = Vec::new();
        let (comp_of, comp_count) = g.component_ids();
        let mut faces_in = vec![0usize; comp_count];
        for start in 0..nd {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut d = start;
            loop {
                seen[d] = true;
                len += 1;
                d = self.next[g.partner(d)];
                if d == start {
                    break;
                }
            }
            face_lengths.push(len);
            faces_in[comp_of[g.vertex_of(start) - 1]] += 1;
        }
        face_lengths.sort_unstable();

        // per-component vertex and edge counts
        let mut verts_in = vec![0usize; comp_count];
        for v in 1..=g.vertex_count() {
            verts_in[comp_of[v - 1]] += 1;
        }
        let mut edges_in = vec![0usize; comp_count];
        for e in g.edges() {
            edges_in[comp_of[e.u - 1]] += 1;
        }
        let genus_per_component: Vec<usize> = (0..comp_count)
            .map(|c| genus_from_counts(verts_in[c], edges_in[c], faces_in[c]))
            .collect();
        let total_genus = genus_per_component.iter().sum();
        FaceCensus {
            face_count: face_lengths.len(),
            face_lengths,
            genus_per_component,
            total_genus,
        }
    }

    /// One line per vertex: `v: d0 d1 ...` in cyclic order from the anchored
    /// (lowest-id) dart.
    pub fn to_text(&self, g: &MultiGraph) -> String {
        let mut s = String::new();
        for v in 1..=g.vertex_count() {
            let r = g.dart_range(v);
            let _ = write!(s, "{v}:");
            let mut d = r.start;
            loop {
                let _ = write!(s, " {d}");
                d = self.next[d];
                if d == r.start {
                    break;
                }
            }
            s.push('\n');
        }
        s
    }
}

/// Genus of one connected component: `(2 - n + e - f) / 2`.
///
/// Panics if the result is negative or odd, which can only come from a bug
/// in face tracing, never from user input.
pub fn genus_from_counts(n_c: usize, e_c: usize, f_c: usize) -> usize {
    let two_genus = (2 + e_c) as i64 - n_c as i64 - f_c as i64;
    assert!(
        two_genus >= 0 && two_genus % 2 == 0,
        "Euler formula violated: n={n_c} e={e_c} f={f_c}"
    );
    (two_genus / 2) as usize
}

/// Number of distinct rotation systems: `prod_v (deg(v) - 1)!`.
pub fn rotation_count(g: &MultiGraph) -> BigUint {
    let mut total = BigUint::one();
    for v in 1..=g.vertex_count() {
        let d = g.dart_range(v).len();
        for k in 2..d {
            total *= BigUint::from(k);
        }
    }
    total
}
