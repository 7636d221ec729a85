//! Exact brute-force oracle: iterate every rotation system of a graph and
//! aggregate the exact face-count distribution and expected number of faces
//! as a rational. Everything here is exact big-integer arithmetic; no floats.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::multigraph::{DartId, GraphSummary, MultiGraph};
use crate::rotation::{genus_from_counts, rotation_count, RotationSystem};

/// Default cap on the number of rotation systems an enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("graph has {count} rotation systems, over the enumeration budget of {budget}")]
    BudgetExceeded { count: BigUint, budget: u64 },
}

/// Exact statistics over all embeddings of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactStats {
    pub total_embeddings: BigUint,
    /// faces -> number of rotation systems attaining it
    pub face_distribution: BTreeMap<usize, u64>,
    /// total genus -> number of rotation systems attaining it
    pub genus_distribution: BTreeMap<usize, u64>,
    /// Sum of F over all systems divided by their count, in lowest terms.
    pub expected_faces: BigRational,
}

impl ExactStats {
    /// Canonical JSON document: counts as decimal strings in ascending key
    /// order, expected faces as `p/q`.
    pub fn to_json_value(&self, graph: &GraphSummary) -> serde_json::Value {
        let mut faces = serde_json::Map::new();
        for (f, c) in &self.face_distribution {
            faces.insert(f.to_string(), serde_json::Value::String(c.to_string()));
        }
        let mut genus = serde_json::Map::new();
        for (g, c) in &self.genus_distribution {
            genus.insert(g.to_string(), serde_json::Value::String(c.to_string()));
        }
        serde_json::json!({
            "graph": graph,
            "total_embeddings": self.total_embeddings.to_string(),
            "face_distribution": serde_json::Value::Object(faces),
            "genus_distribution": serde_json::Value::Object(genus),
            "expected_faces": format!("{}/{}", self.expected_faces.numer(), self.expected_faces.denom()),
        })
    }
}

/// Streams every rotation system exactly once: the first dart at each vertex
/// is anchored and the remaining darts run through their permutations in
/// lexicographic order, earlier vertices most significant.
#[derive(Debug)]
pub struct RotationEnumerator<'g> {
    g: &'g MultiGraph,
    perms: Vec<Vec<DartId>>, // non-anchor darts per vertex, current order
    next: Vec<DartId>,
    fresh: bool,
    done: bool,
}

impl<'g> RotationEnumerator<'g> {
    fn new(g: &'g MultiGraph) -> Self {
        let perms: Vec<Vec<DartId>> = (1..=g.vertex_count())
            .map(|v| g.dart_range(v).skip(1).collect())
            .collect();
        let mut e = RotationEnumerator {
            g,
            perms,
            next: vec![0; g.dart_count()],
            fresh: true,
            done: false,
        };
        e.rebuild_next();
        e
    }

    fn rebuild_next(&mut self) {
        for v in 1..=self.g.vertex_count() {
            let anchor = self.g.dart_range(v).start;
            let mut prev = anchor;
            for &d in &self.perms[v - 1] {
                self.next[prev] = d;
                prev = d;
            }
            self.next[prev] = anchor;
        }
    }

    /// Advance to the next rotation system; false once exhausted.
    fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if self.fresh {
            self.fresh = false;
            return true;
        }
        // odometer with the last vertex as the fastest digit
        for v in (1..=self.g.vertex_count()).rev() {
            if next_permutation(&mut self.perms[v - 1]) {
                self.rebuild_next();
                return true;
            }
            self.perms[v - 1].sort_unstable();
        }
        self.done = true;
        false
    }

    /// Successor map of the current rotation system.
    fn current(&self) -> &[DartId] {
        &self.next
    }
}

impl Iterator for RotationEnumerator<'_> {
    type Item = RotationSystem;

    fn next(&mut self) -> Option<RotationSystem> {
        if self.advance() {
            RotationSystem::from_next(self.g, self.current().to_vec())
        } else {
            None
        }
    }
}

/// Classic in-place lexicographic successor; false when `a` was the last
/// permutation.
fn next_permutation<T: Ord>(a: &mut [T]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

fn check_budget(g: &MultiGraph, budget: u64) -> Result<u64, EnumerationError> {
    let count = rotation_count(g);
    match count.to_u64() {
        Some(c) if c <= budget => Ok(c),
        _ => Err(EnumerationError::BudgetExceeded { count, budget }),
    }
}

/// All rotation systems of `g`, refusing rather than truncating when the
/// count exceeds `budget`.
pub fn enumerate_rotations(
    g: &MultiGraph,
    budget: u64,
) -> Result<RotationEnumerator<'_>, EnumerationError> {
    check_budget(g, budget)?;
    Ok(RotationEnumerator::new(g))
}

/// The rotation system at a given position of the enumeration order, for
/// checkpointing and range-partitioned runs.
pub fn rotation_by_index(g: &MultiGraph, mut index: u64) -> Option<RotationSystem> {
    let mut per_vertex: Vec<u64> = Vec::with_capacity(g.vertex_count());
    for v in 1..=g.vertex_count() {
        let d = g.dart_range(v).len();
        let mut f = 1u64;
        for k in 2..d {
            f = f.checked_mul(k as u64)?;
        }
        per_vertex.push(f);
    }
    let mut next = vec![0usize; g.dart_count()];
    // last vertex is the fastest digit
    let mut digits = vec![0u64; g.vertex_count()];
    for v in (1..=g.vertex_count()).rev() {
        digits[v - 1] = index % per_vertex[v - 1];
        index /= per_vertex[v - 1];
    }
    if index > 0 {
        return None;
    }
    for v in 1..=g.vertex_count() {
        let range = g.dart_range(v);
        let mut items: Vec<DartId> = range.clone().skip(1).collect();
        let order = unrank_permutation(&mut items, digits[v - 1]);
        let mut prev = range.start;
        for d in order {
            next[prev] = d;
            prev = d;
        }
        next[prev] = range.start;
    }
    RotationSystem::from_next(g, next)
}

/// Lexicographic unranking via the factorial number system.
fn unrank_permutation(items: &mut Vec<DartId>, mut rank: u64) -> Vec<DartId> {
    items.sort_unstable();
    let n = items.len();
    let mut fact = vec![1u64; n + 1];
    for k in 1..=n {
        fact[k] = fact[k - 1].saturating_mul(k as u64);
    }
    let mut out = Vec::with_capacity(n);
    for pos in (1..=n).rev() {
        let f = fact[pos - 1];
        let idx = (rank / f) as usize;
        rank %= f;
        out.push(items.remove(idx));
    }
    out
}

/// Trace every rotation system of `g` and aggregate exact statistics.
pub fn exact_face_stats(g: &MultiGraph, budget: u64) -> Result<ExactStats, EnumerationError> {
    let total = check_budget(g, budget)?;

    // per-component counts are rotation-independent
    let (comp_of, comp_count) = g.component_ids();
    let mut verts_in = vec![0usize; comp_count];
    for v in 1..=g.vertex_count() {
        verts_in[comp_of[v - 1]] += 1;
    }
    let mut edges_in = vec![0usize; comp_count];
    for e in g.edges() {
        edges_in[comp_of[e.u - 1]] += 1;
    }

    let mut face_distribution: BTreeMap<usize, u64> = BTreeMap::new();
    let mut genus_distribution: BTreeMap<usize, u64> = BTreeMap::new();
    let nd = g.dart_count();
    let mut seen = vec![false; nd];
    let mut faces_in = vec![0usize; comp_count];
    let mut visited = 0u64;

    let mut en = RotationEnumerator::new(g);
    while en.advance() {
        visited += 1;
        let next = en.current();
        seen.fill(false);
        faces_in.fill(0);
        let mut faces = 0usize;
        for start in 0..nd {
            if seen[start] {
                continue;
            }
            let mut d = start;
            loop {
                seen[d] = true;
                d = next[g.partner(d)];
                if d == start {
                    break;
                }
            }
            faces += 1;
            faces_in[comp_of[g.vertex_of(start) - 1]] += 1;
        }
        let genus: usize = (0..comp_count)
            .map(|c| genus_from_counts(verts_in[c], edges_in[c], faces_in[c]))
            .sum();
        *face_distribution.entry(faces).or_insert(0) += 1;
        *genus_distribution.entry(genus).or_insert(0) += 1;
    }
    assert_eq!(visited, total, "enumerator must visit each system once");

    let mut weighted = BigInt::zero();
    for (&f, &c) in &face_distribution {
        weighted += BigInt::from(f) * BigInt::from(c);
    }
    let expected_faces = BigRational::new(weighted, BigInt::from(total));
    Ok(ExactStats {
        total_embeddings: BigUint::from(total),
        face_distribution,
        genus_distribution,
        expected_faces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytics::{dipole_expected_faces, harmonic, rational};
    use crate::generators::{bouquet, complete_graph, cycle, dipole, path, triangle_chain};

    #[test]
    fn enumeration_counts() {
        let count = |g: &MultiGraph| enumerate_rotations(g, DEFAULT_BUDGET).unwrap().count();
        assert_eq!(count(&triangle_chain(1).unwrap()), 1);
        assert_eq!(count(&dipole(3).unwrap()), 4);
        assert_eq!(count(&complete_graph(4).unwrap()), 16);
    }

    #[test]
    fn enumeration_yields_distinct_valid_systems() {
        let g = bouquet(2).unwrap();
        let systems: Vec<_> = enumerate_rotations(&g, DEFAULT_BUDGET)
            .unwrap()
            .map(|r| r.as_slice().to_vec())
            .collect();
        assert_eq!(systems.len(), 6);
        let set: std::collections::HashSet<_> = systems.iter().cloned().collect();
        assert_eq!(set.len(), 6);
    }

    #[test]
    fn budget_refusal_names_the_count() {
        let g = dipole(6).unwrap();
        let err = enumerate_rotations(&g, 100).unwrap_err();
        assert_eq!(
            err,
            EnumerationError::BudgetExceeded {
                count: BigUint::from(14400u32),
                budget: 100
            }
        );
        assert!(err.to_string().contains("14400"));
        assert!(exact_face_stats(&g, 100).is_err());
    }

    #[test]
    fn dipole3_distribution() {
        let st = exact_face_stats(&dipole(3).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(st.total_embeddings, BigUint::from(4u32));
        assert_eq!(st.face_distribution.get(&1), Some(&2));
        assert_eq!(st.face_distribution.get(&3), Some(&2));
        assert_eq!(st.expected_faces, rational(2, 1));
    }

    #[test]
    fn single_edge_is_a_tree() {
        let st = exact_face_stats(&dipole(1).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(st.expected_faces, rational(1, 1));
    }

    #[test]
    fn bouquet2_oracle() {
        let st = exact_face_stats(&bouquet(2).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(st.total_embeddings, BigUint::from(6u32));
        assert_eq!(st.face_distribution.get(&3), Some(&4));
        assert_eq!(st.face_distribution.get(&1), Some(&2));
        assert_eq!(st.expected_faces, rational(7, 3));
        // harmonic upper bound: E[F] <= 1 + H_2
        assert!(st.expected_faces <= rational(1, 1) + harmonic(2));
        assert_eq!(st.genus_distribution.get(&0), Some(&4));
        assert_eq!(st.genus_distribution.get(&1), Some(&2));
    }

    #[test]
    fn dipole_closed_form_matches_oracle() {
        for mu in 1..=6 {
            let st = exact_face_stats(&dipole(mu).unwrap(), DEFAULT_BUDGET).unwrap();
            assert_eq!(
                st.expected_faces,
                dipole_expected_faces(mu as u64),
                "dipole mu={mu}"
            );
        }
    }

    #[test]
    fn face_parity_is_constant_per_graph() {
        let graphs = vec![
            dipole(4).unwrap(),
            bouquet(3).unwrap(),
            complete_graph(4).unwrap(),
            cycle(5).unwrap(),
            path(4).unwrap(),
            triangle_chain(2).unwrap(),
        ];
        for g in &graphs {
            let st = exact_face_stats(g, DEFAULT_BUDGET).unwrap();
            let c = g.components().len();
            let parity = (g.edge_count() + 2 * c).wrapping_sub(g.vertex_count()) % 2;
            for &f in st.face_distribution.keys() {
                assert_eq!(f % 2, parity, "graph {:?}", g.summary());
            }
        }
    }

    #[test]
    fn index_checkpointing_agrees_with_stream_order() {
        let g = complete_graph(4).unwrap();
        let all: Vec<_> = enumerate_rotations(&g, DEFAULT_BUDGET).unwrap().collect();
        for (i, rot) in all.iter().enumerate() {
            assert_eq!(rotation_by_index(&g, i as u64).as_ref(), Some(rot));
        }
        assert!(rotation_by_index(&g, all.len() as u64).is_none());
    }
}
