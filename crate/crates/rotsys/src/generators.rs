//! Constructors for the example families used throughout: dipoles and dipole
//! chains, triangle chains, bouquets of loops, and the standard small graphs.

use crate::multigraph::{GraphError, MultiGraph};

/// Two vertices joined by `mu` parallel edges.
pub fn dipole(mu: usize) -> Result<MultiGraph, GraphError> {
    MultiGraph::from_edge_list(2, &[(1, 2, mu)])
}

/// `k` dipoles of multiplicity `mu` in a path, consecutive blocks joined by a
/// single cut edge. Block t occupies vertices 2t-1 and 2t; the cut edge runs
/// from the right vertex of block t to the left vertex of block t+1.
pub fn dipole_chain(k: usize, mu: usize) -> Result<MultiGraph, GraphError> {
    if k == 0 {
        return Err(GraphError::InvalidParameter("dipole chain needs k >= 1".into()));
    }
    let mut entries = Vec::with_capacity(2 * k);
    for t in 0..k {
        let left = 2 * t + 1;
        entries.push((left, left + 1, mu));
        if t + 1 < k {
            entries.push((left + 1, left + 2, 1));
        }
    }
    MultiGraph::from_edge_list(2 * k, &entries)
}

/// `k` triangles in a path, consecutive triangles joined by a single cut
/// edge. Triangle t occupies vertices 3t-2..3t; its third vertex hosts the
/// cut edge to the first vertex of triangle t+1.
pub fn triangle_chain(k: usize) -> Result<MultiGraph, GraphError> {
    if k == 0 {
        return Err(GraphError::InvalidParameter("triangle chain needs k >= 1".into()));
    }
    let mut entries = Vec::new();
    for t in 0..k {
        let a = 3 * t + 1;
        entries.push((a, a + 1, 1));
        entries.push((a + 1, a + 2, 1));
        entries.push((a, a + 2, 1));
        if t + 1 < k {
            entries.push((a + 2, a + 3, 1));
        }
    }
    MultiGraph::from_edge_list(3 * k, &entries)
}

/// A single vertex carrying `loops` loops.
pub fn bouquet(loops: usize) -> Result<MultiGraph, GraphError> {
    if loops == 0 {
        return Err(GraphError::InvalidParameter("bouquet needs >= 1 loop".into()));
    }
    MultiGraph::from_edge_list(1, &[(1, 1, loops)])
}

/// Complete simple graph on `n >= 2` vertices.
pub fn complete_graph(n: usize) -> Result<MultiGraph, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidParameter("complete graph needs n >= 2".into()));
    }
    let mut entries = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            entries.push((u, v, 1));
        }
    }
    MultiGraph::from_edge_list(n, &entries)
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<MultiGraph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter("cycle needs n >= 3".into()));
    }
    let mut entries: Vec<_> = (1..n).map(|v| (v, v + 1, 1)).collect();
    entries.push((n, 1, 1));
    MultiGraph::from_edge_list(n, &entries)
}

/// Path on `n >= 2` vertices (n - 1 edges). A 1-vertex path would have an
/// isolated vertex, which the graph type rejects.
pub fn path(n: usize) -> Result<MultiGraph, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidParameter("path needs n >= 2".into()));
    }
    let entries: Vec<_> = (1..n).map(|v| (v, v + 1, 1)).collect();
    MultiGraph::from_edge_list(n, &entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::MultiGraph;
    use crate::rotation::rotation_count;
    use num_traits::ToPrimitive;

    /// Test-only bridge finder: an edge is a bridge iff removing it
    /// increases the number of components.
    fn bridge_count(g: &MultiGraph) -> usize {
        let base = g.components().len();
        let all: Vec<(usize, usize, usize)> = g
            .edges()
            .iter()
            .map(|e| (e.u, e.v, 1usize))
            .collect();
        let mut bridges = 0;
        for skip in 0..all.len() {
            let rest: Vec<_> = all
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, &e)| e)
                .collect();
            // removal may isolate a vertex; count components over the same
            // vertex set by hand in that case
            let comps = match MultiGraph::from_edge_list(g.vertex_count(), &rest) {
                Ok(h) => h.components().len(),
                Err(_) => usize::MAX, // isolated endpoint: definitely a bridge
            };
            if comps != base {
                bridges += 1;
            }
        }
        bridges
    }

    #[test]
    fn dipole_examples() {
        assert_eq!(dipole(1).unwrap().edge_count(), 1);
        let g = dipole(5).unwrap();
        assert_eq!(g.degree(1).unwrap(), 5);
        assert_eq!(g.degree(2).unwrap(), 5);
        assert_eq!(rotation_count(&dipole(3).unwrap()).to_u64(), Some(4));
        assert!(dipole(0).is_err());
        assert!(dipole(4).unwrap().is_dipole());
    }

    #[test]
    fn dipole_chain_examples() {
        assert_eq!(dipole_chain(1, 3).unwrap().to_text(), dipole(3).unwrap().to_text());
        let g = dipole_chain(3, 5).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 17);
        let h = dipole_chain(2, 2).unwrap();
        let degs: Vec<usize> = (1..=4).map(|v| h.degree(v).unwrap()).collect();
        assert_eq!(degs, vec![2, 3, 3, 2]);
        assert!(dipole_chain(0, 2).is_err());
    }

    #[test]
    fn dipole_chain_has_k_minus_one_bridges() {
        for (k, mu) in [(1, 3), (2, 2), (3, 2), (2, 5)] {
            assert_eq!(bridge_count(&dipole_chain(k, mu).unwrap()), k - 1);
        }
    }

    #[test]
    fn triangle_chain_examples() {
        let g = triangle_chain(1).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        let h = triangle_chain(2).unwrap();
        assert_eq!(h.vertex_count(), 6);
        assert_eq!(h.edge_count(), 7);
        let degs: Vec<usize> = (1..=6).map(|v| h.degree(v).unwrap()).collect();
        assert_eq!(degs, vec![2, 2, 3, 3, 2, 2]);
        assert_eq!(rotation_count(&h).to_u64(), Some(4));
        assert!(h.is_simple());
        assert!(triangle_chain(0).is_err());
        for k in 2..=4 {
            let g = triangle_chain(k).unwrap();
            assert!(g.is_simple());
            let max_deg = (1..=g.vertex_count())
                .map(|v| g.degree(v).unwrap())
                .max()
                .unwrap();
            assert_eq!(max_deg, 3);
        }
    }

    #[test]
    fn bouquet_examples() {
        assert!(bouquet(0).is_err());
        assert_eq!(bouquet(1).unwrap().degree(1).unwrap(), 2);
        assert_eq!(rotation_count(&bouquet(2).unwrap()).to_u64(), Some(6));
        assert_eq!(rotation_count(&bouquet(3).unwrap()).to_u64(), Some(120));
    }

    #[test]
    fn standard_graphs() {
        assert_eq!(cycle(3).unwrap().to_text(), triangle_chain(1).unwrap().to_text());
        assert_eq!(rotation_count(&complete_graph(4).unwrap()).to_u64(), Some(16));
        assert_eq!(path(5).unwrap().edge_count(), 4);
        assert!(path(1).is_err());
        assert!(cycle(2).is_err());
        assert!(complete_graph(1).is_err());
    }
}
