//! Gallai–Edmonds decomposition and the structural queries the branching
//! rules need.
//!
//! The vertex set splits into three parts: the vertices some maximum
//! matching leaves exposed, their neighborhood, and the rest. Components
//! of the first part are factor-critical and the rest induces a perfectly
//! matchable subgraph.

use std::collections::BTreeSet;

use crate::dense::DenseGraph;
use crate::graph::{Graph, VertexId};
use crate::matching::blossom;
use crate::{Error, Result};

/// The decomposition `V = exposable ⊎ boundary ⊎ perfectly_matched`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GallaiEdmonds {
    /// Vertices left exposed by at least one maximum matching.
    pub exposable: BTreeSet<VertexId>,
    /// Neighborhood of the exposable part (outside it).
    pub boundary: BTreeSet<VertexId>,
    /// Everything else; induces a subgraph with a perfect matching.
    pub perfectly_matched: BTreeSet<VertexId>,
    /// Connected components of the subgraph induced by `exposable`,
    /// ordered by smallest member. Each is factor-critical.
    pub exposable_components: Vec<BTreeSet<VertexId>>,
}

impl GallaiEdmonds {
    /// `boundary ∪ perfectly_matched` — the part branching rule one
    /// looks for an edge in.
    pub fn inner_part(&self) -> BTreeSet<VertexId> {
        self.boundary
            .union(&self.perfectly_matched)
            .copied()
            .collect()
    }
}

/// Computes the decomposition by the per-vertex test
/// `MM(g - v) = MM(g)`, one blossom run per vertex.
pub fn decompose(g: &Graph) -> GallaiEdmonds {
    let dense = DenseGraph::from_graph(g);
    let n = dense.n();
    let mut alive = vec![true; n];
    let mm = blossom::matching_size(&dense.adj, &alive);

    let mut exposable = BTreeSet::new();
    for i in 0..n {
        alive[i] = false;
        if blossom::matching_size(&dense.adj, &alive) == mm {
            exposable.insert(dense.ids[i]);
        }
        alive[i] = true;
    }

    let boundary = g.neighborhood_of_set(&exposable).unwrap();
    let perfectly_matched: BTreeSet<VertexId> = g
        .vertices()
        .filter(|v| !exposable.contains(v) && !boundary.contains(v))
        .collect();
    let exposable_components = g.induced_subgraph(&exposable).unwrap().components();

    GallaiEdmonds {
        exposable,
        boundary,
        perfectly_matched,
        exposable_components,
    }
}

/// True iff deleting any single vertex leaves a perfectly matchable graph.
pub fn is_factor_critical(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let dense = DenseGraph::from_graph(g);
    let mut alive = vec![true; n];
    (0..n).all(|i| {
        alive[i] = false;
        let ok = 2 * blossom::matching_size(&dense.adj, &alive) == n - 1;
        alive[i] = true;
        ok
    })
}

/// Picks the branching triple for the all-exposable case: the smallest
/// exposable vertex with at least two exposable neighbors, plus its two
/// smallest such neighbors.
///
/// Requires the inner part to be independent (so it is empty of
/// perfectly-matched vertices) and the graph to be reduced; under those
/// preconditions such a vertex always exists.
pub fn find_branch_vertex(
    g: &Graph,
    d: &GallaiEdmonds,
) -> Result<(VertexId, VertexId, VertexId)> {
    if !g.is_independent_set(&d.inner_part()) {
        return Err(Error::ContractViolation(
            "find_branch_vertex requires the inner part to be independent".into(),
        ));
    }
    for &u in &d.exposable {
        let mut found = Vec::with_capacity(2);
        for &v in g.neighbors(u)? {
            if d.exposable.contains(&v) {
                found.push(v);
                if found.len() == 2 {
                    return Ok((u, found[0], found[1]));
                }
            }
        }
    }
    Err(Error::ContractViolation(
        "no exposable vertex with two exposable neighbors; graph is not reduced".into(),
    ))
}

/// The lexicographically smallest edge inside `boundary ∪
/// perfectly_matched`, if any.
pub fn find_inner_edge(g: &Graph, d: &GallaiEdmonds) -> Option<(VertexId, VertexId)> {
    let inner = d.inner_part();
    for &u in &inner {
        for &v in g.neighbors(u).unwrap() {
            if v > u && inner.contains(&v) {
                return Some((u, v));
            }
        }
    }
    None
}
