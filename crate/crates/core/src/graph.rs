//! Simple undirected graph with stable vertex identifiers.
//!
//! Graphs are value-like: the mutation primitives (`delete_vertices`,
//! `identify_set`, `induced_subgraph`) return new graphs. Identifiers are
//! never reused within a graph's lineage; `identify_set` always allocates a
//! fresh one. Adjacency is kept as sorted neighbor lists so that every
//! iteration order is deterministic, which keeps branching traces
//! reproducible.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::{Error, Result};

/// Stable identifier of a vertex within one [`Graph`] lineage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A simple undirected graph: no self-loops, no parallel edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<VertexId, Vec<VertexId>>,
    edge_count: usize,
    next_id: u32,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph with vertices `0..n` and no edges.
    pub fn with_vertices(n: usize) -> Self {
        let adj = (0..n as u32).map(|i| (VertexId(i), Vec::new())).collect();
        Graph {
            adj,
            edge_count: 0,
            next_id: n as u32,
        }
    }

    /// Graph on vertices `0..n` with the given edges.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut g = Self::with_vertices(n);
        for &(u, v) in edges {
            g.add_edge(VertexId(u), VertexId(v))?;
        }
        Ok(g)
    }

    /// Adds a fresh vertex and returns its identifier.
    pub fn add_vertex(&mut self) -> VertexId {
        let v = VertexId(self.next_id);
        self.next_id += 1;
        self.adj.insert(v, Vec::new());
        v
    }

    /// Adds the edge `{u, v}`. Returns `false` if it was already present.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !self.adj.contains_key(&u) {
            return Err(Error::MissingVertex(u));
        }
        if !self.adj.contains_key(&v) {
            return Err(Error::MissingVertex(v));
        }
        let list = self.adj.get_mut(&u).unwrap();
        match list.binary_search(&v) {
            Ok(_) => return Ok(false),
            Err(pos) => list.insert(pos, v),
        }
        let list = self.adj.get_mut(&v).unwrap();
        let pos = list.binary_search(&u).unwrap_err();
        list.insert(pos, u);
        self.edge_count += 1;
        Ok(true)
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj
            .get(&u)
            .is_some_and(|list| list.binary_search(&v).is_ok())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    /// Vertices in ascending identifier order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.adj.keys().copied().collect()
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj.iter().flat_map(|(&u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.adj
            .get(&v)
            .map(Vec::len)
            .ok_or(Error::MissingVertex(v))
    }

    /// All neighbors of `v`, sorted ascending. Never contains `v` itself.
    pub fn neighbors(&self, v: VertexId) -> Result<&[VertexId]> {
        self.adj
            .get(&v)
            .map(Vec::as_slice)
            .ok_or(Error::MissingVertex(v))
    }

    /// `N(X)`: neighbors of members of `X` that are not themselves in `X`.
    pub fn neighborhood_of_set(&self, xs: &BTreeSet<VertexId>) -> Result<BTreeSet<VertexId>> {
        let mut out = BTreeSet::new();
        for &x in xs {
            for &u in self.neighbors(x)? {
                if !xs.contains(&u) {
                    out.insert(u);
                }
            }
        }
        Ok(out)
    }

    /// Subgraph induced by `xs`; vertex identifiers are preserved.
    pub fn induced_subgraph(&self, xs: &BTreeSet<VertexId>) -> Result<Graph> {
        for &x in xs {
            if !self.adj.contains_key(&x) {
                return Err(Error::MissingVertex(x));
            }
        }
        let mut adj = BTreeMap::new();
        let mut edge_count = 0;
        for &x in xs {
            let kept: Vec<VertexId> = self.adj[&x]
                .iter()
                .copied()
                .filter(|u| xs.contains(u))
                .collect();
            edge_count += kept.len();
            adj.insert(x, kept);
        }
        Ok(Graph {
            adj,
            edge_count: edge_count / 2,
            next_id: self.next_id,
        })
    }

    /// The graph with all of `xs` (and incident edges) removed.
    pub fn delete_vertices(&self, xs: &BTreeSet<VertexId>) -> Result<Graph> {
        for &x in xs {
            if !self.adj.contains_key(&x) {
                return Err(Error::MissingVertex(x));
            }
        }
        let keep: BTreeSet<VertexId> = self
            .adj
            .keys()
            .copied()
            .filter(|v| !xs.contains(v))
            .collect();
        self.induced_subgraph(&keep)
    }

    /// Removes the vertices of `s` and adds one fresh vertex adjacent to
    /// exactly `N(s) \ s`. Duplicate edges collapse, so the result stays
    /// simple. Returns the new graph and the fresh vertex.
    pub fn identify_set(&self, s: &BTreeSet<VertexId>) -> Result<(Graph, VertexId)> {
        if s.is_empty() {
            return Err(Error::ContractViolation(
                "identify_set requires a nonempty vertex set".into(),
            ));
        }
        let outside = self.neighborhood_of_set(s)?;
        let mut g = self.delete_vertices(s)?;
        let z = g.add_vertex();
        for &u in &outside {
            g.add_edge(z, u)?;
        }
        Ok((g, z))
    }

    /// True when `cover` touches every edge.
    pub fn is_vertex_cover(&self, cover: &BTreeSet<VertexId>) -> bool {
        self.edges()
            .all(|(u, v)| cover.contains(&u) || cover.contains(&v))
    }

    /// True when no edge has both endpoints in `xs`.
    pub fn is_independent_set(&self, xs: &BTreeSet<VertexId>) -> bool {
        xs.iter().all(|&x| {
            self.adj
                .get(&x)
                .map(|list| list.iter().all(|u| !xs.contains(u)))
                .unwrap_or(true)
        })
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = vec![v];
            while let Some(u) = stack.pop() {
                if !comp.insert(u) {
                    continue;
                }
                seen.insert(u);
                for &w in &self.adj[&u] {
                    if !comp.contains(&w) {
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    // --- small named constructors used throughout the tests and the CLI ---

    /// Path on `n` vertices `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::with_vertices(n);
        for i in 1..n as u32 {
            g.add_edge(VertexId(i - 1), VertexId(i)).unwrap();
        }
        g
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Self::path(n);
        g.add_edge(VertexId(0), VertexId(n as u32 - 1)).unwrap();
        g
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = Self::with_vertices(n);
        for i in 0..n as u32 {
            for j in (i + 1)..n as u32 {
                g.add_edge(VertexId(i), VertexId(j)).unwrap();
            }
        }
        g
    }

    /// Star: center `0` with `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let mut g = Self::with_vertices(leaves + 1);
        for i in 1..=leaves as u32 {
            g.add_edge(VertexId(0), VertexId(i)).unwrap();
        }
        g
    }

    /// Complete bipartite graph on sides of size `a` (vertices `0..a`) and
    /// `b` (vertices `a..a+b`).
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::with_vertices(a + b);
        for i in 0..a as u32 {
            for j in 0..b as u32 {
                g.add_edge(VertexId(i), VertexId(a as u32 + j)).unwrap();
            }
        }
        g
    }

    /// The Petersen graph: outer cycle `0..5`, spokes `i - (i+5)`, inner
    /// pentagram `5+i - 5+((i+2) mod 5)`.
    pub fn petersen() -> Self {
        let mut g = Self::with_vertices(10);
        for i in 0..5u32 {
            g.add_edge(VertexId(i), VertexId((i + 1) % 5)).unwrap();
            g.add_edge(VertexId(i), VertexId(i + 5)).unwrap();
            g.add_edge(VertexId(5 + i), VertexId(5 + (i + 2) % 5))
                .unwrap();
        }
        g
    }
}
