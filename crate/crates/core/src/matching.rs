//! Maximum matching in general graphs (blossom algorithm) and in bipartite
//! graphs (augmenting paths with König cover extraction).
//!
//! Search order is deterministic everywhere: vertices are scanned ascending
//! and neighbor lists are sorted, so the reported matching is a pure
//! function of the graph.

use std::collections::BTreeSet;

use crate::dense::DenseGraph;
use crate::graph::{Graph, VertexId};
use crate::{Error, Result};

/// A matching: pairwise disjoint edges of some host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(VertexId, VertexId)>,
}

impl Matching {
    fn from_mate(dense: &DenseGraph, mate: &[Option<u32>]) -> Self {
        let mut edges = Vec::new();
        for (i, m) in mate.iter().enumerate() {
            if let Some(j) = *m {
                if (i as u32) < j {
                    edges.push((dense.ids[i], dense.ids[j as usize]));
                }
            }
        }
        Matching { edges }
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// Vertices incident to a matching edge.
    pub fn saturated(&self) -> BTreeSet<VertexId> {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    /// Vertices of `g` not incident to any matching edge.
    pub fn exposed(&self, g: &Graph) -> BTreeSet<VertexId> {
        let sat = self.saturated();
        g.vertices().filter(|v| !sat.contains(v)).collect()
    }

    pub fn partner(&self, v: VertexId) -> Option<VertexId> {
        self.edges.iter().find_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }

    /// Every edge present in `g` and no two edges sharing an endpoint.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|&(u, v)| {
            g.has_edge(u, v) && seen.insert(u) && seen.insert(v)
        })
    }

    pub fn is_perfect(&self, g: &Graph) -> bool {
        2 * self.size() == g.vertex_count()
    }
}

/// A maximum matching of `g`, found by the blossom algorithm.
pub fn maximum_matching(g: &Graph) -> Matching {
    let dense = DenseGraph::from_graph(g);
    let alive = vec![true; dense.n()];
    let mate = blossom::maximum_mate(&dense.adj, &alive);
    Matching::from_mate(&dense, &mate)
}

/// `MM(g)`, the matching number.
pub fn matching_number(g: &Graph) -> usize {
    let dense = DenseGraph::from_graph(g);
    let alive = vec![true; dense.n()];
    blossom::matching_size(&dense.adj, &alive)
}

/// A maximum matching of a bipartite graph given its bipartition.
///
/// Fails with a contract violation if `(left, right)` does not partition
/// the vertex set or some edge does not cross it.
pub fn bipartite_maximum_matching(
    g: &Graph,
    left: &BTreeSet<VertexId>,
    right: &BTreeSet<VertexId>,
) -> Result<Matching> {
    bipartite_matching_with_cover(g, left, right).map(|(m, _)| m)
}

/// Like [`bipartite_maximum_matching`], also returning the minimum vertex
/// cover of equal size obtained by König extraction.
pub fn bipartite_matching_with_cover(
    g: &Graph,
    left: &BTreeSet<VertexId>,
    right: &BTreeSet<VertexId>,
) -> Result<(Matching, BTreeSet<VertexId>)> {
    if !left.is_disjoint(right) || left.len() + right.len() != g.vertex_count() {
        return Err(Error::ContractViolation(
            "left and right must partition the vertex set".into(),
        ));
    }
    for &v in left.iter().chain(right.iter()) {
        if !g.has_vertex(v) {
            return Err(Error::MissingVertex(v));
        }
    }
    for (u, v) in g.edges() {
        if left.contains(&u) == left.contains(&v) {
            return Err(Error::ContractViolation(format!(
                "edge {{{u}, {v}}} does not cross the bipartition"
            )));
        }
    }

    let left_ids: Vec<VertexId> = left.iter().copied().collect();
    let right_ids: Vec<VertexId> = right.iter().copied().collect();
    let left_adj: Vec<Vec<u32>> = left_ids
        .iter()
        .map(|&u| {
            g.neighbors(u)
                .unwrap()
                .iter()
                .map(|v| right_ids.binary_search(v).unwrap() as u32)
                .collect()
        })
        .collect();
    let alive_l = vec![true; left_ids.len()];
    let alive_r = vec![true; right_ids.len()];
    let out = bipartite::matching_with_koenig_cover(&left_adj, right_ids.len(), &alive_l, &alive_r);

    let mut edges = Vec::new();
    for (i, m) in out.match_left.iter().enumerate() {
        if let Some(j) = *m {
            let (a, b) = (left_ids[i], right_ids[j as usize]);
            edges.push(if a < b { (a, b) } else { (b, a) });
        }
    }
    edges.sort();
    let mut cover = BTreeSet::new();
    for (i, &inc) in out.cover_left.iter().enumerate() {
        if inc {
            cover.insert(left_ids[i]);
        }
    }
    for (j, &inc) in out.cover_right.iter().enumerate() {
        if inc {
            cover.insert(right_ids[j]);
        }
    }
    debug_assert_eq!(cover.len(), edges.len());
    Ok((Matching { edges }, cover))
}

/// Unweighted blossom algorithm on a dense adjacency with an `alive` mask.
pub(crate) mod blossom {
    const NONE: usize = usize::MAX;

    pub fn matching_size(adj: &[Vec<u32>], alive: &[bool]) -> usize {
        maximum_mate(adj, alive).iter().flatten().count() / 2
    }

    /// `mate[i] = Some(j)` iff `{i, j}` is in the matching.
    pub fn maximum_mate(adj: &[Vec<u32>], alive: &[bool]) -> Vec<Option<u32>> {
        let n = adj.len();
        let mut mate = vec![NONE; n];

        // deterministic greedy seed
        for u in 0..n {
            if !alive[u] || mate[u] != NONE {
                continue;
            }
            for &v in &adj[u] {
                let v = v as usize;
                if alive[v] && mate[v] == NONE {
                    mate[u] = v;
                    mate[v] = u;
                    break;
                }
            }
        }

        let mut scratch = Scratch::new(n);
        for start in 0..n {
            if !alive[start] || mate[start] != NONE {
                continue;
            }
            if let Some(end) = find_augmenting_path(adj, alive, &mate, start, &mut scratch) {
                // flip the path encoded in the parent links
                let mut v = end;
                while v != NONE {
                    let pv = scratch.parent[v];
                    let next = mate[pv];
                    mate[v] = pv;
                    mate[pv] = v;
                    v = next;
                }
            }
        }

        mate.iter()
            .map(|&m| if m == NONE { None } else { Some(m as u32) })
            .collect()
    }

    struct Scratch {
        parent: Vec<usize>,
        base: Vec<usize>,
        in_tree: Vec<bool>,
        in_blossom: Vec<bool>,
        on_path: Vec<bool>,
        queue: Vec<usize>,
    }

    impl Scratch {
        fn new(n: usize) -> Self {
            Scratch {
                parent: vec![NONE; n],
                base: (0..n).collect(),
                in_tree: vec![false; n],
                in_blossom: vec![false; n],
                on_path: vec![false; n],
                queue: Vec::with_capacity(n),
            }
        }
    }

    /// BFS for an augmenting path from the exposed vertex `start`,
    /// contracting blossoms via the `base` array. Returns the exposed far
    /// end on success; `scratch.parent` then encodes the path.
    fn find_augmenting_path(
        adj: &[Vec<u32>],
        alive: &[bool],
        mate: &[usize],
        start: usize,
        s: &mut Scratch,
    ) -> Option<usize> {
        let n = adj.len();
        for i in 0..n {
            s.parent[i] = NONE;
            s.base[i] = i;
            s.in_tree[i] = false;
        }
        s.queue.clear();
        s.queue.push(start);
        s.in_tree[start] = true;

        let mut head = 0;
        while head < s.queue.len() {
            let v = s.queue[head];
            head += 1;
            for &to in &adj[v] {
                let to = to as usize;
                if !alive[to] || s.base[v] == s.base[to] || mate[v] == to {
                    continue;
                }
                if to == start || (mate[to] != NONE && s.parent[mate[to]] != NONE) {
                    // odd cycle: contract the blossom
                    let cur_base = lowest_common_base(mate, s, v, to);
                    for f in s.in_blossom.iter_mut() {
                        *f = false;
                    }
                    mark_blossom_path(mate, s, v, cur_base, to);
                    mark_blossom_path(mate, s, to, cur_base, v);
                    for i in 0..n {
                        if s.in_blossom[s.base[i]] {
                            s.base[i] = cur_base;
                            if !s.in_tree[i] {
                                s.in_tree[i] = true;
                                s.queue.push(i);
                            }
                        }
                    }
                } else if s.parent[to] == NONE {
                    s.parent[to] = v;
                    if mate[to] == NONE {
                        return Some(to);
                    }
                    s.in_tree[mate[to]] = true;
                    s.queue.push(mate[to]);
                }
            }
        }
        None
    }

    fn lowest_common_base(mate: &[usize], s: &mut Scratch, v: usize, w: usize) -> usize {
        for f in s.on_path.iter_mut() {
            *f = false;
        }
        let mut a = s.base[v];
        loop {
            s.on_path[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = s.base[s.parent[mate[a]]];
        }
        let mut b = s.base[w];
        while !s.on_path[b] {
            b = s.base[s.parent[mate[b]]];
        }
        b
    }

    fn mark_blossom_path(mate: &[usize], s: &mut Scratch, mut v: usize, b: usize, mut child: usize) {
        while s.base[v] != b {
            s.in_blossom[s.base[v]] = true;
            s.in_blossom[s.base[mate[v]]] = true;
            s.parent[v] = child;
            child = mate[v];
            v = s.parent[mate[v]];
        }
    }
}

/// Kuhn's algorithm plus König cover extraction on an explicit bipartite
/// structure with `alive` masks on both sides.
pub(crate) mod bipartite {
    pub struct BipartiteOutcome {
        pub match_left: Vec<Option<u32>>,
        pub size: usize,
        pub cover_left: Vec<bool>,
        pub cover_right: Vec<bool>,
    }

    pub fn matching_with_koenig_cover(
        left_adj: &[Vec<u32>],
        n_right: usize,
        alive_left: &[bool],
        alive_right: &[bool],
    ) -> BipartiteOutcome {
        let n_left = left_adj.len();
        let mut match_left: Vec<Option<u32>> = vec![None; n_left];
        let mut match_right: Vec<Option<u32>> = vec![None; n_right];
        let mut visited = vec![false; n_right];

        fn try_augment(
            u: usize,
            left_adj: &[Vec<u32>],
            alive_right: &[bool],
            match_left: &mut [Option<u32>],
            match_right: &mut [Option<u32>],
            visited: &mut [bool],
        ) -> bool {
            for &v in &left_adj[u] {
                let v = v as usize;
                if !alive_right[v] || visited[v] {
                    continue;
                }
                visited[v] = true;
                let free = match match_right[v] {
                    None => true,
                    Some(w) => try_augment(
                        w as usize,
                        left_adj,
                        alive_right,
                        match_left,
                        match_right,
                        visited,
                    ),
                };
                if free {
                    match_left[u] = Some(v as u32);
                    match_right[v] = Some(u as u32);
                    return true;
                }
            }
            false
        }

        let mut size = 0;
        for (u, &alive) in alive_left.iter().enumerate() {
            if !alive {
                continue;
            }
            for f in visited.iter_mut() {
                *f = false;
            }
            if try_augment(
                u,
                left_adj,
                alive_right,
                &mut match_left,
                &mut match_right,
                &mut visited,
            ) {
                size += 1;
            }
        }

        // König: alternate from the exposed left vertices; the cover is the
        // unreached left side plus the reached right side.
        let mut visit_l = vec![false; n_left];
        let mut visit_r = vec![false; n_right];
        let mut queue: Vec<usize> = Vec::new();
        for u in 0..n_left {
            if alive_left[u] && match_left[u].is_none() {
                visit_l[u] = true;
                queue.push(u);
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &v in &left_adj[u] {
                let v = v as usize;
                if !alive_right[v] || visit_r[v] || match_left[u] == Some(v as u32) {
                    continue;
                }
                visit_r[v] = true;
                if let Some(w) = match_right[v] {
                    let w = w as usize;
                    if !visit_l[w] {
                        visit_l[w] = true;
                        queue.push(w);
                    }
                }
            }
        }
        let cover_left: Vec<bool> = (0..n_left).map(|u| alive_left[u] && !visit_l[u]).collect();
        let cover_right: Vec<bool> = (0..n_right).map(|v| alive_right[v] && visit_r[v]).collect();

        debug_assert_eq!(
            cover_left.iter().filter(|&&b| b).count() + cover_right.iter().filter(|&&b| b).count(),
            size
        );
        #[cfg(debug_assertions)]
        for u in 0..n_left {
            if alive_left[u] {
                for &v in &left_adj[u] {
                    let v = v as usize;
                    if alive_right[v] {
                        debug_assert!(cover_left[u] || cover_right[v]);
                    }
                }
            }
        }

        BipartiteOutcome {
            match_left,
            size,
            cover_left,
            cover_right,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    #[test]
    fn maximum_matching_examples() {
        assert_eq!(matching_number(&Graph::complete(5)), 2);
        assert_eq!(oracle::brute_matching_number(&Graph::complete(5)).unwrap(), 2);

        let petersen = Graph::petersen();
        let m = maximum_matching(&petersen);
        assert_eq!(m.size(), 5);
        assert!(m.is_perfect(&petersen));
        assert!(m.is_valid_in(&petersen));
        assert_eq!(oracle::brute_matching_number(&petersen).unwrap(), 5);

        assert_eq!(matching_number(&Graph::with_vertices(4)), 0);
    }

    #[test]
    fn matching_number_examples() {
        assert_eq!(matching_number(&Graph::cycle(5)), 2);
        assert_eq!(oracle::brute_matching_number(&Graph::cycle(5)).unwrap(), 2);
        assert_eq!(matching_number(&Graph::complete(4)), 2);
        assert_eq!(oracle::brute_matching_number(&Graph::complete(4)).unwrap(), 2);
        assert_eq!(matching_number(&Graph::path(2)), 1);
    }

    #[test]
    fn matching_agrees_with_oracle_on_small_graphs() {
        // all graphs on 5 labeled vertices
        let pairs: Vec<(u32, u32)> = (0..5u32)
            .flat_map(|i| ((i + 1)..5).map(move |j| (i, j)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(u32, u32)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(5, &edges).unwrap();
            let m = maximum_matching(&g);
            assert!(m.is_valid_in(&g));
            assert_eq!(m.size(), oracle::brute_matching_number(&g).unwrap(), "mask {mask}");
        }
        // seeded sample of larger graphs
        for n in [6usize, 7, 8] {
            for seed in 0..40 {
                let g = oracle::random_graph(n, 0.45, 0xA100 + seed);
                let m = maximum_matching(&g);
                assert!(m.is_valid_in(&g));
                assert_eq!(m.size(), oracle::brute_matching_number(&g).unwrap(), "n={n} seed={seed}");
            }
        }
    }

    #[test]
    fn matching_number_drops_by_at_most_one_per_deletion() {
        for seed in 0..30 {
            let g = oracle::random_graph(9, 0.4, seed);
            let mm = matching_number(&g);
            for v in g.vertices() {
                let h = g.delete_vertices(&[v].into_iter().collect()).unwrap();
                let mv = matching_number(&h);
                assert!(mv == mm || mv + 1 == mm);
            }
        }
    }

    #[test]
    fn bipartite_matching_examples() {
        let g = Graph::complete_bipartite(2, 3);
        let left: BTreeSet<VertexId> = [VertexId(0), VertexId(1)].into();
        let right: BTreeSet<VertexId> = [VertexId(2), VertexId(3), VertexId(4)].into();
        let (m, cover) = bipartite_matching_with_cover(&g, &left, &right).unwrap();
        assert_eq!(m.size(), 2);
        assert_eq!(cover.len(), 2);
        assert!(g.is_vertex_cover(&cover));

        // n disjoint edges
        let mut g = Graph::with_vertices(8);
        for i in 0..4u32 {
            g.add_edge(VertexId(2 * i), VertexId(2 * i + 1)).unwrap();
        }
        let left: BTreeSet<VertexId> = (0..4).map(|i| VertexId(2 * i)).collect();
        let right: BTreeSet<VertexId> = (0..4).map(|i| VertexId(2 * i + 1)).collect();
        assert_eq!(bipartite_maximum_matching(&g, &left, &right).unwrap().size(), 4);

        let star = Graph::star(3);
        let left: BTreeSet<VertexId> = [VertexId(0)].into();
        let right: BTreeSet<VertexId> = (1..4).map(VertexId).collect();
        assert_eq!(bipartite_maximum_matching(&star, &left, &right).unwrap().size(), 1);
    }

    #[test]
    fn bipartite_matching_rejects_non_bipartition() {
        let tri = Graph::complete(3);
        let left: BTreeSet<VertexId> = [VertexId(0)].into();
        let right: BTreeSet<VertexId> = [VertexId(1), VertexId(2)].into();
        assert!(matches!(
            bipartite_maximum_matching(&tri, &left, &right),
            Err(Error::ContractViolation(_))
        ));
    }

    #[test]
    fn koenig_cover_covers_and_matches_size() {
        for seed in 0..40 {
            // crossing edges of a random graph form a bipartite instance
            let r = oracle::random_graph(9, 0.5, seed);
            let mut g = Graph::with_vertices(9);
            for (u, v) in r.edges() {
                if (u.0 < 4) != (v.0 < 4) {
                    g.add_edge(u, v).unwrap();
                }
            }
            let left: BTreeSet<VertexId> = (0..4).map(VertexId).collect();
            let right: BTreeSet<VertexId> = (4..9).map(VertexId).collect();
            let (m, cover) = bipartite_matching_with_cover(&g, &left, &right).unwrap();
            assert_eq!(m.size(), cover.len());
            assert!(g.is_vertex_cover(&cover));
        }
    }
}
