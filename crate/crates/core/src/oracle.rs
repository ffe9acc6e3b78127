//! Brute-force reference implementations for every quantity the main code
//! computes. Deliberately naive; each refuses instances above its cap
//! rather than silently degrading.

use std::collections::BTreeSet;

use crate::dense::DenseGraph;
use crate::gallai::GallaiEdmonds;
use crate::graph::{Graph, VertexId};
use crate::lpvc::HalfInt;
use crate::{Error, Result};

pub const OPT_CAP: usize = 20;
pub const LP_CAP: usize = 12;
pub const SURPLUS_CAP: usize = 12;
pub const GALLAI_CAP: usize = 8;
pub const MATCHING_CAP: usize = 10;
pub const INDEPENDENT_SET_CAP: usize = 20;

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    let n = g.vertex_count();
    if n > cap {
        Err(Error::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

/// Exact minimum vertex cover size and one witness, by iterative
/// deepening over the cover size with branching on an uncovered edge.
pub fn brute_opt(g: &Graph) -> Result<(usize, BTreeSet<VertexId>)> {
    brute_opt_with_cap(g, OPT_CAP)
}

pub fn brute_opt_with_cap(g: &Graph, cap: usize) -> Result<(usize, BTreeSet<VertexId>)> {
    check_cap(g, cap)?;
    let dense = DenseGraph::from_graph(g);
    let n = dense.n();
    let mut alive = vec![true; n];
    let mut picked: Vec<usize> = Vec::new();
    for k in 0..=n {
        if cover_within(&dense.adj, &mut alive, k, &mut picked) {
            let cover: BTreeSet<VertexId> = picked.iter().map(|&i| dense.ids[i]).collect();
            debug_assert!(g.is_vertex_cover(&cover));
            debug_assert_eq!(cover.len(), k);
            return Ok((k, cover));
        }
        debug_assert!(picked.is_empty());
    }
    unreachable!("the whole vertex set is always a cover")
}

fn cover_within(adj: &[Vec<u32>], alive: &mut [bool], k: usize, picked: &mut Vec<usize>) -> bool {
    // first uncovered edge, smallest endpoints first
    let edge = alive.iter().enumerate().find_map(|(u, &au)| {
        if !au {
            return None;
        }
        adj[u]
            .iter()
            .find(|&&v| alive[v as usize] && v as usize > u)
            .map(|&v| (u, v as usize))
    });
    let (u, v) = match edge {
        None => return true,
        Some(e) => e,
    };
    if k == 0 {
        return false;
    }
    for pick in [u, v] {
        alive[pick] = false;
        picked.push(pick);
        if cover_within(adj, alive, k - 1, picked) {
            return true;
        }
        picked.pop();
        alive[pick] = true;
    }
    false
}

/// Size of a maximum independent set, by subset enumeration.
pub fn brute_max_independent_set(g: &Graph) -> Result<usize> {
    check_cap(g, INDEPENDENT_SET_CAP)?;
    let masks = adjacency_masks(g);
    let n = masks.len();
    let mut best = 0usize;
    for set in 0u64..(1 << n) {
        let size = set.count_ones() as usize;
        if size > best && is_independent_mask(&masks, set) {
            best = size;
        }
    }
    Ok(best)
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    let dense = DenseGraph::from_graph(g);
    dense
        .adj
        .iter()
        .map(|nbrs| nbrs.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect()
}

fn is_independent_mask(masks: &[u64], set: u64) -> bool {
    let mut rest = set;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if masks[i] & set != 0 {
            return false;
        }
    }
    true
}

/// Maximum matching size by enumerating every matching.
pub fn brute_matching_number(g: &Graph) -> Result<usize> {
    check_cap(g, MATCHING_CAP)?;
    let dense = DenseGraph::from_graph(g);
    let edges: Vec<(usize, usize)> = dense
        .adj
        .iter()
        .enumerate()
        .flat_map(|(u, nbrs)| {
            nbrs.iter()
                .filter(move |&&v| v as usize > u)
                .map(move |&v| (u, v as usize))
        })
        .collect();
    let mut best = 0;
    enumerate_matchings(&edges, 0, 0u64, 0, &mut |size, _| {
        if size > best {
            best = size;
        }
    });
    Ok(best)
}

fn enumerate_matchings(
    edges: &[(usize, usize)],
    i: usize,
    used: u64,
    size: usize,
    visit: &mut impl FnMut(usize, u64),
) {
    if i == edges.len() {
        visit(size, used);
        return;
    }
    enumerate_matchings(edges, i + 1, used, size, visit);
    let (u, v) = edges[i];
    let bits = (1u64 << u) | (1 << v);
    if used & bits == 0 {
        enumerate_matchings(edges, i + 1, used | bits, size + 1, visit);
    }
}

/// Minimum over all feasible `{0, 1/2, 1}` assignments, by recursive
/// enumeration with infeasibility and value pruning.
pub fn brute_lp(g: &Graph) -> Result<HalfInt> {
    check_cap(g, LP_CAP)?;
    let dense = DenseGraph::from_graph(g);
    let n = dense.n();
    // neighbors with smaller index: enough to check feasibility incrementally
    let back: Vec<Vec<usize>> = dense
        .adj
        .iter()
        .enumerate()
        .map(|(u, nbrs)| {
            nbrs.iter()
                .filter(|&&v| (v as usize) < u)
                .map(|&v| v as usize)
                .collect()
        })
        .collect();
    let mut x2 = vec![0u8; n];
    let mut best = 2 * n as i64; // all-one is feasible
    fn go(i: usize, sum: i64, back: &[Vec<usize>], x2: &mut [u8], best: &mut i64) {
        if sum >= *best {
            return;
        }
        if i == back.len() {
            *best = sum;
            return;
        }
        'values: for val in [0u8, 1, 2] {
            for &u in &back[i] {
                if x2[u] + val < 2 {
                    continue 'values;
                }
            }
            x2[i] = val;
            go(i + 1, sum + val as i64, back, x2, best);
        }
    }
    go(0, 0, &back, &mut x2, &mut best);
    Ok(HalfInt::from_doubled(best))
}

/// Minimum surplus over nonempty independent sets, with a witness.
pub fn brute_surplus(g: &Graph) -> Result<(i64, BTreeSet<VertexId>)> {
    check_cap(g, SURPLUS_CAP)?;
    brute_surplus_filtered(g, 0)
}

/// Minimum surplus over independent sets containing `v`, with a witness.
pub fn brute_surplus_containing(g: &Graph, v: VertexId) -> Result<(i64, BTreeSet<VertexId>)> {
    check_cap(g, SURPLUS_CAP)?;
    let dense = DenseGraph::from_graph(g);
    let idx = dense.index_of(v).ok_or(Error::MissingVertex(v))?;
    brute_surplus_filtered(g, 1u64 << idx)
}

fn brute_surplus_filtered(g: &Graph, required: u64) -> Result<(i64, BTreeSet<VertexId>)> {
    let dense = DenseGraph::from_graph(g);
    let masks = adjacency_masks(g);
    let n = masks.len();
    let mut best: Option<(i64, u64)> = None;
    for set in 1u64..(1 << n) {
        if set & required != required || !is_independent_mask(&masks, set) {
            continue;
        }
        let mut nbhd = 0u64;
        let mut rest = set;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            nbhd |= masks[i];
        }
        nbhd &= !set;
        let surplus = nbhd.count_ones() as i64 - set.count_ones() as i64;
        if best.is_none_or(|(b, _)| surplus < b) {
            best = Some((surplus, set));
        }
    }
    let (surplus, set) = best.ok_or_else(|| {
        Error::ContractViolation("no nonempty independent set exists".into())
    })?;
    let witness = (0..n)
        .filter(|i| set >> i & 1 == 1)
        .map(|i| dense.ids[i])
        .collect();
    Ok((surplus, witness))
}

/// Gallai–Edmonds decomposition straight from the definition: enumerate
/// every maximum matching and collect the vertices one of them exposes.
pub fn brute_gallai_edmonds(g: &Graph) -> Result<GallaiEdmonds> {
    check_cap(g, GALLAI_CAP)?;
    let dense = DenseGraph::from_graph(g);
    let n = dense.n();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let edges: Vec<(usize, usize)> = dense
        .adj
        .iter()
        .enumerate()
        .flat_map(|(u, nbrs)| {
            nbrs.iter()
                .filter(move |&&v| v as usize > u)
                .map(move |&v| (u, v as usize))
        })
        .collect();
    let mut best = 0usize;
    let mut exposed_union = full;
    enumerate_matchings(&edges, 0, 0u64, 0, &mut |size, used| {
        use std::cmp::Ordering;
        match size.cmp(&best) {
            Ordering::Greater => {
                best = size;
                exposed_union = !used & full;
            }
            Ordering::Equal => exposed_union |= !used & full,
            Ordering::Less => {}
        }
    });

    let exposable: BTreeSet<VertexId> = (0..n)
        .filter(|i| exposed_union >> i & 1 == 1)
        .map(|i| dense.ids[i])
        .collect();
    let boundary = g.neighborhood_of_set(&exposable).unwrap();
    let perfectly_matched: BTreeSet<VertexId> = g
        .vertices()
        .filter(|v| !exposable.contains(v) && !boundary.contains(v))
        .collect();
    let exposable_components = g.induced_subgraph(&exposable).unwrap().components();
    Ok(GallaiEdmonds {
        exposable,
        boundary,
        perfectly_matched,
        exposable_components,
    })
}

/// Erdős–Rényi `G(n, p)` with a fully pinned pseudorandom stream, so the
/// same `(n, p, seed)` reproduces the same graph everywhere.
///
/// The stream is SplitMix64: state advances by `0x9E3779B97F4A7C15`, and
/// the output mixes with `0xBF58476D1CE4E5B9` / `0x94D049BB133111EB` and
/// shifts `30, 27, 31`. One draw is made per vertex pair in lexicographic
/// order; the edge is included when `(draw >> 11) * 2^-53 < p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let mut g = Graph::with_vertices(n);
    for i in 0..n as u32 {
        for j in (i + 1)..n as u32 {
            let unit = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
            if unit < p {
                g.add_edge(VertexId(i), VertexId(j)).unwrap();
            }
        }
    }
    g
}

struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_opt_examples() {
        let (opt, cover) = brute_opt(&Graph::petersen()).unwrap();
        assert_eq!(opt, 6);
        assert!(Graph::petersen().is_vertex_cover(&cover));

        let (opt, _) = brute_opt(&Graph::complete(5)).unwrap();
        assert_eq!(opt, 4);

        let (opt, cover) = brute_opt(&Graph::with_vertices(3)).unwrap();
        assert_eq!(opt, 0);
        assert!(cover.is_empty());
    }

    #[test]
    fn brute_opt_agrees_with_independent_set_complement() {
        for seed in 0..60 {
            let g = random_graph(9, 0.4, seed);
            let (opt, _) = brute_opt(&g).unwrap();
            let mis = brute_max_independent_set(&g).unwrap();
            assert_eq!(opt + mis, 9, "seed={seed}");
        }
        let p = Graph::petersen();
        assert_eq!(
            brute_opt(&p).unwrap().0 + brute_max_independent_set(&p).unwrap(),
            10
        );
    }

    #[test]
    fn brute_lp_examples() {
        assert_eq!(brute_lp(&Graph::cycle(5)).unwrap(), HalfInt::from_doubled(5));
        assert_eq!(brute_lp(&Graph::star(3)).unwrap(), HalfInt::from_integer(1));
        assert_eq!(brute_lp(&Graph::path(2)).unwrap(), HalfInt::from_integer(1));
    }

    #[test]
    fn brute_surplus_examples() {
        let (s, w) = brute_surplus(&Graph::cycle(5)).unwrap();
        assert_eq!(s, 1);
        assert_eq!(w.len(), 1);

        let (s, _) = brute_surplus(&Graph::complete(4)).unwrap();
        assert_eq!(s, 2);

        let (s, w) = brute_surplus(&Graph::star(3)).unwrap();
        assert_eq!(s, -2);
        assert_eq!(w, (1..4).map(VertexId).collect());

        assert!(brute_surplus(&Graph::new()).is_err());
    }

    #[test]
    fn brute_gallai_examples() {
        let d = brute_gallai_edmonds(&Graph::path(3)).unwrap();
        assert_eq!(d.exposable, [VertexId(0), VertexId(2)].into());
        assert_eq!(d.boundary, [VertexId(1)].into());
        assert!(d.perfectly_matched.is_empty());

        let d = brute_gallai_edmonds(&Graph::cycle(4)).unwrap();
        assert!(d.exposable.is_empty());
        assert_eq!(d.perfectly_matched.len(), 4);

        let d = brute_gallai_edmonds(&Graph::complete(3)).unwrap();
        assert_eq!(d.exposable.len(), 3);
    }

    #[test]
    fn caps_are_enforced() {
        let big = Graph::with_vertices(21);
        assert!(matches!(brute_opt(&big), Err(Error::CapExceeded { .. })));
        assert!(matches!(brute_lp(&Graph::with_vertices(13)), Err(Error::CapExceeded { .. })));
        assert!(matches!(
            brute_gallai_edmonds(&Graph::with_vertices(9)),
            Err(Error::CapExceeded { .. })
        ));
        assert!(brute_opt_with_cap(&big, 21).is_ok());
    }

    #[test]
    fn random_graph_is_deterministic() {
        let a = random_graph(10, 0.4, 7);
        let b = random_graph(10, 0.4, 7);
        assert_eq!(a, b);
        let c = random_graph(10, 0.4, 8);
        assert_ne!(a, c); // overwhelmingly likely for this seed pair

        assert_eq!(random_graph(5, 0.0, 3).edge_count(), 0);
        assert_eq!(random_graph(4, 1.0, 3).edge_count(), 6);
    }
}
