//! Exact half-integral optima of the relaxed vertex cover LP
//! (minimize sum of `x_v` subject to `x_u + x_v >= 1` per edge,
//! `0 <= x_v <= 1`), plus the surplus machinery built on top of it.
//!
//! The LP is solved combinatorially: the bipartite double cover of `g` has
//! a minimum vertex cover of size exactly `2 LP(g)` (König), and picking
//! `x_v = |{v_L, v_R} ∩ C| / 2` from such a cover `C` yields an optimal
//! half-integral solution. All values stay exact: they are stored doubled
//! as integers ([`HalfInt`]), so there are no floating point tolerances
//! anywhere.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Sub};

use crate::dense::DenseGraph;
use crate::graph::{Graph, VertexId};
use crate::matching::bipartite;
use crate::{Error, Result};

/// An exact half-integral value, stored as twice itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub fn from_doubled(doubled: i64) -> Self {
        HalfInt(doubled)
    }

    pub fn from_integer(n: i64) -> Self {
        HalfInt(2 * n)
    }

    /// Twice the value; always an integer.
    pub fn doubled(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn floor(self) -> i64 {
        self.0.div_euclid(2)
    }

    pub fn ceil(self) -> i64 {
        (self.0 + 1).div_euclid(2)
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// A feasible half-integral assignment `V -> {0, 1/2, 1}` with its value
/// and the induced partition of the vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfIntegralSolution {
    values: BTreeMap<VertexId, u8>, // doubled per-vertex value: 0 | 1 | 2
    value: HalfInt,
    zeros: BTreeSet<VertexId>,
    halves: BTreeSet<VertexId>,
    ones: BTreeSet<VertexId>,
}

impl HalfIntegralSolution {
    fn from_parts(values: BTreeMap<VertexId, u8>) -> Self {
        let mut zeros = BTreeSet::new();
        let mut halves = BTreeSet::new();
        let mut ones = BTreeSet::new();
        let mut doubled = 0i64;
        for (&v, &x) in &values {
            doubled += x as i64;
            match x {
                0 => zeros.insert(v),
                1 => halves.insert(v),
                2 => ones.insert(v),
                _ => unreachable!("assignment values are doubled half-integers"),
            };
        }
        HalfIntegralSolution {
            values,
            value: HalfInt::from_doubled(doubled),
            zeros,
            halves,
            ones,
        }
    }

    pub fn value(&self) -> HalfInt {
        self.value
    }

    /// Twice the value of `v`, if assigned.
    pub fn doubled_value_of(&self, v: VertexId) -> Option<u8> {
        self.values.get(&v).copied()
    }

    pub fn zeros(&self) -> &BTreeSet<VertexId> {
        &self.zeros
    }

    pub fn halves(&self) -> &BTreeSet<VertexId> {
        &self.halves
    }

    pub fn ones(&self) -> &BTreeSet<VertexId> {
        &self.ones
    }

    /// Feasibility: assigns every vertex of `g` and every edge sums to at
    /// least one.
    pub fn is_feasible_for(&self, g: &Graph) -> bool {
        g.vertices().all(|v| self.values.contains_key(&v))
            && g.edges()
                .all(|(u, v)| self.values[&u] + self.values[&v] >= 2)
    }
}

/// An independent set together with its neighborhood and surplus
/// `|N(Z)| - |Z|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurplusWitness {
    pub witness: BTreeSet<VertexId>,
    pub neighborhood: BTreeSet<VertexId>,
    pub surplus: i64,
}

/// Outcome of the graph-surplus query on an extreme-reduced graph: either
/// a surplus-1 witness or the verdict that every independent set has
/// surplus at least two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSurplus {
    One(SurplusWitness),
    AtLeastTwo,
}

/// An optimal half-integral solution to the relaxed vertex cover LP.
pub fn lp_optimum(g: &Graph) -> HalfIntegralSolution {
    let dense = DenseGraph::from_graph(g);
    let alive = vec![true; dense.n()];
    let (x2, _) = lp_masked(&dense.adj, &alive);
    let solution = solution_from_dense(&dense, &alive, &x2);
    debug_assert!(solution.is_feasible_for(g));
    debug_assert_eq!(
        g.neighborhood_of_set(solution.zeros()).unwrap(),
        *solution.ones(),
        "an optimal solution has N(V_0) = V_1"
    );
    solution
}

/// `LP(g)` as an exact half-integer.
pub fn lp_value(g: &Graph) -> HalfInt {
    let dense = DenseGraph::from_graph(g);
    let alive = vec![true; dense.n()];
    HalfInt::from_doubled(lp2_masked(&dense.adj, &alive))
}

/// An optimal half-integral solution `x` such that all-half is the unique
/// LP optimum of the subgraph induced by the half-valued vertices
/// (equivalently, that subgraph has positive surplus).
pub fn lp_optimum_extreme(g: &Graph) -> HalfIntegralSolution {
    extreme_with_surplus(g).0
}

/// Computes the extreme optimum together with the surplus classification
/// of the final half region. Shared by the reduction engine, which needs
/// both answers for consecutive rules.
pub(crate) fn extreme_with_surplus(g: &Graph) -> (HalfIntegralSolution, GraphSurplus) {
    let dense = DenseGraph::from_graph(g);
    let n = dense.n();
    let alive = vec![true; n];
    let (x2_init, lp2) = lp_masked(&dense.adj, &alive);

    let mut x2 = x2_init;
    let mut half_mask: Vec<bool> = x2.iter().map(|&x| x == 1).collect();

    let surplus = loop {
        match surplus_sweep(&dense.adj, &half_mask) {
            SweepResult::MoveFound { zeros, ones } => {
                // relocating a surplus-0 witness keeps the solution optimal
                for &i in &zeros {
                    x2[i as usize] = 0;
                    half_mask[i as usize] = false;
                }
                for &i in &ones {
                    x2[i as usize] = 2;
                    half_mask[i as usize] = false;
                }
            }
            SweepResult::SurplusOne { witness, neighborhood } => {
                let w = SurplusWitness {
                    witness: witness.iter().map(|&i| dense.ids[i as usize]).collect(),
                    neighborhood: neighborhood.iter().map(|&i| dense.ids[i as usize]).collect(),
                    surplus: 1,
                };
                break GraphSurplus::One(w);
            }
            SweepResult::AtLeastTwo => break GraphSurplus::AtLeastTwo,
        }
    };

    let solution = solution_from_dense(&dense, &vec![true; n], &x2);
    assert_eq!(
        solution.value().doubled(),
        lp2,
        "extreme computation must preserve optimality"
    );
    debug_assert!(solution.is_feasible_for(g));
    debug_assert_eq!(
        g.neighborhood_of_set(solution.zeros()).unwrap(),
        *solution.ones()
    );
    (solution, surplus)
}

/// The minimum LP value subject to `x_v = 0`, with a witnessing solution.
///
/// Forcing `x_v = 0` forces all of `N(v)` to one, after which the rest of
/// the graph is solved independently.
pub fn lp_value_forced_zero(g: &Graph, v: VertexId) -> Result<(HalfInt, HalfIntegralSolution)> {
    let dense = DenseGraph::from_graph(g);
    let idx = dense.index_of(v).ok_or(Error::MissingVertex(v))?;
    let alive = vec![true; dense.n()];
    let forced = forced_zero_masked(&dense.adj, &alive, idx as u32);
    let solution = solution_from_dense(&dense, &alive, &forced.x2);
    debug_assert!(solution.is_feasible_for(g));
    assert_eq!(solution.value().doubled(), forced.lp2);
    Ok((HalfInt::from_doubled(forced.lp2), solution))
}

/// The minimum surplus over independent sets containing `v`, with a
/// witness, on a graph whose unique LP optimum is all-half.
pub fn min_surplus_witness_containing(g: &Graph, v: VertexId) -> Result<SurplusWitness> {
    let dense = DenseGraph::from_graph(g);
    let idx = dense.index_of(v).ok_or(Error::MissingVertex(v))? as u32;
    let alive = vec![true; dense.n()];
    let lp2 = lp2_masked(&dense.adj, &alive);
    if lp2 != dense.n() as i64 {
        return Err(Error::ContractViolation(
            "min_surplus_witness_containing requires all-half to be an LP optimum".into(),
        ));
    }
    let forced = forced_zero_masked(&dense.adj, &alive, idx);
    let surplus = forced.lp2 - dense.n() as i64;
    let witness: BTreeSet<VertexId> = forced.zeros.iter().map(|&i| dense.ids[i as usize]).collect();
    let neighborhood: BTreeSet<VertexId> = forced
        .neighborhood
        .iter()
        .map(|&i| dense.ids[i as usize])
        .collect();
    // the witness surplus must agree with the LP delta
    assert_eq!(
        neighborhood.len() as i64 - witness.len() as i64,
        surplus,
        "forced-zero witness surplus disagrees with the LP delta"
    );
    debug_assert!(g.is_independent_set(&witness));
    Ok(SurplusWitness {
        witness,
        neighborhood,
        surplus,
    })
}

/// Classifies the surplus of a graph whose unique LP optimum is all-half:
/// returns a surplus-1 witness if one exists, otherwise reports that the
/// surplus is at least two.
pub fn graph_surplus_if_small(g: &Graph) -> Result<GraphSurplus> {
    let dense = DenseGraph::from_graph(g);
    let alive = vec![true; dense.n()];
    let lp2 = lp2_masked(&dense.adj, &alive);
    if lp2 != dense.n() as i64 {
        return Err(Error::ContractViolation(
            "graph_surplus_if_small requires all-half to be an LP optimum".into(),
        ));
    }
    match surplus_sweep(&dense.adj, &alive) {
        SweepResult::MoveFound { .. } => Err(Error::ContractViolation(
            "graph_surplus_if_small requires all-half to be the unique LP optimum".into(),
        )),
        SweepResult::SurplusOne { witness, neighborhood } => {
            let w = SurplusWitness {
                witness: witness.iter().map(|&i| dense.ids[i as usize]).collect(),
                neighborhood: neighborhood.iter().map(|&i| dense.ids[i as usize]).collect(),
                surplus: 1,
            };
            debug_assert!(g.is_independent_set(&w.witness));
            Ok(GraphSurplus::One(w))
        }
        SweepResult::AtLeastTwo => Ok(GraphSurplus::AtLeastTwo),
    }
}

// ---------------------------------------------------------------------
// masked internals
// ---------------------------------------------------------------------

fn solution_from_dense(dense: &DenseGraph, alive: &[bool], x2: &[u8]) -> HalfIntegralSolution {
    let values: BTreeMap<VertexId, u8> = dense
        .ids
        .iter()
        .enumerate()
        .filter(|&(i, _)| alive[i])
        .map(|(i, &v)| (v, x2[i]))
        .collect();
    HalfIntegralSolution::from_parts(values)
}

/// Doubled LP value of the masked subgraph.
pub(crate) fn lp2_masked(adj: &[Vec<u32>], alive: &[bool]) -> i64 {
    let out = bipartite::matching_with_koenig_cover(adj, adj.len(), alive, alive);
    out.size as i64
}

/// Doubled per-vertex assignment and doubled LP value of the masked
/// subgraph, extracted from a König cover of the bipartite double cover.
pub(crate) fn lp_masked(adj: &[Vec<u32>], alive: &[bool]) -> (Vec<u8>, i64) {
    let out = bipartite::matching_with_koenig_cover(adj, adj.len(), alive, alive);
    let x2: Vec<u8> = (0..adj.len())
        .map(|i| out.cover_left[i] as u8 + out.cover_right[i] as u8)
        .collect();
    #[cfg(debug_assertions)]
    for (u, nbrs) in adj.iter().enumerate() {
        if alive[u] {
            for &v in nbrs {
                if alive[v as usize] {
                    debug_assert!(x2[u] + x2[v as usize] >= 2, "infeasible LP assignment");
                }
            }
        }
    }
    (x2, out.size as i64)
}

struct ForcedZero {
    lp2: i64,
    /// `V_0` of the forced solution; contains the forced vertex.
    zeros: Vec<u32>,
    /// Neighborhood of `zeros` within the mask.
    neighborhood: Vec<u32>,
    /// Full composed assignment over the mask.
    x2: Vec<u8>,
}

/// Optimal LP on the masked subgraph subject to `x_v = 0`: neighbors of
/// `v` go to one, the rest is solved on the subgraph without `N[v]`.
fn forced_zero_masked(adj: &[Vec<u32>], alive: &[bool], v: u32) -> ForcedZero {
    let vu = v as usize;
    debug_assert!(alive[vu]);
    let nbrs: Vec<u32> = adj[vu]
        .iter()
        .copied()
        .filter(|&u| alive[u as usize])
        .collect();

    let mut inner = alive.to_vec();
    inner[vu] = false;
    for &u in &nbrs {
        inner[u as usize] = false;
    }
    let (x2_sub, lp2_sub) = lp_masked(adj, &inner);

    let mut x2 = vec![0u8; adj.len()];
    for (i, &a) in alive.iter().enumerate() {
        if !a {
            continue;
        }
        x2[i] = if i == vu {
            0
        } else if inner[i] {
            x2_sub[i]
        } else {
            2
        };
    }

    let mut zeros: Vec<u32> = vec![v];
    for (i, &a) in inner.iter().enumerate() {
        if a && x2_sub[i] == 0 {
            zeros.push(i as u32);
        }
    }
    zeros.sort_unstable();

    let mut in_zeros = vec![false; adj.len()];
    for &z in &zeros {
        in_zeros[z as usize] = true;
    }
    let mut neighborhood: Vec<u32> = Vec::new();
    let mut seen = vec![false; adj.len()];
    for &z in &zeros {
        for &u in &adj[z as usize] {
            let uu = u as usize;
            if alive[uu] && !in_zeros[uu] && !seen[uu] {
                seen[uu] = true;
                neighborhood.push(u);
            }
        }
    }
    neighborhood.sort_unstable();

    ForcedZero {
        lp2: 2 * nbrs.len() as i64 + lp2_sub,
        zeros,
        neighborhood,
        x2,
    }
}

enum SweepResult {
    /// Some vertex has a surplus-0 witness; relocating it keeps the LP
    /// value unchanged (used by the extreme-optimum construction).
    MoveFound { zeros: Vec<u32>, ones: Vec<u32> },
    /// The minimum surplus over the mask is exactly one.
    SurplusOne { witness: Vec<u32>, neighborhood: Vec<u32> },
    /// Every nonempty independent set in the mask has surplus at least two.
    AtLeastTwo,
}

/// Scans the masked subgraph (whose LP value must equal half its order)
/// ascending by vertex and classifies its minimum surplus. Exits early
/// only on a surplus-0 witness; a surplus-1 verdict requires the full scan.
fn surplus_sweep(adj: &[Vec<u32>], alive: &[bool]) -> SweepResult {
    let n_alive = alive.iter().filter(|&&a| a).count() as i64;
    let mut first_one: Option<(Vec<u32>, Vec<u32>)> = None;
    for v in 0..adj.len() {
        if !alive[v] {
            continue;
        }
        let forced = forced_zero_masked(adj, alive, v as u32);
        let surplus = forced.lp2 - n_alive;
        assert!(
            surplus >= 0,
            "negative forced-zero delta contradicts LP optimality"
        );
        if surplus == 0 {
            return SweepResult::MoveFound {
                zeros: forced.zeros,
                ones: forced.neighborhood,
            };
        }
        if surplus == 1 && first_one.is_none() {
            first_one = Some((forced.zeros, forced.neighborhood));
        }
    }
    match first_one {
        Some((witness, neighborhood)) => SweepResult::SurplusOne { witness, neighborhood },
        None => SweepResult::AtLeastTwo,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    #[test]
    fn half_int_formatting_and_arithmetic() {
        assert_eq!(HalfInt::from_doubled(5).to_string(), "5/2");
        assert_eq!(HalfInt::from_doubled(4).to_string(), "2");
        assert_eq!(HalfInt::from_integer(3).doubled(), 6);
        assert!(!HalfInt::from_doubled(5).is_integer());
        assert_eq!(HalfInt::from_doubled(5).ceil(), 3);
        assert_eq!(HalfInt::from_doubled(5).floor(), 2);
        assert_eq!(
            (HalfInt::from_doubled(5) - HalfInt::from_doubled(2)).doubled(),
            3
        );
    }

    #[test]
    fn lp_optimum_examples() {
        let c5 = Graph::cycle(5);
        let sol = lp_optimum(&c5);
        assert_eq!(sol.value(), HalfInt::from_doubled(5));
        assert_eq!(sol.halves().len(), 5);
        assert_eq!(oracle::brute_lp(&c5).unwrap(), HalfInt::from_doubled(5));

        let star = Graph::star(3);
        let sol = lp_optimum(&star);
        assert_eq!(sol.value(), HalfInt::from_integer(1));
        assert_eq!(sol.ones(), &[VertexId(0)].into());
        assert_eq!(sol.zeros().len(), 3);
        assert_eq!(oracle::brute_lp(&star).unwrap(), HalfInt::from_integer(1));

        let edgeless = Graph::with_vertices(4);
        let sol = lp_optimum(&edgeless);
        assert_eq!(sol.value(), HalfInt::ZERO);
        assert_eq!(sol.zeros().len(), 4);
    }

    #[test]
    fn lp_matches_brute_force_on_all_small_graphs() {
        // all graphs on up to 5 labeled vertices, plus a sample of larger ones
        for n in 0..=5usize {
            let pairs: Vec<(u32, u32)> = (0..n as u32)
                .flat_map(|i| ((i + 1)..n as u32).map(move |j| (i, j)))
                .collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<(u32, u32)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                assert_eq!(lp_value(&g), oracle::brute_lp(&g).unwrap(), "n={n} mask={mask}");
            }
        }
        for seed in 0..25 {
            let g = oracle::random_graph(8, 0.4, seed);
            assert_eq!(lp_value(&g), oracle::brute_lp(&g).unwrap(), "seed={seed}");
        }
    }

    #[test]
    fn extreme_optimum_examples() {
        // triangle b1 b2 b3 plus a vertex adjacent to b1 and b2: the extreme
        // optimum is integral even though all-half has the same value
        let mut g = Graph::with_vertices(4);
        g.add_edge(VertexId(1), VertexId(2)).unwrap();
        g.add_edge(VertexId(1), VertexId(3)).unwrap();
        g.add_edge(VertexId(2), VertexId(3)).unwrap();
        g.add_edge(VertexId(0), VertexId(1)).unwrap();
        g.add_edge(VertexId(0), VertexId(2)).unwrap();
        let sol = lp_optimum_extreme(&g);
        assert_eq!(sol.value(), HalfInt::from_integer(2));
        assert_eq!(sol.zeros(), &[VertexId(0), VertexId(3)].into());
        assert_eq!(sol.ones(), &[VertexId(1), VertexId(2)].into());
        assert!(sol.halves().is_empty());

        // C5 already has positive surplus: all-half is extreme
        let c5 = Graph::cycle(5);
        let sol = lp_optimum_extreme(&c5);
        assert_eq!(sol.halves().len(), 5);

        let edgeless = Graph::with_vertices(3);
        let sol = lp_optimum_extreme(&edgeless);
        assert_eq!(sol.zeros().len(), 3);
    }

    #[test]
    fn extreme_half_region_has_positive_surplus() {
        for seed in 0..60 {
            let g = oracle::random_graph(9, 0.35, seed);
            let sol = lp_optimum_extreme(&g);
            assert_eq!(sol.value(), lp_value(&g), "seed={seed}");
            if !sol.halves().is_empty() {
                let h = g.induced_subgraph(sol.halves()).unwrap();
                let (s, _) = oracle::brute_surplus(&h).unwrap();
                assert!(s >= 1, "seed={seed}: extreme half region must have surplus >= 1");
            }
        }
    }

    #[test]
    fn forced_zero_examples() {
        let c5 = Graph::cycle(5);
        for v in c5.vertices() {
            let (val, sol) = lp_value_forced_zero(&c5, v).unwrap();
            assert_eq!(val, HalfInt::from_doubled(6));
            assert_eq!(sol.doubled_value_of(v), Some(0));
            assert!(sol.is_feasible_for(&c5));
        }

        let star = Graph::star(3);
        let (val, sol) = lp_value_forced_zero(&star, VertexId(0)).unwrap();
        assert_eq!(val, HalfInt::from_integer(3));
        assert_eq!(sol.ones().len(), 3);

        let edgeless = Graph::with_vertices(2);
        let (val, _) = lp_value_forced_zero(&edgeless, VertexId(1)).unwrap();
        assert_eq!(val, HalfInt::ZERO);

        assert!(lp_value_forced_zero(&c5, VertexId(9)).is_err());
    }

    #[test]
    fn min_surplus_witness_examples() {
        let c5 = Graph::cycle(5);
        let w = min_surplus_witness_containing(&c5, VertexId(0)).unwrap();
        assert_eq!(w.surplus, 1);
        assert!(w.witness.contains(&VertexId(0)));
        let (bs, _) = oracle::brute_surplus_containing(&c5, VertexId(0)).unwrap();
        assert_eq!(w.surplus, bs);

        let k4 = Graph::complete(4);
        for v in k4.vertices() {
            let w = min_surplus_witness_containing(&k4, v).unwrap();
            assert_eq!(w.surplus, 2);
            assert_eq!(w.witness, [v].into());
        }

        // C5 plus chord {1, 4}: the witness through vertex 0 is {0} itself
        let mut g = Graph::cycle(5);
        g.add_edge(VertexId(1), VertexId(4)).unwrap();
        let w = min_surplus_witness_containing(&g, VertexId(0)).unwrap();
        assert_eq!(w.witness, [VertexId(0)].into());
        assert_eq!(w.neighborhood, [VertexId(1), VertexId(4)].into());
        assert_eq!(w.surplus, 1);
    }

    #[test]
    fn min_surplus_agrees_with_brute_force() {
        for seed in 0..80 {
            let n = if seed % 2 == 0 { 8 } else { 10 };
            let g = oracle::random_graph(n, 0.5, seed);
            if lp_value(&g).doubled() != g.vertex_count() as i64 {
                continue; // all-half not optimal; precondition cannot hold
            }
            if graph_surplus_if_small(&g).is_err() {
                continue; // all-half optimal but not unique
            }
            for v in g.vertices() {
                let w = min_surplus_witness_containing(&g, v).unwrap();
                let (bs, _) = oracle::brute_surplus_containing(&g, v).unwrap();
                assert_eq!(w.surplus, bs, "seed={seed} v={v}");
            }
        }
    }

    #[test]
    fn graph_surplus_classification_examples() {
        let c5 = Graph::cycle(5);
        match graph_surplus_if_small(&c5).unwrap() {
            GraphSurplus::One(w) => {
                assert_eq!(w.surplus, 1);
                assert_eq!(
                    w.neighborhood.len() as i64 - w.witness.len() as i64,
                    1
                );
            }
            GraphSurplus::AtLeastTwo => panic!("C5 has surplus 1"),
        }

        assert_eq!(
            graph_surplus_if_small(&Graph::complete(4)).unwrap(),
            GraphSurplus::AtLeastTwo
        );
        assert_eq!(
            graph_surplus_if_small(&Graph::complete(5)).unwrap(),
            GraphSurplus::AtLeastTwo
        );

        // star: all-half is not optimal, so the precondition fails
        assert!(graph_surplus_if_small(&Graph::star(3)).is_err());
    }

    #[test]
    fn surplus_classification_matches_brute_force() {
        for seed in 0..120 {
            let g = oracle::random_graph(9, 0.5, seed);
            let Ok(classified) = graph_surplus_if_small(&g) else {
                continue; // precondition (all-half unique) fails
            };
            let (s, _) = oracle::brute_surplus(&g).unwrap();
            match classified {
                GraphSurplus::One(w) => {
                    assert_eq!(s, 1, "seed={seed}");
                    assert_eq!(
                        w.neighborhood.len() as i64 - w.witness.len() as i64,
                        1
                    );
                    assert!(g.is_independent_set(&w.witness));
                }
                GraphSurplus::AtLeastTwo => assert!(s >= 2, "seed={seed}: brute surplus {s}"),
            }
        }
    }

    #[test]
    fn lp_chain_against_matching() {
        use crate::matching::matching_number;
        for seed in 0..50 {
            let g = oracle::random_graph(10, 0.3, seed);
            let mm = matching_number(&g) as i64;
            let lp2 = lp_value(&g).doubled();
            assert!(2 * mm <= lp2, "MM <= LP violated at seed {seed}");
        }
    }
}
