//! The recursive branch-and-reduce decision procedure.
//!
//! Every node first reduces exhaustively, then answers the base cases
//! (negative measure: no; empty graph: yes), then branches guided by the
//! Gallai–Edmonds decomposition of the reduced graph:
//!
//! * if the boundary-or-perfectly-matched part spans an edge, branch on
//!   that edge's two endpoints (two children, budget minus one);
//! * otherwise every vertex is exposable, and we branch three ways on an
//!   exposable vertex `u` with two exposable neighbors `v, w`: take both
//!   `v, w`, or take `u` together with one endpoint of an edge that the
//!   decomposition of `g - u` guarantees inside its perfectly-matched
//!   part (budget minus two each).
//!
//! The measure `k + MM - 2LP` drops by at least one on every branch, which
//! bounds the tree ternary-exponentially in the initial measure. The drop
//! is checked at runtime for every child, along with the exact matching
//! and LP deltas the analysis promises.

use std::collections::BTreeSet;

use crate::gallai::{self, GallaiEdmonds};
use crate::graph::{Graph, VertexId};
use crate::lpvc::HalfInt;
use crate::reduce::{self, Budget, ReductionStep};
use crate::{Error, Result};

/// How the classical budget `k` is derived from the input parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamMode {
    /// Decide `OPT(g) <= k` directly.
    Plain { k: i64 },
    /// Budget `MM + excess`.
    AboveMatching { excess: i64 },
    /// Budget `ceil(LP) + excess`.
    AboveLp { excess: i64 },
    /// Budget `(2LP - MM) + excess`.
    AboveLovaszPlummer { excess: i64 },
}

/// Reduction applications, counted over a whole search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RuleCounts {
    pub rule1: u64,
    pub rule2: u64,
    pub rule3: u64,
}

/// The input instance's bounds, captured before searching.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InitialBounds {
    pub matching_number: i64,
    pub lp: HalfInt,
    pub lovasz_plummer: i64,
    pub budget: i64,
    pub measure: i64,
}

/// Outcome of one decision run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub answer: bool,
    /// A verified vertex cover of size at most the budget, on yes.
    pub certificate: Option<BTreeSet<VertexId>>,
    pub nodes_visited: u64,
    pub max_depth: u32,
    pub reductions_applied: RuleCounts,
    pub initial_bounds: InitialBounds,
}

/// The lower bound `2LP(g) - MM(g)` on the vertex cover number. Always an
/// integer, and at least as large as both `LP(g)` and `MM(g)`.
pub fn lovasz_plummer_bound(g: &Graph) -> i64 {
    Budget::for_graph(g, 0).lovasz_plummer()
}

/// Decides whether `g` has a vertex cover of size at most `k`.
pub fn solve(g: &Graph, k: i64) -> SolveReport {
    solve_mode(g, ParamMode::Plain { k })
}

/// Decides whether `g` has a vertex cover of size at most
/// `(2LP - MM) + excess`. A negative excess is answered no immediately.
pub fn solve_above_lovasz_plummer(g: &Graph, excess: i64) -> SolveReport {
    solve_mode(g, ParamMode::AboveLovaszPlummer { excess })
}

/// Normalizes the parameter mode to a classical budget and runs the
/// search. Instances whose measure is negative are no-instances outright.
pub fn solve_mode(g: &Graph, mode: ParamMode) -> SolveReport {
    let base = Budget::for_graph(g, 0);
    let k = match mode {
        ParamMode::Plain { k } => k,
        ParamMode::AboveMatching { excess } => base.mm + excess,
        ParamMode::AboveLp { excess } => base.lp.ceil() + excess,
        ParamMode::AboveLovaszPlummer { excess } => base.lovasz_plummer() + excess,
    };
    run(g, Budget { k, ..base })
}

fn run(g: &Graph, budget: Budget) -> SolveReport {
    let initial_bounds = InitialBounds {
        matching_number: budget.mm,
        lp: budget.lp,
        lovasz_plummer: budget.lovasz_plummer(),
        budget: budget.k,
        measure: budget.measure(),
    };
    if budget.measure() < 0 {
        return SolveReport {
            answer: false,
            certificate: None,
            nodes_visited: 0,
            max_depth: 0,
            reductions_applied: RuleCounts::default(),
            initial_bounds,
        };
    }
    let mut ctx = SearchCtx {
        nodes: 0,
        max_depth: 0,
        counts: RuleCounts::default(),
        root_measure: budget.measure(),
    };
    let certificate = search(g, budget, 0, &mut ctx);
    if let Some(cover) = &certificate {
        assert!(g.is_vertex_cover(cover), "certificate must cover the input");
        assert!(
            cover.len() as i64 <= budget.k,
            "certificate must fit the budget"
        );
    }
    assert!(
        i64::from(ctx.max_depth) <= ctx.root_measure + 1,
        "recursion depth exceeded the measure bound"
    );
    // node counts fit u64 < 3^41, so any measure past 40 satisfies the
    // bound trivially and would only overflow the power
    let node_bound = if ctx.root_measure >= 40 {
        u128::MAX
    } else {
        3u128
            .pow(ctx.root_measure as u32 + 1)
            .saturating_mul(g.vertex_count() as u128 + 1)
    };
    assert!(
        u128::from(ctx.nodes) <= node_bound,
        "branch tree exceeded the ternary node bound"
    );
    SolveReport {
        answer: certificate.is_some(),
        certificate,
        nodes_visited: ctx.nodes,
        max_depth: ctx.max_depth,
        reductions_applied: ctx.counts,
        initial_bounds,
    }
}

struct SearchCtx {
    nodes: u64,
    max_depth: u32,
    counts: RuleCounts,
    root_measure: i64,
}

fn search(g: &Graph, budget: Budget, depth: u32, ctx: &mut SearchCtx) -> Option<BTreeSet<VertexId>> {
    ctx.nodes += 1;
    ctx.max_depth = ctx.max_depth.max(depth);
    if budget.k < 0 {
        return None;
    }

    let (reduced, reduced_budget, mut trace) = reduce::reduce_exhaustively(g.clone(), budget);
    for step in &trace.steps {
        match step {
            ReductionStep::Rule1 { .. } => ctx.counts.rule1 += 1,
            ReductionStep::Rule2 { .. } => ctx.counts.rule2 += 1,
            ReductionStep::Rule3 { .. } => ctx.counts.rule3 += 1,
            ReductionStep::BranchPick { .. } => unreachable!("reduction emits no branch steps"),
        }
    }

    if reduced_budget.measure() < 0 {
        return None;
    }
    if reduced.is_empty() {
        let cover = trace
            .lift_cover(&reduced, &BTreeSet::new())
            .expect("the empty set covers the empty graph");
        assert!(g.is_vertex_cover(&cover), "lifted cover must cover the node graph");
        assert!(cover.len() as i64 <= budget.k);
        return Some(cover);
    }

    assert!(
        i64::from(depth) <= ctx.root_measure,
        "branching below the measure-permitted depth"
    );
    let decomposition = gallai::decompose(&reduced);
    let children = match gallai::find_inner_edge(&reduced, &decomposition) {
        Some(edge) => branch_rule_1(&reduced, &reduced_budget, &decomposition, edge)
            .expect("branching rule 1 contract violated"),
        None => branch_rule_2(&reduced, &reduced_budget, &decomposition)
            .expect("branching rule 2 contract violated"),
    };

    for child in children {
        let Some(child_cover) = search(&child.graph, child.budget, depth + 1, ctx) else {
            continue;
        };
        trace.steps.push(ReductionStep::BranchPick {
            picked: child.picked,
        });
        let cover = trace
            .lift_cover(&child.graph, &child_cover)
            .expect("child certificate must cover the child graph");
        assert!(g.is_vertex_cover(&cover), "lifted cover must cover the node graph");
        assert!(cover.len() as i64 <= budget.k);
        return Some(cover);
    }
    None
}

/// One branch instance: the child graph, its budget with `MM`/`LP`
/// recomputed, and the vertices this branch commits to the cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchChild {
    pub graph: Graph,
    pub budget: Budget,
    pub picked: BTreeSet<VertexId>,
}

/// Branches on the endpoints of an edge inside the boundary-or-perfectly-
/// matched part of a reduced graph. Both children lose exactly one unit
/// of matching number and exactly one half of LP value, so the measure
/// drops by exactly one.
pub fn branch_rule_1(
    g: &Graph,
    b: &Budget,
    d: &GallaiEdmonds,
    edge: (VertexId, VertexId),
) -> Result<Vec<BranchChild>> {
    let (u, v) = edge;
    if !g.has_edge(u, v) {
        return Err(Error::ContractViolation(format!(
            "{{{u}, {v}}} is not an edge of the graph"
        )));
    }
    let inner = d.inner_part();
    if !inner.contains(&u) || !inner.contains(&v) {
        return Err(Error::ContractViolation(format!(
            "edge {{{u}, {v}}} does not lie in the inner part"
        )));
    }
    let mut children = Vec::with_capacity(2);
    for picked in [u, v] {
        let set: BTreeSet<VertexId> = [picked].into();
        let child_graph = g.delete_vertices(&set).unwrap();
        let child = Budget::for_graph(&child_graph, b.k - 1);
        if child.mm != b.mm - 1 {
            return Err(Error::ContractViolation(format!(
                "deleting saturated vertex {picked} must drop the matching number by exactly one"
            )));
        }
        if child.lp.doubled() != b.lp.doubled() - 1 {
            return Err(Error::ContractViolation(format!(
                "deleting {picked} from a surplus-2 graph must drop the doubled LP by exactly one"
            )));
        }
        if child.measure() > b.measure() - 1 {
            return Err(Error::ContractViolation(
                "branching rule 1 failed to drop the measure".into(),
            ));
        }
        children.push(BranchChild {
            graph: child_graph,
            budget: child,
            picked: set,
        });
    }
    Ok(children)
}

/// Branches three ways when the whole reduced graph is exposable: either
/// both chosen exposable neighbors `v, w` of `u` join the cover, or `u`
/// does, paired with one endpoint of an edge guaranteed inside the
/// perfectly-matched part of `g - u`. Every child drops the measure by at
/// least one.
pub fn branch_rule_2(g: &Graph, b: &Budget, d: &GallaiEdmonds) -> Result<Vec<BranchChild>> {
    let (u, v, w) = gallai::find_branch_vertex(g, d)?;

    let mut children = Vec::with_capacity(3);

    let vw: BTreeSet<VertexId> = [v, w].into();
    let graph_vw = g.delete_vertices(&vw).unwrap();
    let budget_vw = Budget::for_graph(&graph_vw, b.k - 2);
    if budget_vw.mm > b.mm - 1 {
        return Err(Error::ContractViolation(format!(
            "deleting {v} and {w} from one exposable component must drop the matching number"
        )));
    }
    if budget_vw.lp.doubled() != b.lp.doubled() - 2 {
        return Err(Error::ContractViolation(
            "deleting two vertices from a surplus-2 graph must drop the LP by exactly one".into(),
        ));
    }
    if budget_vw.measure() > b.measure() - 1 {
        return Err(Error::ContractViolation(
            "branching rule 2 (joint branch) failed to drop the measure".into(),
        ));
    }
    children.push(BranchChild {
        graph: graph_vw,
        budget: budget_vw,
        picked: vw,
    });

    let without_u = g.delete_vertices(&[u].into()).unwrap();
    let mm_without_u = crate::matching::matching_number(&without_u) as i64;
    if mm_without_u != b.mm {
        return Err(Error::ContractViolation(format!(
            "deleting the exposable vertex {u} must preserve the matching number"
        )));
    }
    let d2 = gallai::decompose(&without_u);
    let inner_edge = {
        let p = &d2.perfectly_matched;
        p.iter()
            .find_map(|&x| {
                without_u
                    .neighbors(x)
                    .unwrap()
                    .iter()
                    .find(|&&y| y > x && p.contains(&y))
                    .map(|&y| (x, y))
            })
            .ok_or_else(|| {
                Error::ContractViolation(
                    "no edge in the perfectly-matched part after deleting the branch vertex"
                        .into(),
                )
            })?
    };
    for picked in [inner_edge.0, inner_edge.1] {
        let set: BTreeSet<VertexId> = [u, picked].into();
        let child_graph = without_u.delete_vertices(&[picked].into()).unwrap();
        let child = Budget::for_graph(&child_graph, b.k - 2);
        if child.mm != b.mm - 1 {
            return Err(Error::ContractViolation(format!(
                "deleting perfectly-matched vertex {picked} must drop the matching number by one"
            )));
        }
        if child.lp.doubled() != b.lp.doubled() - 2 {
            return Err(Error::ContractViolation(
                "deleting two vertices from a surplus-2 graph must drop the LP by exactly one"
                    .into(),
            ));
        }
        if child.measure() > b.measure() - 1 {
            return Err(Error::ContractViolation(
                "branching rule 2 (split branch) failed to drop the measure".into(),
            ));
        }
        children.push(BranchChild {
            graph: child_graph,
            budget: child,
            picked: set,
        });
    }
    Ok(children)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    #[test]
    fn lovasz_plummer_bound_examples() {
        assert_eq!(lovasz_plummer_bound(&Graph::complete(3)), 2);
        assert_eq!(oracle::brute_opt(&Graph::complete(3)).unwrap().0, 2);

        assert_eq!(lovasz_plummer_bound(&Graph::cycle(5)), 3);
        assert_eq!(oracle::brute_opt(&Graph::cycle(5)).unwrap().0, 3);

        assert_eq!(lovasz_plummer_bound(&Graph::petersen()), 5);
        assert_eq!(oracle::brute_opt(&Graph::petersen()).unwrap().0, 6);
    }

    #[test]
    fn solve_above_lovasz_plummer_examples() {
        let k5 = Graph::complete(5);
        let yes = solve_above_lovasz_plummer(&k5, 1);
        assert!(yes.answer);
        assert!(yes.certificate.as_ref().unwrap().len() <= 4);
        assert!(!solve_above_lovasz_plummer(&k5, 0).answer);

        let petersen = Graph::petersen();
        assert!(solve_above_lovasz_plummer(&petersen, 1).answer);
        assert!(!solve_above_lovasz_plummer(&petersen, 0).answer);

        let empty = Graph::new();
        assert!(solve_above_lovasz_plummer(&empty, 0).answer);

        // C5 meets its bound with equality
        assert!(solve_above_lovasz_plummer(&Graph::cycle(5), 0).answer);

        // negative excess is a no without any search
        let report = solve_above_lovasz_plummer(&k5, -1);
        assert!(!report.answer);
        assert_eq!(report.nodes_visited, 0);
    }

    #[test]
    fn solve_mode_examples() {
        let petersen = Graph::petersen();
        assert!(solve_mode(&petersen, ParamMode::Plain { k: 6 }).answer);
        assert!(!solve_mode(&petersen, ParamMode::Plain { k: 5 }).answer);

        // K5: MM = 2, so two above the matching number reaches OPT = 4
        let k5 = Graph::complete(5);
        let report = solve_mode(&k5, ParamMode::AboveMatching { excess: 2 });
        assert_eq!(report.initial_bounds.budget, 4);
        assert!(report.answer);
        assert!(!solve_mode(&k5, ParamMode::AboveMatching { excess: 1 }).answer);

        // C5: ceil(LP) = 3 = OPT, so the above-LP question is yes at zero
        let c5 = Graph::cycle(5);
        let report = solve_mode(&c5, ParamMode::AboveLp { excess: 0 });
        assert_eq!(report.initial_bounds.budget, 3);
        assert!(report.answer);
        assert!(solve_mode(&c5, ParamMode::AboveLp { excess: 1 }).answer);
    }

    #[test]
    fn branch_rule_1_examples() {
        // K4 is reduced and entirely perfectly matched
        let k4 = Graph::complete(4);
        let b = Budget::for_graph(&k4, 3);
        assert_eq!(b.measure(), 1);
        let d = gallai::decompose(&k4);
        let edge = gallai::find_inner_edge(&k4, &d).unwrap();
        let children = branch_rule_1(&k4, &b, &d, edge).unwrap();
        assert_eq!(children.len(), 2);
        for child in &children {
            assert_eq!(child.budget.k, 2);
            assert_eq!(child.budget.measure(), 0);
            assert_eq!(child.graph.vertex_count(), 3);
        }

        // an edge outside the inner part is rejected
        let k5 = Graph::complete(5);
        let d5 = gallai::decompose(&k5);
        let b5 = Budget::for_graph(&k5, 4);
        assert!(branch_rule_1(&k5, &b5, &d5, (VertexId(0), VertexId(1))).is_err());
    }

    #[test]
    fn branch_rule_2_examples() {
        let k5 = Graph::complete(5);
        let b = Budget::for_graph(&k5, 4);
        assert_eq!(b.measure(), 1);
        let d = gallai::decompose(&k5);
        let children = branch_rule_2(&k5, &b, &d).unwrap();
        assert_eq!(children.len(), 3);
        for child in &children {
            assert_eq!(child.budget.k, 2);
            assert_eq!(child.budget.measure(), 0);
            assert_eq!(child.graph.vertex_count(), 3);
            assert_eq!(child.graph.edge_count(), 3);
        }
        assert_eq!(children[0].picked, [VertexId(1), VertexId(2)].into());

        // two disjoint K5s: the decomposition is componentwise
        let mut g = Graph::with_vertices(10);
        for i in 0..5u32 {
            for j in (i + 1)..5 {
                g.add_edge(VertexId(i), VertexId(j)).unwrap();
                g.add_edge(VertexId(i + 5), VertexId(j + 5)).unwrap();
            }
        }
        let b = Budget::for_graph(&g, 8);
        let d = gallai::decompose(&g);
        let children = branch_rule_2(&g, &b, &d).unwrap();
        assert_eq!(children[0].picked, [VertexId(1), VertexId(2)].into());

        // rejected when an inner edge exists
        let k4 = Graph::complete(4);
        let d4 = gallai::decompose(&k4);
        assert!(branch_rule_2(&k4, &Budget::for_graph(&k4, 3), &d4).is_err());
    }

    #[test]
    fn reports_are_deterministic() {
        let g = oracle::random_graph(10, 0.4, 11);
        let a = solve(&g, 6);
        let b = solve(&g, 6);
        assert_eq!(a, b);
    }

    #[test]
    fn certificates_are_valid_on_small_corpus() {
        for seed in 0..25 {
            let g = oracle::random_graph(9, 0.35, seed);
            let (opt, _) = oracle::brute_opt(&g).unwrap();
            for k in 0..=9i64 {
                let report = solve(&g, k);
                assert_eq!(report.answer, k >= opt as i64, "seed={seed} k={k}");
                if let Some(cert) = &report.certificate {
                    assert!(g.is_vertex_cover(cert));
                    assert!(cert.len() as i64 <= k);
                }
            }
        }
    }

    #[test]
    fn exhaustive_agreement_on_four_vertices() {
        let pairs: Vec<(u32, u32)> = (0..4u32)
            .flat_map(|i| ((i + 1)..4).map(move |j| (i, j)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(u32, u32)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(4, &edges).unwrap();
            let (opt, _) = oracle::brute_opt(&g).unwrap();
            for k in 0..=4i64 {
                assert_eq!(solve(&g, k).answer, k >= opt as i64, "mask={mask} k={k}");
            }
        }
    }

    #[test]
    fn lower_bound_chain_holds() {
        for seed in 0..30 {
            let g = oracle::random_graph(10, 0.4, seed);
            let b = Budget::for_graph(&g, 0);
            let (opt, _) = oracle::brute_opt(&g).unwrap();
            assert!(2 * b.mm <= b.lp.doubled());
            assert!(b.lp.doubled() <= 2 * b.lovasz_plummer());
            assert!(b.lovasz_plummer() <= opt as i64);
        }
    }
}
