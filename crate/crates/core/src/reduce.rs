//! The three answer-preserving reduction rules, applied exhaustively with
//! a replayable trace.
//!
//! Rule one restricts the graph to the half region of an extreme LP
//! optimum. Rules two and three share one surplus-1 witness search: if the
//! witness neighborhood contains an edge the witness block is deleted
//! outright, otherwise the neighborhood is identified into a single vertex
//! (struction). A graph on which no rule applies is empty or has surplus
//! at least two.
//!
//! Every application checks, at runtime, that the measure `k + MM - 2LP`
//! did not increase and that the per-rule matching/LP deltas stay within
//! their proven bounds.

use std::collections::BTreeSet;

use crate::graph::{Graph, VertexId};
use crate::lpvc::{self, GraphSurplus, HalfInt, HalfIntegralSolution, SurplusWitness};
use crate::matching;
use crate::{Error, Result};

/// The classical budget `k` together with the matching number and exact
/// LP value of the instance it belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub k: i64,
    pub mm: i64,
    pub lp: HalfInt,
}

impl Budget {
    /// Computes `MM` and `LP` for `g` and attaches the budget `k`.
    pub fn for_graph(g: &Graph, k: i64) -> Budget {
        Budget {
            k,
            mm: matching::matching_number(g) as i64,
            lp: lpvc::lp_value(g),
        }
    }

    /// The measure `k + MM - 2LP`; an integer, nonnegative on every
    /// yes-instance.
    pub fn measure(&self) -> i64 {
        self.k + self.mm - self.lp.doubled()
    }

    /// The lower bound `2LP - MM` on the vertex cover number.
    pub fn lovasz_plummer(&self) -> i64 {
        self.lp.doubled() - self.mm
    }
}

/// One replayable reduction or branching event.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionStep {
    /// Restricted to the half region; `ones` joined the cover.
    Rule1 {
        ones: BTreeSet<VertexId>,
        zeros: BTreeSet<VertexId>,
    },
    /// Deleted a surplus-1 witness and its (non-independent) neighborhood.
    Rule2 {
        witness: BTreeSet<VertexId>,
        neighborhood: BTreeSet<VertexId>,
    },
    /// Struction: deleted the witness and identified its neighborhood
    /// into `merged`.
    Rule3 {
        witness: BTreeSet<VertexId>,
        neighborhood: BTreeSet<VertexId>,
        merged: VertexId,
    },
    /// A branching rule committed `picked` to the cover.
    BranchPick { picked: BTreeSet<VertexId> },
}

impl ReductionStep {
    pub fn rule_name(&self) -> &'static str {
        match self {
            ReductionStep::Rule1 { .. } => "rule1",
            ReductionStep::Rule2 { .. } => "rule2",
            ReductionStep::Rule3 { .. } => "rule3",
            ReductionStep::BranchPick { .. } => "branch",
        }
    }
}

/// Ordered record of steps, sufficient to lift a vertex cover of the
/// final graph back to a vertex cover of the original one.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    /// Replays the trace backwards over a vertex cover of `end_graph`.
    ///
    /// Growth per step is exact: `|ones|` for rule one, `|N(Z)|` for rule
    /// two, `|Z|` for struction (taking `Z` when the merged vertex is
    /// outside the cover, `N(Z)` in its place otherwise), `|picked|` per
    /// branch step.
    pub fn lift_cover(
        &self,
        end_graph: &Graph,
        cover: &BTreeSet<VertexId>,
    ) -> Result<BTreeSet<VertexId>> {
        for &v in cover {
            if !end_graph.has_vertex(v) {
                return Err(Error::ContractViolation(format!(
                    "cover vertex {v} is not in the final graph"
                )));
            }
        }
        if !end_graph.is_vertex_cover(cover) {
            return Err(Error::ContractViolation(
                "the given set does not cover the final graph".into(),
            ));
        }
        let mut current = cover.clone();
        for step in self.steps.iter().rev() {
            match step {
                ReductionStep::Rule1 { ones, .. } => current.extend(ones),
                ReductionStep::Rule2 { neighborhood, .. } => current.extend(neighborhood),
                ReductionStep::Rule3 {
                    witness,
                    neighborhood,
                    merged,
                } => {
                    if current.remove(merged) {
                        current.extend(neighborhood);
                    } else {
                        current.extend(witness);
                    }
                }
                ReductionStep::BranchPick { picked } => current.extend(picked),
            }
        }
        Ok(current)
    }
}

/// Restricts to the half region of an extreme LP optimum. Not applicable
/// exactly when all-half is already the unique LP optimum of `g`.
pub fn apply_rule1(g: &Graph, b: Budget) -> Option<(Graph, Budget, ReductionStep)> {
    let solution = lpvc::lp_optimum_extreme(g);
    apply_rule1_with(g, b, &solution)
}

fn apply_rule1_with(
    g: &Graph,
    b: Budget,
    solution: &HalfIntegralSolution,
) -> Option<(Graph, Budget, ReductionStep)> {
    if solution.halves().len() == g.vertex_count() {
        return None;
    }
    let ones = solution.ones().clone();
    let zeros = solution.zeros().clone();
    let reduced = g.induced_subgraph(solution.halves()).unwrap();
    // all-half is the unique optimum on the half region, so its LP value
    // is known without another solve
    let next = Budget {
        k: b.k - ones.len() as i64,
        mm: matching::matching_number(&reduced) as i64,
        lp: HalfInt::from_doubled(reduced.vertex_count() as i64),
    };
    assert!(
        next.mm <= b.mm - ones.len() as i64,
        "rule 1 must drop the matching number by at least |V_1|"
    );
    assert_eq!(
        next.lp.doubled(),
        b.lp.doubled() - 2 * ones.len() as i64,
        "rule 1 must drop the LP value by exactly |V_1|"
    );
    assert!(next.measure() <= b.measure(), "rule 1 must not increase the measure");
    Some((reduced, next, ReductionStep::Rule1 { ones, zeros }))
}

/// Deletes a surplus-1 witness block whose neighborhood is not
/// independent. Requires rule one to be inapplicable; shares the witness
/// search with rule three, so it applies exactly when the first witness
/// found (ascending vertex scan) has an edge inside its neighborhood.
pub fn apply_rule2(g: &Graph, b: Budget) -> Option<(Graph, Budget, ReductionStep)> {
    match shared_witness(g) {
        Some(w) if !g.is_independent_set(&w.neighborhood) => Some(apply_rule2_with(g, b, &w)),
        _ => None,
    }
}

fn apply_rule2_with(g: &Graph, b: Budget, w: &SurplusWitness) -> (Graph, Budget, ReductionStep) {
    let block: BTreeSet<VertexId> = w.witness.union(&w.neighborhood).copied().collect();
    let reduced = g.delete_vertices(&block).unwrap();
    let next = Budget::for_graph(&reduced, b.k - w.neighborhood.len() as i64);
    assert!(
        next.mm <= b.mm - w.witness.len() as i64,
        "rule 2 must drop the matching number by at least |Z|"
    );
    assert!(
        next.lp.doubled() - b.lp.doubled() + 2 * w.neighborhood.len() as i64 >= 1,
        "rule 2 may drop the LP value by at most |N(Z)| - 1/2"
    );
    assert!(next.measure() <= b.measure(), "rule 2 must not increase the measure");
    (
        reduced,
        next,
        ReductionStep::Rule2 {
            witness: w.witness.clone(),
            neighborhood: w.neighborhood.clone(),
        },
    )
}

/// Struction: deletes a surplus-1 witness with independent neighborhood
/// and identifies that neighborhood into one fresh vertex. Requires rules
/// one and two to be inapplicable.
pub fn apply_rule3(g: &Graph, b: Budget) -> Option<(Graph, Budget, ReductionStep)> {
    match shared_witness(g) {
        Some(w) if g.is_independent_set(&w.neighborhood) => Some(apply_rule3_with(g, b, &w)),
        _ => None,
    }
}

fn apply_rule3_with(g: &Graph, b: Budget, w: &SurplusWitness) -> (Graph, Budget, ReductionStep) {
    let without_witness = g.delete_vertices(&w.witness).unwrap();
    let (reduced, merged) = without_witness.identify_set(&w.neighborhood).unwrap();
    let next = Budget::for_graph(&reduced, b.k - w.witness.len() as i64);
    assert!(
        next.mm <= b.mm - w.witness.len() as i64,
        "struction must drop the matching number by at least |Z|"
    );
    assert!(
        next.lp.doubled() >= b.lp.doubled() - 2 * w.witness.len() as i64,
        "struction may drop the LP value by at most |Z|"
    );
    assert!(next.measure() <= b.measure(), "struction must not increase the measure");
    (
        reduced,
        next,
        ReductionStep::Rule3 {
            witness: w.witness.clone(),
            neighborhood: w.neighborhood.clone(),
            merged,
        },
    )
}

fn shared_witness(g: &Graph) -> Option<SurplusWitness> {
    let surplus = lpvc::graph_surplus_if_small(g)
        .expect("reduction rules 2 and 3 require rule 1 to be inapplicable");
    match surplus {
        GraphSurplus::One(w) => Some(w),
        GraphSurplus::AtLeastTwo => None,
    }
}

/// Applies the rules in order, first applicable wins, until none applies.
/// The result is empty or has surplus at least two, and the measure never
/// increases along the way.
pub fn reduce_exhaustively(g: Graph, b: Budget) -> (Graph, Budget, ReductionTrace) {
    let mut graph = g;
    let mut budget = b;
    let mut trace = ReductionTrace::default();
    loop {
        // one extreme-LP computation powers both the rule-1 test and the
        // witness search for rules 2 and 3 on the surviving half region
        let (solution, surplus) = lpvc::extreme_with_surplus(&graph);
        if let Some((next_g, next_b, step)) = apply_rule1_with(&graph, budget, &solution) {
            debug_assert!(next_g.vertex_count() < graph.vertex_count());
            graph = next_g;
            budget = next_b;
            trace.steps.push(step);
        }
        match surplus {
            GraphSurplus::One(w) => {
                let (next_g, next_b, step) = if g_has_edge_inside(&graph, &w.neighborhood) {
                    apply_rule2_with(&graph, budget, &w)
                } else {
                    apply_rule3_with(&graph, budget, &w)
                };
                debug_assert!(next_g.vertex_count() < graph.vertex_count());
                graph = next_g;
                budget = next_b;
                trace.steps.push(step);
            }
            GraphSurplus::AtLeastTwo => break,
        }
    }
    (graph, budget, trace)
}

fn g_has_edge_inside(g: &Graph, xs: &BTreeSet<VertexId>) -> bool {
    !g.is_independent_set(xs)
}
