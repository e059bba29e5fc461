use serde::{Deserialize, Serialize};

use crate::indices::harmonic_index;
use crate::rational::UnitFractionTally;
use crate::{Error, Graph, Rational, Result};

/// Adds a new vertex `n` joined only to `v`.
pub fn add_pendant(g: &Graph, v: usize) -> Result<Graph> {
    g.with_new_vertex(&[v])
}

/// Lower bound `2 / ((d+1)(d+2))` on the Harmonic-index gain from hanging a
/// pendant vertex on a vertex of degree `d >= 1`.
///
/// The worst case puts every existing neighbor at degree 1. Note the bound is
/// `2/((d+1)(d+2))`, not `2d/((d+1)(d+2))`: attaching to the center of `P_3`
/// gains exactly 1/6.
pub fn pendant_delta_bound(d: usize) -> Result<Rational> {
    if d == 0 {
        return Err(Error::domain("pendant bound needs degree >= 1"));
    }
    let d = d as i64;
    Ok(Rational::new(2, (d + 1) * (d + 2)))
}

/// An edge together with the exact Harmonic-index change its presence causes:
/// `H(graph_before) - H(graph_before - edge)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeDelta {
    pub graph_before: Graph,
    pub edge: (usize, usize),
    pub delta: Rational,
}

/// `H(g) - H(g - e)` for an edge `e = (a, b)` of `g`, touching only the terms
/// at `a`, `b` and their neighbors.
pub fn harmonic_edge_delta(g: &Graph, (a, b): (usize, usize)) -> Result<Rational> {
    if !g.has_edge(a, b) {
        return Err(Error::MissingEdge(a.min(b), a.max(b)));
    }
    let (da, db) = (g.degree(a), g.degree(b));
    let mut tally = UnitFractionTally::new();
    tally.add(2, da + db);
    for (end, other, d) in [(a, b, da), (b, a, db)] {
        for &w in g.neighbors(end).iter().filter(|&&w| w != other) {
            let dw = g.degree(w);
            tally.add(2, d + dw);
            tally.add(-2, d - 1 + dw);
        }
    }
    Ok(tally.to_rational())
}

pub fn edge_delta(g: &Graph, edge: (usize, usize)) -> Result<EdgeDelta> {
    let delta = harmonic_edge_delta(g, edge)?;
    Ok(EdgeDelta { graph_before: g.clone(), edge: (edge.0.min(edge.1), edge.0.max(edge.1)), delta })
}

/// All bridges of `g` as `(u, v)` with `u < v`, sorted.
pub fn bridges(g: &Graph) -> Vec<(usize, usize)> {
    const UNSEEN: usize = usize::MAX;
    let n = g.n();
    let mut order = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut found = Vec::new();
    let mut next = 0;
    // (vertex, parent, next neighbor position)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if order[root] != UNSEEN {
            continue;
        }
        order[root] = next;
        low[root] = next;
        next += 1;
        stack.push((root, UNSEEN, 0));
        while let Some(&mut (v, parent, ref mut pos)) = stack.last_mut() {
            if let Some(&w) = g.neighbors(v).get(*pos) {
                *pos += 1;
                if w == parent {
                    continue;
                }
                if order[w] == UNSEEN {
                    order[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push((w, v, 0));
                } else {
                    low[v] = low[v].min(order[w]);
                }
            } else {
                stack.pop();
                if parent != UNSEEN {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > order[parent] {
                        found.push((parent.min(v), parent.max(v)));
                    }
                }
            }
        }
    }
    found.sort_unstable();
    found
}

/// Lexicographically smallest edge lying on a cycle, or `None` for a tree.
pub fn find_cycle_edge(g: &Graph) -> Result<Option<(usize, usize)>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let bridges = bridges(g);
    Ok(g.edges().find(|e| bridges.binary_search(e).is_err()))
}

/// One deletion of the spanning-unicyclic reduction.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub deletion: EdgeDelta,
    pub graph: Graph,
    pub harmonic: Rational,
    pub radius: usize,
    pub cyclomatic: usize,
}

/// Deletes cycle edges one at a time (smallest non-bridge first) until a
/// spanning unicyclic subgraph remains, recording each intermediate graph.
pub fn reduction_steps(g: &Graph) -> Result<Vec<ReductionStep>> {
    let k = g.cyclomatic_number()?;
    if k <= 1 {
        return Err(Error::domain(format!("reduction needs cyclomatic number >= 2, got {k}")));
    }
    let mut steps = Vec::with_capacity(k - 1);
    let mut current = g.clone();
    for _ in 1..k {
        let edge = find_cycle_edge(&current)?.expect("cyclomatic number >= 1 implies a cycle edge");
        let deletion = edge_delta(&current, edge)?;
        current = current.without_edge(edge.0, edge.1)?;
        steps.push(ReductionStep {
            deletion,
            harmonic: harmonic_index(&current),
            radius: current.radius()?,
            cyclomatic: current.cyclomatic_number()?,
            graph: current.clone(),
        });
    }
    Ok(steps)
}

/// `G_1, ..., G_{k-1}`: successive cycle-edge deletions ending at a spanning
/// unicyclic subgraph.
pub fn unicyclic_reduction(g: &Graph) -> Result<Vec<Graph>> {
    Ok(reduction_steps(g)?.into_iter().map(|s| s.graph).collect())
}
