//! Exact engines for H-free edge deletion.
//!
//! [`solve_bruteforce`] tries edge subsets in order of size and then
//! lexicographically, so its answer is the lexicographically least minimum
//! deletion set. [`solve_branching`] is the bounded search tree: pick one
//! induced copy, branch on deleting each of its edges. [`mhds_trace`] splits a
//! deletion set into the layers used by the depth arguments.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::dense::BitGraph;
use crate::error::{invalid, Result};
use crate::graph::{Edge, EdgeSet, Graph};
use crate::patterns::{enumerate_induced, find_one_induced, is_family_free, PatternFamily};

/// Recommended edge limit for [`solve_bruteforce`].
pub const BRUTE_FORCE_EDGE_LIMIT: usize = 25;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemInstance {
    pub graph: Graph,
    pub budget: usize,
}

impl ProblemInstance {
    pub fn new(graph: Graph, budget: usize) -> Self {
        ProblemInstance { graph, budget }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    pub edges: EdgeSet,
    pub optimal: bool,
}

/// Layered decomposition of a deletion set `M`.
///
/// `layers[j-1]` holds the edges of `M` not in earlier layers that lie on an
/// induced member after the earlier layers are deleted. `prefixes[j]` is the
/// union of the first `j` layers and `suffixes[j-1]` the union of layers
/// `j..=depth`. For a minimum deletion set the layers cover `M` and
/// `residual` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeletionTrace {
    pub layers: Vec<EdgeSet>,
    pub depth: usize,
    pub suffixes: Vec<EdgeSet>,
    pub prefixes: Vec<EdgeSet>,
    pub residual: EdgeSet,
}

fn check_edges(g: &Graph, es: &EdgeSet) -> Result<()> {
    match es.iter().find(|e| !g.contains_edge(**e)) {
        Some(e) => invalid(format!("{e} is not an edge of the graph")),
        None => Ok(()),
    }
}

/// `true` iff deleting `es` leaves a family-free graph.
pub fn verify_hds(g: &Graph, es: &EdgeSet, fam: &PatternFamily) -> Result<bool> {
    let rest = g.delete_edges(es)?;
    Ok(is_family_free(&rest, fam))
}

/// Advances `idx` to the next `idx.len()`-combination of `0..n` in
/// lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let r = idx.len();
    let Some(i) = (0..r).rev().find(|&i| idx[i] < n - r + i) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..r {
        idx[j] = idx[j - 1] + 1;
    }
    true
}

/// Exhaustive search for a minimum deletion set of size at most the budget.
///
/// Subsets are tried by size, then lexicographically over the sorted edge
/// list, so the result is deterministic. Intended for instances with at most
/// [`BRUTE_FORCE_EDGE_LIMIT`] edges; larger inputs are not refused.
pub fn solve_bruteforce(inst: &ProblemInstance, fam: &PatternFamily) -> Option<Solution> {
    let g = &inst.graph;
    let edges: Vec<Edge> = g.edges().collect();
    let dense = BitGraph::from_graph_without_isolated(g);
    let is_hds = |chosen: &[usize]| -> bool {
        match &dense {
            Some(base) => {
                let mut h = base.clone();
                for &i in chosen {
                    h.remove_edge(edges[i]);
                }
                fam.is_free_in(&h)
            }
            None => {
                let es: EdgeSet = chosen.iter().map(|&i| edges[i]).collect();
                verify_hds(g, &es, fam).unwrap()
            }
        }
    };
    for size in 0..=inst.budget.min(edges.len()) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            if is_hds(&idx) {
                return Some(Solution { edges: idx.iter().map(|&i| edges[i]).collect(), optimal: true });
            }
            if !next_combination(&mut idx, edges.len()) {
                break;
            }
        }
    }
    None
}

/// Size of a minimum deletion set, via [`solve_bruteforce`] with an unlimited
/// budget.
pub fn minimum_deletion_size(g: &Graph, fam: &PatternFamily) -> usize {
    let inst = ProblemInstance::new(g.clone(), g.edge_count());
    solve_bruteforce(&inst, fam).expect("deleting every edge always works").edges.len()
}

struct Branching<'a> {
    fam: &'a PatternFamily,
    failed: HashSet<Vec<Edge>>,
}

impl Branching<'_> {
    fn search(&mut self, g: &Graph, deleted: &mut Vec<Edge>, budget: usize) -> bool {
        let Some(hit) = find_one_induced(g, self.fam) else {
            return true;
        };
        if budget == 0 {
            return false;
        }
        let mut key = deleted.clone();
        key.sort_unstable();
        if self.failed.contains(&key) {
            return false;
        }
        for e in hit.edges_in(g) {
            let next = g.delete_edges(&EdgeSet::from([e])).unwrap();
            deleted.push(e);
            if self.search(&next, deleted, budget - 1) {
                return true;
            }
            deleted.pop();
        }
        self.failed.insert(key);
        false
    }
}

/// Bounded search tree with iterative deepening on the budget.
///
/// Each round branches on the edges of the first induced copy found. Since
/// rounds run with budgets `0, 1, ..`, the first solution found is minimum
/// and is reported with `optimal = true`.
pub fn solve_branching(inst: &ProblemInstance, fam: &PatternFamily) -> Option<Solution> {
    for budget in 0..=inst.budget {
        // failed states of one round are keyed by deleted set; the remaining
        // budget is implied by the set size within a round
        let mut engine = Branching { fam, failed: HashSet::new() };
        let mut deleted = Vec::new();
        if engine.search(&inst.graph, &mut deleted, budget) {
            return Some(Solution { edges: deleted.into_iter().collect(), optimal: true });
        }
        if budget >= inst.graph.edge_count() {
            break;
        }
    }
    None
}

/// Layers `M_1, M_2, ..` of the deletion set `m`.
pub fn mhds_trace(g: &Graph, m: &EdgeSet, fam: &PatternFamily) -> Result<DeletionTrace> {
    check_edges(g, m)?;
    if !verify_hds(g, m, fam)? {
        return invalid("edge set does not destroy every induced member");
    }
    let mut layers: Vec<EdgeSet> = Vec::new();
    let mut prefix = EdgeSet::new();
    let mut prefixes = vec![EdgeSet::new()];
    loop {
        let current = g.delete_edges(&prefix)?;
        let copies = enumerate_induced(&current, fam);
        let layer: EdgeSet = m
            .difference(&prefix)
            .copied()
            .filter(|e| copies.iter().any(|c| c.vertices.contains(&e.u()) && c.vertices.contains(&e.v())))
            .collect();
        if layer.is_empty() {
            break;
        }
        prefix.extend(layer.iter().copied());
        prefixes.push(prefix.clone());
        layers.push(layer);
    }
    let depth = layers.len();
    let mut suffixes = vec![EdgeSet::new(); depth + 1];
    for j in (0..depth).rev() {
        suffixes[j] = suffixes[j + 1].union(&layers[j]).copied().collect();
    }
    let residual = m.difference(&prefix).copied().collect();
    Ok(DeletionTrace { layers, depth, suffixes, prefixes, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::builtin_pattern;

    fn fam(spec: &str) -> PatternFamily {
        PatternFamily::from_builtin_names(spec).unwrap()
    }

    fn e(u: u32, v: u32) -> Edge {
        Edge::new(u, v).unwrap()
    }

    fn bowtie() -> Graph {
        Graph::from_edges(1..=5, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)]).unwrap()
    }

    #[test]
    fn combinations_in_lex_order() {
        let mut idx = vec![0, 1];
        let mut all = vec![idx.clone()];
        while next_combination(&mut idx, 4) {
            all.push(idx.clone());
        }
        assert_eq!(all, [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]);
        let mut empty: Vec<usize> = vec![];
        assert!(!next_combination(&mut empty, 3));
    }

    #[test]
    fn verify_examples() {
        let k3 = builtin_pattern("K3").unwrap();
        assert!(verify_hds(&k3, &EdgeSet::from([e(1, 2)]), &fam("K3")).unwrap());
        assert!(!verify_hds(&k3, &EdgeSet::new(), &fam("K3")).unwrap());
        let p4 = builtin_pattern("P4").unwrap();
        assert!(verify_hds(&p4, &EdgeSet::from([e(2, 3)]), &fam("P3")).unwrap());
        assert!(verify_hds(&p4, &EdgeSet::from([e(1, 3)]), &fam("P3")).is_err());
    }

    #[test]
    fn bruteforce_examples() {
        let k3 = builtin_pattern("K3").unwrap();
        let sol = solve_bruteforce(&ProblemInstance::new(k3.clone(), 1), &fam("K3")).unwrap();
        assert_eq!(sol.edges, EdgeSet::from([e(1, 2)]));
        assert!(sol.optimal);
        assert!(solve_bruteforce(&ProblemInstance::new(k3, 0), &fam("K3")).is_none());

        let sol = solve_bruteforce(&ProblemInstance::new(bowtie(), 2), &fam("K3")).unwrap();
        // lexicographically least: first edge of each triangle
        assert_eq!(sol.edges, EdgeSet::from([e(1, 2), e(3, 4)]));
    }

    #[test]
    fn branching_examples() {
        let c5 = builtin_pattern("C5").unwrap();
        let sol = solve_branching(&ProblemInstance::new(c5, 3), &fam("K3")).unwrap();
        assert!(sol.edges.is_empty());

        let k3 = builtin_pattern("K3").unwrap();
        let sol = solve_branching(&ProblemInstance::new(k3.clone(), 1), &fam("K3")).unwrap();
        assert_eq!(sol.edges.len(), 1);
        assert!(verify_hds(&k3, &sol.edges, &fam("K3")).unwrap());

        let c4 = builtin_pattern("C4").unwrap();
        assert!(solve_branching(&ProblemInstance::new(c4.clone(), 1), &fam("P3")).is_none());
        let sol = solve_branching(&ProblemInstance::new(c4.clone(), 2), &fam("P3")).unwrap();
        assert_eq!(sol.edges.len(), 2);
        let (a, b): (Vec<_>, Vec<_>) = sol.edges.iter().map(|e| e.endpoints()).unzip();
        let touched: std::collections::BTreeSet<u32> = a.into_iter().chain(b).collect();
        assert_eq!(touched.len(), 4, "opposite edges share no vertex");
    }

    #[test]
    fn trace_examples() {
        let c5 = builtin_pattern("C5").unwrap();
        let t = mhds_trace(&c5, &EdgeSet::new(), &fam("K3")).unwrap();
        assert_eq!(t.depth, 0);
        assert!(t.layers.is_empty());
        assert_eq!(t.suffixes, vec![EdgeSet::new()]);
        assert_eq!(t.prefixes, vec![EdgeSet::new()]);

        let p4 = builtin_pattern("P4").unwrap();
        let m = EdgeSet::from([e(2, 3)]);
        let t = mhds_trace(&p4, &m, &fam("P3")).unwrap();
        assert_eq!(t.depth, 1);
        assert_eq!(t.layers, vec![m.clone()]);
        assert_eq!(t.suffixes, vec![m.clone(), EdgeSet::new()]);
        assert_eq!(t.prefixes, vec![EdgeSet::new(), m]);
        assert!(t.residual.is_empty());

        assert!(mhds_trace(&p4, &EdgeSet::new(), &fam("P3")).is_err());
        assert!(mhds_trace(&p4, &EdgeSet::from([e(1, 4)]), &fam("P3")).is_err());
    }

    #[test]
    fn non_minimum_sets_leave_a_residual() {
        // the pendant edge 3-4 lies on no triangle
        let g = Graph::from_edges(1..=4, [(1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
        let m = EdgeSet::from([e(1, 2), e(3, 4)]);
        let t = mhds_trace(&g, &m, &fam("K3")).unwrap();
        assert_eq!(t.depth, 1);
        assert_eq!(t.residual, EdgeSet::from([e(3, 4)]));
    }
}
