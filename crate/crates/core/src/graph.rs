//! Simple undirected graphs with stable vertex labels.
//!
//! Every deletion returns a fresh [`Graph`] and keeps the labels of the
//! surviving vertices, so a reduced instance can always be traced back to the
//! vertices of the graph it came from.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

pub type Vertex = u32;
pub type VertexSet = BTreeSet<Vertex>;
pub type EdgeSet = BTreeSet<Edge>;

/// An undirected edge, stored with the smaller label first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    /// Returns `None` for a self-loop.
    pub fn new(u: Vertex, v: Vertex) -> Option<Self> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Some(Edge(u, v)),
            std::cmp::Ordering::Greater => Some(Edge(v, u)),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn u(self) -> Vertex {
        self.0
    }

    pub fn v(self) -> Vertex {
        self.1
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.0, self.1)
    }

    pub fn touches(self, x: Vertex) -> bool {
        self.0 == x || self.1 == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Union of the endpoints of `es`.
pub fn endpoints_of(es: &EdgeSet) -> VertexSet {
    es.iter().flat_map(|e| [e.0, e.1]).collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
    edge_count: usize,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on the given vertices with no edges.
    pub fn with_vertices(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        Graph { adj: vertices.into_iter().map(|v| (v, BTreeSet::new())).collect(), edge_count: 0 }
    }

    /// Builds a graph on `vertices` plus every endpoint in `edges`.
    pub fn from_edges(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self> {
        let mut g = Graph::with_vertices(vertices);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: Vertex) -> bool {
        if self.adj.contains_key(&v) {
            return false;
        }
        self.adj.insert(v, BTreeSet::new());
        true
    }

    /// Inserts `{u, v}`, adding missing endpoints. Returns `false` if the edge
    /// was already present.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        if u == v {
            return invalid(format!("self-loop on vertex {u}"));
        }
        self.add_vertex(u);
        self.add_vertex(v);
        let fresh = self.adj.get_mut(&u).unwrap().insert(v);
        if fresh {
            self.adj.get_mut(&v).unwrap().insert(u);
            self.edge_count += 1;
        }
        Ok(fresh)
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

    /// Vertices in ascending label order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().copied().collect()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn neighbors(&self, v: Vertex) -> Option<&BTreeSet<Vertex>> {
        self.adj.get(&v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|n| n.contains(&v))
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.0, e.1)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().flat_map(|(&u, ns)| ns.range(u + 1..).map(move |&v| Edge(u, v)))
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges().collect()
    }

    /// Largest degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).max().unwrap_or(0)
    }

    fn check_vertices<'a>(&self, vs: impl IntoIterator<Item = &'a Vertex>) -> Result<()> {
        for v in vs {
            if !self.contains_vertex(*v) {
                return invalid(format!("vertex {v} is not in the graph"));
            }
        }
        Ok(())
    }

    /// Multi-source BFS. Unreachable vertices map to `None`.
    pub fn bfs_distances(&self, sources: &VertexSet) -> Result<BTreeMap<Vertex, Option<usize>>> {
        self.check_vertices(sources)?;
        let mut dist: BTreeMap<Vertex, Option<usize>> = self.adj.keys().map(|&v| (v, None)).collect();
        let mut queue = VecDeque::new();
        for &s in sources {
            dist.insert(s, Some(0));
            queue.push_back((s, 0usize));
        }
        while let Some((u, du)) = queue.pop_front() {
            for &w in &self.adj[&u] {
                let slot = dist.get_mut(&w).unwrap();
                if slot.is_none() {
                    *slot = Some(du + 1);
                    queue.push_back((w, du + 1));
                }
            }
        }
        Ok(dist)
    }

    pub fn closed_neighborhood(&self, vs: &VertexSet) -> Result<VertexSet> {
        self.check_vertices(vs)?;
        let mut out = vs.clone();
        for v in vs {
            out.extend(self.adj[v].iter().copied());
        }
        Ok(out)
    }

    /// Subgraph induced by `keep`. Labels not in the graph are ignored.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Graph {
        let mut adj = BTreeMap::new();
        let mut twice = 0;
        for (&v, ns) in &self.adj {
            if !keep.contains(&v) {
                continue;
            }
            let kept: BTreeSet<Vertex> = ns.iter().copied().filter(|w| keep.contains(w)).collect();
            twice += kept.len();
            adj.insert(v, kept);
        }
        Graph { adj, edge_count: twice / 2 }
    }

    pub fn delete_vertices(&self, vs: &VertexSet) -> Result<Graph> {
        self.check_vertices(vs)?;
        let keep: VertexSet = self.vertices().filter(|v| !vs.contains(v)).collect();
        Ok(self.induced_subgraph(&keep))
    }

    pub fn delete_edges(&self, es: &EdgeSet) -> Result<Graph> {
        if let Some(e) = es.iter().find(|e| !self.contains_edge(**e)) {
            return invalid(format!("{e} is not an edge of the graph"));
        }
        let mut g = self.clone();
        for e in es {
            g.adj.get_mut(&e.0).unwrap().remove(&e.1);
            g.adj.get_mut(&e.1).unwrap().remove(&e.0);
        }
        g.edge_count -= es.len();
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.adj.keys().next() else {
            return true;
        };
        let dist = self.bfs_distances(&VertexSet::from([start])).unwrap();
        dist.values().all(Option::is_some)
    }

    /// `true` iff the graph has no clique on `t` vertices.
    ///
    /// Each vertex only looks for the rest of a clique among its neighbours
    /// that come later in a degeneracy ordering.
    pub fn is_clique_free(&self, t: usize) -> Result<bool> {
        if t < 2 {
            return invalid(format!("clique order must be at least 2, got {t}"));
        }
        let order = self.degeneracy_order();
        let position: BTreeMap<Vertex, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        for &v in &order {
            let later: Vec<Vertex> = self.adj[&v].iter().copied().filter(|w| position[w] > position[&v]).collect();
            if later.len() + 1 >= t && self.has_clique_within(&later, t - 1) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn has_clique_within(&self, candidates: &[Vertex], need: usize) -> bool {
        if need == 0 {
            return true;
        }
        for (i, &u) in candidates.iter().enumerate() {
            let next: Vec<Vertex> = candidates[i + 1..].iter().copied().filter(|&w| self.has_edge(u, w)).collect();
            if next.len() + 1 >= need && self.has_clique_within(&next, need - 1) {
                return true;
            }
        }
        false
    }

    /// Repeatedly removes a minimum-degree vertex (ties by label).
    pub fn degeneracy_order(&self) -> Vec<Vertex> {
        let mut degree: BTreeMap<Vertex, usize> = self.adj.iter().map(|(&v, ns)| (v, ns.len())).collect();
        let mut queue: BTreeSet<(usize, Vertex)> = degree.iter().map(|(&v, &d)| (d, v)).collect();
        let mut order = Vec::with_capacity(self.adj.len());
        while let Some((_, v)) = queue.pop_first() {
            order.push(v);
            degree.remove(&v);
            for w in &self.adj[&v] {
                if let Some(d) = degree.get_mut(w) {
                    queue.remove(&(*d, *w));
                    *d -= 1;
                    queue.insert((*d, *w));
                }
            }
        }
        order
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: u32) -> Graph {
        Graph::from_edges(1..=n, (1..n).map(|i| (i, i + 1))).unwrap()
    }

    fn complete(n: u32) -> Graph {
        let mut g = Graph::with_vertices(1..=n);
        for u in 1..=n {
            for v in u + 1..=n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    fn vs(items: &[Vertex]) -> VertexSet {
        items.iter().copied().collect()
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(Graph::new().max_degree(), 0);
        assert_eq!(complete(3).max_degree(), 2);
        let star = Graph::from_edges([0], (1..=5).map(|i| (0, i))).unwrap();
        assert_eq!(star.max_degree(), 5);
    }

    #[test]
    fn bfs_on_path_and_components() {
        let g = path(3);
        let d = g.bfs_distances(&vs(&[1])).unwrap();
        assert_eq!(d[&1], Some(0));
        assert_eq!(d[&2], Some(1));
        assert_eq!(d[&3], Some(2));

        let all = g.bfs_distances(&g.vertex_set()).unwrap();
        assert!(all.values().all(|d| *d == Some(0)));

        let two = Graph::from_edges(1..=4, [(1, 2), (3, 4)]).unwrap();
        let d = two.bfs_distances(&vs(&[1])).unwrap();
        assert_eq!(d[&3], None);
        assert_eq!(d[&4], None);

        assert!(g.bfs_distances(&vs(&[9])).is_err());
    }

    #[test]
    fn closed_neighborhood_examples() {
        let k3 = complete(3);
        assert_eq!(k3.closed_neighborhood(&vs(&[1])).unwrap(), vs(&[1, 2, 3]));
        assert!(k3.closed_neighborhood(&VertexSet::new()).unwrap().is_empty());
        assert_eq!(path(4).closed_neighborhood(&vs(&[2])).unwrap(), vs(&[1, 2, 3]));
        assert!(k3.closed_neighborhood(&vs(&[7])).is_err());
    }

    #[test]
    fn endpoints_examples() {
        let e = |u, v| Edge::new(u, v).unwrap();
        assert_eq!(endpoints_of(&EdgeSet::from([e(1, 2)])), vs(&[1, 2]));
        assert!(endpoints_of(&EdgeSet::new()).is_empty());
        assert_eq!(endpoints_of(&EdgeSet::from([e(1, 2), e(3, 2)])), vs(&[1, 2, 3]));
    }

    #[test]
    fn vertex_deletion_keeps_labels() {
        let k3 = complete(3);
        let k2 = k3.delete_vertices(&vs(&[2])).unwrap();
        assert_eq!(k2.vertex_set(), vs(&[1, 3]));
        assert_eq!(k2.edge_count(), 1);
        assert_eq!(k3.delete_vertices(&VertexSet::new()).unwrap(), k3);

        let claw = Graph::from_edges([0], [(0, 1), (0, 2), (0, 3)]).unwrap();
        let rest = claw.delete_vertices(&vs(&[0])).unwrap();
        assert_eq!(rest.vertex_count(), 3);
        assert_eq!(rest.edge_count(), 0);

        assert!(k3.delete_vertices(&vs(&[4])).is_err());
    }

    #[test]
    fn edge_deletion() {
        let k3 = complete(3);
        let e = Edge::new(1, 3).unwrap();
        let p3 = k3.delete_edges(&EdgeSet::from([e])).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(p3.max_degree(), 2);
        assert_eq!(k3.delete_edges(&EdgeSet::new()).unwrap(), k3);
        let empty = k3.delete_edges(&k3.edge_set()).unwrap();
        assert_eq!((empty.vertex_count(), empty.edge_count()), (3, 0));

        let bad = EdgeSet::from([Edge::new(1, 4).unwrap()]);
        assert!(k3.delete_edges(&bad).is_err());
    }

    #[test]
    fn clique_freeness() {
        assert!(!complete(4).is_clique_free(4).unwrap());
        let c5 = Graph::from_edges(1..=5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap();
        assert!(c5.is_clique_free(3).unwrap());
        let k4_minus = complete(4).delete_edges(&EdgeSet::from([Edge::new(1, 2).unwrap()])).unwrap();
        assert!(k4_minus.is_clique_free(4).unwrap());
        assert!(!k4_minus.is_clique_free(3).unwrap());
        assert!(complete(3).is_clique_free(1).is_err());
        assert!(Graph::with_vertices(1..=3).is_clique_free(2).unwrap());
    }

    #[test]
    fn self_loops_and_parallel_edges_rejected() {
        let mut g = Graph::new();
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(1, 2).unwrap());
        assert!(!g.add_edge(2, 1).unwrap());
        assert_eq!(g.edge_count(), 1);
    }
}
