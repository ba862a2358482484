//! Bitset adjacency for graphs with at most 64 vertices.
//!
//! The brute-force solver tests thousands of edge subsets of the same small
//! graph; deleting an edge here is two bit flips instead of a tree update.

use crate::graph::{Edge, Graph, Vertex};

/// Read-only adjacency queries used by the induced-subgraph matcher.
pub(crate) trait Host {
    type Neighbors<'a>: Iterator<Item = Vertex>
    where
        Self: 'a;

    /// Vertices in ascending order.
    fn host_vertices(&self) -> Vec<Vertex>;
    fn neighbors_of(&self, v: Vertex) -> Self::Neighbors<'_>;
    fn degree_of(&self, v: Vertex) -> usize;
    fn adjacent(&self, u: Vertex, v: Vertex) -> bool;
}

impl Host for Graph {
    type Neighbors<'a> = std::iter::Copied<std::collections::btree_set::Iter<'a, Vertex>>;

    fn host_vertices(&self) -> Vec<Vertex> {
        self.vertices().collect()
    }

    fn neighbors_of(&self, v: Vertex) -> Self::Neighbors<'_> {
        self.neighbors(v).expect("vertex in host").iter().copied()
    }

    fn degree_of(&self, v: Vertex) -> usize {
        self.degree(v)
    }

    fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.has_edge(u, v)
    }
}

pub(crate) struct Bits(u64);

impl Iterator for Bits {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// Vertices are the indices `0..n`; `labels[i]` is the original label of `i`.
#[derive(Clone, Debug)]
pub(crate) struct BitGraph {
    rows: Vec<u64>,
    labels: Vec<Vertex>,
}

impl BitGraph {
    /// Compacts the non-isolated vertices of `g`. Returns `None` if there are
    /// more than 64 of them.
    pub(crate) fn from_graph_without_isolated(g: &Graph) -> Option<Self> {
        let labels: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
        if labels.len() > 64 {
            return None;
        }
        let mut rows = vec![0u64; labels.len()];
        for e in g.edges() {
            let i = labels.binary_search(&e.u()).unwrap();
            let j = labels.binary_search(&e.v()).unwrap();
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
        }
        Some(BitGraph { rows, labels })
    }

    pub(crate) fn index_of(&self, v: Vertex) -> usize {
        self.labels.binary_search(&v).expect("label in compacted graph")
    }

    pub(crate) fn remove_edge(&mut self, e: Edge) {
        let i = self.index_of(e.u());
        let j = self.index_of(e.v());
        self.rows[i] &= !(1 << j);
        self.rows[j] &= !(1 << i);
    }
}

impl Host for BitGraph {
    type Neighbors<'a> = Bits;

    fn host_vertices(&self) -> Vec<Vertex> {
        (0..self.rows.len() as Vertex).collect()
    }

    fn neighbors_of(&self, v: Vertex) -> Bits {
        Bits(self.rows[v as usize])
    }

    fn degree_of(&self, v: Vertex) -> usize {
        self.rows[v as usize].count_ones() as usize
    }

    fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.rows[u as usize] >> v & 1 == 1
    }
}
