//! Forbidden families and induced-subgraph search.
//!
//! Members are compiled once into bitset adjacency plus one BFS plan per
//! root vertex. A search anchored at host vertex `v` maps some pattern root to
//! `v` and extends along the plan, only using host vertices with larger
//! labels, so every embedding is found exactly from its smallest vertex. That
//! gives a natural deterministic order: embeddings grouped by smallest vertex,
//! then by sorted vertex list, then by pattern index.

use std::collections::{BTreeSet, VecDeque};
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::dense::Host;
use crate::error::{invalid, Result};
use crate::graph::{Edge, EdgeSet, Graph, Vertex, VertexSet};

/// An induced copy of `members[pattern_index]` on `vertices`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Embedding {
    pub pattern_index: usize,
    pub vertices: VertexSet,
}

impl Embedding {
    /// Edges of `g` inside the embedding.
    pub fn edges_in(&self, g: &Graph) -> EdgeSet {
        let vs: Vec<Vertex> = self.vertices.iter().copied().collect();
        let mut out = EdgeSet::new();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if g.has_edge(u, v) {
                    out.insert(Edge::new(u, v).unwrap());
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
struct Compiled {
    size: usize,
    adj: Vec<u64>,
    degree: Vec<usize>,
    /// `plans[r]` lists `(vertex, parent)` in BFS order from root `r`.
    plans: Vec<Vec<(usize, usize)>>,
}

impl Compiled {
    fn new(h: &Graph) -> Self {
        let labels: Vec<Vertex> = h.vertices().collect();
        let size = labels.len();
        assert!(size <= 64, "patterns are limited to 64 vertices");
        let idx = |v: Vertex| labels.binary_search(&v).unwrap();
        let mut adj = vec![0u64; size];
        for e in h.edges() {
            let (i, j) = (idx(e.u()), idx(e.v()));
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        let degree = adj.iter().map(|r| r.count_ones() as usize).collect();
        let plans = (0..size)
            .map(|root| {
                let mut seen = 1u64 << root;
                let mut queue = VecDeque::from([root]);
                let mut plan = Vec::with_capacity(size - 1);
                while let Some(x) = queue.pop_front() {
                    for y in 0..size {
                        if adj[x] >> y & 1 == 1 && seen >> y & 1 == 0 {
                            seen |= 1 << y;
                            plan.push((y, x));
                            queue.push_back(y);
                        }
                    }
                }
                plan
            })
            .collect();
        Compiled { size, adj, degree, plans }
    }

    fn edge(&self, x: usize, y: usize) -> bool {
        self.adj[x] >> y & 1 == 1
    }

    /// Visits every injective induced map whose smallest image is `anchor`.
    fn search_anchored<H: Host, F>(&self, host: &H, anchor: Vertex, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[Vertex]) -> ControlFlow<()>,
    {
        let mut images = vec![0; self.size];
        let anchor_degree = host.degree_of(anchor);
        for root in 0..self.size {
            if anchor_degree < self.degree[root] {
                continue;
            }
            images[root] = anchor;
            self.extend(host, root, 0, anchor, &mut images, visit)?;
        }
        ControlFlow::Continue(())
    }

    fn extend<H: Host, F>(
        &self,
        host: &H,
        root: usize,
        step: usize,
        anchor: Vertex,
        images: &mut Vec<Vertex>,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[Vertex]) -> ControlFlow<()>,
    {
        let plan = &self.plans[root];
        if step == plan.len() {
            return visit(images);
        }
        let (x, parent) = plan[step];
        let mapped = || std::iter::once(root).chain(plan[..step].iter().map(|&(y, _)| y));
        for w in host.neighbors_of(images[parent]) {
            if w <= anchor || host.degree_of(w) < self.degree[x] {
                continue;
            }
            if mapped().any(|y| images[y] == w) {
                continue;
            }
            if mapped().all(|y| host.adjacent(w, images[y]) == self.edge(x, y)) {
                images[x] = w;
                self.extend(host, root, step + 1, anchor, images, visit)?;
            }
        }
        ControlFlow::Continue(())
    }
}

/// A finite family of connected forbidden graphs.
#[derive(Clone, Debug)]
pub struct PatternFamily {
    members: Vec<Graph>,
    names: Vec<String>,
    compiled: Vec<Compiled>,
    diameters: Vec<usize>,
    star_arity: Option<usize>,
    clique_order: Option<usize>,
}

impl PatternFamily {
    pub fn new(members: Vec<Graph>) -> Result<Self> {
        let named = members.into_iter().enumerate().map(|(i, g)| (format!("H{}", i + 1), g)).collect();
        Self::named(named)
    }

    /// Builds a family, rejecting disconnected or single-vertex members.
    /// Members isomorphic to an earlier one are dropped with a warning.
    pub fn named(members: Vec<(String, Graph)>) -> Result<Self> {
        if members.is_empty() {
            return invalid("pattern family is empty");
        }
        let mut fam = PatternFamily {
            members: Vec::new(),
            names: Vec::new(),
            compiled: Vec::new(),
            diameters: Vec::new(),
            star_arity: None,
            clique_order: None,
        };
        for (name, h) in members {
            if h.vertex_count() < 2 {
                return invalid(format!("pattern {name} needs at least 2 vertices"));
            }
            if h.vertex_count() > 64 {
                return invalid(format!("pattern {name} has more than 64 vertices"));
            }
            let diameter =
                diameter(&h).map_err(|_| crate::Error::InvalidArgument(format!("pattern {name} is not connected")))?;
            let compiled = Compiled::new(&h);
            if let Some(j) = (0..fam.members.len()).find(|&j| isomorphic(&fam.members[j], &compiled, &h)) {
                log::warn!("pattern {name} is isomorphic to {}; keeping the first", fam.names[j]);
                continue;
            }
            if let Some(s) = star_arity_of(&h) {
                fam.star_arity = Some(fam.star_arity.map_or(s, |cur| cur.min(s)));
            }
            if let Some(t) = clique_order_of(&h) {
                fam.clique_order = Some(fam.clique_order.map_or(t, |cur| cur.min(t)));
            }
            fam.members.push(h);
            fam.names.push(name);
            fam.compiled.push(compiled);
            fam.diameters.push(diameter);
        }
        Ok(fam)
    }

    /// Parses a comma-separated list of builtin names, e.g. `K3,K1,3,P4`.
    pub fn from_builtin_names(spec: &str) -> Result<Self> {
        let members = split_family_spec(spec)
            .into_iter()
            .map(|name| builtin_pattern(&name).map(|g| (name, g)))
            .collect::<Result<Vec<_>>>()?;
        Self::named(members)
    }

    pub fn members(&self) -> &[Graph] {
        &self.members
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn diameters(&self) -> &[usize] {
        &self.diameters
    }

    /// Largest member diameter.
    pub fn max_diameter(&self) -> usize {
        self.diameters.iter().copied().max().unwrap_or(0)
    }

    /// Least `s >= 2` with `K_{1,s}` in the family.
    pub fn star_arity(&self) -> Option<usize> {
        self.star_arity
    }

    /// Least `t >= 3` with `K_t` in the family.
    pub fn clique_order(&self) -> Option<usize> {
        self.clique_order
    }

    /// Index of the member with fewest vertices, ties by fewer edges, then
    /// by position.
    pub fn smallest_member(&self) -> usize {
        (0..self.members.len())
            .min_by_key(|&i| (self.members[i].vertex_count(), self.members[i].edge_count(), i))
            .unwrap()
    }

    pub fn star_member(&self, s: usize) -> Option<usize> {
        self.members.iter().position(|h| star_arity_of(h) == Some(s))
    }

    pub fn clique_member(&self, t: usize) -> Option<usize> {
        self.members.iter().position(|h| clique_order_of(h) == Some(t))
    }

    fn anchored<H: Host>(&self, host: &H, anchor: Vertex) -> BTreeSet<(Vec<Vertex>, usize)> {
        let mut found = BTreeSet::new();
        for (pi, pat) in self.compiled.iter().enumerate() {
            let _ = pat.search_anchored(host, anchor, &mut |images: &[Vertex]| {
                let mut vs = images.to_vec();
                vs.sort_unstable();
                found.insert((vs, pi));
                ControlFlow::Continue(())
            });
        }
        found
    }

    pub(crate) fn enumerate_in<H: Host>(&self, host: &H) -> Vec<(Vec<Vertex>, usize)> {
        host.host_vertices().into_iter().flat_map(|v| self.anchored(host, v)).collect()
    }

    pub(crate) fn find_one_in<H: Host>(&self, host: &H) -> Option<(Vec<Vertex>, usize)> {
        host.host_vertices().into_iter().find_map(|v| self.anchored(host, v).pop_first())
    }

    pub(crate) fn is_free_in<H: Host>(&self, host: &H) -> bool {
        let mut stop = |_: &[Vertex]| ControlFlow::Break(());
        for v in host.host_vertices() {
            for pat in &self.compiled {
                if pat.search_anchored(host, v, &mut stop).is_break() {
                    return false;
                }
            }
        }
        true
    }
}

fn isomorphic(a: &Graph, b: &Compiled, b_graph: &Graph) -> bool {
    if a.vertex_count() != b_graph.vertex_count() || a.edge_count() != b_graph.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = a.vertices().map(|v| a.degree(v)).collect();
    let mut db = b.degree.clone();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut stop = |_: &[Vertex]| ControlFlow::Break(());
    let first = a.vertices().next().unwrap();
    b.search_anchored(a, first, &mut stop).is_break()
}

fn star_arity_of(h: &Graph) -> Option<usize> {
    let n = h.vertex_count();
    (n >= 3 && h.edge_count() == n - 1 && h.max_degree() == n - 1).then_some(n - 1)
}

fn clique_order_of(h: &Graph) -> Option<usize> {
    let n = h.vertex_count();
    (n >= 3 && h.edge_count() == n * (n - 1) / 2).then_some(n)
}

/// Splits a family flag on commas, re-joining star names such as `K1,3`.
pub fn split_family_spec(spec: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for tok in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let digits = tok.chars().all(|c| c.is_ascii_digit());
        match out.last_mut() {
            Some(prev) if digits && prev == "K1" => {
                prev.push(',');
                prev.push_str(tok);
            }
            _ => out.push(tok.to_string()),
        }
    }
    out
}

/// Longest shortest-path distance in a connected, nonempty graph.
pub fn diameter(h: &Graph) -> Result<usize> {
    if h.is_empty() {
        return invalid("diameter of the empty graph");
    }
    let mut best = 0;
    for v in h.vertices() {
        let dist = h.bfs_distances(&VertexSet::from([v]))?;
        for d in dist.values() {
            match d {
                Some(d) => best = best.max(*d),
                None => return invalid("diameter of a disconnected graph"),
            }
        }
    }
    Ok(best)
}

/// All induced copies of family members in `g`, ordered by smallest vertex,
/// then sorted vertex list, then pattern index.
pub fn enumerate_induced(g: &Graph, fam: &PatternFamily) -> Vec<Embedding> {
    fam.enumerate_in(g)
        .into_iter()
        .map(|(vs, pattern_index)| Embedding { pattern_index, vertices: vs.into_iter().collect() })
        .collect()
}

/// First embedding in [`enumerate_induced`] order.
pub fn find_one_induced(g: &Graph, fam: &PatternFamily) -> Option<Embedding> {
    fam.find_one_in(g).map(|(vs, pattern_index)| Embedding { pattern_index, vertices: vs.into_iter().collect() })
}

pub fn is_family_free(g: &Graph, fam: &PatternFamily) -> bool {
    fam.is_free_in(g)
}

/// Vertices lying on at least one induced copy of a member.
pub fn occupied_vertices(g: &Graph, fam: &PatternFamily) -> VertexSet {
    fam.enumerate_in(g).into_iter().flat_map(|(vs, _)| vs).collect()
}

/// Builds a named graph: `K<t>`, `K1,<s>`, `P<l>` (l vertices) or `C<l>`.
/// Vertices are labelled from 1.
pub fn builtin_pattern(name: &str) -> Result<Graph> {
    let bad = || invalid(format!("unknown pattern name {name:?}"));
    let number = |s: &str| -> Option<u32> {
        (!s.is_empty() && s.chars().all(|c| c.is_ascii_digit())).then(|| s.parse().ok()).flatten()
    };
    let (kind, rest) = name.split_at(name.chars().next().map_or(0, char::len_utf8));
    match kind {
        "K" => {
            if let Some((one, s)) = rest.split_once(',') {
                let (Some(1), Some(s)) = (number(one), number(s)) else {
                    return bad();
                };
                if s < 1 {
                    return bad();
                }
                return Graph::from_edges(1..=s + 1, (2..=s + 1).map(|v| (1, v)));
            }
            let Some(t) = number(rest).filter(|&t| t >= 1) else {
                return bad();
            };
            let mut g = Graph::with_vertices(1..=t);
            for u in 1..=t {
                for v in u + 1..=t {
                    g.add_edge(u, v)?;
                }
            }
            Ok(g)
        }
        "P" => {
            let Some(l) = number(rest).filter(|&l| l >= 1) else {
                return bad();
            };
            Graph::from_edges(1..=l, (1..l).map(|i| (i, i + 1)))
        }
        "C" => {
            let Some(l) = number(rest).filter(|&l| l >= 3) else {
                return bad();
            };
            Graph::from_edges(1..=l, (1..=l).map(|i| (i, i % l + 1)))
        }
        _ => bad(),
    }
}
