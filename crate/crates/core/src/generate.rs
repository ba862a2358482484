//! Seeded random instance generators. Vertices are labelled `1..=n`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex, VertexSet};

fn shuffled_pairs(n: u32, rng: &mut ChaCha8Rng) -> Vec<(Vertex, Vertex)> {
    let mut pairs: Vec<(Vertex, Vertex)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    pairs
}

/// Pairs are proposed in random order, each with probability `edge_prob`,
/// and accepted while both endpoints are below degree `delta`.
pub fn gen_bounded_degree(n: u32, delta: usize, edge_prob: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::with_vertices(1..=n);
    for (u, v) in shuffled_pairs(n, &mut rng) {
        if rng.gen_bool(edge_prob) && g.degree(u) < delta && g.degree(v) < delta {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Pairs are proposed in random order, each with probability `edge_prob`,
/// and rejected when they would complete a `K_t`.
pub fn gen_clique_free(n: u32, t: usize, edge_prob: f64, seed: u64) -> Graph {
    assert!(t >= 3, "clique order must be at least 3");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::with_vertices(1..=n);
    for (u, v) in shuffled_pairs(n, &mut rng) {
        if !rng.gen_bool(edge_prob) {
            continue;
        }
        // uv completes a K_t iff the common neighbourhood holds a K_{t-2}
        let common: VertexSet = g.neighbors(u).unwrap().intersection(g.neighbors(v).unwrap()).copied().collect();
        let completes = match t {
            3 => !common.is_empty(),
            _ => !g.induced_subgraph(&common).is_clique_free(t - 2).unwrap(),
        };
        if completes {
            continue;
        }
        g.add_edge(u, v).unwrap();
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounded_degree_generator() {
        assert_eq!(gen_bounded_degree(1, 3, 0.5, 7).vertex_count(), 1);
        assert_eq!(gen_bounded_degree(12, 3, 0.6, 42), gen_bounded_degree(12, 3, 0.6, 42));
        for seed in 0..50 {
            let g = gen_bounded_degree(10, 3, 0.7, seed);
            assert!(g.max_degree() <= 3);
        }
    }

    #[test]
    fn degree_two_gives_paths_and_cycles() {
        let g = gen_bounded_degree(60, 2, 0.3, 3);
        assert!(g.max_degree() <= 2);
        // every component has at most as many edges as vertices, with
        // equality exactly for cycles where all degrees are 2
        let mut seen = std::collections::BTreeSet::new();
        for v in g.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let dist = g.bfs_distances(&[v].into_iter().collect()).unwrap();
            let comp: crate::graph::VertexSet = dist.iter().filter(|(_, d)| d.is_some()).map(|(&u, _)| u).collect();
            let sub = g.induced_subgraph(&comp);
            let n = sub.vertex_count();
            let m = sub.edge_count();
            if m == n {
                assert!(sub.vertices().all(|u| sub.degree(u) == 2));
            } else {
                assert_eq!(m + 1, n, "path component");
            }
            seen.extend(comp);
        }
    }

    #[test]
    fn clique_free_generator() {
        for seed in 0..50 {
            let g = gen_clique_free(10, 3, 0.8, seed);
            assert!(g.is_clique_free(3).unwrap());
            let g = gen_clique_free(10, 4, 0.8, seed);
            assert!(g.is_clique_free(4).unwrap());
        }
        assert!(gen_clique_free(2, 3, 1.0, 0).edge_count() <= 1);
        assert_eq!(gen_clique_free(9, 4, 0.5, 11), gen_clique_free(9, 4, 0.5, 11));
    }
}
