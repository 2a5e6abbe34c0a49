//! Seeded random graphs for relation tests.
//!
//! The generator is ChaCha8 seeded from a `u64`, so a graph is reproducible
//! from `(seed, n, density)` alone on every platform.

use ksrd_core::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A connected graph on `n` vertices: a uniformly random recursive tree over
/// a shuffled vertex order, plus every other pair independently with
/// probability `density`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.random_range(0..i)];
        let v = order[i];
        edges.push((parent.min(v), parent.max(v)));
    }
    let tree = Graph::from_edges(n, edges.iter().copied()).expect("tree edges are distinct");
    for (u, v) in tree.non_edges() {
        if rng.random_bool(density) {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).expect("non-edges are distinct")
}

/// A connected graph from a single seed, with `n` and the density also drawn
/// from the seeded stream.
pub fn seeded_graph(seed: u64, min_n: usize, max_n: usize) -> Graph {
    let mut r = rng(seed);
    let n = r.random_range(min_n..=max_n);
    let density = r.random_range(0.0..0.6);
    random_connected_graph(&mut r, n, density)
}
