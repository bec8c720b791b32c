//! Fixed-seed inputs shared by the benchmarks in `benches/`.

use blockerlab::cotree::{build_cotree, Cotree};
use blockerlab::generate::{random_cograph, random_connected_bipartite, random_graph, rng};
use blockerlab::Graph;

pub fn bipartite(n: usize, seed: u64) -> Graph {
    random_connected_bipartite(n, 0.3, &mut rng(seed))
}

pub fn dense(n: usize, seed: u64) -> Graph {
    random_graph(n, 0.5, &mut rng(seed))
}

pub fn cograph(n: usize, seed: u64) -> (Graph, Cotree) {
    let g = random_cograph(n, true, &mut rng(seed));
    let t = build_cotree(&g).expect("generated cographs have cotrees");
    (g, t)
}
