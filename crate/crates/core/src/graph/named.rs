//! Small named graphs used throughout tests, examples and gadgets.

use super::Graph;

pub fn empty(n: usize) -> Graph {
    Graph::new(n)
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        .expect("valid clique")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).expect("valid")
}

/// K_{1,k} with centre 0.
pub fn star(k: usize) -> Graph {
    complete_bipartite(1, k)
}

/// Triangle 0-1-2 with pendant vertex 3 attached to 2.
pub fn paw() -> Graph {
    Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).expect("valid paw")
}

/// K4 minus the edge 0-3.
pub fn diamond() -> Graph {
    Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).expect("valid diamond")
}

/// Complete multipartite graph with the given part sizes.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    parts
        .iter()
        .fold(Graph::new(0), |acc, &p| acc.join(&empty(p)))
}
