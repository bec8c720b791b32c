//! Seeded random graphs from the classes the solvers care about.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cotree::{Cotree, Op};
use crate::graph::Graph;
use crate::oracle::GraphClass;

pub type GraphRng = ChaCha8Rng;

pub fn rng(seed: u64) -> GraphRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p).
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

/// Connected bipartite: a random spanning tree across two random sides,
/// plus each remaining cross pair with probability `p`.
pub fn random_connected_bipartite(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::new(n);
    if n < 2 {
        return g;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut side = vec![false; n];
    side[order[1]] = true;
    for &v in &order[2..] {
        side[v] = rng.gen_bool(0.5);
    }
    g.add_edge(order[0], order[1]).expect("in range");
    for i in 2..n {
        let v = order[i];
        let others: Vec<usize> = order[..i]
            .iter()
            .copied()
            .filter(|&u| side[u] != side[v])
            .collect();
        let u = *others.choose(rng).expect("both sides are present");
        g.add_edge(u, v).expect("in range");
    }
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

/// Connected chordal: each new vertex is attached to a random clique
/// through a random earlier vertex.
pub fn random_chordal(n: usize, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        let mut clique = vec![u];
        let mut cand: Vec<usize> = g.neighbors(u).filter(|&w| w < v).collect();
        cand.shuffle(rng);
        for w in cand {
            if rng.gen_bool(0.5) && clique.iter().all(|&c| g.has_edge(c, w)) {
                clique.push(w);
            }
        }
        for c in clique {
            g.add_edge(c, v).expect("in range");
        }
    }
    relabel(&g, rng)
}

/// Random cotree over shuffled labels; `connected` forces a join at the root.
pub fn random_cotree(n: usize, connected: bool, rng: &mut impl Rng) -> Cotree {
    assert!(n >= 1, "a cotree needs at least one leaf");
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    build_random(&labels, connected, rng)
}

fn build_random(labels: &[usize], force_join: bool, rng: &mut impl Rng) -> Cotree {
    if labels.len() == 1 {
        return Cotree::leaf(labels[0]);
    }
    let cut = rng.gen_range(1..labels.len());
    let op = if force_join || rng.gen_bool(0.5) {
        Op::Join
    } else {
        Op::Union
    };
    Cotree::combine(
        op,
        build_random(&labels[..cut], false, rng),
        build_random(&labels[cut..], false, rng),
    )
}

pub fn random_cograph(n: usize, connected: bool, rng: &mut impl Rng) -> Graph {
    random_cotree(n, connected, rng).realize()
}

/// Triangle-free: random pairs in random order, skipping any that close a triangle.
pub fn random_triangle_free(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    let mut g = Graph::new(n);
    for (u, v) in pairs {
        if rng.gen_bool(p) && !g.neighbors(u).any(|w| g.has_edge(w, v)) {
            g.add_edge(u, v).expect("in range");
        }
    }
    g
}

/// Complete multipartite with random part sizes.
pub fn random_complete_multipartite(n: usize, rng: &mut impl Rng) -> Graph {
    let parts = if n <= 1 { 1 } else { rng.gen_range(2..=n) };
    let part: Vec<usize> = (0..n)
        .map(|v| {
            if v < parts {
                v
            } else {
                rng.gen_range(0..parts)
            }
        })
        .collect();
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    relabel(&g, rng)
}

/// A random member of `class` on `n` vertices (connected where the
/// generator guarantees it).
pub fn random_in_class(class: GraphClass, n: usize, rng: &mut impl Rng) -> Graph {
    match class {
        GraphClass::Bipartite => random_connected_bipartite(n, 0.3, rng),
        GraphClass::Chordal => random_chordal(n, rng),
        GraphClass::Cograph => random_cograph(n.max(1), true, rng),
        GraphClass::CompleteMultipartite => random_complete_multipartite(n, rng),
        GraphClass::TriangleFree => random_triangle_free(n, 0.5, rng),
    }
}

fn relabel(g: &Graph, rng: &mut impl Rng) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    Graph::from_edges(g.n(), g.edges().map(|e| (perm[e.u()], perm[e.v()])))
        .expect("relabelled edges")
}
