//! Exhaustive checks over every graph on at most seven vertices, up to isomorphism.

use std::collections::HashMap;
use std::sync::OnceLock;

use blockerlab::graph::iso::{are_isomorphic, invariant_hash};
use blockerlab::graph::named::{complete, cycle, empty, path};
use blockerlab::graph::{
    contains_induced, recognize_bipartite, recognize_chordal, recognize_cograph,
    recognize_complete_multipartite,
};
use blockerlab::subsets::for_each_subset_upto;
use blockerlab::{Edge, EdgeSet, Graph, VertexSet};

/// All graphs with 1..=7 vertices, one per isomorphism class.
fn small_graphs() -> &'static [Graph] {
    static GRAPHS: OnceLock<Vec<Graph>> = OnceLock::new();
    GRAPHS.get_or_init(|| {
        let mut all = vec![Graph::new(1)];
        let mut layer = vec![Graph::new(1)];
        for n in 2..=7 {
            let mut next: Vec<Graph> = Vec::new();
            let mut buckets: HashMap<u64, Vec<usize>> = HashMap::new();
            for g in &layer {
                for nb in 0u32..(1 << (n - 1)) {
                    let mut h = Graph::new(n);
                    for e in g.edges() {
                        h.add_edge(e.u(), e.v()).unwrap();
                    }
                    for u in 0..n - 1 {
                        if nb >> u & 1 == 1 {
                            h.add_edge(u, n - 1).unwrap();
                        }
                    }
                    let bucket = buckets.entry(invariant_hash(&h)).or_default();
                    if bucket.iter().any(|&i| are_isomorphic(&next[i], &h)) {
                        continue;
                    }
                    bucket.push(next.len());
                    next.push(h);
                }
            }
            all.extend(next.iter().cloned());
            layer = next;
        }
        all
    })
}

#[test]
fn graph_counts_match_known_sequence() {
    let mut per_n = [0usize; 8];
    for g in small_graphs() {
        per_n[g.n()] += 1;
    }
    assert_eq!(&per_n[1..], &[1, 2, 4, 11, 34, 156, 1044]);
}

/// Contracts the edges one at a time in the given order, returning the final
/// graph and the final vertex of each original vertex.
fn contract_sequentially(g: &Graph, order: &[Edge]) -> (Graph, Vec<usize>) {
    let mut cur = g.clone();
    let mut map: Vec<usize> = (0..g.n()).collect();
    for e in order {
        let (a, b) = (map[e.u()], map[e.v()]);
        if a == b {
            continue;
        }
        let c = cur
            .contract_edges(&[Edge::new(a, b)].into_iter().collect())
            .unwrap();
        for m in map.iter_mut() {
            *m = c.component_of[*m];
        }
        cur = c.graph;
    }
    (cur, map)
}

fn permutations(items: &[Edge]) -> Vec<Vec<Edge>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, first);
            out.push(p);
        }
    }
    out
}

#[test]
fn simultaneous_contraction_equals_sequential_in_any_order() {
    for g in small_graphs() {
        let edges = g.edge_list();
        for_each_subset_upto(edges.len(), 3, |idx| {
            let s: EdgeSet = idx.iter().map(|&i| edges[i]).collect();
            let all = g.contract_edges(&s).unwrap();
            let chosen: Vec<Edge> = s.iter().collect();
            for order in permutations(&chosen) {
                let (seq, map) = contract_sequentially(g, &order);
                assert_eq!(seq.n(), all.graph.n(), "{g:?} {order:?}");
                // the vertex correspondence is forced, so compare edge by edge
                let mut to_seq = vec![usize::MAX; all.graph.n()];
                for (&x, &y) in all.component_of.iter().zip(&map) {
                    assert!(to_seq[x] == usize::MAX || to_seq[x] == y, "{g:?} {order:?}");
                    to_seq[x] = y;
                }
                assert_eq!(all.graph.m(), seq.m(), "{g:?} {order:?}");
                for e in all.graph.edges() {
                    assert!(
                        seq.has_edge(to_seq[e.u()], to_seq[e.v()]),
                        "{g:?} {order:?}"
                    );
                }
            }
        });
    }
}

#[test]
fn deleting_a_simplicial_vertex_equals_contracting_one_of_its_edges() {
    for g in small_graphs().iter().filter(|g| g.n() <= 6) {
        for v in 0..g.n() {
            let nb: Vec<usize> = g.neighbors(v).collect();
            if nb.is_empty() || !g.is_clique(nb.iter().copied()) {
                continue;
            }
            let deleted = g.delete_vertices(&VertexSet::from_iter([v])).unwrap().graph;
            for &u in &nb {
                let contracted = g
                    .contract_edges(&[Edge::new(u, v)].into_iter().collect())
                    .unwrap()
                    .graph;
                assert!(are_isomorphic(&deleted, &contracted), "{g:?} v={v} u={u}");
            }
        }
    }
}

#[test]
fn recognizers_match_forbidden_induced_subgraphs() {
    let p4 = path(4);
    let p2p1 = complete(2).disjoint_union(&empty(1));
    let holes: Vec<Graph> = (4..=7).map(cycle).collect();
    let odd: Vec<Graph> = [3, 5, 7].into_iter().map(cycle).collect();
    for g in small_graphs() {
        let bip = recognize_bipartite(g);
        let chordal = recognize_chordal(g);
        let cograph = recognize_cograph(g);
        let multi = recognize_complete_multipartite(g);
        for cert in [&bip, &chordal, &cograph, &multi] {
            if cert.is_member() {
                cert.validate(g).unwrap_or_else(|e| panic!("{g:?}: {e}"));
            }
        }
        assert_eq!(
            bip.is_member(),
            odd.iter().all(|c| contains_induced(g, c).is_none()),
            "{g:?}"
        );
        assert_eq!(
            chordal.is_member(),
            holes.iter().all(|c| contains_induced(g, c).is_none()),
            "{g:?}"
        );
        assert_eq!(
            cograph.is_member(),
            contains_induced(g, &p4).is_none(),
            "{g:?}"
        );
        assert_eq!(
            multi.is_member(),
            contains_induced(g, &p2p1).is_none(),
            "{g:?}"
        );
    }
}
