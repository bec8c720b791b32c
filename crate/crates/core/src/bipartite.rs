//! d-contraction blocker for α on connected bipartite graphs.

use serde::{Deserialize, Serialize};

use crate::blocker::{BlockerQuery, BlockerSet, Operation};
use crate::error::{Error, Result};
use crate::graph::{recognize_bipartite, ClassCertificate, Edge, EdgeSet, Forbidden, Graph};
use crate::oracle::{brute_blocker, SearchOptions};
use crate::params::{is_matching, matching_edges, maximum_matching, mu_bipartite, ParameterKind};
use crate::subsets::{binomial, first_combination};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionWitness {
    pub edges: EdgeSet,
    pub claimed_alpha_after: usize,
}

/// Which branch of the dispatch decided the instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    SmallGraph,
    AlphaTooSmall,
    ContractionTree,
    Enumeration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteOutcome {
    pub answer: bool,
    pub alpha_before: usize,
    pub witness: Option<ContractionWitness>,
    pub route: Route,
}

/// Bipartition of `g`, or the odd cycle that rules it out.
pub fn bipartition_certificate(g: &Graph) -> Result<ClassCertificate> {
    match recognize_bipartite(g) {
        ClassCertificate::NotInClass(Forbidden::OddCycle(c)) => Err(Error::NotBipartite(c)),
        ClassCertificate::NotInClass(_) => Err(Error::NotBipartite(Vec::new())),
        cert => Ok(cert),
    }
}

fn left_side(cert: &ClassCertificate) -> Result<Vec<usize>> {
    match cert {
        ClassCertificate::Bipartition { left, .. } => Ok(left.to_vec()),
        _ => Err(Error::InvalidCertificate("expected a bipartition".into())),
    }
}

fn connected_bipartite(g: &Graph) -> Result<ClassCertificate> {
    let cert = bipartition_certificate(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(cert)
}

/// Grows a tree from a matching edge until it has at least 2d edges.
///
/// Each round takes the smallest vertex `w` outside the tree with a tree
/// neighbour, attaches it through its smallest tree neighbour, and if `w` is
/// matched also attaches its partner.
pub fn build_contraction_tree(g: &Graph, m: &EdgeSet, d: usize) -> Result<EdgeSet> {
    if d == 0 {
        return Err(Error::precondition("d must be at least 1"));
    }
    let cert = connected_bipartite(g)?;
    g.check_edges(m)?;
    if !is_matching(m) {
        return Err(Error::precondition("edge set is not a matching"));
    }
    let first = m
        .iter()
        .next()
        .ok_or_else(|| Error::precondition("matching is empty"))?;
    if m.len() != mu_bipartite(g, &cert)?.value {
        return Err(Error::precondition("matching is not maximum"));
    }
    if g.n() < 2 * d + 2 {
        return Err(Error::precondition(format!(
            "need at least {} vertices for d = {d}, graph has {}",
            2 * d + 2,
            g.n()
        )));
    }
    let mut partner = vec![None; g.n()];
    for e in m {
        partner[e.u()] = Some(e.v());
        partner[e.v()] = Some(e.u());
    }
    let mut in_tree = vec![false; g.n()];
    let mut tree = EdgeSet::new();
    tree.insert(first);
    in_tree[first.u()] = true;
    in_tree[first.v()] = true;
    while tree.len() < 2 * d {
        let (w, anchor) = (0..g.n())
            .filter(|&w| !in_tree[w])
            .find_map(|w| g.neighbors(w).find(|&x| in_tree[x]).map(|x| (w, x)))
            .expect("connected graph with vertices left outside the tree");
        tree.insert(Edge::new(anchor, w));
        in_tree[w] = true;
        if let Some(v) = partner[w] {
            // v is outside: a matched tree vertex has its partner in the tree.
            tree.insert(Edge::new(w, v));
            in_tree[v] = true;
        }
    }
    Ok(tree)
}

/// Most vertices `alpha_after_contraction_bipartite` will branch over.
const BRANCH_LIMIT: usize = 20;

/// α(G/S) for bipartite G. Contracted vertices (components of G|_S with two
/// or more vertices) are few; the rest of G/S is an induced subgraph of G and
/// so bipartite. Branch over which contracted vertices go into the
/// independent set and finish with a matching.
pub fn alpha_after_contraction_bipartite(
    g: &Graph,
    s: &EdgeSet,
    cert: &ClassCertificate,
) -> Result<usize> {
    cert.validate(g)?;
    let left = left_side(cert)?;
    let mut is_left = vec![false; g.n()];
    for &v in &left {
        is_left[v] = true;
    }
    alpha_after(g, s, &is_left)
}

fn alpha_after(g: &Graph, s: &EdgeSet, is_left: &[bool]) -> Result<usize> {
    let c = g.contract_edges(s)?;
    let big: Vec<usize> = (0..c.components.len())
        .filter(|&x| c.components[x].len() >= 2)
        .collect();
    if big.len() > BRANCH_LIMIT {
        return Err(Error::CapacityExceeded {
            what: "contracted vertices to branch over",
            needed: big.len() as u128,
            limit: BRANCH_LIMIT as u128,
        });
    }
    let gc = &c.graph;
    let mut best = 0;
    for mask in 0u32..(1 << big.len()) {
        let chosen: Vec<usize> = (0..big.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| big[i])
            .collect();
        if !gc.is_independent(chosen.iter().copied()) {
            continue;
        }
        let mut blocked = vec![false; gc.n()];
        for &x in &big {
            blocked[x] = true;
        }
        for &x in &chosen {
            for y in gc.neighbors(x) {
                blocked[y] = true;
            }
        }
        // Surviving contracted vertices are singletons; go back to G.
        let rest: Vec<usize> = (0..gc.n())
            .filter(|&x| !blocked[x])
            .map(|x| c.components[x][0])
            .collect();
        if chosen.len() + rest.len() <= best {
            continue;
        }
        let h = g.induced(&rest);
        let left: Vec<usize> = (0..rest.len()).filter(|&i| is_left[rest[i]]).collect();
        let mu = maximum_matching(&h, &left).iter().flatten().count() / 2;
        best = best.max(chosen.len() + rest.len() - mu);
    }
    Ok(best)
}

/// Decides whether at most `k` contractions lower α by at least `d`.
///
/// Dispatch: graphs on at most 2d + 1 vertices go to the exhaustive oracle;
/// α ≤ d is a no; k ≥ 2d + 1 is a yes via [`build_contraction_tree`];
/// otherwise every edge set of size at most k is tried, smallest first and
/// lexicographically within a size.
pub fn solve_bipartite_contraction_blocker(
    g: &Graph,
    k: usize,
    d: usize,
    opts: SearchOptions,
) -> Result<BipartiteOutcome> {
    if d == 0 {
        return Err(Error::precondition("d must be at least 1"));
    }
    let cert = connected_bipartite(g)?;
    let left = left_side(&cert)?;
    let mut is_left = vec![false; g.n()];
    for &v in &left {
        is_left[v] = true;
    }
    let alpha_before = alpha_after(g, &EdgeSet::new(), &is_left)?;
    let outcome = |route, witness: Option<ContractionWitness>| BipartiteOutcome {
        answer: witness.is_some(),
        alpha_before,
        witness,
        route,
    };

    if g.n() <= 2 * d + 1 {
        let q = BlockerQuery::new(g.clone(), Operation::Contract, ParameterKind::Alpha, k, d)?;
        let a = brute_blocker(&q, opts)?;
        let witness = match (a.witness, a.after) {
            (Some(BlockerSet::Edges(edges)), Some(after)) => Some(ContractionWitness {
                edges,
                claimed_alpha_after: after,
            }),
            _ => None,
        };
        return Ok(outcome(Route::SmallGraph, witness));
    }
    if alpha_before <= d {
        return Ok(outcome(Route::AlphaTooSmall, None));
    }
    if k > 2 * d {
        let m = matching_edges(&maximum_matching(g, &left));
        let edges = build_contraction_tree(g, &m, d)?;
        let claimed_alpha_after = alpha_after(g, &edges, &is_left)?;
        return Ok(outcome(
            Route::ContractionTree,
            Some(ContractionWitness {
                edges,
                claimed_alpha_after,
            }),
        ));
    }

    let edges = g.edge_list();
    let target = alpha_before - d;
    let mut planned: u128 = 0;
    for size in 0..=k.min(edges.len()) {
        planned = planned.saturating_add(binomial(edges.len(), size));
        if planned > opts.budget as u128 {
            return Err(Error::CapacityExceeded {
                what: "bipartite blocker enumeration",
                needed: planned,
                limit: opts.budget as u128,
            });
        }
        let to_set = |idx: &[usize]| -> EdgeSet { idx.iter().map(|&i| edges[i]).collect() };
        let hit = first_combination(edges.len(), size, opts.parallel, |idx| {
            // Errors cannot occur here: the edges come from g and |U| ≤ k ≤ 2d.
            alpha_after(g, &to_set(idx), &is_left).is_ok_and(|a| a <= target)
        });
        if let Some(idx) = hit {
            let s = to_set(&idx);
            let claimed_alpha_after = alpha_after(g, &s, &is_left)?;
            return Ok(outcome(
                Route::Enumeration,
                Some(ContractionWitness {
                    edges: s,
                    claimed_alpha_after,
                }),
            ));
        }
    }
    Ok(outcome(Route::Enumeration, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::params::alpha;

    fn es(pairs: &[(usize, usize)]) -> EdgeSet {
        pairs.iter().map(|&(u, v)| Edge::new(u, v)).collect()
    }

    #[test]
    fn tree_on_p4() {
        let t = build_contraction_tree(&path(4), &es(&[(0, 1), (2, 3)]), 1).unwrap();
        assert_eq!(t, path(4).edge_set());
    }

    #[test]
    fn tree_on_c4_and_k23() {
        let c4 = cycle(4);
        let t = build_contraction_tree(&c4, &es(&[(0, 1), (2, 3)]), 1).unwrap();
        assert_eq!(t.len(), 3);
        assert!(c4.restriction(&t).unwrap().is_forest());
        let k23 = complete_bipartite(2, 3);
        let m = matching_edges(&maximum_matching(&k23, &[0, 1]));
        let t = build_contraction_tree(&k23, &m, 1).unwrap();
        assert!((2..=3).contains(&t.len()));
        assert!(k23.restriction(&t).unwrap().is_forest());
    }

    #[test]
    fn tree_preconditions() {
        let p4 = path(4);
        assert!(build_contraction_tree(&p4, &EdgeSet::new(), 1).is_err());
        assert!(build_contraction_tree(&p4, &es(&[(1, 2)]), 1).is_err());
        assert!(build_contraction_tree(&p4, &es(&[(0, 1), (2, 3)]), 2).is_err());
        let two = path(2).disjoint_union(&path(2));
        assert_eq!(
            build_contraction_tree(&two, &es(&[(0, 1), (2, 3)]), 1),
            Err(Error::Disconnected)
        );
        assert!(matches!(
            build_contraction_tree(&complete(3), &es(&[(0, 1)]), 1),
            Err(Error::NotBipartite(_))
        ));
    }

    #[test]
    fn alpha_after_examples() {
        let c4 = cycle(4);
        let cert = bipartition_certificate(&c4).unwrap();
        assert_eq!(
            alpha_after_contraction_bipartite(&c4, &EdgeSet::new(), &cert).unwrap(),
            2
        );
        assert_eq!(
            alpha_after_contraction_bipartite(&c4, &es(&[(0, 1)]), &cert).unwrap(),
            1
        );
        let p4 = path(4);
        let cert = bipartition_certificate(&p4).unwrap();
        let s = es(&[(0, 1), (2, 3)]);
        assert_eq!(
            alpha_after_contraction_bipartite(&p4, &s, &cert).unwrap(),
            1
        );
        assert_eq!(alpha(&p4.contract_edges(&s).unwrap().graph).unwrap(), 1);
    }

    #[test]
    fn solver_examples() {
        let o = SearchOptions::default();
        let p4 = path(4);
        let r = solve_bipartite_contraction_blocker(&p4, 1, 1, o).unwrap();
        assert!(!r.answer);
        assert_eq!(r.route, Route::Enumeration);
        let r = solve_bipartite_contraction_blocker(&p4, 2, 1, o).unwrap();
        assert_eq!(r.witness.unwrap().edges, es(&[(0, 1), (1, 2)]));
        let cert = bipartition_certificate(&p4).unwrap();
        assert_eq!(
            alpha_after_contraction_bipartite(&p4, &es(&[(0, 1), (2, 3)]), &cert).unwrap(),
            1
        );
        let r = solve_bipartite_contraction_blocker(&cycle(4), 1, 1, o).unwrap();
        let w = r.witness.unwrap();
        assert_eq!((w.edges.len(), w.claimed_alpha_after), (1, 1));
        let r = solve_bipartite_contraction_blocker(&path(6), 3, 1, o).unwrap();
        assert_eq!(r.route, Route::ContractionTree);
        let w = r.witness.unwrap();
        assert!(w.claimed_alpha_after < 3);
        assert_eq!(
            alpha(&path(6).contract_edges(&w.edges).unwrap().graph).unwrap(),
            w.claimed_alpha_after
        );
        let r = solve_bipartite_contraction_blocker(&path(3), 2, 1, o).unwrap();
        assert_eq!(r.route, Route::SmallGraph);
        assert!(r.answer);
    }
}
