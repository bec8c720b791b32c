//! Recognizers for the graph classes used by the solvers. Each returns either
//! a positive certificate that can be re-validated, or a forbidden structure.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{Graph, VertexSet};
use crate::cotree::{build_cotree, Cotree};
use crate::error::{Error, Result};

/// Forbidden structure certifying non-membership.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "vertices", rename_all = "snake_case")]
pub enum Forbidden {
    /// Cycle of odd length, vertices in cyclic order.
    OddCycle(Vec<usize>),
    /// Induced cycle of length at least four, in cyclic order.
    ChordlessCycle(Vec<usize>),
    /// Induced path `a-b-c-d`.
    InducedP4([usize; 4]),
    /// Edge `a-b` plus a vertex `c` adjacent to neither.
    InducedP2P1([usize; 3]),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassCertificate {
    Bipartition { left: VertexSet, right: VertexSet },
    PerfectEliminationOrder(Vec<usize>),
    Cotree(Box<Cotree>),
    MultipartiteParts(Vec<VertexSet>),
    NotInClass(Forbidden),
}

impl ClassCertificate {
    pub fn is_member(&self) -> bool {
        !matches!(self, ClassCertificate::NotInClass(_))
    }

    /// Re-checks the certificate against `g` from scratch.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidCertificate(m.to_string()));
        match self {
            ClassCertificate::Bipartition { left, right } => {
                g.check_vertices(left)?;
                g.check_vertices(right)?;
                if left.len() + right.len() != g.n() || left.iter().any(|v| right.contains(v)) {
                    return bad("bipartition does not partition the vertex set");
                }
                if !g.is_independent(left.iter()) || !g.is_independent(right.iter()) {
                    return bad("bipartition side is not independent");
                }
                Ok(())
            }
            ClassCertificate::PerfectEliminationOrder(order) => {
                let pos = positions(g, order)?;
                for &v in order {
                    let later: Vec<usize> = g.neighbors(v).filter(|&w| pos[w] > pos[v]).collect();
                    if !g.is_clique(later) {
                        return bad(&format!("later neighbours of {v} are not a clique"));
                    }
                }
                Ok(())
            }
            ClassCertificate::Cotree(t) => {
                let h = t.realize();
                if h != *g {
                    return bad("cotree does not realize the graph");
                }
                Ok(())
            }
            ClassCertificate::MultipartiteParts(parts) => {
                let mut part_of = vec![usize::MAX; g.n()];
                for (i, p) in parts.iter().enumerate() {
                    g.check_vertices(p)?;
                    for v in p {
                        if part_of[v] != usize::MAX {
                            return bad("parts overlap");
                        }
                        part_of[v] = i;
                    }
                }
                if part_of.contains(&usize::MAX) {
                    return bad("parts do not cover the vertex set");
                }
                for u in 0..g.n() {
                    for v in u + 1..g.n() {
                        if g.has_edge(u, v) == (part_of[u] == part_of[v]) {
                            return bad(&format!(
                                "pair {u},{v} violates the multipartite structure"
                            ));
                        }
                    }
                }
                Ok(())
            }
            ClassCertificate::NotInClass(f) => validate_forbidden(g, f),
        }
    }
}

fn positions(g: &Graph, order: &[usize]) -> Result<Vec<usize>> {
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        g.check_vertex(v)?;
        if pos[v] != usize::MAX {
            return Err(Error::InvalidCertificate(format!(
                "vertex {v} repeated in order"
            )));
        }
        pos[v] = i;
    }
    if order.len() != g.n() {
        return Err(Error::InvalidCertificate("order misses vertices".into()));
    }
    Ok(pos)
}

fn validate_forbidden(g: &Graph, f: &Forbidden) -> Result<()> {
    let induced_cycle = |c: &[usize]| {
        let k = c.len();
        (0..k).all(|i| {
            (i + 1..k).all(|j| g.has_edge(c[i], c[j]) == (j == i + 1 || (i == 0 && j == k - 1)))
        })
    };
    let distinct = |vs: &[usize]| {
        let mut s = vs.to_vec();
        s.sort_unstable();
        s.dedup();
        s.len() == vs.len() && vs.iter().all(|&v| v < g.n())
    };
    let ok = match f {
        Forbidden::OddCycle(c) => {
            c.len() % 2 == 1
                && c.len() >= 3
                && distinct(c)
                && (0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()]))
        }
        Forbidden::ChordlessCycle(c) => c.len() >= 4 && distinct(c) && induced_cycle(c),
        Forbidden::InducedP4(p) => {
            distinct(p)
                && (0..4).all(|i| (i + 1..4).all(|j| g.has_edge(p[i], p[j]) == (j == i + 1)))
        }
        Forbidden::InducedP2P1([a, b, c]) => {
            distinct(&[*a, *b, *c])
                && g.has_edge(*a, *b)
                && !g.has_edge(*a, *c)
                && !g.has_edge(*b, *c)
        }
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidCertificate(format!(
            "{f:?} is not present in the graph"
        )))
    }
}

/// BFS 2-colouring; an odd cycle is reported on failure.
pub fn recognize_bipartite(g: &Graph) -> ClassCertificate {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return ClassCertificate::NotInClass(Forbidden::OddCycle(tree_cycle(
                        &parent, &depth, v, w,
                    )));
                }
            }
        }
    }
    let left = (0..n).filter(|&v| side[v] == 0).collect();
    let right = (0..n).filter(|&v| side[v] == 1).collect();
    ClassCertificate::Bipartition { left, right }
}

/// Cycle formed by the BFS-tree paths from `a` and `b` plus the edge `ab`.
fn tree_cycle(parent: &[usize], depth: &[usize], a: usize, b: usize) -> Vec<usize> {
    let (mut x, mut y) = (a, b);
    let (mut up, mut down) = (vec![x], vec![y]);
    while depth[x] > depth[y] {
        x = parent[x];
        up.push(x);
    }
    while depth[y] > depth[x] {
        y = parent[y];
        down.push(y);
    }
    while x != y {
        x = parent[x];
        y = parent[y];
        up.push(x);
        down.push(y);
    }
    down.pop();
    down.reverse();
    up.extend(down);
    up
}

/// Lexicographic BFS by partition refinement; returns the visiting order.
fn lex_bfs(g: &Graph) -> Vec<usize> {
    let mut classes: Vec<Vec<usize>> = vec![(0..g.n()).collect()];
    let mut order = Vec::with_capacity(g.n());
    while let Some(first) = classes.first_mut() {
        let v = first.remove(0);
        if first.is_empty() {
            classes.remove(0);
        }
        order.push(v);
        let mut next = Vec::with_capacity(classes.len() * 2);
        for class in classes {
            let (inn, out): (Vec<usize>, Vec<usize>) =
                class.into_iter().partition(|&w| g.has_edge(v, w));
            if !inn.is_empty() {
                next.push(inn);
            }
            if !out.is_empty() {
                next.push(out);
            }
        }
        classes = next;
    }
    order
}

/// Reverse LexBFS order checked as a perfect elimination order; a chordless
/// cycle is extracted when the check fails.
pub fn recognize_chordal(g: &Graph) -> ClassCertificate {
    let mut order = lex_bfs(g);
    order.reverse();
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &order {
        let later: Vec<usize> = g.neighbors(v).filter(|&w| pos[w] > pos[v]).collect();
        if let Some(&p) = later.iter().min_by_key(|&&w| pos[w]) {
            if later.iter().any(|&w| w != p && !g.has_edge(p, w)) {
                let cycle = chordless_cycle(g)
                    .expect("a failed elimination order implies a long induced cycle");
                return ClassCertificate::NotInClass(Forbidden::ChordlessCycle(cycle));
            }
        }
    }
    ClassCertificate::PerfectEliminationOrder(order)
}

/// Finds an induced cycle of length ≥ 4: a vertex `v` with non-adjacent
/// neighbours `u`, `w` joined by a shortest path avoiding the rest of `N[v]`.
fn chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for v in 0..n {
        let nb: Vec<usize> = g.neighbors(v).collect();
        for (i, &u) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                if g.has_edge(u, w) {
                    continue;
                }
                let blocked = |x: usize| x == v || (g.has_edge(v, x) && x != u && x != w);
                let mut prev = vec![usize::MAX; n];
                prev[u] = u;
                let mut queue = VecDeque::from([u]);
                while let Some(x) = queue.pop_front() {
                    if x == w {
                        break;
                    }
                    for y in g.neighbors(x) {
                        if prev[y] == usize::MAX && !blocked(y) {
                            prev[y] = x;
                            queue.push_back(y);
                        }
                    }
                }
                if prev[w] != usize::MAX {
                    let mut cycle = vec![v];
                    let mut path = vec![w];
                    let mut x = w;
                    while x != u {
                        x = prev[x];
                        path.push(x);
                    }
                    path.reverse();
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

pub fn recognize_cograph(g: &Graph) -> ClassCertificate {
    match build_cotree(g) {
        Ok(t) => ClassCertificate::Cotree(Box::new(t)),
        Err(Error::NotACograph(p)) => ClassCertificate::NotInClass(Forbidden::InducedP4(p)),
        Err(e) => unreachable!("cotree construction failed unexpectedly: {e}"),
    }
}

/// Parts are the components of the complement; each must be independent.
pub fn recognize_complete_multipartite(g: &Graph) -> ClassCertificate {
    let co = g.complement();
    let comps = co.components();
    for comp in &comps {
        if let Some(&a) = comp
            .iter()
            .find(|&&a| comp.iter().any(|&b| b != a && g.has_edge(a, b)))
        {
            // a and some c are adjacent in g; walk a shortest complement path
            // a = x0, x1, x2, ... towards c: (x0, x2) adjacent in g, x1 adjacent to neither.
            let c = *comp.iter().find(|&&b| b != a && g.has_edge(a, b)).unwrap();
            let path = shortest_path(&co, a, c).expect("same complement component");
            let (x0, x1, x2) = (path[0], path[1], path[2]);
            return ClassCertificate::NotInClass(Forbidden::InducedP2P1([x0, x2, x1]));
        }
    }
    ClassCertificate::MultipartiteParts(
        comps.into_iter().map(|c| c.into_iter().collect()).collect(),
    )
}

fn shortest_path(g: &Graph, s: usize, t: usize) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.n()];
    prev[s] = s;
    let mut queue = VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        for y in g.neighbors(x) {
            if prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    if prev[t] == usize::MAX {
        return None;
    }
    let mut path = vec![t];
    let mut x = t;
    while x != s {
        x = prev[x];
        path.push(x);
    }
    path.reverse();
    Some(path)
}
