//! Isomorphism-invariant hashing (colour refinement) and exact isomorphism
//! testing by backtracking. Intended for graphs of at most a few dozen vertices.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use super::Graph;

fn mix(parts: &[u64]) -> u64 {
    let mut h = DefaultHasher::new();
    parts.hash(&mut h);
    h.finish()
}

/// Stable vertex colours after refinement starting from degrees.
fn refine(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let mut col: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    let mut classes = count_classes(&col);
    loop {
        let next: Vec<u64> = (0..n)
            .map(|v| {
                let mut nb: Vec<u64> = g.neighbors(v).map(|w| col[w]).collect();
                nb.sort_unstable();
                nb.insert(0, col[v]);
                mix(&nb)
            })
            .collect();
        let c = count_classes(&next);
        col = next;
        if c == classes {
            return col;
        }
        classes = c;
    }
}

fn count_classes(col: &[u64]) -> usize {
    let mut c = col.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Hash that agrees on isomorphic graphs.
pub fn invariant_hash(g: &Graph) -> u64 {
    let mut col = refine(g);
    col.sort_unstable();
    col.push(g.n() as u64);
    col.push(g.m() as u64);
    mix(&col)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    find_isomorphism(a, b).is_some()
}

/// A bijection `phi` with `uv ∈ E(a) ⇔ phi[u]phi[v] ∈ E(b)`.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.m() != b.m() {
        return None;
    }
    let (ca, cb) = (refine(a), refine(b));
    let (mut sa, mut sb) = (ca.clone(), cb.clone());
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    // Map rarest colour classes first, then follow adjacency.
    let n = a.n();
    let freq = |c: u64| ca.iter().filter(|&&x| x == c).count();
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let start = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (freq(ca[v]), std::cmp::Reverse(a.degree(v))))
            .unwrap();
        placed[start] = true;
        order.push(start);
        let mut i = order.len() - 1;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for w in a.neighbors(v) {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
        }
    }
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(a, b, &ca, &cb, &order, 0, &mut phi, &mut used) {
        Some(phi)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &Graph,
    b: &Graph,
    ca: &[u64],
    cb: &[u64],
    order: &[usize],
    depth: usize,
    phi: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for x in 0..b.n() {
        if used[x] || cb[x] != ca[v] {
            continue;
        }
        let ok = order[..depth]
            .iter()
            .all(|&u| a.has_edge(u, v) == b.has_edge(phi[u], x));
        if !ok {
            continue;
        }
        phi[v] = x;
        used[x] = true;
        if extend(a, b, ca, cb, order, depth + 1, phi, used) {
            return true;
        }
        used[x] = false;
    }
    phi[v] = usize::MAX;
    false
}
