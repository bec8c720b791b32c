use super::Graph;

/// Searches for an induced copy of `h` in `g`; returns `map` with `map[i]`
/// the image of vertex `i` of `h`. Plain backtracking, meant for small `h`.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.n() > g.n() {
        return None;
    }
    // Place pattern vertices so that each (when possible) touches an earlier one.
    let mut order = Vec::with_capacity(h.n());
    let mut placed = vec![false; h.n()];
    while order.len() < h.n() {
        let next = (0..h.n())
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                (
                    order.iter().filter(|&&u| h.has_edge(u, v)).count(),
                    h.degree(v),
                )
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut map = vec![usize::MAX; h.n()];
    let mut used = vec![false; g.n()];
    search(g, h, &order, 0, &mut map, &mut used).then_some(map)
}

fn search(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let need = h.degree(v);
    // Restrict to neighbours of an already-mapped pattern neighbour when there is one.
    let anchor = order[..depth].iter().copied().find(|&u| h.has_edge(u, v));
    let candidates: Vec<usize> = match anchor {
        Some(u) => g.neighbors(map[u]).collect(),
        None => (0..g.n()).collect(),
    };
    for x in candidates {
        if used[x] || g.degree(x) < need {
            continue;
        }
        if order[..depth]
            .iter()
            .all(|&u| h.has_edge(u, v) == g.has_edge(map[u], x))
        {
            map[v] = x;
            used[x] = true;
            if search(g, h, order, depth + 1, map, used) {
                return true;
            }
            used[x] = false;
        }
    }
    map[v] = usize::MAX;
    false
}
