//! Exact graph parameters with certifying witnesses.
//!
//! α and ω use a bitset max-clique branch-and-bound with greedy-colouring
//! bounds; χ uses DSatur backtracking between ω and a greedy upper bound.
//! Both work per connected component (α is additive, ω and χ are maxima),
//! so the caps below apply to the largest component.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ClassCertificate, Edge, EdgeSet, Graph, VertexSet};

/// Largest component handled by [`alpha_exact`] and [`omega_exact`].
pub const CLIQUE_LIMIT: usize = 64;
/// Largest component handled by [`chi_exact`].
pub const CHI_LIMIT: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParameterKind {
    Alpha,
    Omega,
    Chi,
    Mu,
    Tau,
}

impl std::fmt::Display for ParameterKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ParameterKind::Alpha => "alpha",
            ParameterKind::Omega => "omega",
            ParameterKind::Chi => "chi",
            ParameterKind::Mu => "mu",
            ParameterKind::Tau => "tau",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Vertices(VertexSet),
    Edges(EdgeSet),
    /// `colouring[v]` is the 0-based colour of `v`.
    Colouring(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterValue {
    pub kind: ParameterKind,
    pub value: usize,
    pub witness: Witness,
}

impl ParameterValue {
    /// Checks that the witness is of the right shape and has the claimed size.
    /// This certifies a bound (α, ω, μ from below; χ, τ from above), not optimality.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidCertificate(m));
        match (&self.kind, &self.witness) {
            (ParameterKind::Alpha, Witness::Vertices(s)) => {
                g.check_vertices(s)?;
                if !g.is_independent(s.iter()) {
                    return bad("witness is not independent".into());
                }
                if s.len() != self.value {
                    return bad(format!(
                        "independent set has size {}, claimed {}",
                        s.len(),
                        self.value
                    ));
                }
            }
            (ParameterKind::Omega, Witness::Vertices(s)) => {
                g.check_vertices(s)?;
                if !g.is_clique(s.iter()) {
                    return bad("witness is not a clique".into());
                }
                if s.len() != self.value {
                    return bad(format!(
                        "clique has size {}, claimed {}",
                        s.len(),
                        self.value
                    ));
                }
            }
            (ParameterKind::Tau, Witness::Vertices(s)) => {
                g.check_vertices(s)?;
                if !g.is_vertex_cover(s) {
                    return bad("witness is not a vertex cover".into());
                }
                if s.len() != self.value {
                    return bad(format!(
                        "cover has size {}, claimed {}",
                        s.len(),
                        self.value
                    ));
                }
            }
            (ParameterKind::Mu, Witness::Edges(m)) => {
                g.check_edges(m)?;
                if !is_matching(m) {
                    return bad("witness edges share a vertex".into());
                }
                if m.len() != self.value {
                    return bad(format!(
                        "matching has size {}, claimed {}",
                        m.len(),
                        self.value
                    ));
                }
            }
            (ParameterKind::Chi, Witness::Colouring(c)) => {
                check_proper(g, c)?;
                let used = colours_used(c);
                if used > self.value {
                    return bad(format!(
                        "colouring uses {used} colours, claimed {}",
                        self.value
                    ));
                }
            }
            (k, w) => return bad(format!("witness {w:?} does not fit parameter {k}")),
        }
        Ok(())
    }
}

pub fn is_matching(m: &EdgeSet) -> bool {
    let vs = m.vertices();
    vs.len() == 2 * m.len()
}

pub(crate) fn colours_used(c: &[usize]) -> usize {
    let mut s: Vec<usize> = c.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}

fn check_proper(g: &Graph, c: &[usize]) -> Result<()> {
    if c.len() != g.n() {
        return Err(Error::InvalidCertificate(format!(
            "colouring covers {} vertices, graph has {}",
            c.len(),
            g.n()
        )));
    }
    if let Some(e) = g.edges().find(|e| c[e.u()] == c[e.v()]) {
        return Err(Error::InvalidCertificate(format!(
            "edge {e} is monochromatic"
        )));
    }
    Ok(())
}

fn capacity(what: &'static str, needed: usize, limit: usize) -> Error {
    Error::CapacityExceeded {
        what,
        needed: needed as u128,
        limit: limit as u128,
    }
}

/// Maximum clique of the graph given by neighbourhood masks (≤ 64 vertices).
pub(crate) fn max_clique_mask(masks: &[u64]) -> u64 {
    let all = if masks.len() == 64 {
        u64::MAX
    } else {
        (1u64 << masks.len()) - 1
    };
    let mut best = 0u64;
    expand(masks, 0, all, &mut best);
    best
}

fn expand(masks: &[u64], r: u64, p: u64, best: &mut u64) {
    if p == 0 {
        if r.count_ones() > best.count_ones() {
            *best = r;
        }
        return;
    }
    // Greedy colour classes of p give the bound |r| + colour(v).
    let mut order = [0u8; 64];
    let mut colour = [0u8; 64];
    let mut len = 0;
    let mut uncoloured = p;
    let mut k = 0u8;
    while uncoloured != 0 {
        k += 1;
        let mut q = uncoloured;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !(1 << v) & !masks[v];
            uncoloured &= !(1 << v);
            order[len] = v as u8;
            colour[len] = k;
            len += 1;
        }
    }
    let mut p = p;
    let size = r.count_ones();
    for i in (0..len).rev() {
        if size + colour[i] as u32 <= best.count_ones() {
            return;
        }
        let v = order[i] as usize;
        expand(masks, r | (1 << v), p & masks[v], best);
        p &= !(1 << v);
    }
}

fn mask_to_vec(mut m: u64, map: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(map[m.trailing_zeros() as usize]);
        m &= m - 1;
    }
    out
}

fn clique_of_component(
    g: &Graph,
    comp: &[usize],
    complement: bool,
    what: &'static str,
) -> Result<Vec<usize>> {
    if comp.len() > CLIQUE_LIMIT {
        return Err(capacity(what, comp.len(), CLIQUE_LIMIT));
    }
    let mut h = g.induced(comp);
    if complement {
        h = h.complement();
    }
    let masks = h.masks().expect("component within the word limit");
    Ok(mask_to_vec(max_clique_mask(&masks), comp))
}

pub fn alpha_exact(g: &Graph) -> Result<ParameterValue> {
    let mut set = VertexSet::new();
    for comp in g.components() {
        for v in clique_of_component(g, &comp, true, "alpha_exact")? {
            set.insert(v);
        }
    }
    Ok(ParameterValue {
        kind: ParameterKind::Alpha,
        value: set.len(),
        witness: Witness::Vertices(set),
    })
}

pub fn omega_exact(g: &Graph) -> Result<ParameterValue> {
    let mut best: Vec<usize> = Vec::new();
    for comp in g.components() {
        if comp.len() <= best.len() {
            continue;
        }
        let c = clique_of_component(g, &comp, false, "omega_exact")?;
        if c.len() > best.len() {
            best = c;
        }
    }
    Ok(ParameterValue {
        kind: ParameterKind::Omega,
        value: best.len(),
        witness: Witness::Vertices(best.into_iter().collect()),
    })
}

pub fn chi_exact(g: &Graph) -> Result<ParameterValue> {
    let mut colouring = vec![0usize; g.n()];
    let mut chi = 0;
    for comp in g.components() {
        if comp.len() > CHI_LIMIT {
            return Err(capacity("chi_exact", comp.len(), CHI_LIMIT));
        }
        let h = g.induced(&comp);
        let (k, c) = chromatic_connected(&h);
        chi = chi.max(k);
        for (i, &v) in comp.iter().enumerate() {
            colouring[v] = c[i];
        }
    }
    Ok(ParameterValue {
        kind: ParameterKind::Chi,
        value: chi,
        witness: Witness::Colouring(colouring),
    })
}

fn chromatic_connected(h: &Graph) -> (usize, Vec<usize>) {
    let masks = h.masks().expect("within limit");
    let lower = max_clique_mask(&masks).count_ones() as usize;
    let mut best = dsatur_greedy(&masks);
    let mut upper = colours_used(&best);
    while upper > lower {
        match k_colour(&masks, upper - 1) {
            Some(c) => {
                upper = colours_used(&c);
                best = c;
            }
            None => break,
        }
    }
    (upper, best)
}

fn pick_dsatur(masks: &[u64], colour: &[usize], k_max: usize) -> Option<usize> {
    let n = masks.len();
    (0..n)
        .filter(|&v| colour[v] == usize::MAX)
        .max_by_key(|&v| {
            let mut seen = 0u64;
            let mut m = masks[v];
            let mut uncoloured_deg = 0;
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                if colour[w] == usize::MAX {
                    uncoloured_deg += 1;
                } else if colour[w] < k_max {
                    seen |= 1 << colour[w];
                }
            }
            (seen.count_ones(), uncoloured_deg, std::cmp::Reverse(v))
        })
}

fn dsatur_greedy(masks: &[u64]) -> Vec<usize> {
    let n = masks.len();
    let mut colour = vec![usize::MAX; n];
    while let Some(v) = pick_dsatur(masks, &colour, 64) {
        let mut c = 0;
        while (0..n).any(|w| masks[v] >> w & 1 == 1 && colour[w] == c) {
            c += 1;
        }
        colour[v] = c;
    }
    colour
}

/// Proper colouring with at most `k` colours, if one exists.
fn k_colour(masks: &[u64], k: usize) -> Option<Vec<usize>> {
    let mut colour = vec![usize::MAX; masks.len()];
    k_colour_rec(masks, k, &mut colour, 0).then_some(colour)
}

fn k_colour_rec(masks: &[u64], k: usize, colour: &mut [usize], used: usize) -> bool {
    let Some(v) = pick_dsatur(masks, colour, 64) else {
        return true;
    };
    let mut forbidden = 0u64;
    let mut m = masks[v];
    while m != 0 {
        let w = m.trailing_zeros() as usize;
        m &= m - 1;
        if colour[w] != usize::MAX {
            forbidden |= 1 << colour[w];
        }
    }
    // New colours are interchangeable, so only the first unused one is tried.
    for c in 0..k.min(used + 1) {
        if forbidden >> c & 1 == 0 {
            colour[v] = c;
            if k_colour_rec(masks, k, colour, used.max(c + 1)) {
                return true;
            }
        }
    }
    colour[v] = usize::MAX;
    false
}

fn bipartition(g: &Graph, cert: &ClassCertificate) -> Result<(Vec<usize>, Vec<bool>)> {
    match cert {
        ClassCertificate::Bipartition { left, .. } => {
            cert.validate(g)?;
            let mut is_left = vec![false; g.n()];
            for v in left {
                is_left[v] = true;
            }
            Ok((left.to_vec(), is_left))
        }
        _ => Err(Error::InvalidCertificate("expected a bipartition".into())),
    }
}

/// Maximum matching by augmenting paths from the left side; `mate[v]` is the partner.
pub fn maximum_matching(g: &Graph, left: &[usize]) -> Vec<Option<usize>> {
    let mut mate = vec![None; g.n()];
    for &u in left {
        let mut visited = vec![false; g.n()];
        augment(g, u, &mut mate, &mut visited);
    }
    mate
}

fn augment(g: &Graph, u: usize, mate: &mut [Option<usize>], visited: &mut [bool]) -> bool {
    for w in g.neighbors(u) {
        if visited[w] {
            continue;
        }
        visited[w] = true;
        let free = match mate[w] {
            None => true,
            Some(x) => augment(g, x, mate, visited),
        };
        if free {
            mate[w] = Some(u);
            mate[u] = Some(w);
            return true;
        }
    }
    false
}

pub fn matching_edges(mate: &[Option<usize>]) -> EdgeSet {
    mate.iter()
        .enumerate()
        .filter_map(|(v, m)| m.filter(|&w| v < w).map(|w| Edge::new(v, w)))
        .collect()
}

pub fn mu_bipartite(g: &Graph, cert: &ClassCertificate) -> Result<ParameterValue> {
    let (left, _) = bipartition(g, cert)?;
    let m = matching_edges(&maximum_matching(g, &left));
    Ok(ParameterValue {
        kind: ParameterKind::Mu,
        value: m.len(),
        witness: Witness::Edges(m),
    })
}

/// α = n − μ, with the independent set read off a König cover.
pub fn alpha_bipartite(g: &Graph, cert: &ClassCertificate) -> Result<ParameterValue> {
    let (left, is_left) = bipartition(g, cert)?;
    let mate = maximum_matching(g, &left);
    // Z: reachable from free left vertices along alternating paths.
    let mut in_z = vec![false; g.n()];
    let mut stack: Vec<usize> = left
        .iter()
        .copied()
        .filter(|&u| mate[u].is_none())
        .collect();
    for &u in &stack {
        in_z[u] = true;
    }
    while let Some(u) = stack.pop() {
        for w in g.neighbors(u) {
            if in_z[w] {
                continue;
            }
            in_z[w] = true;
            if let Some(x) = mate[w] {
                if !in_z[x] {
                    in_z[x] = true;
                    stack.push(x);
                }
            }
        }
    }
    // Cover = (L \ Z) ∪ (R ∩ Z); the independent set is its complement.
    let set: VertexSet = (0..g.n()).filter(|&v| is_left[v] == in_z[v]).collect();
    Ok(ParameterValue {
        kind: ParameterKind::Alpha,
        value: set.len(),
        witness: Witness::Vertices(set),
    })
}

/// Greedy along a perfect elimination order.
pub fn alpha_chordal(g: &Graph, cert: &ClassCertificate) -> Result<ParameterValue> {
    let ClassCertificate::PerfectEliminationOrder(order) = cert else {
        return Err(Error::InvalidCertificate(
            "expected a perfect elimination order".into(),
        ));
    };
    cert.validate(g)?;
    let mut blocked = vec![false; g.n()];
    let mut set = VertexSet::new();
    for &v in order {
        if !blocked[v] {
            set.insert(v);
            blocked[v] = true;
            for w in g.neighbors(v) {
                blocked[w] = true;
            }
        }
    }
    Ok(ParameterValue {
        kind: ParameterKind::Alpha,
        value: set.len(),
        witness: Witness::Vertices(set),
    })
}

/// τ = n − α; the cover is the complement of the independent set.
pub fn tau_from_alpha(g: &Graph, a: &ParameterValue) -> Result<ParameterValue> {
    if a.kind != ParameterKind::Alpha {
        return Err(Error::precondition(format!(
            "expected an alpha value, got {}",
            a.kind
        )));
    }
    a.validate(g)?;
    let Witness::Vertices(ind) = &a.witness else {
        unreachable!()
    };
    let cover: VertexSet = (0..g.n()).filter(|&v| !ind.contains(v)).collect();
    Ok(ParameterValue {
        kind: ParameterKind::Tau,
        value: cover.len(),
        witness: Witness::Vertices(cover),
    })
}

/// Plain values, for callers that only need the number.
pub fn alpha(g: &Graph) -> Result<usize> {
    alpha_exact(g).map(|p| p.value)
}

pub fn omega(g: &Graph) -> Result<usize> {
    omega_exact(g).map(|p| p.value)
}

pub fn chi(g: &Graph) -> Result<usize> {
    chi_exact(g).map(|p| p.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::graph::{recognize_bipartite, recognize_chordal};

    fn brute_alpha(g: &Graph) -> usize {
        (0u32..1 << g.n())
            .filter(|&s| g.is_independent((0..g.n()).filter(|&v| s >> v & 1 == 1)))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(alpha(&cycle(4)).unwrap(), 2);
        assert_eq!(alpha(&paw()).unwrap(), brute_alpha(&paw()));
        assert_eq!(alpha(&paw()).unwrap(), 2);
        assert_eq!(omega(&paw()).unwrap(), 3);
        assert_eq!(chi(&complete(4)).unwrap(), 4);
        assert_eq!(chi(&cycle(5)).unwrap(), 3);
        assert_eq!(chi(&empty(3)).unwrap(), 1);
        assert_eq!(chi(&empty(0)).unwrap(), 0);
        for g in [paw(), cycle(7), complete(5), path(6)] {
            for p in [alpha_exact(&g), omega_exact(&g), chi_exact(&g)] {
                p.unwrap().validate(&g).unwrap();
            }
        }
    }

    #[test]
    fn petersen_chi() {
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5).unwrap();
            g.add_edge(i, i + 5).unwrap();
            g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
        }
        assert_eq!(chi(&g).unwrap(), 3);
        assert_eq!(alpha(&g).unwrap(), 4);
        assert_eq!(omega(&g).unwrap(), 2);
    }

    #[test]
    fn bipartite_routines() {
        for (g, mu, a) in [
            (cycle(4), 2, 2),
            (path(4), 2, 2),
            (star(3), 1, 3),
            (path(5), 2, 3),
        ] {
            let cert = recognize_bipartite(&g);
            let m = mu_bipartite(&g, &cert).unwrap();
            m.validate(&g).unwrap();
            assert_eq!(m.value, mu);
            let al = alpha_bipartite(&g, &cert).unwrap();
            al.validate(&g).unwrap();
            assert_eq!(al.value, a);
            let t = tau_from_alpha(&g, &al).unwrap();
            t.validate(&g).unwrap();
            assert_eq!(t.value, mu);
        }
    }

    #[test]
    fn chordal_routine() {
        for (g, a) in [(complete(4), 1), (path(4), 2), (paw(), 2), (diamond(), 2)] {
            let cert = recognize_chordal(&g);
            assert_eq!(alpha_chordal(&g, &cert).unwrap().value, a);
        }
    }

    #[test]
    fn tau_examples() {
        for (g, t) in [(cycle(4), 2), (complete(4), 3), (star(3), 1)] {
            let a = alpha_exact(&g).unwrap();
            assert_eq!(tau_from_alpha(&g, &a).unwrap().value, t);
        }
    }

    #[test]
    fn wrong_certificates_are_rejected() {
        let g = cycle(4);
        let bogus = ClassCertificate::Bipartition {
            left: [0, 1].into_iter().collect(),
            right: [2, 3].into_iter().collect(),
        };
        assert!(mu_bipartite(&g, &bogus).is_err());
        assert!(alpha_chordal(&g, &recognize_bipartite(&g)).is_err());
    }

    #[test]
    fn capacity_is_reported() {
        let g = path(40);
        assert!(chi_exact(&g).unwrap_err().is_capacity());
        // disconnected graphs are handled per component
        let many = (0..10).fold(Graph::new(0), |acc, _| acc.disjoint_union(&cycle(7)));
        assert_eq!(many.n(), 70);
        assert_eq!(alpha(&many).unwrap(), 30);
        assert_eq!(chi(&many).unwrap(), 3);
    }
}
