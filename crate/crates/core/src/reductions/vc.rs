use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::named::{complete, empty};
use crate::graph::{contains_induced, Edge, EdgeSet, Graph, VertexSet};
use crate::params::omega;

/// `g` plus a universal vertex `w = original_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VcGadget {
    pub original_n: usize,
    pub w: usize,
}

/// Adds a universal vertex to a triangle-free graph with at least one edge.
/// The result is (C₃+P₁)-free with ω = 3; both facts are re-checked.
pub fn build_vc_gadget(g: &Graph) -> Result<(Graph, VcGadget)> {
    if g.m() == 0 {
        return Err(Error::precondition(
            "vertex cover gadget needs at least one edge",
        ));
    }
    if let Some(t) = contains_induced(g, &complete(3)) {
        return Err(Error::precondition(format!(
            "graph has a triangle on {t:?}"
        )));
    }
    let w = g.n();
    let mut out = g.disjoint_union(&empty(1));
    for v in 0..w {
        out.add_edge(v, w)?;
    }
    let c3p1 = complete(3).disjoint_union(&empty(1));
    if contains_induced(&out, &c3p1).is_some() || omega(&out)? != 3 {
        return Err(Error::InvalidCertificate(
            "vertex cover gadget failed its own checks".into(),
        ));
    }
    Ok((out, VcGadget { original_n: w, w }))
}

/// `{vw : v ∈ cover}`; contracting it leaves G − cover plus `w`, so ω ≤ 2.
pub fn vc_to_contraction_set(gm: &VcGadget, g: &Graph, cover: &VertexSet) -> Result<EdgeSet> {
    check_original(gm, g)?;
    g.check_vertices(cover)?;
    if !g.is_vertex_cover(cover) {
        return Err(Error::precondition("vertex set is not a cover"));
    }
    Ok(cover.iter().map(|v| Edge::new(v, gm.w)).collect())
}

/// Reads a cover of size at most |S| off an ω-critical contraction set of the
/// gadget: each component of G′|_S gives all its vertices except `w`, or
/// except its largest vertex when it misses `w`.
pub fn contraction_set_to_vc(gm: &VcGadget, gadget: &Graph, s: &EdgeSet) -> Result<VertexSet> {
    if gadget.n() != gm.original_n + 1 {
        return Err(Error::precondition(
            "graph is not the gadget described by the map",
        ));
    }
    let after = omega(&gadget.contract_edges(s)?.graph)?;
    if after >= omega(gadget)? {
        return Err(Error::precondition(
            "edge set is not ω-contraction-critical",
        ));
    }
    let c = gadget.restriction(s)?;
    let mut cover = VertexSet::new();
    for comp in c.components() {
        let keep = if comp.contains(&gm.w) {
            gm.w
        } else {
            *comp.last().expect("non-empty component")
        };
        cover.extend(comp.into_iter().filter(|&v| v != keep));
    }
    let original = gadget.induced(&(0..gm.original_n).collect::<Vec<_>>());
    debug_assert!(original.is_vertex_cover(&cover) && cover.len() <= s.len());
    Ok(cover)
}

fn check_original(gm: &VcGadget, g: &Graph) -> Result<()> {
    if g.n() != gm.original_n {
        return Err(Error::precondition("graph is not the source of the gadget"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::iso::are_isomorphic;
    use crate::graph::named::*;

    #[test]
    fn gadget_shapes() {
        let (g, gm) = build_vc_gadget(&path(3)).unwrap();
        assert!(are_isomorphic(&g, &diamond()));
        assert_eq!(gm.w, 3);
        let (g, _) = build_vc_gadget(&path(2)).unwrap();
        assert!(are_isomorphic(&g, &complete(3)));
        let (g, _) = build_vc_gadget(&cycle(4)).unwrap();
        assert_eq!(g.m(), 8);
        assert!(build_vc_gadget(&complete(3)).is_err());
        assert!(build_vc_gadget(&empty(3)).is_err());
    }

    #[test]
    fn transfers_round_trip() {
        for (g, cover) in [
            (path(3), vec![1]),
            (path(2), vec![0]),
            (cycle(4), vec![0, 2]),
        ] {
            let cover: VertexSet = cover.into_iter().collect();
            let (gadget, gm) = build_vc_gadget(&g).unwrap();
            let s = vc_to_contraction_set(&gm, &g, &cover).unwrap();
            assert_eq!(s.len(), cover.len());
            assert_eq!(omega(&gadget.contract_edges(&s).unwrap().graph).unwrap(), 2);
            let back = contraction_set_to_vc(&gm, &gadget, &s).unwrap();
            assert!(g.is_vertex_cover(&back));
            assert!(back.len() <= s.len());
        }
    }

    #[test]
    fn non_critical_and_non_cover_rejected() {
        let g = path(3);
        let (gadget, gm) = build_vc_gadget(&g).unwrap();
        assert!(vc_to_contraction_set(&gm, &g, &[0].into_iter().collect()).is_err());
        let s: EdgeSet = [Edge::new(0, 3)].into_iter().collect();
        assert!(contraction_set_to_vc(&gm, &gadget, &s).is_err());
    }
}
