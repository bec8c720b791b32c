use serde::{Deserialize, Serialize};

use super::MssInstance;
use crate::error::{Error, Result};
use crate::graph::{recognize_complete_multipartite, Graph, VertexSet};
use crate::mono::{recolour_module, Colouring};

/// Complete multipartite graph with one part `U_j` of `a_j` vertices per
/// integer, numbered consecutively.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MssGadget {
    pub parts: Vec<Vec<usize>>,
    pub h: usize,
    /// Σ a_j², that is 2D.
    pub sum_of_squares: u64,
    /// ½J − D, scaled by two so it stays exact: J − Σ a_j².
    pub target_twice: i128,
    /// floor(½J − D); `None` when negative, in which case no colouring qualifies.
    pub budget: Option<u64>,
}

impl MssGadget {
    /// ½J − D as text, e.g. `4.5`.
    pub fn target_display(&self) -> String {
        let t = self.target_twice;
        if t % 2 == 0 {
            format!("{}", t / 2)
        } else {
            format!("{}{}.5", if t < 0 { "-" } else { "" }, (t / 2).abs())
        }
    }

    fn vertex_count(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }
}

pub fn build_mss_gadget(mss: &MssInstance) -> Result<(Graph, MssGadget)> {
    let mut parts = Vec::with_capacity(mss.len());
    let mut next = 0usize;
    for &a in mss.a() {
        let a = a as usize;
        parts.push((next..next + a).collect::<Vec<_>>());
        next += a;
    }
    let mut owner = vec![0usize; next];
    for (j, p) in parts.iter().enumerate() {
        for &v in p {
            owner[v] = j;
        }
    }
    let mut g = Graph::new(next);
    for u in 0..next {
        for v in u + 1..next {
            if owner[u] != owner[v] {
                g.add_edge(u, v)?;
            }
        }
    }
    if !recognize_complete_multipartite(&g).is_member() {
        return Err(Error::InvalidCertificate(
            "sum-of-squares gadget failed its own checks".into(),
        ));
    }
    let sum_of_squares: u64 = mss.a().iter().map(|a| a * a).sum();
    let target_twice = mss.j() as i128 - sum_of_squares as i128;
    let budget = (target_twice >= 0).then_some((target_twice / 2) as u64);
    Ok((
        g,
        MssGadget {
            parts,
            h: mss.h(),
            sum_of_squares,
            target_twice,
            budget,
        },
    ))
}

/// Colours every vertex of `U_j` with the index of the group holding `j`.
pub fn partition_to_colouring(gm: &MssGadget, groups: &[Vec<usize>]) -> Result<Colouring> {
    if groups.len() > gm.h {
        return Err(Error::precondition(format!(
            "{} groups, at most {} allowed",
            groups.len(),
            gm.h
        )));
    }
    let mut colours = vec![usize::MAX; gm.vertex_count()];
    let mut seen = vec![false; gm.parts.len()];
    for (i, grp) in groups.iter().enumerate() {
        for &j in grp {
            if j >= gm.parts.len() || std::mem::replace(&mut seen[j], true) {
                return Err(Error::precondition(format!(
                    "index {j} is out of range or repeated"
                )));
            }
            for &v in &gm.parts[j] {
                colours[v] = i;
            }
        }
    }
    if seen.contains(&false) {
        return Err(Error::precondition("groups do not cover every index"));
    }
    Colouring::new(colours, gm.h)
}

/// Makes each `U_j` single-coloured (never adding monochromatic edges), then
/// groups the indices by colour. Always returns `h` groups, some maybe empty.
pub fn colouring_to_partition(
    gm: &MssGadget,
    g: &Graph,
    c: &Colouring,
) -> Result<(Colouring, Vec<Vec<usize>>)> {
    if g.n() != gm.vertex_count() {
        return Err(Error::precondition(
            "graph is not the gadget described by the map",
        ));
    }
    if c.h() > gm.h {
        return Err(Error::precondition(format!(
            "colouring uses a palette of {}, gadget allows {}",
            c.h(),
            gm.h
        )));
    }
    let mut c = Colouring::new(c.colours().to_vec(), gm.h)?;
    for p in &gm.parts {
        let module: VertexSet = p.iter().copied().collect();
        c = recolour_module(g, &c, &module)?;
    }
    let mut groups = vec![Vec::new(); gm.h];
    for (j, p) in gm.parts.iter().enumerate() {
        groups[c.colour(p[0])].push(j);
    }
    Ok((c, groups))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::iso::are_isomorphic;
    use crate::graph::named::*;
    use crate::mono::count_monochromatic_edges;

    #[test]
    fn gadget_examples() {
        let (g, gm) = build_mss_gadget(&MssInstance::new(vec![1, 1], 1, 4).unwrap()).unwrap();
        assert!(are_isomorphic(&g, &complete(2)));
        assert_eq!((gm.target_twice, gm.budget), (2, Some(1)));
        let (g, gm) = build_mss_gadget(&MssInstance::new(vec![2, 2], 2, 8).unwrap()).unwrap();
        assert!(are_isomorphic(&g, &complete_bipartite(2, 2)));
        assert_eq!(gm.budget, Some(0));
        let (g, gm) = build_mss_gadget(&MssInstance::new(vec![3], 1, 9).unwrap()).unwrap();
        assert_eq!(g.m(), 0);
        assert_eq!((gm.sum_of_squares, gm.budget), (9, Some(0)));
        let (_, gm) = build_mss_gadget(&MssInstance::new(vec![1, 2], 2, 6).unwrap()).unwrap();
        assert_eq!(
            (gm.target_twice, gm.budget, gm.target_display()),
            (1, Some(0), "0.5".to_string())
        );
        let (_, gm) = build_mss_gadget(&MssInstance::new(vec![3], 1, 2).unwrap()).unwrap();
        assert_eq!((gm.budget, gm.target_display()), (None, "-3.5".to_string()));
    }

    #[test]
    fn partition_counts() {
        let mss = MssInstance::new(vec![1, 1, 2], 2, 8).unwrap();
        let (g, gm) = build_mss_gadget(&mss).unwrap();
        let c = partition_to_colouring(&gm, &[vec![0, 1], vec![2]]).unwrap();
        assert_eq!(count_monochromatic_edges(&g, &c).unwrap(), 1);
        let c = partition_to_colouring(&gm, &[vec![0, 1, 2]]).unwrap();
        // ½(Σa)² − D = 8 − 3
        assert_eq!(count_monochromatic_edges(&g, &c).unwrap(), 5);
        assert!(partition_to_colouring(&gm, &[vec![0, 1]]).is_err());
    }

    #[test]
    fn colouring_back_to_partition() {
        let mss = MssInstance::new(vec![2, 2], 2, 8).unwrap();
        let (g, gm) = build_mss_gadget(&mss).unwrap();
        let proper = Colouring::new(vec![0, 0, 1, 1], 2).unwrap();
        let (_, groups) = colouring_to_partition(&gm, &g, &proper).unwrap();
        assert_eq!(mss.cost(&groups).unwrap(), 8);
        let mixed = Colouring::new(vec![0, 1, 0, 1], 2).unwrap();
        let before = count_monochromatic_edges(&g, &mixed).unwrap();
        let (norm, groups) = colouring_to_partition(&gm, &g, &mixed).unwrap();
        assert!(count_monochromatic_edges(&g, &norm).unwrap() <= before);
        assert_eq!(groups.iter().map(Vec::len).sum::<usize>(), 2);
    }
}
