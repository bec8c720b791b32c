//! Colourings that minimise monochromatic edges on cographs.
//!
//! An h-colouring with m monochromatic edges is the same thing as an edge set
//! of size m whose deletion leaves a graph of chromatic number at most h, so
//! the solvers here double as edge-deletion blockers for χ.

mod deficiency;
mod fixed;
pub mod matching;

use serde::{Deserialize, Serialize};

use crate::cotree::{Cotree, Node, Op};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, VertexSet};

pub use deficiency::min_mono_edges_deficiency;
pub use fixed::min_mono_edges_fixed_h;
pub use matching::{lambda_merge, lambda_val, ColourProfile, LambdaMatching};

/// A total map from vertices to colours `0..h`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Colouring {
    h: usize,
    colours: Vec<usize>,
}

impl Colouring {
    pub fn new(colours: Vec<usize>, h: usize) -> Result<Self> {
        if let Some((v, &c)) = colours.iter().enumerate().find(|(_, &c)| c >= h) {
            return Err(Error::precondition(format!(
                "vertex {v} has colour {c}, palette size is {h}"
            )));
        }
        Ok(Colouring { h, colours })
    }

    /// Palette is `0..=max colour`.
    pub fn from_vec(colours: Vec<usize>) -> Self {
        let h = colours.iter().max().map_or(0, |&m| m + 1);
        Colouring { h, colours }
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    pub fn colour(&self, v: usize) -> usize {
        self.colours[v]
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    /// Number of distinct colours actually used.
    pub fn used(&self) -> usize {
        crate::params::colours_used(&self.colours)
    }

    fn check_total(&self, g: &Graph) -> Result<()> {
        if self.colours.len() != g.n() {
            return Err(Error::precondition(format!(
                "colouring covers {} vertices, graph has {}",
                self.colours.len(),
                g.n()
            )));
        }
        Ok(())
    }
}

pub fn count_monochromatic_edges(g: &Graph, c: &Colouring) -> Result<usize> {
    c.check_total(g)?;
    Ok(g.edges()
        .filter(|e| c.colour(e.u()) == c.colour(e.v()))
        .count())
}

/// The monochromatic edges of `c`; `c` is a proper colouring of `g` minus them.
pub fn mono_to_edge_deletion_witness(g: &Graph, c: &Colouring) -> Result<EdgeSet> {
    c.check_total(g)?;
    Ok(g.edges()
        .filter(|e| c.colour(e.u()) == c.colour(e.v()))
        .collect())
}

/// Gives all of `i` the colour from `c(I)` that is rarest on the common
/// neighbourhood (smallest colour on ties). Never adds monochromatic edges.
pub fn recolour_module(g: &Graph, c: &Colouring, i: &VertexSet) -> Result<Colouring> {
    c.check_total(g)?;
    g.check_vertices(i)?;
    let Some(first) = i.iter().next() else {
        return Ok(c.clone());
    };
    if !g.is_independent(i.iter()) {
        return Err(Error::precondition("module is not independent"));
    }
    let nb: VertexSet = g.neighbors(first).collect();
    if i.iter()
        .any(|v| g.neighbors(v).collect::<VertexSet>() != nb)
    {
        return Err(Error::precondition(
            "module vertices have different neighbourhoods",
        ));
    }
    let mut counts = vec![0usize; c.h()];
    for w in &nb {
        counts[c.colour(w)] += 1;
    }
    let j = i
        .iter()
        .map(|v| c.colour(v))
        .min_by_key(|&col| (counts[col], col))
        .expect("non-empty module");
    let mut out = c.clone();
    for v in i {
        out.colours[v] = j;
    }
    Ok(out)
}

/// At every 0-node, the i-th largest colour classes of the two children share
/// a colour for every rank i up to χ of the node. Equal-size classes may be
/// ranked in any order and empty classes match anything.
pub fn has_property_one(t: &Cotree, c: &Colouring) -> bool {
    let h = c.h();
    let stats = t.stats();
    let sets = t.leaf_sets();
    let sizes = |p: usize| {
        let mut s = vec![0usize; h];
        for &v in &sets[p] {
            s[c.colour(v)] += 1;
        }
        s
    };
    for (p, nd) in t.nodes().iter().enumerate() {
        let Node::Inner {
            op: Op::Union,
            left,
            right,
        } = *nd
        else {
            continue;
        };
        let (cq, cr) = (sizes(left), sizes(right));
        let mut xq = cq.clone();
        let mut xr = cr.clone();
        xq.sort_unstable_by(|a, b| b.cmp(a));
        xr.sort_unstable_by(|a, b| b.cmp(a));
        let ranks = stats.chi[p].min(h);
        // Every rank with two non-empty classes needs its own colour whose
        // sizes on the two sides are exactly that pair.
        let mut need: Vec<(usize, usize)> = (0..ranks)
            .filter(|&i| xq[i] > 0 && xr[i] > 0)
            .map(|i| (xq[i], xr[i]))
            .collect();
        need.sort_unstable();
        let mut have: Vec<(usize, usize)> = (0..h).map(|col| (cq[col], cr[col])).collect();
        have.sort_unstable();
        let mut i = 0;
        while i < need.len() {
            let key = need[i];
            let want = need[i..].iter().take_while(|&&x| x == key).count();
            if have.iter().filter(|&&x| x == key).count() < want {
                return false;
            }
            i += want;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cotree::build_cotree;
    use crate::graph::named::*;
    use crate::params::chi;

    #[test]
    fn counting() {
        let c4 = cycle(4);
        let proper = Colouring::new(vec![0, 1, 0, 1], 2).unwrap();
        assert_eq!(count_monochromatic_edges(&c4, &proper).unwrap(), 0);
        let k4 = complete(4);
        let one = Colouring::new(vec![0; 4], 1).unwrap();
        assert_eq!(count_monochromatic_edges(&k4, &one).unwrap(), 6);
        let halves = Colouring::new(vec![0, 0, 1, 1], 2).unwrap();
        assert_eq!(count_monochromatic_edges(&k4, &halves).unwrap(), 2);
        // 2 is the best any 2-colouring of K4 can do
        let best = (0u32..16)
            .map(|m| {
                let c = Colouring::new((0..4).map(|v| (m >> v & 1) as usize).collect(), 2).unwrap();
                count_monochromatic_edges(&k4, &c).unwrap()
            })
            .min();
        assert_eq!(best, Some(2));
        assert!(count_monochromatic_edges(&k4, &Colouring::new(vec![0; 3], 1).unwrap()).is_err());
    }

    #[test]
    fn deletion_witness() {
        let k4 = complete(4);
        let halves = Colouring::new(vec![0, 0, 1, 1], 2).unwrap();
        let s = mono_to_edge_deletion_witness(&k4, &halves).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(chi(&k4.delete_edges(&s).unwrap()).unwrap(), 2);
        let proper = Colouring::new(vec![0, 1, 2, 3], 4).unwrap();
        assert!(mono_to_edge_deletion_witness(&k4, &proper)
            .unwrap()
            .is_empty());
        let one = Colouring::new(vec![0; 4], 1).unwrap();
        assert_eq!(
            mono_to_edge_deletion_witness(&k4, &one).unwrap(),
            k4.edge_set()
        );
    }

    #[test]
    fn recolouring_k22() {
        // sides {0,1} and {2,3}; left side split, right side all colour 0
        let g = complete_bipartite(2, 2);
        let c = Colouring::new(vec![0, 1, 0, 0], 2).unwrap();
        assert_eq!(count_monochromatic_edges(&g, &c).unwrap(), 2);
        let side: VertexSet = [0, 1].into_iter().collect();
        let r = recolour_module(&g, &c, &side).unwrap();
        assert_eq!(r.colours(), &[1, 1, 0, 0]);
        assert_eq!(count_monochromatic_edges(&g, &r).unwrap(), 0);
        // uniform module is left alone
        assert_eq!(recolour_module(&g, &r, &side).unwrap(), r);
        // singleton keeps its colour
        assert_eq!(
            recolour_module(&g, &c, &[1].into_iter().collect()).unwrap(),
            c
        );
        assert!(recolour_module(&g, &c, &[0, 2].into_iter().collect()).is_err());
    }

    #[test]
    fn property_one_examples() {
        let t = build_cotree(&empty(2)).unwrap();
        assert!(has_property_one(
            &t,
            &Colouring::new(vec![0, 0], 1).unwrap()
        ));
        // 2K2 as (0 (1 0 1) (1 2 3))
        let g = complete(2).disjoint_union(&complete(2));
        let t = build_cotree(&g).unwrap();
        assert!(has_property_one(
            &t,
            &Colouring::new(vec![0, 1, 1, 0], 2).unwrap()
        ));
        assert!(has_property_one(
            &t,
            &Colouring::new(vec![0, 1, 0, 1], 2).unwrap()
        ));
        // K2 + 3K1: largest class of K2 is colour 0 (size 1, tied with colour 1);
        // 3K1 puts 2 vertices on colour 2 and 1 on colour 1. Rank 1 needs a
        // colour of size 1 in K2 and 2 in 3K1: none exists.
        let g = complete(2).disjoint_union(&empty(3));
        let t = Cotree::combine(
            Op::Union,
            build_cotree(&complete(2)).unwrap(),
            shift(build_cotree(&empty(3)).unwrap(), 2),
        );
        assert_eq!(t.realize(), g);
        assert!(!has_property_one(
            &t,
            &Colouring::new(vec![0, 1, 2, 2, 1], 3).unwrap()
        ));
        assert!(has_property_one(
            &t,
            &Colouring::new(vec![0, 1, 1, 1, 1], 3).unwrap()
        ));
        // inside 3K1, (0 (0 2 3) 4) needs the pair {2,3} and {4} aligned too
        assert!(!has_property_one(
            &t,
            &Colouring::new(vec![0, 1, 1, 1, 0], 3).unwrap()
        ));
    }

    fn shift(t: Cotree, by: usize) -> Cotree {
        fn go(t: &Cotree, p: usize, by: usize) -> Cotree {
            match t.node(p) {
                Node::Leaf(v) => Cotree::leaf(v + by),
                Node::Inner { op, left, right } => {
                    Cotree::combine(op, go(t, left, by), go(t, right, by))
                }
            }
        }
        go(&t, t.root(), by)
    }
}
