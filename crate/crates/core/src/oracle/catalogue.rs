use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::iso::{are_isomorphic, invariant_hash};
use crate::graph::{
    recognize_bipartite, recognize_chordal, recognize_cograph, recognize_complete_multipartite,
    Graph,
};

pub const CATALOGUE_MAX_N: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphClass {
    Bipartite,
    Chordal,
    Cograph,
    CompleteMultipartite,
    #[serde(rename = "c3-free")]
    TriangleFree,
}

impl GraphClass {
    pub const ALL: [GraphClass; 5] = [
        GraphClass::Bipartite,
        GraphClass::Chordal,
        GraphClass::Cograph,
        GraphClass::CompleteMultipartite,
        GraphClass::TriangleFree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Bipartite => "bipartite",
            GraphClass::Chordal => "chordal",
            GraphClass::Cograph => "cograph",
            GraphClass::CompleteMultipartite => "complete-multipartite",
            GraphClass::TriangleFree => "c3-free",
        }
    }

    pub fn contains(self, g: &Graph) -> bool {
        match self {
            GraphClass::Bipartite => recognize_bipartite(g).is_member(),
            GraphClass::Chordal => recognize_chordal(g).is_member(),
            GraphClass::Cograph => recognize_cograph(g).is_member(),
            GraphClass::CompleteMultipartite => recognize_complete_multipartite(g).is_member(),
            GraphClass::TriangleFree => is_triangle_free(g),
        }
    }

    /// Cheap necessary condition on the neighbourhood of a newly added vertex.
    fn admits_neighbourhood(self, g: &Graph, nb: &[usize]) -> bool {
        match self {
            GraphClass::Bipartite | GraphClass::TriangleFree => {
                g.is_independent(nb.iter().copied())
            }
            GraphClass::Chordal => g.is_clique(nb.iter().copied()),
            GraphClass::Cograph | GraphClass::CompleteMultipartite => true,
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "triangle-free" => Ok(GraphClass::TriangleFree),
            _ => GraphClass::ALL
                .into_iter()
                .find(|c| c.name() == s)
                .ok_or_else(|| Error::precondition(format!("unknown graph class `{s}`"))),
        }
    }
}

fn is_triangle_free(g: &Graph) -> bool {
    g.edges()
        .all(|e| !g.neighbors(e.u()).any(|w| g.has_edge(w, e.v())))
}

/// Every connected member of `class` on 1..=`n_max` vertices, one per
/// isomorphism type, ordered by vertex count.
///
/// Level n is grown from level n − 1 by adding a vertex with every non-empty
/// neighbourhood. All five classes are closed under induced subgraphs and
/// every connected graph has a vertex whose removal keeps it connected, so
/// nothing is missed.
pub fn graph_catalogue(class: GraphClass, n_max: usize) -> Result<Vec<Graph>> {
    if n_max > CATALOGUE_MAX_N {
        return Err(Error::precondition(format!(
            "catalogue goes up to {CATALOGUE_MAX_N} vertices, asked for {n_max}"
        )));
    }
    let mut out = Vec::new();
    if n_max == 0 {
        return Ok(out);
    }
    let mut level = vec![Graph::new(1)];
    out.extend(level.iter().cloned());
    for n in 2..=n_max {
        let mut buckets: HashMap<u64, Vec<usize>> = HashMap::new();
        let mut next: Vec<Graph> = Vec::new();
        for base in &level {
            let old = n - 1;
            for mask in 1u32..(1 << old) {
                let nb: Vec<usize> = (0..old).filter(|&v| mask >> v & 1 == 1).collect();
                if !class.admits_neighbourhood(base, &nb) {
                    continue;
                }
                let mut g = Graph::new(n);
                for e in base.edges() {
                    g.add_edge(e.u(), e.v()).expect("copied edge is valid");
                }
                for &v in &nb {
                    g.add_edge(v, old).expect("new edge is valid");
                }
                if !class.contains(&g) {
                    continue;
                }
                let bucket = buckets.entry(invariant_hash(&g)).or_default();
                if bucket.iter().any(|&i| are_isomorphic(&next[i], &g)) {
                    continue;
                }
                bucket.push(next.len());
                next.push(g);
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    Ok(out)
}
