//! Hardness constructions as gadget builders, with solution transfer in both
//! directions.
//!
//! * `vc`: vertex cover in triangle-free graphs to the ω contraction blocker.
//! * `chordal`: weighted positive 2-SAT to the α contraction and vertex
//!   deletion blockers on chordal graphs.
//! * `mss`: minimum sum of squares to monochromatic edges on complete
//!   multipartite graphs.

mod chordal;
mod instances;
mod mss;
mod vc;

use serde::{Deserialize, Serialize};

pub use chordal::{
    assignment_to_contraction_set, assignment_to_deletion_set, build_chordal_gadget,
    contraction_set_to_assignment, deletion_set_to_assignment, ChordalGadget, VariableGadget,
};
pub use instances::{parse_mss, parse_sat, write_mss, write_sat, MssInstance, SatInstance};
pub use mss::{build_mss_gadget, colouring_to_partition, partition_to_colouring, MssGadget};
pub use vc::{build_vc_gadget, contraction_set_to_vc, vc_to_contraction_set, VcGadget};

/// Labels of a gadget's vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "gadget", rename_all = "kebab-case")]
pub enum GadgetMap {
    Vc(VcGadget),
    Chordal(ChordalGadget),
    Mss(MssGadget),
}

impl GadgetMap {
    /// Every vertex of the produced graph, grouped by label.
    pub fn label_groups(&self) -> Vec<Vec<usize>> {
        match self {
            GadgetMap::Vc(g) => vec![(0..g.original_n).collect(), vec![g.w]],
            GadgetMap::Chordal(g) => {
                let mut out: Vec<Vec<usize>> = g
                    .variables
                    .iter()
                    .flat_map(|x| [vec![x.v], x.clique.clone()])
                    .collect();
                out.push(g.clause_vertices.clone());
                out
            }
            GadgetMap::Mss(g) => g.parts.clone(),
        }
    }

    /// Whether the labels partition `0..n`.
    pub fn partitions(&self, n: usize) -> bool {
        let mut seen = vec![false; n];
        for v in self.label_groups().into_iter().flatten() {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        seen.into_iter().all(|b| b)
    }
}
