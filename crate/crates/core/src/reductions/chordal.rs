use serde::{Deserialize, Serialize};

use super::SatInstance;
use crate::error::{Error, Result};
use crate::graph::{recognize_chordal, Edge, EdgeSet, Graph, VertexSet};
use crate::params::{alpha, alpha_chordal};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariableGadget {
    /// v_x, complete to its clique.
    pub v: usize,
    /// K_x, a clique of 2k + 1 vertices.
    pub clique: Vec<usize>,
}

/// Vertex layout: variable x owns the block starting at x(2k + 2), with v_x
/// first; clause vertices follow, in clause order, and form a clique.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordalGadget {
    pub k: usize,
    pub variables: Vec<VariableGadget>,
    pub clauses: Vec<(usize, usize)>,
    pub clause_vertices: Vec<usize>,
}

impl ChordalGadget {
    pub fn vertex_count(&self) -> usize {
        self.variables.len() * (2 * self.k + 2) + self.clause_vertices.len()
    }

    /// Variable whose G_x holds `v`, if any.
    pub fn variable_of(&self, v: usize) -> Option<usize> {
        let block = 2 * self.k + 2;
        (v < self.variables.len() * block).then(|| v / block)
    }

    fn check_graph(&self, g: &Graph) -> Result<()> {
        if g.n() != self.vertex_count() {
            return Err(Error::precondition(
                "graph is not the gadget described by the map",
            ));
        }
        Ok(())
    }

    fn check_positives(&self, positives: &VertexSet) -> Result<()> {
        if let Some(x) = positives.iter().find(|&x| x >= self.variables.len()) {
            return Err(Error::precondition(format!("variable {x} does not exist")));
        }
        if positives.len() > self.k {
            return Err(Error::precondition(format!(
                "{} true variables, budget is {}",
                positives.len(),
                self.k
            )));
        }
        if let Some(&(x, y)) = self
            .clauses
            .iter()
            .find(|&&(x, y)| !positives.contains(x) && !positives.contains(y))
        {
            return Err(Error::precondition(format!(
                "clause ({x} ∨ {y}) is not satisfied"
            )));
        }
        Ok(())
    }
}

/// Chordal graph with α = |X| + 1 in which k contractions (or k vertex
/// deletions) can lower α exactly when the formula has a model with at most
/// k true variables. Chordality and α are re-checked.
pub fn build_chordal_gadget(sat: &SatInstance) -> Result<(Graph, ChordalGadget)> {
    let k = sat.k();
    let block = 2 * k + 2;
    let nx = sat.variables();
    let variables: Vec<VariableGadget> = (0..nx)
        .map(|x| VariableGadget {
            v: x * block,
            clique: (x * block + 1..(x + 1) * block).collect(),
        })
        .collect();
    let clause_vertices: Vec<usize> = (0..sat.clauses().len()).map(|c| nx * block + c).collect();
    let gm = ChordalGadget {
        k,
        variables,
        clauses: sat.clauses().to_vec(),
        clause_vertices,
    };
    let mut g = Graph::new(gm.vertex_count());
    for x in &gm.variables {
        let gx: Vec<usize> = std::iter::once(x.v)
            .chain(x.clique.iter().copied())
            .collect();
        for (i, &a) in gx.iter().enumerate() {
            for &b in &gx[i + 1..] {
                g.add_edge(a, b)?;
            }
        }
    }
    for (i, &a) in gm.clause_vertices.iter().enumerate() {
        for &b in &gm.clause_vertices[i + 1..] {
            g.add_edge(a, b)?;
        }
        let (x, y) = gm.clauses[i];
        for &t in gm.variables[x].clique.iter().chain(&gm.variables[y].clique) {
            g.add_edge(a, t)?;
        }
    }
    let cert = recognize_chordal(&g);
    if !cert.is_member() || alpha_chordal(&g, &cert)?.value != nx + 1 {
        return Err(Error::InvalidCertificate(
            "chordal gadget failed its own checks".into(),
        ));
    }
    Ok((g, gm))
}

/// One edge from v_x to the first vertex of K_x per true variable.
pub fn assignment_to_contraction_set(gm: &ChordalGadget, positives: &VertexSet) -> Result<EdgeSet> {
    gm.check_positives(positives)?;
    Ok(positives
        .iter()
        .map(|x| {
            let var = &gm.variables[x];
            Edge::new(var.v, var.clique[0])
        })
        .collect())
}

/// The vertices v_x of the true variables.
pub fn assignment_to_deletion_set(gm: &ChordalGadget, positives: &VertexSet) -> Result<VertexSet> {
    gm.check_positives(positives)?;
    Ok(positives.iter().map(|x| gm.variables[x].v).collect())
}

/// Every variable whose G_x meets an edge of `s` is true; a clause with
/// neither side touched gets its smaller variable.
pub fn contraction_set_to_assignment(
    gm: &ChordalGadget,
    g: &Graph,
    s: &EdgeSet,
) -> Result<VertexSet> {
    gm.check_graph(g)?;
    if s.len() > gm.k {
        return Err(Error::precondition(format!(
            "{} edges, budget is {}",
            s.len(),
            gm.k
        )));
    }
    if alpha(&g.contract_edges(s)?.graph)? >= alpha(g)? {
        return Err(Error::precondition(
            "edge set is not α-contraction-critical",
        ));
    }
    let mut touched = vec![false; gm.variables.len()];
    for v in s.vertices().iter() {
        if let Some(x) = gm.variable_of(v) {
            touched[x] = true;
        }
    }
    let mut out: VertexSet = (0..touched.len()).filter(|&x| touched[x]).collect();
    for &(x, y) in &gm.clauses {
        if !touched[x] && !touched[y] {
            out.insert(x);
        }
    }
    finish(gm, out, s.len())
}

/// True variables: x with v_x ∈ W, plus the smaller variable of each clause
/// whose vertex is in W.
pub fn deletion_set_to_assignment(
    gm: &ChordalGadget,
    g: &Graph,
    w: &VertexSet,
) -> Result<VertexSet> {
    gm.check_graph(g)?;
    if w.len() > gm.k {
        return Err(Error::precondition(format!(
            "{} vertices, budget is {}",
            w.len(),
            gm.k
        )));
    }
    if alpha(&g.delete_vertices(w)?.graph)? >= alpha(g)? {
        return Err(Error::precondition("vertex set is not α-deletion-critical"));
    }
    let mut out: VertexSet = (0..gm.variables.len())
        .filter(|&x| w.contains(gm.variables[x].v))
        .collect();
    for (c, &vc) in gm.clause_vertices.iter().enumerate() {
        if w.contains(vc) {
            out.insert(gm.clauses[c].0);
        }
    }
    finish(gm, out, w.len())
}

fn finish(gm: &ChordalGadget, out: VertexSet, bound: usize) -> Result<VertexSet> {
    let satisfied = gm
        .clauses
        .iter()
        .all(|&(x, y)| out.contains(x) || out.contains(y));
    if !satisfied || out.len() > bound {
        return Err(Error::InvalidCertificate(format!(
            "recovered assignment {:?} is not a model within {bound} true variables",
            out.to_vec()
        )));
    }
    Ok(out)
}
