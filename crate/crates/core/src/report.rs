//! Machine-readable run reports and their independent re-verification.
//!
//! `verify` only trusts graph-core and the exact parameter routines: every
//! claimed value is recomputed from the graph and the reported witness.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bipartite::Route;
use crate::blocker::{apply, evaluate, BlockerSet, Operation};
use crate::cotree::Cotree;
use crate::error::{Error, Result};
use crate::graph::io::{parse_graph, write_graph};
use crate::graph::iso::are_isomorphic;
use crate::graph::{EdgeSet, Graph, VertexSet};
use crate::mono::{count_monochromatic_edges, mono_to_edge_deletion_witness, Colouring};
use crate::oracle::GraphClass;
use crate::params::{
    alpha_exact, chi, chi_exact, mu_bipartite, omega_exact, ParameterKind, ParameterValue,
};
use crate::reductions::{
    build_chordal_gadget, build_mss_gadget, build_vc_gadget, parse_mss, parse_sat, GadgetMap,
};

pub fn digest_text(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// SHA-256 of the canonical text form.
pub fn graph_digest(g: &Graph) -> String {
    digest_text(&write_graph(g))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub subcommand: String,
    /// Digest of the canonical input (graph or instance text); absent when
    /// there is no input file.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input_digest: Option<String>,
    pub wall_time_ms: f64,
    #[serde(flatten)]
    pub body: ReportBody,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "report", rename_all = "kebab-case")]
pub enum ReportBody {
    Parameter(ParameterReport),
    Cotree(CotreeReport),
    Blocker(BlockerReport),
    Mono(MonoReport),
    Reduction(ReductionReport),
    Catalogue(CatalogueReport),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParameterReport {
    pub class: String,
    #[serde(flatten)]
    pub value: ParameterValue,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CotreeReport {
    pub cotree: String,
    pub chi: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlockerReport {
    pub operation: Operation,
    pub parameter: ParameterKind,
    /// `bipartite` or `oracle`.
    pub solver: String,
    pub k: usize,
    pub d: usize,
    pub answer: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_edges: Option<EdgeSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_vertices: Option<VertexSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minimal: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub route: Option<Route>,
    /// `<parameter>_before` and, for yes answers, `<parameter>_after`.
    #[serde(flatten)]
    pub values: BTreeMap<String, usize>,
}

impl BlockerReport {
    pub fn before_key(&self) -> String {
        format!("{}_before", self.parameter)
    }

    pub fn after_key(&self) -> String {
        format!("{}_after", self.parameter)
    }

    pub fn before(&self) -> Option<usize> {
        self.values.get(&self.before_key()).copied()
    }

    pub fn after(&self) -> Option<usize> {
        self.values.get(&self.after_key()).copied()
    }

    pub fn set_values(&mut self, before: usize, after: Option<usize>) {
        self.values.insert(self.before_key(), before);
        if let Some(a) = after {
            self.values.insert(self.after_key(), a);
        }
    }

    pub fn witness(&self) -> Option<BlockerSet> {
        match (&self.witness_edges, &self.witness_vertices) {
            (Some(e), None) => Some(BlockerSet::Edges(e.clone())),
            (None, Some(v)) => Some(BlockerSet::Vertices(v.clone())),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonoReport {
    /// `fixed-h` or `deficiency`.
    pub mode: String,
    /// Palette size actually allowed.
    pub h: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    pub chi: usize,
    pub min_mono_edges: usize,
    pub colouring: Vec<usize>,
    pub deleted_edges: EdgeSet,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReductionReport {
    /// `vc2cb`, `sat2chordal` or `mss2mono`.
    pub reduction: String,
    /// Canonical source instance text.
    pub instance: String,
    /// Budget carried over to the target problem.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    /// The gadget graph in the plain graph format.
    pub graph: String,
    pub gadget: GadgetMap,
    /// ½J − D, exact, for the sum-of-squares gadget.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogueReport {
    pub class: GraphClass,
    pub n: usize,
    pub seed: u64,
    pub count: usize,
    pub graphs: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub ok: bool,
    pub problems: Vec<String>,
}

impl Verdict {
    fn check(&mut self, cond: bool, msg: impl FnOnce() -> String) {
        if !cond {
            self.problems.push(msg());
        }
    }
}

/// Re-checks a report. `graph` is the input graph (for reductions, the
/// gadget graph); catalogue reports need none.
pub fn verify(report: &RunReport, graph: Option<&Graph>) -> Result<Verdict> {
    let mut v = Verdict::default();
    let need_graph =
        || graph.ok_or_else(|| Error::precondition("this report needs a graph to verify against"));
    match &report.body {
        ReportBody::Catalogue(c) => verify_catalogue(c, &mut v)?,
        ReportBody::Reduction(r) => {
            let digest = digest_text(&r.instance);
            v.check(
                report.input_digest.as_deref() == Some(digest.as_str()),
                || "input digest does not match the instance text".into(),
            );
            verify_reduction(r, need_graph()?, &mut v)?
        }
        body => {
            let g = need_graph()?;
            let digest = graph_digest(g);
            v.check(
                report.input_digest.as_deref() == Some(digest.as_str()),
                || {
                    format!(
                        "input digest {:?} does not match the graph ({digest})",
                        report.input_digest
                    )
                },
            );
            match body {
                ReportBody::Parameter(p) => verify_parameter(p, g, &mut v)?,
                ReportBody::Cotree(c) => verify_cotree(c, g, &mut v)?,
                ReportBody::Blocker(b) => verify_blocker(b, g, &mut v)?,
                ReportBody::Mono(m) => verify_mono(m, g, &mut v)?,
                _ => unreachable!(),
            }
        }
    }
    v.ok = v.problems.is_empty();
    Ok(v)
}

fn verify_parameter(p: &ParameterReport, g: &Graph, v: &mut Verdict) -> Result<()> {
    if let Err(e) = p.value.validate(g) {
        v.problems.push(format!("witness rejected: {e}"));
    }
    let exact = match p.value.kind {
        ParameterKind::Alpha => alpha_exact(g)?.value,
        ParameterKind::Omega => omega_exact(g)?.value,
        ParameterKind::Chi => chi_exact(g)?.value,
        ParameterKind::Tau => g.n() - alpha_exact(g)?.value,
        ParameterKind::Mu => mu_bipartite(g, &crate::bipartite::bipartition_certificate(g)?)?.value,
    };
    v.check(exact == p.value.value, || {
        format!(
            "{} is {exact}, report claims {}",
            p.value.kind, p.value.value
        )
    });
    Ok(())
}

fn verify_cotree(c: &CotreeReport, g: &Graph, v: &mut Verdict) -> Result<()> {
    match c.cotree.parse::<Cotree>() {
        Ok(t) => {
            v.check(t.realize() == *g, || {
                "cotree does not denote the graph".into()
            });
            let root_chi = t.stats().chi[t.root()];
            v.check(root_chi == c.chi, || {
                format!("cotree gives χ = {root_chi}, report claims {}", c.chi)
            });
        }
        Err(e) => v.problems.push(format!("cotree does not parse: {e}")),
    }
    Ok(())
}

fn verify_blocker(b: &BlockerReport, g: &Graph, v: &mut Verdict) -> Result<()> {
    let before = evaluate(g, b.parameter)?;
    v.check(b.before() == Some(before), || {
        format!(
            "{} is {before}, report claims {:?}",
            b.before_key(),
            b.before()
        )
    });
    let witness = b.witness();
    if !b.answer {
        v.check(witness.is_none(), || "a no answer carries a witness".into());
        return Ok(());
    }
    let Some(w) = witness else {
        v.problems
            .push("yes answer without exactly one witness set".into());
        return Ok(());
    };
    v.check(w.len() <= b.k, || {
        format!("witness has {} elements, budget is {}", w.len(), b.k)
    });
    let kind_ok = matches!(
        (&w, b.operation),
        (BlockerSet::Vertices(_), Operation::DeleteVertices)
            | (
                BlockerSet::Edges(_),
                Operation::Contract | Operation::DeleteEdges
            )
    );
    if !kind_ok {
        v.problems
            .push(format!("witness kind does not fit {}", b.operation));
        return Ok(());
    }
    match apply(g, b.operation, &w) {
        Ok(h) => {
            let after = evaluate(&h, b.parameter)?;
            v.check(b.after() == Some(after), || {
                format!(
                    "{} is {after}, report claims {:?}",
                    b.after_key(),
                    b.after()
                )
            });
            v.check(after + b.d <= before, || {
                format!(
                    "{} drops from {before} to {after}, short of {}",
                    b.parameter, b.d
                )
            });
        }
        Err(e) => v.problems.push(format!("witness does not apply: {e}")),
    }
    Ok(())
}

fn verify_mono(m: &MonoReport, g: &Graph, v: &mut Verdict) -> Result<()> {
    let actual_chi = chi(g)?;
    v.check(actual_chi == m.chi, || {
        format!("χ is {actual_chi}, report claims {}", m.chi)
    });
    match m.mode.as_str() {
        "deficiency" => {
            let d = m.d.unwrap_or(0);
            v.check(actual_chi >= d && m.h == actual_chi - d, || {
                format!("palette {} is not χ − d = {actual_chi} − {d}", m.h)
            });
        }
        "fixed-h" => {}
        other => v.problems.push(format!("unknown mode `{other}`")),
    }
    let c = match Colouring::new(m.colouring.clone(), m.h) {
        Ok(c) => c,
        Err(e) => {
            v.problems.push(format!("colouring rejected: {e}"));
            return Ok(());
        }
    };
    match count_monochromatic_edges(g, &c) {
        Ok(count) => {
            v.check(count == m.min_mono_edges, || {
                format!(
                    "colouring has {count} monochromatic edges, report claims {}",
                    m.min_mono_edges
                )
            });
            let deleted = mono_to_edge_deletion_witness(g, &c)?;
            v.check(deleted == m.deleted_edges, || {
                "deleted edges are not the monochromatic edges".into()
            });
        }
        Err(e) => v.problems.push(format!("colouring rejected: {e}")),
    }
    Ok(())
}

fn verify_reduction(r: &ReductionReport, g: &Graph, v: &mut Verdict) -> Result<()> {
    let reported = parse_graph(&r.graph)?;
    v.check(reported == *g, || {
        "graph file differs from the gadget in the report".into()
    });
    let (built, map) = match r.reduction.as_str() {
        "vc2cb" => {
            let (h, gm) = build_vc_gadget(&parse_graph(&r.instance)?)?;
            (h, GadgetMap::Vc(gm))
        }
        "sat2chordal" => {
            let (h, gm) = build_chordal_gadget(&parse_sat(&r.instance)?)?;
            (h, GadgetMap::Chordal(gm))
        }
        "mss2mono" => {
            let (h, gm) = build_mss_gadget(&parse_mss(&r.instance)?)?;
            (h, GadgetMap::Mss(gm))
        }
        other => {
            v.problems.push(format!("unknown reduction `{other}`"));
            return Ok(());
        }
    };
    v.check(built == *g, || {
        "rebuilding from the instance gives a different graph".into()
    });
    v.check(map == r.gadget, || {
        "rebuilding from the instance gives a different gadget map".into()
    });
    v.check(r.gadget.partitions(g.n()), || {
        "gadget labels do not partition the vertices".into()
    });
    Ok(())
}

fn verify_catalogue(c: &CatalogueReport, v: &mut Verdict) -> Result<()> {
    v.check(c.count == c.graphs.len(), || {
        format!("count {} but {} graphs listed", c.count, c.graphs.len())
    });
    let mut seen: Vec<Graph> = Vec::new();
    for (i, text) in c.graphs.iter().enumerate() {
        let g = match parse_graph(text) {
            Ok(g) => g,
            Err(e) => {
                v.problems.push(format!("graph {i} does not parse: {e}"));
                continue;
            }
        };
        v.check(g.n() <= c.n && g.n() >= 1, || {
            format!("graph {i} has {} vertices", g.n())
        });
        v.check(g.is_connected(), || format!("graph {i} is disconnected"));
        v.check(c.class.contains(&g), || {
            format!("graph {i} is not {}", c.class)
        });
        v.check(!seen.iter().any(|h| are_isomorphic(h, &g)), || {
            format!("graph {i} repeats an earlier one")
        });
        seen.push(g);
    }
    Ok(())
}
