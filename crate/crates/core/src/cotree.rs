//! Binary cotrees for cographs.
//!
//! Nodes are stored children-before-parents, so a forward scan is a valid
//! bottom-up traversal and the root is always the last node.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{contains_induced, named, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Op {
    /// 0-node: disjoint union.
    Union,
    /// 1-node: join.
    Join,
}

impl Op {
    pub fn label(self) -> u8 {
        match self {
            Op::Union => 0,
            Op::Join => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Node {
    Leaf(usize),
    Inner { op: Op, left: usize, right: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cotree {
    nodes: Vec<Node>,
}

/// Per-node size and chromatic number, indexed like the cotree nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeStats {
    pub size: Vec<usize>,
    pub chi: Vec<usize>,
}

impl Cotree {
    pub fn leaf(v: usize) -> Self {
        Cotree {
            nodes: vec![Node::Leaf(v)],
        }
    }

    /// Combines two cotrees under a new root. Leaf labels must be disjoint
    /// for the result to be meaningful; [`Cotree::validate`] checks this.
    pub fn combine(op: Op, left: Cotree, right: Cotree) -> Self {
        let off = left.nodes.len();
        let mut nodes = left.nodes;
        let l_root = off - 1;
        nodes.extend(right.nodes.into_iter().map(|nd| match nd {
            Node::Leaf(v) => Node::Leaf(v),
            Node::Inner { op, left, right } => Node::Inner {
                op,
                left: left + off,
                right: right + off,
            },
        }));
        let r_root = nodes.len() - 1;
        nodes.push(Node::Inner {
            op,
            left: l_root,
            right: r_root,
        });
        Cotree { nodes }
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn node(&self, p: usize) -> Node {
        self.nodes[p]
    }

    /// Number of leaves, i.e. vertices of the denoted graph.
    pub fn vertex_count(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| matches!(n, Node::Leaf(_)))
            .count()
    }

    /// Leaves are exactly `0..n` once each and children precede parents.
    pub fn validate(&self) -> Result<()> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut has_parent = vec![false; self.nodes.len()];
        for (i, nd) in self.nodes.iter().enumerate() {
            match *nd {
                Node::Leaf(v) => {
                    if v >= n || std::mem::replace(&mut seen[v], true) {
                        return Err(Error::InvalidCertificate(format!(
                            "leaf label {v} invalid or repeated"
                        )));
                    }
                }
                Node::Inner { left, right, .. } => {
                    if left >= i || right >= i || left == right {
                        return Err(Error::InvalidCertificate(format!(
                            "node {i} has malformed children"
                        )));
                    }
                    for c in [left, right] {
                        if std::mem::replace(&mut has_parent[c], true) {
                            return Err(Error::InvalidCertificate(format!(
                                "node {c} has two parents"
                            )));
                        }
                    }
                }
            }
        }
        if has_parent.iter().filter(|&&p| !p).count() != 1 {
            return Err(Error::InvalidCertificate(
                "cotree is not a single tree".into(),
            ));
        }
        Ok(())
    }

    /// Vertices below each node, in leaf order.
    pub fn leaf_sets(&self) -> Vec<Vec<usize>> {
        let mut sets: Vec<Vec<usize>> = Vec::with_capacity(self.nodes.len());
        for nd in &self.nodes {
            let s = match *nd {
                Node::Leaf(v) => vec![v],
                Node::Inner { left, right, .. } => {
                    let mut s = sets[left].clone();
                    s.extend_from_slice(&sets[right]);
                    s
                }
            };
            sets.push(s);
        }
        sets
    }

    /// The cograph denoted by the tree.
    pub fn realize(&self) -> Graph {
        let sets = self.leaf_sets();
        let mut g = Graph::new(self.vertex_count());
        for nd in &self.nodes {
            if let Node::Inner {
                op: Op::Join,
                left,
                right,
            } = *nd
            {
                for &u in &sets[left] {
                    for &v in &sets[right] {
                        g.add_edge(u, v).expect("leaves are distinct vertices");
                    }
                }
            }
        }
        g
    }

    pub fn stats(&self) -> NodeStats {
        let mut size: Vec<usize> = Vec::with_capacity(self.nodes.len());
        let mut chi: Vec<usize> = Vec::with_capacity(self.nodes.len());
        for nd in &self.nodes {
            let (s, c) = match *nd {
                Node::Leaf(_) => (1, 1),
                Node::Inner { op, left, right } => (
                    size[left] + size[right],
                    match op {
                        Op::Union => chi[left].max(chi[right]),
                        Op::Join => chi[left] + chi[right],
                    },
                ),
            };
            size.push(s);
            chi.push(c);
        }
        NodeStats { size, chi }
    }

    fn fmt_node(&self, p: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.nodes[p] {
            Node::Leaf(v) => write!(f, "{v}"),
            Node::Inner { op, left, right } => {
                write!(f, "({} ", op.label())?;
                self.fmt_node(left, f)?;
                write!(f, " ")?;
                self.fmt_node(right, f)?;
                write!(f, ")")
            }
        }
    }
}

/// S-expression form, e.g. `(1 (0 0 1) 2)`.
impl fmt::Display for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_node(self.root(), f)
    }
}

impl std::str::FromStr for Cotree {
    type Err = Error;

    /// Parses the s-expression printed by `Display`, e.g. `(1 (0 0 2) 1)`.
    fn from_str(s: &str) -> Result<Self> {
        let spaced = s.replace('(', " ( ").replace(')', " ) ");
        let mut toks = spaced.split_whitespace().peekable();
        let t = parse_sexp(&mut toks)?;
        if let Some(extra) = toks.next() {
            return Err(Error::precondition(format!(
                "trailing `{extra}` after cotree"
            )));
        }
        t.validate()?;
        Ok(t)
    }
}

fn parse_sexp<'a>(toks: &mut std::iter::Peekable<impl Iterator<Item = &'a str>>) -> Result<Cotree> {
    let bad = |m: String| Error::precondition(format!("malformed cotree: {m}"));
    match toks.next() {
        Some("(") => {
            let op = match toks.next() {
                Some("0") => Op::Union,
                Some("1") => Op::Join,
                other => return Err(bad(format!("expected label 0 or 1, found {other:?}"))),
            };
            let left = parse_sexp(toks)?;
            let right = parse_sexp(toks)?;
            match toks.next() {
                Some(")") => Ok(Cotree::combine(op, left, right)),
                other => Err(bad(format!("expected `)`, found {other:?}"))),
            }
        }
        Some(tok) => tok
            .parse()
            .map(Cotree::leaf)
            .map_err(|_| bad(format!("`{tok}` is not a vertex"))),
        None => Err(bad("unexpected end".into())),
    }
}

pub fn build_cotree(g: &Graph) -> Result<Cotree> {
    if g.n() == 0 {
        return Err(Error::precondition("cotree of the empty graph"));
    }
    let mut nodes = Vec::with_capacity(2 * g.n() - 1);
    build(g, &(0..g.n()).collect::<Vec<_>>(), &mut nodes)?;
    Ok(Cotree { nodes })
}

pub fn realize_cotree(t: &Cotree) -> Graph {
    t.realize()
}

pub fn node_stats(t: &Cotree) -> NodeStats {
    t.stats()
}

/// Appends the subtree for `vs` and returns its root index.
fn build(g: &Graph, vs: &[usize], nodes: &mut Vec<Node>) -> Result<usize> {
    if vs.len() == 1 {
        nodes.push(Node::Leaf(vs[0]));
        return Ok(nodes.len() - 1);
    }
    let sub = g.induced(vs);
    let lift = |parts: Vec<Vec<usize>>| -> Vec<Vec<usize>> {
        parts
            .into_iter()
            .map(|p| p.into_iter().map(|i| vs[i]).collect())
            .collect()
    };
    let comps = sub.components();
    let (op, parts) = if comps.len() > 1 {
        (Op::Union, lift(comps))
    } else {
        let co = sub.complement().components();
        if co.len() > 1 {
            (Op::Join, lift(co))
        } else {
            let m = contains_induced(&sub, &named::path(4))
                .expect("prime graph on ≥2 vertices has an induced P4");
            return Err(Error::NotACograph([vs[m[0]], vs[m[1]], vs[m[2]], vs[m[3]]]));
        }
    };
    let mut acc = build(g, &parts[0], nodes)?;
    for part in &parts[1..] {
        let right = build(g, part, nodes)?;
        nodes.push(Node::Inner {
            op,
            left: acc,
            right,
        });
        acc = nodes.len() - 1;
    }
    Ok(acc)
}
