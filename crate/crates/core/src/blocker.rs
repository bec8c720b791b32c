//! Shared vocabulary for blocker problems: which operation, which parameter,
//! and how a candidate set is applied and checked.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, VertexSet};
use crate::params::{self, ParameterKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Operation {
    Contract,
    DeleteVertices,
    DeleteEdges,
}

impl Operation {
    pub fn name(self) -> &'static str {
        match self {
            Operation::Contract => "contract",
            Operation::DeleteVertices => "delete-vertices",
            Operation::DeleteEdges => "delete-edges",
        }
    }

    pub fn acts_on_edges(self) -> bool {
        !matches!(self, Operation::DeleteVertices)
    }

    /// Whether enlarging a successful set keeps it successful.
    pub fn is_monotone_for(self, param: ParameterKind) -> bool {
        match self {
            Operation::DeleteVertices => true,
            Operation::DeleteEdges => matches!(param, ParameterKind::Omega | ParameterKind::Chi),
            Operation::Contract => param == ParameterKind::Alpha,
        }
    }
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Operation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "contract" => Ok(Operation::Contract),
            "delete-vertices" => Ok(Operation::DeleteVertices),
            "delete-edges" => Ok(Operation::DeleteEdges),
            _ => Err(Error::precondition(format!("unknown operation `{s}`"))),
        }
    }
}

/// A set of edges or vertices, depending on the operation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockerSet {
    Edges(EdgeSet),
    Vertices(VertexSet),
}

impl BlockerSet {
    pub fn len(&self) -> usize {
        match self {
            BlockerSet::Edges(s) => s.len(),
            BlockerSet::Vertices(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The graph after applying `op` with `set`.
pub fn apply(g: &Graph, op: Operation, set: &BlockerSet) -> Result<Graph> {
    match (op, set) {
        (Operation::Contract, BlockerSet::Edges(s)) => Ok(g.contract_edges(s)?.graph),
        (Operation::DeleteEdges, BlockerSet::Edges(s)) => g.delete_edges(s),
        (Operation::DeleteVertices, BlockerSet::Vertices(u)) => Ok(g.delete_vertices(u)?.graph),
        _ => Err(Error::precondition(format!(
            "{op} needs a set of {}",
            if op.acts_on_edges() {
                "edges"
            } else {
                "vertices"
            }
        ))),
    }
}

/// α, ω or χ; μ and τ are not blocker targets.
pub fn evaluate(g: &Graph, param: ParameterKind) -> Result<usize> {
    match param {
        ParameterKind::Alpha => params::alpha(g),
        ParameterKind::Omega => params::omega(g),
        ParameterKind::Chi => params::chi(g),
        other => Err(Error::precondition(format!(
            "{other} is not a blocker parameter"
        ))),
    }
}

#[derive(Debug, Clone)]
pub struct BlockerQuery {
    pub graph: Graph,
    pub operation: Operation,
    pub parameter: ParameterKind,
    pub k: usize,
    pub d: usize,
}

impl BlockerQuery {
    pub fn new(
        graph: Graph,
        operation: Operation,
        parameter: ParameterKind,
        k: usize,
        d: usize,
    ) -> Result<Self> {
        if d == 0 {
            return Err(Error::precondition("d must be at least 1"));
        }
        evaluate(&crate::graph::named::empty(0), parameter)?;
        Ok(BlockerQuery {
            graph,
            operation,
            parameter,
            k,
            d,
        })
    }
}

/// Parameter values before and after, recomputed from scratch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Drop {
    pub before: usize,
    pub after: usize,
}

impl Drop {
    pub fn reaches(&self, d: usize) -> bool {
        self.after + d <= self.before
    }
}

pub fn measure_drop(
    g: &Graph,
    op: Operation,
    param: ParameterKind,
    set: &BlockerSet,
) -> Result<Drop> {
    let before = evaluate(g, param)?;
    let after = evaluate(&apply(g, op, set)?, param)?;
    Ok(Drop { before, after })
}

/// Checks a claimed witness: size at most `k` and a drop of at least `d`.
pub fn check_witness(
    g: &Graph,
    op: Operation,
    param: ParameterKind,
    k: usize,
    d: usize,
    set: &BlockerSet,
) -> Result<Drop> {
    if set.len() > k {
        return Err(Error::InvalidCertificate(format!(
            "witness has {} elements, budget is {k}",
            set.len()
        )));
    }
    let drop = measure_drop(g, op, param, set)?;
    if !drop.reaches(d) {
        return Err(Error::InvalidCertificate(format!(
            "{param} goes from {} to {}, short of a drop of {d}",
            drop.before, drop.after
        )));
    }
    Ok(drop)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::graph::Edge;

    #[test]
    fn apply_and_check() {
        let c4 = cycle(4);
        let s = BlockerSet::Edges([Edge::new(0, 1)].into_iter().collect());
        let drop = check_witness(&c4, Operation::Contract, ParameterKind::Alpha, 1, 1, &s).unwrap();
        assert_eq!(
            drop,
            Drop {
                before: 2,
                after: 1
            }
        );
        assert!(check_witness(&c4, Operation::Contract, ParameterKind::Alpha, 0, 1, &s).is_err());
        assert!(check_witness(&c4, Operation::Contract, ParameterKind::Alpha, 1, 2, &s).is_err());
        let wrong = BlockerSet::Vertices(VertexSet::new());
        assert!(apply(&c4, Operation::Contract, &wrong).is_err());
        assert!(evaluate(&c4, ParameterKind::Mu).is_err());
    }

    #[test]
    fn parse_operations() {
        for op in [
            Operation::Contract,
            Operation::DeleteVertices,
            Operation::DeleteEdges,
        ] {
            assert_eq!(op.name().parse::<Operation>().unwrap(), op);
        }
        assert!("shrink".parse::<Operation>().is_err());
    }
}
