//! Exhaustive ground truth: blocker search, colouring search, partition
//! search, criticality checks and a catalogue of small graphs.

mod catalogue;
mod colourings;

use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use crate::blocker::{apply, evaluate, BlockerQuery, BlockerSet, Operation};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::params::ParameterKind;
use crate::subsets::{binomial, first_combination};

pub use catalogue::{graph_catalogue, GraphClass};
pub use colourings::{brute_min_mono, brute_mss, for_each_colouring};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Budget and threading for exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of candidate sets (or colourings) a search may plan to visit.
    pub budget: u64,
    pub parallel: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            parallel: false,
        }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: u64) -> Self {
        SearchOptions {
            budget,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleAnswer {
    pub answer: bool,
    pub witness: Option<BlockerSet>,
    /// The witness has minimum size, hence is also inclusion-minimal.
    pub minimal: bool,
    pub before: usize,
    pub after: Option<usize>,
    /// Candidate sets actually evaluated.
    pub checks: u64,
}

struct Search<'a> {
    q: &'a BlockerQuery,
    ground: Vec<Ground>,
    target: usize,
    opts: SearchOptions,
    planned: u128,
    checks: AtomicU64,
}

#[derive(Clone, Copy)]
enum Ground {
    Edge(Edge),
    Vertex(usize),
}

impl Search<'_> {
    fn set_of(&self, idx: &[usize]) -> BlockerSet {
        match self.q.operation {
            Operation::DeleteVertices => BlockerSet::Vertices(
                idx.iter()
                    .map(|&i| match self.ground[i] {
                        Ground::Vertex(v) => v,
                        Ground::Edge(_) => unreachable!(),
                    })
                    .collect(),
            ),
            _ => BlockerSet::Edges(
                idx.iter()
                    .map(|&i| match self.ground[i] {
                        Ground::Edge(e) => e,
                        Ground::Vertex(_) => unreachable!(),
                    })
                    .collect(),
            ),
        }
    }

    fn value_after(&self, idx: &[usize]) -> Result<usize> {
        let g = apply(&self.q.graph, self.q.operation, &self.set_of(idx))?;
        evaluate(&g, self.q.parameter)
    }

    /// Lexicographically first working set of exactly `size` elements.
    fn probe(&mut self, size: usize) -> Result<Option<Vec<usize>>> {
        let cost = binomial(self.ground.len(), size);
        let planned = self.planned.saturating_add(cost);
        if planned > self.opts.budget as u128 {
            return Err(Error::CapacityExceeded {
                what: "oracle blocker search",
                needed: planned,
                limit: self.opts.budget as u128,
            });
        }
        self.planned = planned;
        let failure = std::sync::Mutex::new(None);
        let found = first_combination(self.ground.len(), size, self.opts.parallel, |idx| {
            self.checks.fetch_add(1, Ordering::Relaxed);
            match self.value_after(idx) {
                Ok(v) => v <= self.target,
                Err(e) => {
                    failure.lock().expect("poisoned").get_or_insert(e);
                    true
                }
            }
        });
        if let Some(e) = failure.into_inner().expect("poisoned") {
            return Err(e);
        }
        Ok(found)
    }
}

/// Exact decision with a minimum-size witness, first in size-then-lex order.
///
/// For monotone operation/parameter pairs only a few sizes are probed: the
/// search keeps an interval `(lo, hi]` known to contain the minimum witness
/// size and always probes whichever end has fewer subsets.
pub fn brute_blocker(q: &BlockerQuery, opts: SearchOptions) -> Result<OracleAnswer> {
    let g = &q.graph;
    let before = evaluate(g, q.parameter)?;
    let ground: Vec<Ground> = match q.operation {
        Operation::DeleteVertices => (0..g.n()).map(Ground::Vertex).collect(),
        _ => g.edges().map(Ground::Edge).collect(),
    };
    let no = |checks| OracleAnswer {
        answer: false,
        witness: None,
        minimal: false,
        before,
        after: None,
        checks,
    };
    if before < q.d {
        return Ok(no(0));
    }
    let mut s = Search {
        q,
        target: before - q.d,
        ground,
        opts,
        planned: 0,
        checks: AtomicU64::new(0),
    };
    let top = q.k.min(s.ground.len());
    let found = if q.operation.is_monotone_for(q.parameter) {
        monotone(&mut s, top)?
    } else {
        let mut hit = None;
        for size in 0..=top {
            if let Some(w) = s.probe(size)? {
                hit = Some(w);
                break;
            }
        }
        hit
    };
    let checks = s.checks.load(Ordering::Relaxed);
    Ok(match found {
        None => no(checks),
        Some(idx) => OracleAnswer {
            answer: true,
            after: Some(s.value_after(&idx)?),
            witness: Some(s.set_of(&idx)),
            minimal: true,
            before,
            checks,
        },
    })
}

fn monotone(s: &mut Search, top: usize) -> Result<Option<Vec<usize>>> {
    let m = s.ground.len();
    // The empty set never works since d ≥ 1.
    let mut lo = 0;
    let mut hi: Option<(usize, Vec<usize>)> = None;
    loop {
        let high = match &hi {
            Some((h, _)) if *h == lo + 1 => return Ok(hi.map(|(_, w)| w)),
            Some((h, _)) => h - 1,
            None if lo >= top => return Ok(None),
            None => top,
        };
        let low = lo + 1;
        let take_low = binomial(m, low) <= binomial(m, high);
        let size = if take_low { low } else { high };
        match s.probe(size)? {
            Some(w) if take_low => return Ok(Some(w)),
            Some(w) => hi = Some((size, w)),
            None if take_low || hi.is_some() => lo = size,
            None => return Ok(None),
        }
    }
}

/// `π(G ∘ S) < π(G)` for the given operation.
pub fn is_critical(
    g: &Graph,
    op: Operation,
    set: &BlockerSet,
    param: ParameterKind,
) -> Result<bool> {
    let after = evaluate(&apply(g, op, set)?, param)?;
    Ok(after < evaluate(g, param)?)
}

pub fn is_contraction_critical(
    g: &Graph,
    s: &crate::graph::EdgeSet,
    param: ParameterKind,
) -> Result<bool> {
    is_critical(g, Operation::Contract, &BlockerSet::Edges(s.clone()), param)
}

/// Largest set handed to a minimality check.
const MINIMALITY_LIMIT: usize = 24;

/// Critical, and no proper subset is. For monotone pairs it suffices to drop
/// one element at a time; otherwise every proper subset is tried.
pub fn is_minimal_critical(
    g: &Graph,
    op: Operation,
    set: &BlockerSet,
    param: ParameterKind,
) -> Result<bool> {
    if !is_critical(g, op, set, param)? {
        return Ok(false);
    }
    let items: Vec<Ground> = match set {
        BlockerSet::Edges(s) => s.iter().map(Ground::Edge).collect(),
        BlockerSet::Vertices(u) => u.iter().map(Ground::Vertex).collect(),
    };
    let n = items.len();
    if n > MINIMALITY_LIMIT {
        return Err(Error::CapacityExceeded {
            what: "minimality check",
            needed: n as u128,
            limit: MINIMALITY_LIMIT as u128,
        });
    }
    let subset = |mask: u32| -> BlockerSet {
        let chosen = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| items[i]);
        match set {
            BlockerSet::Edges(_) => BlockerSet::Edges(
                chosen
                    .map(|x| match x {
                        Ground::Edge(e) => e,
                        Ground::Vertex(_) => unreachable!(),
                    })
                    .collect(),
            ),
            BlockerSet::Vertices(_) => BlockerSet::Vertices(
                chosen
                    .map(|x| match x {
                        Ground::Vertex(v) => v,
                        Ground::Edge(_) => unreachable!(),
                    })
                    .collect(),
            ),
        }
    };
    let full = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let masks: Box<dyn Iterator<Item = u32>> = if op.is_monotone_for(param) {
        Box::new((0..n).map(move |i| full & !(1 << i)))
    } else {
        Box::new(0..full)
    };
    for mask in masks {
        if is_critical(g, op, &subset(mask), param)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_minimal_contraction_critical(
    g: &Graph,
    s: &crate::graph::EdgeSet,
    param: ParameterKind,
) -> Result<bool> {
    is_minimal_critical(g, Operation::Contract, &BlockerSet::Edges(s.clone()), param)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::graph::EdgeSet;

    fn run(g: Graph, op: Operation, p: ParameterKind, k: usize, d: usize) -> OracleAnswer {
        let q = BlockerQuery::new(g, op, p, k, d).unwrap();
        let a = brute_blocker(&q, SearchOptions::default()).unwrap();
        let par = brute_blocker(
            &q,
            SearchOptions {
                parallel: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(a.witness, par.witness);
        a
    }

    #[test]
    fn small_blockers() {
        assert!(!run(path(4), Operation::Contract, ParameterKind::Alpha, 1, 1).answer);
        let a = run(cycle(4), Operation::Contract, ParameterKind::Alpha, 1, 1);
        assert!(a.answer && a.minimal);
        assert_eq!(
            a.witness,
            Some(BlockerSet::Edges([Edge::new(0, 1)].into_iter().collect()))
        );
        assert_eq!(a.after, Some(1));
        let a = run(
            complete(3),
            Operation::DeleteVertices,
            ParameterKind::Omega,
            1,
            1,
        );
        assert_eq!(
            a.witness,
            Some(BlockerSet::Vertices([0].into_iter().collect()))
        );
        // {01, 23} also works on P4 but {01, 12} comes first
        let a = run(path(4), Operation::Contract, ParameterKind::Alpha, 3, 1);
        assert_eq!(
            a.witness,
            Some(BlockerSet::Edges(
                [Edge::new(0, 1), Edge::new(1, 2)].into_iter().collect()
            ))
        );
        // non-monotone: contracting can raise ω, deleting edges can raise α
        let a = run(path(3), Operation::Contract, ParameterKind::Omega, 2, 1);
        assert_eq!(
            a.witness,
            Some(BlockerSet::Edges(
                [Edge::new(0, 1), Edge::new(1, 2)].into_iter().collect()
            ))
        );
        assert!(!run(path(3), Operation::DeleteEdges, ParameterKind::Alpha, 2, 1).answer);
    }

    #[test]
    fn budget_is_enforced() {
        let q = BlockerQuery::new(
            complete(8),
            Operation::DeleteEdges,
            ParameterKind::Chi,
            10,
            7,
        )
        .unwrap();
        let e = brute_blocker(&q, SearchOptions::with_budget(100)).unwrap_err();
        assert!(e.is_capacity());
    }

    #[test]
    fn criticality() {
        let c4 = cycle(4);
        let one: EdgeSet = [Edge::new(0, 1)].into_iter().collect();
        assert!(is_contraction_critical(&c4, &one, ParameterKind::Alpha).unwrap());
        assert!(!is_contraction_critical(&c4, &EdgeSet::new(), ParameterKind::Alpha).unwrap());
        assert!(is_minimal_contraction_critical(&c4, &one, ParameterKind::Alpha).unwrap());
        let two: EdgeSet = [Edge::new(0, 1), Edge::new(1, 2)].into_iter().collect();
        assert!(is_contraction_critical(&c4, &two, ParameterKind::Alpha).unwrap());
        assert!(!is_minimal_contraction_critical(&c4, &two, ParameterKind::Alpha).unwrap());
        // P4: {01, 23} is minimal though neither edge alone is critical
        let p4 = path(4);
        let s: EdgeSet = [Edge::new(0, 1), Edge::new(2, 3)].into_iter().collect();
        assert!(is_minimal_contraction_critical(&p4, &s, ParameterKind::Alpha).unwrap());
        // ω under contraction is not monotone, so all subsets are walked
        let k3 = complete(3);
        let one: EdgeSet = [Edge::new(0, 1)].into_iter().collect();
        let two: EdgeSet = [Edge::new(0, 1), Edge::new(1, 2)].into_iter().collect();
        assert!(is_minimal_contraction_critical(&k3, &one, ParameterKind::Omega).unwrap());
        assert!(!is_minimal_contraction_critical(&k3, &two, ParameterKind::Omega).unwrap());
    }
}
