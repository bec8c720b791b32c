//! Simple undirected graphs on dense vertex indices `0..n`, together with the
//! three blocker operations (contraction, vertex deletion, edge deletion).
//!
//! Adjacency is stored as one bit row per vertex. Every derived graph comes
//! with an explicit vertex map so that witnesses can be translated back to the
//! host graph.

mod induced;
pub mod io;
pub mod iso;
pub mod named;
mod recognize;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use induced::contains_induced;
pub use recognize::{
    recognize_bipartite, recognize_chordal, recognize_cograph, recognize_complete_multipartite,
    ClassCertificate, Forbidden,
};

/// An unordered vertex pair, always stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(u: usize, v: usize) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn u(self) -> usize {
        self.0
    }

    pub fn v(self) -> usize {
        self.1
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.0, self.1)
    }

    pub fn other(self, x: usize) -> usize {
        if x == self.0 {
            self.1
        } else {
            self.0
        }
    }
}

impl From<(usize, usize)> for Edge {
    fn from((u, v): (usize, usize)) -> Self {
        Edge::new(u, v)
    }
}

impl From<Edge> for (usize, usize) {
    fn from(e: Edge) -> Self {
        (e.0, e.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// A set of edges of some host graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(BTreeSet<Edge>);

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, e: Edge) -> bool {
        self.0.insert(e)
    }

    pub fn remove(&mut self, e: &Edge) -> bool {
        self.0.remove(e)
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.0.contains(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.iter().copied()
    }

    /// V(S): every vertex that is an endpoint of some edge in the set.
    pub fn vertices(&self) -> VertexSet {
        self.iter().flat_map(|e| [e.0, e.1]).collect()
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        EdgeSet(iter.into_iter().collect())
    }
}

impl Extend<Edge> for EdgeSet {
    fn extend<I: IntoIterator<Item = Edge>>(&mut self, iter: I) {
        self.0.extend(iter);
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = Edge;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, Edge>>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// A set of vertex indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: usize) -> bool {
        self.0.remove(&v)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().copied().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl Extend<usize> for VertexSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        self.0.extend(iter);
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, usize>>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Undirected simple graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
            m: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<Edge>,
    {
        let mut g = Graph::new(n);
        for e in edges {
            let e = e.into();
            g.add_edge(e.0, e.1)?;
        }
        Ok(g)
    }

    /// Adds `uv`; returns false if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Ok(false);
        }
        self.set(u, v, true);
        self.set(v, u, true);
        self.m += 1;
        Ok(true)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n || !self.has_edge(u, v) {
            return false;
        }
        self.set(u, v, false);
        self.set(v, u, false);
        self.m -= 1;
        true
    }

    fn set(&mut self, u: usize, v: usize, on: bool) {
        let w = &mut self.bits[u * self.words + v / 64];
        if on {
            *w |= 1 << (v % 64);
        } else {
            *w &= !(1 << (v % 64));
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn check_edge(&self, e: Edge) -> Result<()> {
        if e.0 < self.n && e.1 < self.n && self.has_edge(e.0, e.1) {
            Ok(())
        } else {
            Err(Error::InvalidEdge(e))
        }
    }

    pub fn check_edges(&self, s: &EdgeSet) -> Result<()> {
        s.iter().try_for_each(|e| self.check_edge(e))
    }

    pub fn check_vertices(&self, u: &VertexSet) -> Result<()> {
        u.iter().try_for_each(|v| self.check_vertex(v))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Neighbourhood of `v` as a single word; only valid for `n <= 64`.
    pub fn mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.bits[v * self.words]
    }

    /// All neighbourhood masks, or `None` when the graph has more than 64 vertices.
    pub fn masks(&self) -> Option<Vec<u64>> {
        (self.n <= 64).then(|| (0..self.n).map(|v| self.mask(v)).collect())
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| Edge(u, v))
        })
    }

    pub fn edge_list(&self) -> Vec<Edge> {
        self.edges().collect()
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges().collect()
    }

    pub fn vertex_set(&self) -> VertexSet {
        (0..self.n).collect()
    }

    pub fn is_independent(&self, vs: impl IntoIterator<Item = usize>) -> bool {
        let vs: Vec<usize> = vs.into_iter().collect();
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| !self.has_edge(a, b)))
    }

    pub fn is_clique(&self, vs: impl IntoIterator<Item = usize>) -> bool {
        let vs: Vec<usize> = vs.into_iter().collect();
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| a != b && self.has_edge(a, b)))
    }

    pub fn is_vertex_cover(&self, cover: &VertexSet) -> bool {
        self.edges()
            .all(|e| cover.contains(e.0) || cover.contains(e.1))
    }

    pub fn complement(&self) -> Graph {
        let mut c = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    c.set(u, v, true);
                    c.set(v, u, true);
                    c.m += 1;
                }
            }
        }
        c
    }

    /// Induced subgraph on `vs`, with vertex `vs[i]` becoming `i`.
    pub fn induced(&self, vs: &[usize]) -> Graph {
        let mut h = Graph::new(vs.len());
        for (i, &a) in vs.iter().enumerate() {
            for (j, &b) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    h.set(i, j, true);
                    h.set(j, i, true);
                    h.m += 1;
                }
            }
        }
        h
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// G/S: one vertex per connected component of G|_S, adjacent iff the
    /// components are at distance one in G.
    pub fn contract_edges(&self, s: &EdgeSet) -> Result<Contraction> {
        self.check_edges(s)?;
        let mut dsu = Dsu::new(self.n);
        for e in s {
            dsu.union(e.0, e.1);
        }
        let mut component_of = vec![usize::MAX; self.n];
        let mut components: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.n {
            let r = dsu.find(v);
            if component_of[r] == usize::MAX {
                component_of[r] = components.len();
                components.push(Vec::new());
            }
            let c = component_of[r];
            component_of[v] = c;
            components[c].push(v);
        }
        let mut graph = Graph::new(components.len());
        for e in self.edges() {
            let (a, b) = (component_of[e.0], component_of[e.1]);
            if a != b {
                graph.add_edge(a, b)?;
            }
        }
        Ok(Contraction {
            graph,
            component_of,
            components,
        })
    }

    /// G−U, with the surviving vertices renumbered in increasing order.
    pub fn delete_vertices(&self, u: &VertexSet) -> Result<VertexDeletion> {
        self.check_vertices(u)?;
        let old_index: Vec<usize> = (0..self.n).filter(|&v| !u.contains(v)).collect();
        let mut new_index = vec![None; self.n];
        for (i, &v) in old_index.iter().enumerate() {
            new_index[v] = Some(i);
        }
        Ok(VertexDeletion {
            graph: self.induced(&old_index),
            new_index,
            old_index,
        })
    }

    /// G−S on the same vertex set.
    pub fn delete_edges(&self, s: &EdgeSet) -> Result<Graph> {
        self.check_edges(s)?;
        let mut g = self.clone();
        for e in s {
            g.remove_edge(e.0, e.1);
        }
        Ok(g)
    }

    /// G|_S: same vertex set, edge set exactly `s`.
    pub fn restriction(&self, s: &EdgeSet) -> Result<Graph> {
        self.check_edges(s)?;
        Graph::from_edges(self.n, s.iter())
    }

    pub fn is_forest(&self) -> bool {
        let mut dsu = Dsu::new(self.n);
        self.edges().all(|e| dsu.union(e.0, e.1))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for e in self.edges() {
            g.add_edge(e.0, e.1).expect("in range");
        }
        for e in other.edges() {
            g.add_edge(e.0 + self.n, e.1 + self.n).expect("in range");
        }
        g
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v).expect("in range");
            }
        }
        g
    }
}

/// Result of [`Graph::contract_edges`].
#[derive(Debug, Clone)]
pub struct Contraction {
    pub graph: Graph,
    /// Original vertex -> contracted vertex.
    pub component_of: Vec<usize>,
    /// Contracted vertex -> original vertices (sorted).
    pub components: Vec<Vec<usize>>,
}

/// Result of [`Graph::delete_vertices`].
#[derive(Debug, Clone)]
pub struct VertexDeletion {
    pub graph: Graph,
    pub new_index: Vec<Option<usize>>,
    pub old_index: Vec<usize>,
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}
