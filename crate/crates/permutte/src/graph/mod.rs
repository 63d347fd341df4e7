//! Graph domain types: bipartite graphs with explicit side assignment,
//! labeled multigraphs, the paper-specific graph families, canonical codes
//! for memoization, and spanning-tree machinery.

mod canon;
mod enumerate;
mod formats;
mod multigraph;

pub use canon::{bip_canonical_code, multigraph_canonical_code, CanonicalCode};
pub use enumerate::{
    all_bipartite_graphs, all_simple_graphs, connected_multigraphs, random_bipartite,
    random_connected_multigraph,
};
pub use formats::{parse_graph_auto, GraphDoc};
pub use multigraph::MultiGraph;

use std::collections::{BTreeMap, BTreeSet};

use crate::{Error, Result};

/// Which side of the bipartition a vertex belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// Bipartite graph with explicit side assignment. Simple: no parallel
/// edges, and every edge joins side A to side B. Vertex identifiers are
/// arbitrary but unique across both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipGraph {
    side_a: Vec<u32>,
    side_b: Vec<u32>,
    /// Normalized as (A-vertex, B-vertex).
    edges: BTreeSet<(u32, u32)>,
}

impl BipGraph {
    /// Validates and builds a bipartite graph. Edges may be given in either
    /// orientation; duplicates collapse (the edge set is a set).
    pub fn new(
        side_a: Vec<u32>,
        side_b: Vec<u32>,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &v in side_a.iter().chain(side_b.iter()) {
            if !seen.insert(v) {
                return Err(Error::DuplicateVertex(v));
            }
        }
        let a_set: BTreeSet<u32> = side_a.iter().copied().collect();
        let b_set: BTreeSet<u32> = side_b.iter().copied().collect();
        let mut normalized = BTreeSet::new();
        for (u, v) in edges {
            if !seen.contains(&u) {
                return Err(Error::UnknownVertex(u));
            }
            if !seen.contains(&v) {
                return Err(Error::UnknownVertex(v));
            }
            match (a_set.contains(&u), b_set.contains(&v)) {
                (true, true) => normalized.insert((u, v)),
                (false, false) => normalized.insert((v, u)),
                _ => return Err(Error::EdgeWithinSide(u, v)),
            };
        }
        Ok(BipGraph {
            side_a,
            side_b,
            edges: normalized,
        })
    }

    pub fn empty() -> Self {
        BipGraph {
            side_a: Vec::new(),
            side_b: Vec::new(),
            edges: BTreeSet::new(),
        }
    }

    /// All `a*b` cross edges; A = 1..=a, B = a+1..=a+b.
    pub fn complete_bipartite(a: u32, b: u32) -> Self {
        let side_a: Vec<u32> = (1..=a).collect();
        let side_b: Vec<u32> = (a + 1..=a + b).collect();
        let edges = side_a
            .iter()
            .flat_map(|&u| side_b.iter().map(move |&v| (u, v)))
            .collect();
        BipGraph {
            side_a,
            side_b,
            edges,
        }
    }

    /// K_{a,b} with c pendant vertices attached to c distinct B-vertices;
    /// sides have a+c and b vertices.
    pub fn habc(a: u32, b: u32, c: u32) -> Result<Self> {
        if a == 0 || b == 0 || c > b {
            return Err(Error::InvalidSpec);
        }
        let mut g = BipGraph::complete_bipartite(a, b);
        for k in 1..=c {
            let pendant = a + b + k;
            g.side_a.push(pendant);
            g.edges.insert((pendant, a + k));
        }
        Ok(g)
    }

    /// Path on n vertices 1..=n; odd ids on side A, even on side B.
    pub fn path(n: u32) -> Self {
        let side_a = (1..=n).filter(|v| v % 2 == 1).collect();
        let side_b = (1..=n).filter(|v| v % 2 == 0).collect();
        let edges = (1..n)
            .map(|v| if v % 2 == 1 { (v, v + 1) } else { (v + 1, v) })
            .collect();
        BipGraph {
            side_a,
            side_b,
            edges,
        }
    }

    /// Cycle on n vertices (n even and >= 4); odd ids on side A.
    pub fn cycle(n: u32) -> Result<Self> {
        if n < 4 || n % 2 != 0 {
            return Err(Error::InvalidArgs(format!(
                "bipartite cycle needs even n >= 4, got {n}"
            )));
        }
        let mut g = BipGraph::path(n);
        g.edges.insert((1, n));
        Ok(g)
    }

    pub fn side_a(&self) -> &[u32] {
        &self.side_a
    }

    pub fn side_b(&self) -> &[u32] {
        &self.side_b
    }

    pub fn num_vertices(&self) -> usize {
        self.side_a.len() + self.side_b.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        self.side_a.iter().chain(self.side_b.iter()).copied()
    }

    /// Edges as (A-vertex, B-vertex) pairs.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    pub fn contains_vertex(&self, v: u32) -> bool {
        self.side_a.contains(&v) || self.side_b.contains(&v)
    }

    pub fn side_of(&self, v: u32) -> Result<Side> {
        if self.side_a.contains(&v) {
            Ok(Side::A)
        } else if self.side_b.contains(&v) {
            Ok(Side::B)
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.edges.contains(&(u, v)) || self.edges.contains(&(v, u))
    }

    pub fn neighbors(&self, v: u32) -> Vec<u32> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Removes v and its incident edges; side membership of the rest is
    /// unchanged.
    pub fn delete_vertex(&self, v: u32) -> Result<BipGraph> {
        if !self.contains_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
        Ok(BipGraph {
            side_a: self.side_a.iter().copied().filter(|&u| u != v).collect(),
            side_b: self.side_b.iter().copied().filter(|&u| u != v).collect(),
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|&(a, b)| a != v && b != v)
                .collect(),
        })
    }

    /// Exchanges the two sides; the edge set is unchanged.
    pub fn swap_sides(&self) -> BipGraph {
        BipGraph {
            side_a: self.side_b.clone(),
            side_b: self.side_a.clone(),
            edges: self.edges.iter().map(|&(a, b)| (b, a)).collect(),
        }
    }

    /// Adds one cross edge; errors if it would not be a new cross edge.
    pub fn add_edge(&self, u: u32, v: u32) -> Result<BipGraph> {
        let (su, sv) = (self.side_of(u)?, self.side_of(v)?);
        if su == sv {
            return Err(Error::EdgeWithinSide(u, v));
        }
        let mut out = self.clone();
        let pair = if su == Side::A { (u, v) } else { (v, u) };
        out.edges.insert(pair);
        Ok(out)
    }

    /// Connected components, each retaining side labels and vertex ids.
    /// Isolated vertices are singleton components.
    pub fn components(&self) -> Vec<BipGraph> {
        let mut comp_of: BTreeMap<u32, usize> = BTreeMap::new();
        let mut comps: Vec<Vec<u32>> = Vec::new();
        for v in self.vertices() {
            if comp_of.contains_key(&v) {
                continue;
            }
            let idx = comps.len();
            let mut stack = vec![v];
            let mut members = Vec::new();
            comp_of.insert(v, idx);
            while let Some(u) = stack.pop() {
                members.push(u);
                for w in self.neighbors(u) {
                    if !comp_of.contains_key(&w) {
                        comp_of.insert(w, idx);
                        stack.push(w);
                    }
                }
            }
            comps.push(members);
        }
        comps
            .into_iter()
            .map(|members| {
                let set: BTreeSet<u32> = members.iter().copied().collect();
                BipGraph {
                    side_a: self.side_a.iter().copied().filter(|v| set.contains(v)).collect(),
                    side_b: self.side_b.iter().copied().filter(|v| set.contains(v)).collect(),
                    edges: self
                        .edges
                        .iter()
                        .copied()
                        .filter(|(a, _)| set.contains(a))
                        .collect(),
                }
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.num_vertices() <= 1 || self.components().len() == 1
    }

    pub fn isolated_vertices(&self) -> Vec<u32> {
        self.vertices().filter(|&v| self.degree(v) == 0).collect()
    }

    /// Strips isolated vertices, returning the stripped graph plus the
    /// counts removed from side A and side B.
    pub fn without_isolated(&self) -> (BipGraph, usize, usize) {
        let isolated: BTreeSet<u32> = self.isolated_vertices().into_iter().collect();
        let r = self.side_a.iter().filter(|v| isolated.contains(v)).count();
        let l = self.side_b.iter().filter(|v| isolated.contains(v)).count();
        let g = BipGraph {
            side_a: self
                .side_a
                .iter()
                .copied()
                .filter(|v| !isolated.contains(v))
                .collect(),
            side_b: self
                .side_b
                .iter()
                .copied()
                .filter(|v| !isolated.contains(v))
                .collect(),
            edges: self.edges.clone(),
        };
        (g, r, l)
    }

    pub fn is_complete_bipartite(&self) -> bool {
        self.edges.len() == self.side_a.len() * self.side_b.len()
    }

    pub fn is_forest(&self) -> bool {
        // acyclic iff every component has |edges| = |vertices| - 1
        self.components()
            .iter()
            .all(|c| c.num_edges() + 1 == c.num_vertices().max(1))
    }

    pub fn is_tree(&self) -> bool {
        self.num_vertices() >= 1 && self.is_connected() && self.num_edges() + 1 == self.num_vertices()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.vertices().map(|v| self.degree(v)).min()
    }

    pub fn is_regular(&self) -> bool {
        let mut degs = self.vertices().map(|v| self.degree(v));
        match degs.next() {
            None => false,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Index-based view for the permutation and sampling loops.
    pub(crate) fn indexed(&self) -> Indexed {
        let ids: Vec<u32> = self.vertices().collect();
        let pos: BTreeMap<u32, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let side: Vec<Side> = self
            .side_a
            .iter()
            .map(|_| Side::A)
            .chain(self.side_b.iter().map(|_| Side::B))
            .collect();
        let mut adj = vec![Vec::new(); ids.len()];
        for &(a, b) in &self.edges {
            let (ia, ib) = (pos[&a], pos[&b]);
            adj[ia].push(ib);
            adj[ib].push(ia);
        }
        Indexed { side, adj, ids }
    }

    /// Compact single-line descriptor used in reports.
    pub fn descriptor(&self) -> String {
        format!(
            "bip(A={:?},B={:?},E={:?})",
            self.side_a,
            self.side_b,
            self.edges.iter().collect::<Vec<_>>()
        )
    }
}

/// Dense 0-based view of a [`BipGraph`]: side A vertices first, then side B.
pub(crate) struct Indexed {
    pub side: Vec<Side>,
    pub adj: Vec<Vec<usize>>,
    pub ids: Vec<u32>,
}

impl Indexed {
    pub fn n(&self) -> usize {
        self.side.len()
    }
}
