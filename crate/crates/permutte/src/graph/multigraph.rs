//! Labeled multigraphs: loops and parallel edges allowed, edges implicitly
//! labeled 1..m by position.

use std::collections::BTreeSet;

use crate::graph::BipGraph;
use crate::{Error, Result};

/// Multigraph on vertices 1..=n with an ordered edge list. The position of
/// an edge in the list (1-based) is its label; the activities theorem needs
/// a total order and position is the canonical one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    n: u32,
    edges: Vec<(u32, u32)>,
}

impl MultiGraph {
    pub fn new(n: u32, edges: Vec<(u32, u32)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgs("multigraph needs n >= 1".into()));
        }
        for &(u, v) in &edges {
            if u == 0 || u > n {
                return Err(Error::UnknownVertex(u));
            }
            if v == 0 || v > n {
                return Err(Error::UnknownVertex(v));
            }
        }
        Ok(MultiGraph { n, edges })
    }

    pub fn num_vertices(&self) -> u32 {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Endpoints of the edge with 1-based label.
    pub fn edge(&self, label: u32) -> Result<(u32, u32)> {
        self.edges
            .get(label as usize - 1)
            .copied()
            .ok_or(Error::UnknownEdge(label))
    }

    pub fn edge_labels(&self) -> impl Iterator<Item = u32> {
        1..=self.edges.len() as u32
    }

    pub fn is_loop(&self, label: u32) -> Result<bool> {
        let (u, v) = self.edge(label)?;
        Ok(u == v)
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    /// Number of connected components of (V, selected edges).
    pub fn component_count(&self, labels: impl IntoIterator<Item = u32>) -> usize {
        let mut uf = UnionFind::new(self.n as usize);
        for label in labels {
            let (u, v) = self.edges[label as usize - 1];
            uf.union(u as usize - 1, v as usize - 1);
        }
        uf.count()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count(self.edge_labels()) == 1
    }

    pub fn loops(&self) -> Vec<u32> {
        self.edge_labels()
            .filter(|&l| self.is_loop(l).unwrap())
            .collect()
    }

    /// Labels whose deletion increases the number of components.
    pub fn bridges(&self) -> Vec<u32> {
        let base = self.component_count(self.edge_labels());
        self.edge_labels()
            .filter(|&l| {
                self.component_count(self.edge_labels().filter(|&k| k != l)) > base
            })
            .collect()
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        for &(u, v) in &self.edges {
            if u == v {
                return false;
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return false;
            }
        }
        true
    }

    pub fn is_spanning_tree(&self, labels: &[u32]) -> bool {
        if labels.len() + 1 != self.n as usize {
            return false;
        }
        let mut uf = UnionFind::new(self.n as usize);
        for &label in labels {
            match self.edges.get(label as usize - 1) {
                None => return false,
                Some(&(u, v)) => {
                    if !uf.union(u as usize - 1, v as usize - 1) {
                        return false; // cycle
                    }
                }
            }
        }
        uf.count() == 1
    }

    /// Every spanning tree exactly once, each as a sorted set of edge
    /// labels. Parallel edges are distinct by label.
    pub fn spanning_trees(&self) -> Result<Vec<Vec<u32>>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let need = self.n as usize - 1;
        let mut out = Vec::new();
        let mut current: Vec<u32> = Vec::with_capacity(need);
        fn rec(
            g: &MultiGraph,
            start: u32,
            need: usize,
            current: &mut Vec<u32>,
            out: &mut Vec<Vec<u32>>,
        ) {
            if current.len() == need {
                if g.is_spanning_tree(current) {
                    out.push(current.clone());
                }
                return;
            }
            let remaining = (g.edges.len() as u32 + 1).saturating_sub(start);
            if (remaining as usize) < need - current.len() {
                return;
            }
            for label in start..=g.edges.len() as u32 {
                current.push(label);
                rec(g, label + 1, need, current, out);
                current.pop();
            }
        }
        rec(self, 1, need, &mut current, &mut out);
        Ok(out)
    }

    /// Tree path between two vertices as edge labels, given a spanning tree.
    fn tree_path(&self, tree: &[u32], from: u32, to: u32) -> Vec<u32> {
        if from == to {
            return Vec::new();
        }
        let n = self.n as usize;
        let mut adj: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n + 1];
        for &label in tree {
            let (u, v) = self.edges[label as usize - 1];
            adj[u as usize].push((v, label));
            adj[v as usize].push((u, label));
        }
        // BFS parent pointers
        let mut parent: Vec<Option<(u32, u32)>> = vec![None; n + 1];
        let mut visited = vec![false; n + 1];
        let mut queue = std::collections::VecDeque::new();
        visited[from as usize] = true;
        queue.push_back(from);
        while let Some(u) = queue.pop_front() {
            for &(w, label) in &adj[u as usize] {
                if !visited[w as usize] {
                    visited[w as usize] = true;
                    parent[w as usize] = Some((u, label));
                    queue.push_back(w);
                }
            }
        }
        let mut path = Vec::new();
        let mut cur = to;
        while cur != from {
            let (prev, label) = parent[cur as usize].expect("spanning tree connects all vertices");
            path.push(label);
            cur = prev;
        }
        path
    }

    /// Local basis exchange graph H[T]: side A is the tree edge labels,
    /// side B the non-tree labels; (e, f) is an edge iff f lies in the
    /// fundamental cut of e, equivalently e lies in the fundamental cycle
    /// of f. Loops of G become isolated B-vertices and bridges isolated
    /// A-vertices.
    pub fn local_basis_exchange(&self, tree: &[u32]) -> Result<BipGraph> {
        if !self.is_spanning_tree(tree) {
            return Err(Error::NotSpanningTree);
        }
        let tree_set: BTreeSet<u32> = tree.iter().copied().collect();
        let side_a: Vec<u32> = tree_set.iter().copied().collect();
        let side_b: Vec<u32> = self.edge_labels().filter(|l| !tree_set.contains(l)).collect();
        let mut edges = Vec::new();
        for &f in &side_b {
            let (u, v) = self.edges[f as usize - 1];
            for e in self.tree_path(tree, u, v) {
                edges.push((e, f));
            }
        }
        BipGraph::new(side_a, side_b, edges)
    }

    /// Fundamental cycle of a non-tree edge: the tree edges on the path
    /// between its endpoints.
    pub fn fundamental_cycle(&self, tree: &[u32], label: u32) -> Result<Vec<u32>> {
        if !self.is_spanning_tree(tree) {
            return Err(Error::NotSpanningTree);
        }
        let (u, v) = self.edge(label)?;
        Ok(self.tree_path(tree, u, v))
    }

    /// Deletes a vertex with its incident edges; remaining vertices and
    /// labels re-index deterministically by original order.
    pub fn delete_vertex(&self, v: u32) -> Result<MultiGraph> {
        if v == 0 || v > self.n {
            return Err(Error::UnknownVertex(v));
        }
        if self.n == 1 {
            return Err(Error::InvalidArgs(
                "cannot delete the last vertex of a multigraph".into(),
            ));
        }
        let map = |w: u32| if w > v { w - 1 } else { w };
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (map(a), map(b)))
            .collect();
        Ok(MultiGraph {
            n: self.n - 1,
            edges,
        })
    }

    /// Deletes the edge with the given label; remaining labels re-index
    /// deterministically by original order.
    pub fn delete_edge(&self, label: u32) -> Result<MultiGraph> {
        self.edge(label)?;
        let mut edges = self.edges.clone();
        edges.remove(label as usize - 1);
        Ok(MultiGraph { n: self.n, edges })
    }

    /// Contracts the edge with the given label: the endpoints merge,
    /// parallel partners become loops, and labels re-index by original
    /// order. Contracting a loop is an error.
    pub fn contract_edge(&self, label: u32) -> Result<MultiGraph> {
        let (u, v) = self.edge(label)?;
        if u == v {
            return Err(Error::ContractLoop(label));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let map = |w: u32| {
            let w = if w == gone { keep } else { w };
            if w > gone {
                w - 1
            } else {
                w
            }
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != label as usize - 1)
            .map(|(_, &(a, b))| (map(a), map(b)))
            .collect();
        Ok(MultiGraph {
            n: self.n - 1,
            edges,
        })
    }

    pub fn descriptor(&self) -> String {
        format!("multi(n={},E={:?})", self.n, self.edges)
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    count: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            count: n,
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    /// Returns false if x and y were already joined.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        self.parent[rx] = ry;
        self.count -= 1;
        true
    }

    pub fn count(&self) -> usize {
        self.count
    }
}
