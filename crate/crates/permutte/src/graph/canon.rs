//! Isomorphism-invariant canonical codes, used as memoization keys.
//!
//! Forests get a linear-time centroid-rooted AHU encoding with one bit of
//! side membership per vertex; everything else goes through an exact
//! minimal-code search (invariant refinement plus backtracking). A memo
//! collision would silently corrupt exact results, so codes are exact
//! canonical forms, never hashes.

use std::fmt;

use crate::graph::multigraph::UnionFind;
use crate::graph::{BipGraph, MultiGraph, Side};

/// Byte string equal for two graphs iff they are isomorphic (respecting
/// sides when requested).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(pub Vec<u8>);

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

const TREE_OPEN_A: u8 = 0x02;
const TREE_OPEN_B: u8 = 0x03;
const TREE_CLOSE: u8 = 0x01;

/// Canonical code of a bipartite graph. With `side_sensitive` the code
/// distinguishes the two sides; without it, the code is additionally
/// invariant under swapping the sides.
pub fn bip_canonical_code(h: &BipGraph, side_sensitive: bool) -> CanonicalCode {
    if side_sensitive {
        CanonicalCode(side_code(h))
    } else {
        let a = side_code(h);
        let b = side_code(&h.swap_sides());
        CanonicalCode(a.min(b))
    }
}

fn side_code(h: &BipGraph) -> Vec<u8> {
    let mut comp_codes: Vec<Vec<u8>> = h
        .components()
        .iter()
        .map(bip_component_code)
        .collect();
    comp_codes.sort();
    join_codes(b'B', &comp_codes)
}

fn join_codes(tag: u8, codes: &[Vec<u8>]) -> Vec<u8> {
    let mut out = vec![tag];
    out.extend((codes.len() as u32).to_le_bytes());
    for code in codes {
        out.extend((code.len() as u32).to_le_bytes());
        out.extend(code);
    }
    out
}

fn bip_component_code(comp: &BipGraph) -> Vec<u8> {
    if comp.is_tree() {
        let mut out = vec![b'T'];
        out.extend(tree_component_code(comp));
        out
    } else {
        let idx = comp.indexed();
        let n = idx.n();
        let mut colors = vec![Vec::new(); n];
        let mut adj = vec![vec![0u8; n]; n];
        for (v, color) in colors.iter_mut().enumerate() {
            color.push(match idx.side[v] {
                Side::A => 0,
                Side::B => 1,
            });
            color.push(idx.adj[v].len() as u8);
        }
        for (v, nbrs) in idx.adj.iter().enumerate() {
            for &u in nbrs {
                adj[v][u] = 1;
            }
        }
        let mut out = vec![b'G'];
        out.extend(min_code(&colors, &adj));
        out
    }
}

/// Centroid-rooted AHU string of a tree component, with side parity baked
/// into the open bytes.
fn tree_component_code(t: &BipGraph) -> Vec<u8> {
    let idx = t.indexed();
    let n = idx.n();
    if n == 1 {
        return rooted_code(&idx, 0, usize::MAX);
    }
    let centroids = tree_centroids(&idx);
    let mut best: Option<Vec<u8>> = None;
    for c in centroids {
        let code = rooted_code(&idx, c, usize::MAX);
        if best.as_ref().map_or(true, |b| &code < b) {
            best = Some(code);
        }
    }
    best.unwrap()
}

fn rooted_code(idx: &super::Indexed, v: usize, parent: usize) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> = idx.adj[v]
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| rooted_code(idx, u, v))
        .collect();
    children.sort();
    let mut out = vec![match idx.side[v] {
        Side::A => TREE_OPEN_A,
        Side::B => TREE_OPEN_B,
    }];
    for child in children {
        out.extend(child);
    }
    out.push(TREE_CLOSE);
    out
}

fn tree_centroids(idx: &super::Indexed) -> Vec<usize> {
    let n = idx.n();
    let mut size = vec![1usize; n];
    // post-order sizes via iterative DFS from 0
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &u in &idx.adj[v] {
            if !seen[u] {
                seen[u] = true;
                parent[u] = v;
                stack.push(u);
            }
        }
    }
    for &v in order.iter().rev() {
        if parent[v] != usize::MAX {
            size[parent[v]] += size[v];
        }
    }
    let mut centroids = Vec::new();
    for v in 0..n {
        let mut heaviest = n - size[v];
        for &u in &idx.adj[v] {
            if parent[u] == v {
                heaviest = heaviest.max(size[u]);
            }
        }
        if v == 0 {
            heaviest = idx.adj[v]
                .iter()
                .map(|&u| size[u])
                .max()
                .unwrap_or(0);
        }
        if 2 * heaviest <= n {
            centroids.push(v);
        }
    }
    centroids
}

/// Canonical code of a multigraph: invariant under vertex relabeling.
pub fn multigraph_canonical_code(g: &MultiGraph) -> CanonicalCode {
    let n = g.num_vertices() as usize;
    let mut uf = UnionFind::new(n);
    for &(u, v) in g.edges() {
        uf.union(u as usize - 1, v as usize - 1);
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for v in 0..n {
        groups.entry(uf.find(v)).or_default().push(v);
    }
    let mut comp_codes = Vec::new();
    for members in groups.values() {
        let local: std::collections::BTreeMap<usize, usize> =
            members.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let k = members.len();
        let mut adj = vec![vec![0u8; k]; k];
        for &(u, v) in g.edges() {
            let (u, v) = (u as usize - 1, v as usize - 1);
            if let (Some(&lu), Some(&lv)) = (local.get(&u), local.get(&v)) {
                adj[lu][lv] = adj[lu][lv].checked_add(1).expect("multiplicity fits u8");
                if lu != lv {
                    adj[lv][lu] += 1;
                }
            }
        }
        let mut colors = vec![Vec::new(); k];
        for (v, color) in colors.iter_mut().enumerate() {
            color.push(adj[v][v]); // loop count
            color.push(adj[v].iter().map(|&m| m as usize).sum::<usize>() as u8);
        }
        comp_codes.push(min_code(&colors, &adj));
    }
    comp_codes.sort();
    CanonicalCode(join_codes(b'M', &comp_codes))
}

/// Lexicographically minimal encoding over all vertex orderings consistent
/// with nothing but the codes themselves; colors must be
/// isomorphism-invariant. Exact but exponential in the worst case; intended
/// for the small graphs that reach the memoized recursions.
fn min_code(colors: &[Vec<u8>], adj: &[Vec<u8>]) -> Vec<u8> {
    let n = colors.len();
    // Candidate order sorted by color gives a good initial code for pruning.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| colors[a].cmp(&colors[b]));
    let mut search = MinCodeSearch {
        colors,
        adj,
        order,
        best: None,
    };
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut code = Vec::new();
    code.push(n as u8);
    search.walk(&mut perm, &mut used, &mut code);
    search.best.expect("nonempty search space")
}

struct MinCodeSearch<'a> {
    colors: &'a [Vec<u8>],
    adj: &'a [Vec<u8>],
    order: Vec<usize>,
    best: Option<Vec<u8>>,
}

impl MinCodeSearch<'_> {
    fn walk(&mut self, perm: &mut Vec<usize>, used: &mut [bool], code: &mut Vec<u8>) {
        let n = self.colors.len();
        if perm.len() == n {
            if self.best.as_ref().map_or(true, |b| &*code < b) {
                self.best = Some(code.clone());
            }
            return;
        }
        for i in 0..n {
            let v = self.order[i];
            if used[v] {
                continue;
            }
            let start = code.len();
            code.extend(&self.colors[v]);
            for &u in perm.iter() {
                code.push(self.adj[v][u]);
            }
            code.push(self.adj[v][v]);
            let viable = match &self.best {
                None => true,
                Some(best) => code.as_slice() <= &best[..code.len().min(best.len())],
            };
            if viable {
                used[v] = true;
                perm.push(v);
                self.walk(perm, used, code);
                perm.pop();
                used[v] = false;
            }
            code.truncate(start);
        }
    }
}
