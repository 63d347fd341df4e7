//! Exhaustive corpora (up to isomorphism) and seeded random generators for
//! the verification suites.

use rand::prelude::*;

use crate::graph::{multigraph_canonical_code, BipGraph, MultiGraph};

/// Every side-labeled bipartite graph with at most `max_vertices` vertices,
/// one representative per side-preserving isomorphism class.
pub fn all_bipartite_graphs(max_vertices: usize) -> Vec<BipGraph> {
    let mut out = Vec::new();
    for total in 0..=max_vertices {
        for a in 0..=total {
            let b = total - a;
            for mask in canonical_masks(a, b) {
                out.push(mask_to_graph(a, b, mask));
            }
        }
    }
    out
}

fn mask_to_graph(a: usize, b: usize, mask: u64) -> BipGraph {
    let side_a: Vec<u32> = (1..=a as u32).collect();
    let side_b: Vec<u32> = (a as u32 + 1..=(a + b) as u32).collect();
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            if mask >> (i * b + j) & 1 == 1 {
                edges.push((i as u32 + 1, (a + j) as u32 + 1));
            }
        }
    }
    BipGraph::new(side_a, side_b, edges).expect("mask edges are valid")
}

/// Bitmask representatives of a x b bipartite adjacency matrices, minimal
/// under independent row and column permutations.
fn canonical_masks(a: usize, b: usize) -> Vec<u64> {
    let bits = a * b;
    assert!(bits <= 24, "corpus enumeration limited to small graphs");
    let row_perms = permutations(a);
    let col_perms = permutations(b);
    // bit_map[p][q][cell] = image of cell under (row perm p, col perm q)
    let mut maps = Vec::with_capacity(row_perms.len() * col_perms.len());
    for rp in &row_perms {
        for cp in &col_perms {
            let mut map = vec![0u8; bits.max(1)];
            for i in 0..a {
                for j in 0..b {
                    map[i * b + j] = (rp[i] * b + cp[j]) as u8;
                }
            }
            maps.push(map);
        }
    }
    let mut out = Vec::new();
    'mask: for mask in 0..(1u64 << bits) {
        for map in &maps {
            let mut image = 0u64;
            let mut m = mask;
            while m != 0 {
                let cell = m.trailing_zeros() as usize;
                image |= 1 << map[cell];
                m &= m - 1;
            }
            if image < mask {
                continue 'mask; // not the class minimum
            }
        }
        out.push(mask);
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    loop {
        out.push(items.clone());
        if !next_permutation(&mut items) {
            break;
        }
    }
    out
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Every simple graph with at most `max_vertices` vertices up to
/// isomorphism, optionally restricted to graphs without isolated vertices.
/// Built by vertex augmentation with canonical-code dedup.
pub fn all_simple_graphs(max_vertices: usize, forbid_isolated: bool) -> Vec<MultiGraph> {
    let single = MultiGraph::new(1, vec![]).unwrap();
    let mut levels: Vec<Vec<MultiGraph>> = vec![vec![single]];
    for n in 2..=max_vertices {
        let mut seen = std::collections::BTreeSet::new();
        let mut level = Vec::new();
        for g in &levels[n - 2] {
            // attach vertex n with every possible neighbor subset
            for subset in 0..(1u32 << (n - 1)) {
                let mut edges = g.edges().to_vec();
                for v in 1..n as u32 {
                    if subset >> (v - 1) & 1 == 1 {
                        edges.push((v, n as u32));
                    }
                }
                let candidate = MultiGraph::new(n as u32, edges).unwrap();
                if seen.insert(multigraph_canonical_code(&candidate)) {
                    level.push(candidate);
                }
            }
        }
        levels.push(level);
    }
    levels
        .into_iter()
        .flatten()
        .filter(|g| {
            !forbid_isolated || (1..=g.num_vertices()).all(|v| g.degree(v) > 0)
        })
        .collect()
}

/// Every connected multigraph (loops and parallel edges allowed) with at
/// most `max_edges` edges, one representative per isomorphism class.
/// Grown by edge augmentation: a connected multigraph either has a
/// deletable non-bridge edge or is a tree with a removable leaf, so adding
/// (a) an edge between existing vertices or (b) a pendant vertex reaches
/// every class.
pub fn connected_multigraphs(max_edges: usize) -> Vec<MultiGraph> {
    let mut frontier = vec![MultiGraph::new(1, vec![]).unwrap()];
    let mut out = frontier.clone();
    for _ in 1..=max_edges {
        let mut seen = std::collections::BTreeSet::new();
        let mut next = Vec::new();
        for g in &frontier {
            let n = g.num_vertices();
            let mut push = |candidate: MultiGraph, next: &mut Vec<MultiGraph>| {
                if seen.insert(multigraph_canonical_code(&candidate)) {
                    next.push(candidate);
                }
            };
            for u in 1..=n {
                for v in u..=n {
                    let mut edges = g.edges().to_vec();
                    edges.push((u, v));
                    push(MultiGraph::new(n, edges).unwrap(), &mut next);
                }
                let mut edges = g.edges().to_vec();
                edges.push((u, n + 1));
                push(MultiGraph::new(n + 1, edges).unwrap(), &mut next);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Seeded random connected multigraph with exactly `edges` edges: a uniform
/// random labeled tree first, then extra edges (loops and parallels
/// allowed), finally a label shuffle.
pub fn random_connected_multigraph<R: Rng>(rng: &mut R, edges: usize) -> MultiGraph {
    let n = rng.gen_range(1..=edges + 1);
    let mut list: Vec<(u32, u32)> = Vec::with_capacity(edges);
    // random tree via random attachment
    for v in 2..=n {
        let u = rng.gen_range(1..v);
        list.push((u as u32, v as u32));
    }
    while list.len() < edges {
        let u = rng.gen_range(1..=n) as u32;
        let v = rng.gen_range(1..=n) as u32;
        list.push((u, v));
    }
    list.shuffle(rng);
    MultiGraph::new(n as u32, list).expect("endpoints in range")
}

/// Seeded random bipartite graph on sides of the given sizes, each cross
/// edge present independently with probability 1/2.
pub fn random_bipartite<R: Rng>(rng: &mut R, a: u32, b: u32) -> BipGraph {
    let mut edges = Vec::new();
    for u in 1..=a {
        for v in a + 1..=a + b {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    BipGraph::new((1..=a).collect(), (a + 1..=a + b).collect(), edges).unwrap()
}
