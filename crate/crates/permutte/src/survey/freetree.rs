//! Free-tree enumeration via canonical level sequences.
//!
//! Rooted trees stream from the Beyer–Hedetniemi successor rule in constant
//! amortized time (lexicographically decreasing canonical level sequences);
//! a centroid filter then keeps exactly one rooting per free tree, so every
//! unlabeled free tree is emitted exactly once.

use crate::graph::BipGraph;

/// Iterator over the canonical level sequences of all rooted trees on n
/// vertices. Levels are 0-based with the root at level 0; subtree blocks
/// are ordered lexicographically non-increasing, which is the canonical
/// (maximal) form.
pub struct RootedTrees {
    levels: Vec<u8>,
    fresh: bool,
    done: bool,
}

impl RootedTrees {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1 && n <= u8::MAX as usize);
        RootedTrees {
            levels: (0..n as u8).collect(),
            fresh: true,
            done: false,
        }
    }

    /// Advances to the next canonical sequence, returning the current one.
    pub fn next_sequence(&mut self) -> Option<&[u8]> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            return Some(&self.levels);
        }
        let n = self.levels.len();
        // last position deeper than a child of the root
        let p = match (0..n).rev().find(|&i| self.levels[i] > 1) {
            None => {
                self.done = true;
                return None;
            }
            Some(p) => p,
        };
        // parent level block start: last q < p one level up
        let q = (0..p)
            .rev()
            .find(|&i| self.levels[i] == self.levels[p] - 1)
            .expect("canonical sequences have a parent for every deep vertex");
        let width = p - q;
        for i in p..n {
            self.levels[i] = self.levels[i - width];
        }
        Some(&self.levels)
    }
}

/// Emits each unlabeled free tree on m vertices exactly once, by filtering
/// the rooted stream down to trees rooted at their canonical centroid.
pub struct FreeTrees {
    rooted: RootedTrees,
    n: usize,
}

impl FreeTrees {
    pub fn new(m: usize) -> Self {
        FreeTrees {
            rooted: RootedTrees::new(m),
            n: m,
        }
    }
}

impl Iterator for FreeTrees {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        loop {
            let seq = self.rooted.next_sequence()?;
            if is_free_canonical(seq, self.n) {
                return Some(seq.to_vec());
            }
        }
    }
}

/// Decides whether the canonical rooted sequence is the chosen rooting of
/// its underlying free tree: the root must be the centroid, and for
/// bicentroidal trees (one root branch of exactly n/2 vertices) the root's
/// half must weakly dominate the branch half.
fn is_free_canonical(levels: &[u8], n: usize) -> bool {
    if n <= 2 {
        return true;
    }
    // root branch sizes: maximal blocks of entries > 0
    let mut branches: Vec<(usize, usize)> = Vec::new(); // (start, size)
    let mut start = 1;
    for i in 2..=n {
        if i == n || levels[i] == 1 {
            branches.push((start, i - start));
            start = i;
        }
    }
    let (big_start, big) = branches
        .iter()
        .copied()
        .max_by_key(|&(_, size)| size)
        .expect("root of a tree on >= 2 vertices has a branch");
    if 2 * big < n {
        return true; // root is the unique centroid
    }
    if 2 * big > n {
        return false; // centroid lies inside the big branch
    }
    // bicentroidal: compare the two halves as level sequences. The branch
    // half is the big branch normalized one level up; the root half is the
    // rest of the sequence with the big branch spliced out.
    let branch_half: Vec<u8> = levels[big_start..big_start + big]
        .iter()
        .map(|&l| l - 1)
        .collect();
    let mut root_half: Vec<u8> = Vec::with_capacity(n - big);
    root_half.extend_from_slice(&levels[..big_start]);
    root_half.extend_from_slice(&levels[big_start + big..]);
    root_half >= branch_half
}

/// Builds the bipartite graph of a level sequence: vertices 1..=n, an edge
/// to each vertex's parent, and the canonical 2-coloring as the side
/// assignment (even levels on side A).
pub fn levels_to_bipgraph(levels: &[u8]) -> BipGraph {
    let mut side_a = Vec::new();
    let mut side_b = Vec::new();
    let mut edges = Vec::new();
    let mut last_at_level: Vec<u32> = vec![0; 256];
    for (i, &level) in levels.iter().enumerate() {
        let v = i as u32 + 1;
        if level % 2 == 0 {
            side_a.push(v);
        } else {
            side_b.push(v);
        }
        if level > 0 {
            edges.push((last_at_level[level as usize - 1], v));
        }
        last_at_level[level as usize] = v;
    }
    BipGraph::new(side_a, side_b, edges).expect("level sequence builds a tree")
}

/// All free trees on m vertices as bipartite graphs.
pub fn gen_free_trees(m: usize) -> impl Iterator<Item = BipGraph> {
    FreeTrees::new(m).map(|seq| levels_to_bipgraph(&seq))
}
