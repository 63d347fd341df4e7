//! The free-tree survey: enumerate all unlabeled trees on m vertices,
//! minimize P(H) = T̃(2,0)·T̃(0,2) over them, and the tree decomposition
//! underlying the large-tree induction.

mod freetree;

pub use freetree::{gen_free_trees, levels_to_bipgraph, FreeTrees, RootedTrees};

use rayon::prelude::*;

use crate::graph::{bip_canonical_code, BipGraph, CanonicalCode};
use crate::perm_tutte::{Engine, EvalPoint};
use crate::ratpoly::{decimal_4dp_rounded, rat_int, Rational};
use crate::{Error, Result};

/// One row of the survey table.
#[derive(Clone, Debug)]
pub struct SurveyRow {
    pub m: usize,
    pub tree_count: usize,
    pub pi_min: Rational,
    pub pi_min_4dp: String,
    pub argmin_code: CanonicalCode,
}

impl SurveyRow {
    /// Tab-separated row: m, tree count, exact minimum, 4-decimal
    /// rendering, canonical code of the minimizer.
    pub fn tsv_line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.m, self.tree_count, self.pi_min, self.pi_min_4dp, self.argmin_code
        )
    }
}

/// Exact Π(m) = min P(H) over all free trees on m vertices. The engine's
/// evaluation memo is shared across trees; vertex deletions of trees are
/// forests of smaller trees, which is what makes the survey fast.
pub fn survey(m: usize, engine: &Engine) -> Result<SurveyRow> {
    if m < 2 {
        return Err(Error::InvalidArgs("survey needs m >= 2".into()));
    }
    let sequences: Vec<Vec<u8>> = FreeTrees::new(m).collect();
    let evaluated: Vec<(Rational, CanonicalCode)> = sequences
        .par_iter()
        .map(|seq| {
            let tree = levels_to_bipgraph(seq);
            let x0 = engine.evaluate(&tree, &EvalPoint::new(rat_int(2), rat_int(0)))?;
            let y0 = engine.evaluate(&tree, &EvalPoint::new(rat_int(0), rat_int(2)))?;
            Ok((x0 * y0, bip_canonical_code(&tree, false)))
        })
        .collect::<Result<_>>()?;
    let tree_count = evaluated.len();
    let (pi_min, argmin_code) = evaluated
        .into_iter()
        .min_by(|p, q| p.0.cmp(&q.0).then(p.1.cmp(&q.1)))
        .expect("at least one tree for m >= 2");
    Ok(SurveyRow {
        m,
        tree_count,
        pi_min_4dp: decimal_4dp_rounded(&pi_min),
        pi_min,
        argmin_code,
    })
}

/// Splits a tree with M >= 2 edges into two edge-disjoint subtrees sharing
/// exactly one vertex, covering all edges, each with at least M/3 edges.
///
/// The walk: at the current vertex, if some branch or ascending prefix of
/// branches has total size in [M/3, 2M/3], split there; otherwise one
/// branch exceeds 2M/3 and the walk moves one step into it. The heaviest
/// branch shrinks along the walk, so this terminates.
pub fn tree_decompose(t: &BipGraph) -> Result<(BipGraph, BipGraph)> {
    if !t.is_tree() {
        return Err(Error::InvalidArgs("decomposition expects a tree".into()));
    }
    let total = t.num_edges();
    if total < 2 {
        return Err(Error::TooSmall);
    }
    // paths split at the middle
    if t.vertices().all(|u| t.degree(u) <= 2) {
        let start = t
            .vertices()
            .filter(|&u| t.degree(u) == 1)
            .min()
            .expect("a path has endpoints");
        let mut order = vec![start];
        let mut prev = start;
        let mut cur = start;
        while order.len() <= total {
            let next = t
                .neighbors(cur)
                .into_iter()
                .find(|&w| w != prev)
                .expect("path continues");
            order.push(next);
            prev = cur;
            cur = next;
        }
        let mid = order[total.div_ceil(2)];
        let branches = branches_at(t, mid);
        let first = branches
            .iter()
            .find(|b| b.members.contains(&start))
            .expect("start endpoint lies in one branch");
        return Ok(split_at(t, mid, std::slice::from_ref(first)));
    }
    // start from a vertex of maximal degree (smallest id on ties)
    let mut v = t
        .vertices()
        .max_by_key(|&u| (t.degree(u), std::cmp::Reverse(u)))
        .expect("tree has vertices");
    for _ in 0..=t.num_vertices() {
        let mut branches = branches_at(t, v);
        branches.sort_by_key(|b| (b.members.len(), b.entry));
        let in_window = |edges: usize| 3 * edges >= total && 3 * edges <= 2 * total;
        // single branch inside the window
        if let Some(branch) = branches.iter().find(|b| in_window(b.members.len())) {
            return Ok(split_at(t, v, std::slice::from_ref(branch)));
        }
        // ascending prefix inside the window
        let mut prefix = 0;
        for i in 0..branches.len() {
            prefix += branches[i].members.len();
            if in_window(prefix) {
                return Ok(split_at(t, v, &branches[..=i]));
            }
        }
        // otherwise the last branch is heavier than 2M/3: walk into it
        let heavy = branches.last().expect("tree vertex has branches");
        v = heavy.entry;
    }
    unreachable!("tree decomposition walk failed to terminate");
}

struct Branch {
    /// Neighbor of the pivot through which the branch hangs.
    entry: u32,
    /// All branch vertices (excluding the pivot). The branch has exactly
    /// `members.len()` edges, counting the pivot edge.
    members: Vec<u32>,
}

fn branches_at(t: &BipGraph, v: u32) -> Vec<Branch> {
    t.neighbors(v)
        .into_iter()
        .map(|entry| {
            let mut members = vec![entry];
            let mut seen: std::collections::BTreeSet<u32> = [v, entry].into_iter().collect();
            let mut stack = vec![entry];
            while let Some(u) = stack.pop() {
                for w in t.neighbors(u) {
                    if seen.insert(w) {
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort();
            Branch { entry, members }
        })
        .collect()
}

fn split_at(t: &BipGraph, v: u32, chosen: &[Branch]) -> (BipGraph, BipGraph) {
    let mut in_first: std::collections::BTreeSet<u32> = [v].into_iter().collect();
    for branch in chosen {
        in_first.extend(branch.members.iter().copied());
    }
    let restrict = |keep: &dyn Fn(u32) -> bool| {
        BipGraph::new(
            t.side_a().iter().copied().filter(|&u| keep(u)).collect(),
            t.side_b().iter().copied().filter(|&u| keep(u)).collect(),
            t.edges().filter(|&(a, b)| keep(a) && keep(b)),
        )
        .expect("restriction of a valid graph")
    };
    let first = restrict(&|u| in_first.contains(&u));
    let second = restrict(&|u| u == v || !in_first.contains(&u));
    (first, second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::rat;

    #[test]
    fn survey_tiny_rows() {
        let engine = Engine::new();
        let row = survey(2, &engine).unwrap();
        assert_eq!(row.tree_count, 1);
        assert_eq!(row.pi_min, rat_int(1));
        assert_eq!(row.pi_min_4dp, "1.0000");

        let row = survey(5, &engine).unwrap();
        assert_eq!(row.tree_count, 3);
        assert_eq!(row.pi_min, rat(68, 45));
        assert_eq!(row.pi_min_4dp, "1.5111");
        // the minimizer is the path
        assert_eq!(row.argmin_code, bip_canonical_code(&BipGraph::path(5), false));
        assert!(survey(1, &engine).is_err());
    }

    #[test]
    fn decompose_examples() {
        // path on 7 vertices: 3 + 3 edges
        let (h1, h2) = tree_decompose(&BipGraph::path(7)).unwrap();
        assert_eq!(h1.num_edges().min(h2.num_edges()), 3);
        // spider with three legs of length 2: some part has exactly 2 = M/3
        let spider = BipGraph::new(
            vec![1, 4, 6],
            vec![2, 3, 5, 7],
            [(1, 2), (1, 3), (3, 4), (1, 5), (5, 6), (6, 7)],
        )
        .unwrap();
        let (h1, h2) = tree_decompose(&spider).unwrap();
        assert_eq!(h1.num_edges().min(h2.num_edges()), 2);
        // star on 5 edges: 2/3 split
        let star = BipGraph::complete_bipartite(1, 5);
        let (h1, h2) = tree_decompose(&star).unwrap();
        assert_eq!(h1.num_edges() + h2.num_edges(), 5);
        assert!(h1.num_edges().min(h2.num_edges()) == 2);
        // too small
        assert!(matches!(
            tree_decompose(&BipGraph::path(2)),
            Err(Error::TooSmall)
        ));
    }

    #[test]
    fn decompose_invariants_small() {
        for m in 3..=10 {
            for tree in gen_free_trees(m) {
                let total = tree.num_edges();
                let (h1, h2) = tree_decompose(&tree).unwrap();
                assert!(h1.is_tree() && h2.is_tree());
                // edge-disjoint cover
                assert_eq!(h1.num_edges() + h2.num_edges(), total);
                let all: std::collections::BTreeSet<(u32, u32)> =
                    h1.edges().chain(h2.edges()).collect();
                assert_eq!(all.len(), total);
                // exactly one shared vertex
                let v1: std::collections::BTreeSet<u32> = h1.vertices().collect();
                let shared = h2.vertices().filter(|v| v1.contains(v)).count();
                assert_eq!(shared, 1);
                // both parts have at least M/3 edges (exact comparison)
                assert!(3 * h1.num_edges() >= total);
                assert!(3 * h2.num_edges() >= total);
            }
        }
    }
}
