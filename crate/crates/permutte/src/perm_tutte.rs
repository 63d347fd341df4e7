//! Algorithms computing the permutation Tutte polynomial: the brute-force
//! permutation oracle, the memoized vertex-deletion recursion, closed forms
//! for complete bipartite graphs, the H(a,b,c) family recursion,
//! alternating numbers, Monte Carlo estimators, and the multivariate
//! general-graph brute force.

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use dashmap::DashMap;
use num_traits::{One, Zero};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::graph::{
    bip_canonical_code, multigraph_canonical_code, BipGraph, CanonicalCode, MultiGraph, Side,
};
use crate::ratpoly::{rat, rat_pow, BiPoly, Rational};
use crate::{Error, Result};

/// Default vertex cap for the factorial-time brute-force oracles.
pub const DEFAULT_BRUTE_LIMIT: usize = 10;

/// Default cap on total memo entries before a computation aborts with a
/// budget error.
pub const DEFAULT_MEMO_BUDGET: usize = 10_000_000;

/// Evaluation point of the polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvalPoint {
    pub x: Rational,
    pub y: Rational,
}

impl EvalPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        EvalPoint { x, y }
    }
}

/// Internally/externally active vertex counts of one permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ActivityCount {
    pub ia: usize,
    pub ea: usize,
}

/// Seeded Monte Carlo estimate.
#[derive(Clone, Copy, Debug)]
pub struct McEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
}

/// Shared memo tables for the exact recursions. Values are immutable and
/// deterministic per key, so concurrent duplicate computation is benign.
pub struct Engine {
    poly_memo: DashMap<CanonicalCode, BiPoly>,
    eval_memo: DashMap<(CanonicalCode, EvalPoint), Rational>,
    alt_memo: DashMap<CanonicalCode, Rational>,
    alt_general_memo: DashMap<CanonicalCode, Rational>,
    entries: AtomicUsize,
    budget: usize,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new()
    }
}

impl Engine {
    pub fn new() -> Self {
        Engine::with_budget(DEFAULT_MEMO_BUDGET)
    }

    pub fn with_budget(budget: usize) -> Self {
        Engine {
            poly_memo: DashMap::new(),
            eval_memo: DashMap::new(),
            alt_memo: DashMap::new(),
            alt_general_memo: DashMap::new(),
            entries: AtomicUsize::new(0),
            budget,
        }
    }

    pub fn memo_entries(&self) -> usize {
        self.entries.load(Ordering::Relaxed)
    }

    fn charge(&self, what: &str) -> Result<()> {
        let used = self.entries.fetch_add(1, Ordering::Relaxed);
        if used >= self.budget {
            Err(Error::Budget(format!(
                "memo budget of {} entries exhausted while computing {what}; \
                 {used} entries were stored before giving up",
                self.budget
            )))
        } else {
            Ok(())
        }
    }

    /// Exact permutation Tutte polynomial via the dispatch chain: isolated
    /// vertices factor out, components multiply, complete bipartite
    /// components use the closed form, and everything else averages the
    /// vertex deletions, memoized on the side-sensitive canonical code.
    pub fn compute_poly(&self, h: &BipGraph) -> Result<BiPoly> {
        let (core, r, l) = h.without_isolated();
        let mut acc = BiPoly::monomial(r as u32, l as u32, Rational::one());
        for comp in core.components() {
            acc *= &self.connected_poly(&comp)?;
        }
        Ok(acc)
    }

    fn connected_poly(&self, h: &BipGraph) -> Result<BiPoly> {
        if h.is_complete_bipartite() {
            return complete_bipartite_poly(h.side_a().len() as u32, h.side_b().len() as u32);
        }
        let code = bip_canonical_code(h, true);
        if let Some(hit) = self.poly_memo.get(&code) {
            return Ok(hit.clone());
        }
        self.charge("a permutation Tutte polynomial")?;
        let m = h.num_vertices() as i64;
        let mut sum = BiPoly::zero();
        for v in h.vertices().collect::<Vec<_>>() {
            sum += &self.compute_poly(&h.delete_vertex(v)?)?;
        }
        let poly = sum.scale(&rat(1, m));
        self.poly_memo.insert(code, poly.clone());
        Ok(poly)
    }

    /// Exact evaluation, equal to `compute_poly` followed by polynomial
    /// evaluation but memoized per (code, point) so large sweeps at a few
    /// points stay cheap.
    pub fn evaluate(&self, h: &BipGraph, pt: &EvalPoint) -> Result<Rational> {
        let (core, r, l) = h.without_isolated();
        let mut acc = rat_pow(&pt.x, r as u32) * rat_pow(&pt.y, l as u32);
        if acc.is_zero() {
            return Ok(acc);
        }
        for comp in core.components() {
            acc *= self.connected_eval(&comp, pt)?;
        }
        Ok(acc)
    }

    fn connected_eval(&self, h: &BipGraph, pt: &EvalPoint) -> Result<Rational> {
        if h.is_complete_bipartite() {
            return complete_bipartite_eval(
                h.side_a().len() as u32,
                h.side_b().len() as u32,
                pt,
            );
        }
        let code = bip_canonical_code(h, true);
        let key = (code, pt.clone());
        if let Some(hit) = self.eval_memo.get(&key) {
            return Ok(hit.clone());
        }
        self.charge("a permutation Tutte evaluation")?;
        let m = h.num_vertices() as i64;
        let mut sum = Rational::zero();
        for v in h.vertices().collect::<Vec<_>>() {
            sum += self.evaluate(&h.delete_vertex(v)?, pt)?;
        }
        let value = sum / rat(m, 1);
        self.eval_memo.insert(key, value.clone());
        Ok(value)
    }

    /// The alternating number alt(H): the extreme coefficient t_{a,l} =
    /// t_{r,b}, computed by the one-sided deletion recursion. Isolated
    /// vertices contribute factor 1 and components multiply.
    pub fn alt(&self, h: &BipGraph) -> Result<Rational> {
        let (core, _, _) = h.without_isolated();
        let mut acc = Rational::one();
        for comp in core.components() {
            acc *= self.alt_connected(&comp)?;
        }
        Ok(acc)
    }

    fn alt_connected(&self, h: &BipGraph) -> Result<Rational> {
        if h.is_complete_bipartite() {
            // alt(K_{a,b}) = a! b! / (a+b)!
            let (a, b) = (h.side_a().len() as i64, h.side_b().len() as i64);
            let mut v = Rational::one();
            for i in 1..=a {
                v *= rat(i, b + i);
            }
            return Ok(v);
        }
        let code = bip_canonical_code(h, true);
        if let Some(hit) = self.alt_memo.get(&code) {
            return Ok(hit.clone());
        }
        self.charge("an alternating number")?;
        let m = h.num_vertices() as i64;
        let mut sum = Rational::zero();
        for &v in h.side_a() {
            sum += self.alt(&h.delete_vertex(v)?)?;
        }
        let value = sum / rat(m, 1);
        self.alt_memo.insert(code, value.clone());
        Ok(value)
    }

    /// alt of a general simple graph: the volume of its independent-set
    /// polytope, via the averaging recursion over vertex deletions.
    pub fn alt_general(&self, g: &MultiGraph) -> Result<Rational> {
        if !g.is_simple() {
            return Err(Error::NotSimple);
        }
        self.alt_general_inner(g)
    }

    fn alt_general_inner(&self, g: &MultiGraph) -> Result<Rational> {
        // isolated vertices impose no constraint; remaining components
        // multiply because the polytope is a product
        let n = g.num_vertices();
        if g.num_edges() == 0 {
            return Ok(Rational::one());
        }
        let code = multigraph_canonical_code(g);
        if let Some(hit) = self.alt_general_memo.get(&code) {
            return Ok(hit.clone());
        }
        self.charge("a general alternating number")?;
        // Steingrimsson averaging needs no isolated vertices; strip them
        // first (they contribute factor 1)
        let isolated: Vec<u32> = (1..=n).filter(|&v| g.degree(v) == 0).collect();
        let value = if !isolated.is_empty() {
            let mut core = g.clone();
            for &v in isolated.iter().rev() {
                core = core.delete_vertex(v)?;
            }
            self.alt_general_inner(&core)?
        } else {
            let mut sum = Rational::zero();
            for v in 1..=n {
                sum += self.alt_general_inner(&g.delete_vertex(v)?)?;
            }
            sum / rat(2 * n as i64, 1)
        };
        self.alt_general_memo.insert(code, value.clone());
        Ok(value)
    }
}

/// Exact T̃_H by iterating all m! permutations; the independent oracle for
/// every recursion in this module. Isolated A-vertices are always
/// internally active and isolated B-vertices always externally active.
pub fn brute_force_poly(h: &BipGraph) -> Result<BiPoly> {
    brute_force_poly_limit(h, DEFAULT_BRUTE_LIMIT)
}

pub fn brute_force_poly_limit(h: &BipGraph, limit: usize) -> Result<BiPoly> {
    let m = h.num_vertices();
    if m > limit {
        return Err(Error::TooLarge(format!(
            "brute force over {m}! permutations exceeds the {limit}-vertex limit"
        )));
    }
    if m == 0 {
        return Ok(BiPoly::one());
    }
    let idx = h.indexed();
    let a = idx.side.iter().filter(|s| **s == Side::A).count();
    let b = m - a;
    let mut counts = vec![vec![0u64; b + 1]; a + 1];
    for_each_permutation(m, |rank| {
        let act = activity_counts(&idx, rank);
        counts[act.ia][act.ea] += 1;
    });
    let mut fact = Rational::one();
    for k in 1..=m as i64 {
        fact *= rat(k, 1);
    }
    let mut poly = BiPoly::zero();
    for (i, row) in counts.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            if c > 0 {
                poly.add_term(i as u32, j as u32, &(rat(c as i64, 1) / fact.clone()));
            }
        }
    }
    Ok(poly)
}

/// Activity counts of one rank assignment (`rank[v]` = position of v in the
/// permutation; a vertex is active iff its rank beats all its neighbors').
pub(crate) fn activity_counts(idx: &crate::graph::Indexed, rank: &[usize]) -> ActivityCount {
    let mut ia = 0;
    let mut ea = 0;
    for v in 0..rank.len() {
        if idx.adj[v].iter().all(|&u| rank[v] > rank[u]) {
            match idx.side[v] {
                Side::A => ia += 1,
                Side::B => ea += 1,
            }
        }
    }
    ActivityCount { ia, ea }
}

/// Heap's algorithm; calls `f` on each of the m! rank arrays exactly once.
fn for_each_permutation(m: usize, mut f: impl FnMut(&[usize])) {
    let mut rank: Vec<usize> = (0..m).collect();
    let mut c = vec![0usize; m];
    f(&rank);
    let mut i = 0;
    while i < m {
        if c[i] < i {
            if i % 2 == 0 {
                rank.swap(0, i);
            } else {
                rank.swap(c[i], i);
            }
            f(&rank);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Closed form for complete bipartite graphs: only pure x-powers and pure
/// y-powers appear,
/// T̃ = Σ_i a(a−1)…(a−i+1)·b / (m(m−1)…(m−i)) x^i + (same with a,b swapped) y^j.
pub fn complete_bipartite_poly(a: u32, b: u32) -> Result<BiPoly> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgs(
            "complete bipartite closed form needs a,b >= 1; isolated sides factor out".into(),
        ));
    }
    let m = (a + b) as i64;
    let mut poly = BiPoly::zero();
    let mut coeff = rat(a as i64 * b as i64, m * (m - 1));
    poly.add_term(1, 0, &coeff);
    for i in 2..=a as i64 {
        coeff *= rat(a as i64 - i + 1, m - i);
        poly.add_term(i as u32, 0, &coeff);
    }
    let mut coeff = rat(a as i64 * b as i64, m * (m - 1));
    poly.add_term(0, 1, &coeff);
    for j in 2..=b as i64 {
        coeff *= rat(b as i64 - j + 1, m - j);
        poly.add_term(0, j as u32, &coeff);
    }
    Ok(poly)
}

fn complete_bipartite_eval(a: u32, b: u32, pt: &EvalPoint) -> Result<Rational> {
    Ok(complete_bipartite_poly(a, b)?.eval(&pt.x, &pt.y))
}

/// Valid parameters of the H(a,b,c) family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HabcSpec {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl HabcSpec {
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self> {
        if a == 0 || b == 0 || c > b {
            return Err(Error::InvalidSpec);
        }
        Ok(HabcSpec { a, b, c })
    }

    pub fn graph(&self) -> BipGraph {
        BipGraph::habc(self.a, self.b, self.c).expect("spec validated")
    }
}

/// Exact T̃ of H(a,b,c) at a point via the dedicated three-parameter
/// recursion
/// S(a,b,c) = (a·S(a−1,b,c) + c·x·S(a,b−1,c−1) + (b−c)·S(a,b−1,c) + c·S(a,b,c−1)) / (a+b+c)
/// with boundaries S(0,b,c) = ((x+y)/2)^c y^{b−c}, S(a,0,c) = x^{a+c},
/// S(a,b,0) = T̃ of K_{a,b}.
pub fn habc_eval(spec: HabcSpec, pt: &EvalPoint) -> Rational {
    let mut memo: HashMap<(u32, u32, u32), Rational> = HashMap::new();
    habc_rec(spec.a, spec.b, spec.c, pt, &mut memo)
}

fn habc_rec(
    a: u32,
    b: u32,
    c: u32,
    pt: &EvalPoint,
    memo: &mut HashMap<(u32, u32, u32), Rational>,
) -> Rational {
    if let Some(hit) = memo.get(&(a, b, c)) {
        return hit.clone();
    }
    let value = if a == 0 {
        let half = (&pt.x + &pt.y) / rat(2, 1);
        rat_pow(&half, c) * rat_pow(&pt.y, b - c)
    } else if b == 0 {
        rat_pow(&pt.x, a + c)
    } else if c == 0 {
        complete_bipartite_eval(a, b, pt).expect("a,b >= 1")
    } else {
        let mut sum = rat(a as i64, 1) * habc_rec(a - 1, b, c, pt, memo);
        sum += rat(c as i64, 1) * &pt.x * habc_rec(a, b - 1, c - 1, pt, memo);
        if b > c {
            sum += rat((b - c) as i64, 1) * habc_rec(a, b - 1, c, pt, memo);
        }
        sum += rat(c as i64, 1) * habc_rec(a, b, c - 1, pt, memo);
        sum / rat((a + b + c) as i64, 1)
    };
    memo.insert((a, b, c), value.clone());
    value
}

/// Unbiased Monte Carlo estimate of T̃_H(x,y): sample one uniform real per
/// vertex, count the per-side maxima, and average x^{I(A)}·y^{I(B)}.
/// Deterministic for a fixed seed; exact float ties trigger a resample.
pub fn monte_carlo_eval(h: &BipGraph, x: f64, y: f64, samples: u64, seed: u64) -> McEstimate {
    assert!(samples >= 1, "need at least one sample");
    let idx = h.indexed();
    let m = idx.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values = Accumulator::default();
    let mut draws = vec![0.0f64; m];
    while values.count < samples {
        for slot in draws.iter_mut() {
            *slot = rng.gen::<f64>();
        }
        let mut ia = 0i32;
        let mut ea = 0i32;
        let mut tie = false;
        'verts: for v in 0..m {
            for &u in &idx.adj[v] {
                if draws[v] == draws[u] {
                    tie = true;
                    break 'verts;
                }
            }
            if idx.adj[v].iter().all(|&u| draws[v] > draws[u]) {
                match idx.side[v] {
                    Side::A => ia += 1,
                    Side::B => ea += 1,
                }
            }
        }
        if tie {
            continue;
        }
        values.push(x.powi(ia) * y.powi(ea));
    }
    values.estimate(seed)
}

/// Empirical probability that `tree` is the unique maximum-weight spanning
/// tree under i.i.d. uniform edge weights; equals alt(H[T]) in expectation.
pub fn mc_max_tree_prob(
    g: &MultiGraph,
    tree: &[u32],
    samples: u64,
    seed: u64,
) -> Result<McEstimate> {
    assert!(samples >= 1, "need at least one sample");
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !g.is_spanning_tree(tree) {
        return Err(Error::NotSpanningTree);
    }
    let tree_set: std::collections::BTreeSet<u32> = tree.iter().copied().collect();
    // fundamental cycle of every non-tree edge, precomputed once
    let cycles: Vec<(u32, Vec<u32>)> = g
        .edge_labels()
        .filter(|l| !tree_set.contains(l))
        .map(|l| Ok((l, g.fundamental_cycle(tree, l)?)))
        .collect::<Result<_>>()?;
    let m = g.num_edges();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values = Accumulator::default();
    let mut weights = vec![0.0f64; m + 1];
    while values.count < samples {
        for w in weights.iter_mut().skip(1) {
            *w = rng.gen::<f64>();
        }
        // T is the unique max-weight tree iff every non-tree edge is
        // strictly lighter than each tree edge on its fundamental cycle
        let mut is_max = true;
        let mut tie = false;
        'outer: for (f, cycle) in &cycles {
            for e in cycle {
                if weights[*f as usize] == weights[*e as usize] {
                    tie = true;
                    break 'outer;
                }
                if weights[*f as usize] > weights[*e as usize] {
                    is_max = false;
                    break 'outer;
                }
            }
        }
        if tie {
            continue;
        }
        values.push(if is_max { 1.0 } else { 0.0 });
    }
    Ok(values.estimate(seed))
}

#[derive(Default)]
struct Accumulator {
    count: u64,
    sum: f64,
    sum_sq: f64,
}

impl Accumulator {
    fn push(&mut self, v: f64) {
        self.count += 1;
        self.sum += v;
        self.sum_sq += v * v;
    }

    fn estimate(&self, seed: u64) -> McEstimate {
        let n = self.count as f64;
        let mean = self.sum / n;
        let std_error = if self.count > 1 {
            let var = ((self.sum_sq - n * mean * mean) / (n - 1.0)).max(0.0);
            (var / n).sqrt()
        } else {
            0.0
        };
        McEstimate {
            mean,
            std_error,
            samples: self.count,
            seed,
        }
    }
}

/// Multivariate permutation Tutte evaluation for a general simple graph:
/// the average over all permutations of the product of the weights of
/// active vertices (vertex i is active when its rank beats all neighbors).
pub fn multivar_brute_force(g: &MultiGraph, weights: &[Rational]) -> Result<Rational> {
    multivar_brute_force_limit(g, weights, DEFAULT_BRUTE_LIMIT)
}

pub fn multivar_brute_force_limit(
    g: &MultiGraph,
    weights: &[Rational],
    limit: usize,
) -> Result<Rational> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let n = g.num_vertices() as usize;
    if n > limit {
        return Err(Error::TooLarge(format!(
            "multivariate brute force exceeds the {limit}-vertex limit"
        )));
    }
    if weights.len() != n {
        return Err(Error::InvalidArgs(format!(
            "expected {n} vertex weights, got {}",
            weights.len()
        )));
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        adj[u as usize - 1].push(v as usize - 1);
        adj[v as usize - 1].push(u as usize - 1);
    }
    let mut set_counts: HashMap<u64, u64> = HashMap::new();
    for_each_permutation(n, |rank| {
        let mut active = 0u64;
        for v in 0..n {
            if adj[v].iter().all(|&u| rank[v] > rank[u]) {
                active |= 1 << v;
            }
        }
        *set_counts.entry(active).or_insert(0) += 1;
    });
    let mut fact = Rational::one();
    for k in 1..=n as i64 {
        fact *= rat(k, 1);
    }
    let mut total = Rational::zero();
    for (mask, count) in set_counts {
        let mut product = rat(count as i64, 1);
        for v in 0..n {
            if mask >> v & 1 == 1 {
                product *= &weights[v];
            }
        }
        total += product;
    }
    Ok(total / fact)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::rat_int;
    use std::str::FromStr;

    fn example_p5() -> BiPoly {
        BiPoly::from_str("2/15*x^3 + 4/15*x^2 + 1/3*x*y + 2/15*y^2 + 1/15*x + 1/15*y").unwrap()
    }

    #[test]
    fn brute_force_matches_worked_example() {
        let p5 = BipGraph::path(5);
        assert_eq!(brute_force_poly(&p5).unwrap(), example_p5());
        let k2 = BipGraph::complete_bipartite(1, 1);
        assert_eq!(
            brute_force_poly(&k2).unwrap(),
            BiPoly::from_str("1/2*x + 1/2*y").unwrap()
        );
        assert_eq!(brute_force_poly(&BipGraph::empty()).unwrap(), BiPoly::one());
        assert!(brute_force_poly_limit(&BipGraph::path(6), 5).is_err());
    }

    #[test]
    fn compute_poly_dispatch_cases() {
        let engine = Engine::new();
        let p5 = BipGraph::path(5);
        assert_eq!(engine.compute_poly(&p5).unwrap(), example_p5());

        // disjoint union of two K2: ((x+y)/2)^2
        let two_k2 = BipGraph::new(vec![1, 3], vec![2, 4], [(1, 2), (3, 4)]).unwrap();
        let k2 = (&BiPoly::x() + &BiPoly::y()).scale(&rat(1, 2));
        assert_eq!(engine.compute_poly(&two_k2).unwrap(), &k2 * &k2);

        let k22 = BipGraph::complete_bipartite(2, 2);
        assert_eq!(
            engine.compute_poly(&k22).unwrap(),
            BiPoly::from_str("1/6*x^2 + 1/3*x + 1/3*y + 1/6*y^2").unwrap()
        );
        assert_eq!(
            engine.compute_poly(&k22).unwrap(),
            brute_force_poly(&k22).unwrap()
        );
    }

    #[test]
    fn evaluate_known_points() {
        let engine = Engine::new();
        let p5 = BipGraph::path(5);
        assert_eq!(
            engine
                .evaluate(&p5, &EvalPoint::new(rat_int(2), rat_int(0)))
                .unwrap(),
            rat(34, 15)
        );
        // T(1,1) = 1 for any graph without isolated vertices
        for h in [
            BipGraph::path(6),
            BipGraph::complete_bipartite(3, 2),
            BipGraph::cycle(6).unwrap(),
        ] {
            assert_eq!(
                engine.evaluate(&h, &EvalPoint::new(rat_int(1), rat_int(1))).unwrap(),
                rat_int(1)
            );
        }
        let k13 = BipGraph::complete_bipartite(1, 3);
        assert_eq!(
            engine
                .evaluate(&k13, &EvalPoint::new(rat_int(0), rat_int(2)))
                .unwrap(),
            rat(7, 2)
        );
    }

    #[test]
    fn complete_bipartite_closed_form() {
        // K_{1,2}: (x + y + y^2)/3
        assert_eq!(
            complete_bipartite_poly(1, 2).unwrap(),
            BiPoly::from_str("1/3*x + 1/3*y + 1/3*y^2").unwrap()
        );
        assert_eq!(
            complete_bipartite_poly(2, 2).unwrap(),
            brute_force_poly(&BipGraph::complete_bipartite(2, 2)).unwrap()
        );
        // side-swap duality
        assert_eq!(
            complete_bipartite_poly(2, 1).unwrap(),
            complete_bipartite_poly(1, 2).unwrap().swap_vars()
        );
        assert_eq!(
            complete_bipartite_poly(2, 1).unwrap(),
            BiPoly::from_str("1/3*x^2 + 1/3*x + 1/3*y").unwrap()
        );
        assert!(complete_bipartite_poly(0, 3).is_err());
        // against brute force on a spread of sizes
        for (a, b) in [(1, 1), (1, 4), (3, 2), (4, 4), (2, 5)] {
            assert_eq!(
                complete_bipartite_poly(a, b).unwrap(),
                brute_force_poly(&BipGraph::complete_bipartite(a, b)).unwrap(),
                "K_({a},{b})"
            );
        }
    }

    #[test]
    fn habc_small_cases() {
        let pt = EvalPoint::new(rat(7, 3), rat(1, 2));
        // (1,1,0) is K2
        assert_eq!(
            habc_eval(HabcSpec::new(1, 1, 0).unwrap(), &pt),
            (rat(7, 3) + rat(1, 2)) / rat_int(2)
        );
        // recursion agrees with the generic engine on the built graph
        let engine = Engine::new();
        for (a, b, c) in [(1, 1, 1), (2, 2, 1), (2, 2, 2), (3, 2, 1), (1, 3, 2)] {
            let spec = HabcSpec::new(a, b, c).unwrap();
            for pt in [
                EvalPoint::new(rat_int(2), rat_int(0)),
                EvalPoint::new(rat_int(0), rat_int(2)),
                EvalPoint::new(rat_int(1), rat_int(1)),
                EvalPoint::new(rat(3, 2), rat(5, 7)),
            ] {
                assert_eq!(
                    habc_eval(spec, &pt),
                    engine.evaluate(&spec.graph(), &pt).unwrap(),
                    "H({a},{b},{c}) at ({},{})",
                    pt.x,
                    pt.y
                );
            }
        }
        assert!(HabcSpec::new(2, 1, 2).is_err());
    }

    #[test]
    fn habc_counterexample_rationals() {
        let spec = HabcSpec::new(19, 21, 21).unwrap();
        let at20 = habc_eval(spec, &EvalPoint::new(rat_int(2), rat_int(0)));
        let at02 = habc_eval(spec, &EvalPoint::new(rat_int(0), rat_int(2)));
        assert_eq!(
            at20.to_string(),
            "17823568079808010514820609/519645565199326904320"
        );
        assert_eq!(
            at02.to_string(),
            "205317845112145723813/7322325659223715408773120"
        );
        assert!(at20 * at02 < rat_int(1));
    }

    #[test]
    fn alt_values() {
        let engine = Engine::new();
        assert_eq!(engine.alt(&BipGraph::path(5)).unwrap(), rat(2, 15));
        assert_eq!(engine.alt(&BipGraph::complete_bipartite(1, 1)).unwrap(), rat(1, 2));
        assert_eq!(engine.alt(&BipGraph::complete_bipartite(2, 2)).unwrap(), rat(1, 6));
        for r in 2..=4 {
            let kb = BipGraph::complete_bipartite(r, r);
            let binom = crate::ratpoly::binomial(2 * r as i64, r as i64);
            assert_eq!(
                engine.alt(&kb).unwrap(),
                Rational::new(1.into(), binom),
                "alt(K_{r},{r})"
            );
        }
        // alt equals the extreme coefficient of the polynomial
        let h = BipGraph::new(vec![1, 3, 5], vec![2, 4], [(1, 2), (2, 3), (3, 4)]).unwrap();
        let poly = engine.compute_poly(&h).unwrap();
        let l = 0u32; // no isolated B vertices here
        assert_eq!(engine.alt(&h).unwrap(), poly.coeff(3, l));
    }

    #[test]
    fn alt_general_values() {
        let engine = Engine::new();
        let edge = MultiGraph::new(2, vec![(1, 2)]).unwrap();
        assert_eq!(engine.alt_general(&edge).unwrap(), rat(1, 2));
        let triangle = MultiGraph::new(3, vec![(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(engine.alt_general(&triangle).unwrap(), rat(1, 4));
        let looped = MultiGraph::new(1, vec![(1, 1)]).unwrap();
        assert!(engine.alt_general(&looped).is_err());
        // bipartite graphs give the same value through either path
        for h in [
            BipGraph::path(4),
            BipGraph::path(6),
            BipGraph::complete_bipartite(2, 3),
            BipGraph::cycle(6).unwrap(),
        ] {
            let ids: std::collections::BTreeMap<u32, u32> = h
                .vertices()
                .enumerate()
                .map(|(i, v)| (v, i as u32 + 1))
                .collect();
            let mg = MultiGraph::new(
                h.num_vertices() as u32,
                h.edges().map(|(u, v)| (ids[&u], ids[&v])).collect(),
            )
            .unwrap();
            assert_eq!(engine.alt_general(&mg).unwrap(), engine.alt(&h).unwrap());
        }
    }

    #[test]
    fn monte_carlo_basics() {
        let p5 = BipGraph::path(5);
        let est = monte_carlo_eval(&p5, 1.0, 1.0, 1000, 7);
        assert_eq!(est.mean, 1.0);
        assert_eq!(est.std_error, 0.0);
        let e1 = monte_carlo_eval(&p5, 2.0, 0.0, 20_000, 99);
        let e2 = monte_carlo_eval(&p5, 2.0, 0.0, 20_000, 99);
        assert_eq!(e1.mean, e2.mean); // deterministic for a fixed seed
        let exact = 34.0 / 15.0;
        assert!((e1.mean - exact).abs() <= 6.0 * e1.std_error);
    }

    #[test]
    fn max_tree_probability() {
        let tree = MultiGraph::new(4, vec![(1, 2), (2, 3), (2, 4)]).unwrap();
        let est = mc_max_tree_prob(&tree, &[1, 2, 3], 100, 5).unwrap();
        assert_eq!(est.mean, 1.0); // unique spanning tree
        let triangle = MultiGraph::new(3, vec![(1, 2), (2, 3), (1, 3)]).unwrap();
        let est = mc_max_tree_prob(&triangle, &[1, 2], 40_000, 11).unwrap();
        assert!((est.mean - 1.0 / 3.0).abs() <= 6.0 * est.std_error);
        assert!(mc_max_tree_prob(&triangle, &[1], 10, 0).is_err());
    }

    #[test]
    fn multivar_cases() {
        let single = MultiGraph::new(1, vec![]).unwrap();
        assert_eq!(
            multivar_brute_force(&single, &[rat(3, 7)]).unwrap(),
            rat(3, 7)
        );
        let k2 = MultiGraph::new(2, vec![(1, 2)]).unwrap();
        assert_eq!(
            multivar_brute_force(&k2, &[rat_int(3), rat_int(5)]).unwrap(),
            rat_int(4)
        );
        // specializing all A-weights to x and B-weights to y recovers T̃
        let h = BipGraph::path(5);
        let ids: std::collections::BTreeMap<u32, u32> = h
            .vertices()
            .enumerate()
            .map(|(i, v)| (v, i as u32 + 1))
            .collect();
        let mg = MultiGraph::new(
            5,
            h.edges().map(|(u, v)| (ids[&u], ids[&v])).collect(),
        )
        .unwrap();
        let idx = h.indexed();
        let (x, y) = (rat(5, 3), rat(-2, 7));
        let weights: Vec<Rational> = (0..5)
            .map(|i| match idx.side[i] {
                Side::A => x.clone(),
                Side::B => y.clone(),
            })
            .collect();
        let direct = multivar_brute_force(&mg, &weights).unwrap();
        assert_eq!(direct, brute_force_poly(&h).unwrap().eval(&x, &y));
    }

    #[test]
    fn budget_errors_stop_cleanly() {
        let engine = Engine::with_budget(2);
        // a path of length 9 needs more than two memo entries
        let err = engine.compute_poly(&BipGraph::path(9)).unwrap_err();
        assert!(matches!(err, Error::Budget(_)));
    }
}
