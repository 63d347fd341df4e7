//! Executable forms of the identities and inequalities: Brylawski sums,
//! Conde–Merino–Welsh-type products, the rectangle and degree-product
//! bounds, gluing and leaf-deletion comparisons, and the H(a,b,c)
//! counterexample scan. Usable both as a test suite and as a
//! counterexample-search harness.
//!
//! Every verdict is an exact rational comparison; thresholds like 2.9243
//! enter as exact fractions (29243/10000).

use num_traits::{One, Signed, Zero};

use crate::classic_tutte::tutte_del_con;
use crate::graph::{BipGraph, MultiGraph, Side};
use crate::perm_tutte::{habc_eval, Engine, EvalPoint, HabcSpec};
use crate::ratpoly::{binomial, rat, rat_int, Rational};
use crate::{Error, Result};

/// Outcome of one check on one instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Holds,
    Violated,
    /// The theorem's hypotheses exclude this instance; not a failure.
    NotApplicable,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Holds => "holds",
            CheckStatus::Violated => "violated",
            CheckStatus::NotApplicable => "not-applicable",
        }
    }
}

/// One exact comparison: `holds` reflects the check's comparison on
/// lhs/rhs, and `margin` is always lhs − rhs.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub check_name: String,
    pub instance: String,
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
    pub margin: Rational,
    pub status: CheckStatus,
}

impl CheckReport {
    fn comparison(
        name: impl Into<String>,
        instance: impl Into<String>,
        lhs: Rational,
        rhs: Rational,
        holds: bool,
    ) -> Self {
        let margin = lhs.clone() - rhs.clone();
        CheckReport {
            check_name: name.into(),
            instance: instance.into(),
            lhs,
            rhs,
            holds,
            margin,
            status: if holds {
                CheckStatus::Holds
            } else {
                CheckStatus::Violated
            },
        }
    }

    pub fn ge(name: impl Into<String>, instance: impl Into<String>, lhs: Rational, rhs: Rational) -> Self {
        let holds = lhs >= rhs;
        Self::comparison(name, instance, lhs, rhs, holds)
    }

    pub fn gt(name: impl Into<String>, instance: impl Into<String>, lhs: Rational, rhs: Rational) -> Self {
        let holds = lhs > rhs;
        Self::comparison(name, instance, lhs, rhs, holds)
    }

    pub fn le(name: impl Into<String>, instance: impl Into<String>, lhs: Rational, rhs: Rational) -> Self {
        let holds = lhs <= rhs;
        Self::comparison(name, instance, lhs, rhs, holds)
    }

    pub fn eq(name: impl Into<String>, instance: impl Into<String>, lhs: Rational, rhs: Rational) -> Self {
        let holds = lhs == rhs;
        Self::comparison(name, instance, lhs, rhs, holds)
    }

    pub fn not_applicable(name: impl Into<String>, instance: impl Into<String>) -> Self {
        CheckReport {
            check_name: name.into(),
            instance: instance.into(),
            lhs: Rational::zero(),
            rhs: Rational::zero(),
            holds: true,
            margin: Rational::zero(),
            status: CheckStatus::NotApplicable,
        }
    }

    /// One newline-delimited JSON object per report.
    pub fn to_json(&self) -> String {
        serde_json::json!({
            "check": self.check_name,
            "instance": self.instance,
            "lhs": self.lhs.to_string(),
            "rhs": self.rhs.to_string(),
            "holds": self.holds,
            "margin": self.margin.to_string(),
            "status": self.status.as_str(),
        })
        .to_string()
    }
}

/// The alternating Brylawski sum
/// `Σ_{i=0}^h Σ_{j=0}^{h−i} C(h−i,j) (−1)^j t_{i,j}(H)`
/// over the coefficients of the permutation Tutte polynomial.
pub fn brylawski_sum(engine: &Engine, h: &BipGraph, order: u32) -> Result<Rational> {
    let poly = engine.compute_poly(h)?;
    let mut sum = Rational::zero();
    for (&(i, j), coeff) in poly.terms() {
        if i + j > order {
            continue;
        }
        let binom = binomial((order - i) as i64, j as i64);
        let signed = if j % 2 == 0 { binom } else { -binom };
        sum += Rational::from_integer(signed) * coeff;
    }
    Ok(sum)
}

/// Closed form the bipartite Brylawski sum must equal: 0 below the vertex
/// count, `(−1)^b alt(H) C(b+k, k)` at v(H)+k.
pub fn brylawski_expected(engine: &Engine, h: &BipGraph, order: u32) -> Result<Rational> {
    let m = h.num_vertices() as u32;
    if order < m {
        return Ok(Rational::zero());
    }
    let k = (order - m) as i64;
    let b = h.side_b().len() as i64;
    let alt = engine.alt(h)?;
    let magnitude = alt * Rational::from_integer(binomial(b + k, k));
    Ok(if b % 2 == 0 { magnitude } else { -magnitude })
}

/// Same alternating sum over the coefficients of T_G for a connected
/// multigraph (graphic matroid of rank n−1).
pub fn brylawski_graph_sum(g: &MultiGraph, order: u32) -> Result<Rational> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let poly = tutte_del_con(g);
    let mut sum = Rational::zero();
    for (&(i, j), coeff) in poly.terms() {
        if i + j > order {
            continue;
        }
        let binom = binomial((order - i) as i64, j as i64);
        let signed = if j % 2 == 0 { binom } else { -binom };
        sum += Rational::from_integer(signed) * coeff;
    }
    Ok(sum)
}

/// Closed form for the graphic version: 0 for h < m, else
/// `(−1)^{m−r} C(h−r, h−m)` with r = n−1.
pub fn brylawski_graph_expected(g: &MultiGraph, order: u32) -> Result<Rational> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let m = g.num_edges() as i64;
    let r = g.num_vertices() as i64 - 1;
    let order = order as i64;
    if order < m {
        return Ok(Rational::zero());
    }
    let magnitude = Rational::from_integer(binomial(order - r, order - m));
    Ok(if (m - r) % 2 == 0 { magnitude } else { -magnitude })
}

/// `P_x(H) = T̃_H(x,0) · T̃_H(0,x)`.
pub fn cmw_product(engine: &Engine, h: &BipGraph, x: &Rational) -> Result<Rational> {
    let first = engine.evaluate(h, &EvalPoint::new(x.clone(), Rational::zero()))?;
    let second = engine.evaluate(h, &EvalPoint::new(Rational::zero(), x.clone()))?;
    Ok(first * second)
}

/// All applicable Conde–Merino–Welsh-type inequality checks on one graph.
/// Checks whose hypotheses the graph fails are reported as not-applicable
/// rather than violations.
pub fn check_inequality_suite(engine: &Engine, h: &BipGraph, label: &str) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    let isolated_free = h.isolated_vertices().is_empty() && h.num_vertices() > 0;
    let min_degree = h.min_degree().unwrap_or(0);
    let one = Rational::one();

    // T̃(4,0)·T̃(0,4) >= T̃(2,2)^2
    if isolated_free {
        let lhs = cmw_product(engine, h, &rat_int(4))?;
        let t22 = engine.evaluate(h, &EvalPoint::new(rat_int(2), rat_int(2)))?;
        reports.push(CheckReport::ge("lem442", label, lhs, t22.clone() * t22));
    } else {
        reports.push(CheckReport::not_applicable("lem442", label));
    }

    // rectangle lemma, both directions, sampled in all four regimes
    let mixed = [(rat_int(2), rat(1, 2)), (rat(1, 3), rat_int(3)), (rat_int(3), rat_int(1))];
    let aligned = [
        (rat_int(2), rat_int(3)),
        (rat(3, 2), rat(5, 4)),
        (rat(1, 2), rat(1, 3)),
        (rat(2, 3), rat(3, 4)),
    ];
    for (x, y) in mixed {
        let lhs = engine.evaluate(h, &EvalPoint::new(x.clone(), y.clone()))?;
        let rhs = engine.evaluate(h, &EvalPoint::new(x.clone(), one.clone()))?
            * engine.evaluate(h, &EvalPoint::new(one.clone(), y.clone()))?;
        reports.push(CheckReport::ge(
            format!("rectangle-lower({x},{y})"),
            label,
            lhs,
            rhs,
        ));
    }
    for (x, y) in aligned {
        let lhs = engine.evaluate(h, &EvalPoint::new(x.clone(), y.clone()))?;
        let rhs = engine.evaluate(h, &EvalPoint::new(x.clone(), one.clone()))?
            * engine.evaluate(h, &EvalPoint::new(one.clone(), y.clone()))?;
        reports.push(CheckReport::le(
            format!("rectangle-upper({x},{y})"),
            label,
            lhs,
            rhs,
        ));
    }

    // degree product lower bound in the mixed regimes
    for (x, y) in [
        (rat_int(3), Rational::zero()),
        (Rational::zero(), rat_int(3)),
        (rat_int(2), rat(1, 2)),
        (rat(1, 2), rat_int(2)),
    ] {
        let lhs = engine.evaluate(h, &EvalPoint::new(x.clone(), y.clone()))?;
        let mut rhs = Rational::one();
        for &v in h.side_a() {
            let d = h.degree(v) as i64;
            rhs *= Rational::one() + (x.clone() - &one) / rat(d + 1, 1);
        }
        for &v in h.side_b() {
            let d = h.degree(v) as i64;
            rhs *= Rational::one() + (y.clone() - &one) / rat(d + 1, 1);
        }
        reports.push(CheckReport::ge(
            format!("degree-product({x},{y})"),
            label,
            lhs,
            rhs,
        ));
    }

    // delta theorem: P_{2+1/delta} >= 1, Jackson being delta = 1
    if min_degree >= 1 {
        let x = rat_int(2) + rat(1, min_degree as i64);
        let lhs = cmw_product(engine, h, &x)?;
        reports.push(CheckReport::ge(
            format!("delta-theorem(x={x})"),
            label,
            lhs,
            one.clone(),
        ));
        let jackson = cmw_product(engine, h, &rat_int(3))?;
        reports.push(CheckReport::ge("jackson(x=3)", label, jackson, one.clone()));
    } else {
        reports.push(CheckReport::not_applicable("delta-theorem", label));
        reports.push(CheckReport::not_applicable("jackson(x=3)", label));
    }

    // regular graphs: T̃(x, 2−x) >= 1 on [0,2]
    if h.is_regular() && min_degree >= 1 {
        for x in [rat_int(1), rat(3, 2), rat_int(2)] {
            let lhs = engine.evaluate(h, &EvalPoint::new(x.clone(), rat_int(2) - &x))?;
            reports.push(CheckReport::ge(
                format!("regular(x={x})"),
                label,
                lhs,
                one.clone(),
            ));
        }
    } else {
        reports.push(CheckReport::not_applicable("regular", label));
    }

    // improved Jackson constant: strict inequality at x = 2.9243
    if isolated_free {
        let x = rat(29_243, 10_000);
        let lhs = cmw_product(engine, h, &x)?;
        reports.push(CheckReport::gt("x-2.9243", label, lhs, one));
    } else {
        reports.push(CheckReport::not_applicable("x-2.9243", label));
    }

    Ok(reports)
}

/// Glues two rooted trees by identifying their roots and checks the gluing
/// inequalities at (x, 0): with the glue vertex in A,
/// `x·T̃_H >= T̃_{H1}·T̃_{H2}`, in B the same without the factor, plus the
/// product consequence `x·P_x(H) >= P_x(H1)·P_x(H2)`.
pub fn check_gluing(
    engine: &Engine,
    h1: &BipGraph,
    root1: u32,
    h2: &BipGraph,
    root2: u32,
    x: &Rational,
) -> Result<Vec<CheckReport>> {
    if !h1.is_tree() || !h2.is_tree() {
        return Err(Error::InvalidArgs("gluing expects two trees".into()));
    }
    if x < &Rational::one() {
        return Err(Error::InvalidArgs("gluing lemma needs x >= 1".into()));
    }
    let side1 = h1.side_of(root1)?;
    let side2 = h2.side_of(root2)?;
    if side1 != side2 {
        return Err(Error::IncompatibleSides);
    }
    let glued = glue_trees(h1, root1, h2, root2)?;
    let label = format!(
        "glue({} @{root1}, {} @{root2})",
        h1.descriptor(),
        h2.descriptor()
    );

    let at = |g: &BipGraph, x: &Rational, y: &Rational| {
        engine.evaluate(g, &EvalPoint::new(x.clone(), y.clone()))
    };
    let zero = Rational::zero();
    let product = at(h1, x, &zero)? * at(h2, x, &zero)?;
    let side_report = match side1 {
        Side::A => CheckReport::ge(
            "gluing-side-a",
            label.clone(),
            x.clone() * at(&glued, x, &zero)?,
            product,
        ),
        Side::B => CheckReport::ge("gluing-side-b", label.clone(), at(&glued, x, &zero)?, product),
    };
    let p_glued = cmw_product(engine, &glued, x)?;
    let p_parts = cmw_product(engine, h1, x)? * cmw_product(engine, h2, x)?;
    let product_report = CheckReport::ge("gluing-product", label, x.clone() * p_glued, p_parts);
    Ok(vec![side_report, product_report])
}

/// The glued tree itself: H2's vertices are shifted to fresh ids and its
/// root is identified with H1's root.
pub fn glue_trees(h1: &BipGraph, root1: u32, h2: &BipGraph, root2: u32) -> Result<BipGraph> {
    let side1 = h1.side_of(root1)?;
    if h2.side_of(root2)? != side1 {
        return Err(Error::IncompatibleSides);
    }
    let offset = h1.vertices().max().unwrap_or(0) + 1;
    let map = |v: u32| if v == root2 { root1 } else { v + offset };
    let side_a: Vec<u32> = h1
        .side_a()
        .iter()
        .copied()
        .chain(h2.side_a().iter().copied().filter(|&v| v != root2).map(|v| v + offset))
        .collect();
    let side_b: Vec<u32> = h1
        .side_b()
        .iter()
        .copied()
        .chain(h2.side_b().iter().copied().filter(|&v| v != root2).map(|v| v + offset))
        .collect();
    let edges: Vec<(u32, u32)> = h1
        .edges()
        .chain(h2.edges().map(|(u, v)| (map(u), map(v))))
        .collect();
    BipGraph::new(side_a, side_b, edges)
}

/// Leaf deletion comparison at (x, 0): deleting a degree-1 vertex costs at
/// most a factor (x+1)/2 from side A and 1/2 from side B.
pub fn check_leaf_deletion(
    engine: &Engine,
    h: &BipGraph,
    v: u32,
    x: &Rational,
) -> Result<CheckReport> {
    if h.degree(v) != 1 {
        return Err(Error::NotALeaf(v));
    }
    if x < &Rational::one() {
        return Err(Error::InvalidArgs("leaf deletion needs x >= 1".into()));
    }
    let side = h.side_of(v)?;
    let zero = Rational::zero();
    let lhs = engine.evaluate(h, &EvalPoint::new(x.clone(), zero.clone()))?;
    let rest = engine.evaluate(&h.delete_vertex(v)?, &EvalPoint::new(x.clone(), zero))?;
    let (name, factor) = match side {
        Side::A => ("leaf-deletion-a", (x.clone() + Rational::one()) / rat_int(2)),
        Side::B => ("leaf-deletion-b", rat(1, 2)),
    };
    Ok(CheckReport::ge(
        name,
        format!("{} leaf={v} x={x}", h.descriptor()),
        lhs,
        factor * rest,
    ))
}

/// Scans the H(a,b,c) grid for violations of `P_x >= 1`, reporting every
/// violating spec sorted by margin (most negative first).
pub fn counterexample_scan(
    a_range: std::ops::RangeInclusive<u32>,
    b_range: std::ops::RangeInclusive<u32>,
    c_range: std::ops::RangeInclusive<u32>,
    x: &Rational,
) -> Vec<CheckReport> {
    use rayon::prelude::*;
    let specs: Vec<HabcSpec> = a_range
        .flat_map(|a| {
            let c_range = c_range.clone();
            b_range.clone().flat_map(move |b| {
                c_range
                    .clone()
                    .filter_map(move |c| HabcSpec::new(a, b, c).ok())
            })
        })
        .collect();
    let mut violations: Vec<CheckReport> = specs
        .par_iter()
        .map(|spec| {
            let at_x0 = habc_eval(*spec, &EvalPoint::new(x.clone(), Rational::zero()));
            let at_0x = habc_eval(*spec, &EvalPoint::new(Rational::zero(), x.clone()));
            CheckReport::ge(
                format!("habc-scan(x={x})"),
                format!("H({},{},{})", spec.a, spec.b, spec.c),
                at_x0 * at_0x,
                Rational::one(),
            )
        })
        .filter(|r| !r.holds)
        .collect();
    violations.sort_by(|p, q| p.margin.cmp(&q.margin).then(p.instance.cmp(&q.instance)));
    violations
}

/// Structural identity checks for one graph: duality, normalization,
/// extreme-coefficient symmetry, the parabola collapse, and the Brylawski
/// sums at small orders.
pub fn check_identities(engine: &Engine, h: &BipGraph, label: &str) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    let poly = engine.compute_poly(h)?;
    let m = h.num_vertices() as u32;

    // coefficients are a probability distribution
    reports.push(CheckReport::eq(
        "normalization",
        label,
        poly.coeff_sum(),
        Rational::one(),
    ));
    let nonneg = poly.terms().all(|(_, c)| !c.is_negative());
    reports.push(CheckReport::eq(
        "nonnegative-coefficients",
        label,
        if nonneg { Rational::one() } else { Rational::zero() },
        Rational::one(),
    ));

    // side swap duality
    let swapped = engine.compute_poly(&h.swap_sides())?;
    reports.push(CheckReport::eq(
        "duality",
        label,
        if swapped == poly.swap_vars() { Rational::one() } else { Rational::zero() },
        Rational::one(),
    ));

    // t_{a,0} = t_{0,b} for isolated-free graphs
    if h.isolated_vertices().is_empty() && h.num_vertices() > 0 {
        let a = h.side_a().len() as u32;
        let b = h.side_b().len() as u32;
        reports.push(CheckReport::eq(
            "extreme-coefficients",
            label,
            poly.coeff(a, 0),
            poly.coeff(0, b),
        ));
    }

    // parabola collapse at sample rationals x (not 0 or 1):
    // T̃(x, x/(x−1)) = alt(H) x^m / (x−1)^b
    let alt = engine.alt(h)?;
    let b = h.side_b().len() as u32;
    for x in [rat_int(2), rat(3, 2), rat(-1, 2), rat(7, 3), rat(-5, 3)] {
        let y = x.clone() / (x.clone() - Rational::one());
        let lhs = poly.eval(&x, &y);
        let rhs = alt.clone() * crate::ratpoly::rat_pow(&x, m)
            / crate::ratpoly::rat_pow(&(x.clone() - Rational::one()), b);
        reports.push(CheckReport::eq(format!("parabola(x={x})"), label, lhs, rhs));
    }
    reports.push(CheckReport::eq(
        "parabola(2,2)",
        label,
        poly.eval(&rat_int(2), &rat_int(2)),
        alt * crate::ratpoly::rat_pow(&rat_int(2), m),
    ));

    // Brylawski sums: zero below v(H), closed form just above
    for order in 0..m {
        reports.push(CheckReport::eq(
            format!("brylawski(h={order})"),
            label,
            brylawski_sum(engine, h, order)?,
            Rational::zero(),
        ));
    }
    for k in 0..=3u32 {
        reports.push(CheckReport::eq(
            format!("brylawski(h=m+{k})"),
            label,
            brylawski_sum(engine, h, m + k)?,
            brylawski_expected(engine, h, m + k)?,
        ));
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    #[test]
    fn brylawski_p5_cases() {
        let engine = Engine::new();
        let p5 = BipGraph::path(5);
        // h=1: t00 - t01 + t10 = 0 - 1/15 + 1/15 = 0
        assert_eq!(brylawski_sum(&engine, &p5, 1).unwrap(), Rational::zero());
        assert_eq!(brylawski_sum(&engine, &p5, 4).unwrap(), Rational::zero());
        // h = 5 = v(H): (-1)^2 alt C(2,0) = 2/15
        assert_eq!(brylawski_sum(&engine, &p5, 5).unwrap(), rat(2, 15));
        assert_eq!(
            brylawski_expected(&engine, &p5, 5).unwrap(),
            rat(2, 15)
        );
        for order in 0..5 {
            assert_eq!(brylawski_sum(&engine, &p5, order).unwrap(), Rational::zero());
        }
        for k in 0..=3 {
            assert_eq!(
                brylawski_sum(&engine, &p5, 5 + k).unwrap(),
                brylawski_expected(&engine, &p5, 5 + k).unwrap()
            );
        }
    }

    #[test]
    fn brylawski_graph_cases() {
        let triangle = MultiGraph::new(3, vec![(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(brylawski_graph_sum(&triangle, 1).unwrap(), Rational::zero());
        // h = m = 3: (-1)^{3-2} C(1,0) = -1
        assert_eq!(brylawski_graph_sum(&triangle, 3).unwrap(), rat_int(-1));
        assert_eq!(brylawski_graph_expected(&triangle, 3).unwrap(), rat_int(-1));
        // trees: T = x^{n-1}, all sums below m vanish
        let tree = MultiGraph::new(4, vec![(1, 2), (2, 3), (2, 4)]).unwrap();
        for order in 0..3 {
            assert_eq!(brylawski_graph_sum(&tree, order).unwrap(), Rational::zero());
        }
        let disconnected = MultiGraph::new(3, vec![(1, 2)]).unwrap();
        assert!(brylawski_graph_sum(&disconnected, 1).is_err());
    }

    #[test]
    fn cmw_products() {
        let engine = Engine::new();
        assert_eq!(
            cmw_product(&engine, &BipGraph::path(5), &rat_int(2)).unwrap(),
            rat(68, 45)
        );
        assert_eq!(
            cmw_product(&engine, &BipGraph::complete_bipartite(1, 2), &rat_int(2)).unwrap(),
            rat(4, 3)
        );
    }

    #[test]
    fn inequality_suite_p5() {
        let engine = Engine::new();
        let reports = check_inequality_suite(&engine, &BipGraph::path(5), "P5").unwrap();
        assert!(reports.iter().all(|r| r.holds), "{reports:#?}");
        // P5 is not regular: that check reports not-applicable
        assert!(reports
            .iter()
            .any(|r| r.check_name == "regular" && r.status == CheckStatus::NotApplicable));
    }

    #[test]
    fn inequality_suite_regular_graphs() {
        let engine = Engine::new();
        for h in [
            BipGraph::complete_bipartite(2, 2),
            BipGraph::complete_bipartite(3, 3),
            BipGraph::cycle(8).unwrap(),
        ] {
            let reports = check_inequality_suite(&engine, &h, "regular-case").unwrap();
            assert!(reports.iter().all(|r| r.holds));
            assert!(reports
                .iter()
                .any(|r| r.check_name.starts_with("regular(") && r.status == CheckStatus::Holds));
        }
    }

    #[test]
    fn gluing_two_k2_makes_p3() {
        let engine = Engine::new();
        let k2 = BipGraph::complete_bipartite(1, 1);
        // glue at the B-endpoints: v in B
        let reports = check_gluing(&engine, &k2, 2, &k2, 2, &rat_int(2)).unwrap();
        assert!(reports.iter().all(|r| r.holds), "{reports:#?}");
        let glued = glue_trees(&k2, 2, &k2, 2).unwrap();
        assert_eq!(glued.num_vertices(), 3);
        assert!(glued.is_tree());
        // P(P3) = 4/3 >= P(K2)^2/2 = 1/8... the product consequence
        let p_glued = cmw_product(&engine, &glued, &rat_int(2)).unwrap();
        assert_eq!(p_glued, rat(4, 3));
        // two P3 glued at degree-1 B-vertices gives the P5 case
        let p3 = BipGraph::path(3).swap_sides(); // ends in B
        let reports = check_gluing(&engine, &p3, 1, &p3, 1, &rat_int(2)).unwrap();
        assert!(reports.iter().all(|r| r.holds));
        assert!(check_gluing(&engine, &k2, 1, &k2, 2, &rat_int(2)).is_err());
    }

    #[test]
    fn gluing_degenerate_single_vertex() {
        let engine = Engine::new();
        let k2 = BipGraph::complete_bipartite(1, 1);
        let single = BipGraph::new(vec![], vec![1], []).unwrap();
        let reports = check_gluing(&engine, &k2, 2, &single, 1, &rat_int(2)).unwrap();
        assert!(reports.iter().all(|r| r.holds));
        let glued = glue_trees(&k2, 2, &single, 1).unwrap();
        assert_eq!(bip_code(&glued), bip_code(&k2));
    }

    fn bip_code(h: &BipGraph) -> crate::graph::CanonicalCode {
        crate::graph::bip_canonical_code(h, true)
    }

    #[test]
    fn leaf_deletion_cases() {
        let engine = Engine::new();
        let p5 = BipGraph::path(5);
        let report = check_leaf_deletion(&engine, &p5, 1, &rat_int(2)).unwrap();
        assert!(report.holds);
        assert_eq!(report.lhs, rat(34, 15));
        // P3 with its leaves on the B side
        let p3 = BipGraph::path(3).swap_sides();
        let report = check_leaf_deletion(&engine, &p3, 1, &rat_int(2)).unwrap();
        assert_eq!(report.check_name, "leaf-deletion-b");
        assert!(report.holds);
        let star = BipGraph::complete_bipartite(1, 3);
        assert!(matches!(
            check_leaf_deletion(&engine, &star, 1, &rat_int(2)),
            Err(Error::NotALeaf(1))
        ));
    }

    #[test]
    fn scan_finds_the_paper_counterexample() {
        let hits = counterexample_scan(18..=19, 20..=21, 20..=21, &rat_int(2));
        assert!(hits.iter().any(|r| r.instance == "H(19,21,21)"));
        // tiny specs admit no violation at x = 2
        let tiny = counterexample_scan(1..=3, 1..=3, 0..=3, &rat_int(2));
        assert!(tiny.is_empty(), "{tiny:#?}");
        // x = 3 is the Jackson regime: no violations
        let jackson = counterexample_scan(18..=19, 20..=21, 20..=21, &rat_int(3));
        assert!(jackson.is_empty());
    }

    #[test]
    fn identities_on_small_graphs() {
        let engine = Engine::new();
        for h in [
            BipGraph::path(5),
            BipGraph::complete_bipartite(2, 3),
            BipGraph::new(vec![1, 3], vec![2], [(1, 2)]).unwrap(),
            BipGraph::empty(),
        ] {
            let reports = check_identities(&engine, &h, "case").unwrap();
            assert!(reports.iter().all(|r| r.holds), "{}: {reports:#?}", h.descriptor());
        }
    }

    #[test]
    fn report_json_shape() {
        let r = CheckReport::ge("demo", "inst", rat(3, 2), rat_int(1));
        let json = r.to_json();
        assert!(json.contains("\"check\":\"demo\""));
        assert!(json.contains("\"lhs\":\"3/2\""));
        assert!(json.contains("\"holds\":true"));
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["margin"], "1/2");
        assert_eq!(parsed["status"], "holds");
    }
}
