use permutte::perm_tutte::{Engine, EvalPoint, brute_force_poly_limit};
use permutte::ratpoly::rat_int;
use permutte::survey::{FreeTrees, levels_to_bipgraph};
use std::time::Instant;
fn main() {
    let engine = Engine::new();
    let mut rows: Vec<(permutte::ratpoly::Rational, Vec<u8>)> = FreeTrees::new(12)
        .map(|seq| {
            let t = levels_to_bipgraph(&seq);
            let p = engine.evaluate(&t, &EvalPoint::new(rat_int(2), rat_int(0))).unwrap()
                * engine.evaluate(&t, &EvalPoint::new(rat_int(0), rat_int(2))).unwrap();
            (p, seq)
        })
        .collect();
    rows.sort_by(|a, b| a.0.cmp(&b.0));
    for (p, seq) in rows.iter().take(4) {
        println!("P = {} ({}) seq={:?}", p, permutte::ratpoly::decimal_4dp_truncated(p), seq);
    }
    // independent 12!-permutation oracle on the two smallest
    for (p, seq) in rows.iter().take(2) {
        let t = levels_to_bipgraph(seq);
        let t0 = Instant::now();
        let poly = brute_force_poly_limit(&t, 12).unwrap();
        let bp = poly.eval(&rat_int(2), &rat_int(0)) * poly.eval(&rat_int(0), &rat_int(2));
        println!("brute: {} vs engine: {} equal={} ({:?})", bp, p, bp == *p, t0.elapsed());
    }
}
