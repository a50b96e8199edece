//! Cross-checks between the generating-function pipelines, the brute-force
//! oracle and each other.

use minorfree::class::{GraphClass, Markers};
use minorfree::maximal::MaximalPipeline;
use minorfree::oracle::count_all;
use minorfree::series::MarkerPoly;
use minorfree::tower::MinorFreeTower;
use rug::{Integer, Rational};

fn one() -> Rational {
    Rational::from(1)
}

#[test]
fn towers_match_the_oracle_up_to_six_vertices() {
    for class in [GraphClass::K33, GraphClass::K33Plus] {
        let tower = MinorFreeTower::<Rational>::build(class, Markers::unit(), 6).unwrap();
        let (g, c, b) =
            (tower.all_counts().unwrap(), tower.connected_counts().unwrap(), tower.biconnected_counts().unwrap());
        // the series counts the single edge as 2-connected, the oracle does not
        assert_eq!(b[2], 1);
        for n in 3..=6 {
            let o = count_all(n, class, false).unwrap();
            assert_eq!(
                (g[n].clone(), c[n].clone(), b[n].clone()),
                (o.g.into(), o.c.into(), o.b.into()),
                "{class} n = {n}"
            );
        }
    }
}

#[test]
fn maximal_counts_from_six_vertices_match_the_oracle() {
    let m = MaximalPipeline::<Rational>::build(&one(), 6).unwrap().counts().unwrap();
    assert_eq!(m[6], Integer::from(count_all(6, GraphClass::K33, false).unwrap().m.unwrap()));
}

#[test]
fn count_orderings_hold() {
    let order = 20;
    let k33 = MinorFreeTower::<Rational>::build(GraphClass::K33, Markers::unit(), order).unwrap();
    let plus = MinorFreeTower::<Rational>::build(GraphClass::K33Plus, Markers::unit(), order).unwrap();
    let (g, c, b) = (k33.all_counts().unwrap(), k33.connected_counts().unwrap(), k33.biconnected_counts().unwrap());
    for n in 3..=order {
        assert!(g[n] >= c[n] && c[n] >= b[n], "n = {n}");
    }
    for (x, y) in plus.all_counts().unwrap().iter().zip(&g) {
        assert!(x >= y);
    }
    for (x, y) in plus.biconnected_counts().unwrap().iter().zip(&b) {
        assert!(x >= y);
    }
}

#[test]
fn specializing_markers_commutes_with_the_tower() {
    let order = 10;
    for class in [GraphClass::K33, GraphClass::K33Plus] {
        let symbolic = MinorFreeTower::<MarkerPoly>::build(class, Markers::symbolic(), order).unwrap();
        let plain = MinorFreeTower::<Rational>::build(class, Markers::unit(), order).unwrap();
        assert_eq!(symbolic.g.specialize(), plain.g);
        assert_eq!(symbolic.b.specialize(), plain.b);
        assert_eq!(symbolic.d().specialize(), *plain.d());
    }
    let symbolic = MaximalPipeline::<MarkerPoly>::build(&MarkerPoly::y(), order).unwrap();
    let plain = MaximalPipeline::<Rational>::build(&one(), order).unwrap();
    assert_eq!(symbolic.a.specialize(), plain.a);
}

#[test]
fn k5_marker_splits_g5() {
    // with q symbolic, the q^0 and q^1 parts of g_5 add up to 2^10; the only
    // graph containing a K5 block is K5 itself
    let tower = MinorFreeTower::<MarkerPoly>::build(GraphClass::K33, Markers::symbolic(), 5).unwrap();
    let c5 = tower.g.coeff(5);
    let at = |p: &MarkerPoly| p.evaluate(&one(), &one()).unwrap() * Rational::from(120);
    assert_eq!(at(&c5), 1024);
    assert_eq!(at(&c5.q_coefficient(1)), 1);
    assert_eq!(at(&c5.q_coefficient(0)), 1023);
}

#[test]
fn planar_specialization_keeps_small_counts() {
    let tower = MinorFreeTower::<Rational>::build(GraphClass::K33, Markers::with_q(Rational::new()), 6).unwrap();
    let g = tower.all_counts().unwrap();
    assert_eq!(g[..5], [1, 1, 2, 8, 64].map(Integer::from));
    // K5 is the only nonplanar graph on five vertices
    assert_eq!(g[5], 1023);
    // planar labelled graphs on six vertices
    assert_eq!(g[6], 32071);
}

#[test]
fn edge_marker_counts_edges() {
    // total edge count over all graphs on n <= 5 vertices is C(n,2) 2^(C(n,2) - 1)
    let tower = MinorFreeTower::<MarkerPoly>::build(GraphClass::K33, Markers::edges_only(&one()), 5).unwrap();
    let dg = tower.g.d_dy();
    let mut fact = Integer::from(1);
    for n in 1..=5usize {
        fact *= n as u32;
        let pairs = n * (n - 1) / 2;
        let total = dg.coeff(n).evaluate(&one(), &one()).unwrap() * Rational::from(fact.clone());
        let want = if pairs == 0 { Integer::new() } else { Integer::from(pairs) << (pairs as u32 - 1) };
        assert_eq!(total, want, "n = {n}");
    }
}
