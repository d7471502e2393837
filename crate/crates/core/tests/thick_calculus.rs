use thickcalc::identities::digon;
use thickcalc::{Partition, ThickDiagram as D};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn chain(layers: Vec<D>) -> D {
    D::chain(layers).unwrap()
}

#[test]
fn thick_identities_are_idempotent() {
    for a in 1..=4 {
        let e = D::strand(1, a).explode().unwrap();
        assert_eq!(e.compose(&e).unwrap(), e, "a={a}");
        assert_eq!(e.degree(), Some(0));
    }
}

#[test]
fn digon_on_two_thin_strands() {
    let e2 = D::strand(1, 2).explode().unwrap();
    let minus = e2.scale(&(-1).into());
    assert_eq!(digon(1, 1, 1, &p("1"), &p("0")).unwrap().explode().unwrap(), e2);
    assert_eq!(digon(1, 1, 1, &p("0"), &p("1")).unwrap().explode().unwrap(), minus);
    assert!(digon(1, 1, 1, &p("0"), &p("0")).unwrap().explode().unwrap().is_zero());
    assert!(digon(1, 1, 1, &p("1"), &p("1")).unwrap().explode().unwrap().is_zero());
}

#[test]
fn dotless_digons_vanish() {
    for a in 1..=3 {
        for b in 1..=(5 - a).min(3) {
            let d = chain(vec![D::split(2, a, b), D::merge(2, a, b)]);
            assert!(d.explode().unwrap().is_zero(), "a={a} b={b}");
        }
    }
}

#[test]
fn decorations_multiply_by_littlewood_richardson() {
    let one = D::dot(1, 2, &p("1"));
    let sq = chain(vec![one.clone(), one]).explode().unwrap();
    let sum = D::dot(1, 2, &p("2")).explode().unwrap().try_add(&D::dot(1, 2, &p("1,1")).explode().unwrap()).unwrap();
    assert_eq!(sq, sum);
}

#[test]
fn dotted_strand_opens_into_a_thick_edge() {
    let body = D::beside(D::dot(1, 1, &p("1")), D::strand(1, 1));
    let d = chain(vec![D::split(1, 1, 1), body, D::merge(1, 1, 1)]);
    assert_eq!(d.explode().unwrap(), D::strand(1, 2).explode().unwrap());
}

#[test]
fn distant_colors_cross_freely() {
    let there = D::cross(1, 2, 3, 1);
    let back = D::cross(3, 1, 1, 2);
    let twice = chain(vec![there, back]).explode().unwrap();
    let id = D::beside(D::strand(1, 2), D::strand(3, 1)).explode().unwrap();
    assert_eq!(twice, id);
}
