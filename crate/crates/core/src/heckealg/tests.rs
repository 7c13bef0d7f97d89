use std::sync::Arc;

use super::*;
use crate::exactfield::{qf, RatFun};
use crate::weyl::WeylGroup;

fn b2_line() -> HeckeAlgebra<LineRing> {
    let g = Arc::new(WeylGroup::from_label("B2").unwrap());
    let ctx = LineContext::new(g, vec![qf(1, 3), qf(1, 7)], vec![qf(2, 5), qf(-1, 11)]).unwrap();
    HeckeAlgebra::new(LineRing::new(Arc::new(ctx)))
}

fn poly(label: &str) -> HeckeAlgebra<PolyRing> {
    HeckeAlgebra::new(PolyRing::new(Arc::new(WeylGroup::from_label(label).unwrap())))
}

#[test]
fn group_products() {
    let h = poly("G2");
    let g = h.group();
    for x in g.elements() {
        for y in g.elements() {
            assert_eq!(h.mul(&h.t(x), &h.t(y)).unwrap(), h.t(g.mul(x, y)));
        }
    }
}

#[test]
fn cross_relation_on_simple_root() {
    let h = poly("B2");
    for i in 0..2 {
        let s = h.group().simple(i);
        let a = h.ring().simple_root(i);
        let lhs = h.mul(&h.scalar(a.clone()), &h.t(s)).unwrap();
        let rhs = h.add(&h.term(s, h.ring().neg(&a)), &h.scalar(h.ring().constant(&q(2))));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn associativity_on_generators() {
    let h = poly("B2");
    let g = h.group();
    let gens = [
        h.t(g.simple(0)),
        h.t(g.simple(1)),
        h.omega(&[q(1), q(0)]),
        h.omega(&[q(0), q(1)]),
    ];
    for a in &gens {
        for b in &gens {
            for c in &gens {
                let l = h.mul(&h.mul(a, b).unwrap(), c).unwrap();
                let r = h.mul(a, &h.mul(b, c).unwrap()).unwrap();
                assert_eq!(l, r);
            }
        }
    }
}

#[test]
fn weyl_action_on_line_scalars() {
    let h = b2_line();
    let ring = h.ring();
    let g = h.group();
    let alpha = g.root_system().simple_roots()[0].clone();
    let a = ring.simple_root(0);
    for w in g.elements() {
        let wa = ring.act(w, &a);
        let wv = g.act_vector(w, &alpha);
        for u in g.elements() {
            let direct = RatFun::from_poly(ring.context().pairing_on(u, &wv));
            assert_eq!(wa.component(u), &direct);
        }
    }
    let w0 = g.w0();
    assert_eq!(ring.act(w0, &ring.act(w0, &a)), a);
}

#[test]
fn intertwiner_squares_and_words() {
    let h = b2_line();
    let g = h.group();
    for i in 0..2 {
        let r = h.r_simple(i).unwrap();
        assert_eq!(h.mul(&r, &r).unwrap(), h.one());
    }
    let words = g.all_reduced_words(g.w0());
    let r1 = h.r_from_word(&words[0]).unwrap();
    let r2 = h.r_from_word(&words[1]).unwrap();
    assert_eq!(r1, r2);
}

#[test]
fn intertwiner_top_coefficient() {
    let h = b2_line();
    let g = h.group();
    let ring = h.ring();
    for x in g.elements() {
        let r = h.r_element(x).unwrap();
        assert!(r.support().iter().all(|&y| g.length(y) <= g.length(x)));
        let top = h
            .product_over_inversions(x, |b, k| {
                Ok(ring.mul(b, &ring.inv(&ring.sub(&ring.constant(k), b))?))
            })
            .unwrap();
        assert_eq!(r.coeff(x).unwrap(), &top);
    }
}

#[test]
fn r_check_is_polynomial_multiple() {
    let h = poly("A2");
    let g = h.group();
    let f = h.ring().simple_root(0);
    for x in g.elements() {
        let r = h.r_check(x).unwrap();
        let lhs = h.left_scalar(&f, &r).unwrap();
        let xf = h.ring().act(g.inv(x), &f);
        assert_eq!(lhs, h.right_scalar(&r, &xf));
    }
}

#[test]
fn involutions_are_involutive() {
    let h = poly("B2");
    let g = h.group();
    let x = h.add(&h.t(g.simple(0)), &h.right_scalar(&h.t(g.simple(1)), &h.ring().simple_root(0)));
    assert_eq!(h.bullet(&h.bullet(&x).unwrap()).unwrap(), x);
    assert_eq!(h.star(&h.star(&x).unwrap()).unwrap(), x);
    assert_eq!(h.delta(&h.delta(&x).unwrap()).unwrap(), x);
    assert_eq!(h.im_involution(&h.im_involution(&x).unwrap()).unwrap(), x);
}

#[test]
fn epsilon_extraction() {
    let h = poly("B2");
    let g = h.group();
    assert!(h.epsilon(&h.t(g.simple(1)), &[0]).is_zero());
    let m = h.right_scalar(&h.t(g.simple(0)), &h.ring().simple_root(1));
    assert_eq!(h.epsilon(&m, &[0]), m);
    let x = h.add(&h.t(g.simple(1)), &h.scalar(h.ring().simple_root(0)));
    assert_eq!(h.epsilon(&x, &[]), h.scalar(h.ring().simple_root(0)));
}
