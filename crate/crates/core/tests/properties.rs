//! Randomized invariants across modules.

use std::sync::OnceLock;

use hecke_herm::exactfield::{dot, q, qf};
use hecke_herm::langdata::{dominates, f_decompose, tau, HklPoly};
use hecke_herm::{
    dvr_diagonalize, BasisKind, GramFamily, QMatrix, RatFun, RatMatrix, RootSystem, UniPoly, WeylGroup, Q,
};
use proptest::prelude::*;

fn groups() -> &'static [WeylGroup] {
    static G: OnceLock<Vec<WeylGroup>> = OnceLock::new();
    G.get_or_init(|| ["A2", "B2", "G2"].iter().map(|l| WeylGroup::from_label(l).unwrap()).collect())
}

fn rational() -> impl Strategy<Value = Q> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| qf(n, d))
}

fn poly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(rational(), 0..4).prop_map(UniPoly::new)
}

fn ratfun() -> impl Strategy<Value = RatFun> {
    (poly(), poly()).prop_filter_map("nonzero denominator", |(n, d)| RatFun::new(n, d).ok())
}

fn weight(rs: &RootSystem, coeffs: &[Q]) -> Vec<Q> {
    let mut v = vec![q(0); rs.ambient_dim()];
    for (c, w) in coeffs.iter().zip(rs.fundamental_coweights()) {
        for (x, y) in v.iter_mut().zip(w) {
            *x += c * y;
        }
    }
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ratfun_field_laws(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b).unwrap() * &b, a.clone());
        }
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn ratfun_eval_is_multiplicative(a in ratfun(), b in ratfun(), t in rational()) {
        if let (Some(x), Some(y)) = (a.eval(&t), b.eval(&t)) {
            prop_assert_eq!((&a * &b).eval(&t), Some(x * y));
        }
    }

    #[test]
    fn poly_gcd_divides(a in poly(), b in poly(), c in poly()) {
        let (ac, bc) = (&a * &c, &b * &c);
        let g = ac.gcd(&bc);
        if !g.is_zero() {
            prop_assert!(ac.div_rem(&g).1.is_zero());
            prop_assert!(bc.div_rem(&g).1.is_zero());
            if !c.is_zero() {
                prop_assert!(g.div_rem(&c.monic()).1.is_zero());
            }
        }
    }

    #[test]
    fn weyl_action_is_orthogonal(gi in 0usize..3, x in 0usize..12, coeffs in prop::collection::vec(rational(), 2)) {
        let g = &groups()[gi];
        let x = g.elements().nth(x % g.order()).unwrap();
        let v = weight(g.root_system(), &coeffs);
        let w = g.act_vector(x, &v);
        prop_assert_eq!(dot(&v, &v), dot(&w, &w));
        prop_assert_eq!(g.act_vector(g.inv(x), &w), v);
        prop_assert_eq!(g.length(x), g.length(g.inv(x)));
        prop_assert_eq!(g.inversion_set(x).len(), g.length(x));
    }

    #[test]
    fn length_changes_by_one(gi in 0usize..3, x in 0usize..12, i in 0usize..2) {
        let g = &groups()[gi];
        let x = g.elements().nth(x % g.order()).unwrap();
        let xs = g.mul(x, g.simple(i));
        prop_assert_eq!(g.length(x).abs_diff(g.length(xs)), 1);
    }

    #[test]
    fn decomposition_reconstructs(gi in 0usize..3, coeffs in prop::collection::vec(rational(), 2)) {
        let rs = groups()[gi].root_system();
        let v = weight(rs, &coeffs);
        let d = f_decompose(rs, &v).unwrap();
        let mut rebuilt = d.positive_part.clone();
        for (i, c) in d.levi.iter().zip(&d.d) {
            for (x, y) in rebuilt.iter_mut().zip(&rs.simple_coroots()[*i]) {
                *x -= c * y;
            }
        }
        prop_assert_eq!(rebuilt, v.clone());
        // the dominant part is dominant and lies above v
        prop_assert!(rs.simple_pairings(&d.positive_part).iter().all(|p| *p >= q(0)));
        prop_assert!(dominates(rs, &d.positive_part, &v).unwrap());
    }

    #[test]
    fn tau_bounded_by_length(gi in 0usize..3, x in 0usize..12, coeffs in prop::collection::vec(1i64..4, 2)) {
        let g = &groups()[gi];
        let x = g.elements().nth(x % g.order()).unwrap();
        let coeffs: Vec<Q> = coeffs.into_iter().map(q).collect();
        let nu = weight(g.root_system(), &coeffs);
        prop_assert!(tau(g, x, &nu) <= g.length(x));
    }

    #[test]
    fn hkl_poly_text_round_trip(coeffs in prop::collection::vec(-5i64..=5, 0..5)) {
        let p = HklPoly::new(coeffs);
        prop_assert_eq!(HklPoly::parse(&p.to_string()).unwrap(), p.clone());
        prop_assert_eq!(p.at_minus_q().at_minus_q(), p);
    }

    #[test]
    fn jantzen_levels_invariant_under_congruence(
        orders in prop::collection::vec(0usize..4, 1..5),
        signs in prop::collection::vec(any::<bool>(), 4),
        shear in prop::collection::vec(-3i64..=3, 16),
    ) {
        let n = orders.len();
        let t0 = q(1);
        let diag = RatMatrix::from_fn(n, n, |i, j| {
            if i != j {
                return RatFun::zero();
            }
            let f = RatFun::from_poly(UniPoly::root_factor(&t0)).pow(orders[i] as u32);
            if signs[i] { f } else { -f }
        });
        // unit upper triangular, invertible at every t
        let b = QMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Equal => q(1),
            std::cmp::Ordering::Less => q(shear[i * 4 + j]),
            std::cmp::Ordering::Greater => q(0),
        });
        let mixed = diag.congruence(&RatMatrix::from_q(&b));
        let fam = |m: RatMatrix| GramFamily {
            basis: (0..n).map(|i| i.to_string()).collect(),
            kind: BasisKind::T,
            entries: m,
        };
        let plain = dvr_diagonalize(&fam(diag), &t0).unwrap();
        let moved = dvr_diagonalize(&fam(mixed), &t0).unwrap();
        prop_assert_eq!(&plain.level_dims, &moved.level_dims);
        prop_assert_eq!(&plain.level_signatures, &moved.level_signatures);
        let mut want = vec![0usize; orders.iter().max().unwrap() + 1];
        for o in &orders {
            want[*o] += 1;
        }
        prop_assert_eq!(plain.level_dims.clone(), want);
    }
}
