use super::*;
use crate::exactfield::qf;

fn group(label: &str) -> Arc<WeylGroup> {
    Arc::new(WeylGroup::from_label(label).unwrap())
}

fn qv(xs: &[(i64, i64)]) -> Vec<Q> {
    xs.iter().map(|&(a, b)| qf(a, b)).collect()
}

fn t_poly() -> RatFun {
    RatFun::t()
}

#[test]
fn a1_principal_series_r_diagonal() {
    let g = group("A1");
    let m = InducedModule::new(g, &InducedDatum::principal(qv(&[(0, 1), (0, 1)]), qv(&[(1, 2), (-1, 2)]))).unwrap();
    let gram = m.gram_family(&Normalization::IdentityVector).unwrap();
    let r = m.to_r_basis(&gram).unwrap();
    assert!(r.entries.is_diagonal());
    let t = t_poly();
    let one = RatFun::one();
    let want = (&(&t - &one) / &(&t + &one)).unwrap();
    assert_eq!(r.entries[(0, 0)], one);
    assert_eq!(r.entries[(1, 1)], want);
}

fn assert_closed_form(m: &InducedModule) {
    let gram = m.gram_family(&Normalization::IdentityVector).unwrap();
    assert!(gram.is_symmetric());
    let r = m.to_r_basis(&gram).unwrap();
    assert!(r.entries.is_diagonal(), "R-basis Gram not diagonal");
    assert_eq!(r.entries.diagonal(), m.r_diagonal_closed_form().unwrap());
    let raw = m.gram_family(&Normalization::Raw).unwrap();
    let rr = m.to_r_basis(&raw).unwrap();
    assert_eq!(rr.entries[(0, 0)], m.f_cc().unwrap());
    for h in m.generators() {
        assert!(m.invariance_check(&gram, &h), "not invariant under {h:?}");
    }
}

#[test]
fn b2_principal_series_closed_form() {
    let g = group("B2");
    let m = InducedModule::new(g, &InducedDatum::principal(qv(&[(1, 3), (1, 7)]), qv(&[(2, 5), (-1, 11)]))).unwrap();
    assert_closed_form(&m);
}

#[test]
fn g2_principal_series_closed_form() {
    let g = group("G2");
    let rs = g.root_system();
    let nu0 = rs.from_coroot_coords(&qv(&[(1, 5), (2, 9)]));
    let dir = rs.from_coroot_coords(&qv(&[(3, 7), (-1, 4)]));
    let m = InducedModule::new(g.clone(), &InducedDatum::principal(nu0, dir)).unwrap();
    assert_closed_form(&m);
}

#[test]
fn b2_steinberg_levi_closed_form() {
    let g = group("B2");
    for levi in [0usize, 1] {
        let rs = g.root_system();
        let other = rs.fundamental_coweights()[1 - levi].clone();
        let nu0 = other.iter().map(|c| c * qf(1, 3)).collect();
        let m = InducedModule::new(g.clone(), &InducedDatum::steinberg(vec![levi], nu0, other)).unwrap();
        assert_eq!(m.dim(), 4);
        assert_closed_form(&m);
        let triv = InducedDatum {
            levi: vec![levi],
            sigma: SigmaKind::Trivial,
            nu0: m.weight_at(&q(0)).iter().map(|_| q(0)).collect(),
            dir: rs.fundamental_coweights()[1 - levi].clone(),
        };
        let mt = InducedModule::new(g.clone(), &triv).unwrap();
        assert_closed_form(&mt);
    }
}

#[test]
fn omega_action_matches_algebra_expansion() {
    let g = group("B2");
    let rs = g.root_system();
    let other = rs.fundamental_coweights()[0].clone();
    let m = InducedModule::new(g.clone(), &InducedDatum::steinberg(vec![1], vec![q(0); 2], other)).unwrap();
    let alg = HeckeAlgebra::new(PolyRing::new(g.clone()));
    for a in rs.simple_roots() {
        let direct = m.pi_omega(a);
        let via = m.pi_element(&alg, &alg.omega(a)).unwrap();
        assert_eq!(direct, via);
    }
    for i in 0..rs.rank() {
        let via = m.pi_element(&alg, &alg.t(g.simple(i))).unwrap();
        assert_eq!(RatMatrix::from_q(&m.pi_t(g.simple(i))), via);
    }
}

#[test]
fn hermitian_dual_isomorphism() {
    let g = group("B2");
    let rs = g.root_system();
    let m = InducedModule::new(g.clone(), &InducedDatum::principal(qv(&[(1, 3), (1, 7)]), qv(&[(2, 5), (-1, 11)]))).unwrap();
    assert!(m.herm_dual_check().unwrap());
    let other = rs.fundamental_coweights()[1].clone();
    let m = InducedModule::new(g.clone(), &InducedDatum::steinberg(vec![0], vec![q(0); 2], other)).unwrap();
    assert!(m.herm_dual_check().unwrap());
}

#[test]
fn star_form_is_star_invariant() {
    let g = group("B2");
    let m = InducedModule::new(g.clone(), &InducedDatum::principal(vec![q(0); 2], qv(&[(2, 5), (-1, 11)]))).unwrap();
    let gram = m.gram_family(&Normalization::IdentityVector).unwrap();
    let s = m.star_form_from_bullet(&gram).unwrap();
    for h in m.generators() {
        assert!(m.star_invariance_check(&s, &h), "{h:?}");
    }
}

#[test]
fn auto_normalization_falls_back_to_trivial_vector() {
    let g = group("A1");
    let m = InducedModule::new(g, &InducedDatum::principal(qv(&[(0, 1), (0, 1)]), qv(&[(1, 2), (-1, 2)]))).unwrap();
    let gram = m.gram_family(&Normalization::Auto).unwrap();
    assert_eq!(gram.entries[(0, 0)], RatFun::one());
    let v = m.trivial_vector();
    let gv = m.gram_family(&Normalization::Vector(v.clone())).unwrap();
    let n = norm_of(&gv.entries, &v);
    assert_eq!(n, RatFun::one());
}

#[test]
fn rejects_weight_not_orthogonal_to_levi() {
    let g = group("B2");
    let err = InducedModule::new(g, &InducedDatum::steinberg(vec![0], qv(&[(1, 1), (0, 1)]), vec![q(0); 2]));
    assert!(err.is_err());
}

