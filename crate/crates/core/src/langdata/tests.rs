use super::*;
use crate::exactfield::{q, qf};
use num_traits::Zero;

fn group(label: &str) -> Arc<WeylGroup> {
    Arc::new(WeylGroup::from_label(label).unwrap())
}

fn v(xs: &[(i64, i64)]) -> Vec<Q> {
    xs.iter().map(|&(a, b)| qf(a, b)).collect()
}

#[test]
fn dominant_regular_weight_has_empty_levi() {
    let g = group("B2");
    let d = f_decompose(g.root_system(), &[q(3), q(1)]).unwrap();
    assert!(d.levi.is_empty());
    assert_eq!(d.positive_part, vec![q(3), q(1)]);
}

#[test]
fn antidominant_rho_has_full_levi() {
    for label in ["A2", "B2", "G2"] {
        let g = group(label);
        let rs = g.root_system();
        let rho: Vec<Q> = rs.rho_check(&(0..rs.rank()).collect::<Vec<_>>()).iter().map(|x| -x).collect();
        let d = f_decompose(rs, &rho).unwrap();
        assert_eq!(d.levi, (0..rs.rank()).collect::<Vec<_>>(), "{label}");
        assert!(d.positive_part.iter().all(Zero::is_zero));
    }
}

#[test]
fn b2_unit_weight_decomposition() {
    let g = group("B2");
    let rs = g.root_system();
    // (1,0) pairs to 1 with e1−e2 and 0 with e2: F = {e2} and v⁰ = (1,0)
    let all = f_decompose_candidates(rs, &[q(1), q(0)]).unwrap();
    assert_eq!(all.len(), 1);
    assert_eq!(all[0].levi, vec![1]);
    assert_eq!(all[0].positive_part, vec![q(1), q(0)]);
    // (0,−1): the projection onto the e2-wall is zero
    let d = f_decompose(rs, &[q(0), q(-1)]).unwrap();
    assert_eq!(d.levi, vec![0, 1]);
}

#[test]
fn temperedness() {
    let g = group("B2");
    let rs = g.root_system();
    let st: Vec<Q> = rs.levi_k_rho(&[0, 1]).iter().map(|x| -x).collect();
    assert!(is_discrete_series(rs, &[st.clone()]).unwrap());
    assert!(is_tempered(rs, &[vec![q(0), q(0)]]).unwrap());
    assert!(!is_discrete_series(rs, &[vec![q(0), q(0)]]).unwrap());
    let orbit: Vec<Vec<Q>> = g.elements().map(|x| g.act_vector(x, &[q(2), q(1)])).collect();
    assert!(!is_tempered(rs, &orbit).unwrap());
}

#[test]
fn tau_at_rho_counts_simple_inversions() {
    for label in ["A2", "B2", "G2"] {
        let g = group(label);
        let rs = g.root_system();
        let rho = rs.rho_check(&(0..rs.rank()).collect::<Vec<_>>());
        for x in g.elements() {
            assert_eq!(tau(&g, x, &rho), tau0(&g, x));
            assert_eq!(orientation(&g, x, &rho), 1);
        }
        assert_eq!(tau(&g, g.identity(), &rho), 0);
        assert_eq!(tau(&g, g.w0(), &rho), rs.rank());
    }
}

#[test]
fn b2_orientation_reads_short_root() {
    let g = group("B2");
    let s = v(&[(3, 2), (1, 2)]);
    // only e2 pairs into (0,1)
    let e2 = g.root_system().simple_root_index(1);
    for x in g.elements() {
        let expect = if g.act_root(x, e2).positive { 1 } else { -1 };
        assert_eq!(orientation(&g, x, &s), expect);
    }
}

#[test]
fn b2_constituents_off_rho() {
    let g = group("B2");
    let s = v(&[(3, 2), (1, 2)]);
    let cs = regular_constituents(&g, &s).unwrap();
    assert_eq!(cs.len(), 2);
    assert!(cs[0].subset.is_empty());
    assert_eq!(cs[0].leading, g.format(g.identity()));
    assert_eq!(cs.iter().map(|c| c.members.len()).sum::<usize>(), 8);
    assert_eq!(cs[0].members.len(), 4);
}

#[test]
fn rho_constituents_biject_with_subsets() {
    for label in ["A2", "B2", "G2"] {
        let g = group(label);
        let rs = g.root_system();
        let rho = rs.rho_check(&(0..rs.rank()).collect::<Vec<_>>());
        let cs = regular_constituents(&g, &rho).unwrap();
        assert_eq!(cs.len(), 1 << rs.rank());
        for c in &cs {
            // at ρ∨ the Levi of the leading weight is the subset itself
            let simple: Vec<usize> = c
                .subset
                .iter()
                .map(|&b| rs.positive_roots()[b].coords.iter().position(|&x| x == 1).unwrap())
                .collect();
            assert_eq!(c.datum.levi, simple, "{label}");
        }
    }
}

#[test]
fn non_regular_point_is_rejected() {
    let g = group("B2");
    assert!(matches!(
        regular_cc_constituent(&g, g.identity(), &[q(1), q(0)]),
        Err(Error::NotRegular(_))
    ));
    assert!(hkl_regular(&g, &[q(1), q(1)]).is_err());
}

#[test]
fn b2_a_character() {
    let g = group("B2");
    let m = InducedModule::new(g.clone(), &InducedDatum::principal(vec![q(0), q(0)], vec![q(1), q(0)])).unwrap();
    let ws = a_character(&m, &q(1));
    assert_eq!(ws.len(), 4);
    assert!(ws.iter().all(|(_, n)| *n == 2));
    let st = InducedModule::new(g.clone(), &InducedDatum::steinberg(vec![0], vec![q(0), q(0)], vec![q(1), q(1)])).unwrap();
    let ws = a_character(&st, &qf(1, 3));
    assert_eq!(ws.len(), 4);
    assert!(ws.iter().all(|(_, n)| *n == 1));
    let base = st.weight_at(&q(0));
    assert_eq!(base, g.root_system().levi_k_rho(&[0]).iter().map(|x| -x).collect::<Vec<_>>());
}

#[test]
fn hkl_poly_text() {
    for s in ["0", "1", "-q", "1-q", "1+q", "2q^3-q+4"] {
        let p = HklPoly::parse(s).unwrap();
        assert_eq!(HklPoly::parse(&p.to_string()).unwrap(), p);
    }
    assert_eq!(HklPoly::parse("q+1").unwrap().to_string(), "1+q");
    assert_eq!(HklPoly::parse("q+1").unwrap().at_minus_q().to_string(), "1-q");
    assert!(HklPoly::parse("q^").is_err());
}

#[test]
fn parity_violation_is_reported() {
    assert!(matches!(level_monomial(0, 3, 2, 1), Err(Error::Parity(_))));
    assert!(matches!(level_monomial(2, 3, 3, 1), Err(Error::Parity(_))));
    assert_eq!(level_monomial(0, 3, 1, -1).unwrap(), HklPoly::monomial(-1, 1));
}

#[test]
fn b2_levels_from_whole_report() {
    let g = group("B2");
    let m = InducedModule::new(g.clone(), &InducedDatum::principal(vec![q(0), q(0)], vec![q(1), q(0)])).unwrap();
    let gf = m.gram_family(&Normalization::Auto).unwrap();
    let r = dvr_diagonalize(&gf, &q(1)).unwrap();
    let dims: BTreeMap<String, i64> =
        [("0", 0), ("sgn", 3), ("A1", 2), ("triv", 3)].iter().map(|(a, b)| (a.to_string(), *b)).collect();
    let labeling: Vec<(usize, String)> =
        ["0", "sgn", "A1", "triv"].iter().enumerate().map(|(n, l)| (n, l.to_string())).collect();
    let p = hkl_from_jantzen(&r, &labeling, &dims, 0).unwrap();
    assert_eq!(p["sgn"], HklPoly::parse("-q").unwrap());
    assert_eq!(p["A1"], HklPoly::constant(1));
    // the whole of level 3 carries signature (2,1)
    assert_eq!(p["triv"], HklPoly::constant(1));
    assert!(hkl_from_jantzen(&r, &labeling[..3], &dims, 0).is_err());
}

#[test]
fn tau_differs_from_levels_off_regular() {
    // at (1,0) the level multiset is (3,1,1,3) while τ(x,(1,0)) is spread evenly
    let g = group("B2");
    let nu = [q(1), q(0)];
    let mut counts = vec![0usize; 4];
    for x in g.elements() {
        counts[tau(&g, x, &nu)] += 1;
    }
    assert_eq!(counts, vec![2, 2, 2, 2]);
}

#[test]
fn b2_levels_equal_tau_at_regular_points() {
    let g = group("B2");
    for s in [v(&[(2, 1), (1, 1)]), v(&[(3, 2), (1, 2)]), v(&[(7, 4), (3, 4)])] {
        for (x, n, _) in principal_levels(&g, &s).unwrap() {
            assert_eq!(n, tau(&g, x, &s), "{}", g.format(x));
        }
    }
}

#[test]
fn regular_tables() {
    let cases: Vec<(&str, Vec<Q>)> = vec![
        ("A2", vec![q(1), q(0), q(-1)]),
        ("B2", vec![q(2), q(1)]),
        ("B2", v(&[(3, 2), (1, 2)])),
        ("B2", v(&[(2, 3), (1, 3)])),
    ];
    for (label, s) in cases {
        let g = group(label);
        let t = hkl_regular(&g, &s).unwrap();
        for e in &t.entries {
            assert!(e.routes_agree && e.identity_holds, "{label} {:?}: {:?}", s, e);
        }
        assert!(t.levels_match_tau, "{label}");
        assert!(t.verdict);
    }
}

/// `a ω₁∨ + b ω₂∨`.
fn coweight(g: &WeylGroup, a: Q, b: Q) -> Vec<Q> {
    let w = g.root_system().fundamental_coweights();
    w[0].iter().zip(&w[1]).map(|(x, y)| &a * x + &b * y).collect()
}

#[test]
fn g2_regular_samples() {
    let g = group("G2");
    for (a, b) in [(qf(1, 2), qf(1, 2)), (q(1), qf(1, 3)), (qf(1, 3), qf(1, 3)), (qf(1, 4), qf(1, 4))] {
        let s = coweight(&g, a, b);
        let t = hkl_regular(&g, &s).unwrap();
        assert!(t.verdict, "{}", t.to_tsv());
        println!("{} delta {:?} eps {:?}", fmt_q_vec(&s), t.delta_s, t.constituents.iter().map(|c| c.orientation).collect::<Vec<_>>());
    }
}
